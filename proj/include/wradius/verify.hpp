#pragma once

#include <string>
#include <vector>

#include "wradius/ensemble.hpp"

namespace wradius {

/// Result of one property run over a seeded batch: how many assertions were
/// evaluated, how many failed, and a description of the first failure
/// (index, offending values, serialized matrix).
struct PropertyOutcome {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string detail;
};

struct VerificationReport {
    EnsembleSpec spec;
    std::vector<PropertyOutcome> outcomes;

    bool ok() const;
    std::size_t total_violations() const;
};

/// Runs the whole property catalogue on matrices drawn from the given
/// EnsembleSpec. Every property seeds its own sampler from spec.seed, so
/// outcomes depend only on the EnsembleSpec, not on property order.
VerificationReport run_verification(const EnsembleSpec& spec);

/// One line per property plus a footer, suitable for terminal output.
std::string verification_summary(const VerificationReport& report);

}  // namespace wradius
