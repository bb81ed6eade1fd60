#pragma once

#include <algorithm>

namespace wradius {

/// How an enclosure was produced: a closed-form or directly certified value,
/// the certified angle sweep, or the nonnegative-matrix eigenvalue identity.
enum class EnclosureKind { exact, swept, fastpath };

const char* kind_name(EnclosureKind kind);

/// Certified interval [lo, hi] containing the reported scalar.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;
    EnclosureKind kind = EnclosureKind::exact;

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }

    /// Symmetric interval around a value, clamped to [0, inf) since every
    /// enclosed quantity here (norm, radius) is nonnegative.
    static Enclosure around(double value, double half_width, EnclosureKind kind);
};

/// True when the intervals share at least one point.
bool overlap(const Enclosure& a, const Enclosure& b);

}  // namespace wradius
