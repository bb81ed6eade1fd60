#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wradius/enclosure.hpp"
#include "wradius/io.hpp"

namespace wradius {

struct ReportRow {
    std::string label;
    std::map<std::string, double> params;
    double value = 0.0;
    /// value - hi(true radius); soundness keeps this above -2 * tolerance.
    double gap = 0.0;
};

/// Bound table for one input matrix, rows ascending by value.
struct Report {
    std::string input;
    Enclosure true_w;
    double tolerance = 0.0;
    std::vector<ReportRow> rows;
};

/// Names accepted by make_report: the block catalogue for block inputs plus
/// the single-operator bounds (those run on the flattened matrix when the
/// input is a block file).
std::vector<std::string> report_bound_names(bool block_input);

/// Evaluates the requested bounds against the certified radius. empty list
/// or the single name "all" selects every applicable bound. t applies to the
/// t-parameterized bounds (default 0.5); min_t minimizes them over the grid
/// instead. Throws UnknownBoundError for names outside the catalogue and
/// DimensionError for block-only bounds on a dense input.
Report make_report(const MatrixFile& file, const std::string& input_name,
                   std::vector<std::string> bounds, std::optional<double> t, bool min_t);

std::string to_json(const Report& report);
std::string to_markdown(const Report& report);

}  // namespace wradius
