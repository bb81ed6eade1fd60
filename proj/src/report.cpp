#include "wradius/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "wradius/eig.hpp"
#include "wradius/minimize.hpp"
#include "wradius/radius.hpp"

namespace wradius {

using nlohmann::json;

namespace {

const std::vector<std::string>& single_op_names() {
    static const std::vector<std::string> names = {"prop1", "prop1_min", "p112", "kittaneh_sum",
                                                   "kittaneh_sq"};
    return names;
}

bool is_single_op(const std::string& name) {
    const auto& names = single_op_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool name_takes_t(const std::string& name) {
    return name == "prop1" || name == "p112";
}

BoundResult eval_single_op(const ComplexMatrix& m, const std::string& name, double t,
                           bool min_t) {
    if (name == "prop1") {
        return min_t ? single_op_prop1_min(m) : single_op_prop1(m, t);
    }
    if (name == "prop1_min") {
        return single_op_prop1_min(m);
    }
    if (name == "p112") {
        if (!min_t) {
            return single_op_p112(m, t);
        }
        const ScalarMin best = grid_then_golden_min(
            [&m](double s) { return single_op_p112(m, s).value.hi; }, 0.0, 1.0, 201);
        BoundResult r = single_op_p112(m, best.x);
        r.params["grid_points"] = 201.0;
        return r;
    }
    if (name == "kittaneh_sum") {
        return single_op_kittaneh_sum(m);
    }
    return single_op_kittaneh_sq(m);
}

// Value-level minimization for t-parameterized catalogue bounds that have no
// per-entry minimizing sibling.
BoundResult minimize_block_value(const BlockOperatorMatrix& b, BoundTag tag) {
    const ScalarMin best = grid_then_golden_min(
        [&](double t) { return evaluate_bound(b, BoundId{tag, t}).value.hi; }, 0.0, 1.0, 201);
    BoundResult r = evaluate_bound(b, BoundId{tag, best.x});
    r.params["grid_points"] = 201.0;
    return r;
}

BoundResult eval_block_tag(const BlockOperatorMatrix& b, BoundTag tag, double t, bool min_t) {
    if (min_t && tag == BoundTag::rem2_i) {
        return minimize_over_t(b, BoundTag::rem12_i);
    }
    if (min_t && tag == BoundTag::rem2_ii) {
        return minimize_over_t(b, BoundTag::rem12_ii);
    }
    if (min_t && tag_requires_t(tag)) {
        return minimize_block_value(b, tag);
    }
    BoundId id{tag, std::nullopt};
    if (tag_requires_t(tag)) {
        id.t = t;
    }
    return evaluate_bound(b, id);
}

std::string format_params(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) {
            out += " ";
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s=%.6g", k.c_str(), v);
        out += buf;
    }
    return out.empty() ? "-" : out;
}

}  // namespace

std::vector<std::string> report_bound_names(bool block_input) {
    std::vector<std::string> names;
    if (block_input) {
        for (BoundTag tag : all_bound_tags()) {
            names.push_back(tag_name(tag));
        }
    }
    for (const std::string& name : single_op_names()) {
        names.push_back(name);
    }
    return names;
}

Report make_report(const MatrixFile& file, const std::string& input_name,
                   std::vector<std::string> bounds, std::optional<double> t, bool min_t) {
    const double tv = t.value_or(0.5);
    if (!(tv >= 0.0 && tv <= 1.0)) {
        throw DomainError("parameter t must lie in [0, 1]");
    }
    const ComplexMatrix flat = file.flattened();

    Report report;
    report.input = input_name;
    report.tolerance = 1e-8 * (1.0 + operator_norm(flat).hi);
    report.true_w = numerical_radius(flat, report.tolerance);

    if (bounds.empty() || (bounds.size() == 1 && bounds[0] == "all")) {
        bounds = report_bound_names(file.is_block());
        if (min_t) {
            // Their t-parameterized siblings already promote to these under
            // min_t; dropping them avoids duplicate rows.
            std::erase(bounds, std::string("prop1_min"));
            std::erase(bounds, std::string("rem12_i"));
            std::erase(bounds, std::string("rem12_ii"));
        }
    }

    for (const std::string& name : bounds) {
        BoundResult r;
        if (is_single_op(name)) {
            r = eval_single_op(flat, name, tv, min_t && name_takes_t(name));
        } else if (std::optional<BoundTag> tag = parse_bound_tag(name)) {
            if (!file.is_block()) {
                throw DimensionError("bound '" + name + "' requires a block matrix input");
            }
            r = eval_block_tag(file.block(), *tag, tv, min_t);
        } else {
            throw UnknownBoundError("unknown bound '" + name + "'");
        }
        ReportRow row;
        row.label = r.label;
        row.params = r.params;
        row.value = r.value.hi;
        row.gap = r.value.hi - report.true_w.hi;
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return a.value != b.value ? a.value < b.value : a.label < b.label;
    });
    return report;
}

std::string to_json(const Report& report) {
    json rows = json::array();
    for (const ReportRow& row : report.rows) {
        json params = json::object();
        for (const auto& [k, v] : row.params) {
            params[k] = v;
        }
        rows.push_back(json{{"label", row.label},
                            {"params", params},
                            {"value", row.value},
                            {"gap", row.gap}});
    }
    const json j = {{"input", report.input},
                    {"tolerance", report.tolerance},
                    {"true_w",
                     {{"lo", report.true_w.lo},
                      {"hi", report.true_w.hi},
                      {"kind", kind_name(report.true_w.kind)}}},
                    {"rows", rows}};
    return j.dump(2);
}

std::string to_markdown(const Report& report) {
    char head[256];
    std::snprintf(head, sizeof(head), "input: %s\ntrue radius in [%.12g, %.12g] (%s)\n\n",
                  report.input.c_str(), report.true_w.lo, report.true_w.hi,
                  kind_name(report.true_w.kind));
    std::string out = head;
    out += "| bound | params | value | gap |\n";
    out += "|---|---|---|---|\n";
    for (const ReportRow& row : report.rows) {
        char line[256];
        std::snprintf(line, sizeof(line), "| %s | %s | %.12g | %.3g |\n", row.label.c_str(),
                      format_params(row.params).c_str(), row.value, row.gap);
        out += line;
    }
    return out;
}

}  // namespace wradius
