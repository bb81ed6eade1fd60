#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "wradius/bounds.hpp"
#include "wradius/ensemble.hpp"
#include "wradius/io.hpp"
#include "wradius/report.hpp"
#include "wradius/verify.hpp"

using namespace wradius;

namespace {

MatrixFile dense_file(const ComplexMatrix& m) {
    return MatrixFile{1, m};
}

// 2x2 grid of 2x2 blocks: zero diagonal, the same nilpotent block in both
// off-diagonal positions. Certified radius 1/2.
MatrixFile cross_block_file() {
    const ComplexMatrix zero(2, 2);
    const ComplexMatrix nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const BlockOperatorMatrix b =
        BlockOperatorMatrix::from_blocks({{zero, nil}, {nil, zero}});
    return MatrixFile{1, b};
}

const char* kDenseText =
    R"({"schema_version":1,"kind":"dense","rows":2,"cols":2,"entries":[[[0,0],[1,0]],[[0,0],[0,0]]]})";

}  // namespace

TEST_CASE("parse accepts the dense schema and reports the payload") {
    const MatrixFile f = parse_matrix_file(kDenseText);
    CHECK_FALSE(f.is_block());
    CHECK(f.dense()(0, 1) == Complex{1.0, 0.0});
    CHECK(f.flattened() == f.dense());
}

TEST_CASE("serialization round-trips byte for byte") {
    MatrixSampler s(81);
    for (int rep = 0; rep < 30; ++rep) {
        const BlockOperatorMatrix b = s.block_matrix(EnsembleKind::gaussian, 2 + rep % 2, 1 + rep % 3);
        const std::string once = serialize(b);
        CHECK(serialize(parse_matrix_file(once)) == once);

        const std::string dense_once = serialize(b.flatten());
        CHECK(serialize(parse_matrix_file(dense_once)) == dense_once);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix_file("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("{}"), ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":2,"kind":"dense","rows":1,"cols":1,"entries":[[[0,0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":1,"kind":"sparse","rows":1,"cols":1,"entries":[[[0,0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":1,"kind":"dense","rows":0,"cols":1,"entries":[]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":1,"kind":"dense","rows":2,"cols":1,"entries":[[[0,0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":1,"kind":"dense","rows":1,"cols":1,"entries":[[[0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix_file(
            R"({"schema_version":1,"kind":"dense","rows":1,"cols":1,"entries":[[[1e999,0]]]})"),
        ParseError);
    CHECK_THROWS_AS(load_matrix_file("/nonexistent/path/matrix.json"), ParseError);
}

TEST_CASE("ensembles are deterministic in the seed and differ across seeds") {
    EnsembleSpec spec;
    spec.count = 5;
    const auto a = make_ensemble(spec);
    const auto b = make_ensemble(spec);
    REQUIRE(a.size() == 5);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(serialize(a[k]) == serialize(b[k]));
    }

    EnsembleSpec other = spec;
    other.seed = 43;
    CHECK(serialize(make_ensemble(other)[0]) != serialize(a[0]));
}

TEST_CASE("ensemble families have their advertised structure") {
    MatrixSampler s(82);

    const ComplexMatrix nil = s.dense(EnsembleKind::nilpotent, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            CHECK(nil(i, j) == Complex{0.0, 0.0});
        }
    }

    const ComplexMatrix pos = s.dense(EnsembleKind::positive, 3);
    CHECK(hermitian_defect(pos) <= 1e-12 * (1.0 + frobenius_norm(pos)));

    const ComplexMatrix shift = s.dense(EnsembleKind::shift, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i + 1) {
                CHECK(shift(i, j) == Complex{0.0, 0.0});
            } else {
                CHECK(shift(i, j).imag() == 0.0);
                CHECK(shift(i, j).real() >= 0.0);
            }
        }
    }

    const ComplexMatrix nrm = s.dense(EnsembleKind::normal, 3);
    CHECK(frobenius_norm(matmul(adjoint(nrm), nrm) - matmul(nrm, adjoint(nrm))) <=
          1e-10 * (1.0 + frobenius_norm(nrm)));

    const std::string names[] = {"gaussian", "nilpotent", "normal", "positive", "shift"};
    for (const std::string& name : names) {
        const auto kind = parse_ensemble(name);
        REQUIRE(kind.has_value());
        CHECK(ensemble_name(*kind) == name);
    }
    CHECK_FALSE(parse_ensemble("cauchy").has_value());
}

TEST_CASE("property catalogue holds on a small batch") {
    EnsembleSpec spec;
    spec.count = 3;
    const VerificationReport report = run_verification(spec);
    CHECK(report.ok());
    CHECK(report.outcomes.size() >= 10);
    for (const PropertyOutcome& outcome : report.outcomes) {
        CHECK(outcome.violations == 0);
        CHECK(outcome.checked > 0);
        CHECK(outcome.detail.empty());
    }
    const std::string summary = verification_summary(report);
    CHECK(summary.find("all properties hold") != std::string::npos);
}

TEST_CASE("report rows are sorted and gaps stay above minus twice the tolerance") {
    const MatrixFile file = cross_block_file();
    const Report report = make_report(file, "cross", {}, std::nullopt, false);
    REQUIRE(!report.rows.empty());
    CHECK(report.true_w.contains(0.5));
    for (std::size_t k = 1; k < report.rows.size(); ++k) {
        CHECK(report.rows[k - 1].value <= report.rows[k].value);
    }
    for (const ReportRow& row : report.rows) {
        CHECK(row.gap >= -2.0 * report.tolerance);
        CHECK(std::abs(row.value - (row.gap + report.true_w.hi)) <=
              1e-12 * (1.0 + std::abs(row.value)));
    }
}

TEST_CASE("report bound selection, promotion, and errors") {
    const MatrixFile file = cross_block_file();

    const Report named = make_report(file, "cross", {"prop4", "aok"}, std::nullopt, false);
    REQUIRE(named.rows.size() == 2);

    const Report promoted = make_report(file, "cross", {"rem2_i"}, std::nullopt, true);
    REQUIRE(promoted.rows.size() == 1);
    CHECK(promoted.rows[0].label == "rem12_i");

    CHECK_THROWS_AS(make_report(file, "cross", {"nope"}, std::nullopt, false),
                    UnknownBoundError);
    CHECK_THROWS_AS(make_report(file, "cross", {"prop4"}, 1.25, false), DomainError);

    const MatrixFile dense = dense_file(ComplexMatrix::identity(2));
    CHECK_THROWS_AS(make_report(dense, "id", {"prop4"}, std::nullopt, false), DimensionError);
    const Report dense_all = make_report(dense, "id", {}, std::nullopt, false);
    CHECK(dense_all.rows.size() == report_bound_names(false).size());
}

TEST_CASE("report renders parseable json and a markdown table") {
    const MatrixFile file = dense_file(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    const Report report = make_report(file, "nilpotent", {"kittaneh_sum"}, std::nullopt, false);

    const nlohmann::json j = nlohmann::json::parse(to_json(report));
    CHECK(j.at("input") == "nilpotent");
    CHECK(j.at("rows").size() == 1);
    CHECK(j.at("rows")[0].at("label") == "kittaneh_sum");
    CHECK(j.at("true_w").at("lo").get<double>() <= 0.5);
    CHECK(j.at("true_w").at("hi").get<double>() >= 0.5);

    const std::string md = to_markdown(report);
    CHECK(md.find("| bound |") != std::string::npos);
    CHECK(md.find("kittaneh_sum") != std::string::npos);
}
