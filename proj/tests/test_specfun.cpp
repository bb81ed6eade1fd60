#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wradius/eig.hpp"
#include "wradius/ensemble.hpp"
#include "wradius/matrix.hpp"
#include "wradius/specfun.hpp"

using namespace wradius;

namespace {

double entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return frobenius_norm(a - b);
}

ComplexMatrix diag2(double a, double b) {
    return ComplexMatrix::from_rows({{a, 0.0}, {0.0, b}});
}

const ComplexMatrix kShift23 =
    ComplexMatrix::from_rows({{0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}, {0.0, 0.0, 0.0}});

}  // namespace

TEST_CASE("psd powers of a diagonal matrix") {
    const ComplexMatrix p = diag2(4.0, 9.0);
    CHECK(entry_distance(psd_power(p, 0.5), diag2(2.0, 3.0)) <= 1e-12);
    CHECK(entry_distance(psd_power(p, 1.0), p) <= 1e-12);

    // Zero exponent gives the exact identity, including on singular input.
    const ComplexMatrix sing = diag2(4.0, 0.0);
    CHECK(psd_power(sing, 0.0) == ComplexMatrix::identity(2));
}

TEST_CASE("psd power rejects indefinite input and bad exponents") {
    CHECK_THROWS_AS(psd_power(diag2(1.0, -1.0), 0.5), NotPsdError);
    CHECK_THROWS_AS(psd_power(diag2(1.0, 2.0), -0.1), DomainError);
    CHECK_THROWS_AS(psd_power(diag2(1.0, 2.0), 1.1), DomainError);
    CHECK_THROWS_AS(psd_power(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 0.5),
                    NotHermitianError);
}

TEST_CASE("power splitting P^s P^(1-s) recovers P") {
    MatrixSampler sampler(31);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix p = sampler.dense(EnsembleKind::positive, 1 + rep % 5);
        const double s = (rep % 5) * 0.25;
        const ComplexMatrix split = matmul(psd_power(p, s), psd_power(p, 1.0 - s));
        CHECK(entry_distance(split, p) <= 1e-8 * (1.0 + frobenius_norm(p)));
    }
}

TEST_CASE("square root and squared root agree with the original psd matrix") {
    MatrixSampler sampler(32);
    for (int rep = 0; rep < 30; ++rep) {
        const ComplexMatrix p = sampler.dense(EnsembleKind::positive, 2 + rep % 4);
        const ComplexMatrix r = psd_power(p, 0.5);
        CHECK(entry_distance(matmul(r, r), p) <= 1e-9 * (1.0 + frobenius_norm(p)));
        CHECK(hermitian_defect(r) <= 1e-10 * (1.0 + frobenius_norm(r)));
    }
}

TEST_CASE("absolute value factors of the weighted shift") {
    const AbsFactors f = abs_factors(kShift23);
    CHECK(entry_distance(f.abs_a, ComplexMatrix::from_rows({{0.0, 0.0, 0.0},
                                                            {0.0, 2.0, 0.0},
                                                            {0.0, 0.0, 3.0}})) <= 1e-10);
    CHECK(entry_distance(f.abs_a_star, ComplexMatrix::from_rows({{2.0, 0.0, 0.0},
                                                                 {0.0, 3.0, 0.0},
                                                                 {0.0, 0.0, 0.0}})) <= 1e-10);

    const AbsFactors n = abs_factors(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    CHECK(entry_distance(n.abs_a, diag2(0.0, 1.0)) <= 1e-12);
    CHECK(entry_distance(n.abs_a_star, diag2(1.0, 0.0)) <= 1e-12);
}

TEST_CASE("polar isometry reproduces the matrix and vanishes on the kernel") {
    const ComplexMatrix u = polar_isometry(kShift23);
    const ComplexMatrix expected = ComplexMatrix::from_rows(
        {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
    CHECK(entry_distance(u, expected) <= 1e-10);

    MatrixSampler sampler(33);
    for (int rep = 0; rep < 40; ++rep) {
        ComplexMatrix a = sampler.dense(EnsembleKind::gaussian, 1 + rep % 5);
        if (rep % 4 == 0) {
            a = sampler.dense(EnsembleKind::nilpotent, 2 + rep % 4);
        }
        const ComplexMatrix k = polar_isometry(a);
        const AbsFactors f = abs_factors(a);
        CHECK(frobenius_norm(matmul(k, f.abs_a) - a) <= 1e-8 * (1.0 + frobenius_norm(a)));
        // Partial isometry: every singular value is 0 or 1.
        for (double s : svd(k).singular_values) {
            CHECK((s <= 1e-8 || std::abs(s - 1.0) <= 1e-8));
        }
    }
}

TEST_CASE("power pair endpoints are exactly constant one") {
    const FunctionPair p0 = FunctionPair::power(0.0);
    CHECK(p0.f(0.0) == 1.0);
    CHECK(p0.f(7.5) == 1.0);
    CHECK(p0.g(7.5) == 7.5);
    const FunctionPair p1 = FunctionPair::power(1.0);
    CHECK(p1.g(0.0) == 1.0);
    CHECK(p1.f(2.0) == 2.0);
}

TEST_CASE("contraction factorization reassembles the operator for every t") {
    MatrixSampler sampler(34);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rep % 5;
        const ComplexMatrix a = rep % 6 == 0 ? sampler.dense(EnsembleKind::nilpotent, 2 + n % 3)
                                             : sampler.dense(EnsembleKind::gaussian, n);
        const double t = (rep % 5) * 0.25;
        const ContractionFactorization cf = contraction_factorization(a, FunctionPair::power(t));
        const ComplexMatrix rebuilt =
            matmul(PsdEig(cf.abs_a_star).apply(cf.pair.g),
                   matmul(cf.k, PsdEig(cf.abs_a).apply(cf.pair.f)));
        CHECK(frobenius_norm(rebuilt - a) <= 1e-8 * (1.0 + frobenius_norm(a)));
        CHECK(operator_norm(cf.k).hi <= 1.0 + 1e-10);

        // |K| of a partial isometry is an orthogonal projection.
        const ComplexMatrix abs_k = psd_power(matmul(adjoint(cf.k), cf.k), 0.5);
        CHECK(frobenius_norm(matmul(abs_k, abs_k) - abs_k) <= 1e-8);
    }
}

TEST_CASE("factorization rejects pairs whose product is not the identity map") {
    const FunctionPair broken{[](double x) { return x * x; }, [](double) { return 1.0; },
                              "square-times-one"};
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, 3.0}});
    CHECK_THROWS_AS(contraction_factorization(a, broken), DomainError);
}

TEST_CASE("sesquilinear inequality holds on fixed examples") {
    const std::vector<Complex> e1 = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const std::vector<Complex> e2 = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    const ComplexMatrix n = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    CHECK(lemma_inequality_check(n, FunctionPair::power(0.5), e1, e2));
    CHECK(lemma_inequality_check(n, FunctionPair::power(0.5), e2, e1));
    CHECK(lemma_inequality_check(ComplexMatrix::identity(2), FunctionPair::power(0.0), e1, e1));
}

TEST_CASE("sesquilinear inequality holds across random tuples") {
    MatrixSampler sampler(35);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rep % 5;
        const ComplexMatrix a = sampler.dense(EnsembleKind::gaussian, n);
        const double t = rep % 9 == 0 ? 0.0 : (rep % 9 == 1 ? 1.0 : sampler.uniform01());
        const auto x = sampler.unit_vector(n);
        const auto y = sampler.unit_vector(n);
        CHECK(lemma_inequality_check(a, FunctionPair::power(t), x, y));
    }
}
