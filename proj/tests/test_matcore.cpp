#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "wradius/eig.hpp"
#include "wradius/enclosure.hpp"
#include "wradius/ensemble.hpp"
#include "wradius/matrix.hpp"
#include "wradius/minimize.hpp"

using namespace wradius;

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix hermitian_from(MatrixSampler& s, std::size_t n) {
    const ComplexMatrix g = s.dense(EnsembleKind::gaussian, n);
    return 0.5 * (g + adjoint(g));
}

double eig_residual(const ComplexMatrix& h, const HermitianEig& e) {
    double worst = 0.0;
    for (std::size_t k = 0; k < e.eigenvalues.size(); ++k) {
        std::vector<Complex> v(h.rows());
        for (std::size_t i = 0; i < h.rows(); ++i) {
            v[i] = e.eigenvectors(i, k);
        }
        const std::vector<Complex> hv = wradius::apply(h, v);
        double norm2 = 0.0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            norm2 += std::norm(hv[i] - e.eigenvalues[k] * v[i]);
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    return worst;
}

double orthonormality_defect(const ComplexMatrix& u) {
    const ComplexMatrix gram = matmul(adjoint(u), u);
    return frobenius_norm(gram - ComplexMatrix::identity(gram.rows()));
}

}  // namespace

TEST_CASE("matrix construction and entry access") {
    ComplexMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == Complex{0.0, 0.0});
    m(0, 1) = Complex{2.0, -1.0};
    CHECK(m(0, 1) == Complex{2.0, -1.0});

    CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(3, 0), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("adjoint conjugates and transposes; twice applied is the identity") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0 + 2.0 * kI, 3.0}, {4.0 * kI, -5.0}});
    const ComplexMatrix as = adjoint(a);
    CHECK(as(0, 0) == std::conj(a(0, 0)));
    CHECK(as(0, 1) == std::conj(a(1, 0)));
    CHECK(as(1, 0) == std::conj(a(0, 1)));
    CHECK(adjoint(as) == a);

    MatrixSampler s(11);
    const ComplexMatrix g = s.dense(EnsembleKind::gaussian, 5);
    CHECK(adjoint(adjoint(g)) == g);
}

TEST_CASE("matmul against hand values, identity, and shape errors") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const ComplexMatrix ab = matmul(a, b);
    CHECK(ab(0, 0) == Complex{2.0, 0.0});
    CHECK(ab(0, 1) == Complex{1.0, 0.0});
    CHECK(ab(1, 0) == Complex{4.0, 0.0});
    CHECK(ab(1, 1) == Complex{3.0, 0.0});

    MatrixSampler s(3);
    const ComplexMatrix g = s.dense(EnsembleKind::gaussian, 4);
    CHECK(matmul(g, ComplexMatrix::identity(4)) == g);
    CHECK(matmul(ComplexMatrix::identity(4), g) == g);

    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(2, 2) + ComplexMatrix(2, 3), DimensionError);
}

TEST_CASE("norms, finiteness, and hermitian defect") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{3.0, 0.0}, {0.0, 4.0 * kI}});
    CHECK(frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(max_abs_entry(a) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(all_finite(a));

    ComplexMatrix bad(1, 1);
    bad(0, 0) = Complex{std::numeric_limits<double>::infinity(), 0.0};
    CHECK_FALSE(all_finite(bad));

    const ComplexMatrix h = ComplexMatrix::from_rows({{1.0, 2.0 + kI}, {2.0 - kI, 5.0}});
    CHECK(hermitian_defect(h) <= 1e-15);
    CHECK(hermitian_defect(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("vector helpers use conjugation on the second argument") {
    const std::vector<Complex> x = {Complex{1.0, 1.0}, Complex{0.0, 2.0}};
    const std::vector<Complex> y = {Complex{1.0, 0.0}, Complex{0.0, 1.0}};
    const Complex ip = inner_product(x, y);
    CHECK(ip.real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(ip.imag() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(vector_norm(x) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));

    const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const std::vector<Complex> ax = wradius::apply(a, x);
    CHECK(ax[0] == x[1]);
    CHECK(ax[1] == x[0]);
}

TEST_CASE("hermitian eigenvalues of diagonal and tridiagonal examples") {
    const HermitianEig d = hermitian_eig(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -3.0}}));
    REQUIRE(d.eigenvalues.size() == 2);
    CHECK(d.eigenvalues[0] == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    // Characteristic polynomial x^3 - 13 x: spectrum {-sqrt(13), 0, sqrt(13)}.
    const ComplexMatrix t =
        ComplexMatrix::from_rows({{0.0, 2.0, 0.0}, {2.0, 0.0, 3.0}, {0.0, 3.0, 0.0}});
    const std::vector<double> lam = hermitian_eigenvalues(t);
    REQUIRE(lam.size() == 3);
    CHECK(lam[0] == doctest::Approx(-std::sqrt(13.0)).epsilon(1e-12));
    CHECK(std::abs(lam[1]) <= 1e-13);
    CHECK(lam[2] == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));
    CHECK(hermitian_lambda_max(t) == doctest::Approx(std::sqrt(13.0)).epsilon(1e-12));

    const std::vector<double> ones = hermitian_eigenvalues(ComplexMatrix::identity(3));
    for (double v : ones) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("hermitian eigensolver rejects asymmetric and non-square input") {
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                    NotHermitianError);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("hermitian eigensolver residual and orthonormality invariants") {
    MatrixSampler s(101);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rep % 8);
        const ComplexMatrix h = hermitian_from(s, n);
        const HermitianEig e = hermitian_eig(h);
        REQUIRE(e.eigenvalues.size() == n);
        const double scale = 1.0 + frobenius_norm(h);
        CHECK(eig_residual(h, e) <= 1e-12 * scale);
        CHECK(orthonormality_defect(e.eigenvectors) <= 1e-12);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
        }
    }
}

TEST_CASE("svd singular values of triangular shift examples") {
    const ComplexMatrix a =
        ComplexMatrix::from_rows({{0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}, {0.0, 0.0, 0.0}});
    const SvdFactors f = svd(a);
    REQUIRE(f.singular_values.size() == 3);
    CHECK(f.singular_values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.singular_values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(f.singular_values[2]) <= 1e-12);

    const SvdFactors g = svd(ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}}));
    CHECK(g.singular_values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(g.singular_values[1]) <= 1e-12);

    const SvdFactors id = svd(ComplexMatrix::identity(2));
    CHECK(id.singular_values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.singular_values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd reconstruction and orthonormal factors on random shapes") {
    MatrixSampler s(202);
    const std::size_t shapes[][2] = {{1, 1}, {2, 2}, {3, 2}, {2, 4}, {5, 5}, {6, 3}};
    for (int rep = 0; rep < 60; ++rep) {
        const auto& shape = shapes[rep % 6];
        ComplexMatrix a(shape[0], shape[1]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) = s.complex_gaussian();
            }
        }
        if (rep % 5 == 0 && a.cols() >= 2) {
            // Force rank deficiency: duplicate the first column.
            for (std::size_t i = 0; i < a.rows(); ++i) {
                a(i, 1) = a(i, 0);
            }
        }
        const SvdFactors f = svd(a);
        ComplexMatrix sigma(f.singular_values.size(), f.singular_values.size());
        for (std::size_t k = 0; k < f.singular_values.size(); ++k) {
            sigma(k, k) = f.singular_values[k];
            CHECK(f.singular_values[k] >= 0.0);
            if (k > 0) {
                CHECK(f.singular_values[k - 1] >= f.singular_values[k]);
            }
        }
        const double scale = 1.0 + frobenius_norm(a);
        CHECK(frobenius_norm(a - matmul(f.U, matmul(sigma, adjoint(f.V)))) <= 1e-10 * scale);
        CHECK(orthonormality_defect(f.U) <= 1e-10);
        CHECK(orthonormality_defect(f.V) <= 1e-10);
    }
}

TEST_CASE("operator norm enclosures") {
    const Enclosure n1 = operator_norm(
        ComplexMatrix::from_rows({{0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}, {0.0, 0.0, 0.0}}));
    CHECK(n1.contains(3.0));
    CHECK(n1.width() <= 1e-10);

    const Enclosure zero = operator_norm(ComplexMatrix(4, 4));
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi == 0.0);

    MatrixSampler s(7);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = s.dense(EnsembleKind::gaussian, 2 + rep % 5);
        const Enclosure na = operator_norm(a);
        const Enclosure nas = operator_norm(adjoint(a));
        CHECK(overlap(na, nas));
    }
}

TEST_CASE("enclosure arithmetic") {
    const Enclosure e = Enclosure::around(1.0, 0.25, EnclosureKind::exact);
    CHECK(e.lo == doctest::Approx(0.75));
    CHECK(e.hi == doctest::Approx(1.25));
    CHECK(e.mid() == doctest::Approx(1.0));
    CHECK(e.contains(0.8));
    CHECK_FALSE(e.contains(1.3));

    // Negative lower ends clamp to zero: enclosed quantities are nonnegative.
    const Enclosure c = Enclosure::around(0.1, 0.5, EnclosureKind::exact);
    CHECK(c.lo == 0.0);

    const Enclosure a{0.0, 1.0, EnclosureKind::exact};
    const Enclosure b{1.0, 2.0, EnclosureKind::exact};
    const Enclosure d{1.5, 2.0, EnclosureKind::exact};
    CHECK(overlap(a, b));
    CHECK_FALSE(overlap(a, d));
}

TEST_CASE("scalar minimization finds interior and endpoint minima") {
    const auto parabola = [](double x) { return (x - 0.3) * (x - 0.3); };
    const ScalarMin g = golden_section_min(parabola, 0.0, 1.0, 1e-10);
    CHECK(std::abs(g.x - 0.3) <= 1e-8);
    CHECK(g.value <= 1e-15);

    const ScalarMin grid = grid_then_golden_min(parabola, 0.0, 1.0, 201);
    CHECK(std::abs(grid.x - 0.3) <= 1e-8);

    // Minimum at the left endpoint is found exactly: the grid includes it.
    const ScalarMin edge = grid_then_golden_min([](double x) { return x; }, 0.0, 1.0, 201);
    CHECK(edge.x == 0.0);
    CHECK(edge.value == 0.0);
}
