#include "wradius/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wradius {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sum of squared moduli strictly above the diagonal.
double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.rows(); ++p) {
        for (std::size_t q = p + 1; q < a.cols(); ++q) {
            s += std::norm(a(p, q));
        }
    }
    return s;
}

// One complex Jacobi rotation G zeroing a(p, q). G is the identity except
//   G(p,p) = c,  G(p,q) = s,  G(q,p) = -conj(s),  G(q,q) = c
// with real c > 0 and complex s carrying the phase of a(p, q). Applies
// A <- G* A G in place and accumulates V <- V G when requested.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    // Smaller root of t^2 + 2 tau t - 1 = 0, evaluated in the stable form.
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const Complex s = (t * c) * phase;
    const Complex sc = std::conj(s);

    const std::size_t n = a.rows();
    // Columns: X <- X G.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex xp = a(k, p);
        const Complex xq = a(k, q);
        a(k, p) = c * xp - sc * xq;
        a(k, q) = s * xp + c * xq;
    }
    // Rows: X <- G* X.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex xp = a(p, k);
        const Complex xq = a(q, k);
        a(p, k) = c * xp - s * xq;
        a(q, k) = sc * xp + c * xq;
    }
    // The rotation makes these exact zeros; the diagonal stays real.
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex xp = (*v)(k, p);
            const Complex xq = (*v)(k, q);
            (*v)(k, p) = c * xp - sc * xq;
            (*v)(k, q) = s * xp + c * xq;
        }
    }
}

// Runs cyclic Jacobi on an exactly Hermitian matrix. Returns the ascending
// eigenvalues; fills vectors (paired columns) when non-null.
std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix* vectors) {
    const std::size_t n = a.rows();
    if (vectors != nullptr) {
        *vectors = ComplexMatrix::identity(n);
    }
    std::vector<double> lam(n, 0.0);
    const double scale = frobenius_norm(a);
    if (scale > 0.0 && n > 1) {
        const double stop = (1e-14 * scale) * (1e-14 * scale);
        const int max_sweeps = 64;
        for (int sweep = 0; sweep < max_sweeps && off_diagonal_mass(a) > stop; ++sweep) {
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    rotate(a, vectors, p, q);
                }
            }
        }
        if (off_diagonal_mass(a) > stop) {
            throw std::runtime_error("hermitian eigensolver failed to converge");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        lam[i] = a(i, i).real();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&lam](std::size_t i, std::size_t j) { return lam[i] < lam[j]; });

    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted[i] = lam[order[i]];
    }
    if (vectors != nullptr) {
        ComplexMatrix permuted(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                permuted(i, j) = (*vectors)(i, order[j]);
            }
        }
        *vectors = permuted;
    }
    return sorted;
}

// Validates the Hermitian precondition and returns the symmetrized matrix.
ComplexMatrix checked_symmetrize(const ComplexMatrix& h) {
    require_square(h, "hermitian_eig");
    const double defect = hermitian_defect(h);
    if (defect > 1e-10 * (1.0 + frobenius_norm(h))) {
        throw NotHermitianError("hermitian_eig: input is not Hermitian within tolerance");
    }
    ComplexMatrix s(h.rows(), h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            s(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
        }
    }
    return s;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
    HermitianEig out;
    out.eigenvalues = jacobi(checked_symmetrize(h), &out.eigenvectors);
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return jacobi(checked_symmetrize(h), nullptr);
}

double hermitian_lambda_max(const ComplexMatrix& h) {
    return hermitian_eigenvalues(h).back();
}

namespace {

// Orthogonal projection defect of column x against the first k columns of U,
// in place; returns the remaining norm.
double project_out(const ComplexMatrix& u, std::size_t k, std::vector<Complex>& x) {
    for (std::size_t j = 0; j < k; ++j) {
        Complex coeff(0.0, 0.0);
        for (std::size_t i = 0; i < u.rows(); ++i) {
            coeff += std::conj(u(i, j)) * x[i];
        }
        for (std::size_t i = 0; i < u.rows(); ++i) {
            x[i] -= coeff * u(i, j);
        }
    }
    return vector_norm(x);
}

}  // namespace

SvdFactors svd(const ComplexMatrix& a) {
    if (a.rows() < a.cols()) {
        SvdFactors t = svd(adjoint(a));
        return SvdFactors{t.V, t.singular_values, t.U};
    }
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();

    // One-sided Jacobi: rotate column pairs of W (accumulating V) until the
    // columns are mutually orthogonal, i.e. the implicit Gram W*W is diagonal.
    // Then sigma_j = ||w_j|| and u_j = w_j / sigma_j. Working on the columns
    // of A directly keeps the reconstruction error at rounding level even for
    // rank-deficient inputs, where forming A*A first would square the
    // condition number and leave sqrt(eps)-sized noise in the small
    // singular values.
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(k);
    if (k > 1 && frobenius_norm(a) > 0.0) {
        const int max_sweeps = 64;
        bool converged = false;
        for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
            converged = true;
            for (std::size_t p = 0; p + 1 < k; ++p) {
                for (std::size_t q = p + 1; q < k; ++q) {
                    double app = 0.0;
                    double aqq = 0.0;
                    Complex apq(0.0, 0.0);
                    for (std::size_t i = 0; i < m; ++i) {
                        app += std::norm(w(i, p));
                        aqq += std::norm(w(i, q));
                        apq += std::conj(w(i, p)) * w(i, q);
                    }
                    const double r = std::abs(apq);
                    if (r == 0.0 || r <= 1e-15 * std::sqrt(app * aqq)) {
                        continue;
                    }
                    converged = false;
                    // Same rotation as the Hermitian solver, applied to the
                    // implicit 2x2 Gram [[app, apq], [conj(apq), aqq]].
                    const Complex phase = apq / r;
                    const double tau = (aqq - app) / (2.0 * r);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const Complex s = (t * c) * phase;
                    const Complex sc = std::conj(s);
                    for (std::size_t i = 0; i < m; ++i) {
                        const Complex xp = w(i, p);
                        const Complex xq = w(i, q);
                        w(i, p) = c * xp - sc * xq;
                        w(i, q) = s * xp + c * xq;
                    }
                    for (std::size_t i = 0; i < k; ++i) {
                        const Complex xp = v(i, p);
                        const Complex xq = v(i, q);
                        v(i, p) = c * xp - sc * xq;
                        v(i, q) = s * xp + c * xq;
                    }
                }
            }
        }
        if (!converged) {
            throw std::runtime_error("singular value decomposition failed to converge");
        }
    }

    std::vector<double> sigma(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        double s2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            s2 += std::norm(w(i, j));
        }
        sigma[j] = std::sqrt(s2);
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&sigma](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdFactors out;
    out.singular_values.resize(k);
    out.V = ComplexMatrix(k, k);
    out.U = ComplexMatrix(m, k);
    std::vector<bool> filled(k, false);
    const double sigma_max = sigma[order[0]];
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = order[j];
        out.singular_values[j] = sigma[src];
        for (std::size_t i = 0; i < k; ++i) {
            out.V(i, j) = v(i, src);
        }
        if (sigma[src] > sigma_max * 1e-13) {
            for (std::size_t i = 0; i < m; ++i) {
                out.U(i, j) = w(i, src) / sigma[src];
            }
            filled[j] = true;
        }
        // Columns at or below the cutoff are kernel directions, completed
        // below from the canonical basis.
    }
    // Complete the unfilled columns to an orthonormal set from the canonical
    // basis, always picking the candidate with the largest residual.
    for (std::size_t j = 0; j < k; ++j) {
        if (filled[j]) {
            continue;
        }
        // Columns left of j are all filled by construction order; treat the
        // whole current U as the set to avoid order assumptions.
        double best_rem = -1.0;
        std::vector<Complex> best;
        for (std::size_t cand = 0; cand < m; ++cand) {
            std::vector<Complex> x(m, Complex(0.0, 0.0));
            x[cand] = Complex(1.0, 0.0);
            const double rem = project_out(out.U, k, x);
            if (rem > best_rem) {
                best_rem = rem;
                best = x;
                if (rem > 0.9) {
                    break;
                }
            }
        }
        const double rem = vector_norm(best);
        for (std::size_t i = 0; i < m; ++i) {
            out.U(i, j) = best[i] / rem;
        }
        filled[j] = true;
    }
    return out;
}

Enclosure operator_norm(const ComplexMatrix& a) {
    if (max_abs_entry(a) == 0.0) {
        return Enclosure{0.0, 0.0, EnclosureKind::exact};
    }
    // Eigenvalue route on the smaller Gram matrix.
    const bool wide = a.rows() < a.cols();
    const ComplexMatrix gram = wide ? matmul(a, adjoint(a)) : matmul(adjoint(a), a);
    const double lam = std::max(hermitian_lambda_max(gram), 0.0);
    const double sigma = std::sqrt(lam);
    const double dim = static_cast<double>(gram.rows());
    const double half = (16.0 * kEps * dim + 1e-15) * (1.0 + sigma);
    return Enclosure::around(sigma, half, EnclosureKind::exact);
}

}  // namespace wradius
