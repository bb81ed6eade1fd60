#include "wradius/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wradius {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    if (r == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    const std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw DimensionError("rows have unequal length");
        }
        std::size_t j = 0;
        for (const auto& v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(j, i) = std::conj(a(i, j));
        }
    }
    return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions disagree");
    }
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j) + b(i, j);
        }
    }
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j) - b(i, j);
        }
    }
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = scale * a(i, j);
        }
    }
    return r;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& a) {
    return Complex(scale, 0.0) * a;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return a.entries() == b.entries();
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& v : a.entries()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& v : a.entries()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool all_finite(const ComplexMatrix& a) {
    for (const Complex& v : a.entries()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

double hermitian_defect(const ComplexMatrix& a) {
    if (!a.is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += std::norm(a(i, j) - std::conj(a(j, i)));
        }
    }
    return std::sqrt(s);
}

std::vector<Complex> apply(const ComplexMatrix& a, const std::vector<Complex>& x) {
    if (x.size() != a.cols()) {
        throw DimensionError("apply: vector length disagrees with matrix columns");
    }
    std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

Complex inner_product(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    if (x.size() != y.size()) {
        throw DimensionError("inner_product: length mismatch");
    }
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * std::conj(y[i]);
    }
    return s;
}

double vector_norm(const std::vector<Complex>& x) {
    double s = 0.0;
    for (const Complex& v : x) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

void require_square(const ComplexMatrix& a, const char* who) {
    if (!a.is_square()) {
        throw DimensionError(std::string(who) + ": square matrix required");
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(who) + ": shape mismatch");
    }
}

std::string to_debug_string(const ComplexMatrix& a) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex v = a(i, j);
            os << v.real();
            if (v.imag() != 0.0) {
                os << (v.imag() < 0.0 ? "-" : "+") << std::abs(v.imag()) << "i";
            }
            if (j + 1 < a.cols()) {
                os << ", ";
            }
        }
        os << "]" << (i + 1 < a.rows() ? ";" : "");
    }
    os << "]";
    return os.str();
}

}  // namespace wradius
