#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wradius {

using Complex = std::complex<double>;

/// Shapes do not admit the requested operation (non-square input,
/// inner-dimension mismatch, malformed block grid).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Nominally Hermitian input is asymmetric beyond tolerance.
struct NotHermitianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nominally PSD input has an eigenvalue below the clamp window.
struct NotPsdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar-argument violation: non-positive tolerance, exponent outside [0,1],
/// missing t for a t-parameterized bound, or a negative/non-real entry where
/// a nonnegative real matrix is required.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix file does not parse against the schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bound identifier outside the catalogue.
struct UnknownBoundError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. The single carrier type for operators,
/// their absolute values |A|, |A*|, contractions, and the nonnegative
/// auxiliary matrices of the bound catalogue.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix of the given shape. Both dimensions must be positive.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);

    /// Build from nested row lists; all rows must have equal length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Standard matrix product; throws DimensionError on inner mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
ComplexMatrix operator*(double scale, const ComplexMatrix& a);

/// Exact entrywise equality (bitwise on re/im parts).
bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

/// ||A - A*||_F, the distance from Hermitian.
double hermitian_defect(const ComplexMatrix& a);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix& a, const std::vector<Complex>& x);

/// <x, y> with conjugation on the second argument: sum x_i * conj(y_i).
Complex inner_product(const std::vector<Complex>& x, const std::vector<Complex>& y);

double vector_norm(const std::vector<Complex>& x);

void require_square(const ComplexMatrix& a, const char* who);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* who);

/// Compact bracketed rendering used in error reports and verify output.
std::string to_debug_string(const ComplexMatrix& a);

}  // namespace wradius
