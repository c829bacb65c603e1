#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace frozen {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    /// x^n
    [[nodiscard]] static IntPolynomial monomial(std::size_t n, const BigInt& coeff = 1);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    [[nodiscard]] BigInt operator[](std::size_t i) const;

    [[nodiscard]] BigInt evaluate(const BigInt& x) const;
    [[nodiscard]] std::complex<double> evaluate(std::complex<double> z) const;

    /// p(s*x) for integer s.
    [[nodiscard]] IntPolynomial scale_argument(const BigInt& s) const;

    /// Coefficients as doubles (for numeric rooting).
    [[nodiscard]] std::vector<double> to_double() const;

    /// JSON array of integers, e.g. "[-1,0,2]".
    [[nodiscard]] std::string to_json() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& s);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial p, const BigInt& s) { return p *= s; }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) { return p *= s; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    [[nodiscard]] static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Matrix-vector product in exact arithmetic.
    [[nodiscard]] std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

    [[nodiscard]] std::string to_json() const;

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator-=(const IntMatrix& rhs);
    IntMatrix& operator*=(const BigInt& s);

    friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
    friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
    friend IntMatrix operator*(IntMatrix m, const BigInt& s) { return m *= s; }
    friend IntMatrix operator*(const BigInt& s, IntMatrix m) { return m *= s; }
    friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
[[nodiscard]] BigInt determinant(const IntMatrix& m);

/// Exact rank by fraction-free elimination.
[[nodiscard]] int rank(const IntMatrix& m);

}  // namespace frozen
