#include "frozen/exact.hpp"

#include "frozen/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace frozen {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t n, const BigInt& coeff) {
    std::vector<BigInt> c(n + 1);
    c[n] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + it->convert_to<double>();
    }
    return acc;
}

IntPolynomial IntPolynomial::scale_argument(const BigInt& s) const {
    std::vector<BigInt> out(coeffs_.size());
    BigInt power = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * power;
        power *= s;
    }
    return IntPolynomial(std::move(out));
}

std::vector<double> IntPolynomial::to_double() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
    return out;
}

std::string IntPolynomial::to_json() const {
    std::ostringstream os;
    os << '[';
    if (coeffs_.empty()) os << '0';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            out[i + k] += lhs.coeffs_[i] * rhs.coeffs_[k];
        }
    }
    return IntPolynomial(std::move(out));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const {
    if (x.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const BigInt& v = (*this)(r, c);
            if (v != 0) y[r] += v * x[c];
        }
    }
    return y;
}

std::string IntMatrix::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& s) {
    for (auto& v : data_) v *= s;
    return *this;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw InvalidInput("matrix product dimension mismatch");
    IntMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
        for (std::size_t i = 0; i < lhs.cols_; ++i) {
            const BigInt& v = lhs(r, i);
            if (v == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += v * rhs(i, c);
        }
    }
    return out;
}

namespace {

// Fraction-free elimination shared by rank and determinant. Returns the
// rank; `sign` tracks row swaps and `last_pivot` ends as the determinant
// (up to sign) when the matrix is square and nonsingular.
int bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols, int& sign, BigInt& last_pivot) {
    const std::size_t rows = a.size();
    sign = 1;
    last_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / last_pivot;
            }
            a[i][c] = 0;
        }
        last_pivot = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<BigInt>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    return a;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
    if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    auto a = to_rows(m);
    int sign = 1;
    BigInt pivot;
    // Without column skipping a zero column means singular; bareiss skips
    // such columns, so a rank deficit shows up as r < n.
    const int r = bareiss(a, m.cols(), sign, pivot);
    if (static_cast<std::size_t>(r) < m.rows()) return 0;
    return sign * pivot;
}

int rank(const IntMatrix& m) {
    auto a = to_rows(m);
    int sign = 1;
    BigInt pivot;
    return bareiss(a, m.cols(), sign, pivot);
}

}  // namespace frozen
