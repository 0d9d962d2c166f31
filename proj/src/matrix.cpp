#include "griesskit/matrix.hpp"

#include <stdexcept>

namespace griesskit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in sum");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in difference");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RationalMatrix: dimension mismatch in apply");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

// Bareiss elimination on the leading n-by-n block of a working copy.
// Every intermediate entry is a minor of the input, so nothing blows up.
Rational bareiss_det(RationalMatrix m, std::size_t n) {
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    Rational det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("RationalMatrix: determinant of non-square matrix");
    return bareiss_det(*this, rows_);
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<Rational> RationalMatrix::leading_principal_minors() const {
    if (rows_ != cols_) throw std::invalid_argument("RationalMatrix: minors of non-square matrix");
    // Swap-free Bareiss pass: after step k the pivot equals the (k+1)-th
    // leading minor. A zero pivot breaks the recurrence, so fall back to
    // independent determinants from that point on.
    std::vector<Rational> minors(rows_);
    RationalMatrix m = *this;
    Rational prev(1);
    for (std::size_t k = 0; k < rows_; ++k) {
        minors[k] = m.at(k, k);
        if (m.at(k, k).is_zero()) {
            for (std::size_t t = k; t < rows_; ++t) minors[t] = bareiss_det(*this, t + 1);
            return minors;
        }
        for (std::size_t i = k + 1; i < rows_; ++i) {
            for (std::size_t j = k + 1; j < rows_; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Rational(0);
        }
        prev = m.at(k, k);
    }
    return minors;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& A,
                                                 const std::vector<Rational>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
    const std::size_t rows = A.rows(), cols = A.cols();
    RationalMatrix m(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j <= cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j <= cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j <= cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m.at(i, cols).is_zero()) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = m.at(k, cols);
    return x;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::vector<Rational> scaled(const std::vector<Rational>& a, const Rational& c) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

}  // namespace griesskit
