#pragma once

#include "griesskit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace griesskit {

/** Dense matrix over Rational. All computations are exact; determinants use
 *  fraction-free (Bareiss) elimination so intermediate entries stay minors of
 *  the input instead of piling up denominators. */
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    RationalMatrix transposed() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_zero() const;
    bool is_symmetric() const;

    Rational determinant() const;
    std::size_t rank() const;

    /// Determinants of the k-by-k leading blocks, k = 1..n.
    std::vector<Rational> leading_principal_minors() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact solution of A x = b. Returns the particular solution with free
/// variables set to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& A,
                                                 const std::vector<Rational>& b);

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> scaled(const std::vector<Rational>& a, const Rational& c);

}  // namespace griesskit
