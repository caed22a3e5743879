// Dense matrices over exact rationals: row reduction, kernels, inverses,
// Kronecker products. Everything is exact; no pivot-size heuristics needed.
#ifndef HOPFCALC_MATRIX_HPP
#define HOPFCALC_MATRIX_HPP

#include "hopfcalc/numbers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hopfcalc {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    static RationalMatrix identity(std::int64_t n);
    // Row-major initializer; all rows must have equal length.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::int64_t i, std::int64_t j) {
        return e_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const Rational& at(std::int64_t i, std::int64_t j) const {
        return e_[static_cast<std::size_t>(i * cols_ + j)];
    }

    RationalMatrix transpose() const;

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    // In-place reduced row echelon form; returns the rank.
    std::int64_t rref();

    std::int64_t rank() const;
    std::int64_t nullity() const { return cols_ - rank(); }

    // Columns form a basis of the right null space (cols = nullity).
    RationalMatrix kernel_basis() const;

    // Any exact solution X of (*this) X = b, or nullopt if inconsistent.
    std::optional<RationalMatrix> solve(const RationalMatrix& b) const;

    std::optional<RationalMatrix> inverse() const;
    bool is_invertible() const { return is_square() && rank() == rows_; }

    // Induced action on the dual space: (A^{-1})^T.
    RationalMatrix dual_action() const;

    std::string to_string() const;

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<Rational> e_;
};

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const std::vector<RationalMatrix>& blocks);

// Strict total order for set/map keys: dimensions first, then entries.
bool matrix_less(const RationalMatrix& a, const RationalMatrix& b);

struct MatrixLess {
    bool operator()(const RationalMatrix& a, const RationalMatrix& b) const {
        return matrix_less(a, b);
    }
};

} // namespace hopfcalc

#endif
