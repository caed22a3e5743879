#include "hopfcalc/matrix.hpp"

#include <sstream>

namespace hopfcalc {

RationalMatrix RationalMatrix::identity(std::int64_t n) {
    RationalMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::int64_t r = static_cast<std::int64_t>(rows.size());
    std::int64_t c = r == 0 ? 0 : static_cast<std::int64_t>(rows[0].size());
    RationalMatrix m(r, c);
    for (std::int64_t i = 0; i < r; ++i) {
        if (static_cast<std::int64_t>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (std::int64_t j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::int64_t i = 0; i < a.rows_; ++i)
        for (std::int64_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::int64_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = s * a.e_[k];
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::int64_t RationalMatrix::rref() {
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t i = rank; i < rows_; ++i)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (std::int64_t j = 0; j < cols_; ++j)
                std::swap(at(pivot, j), at(rank, j));
        Rational inv = 1 / at(rank, col);
        for (std::int64_t j = col; j < cols_; ++j)
            at(rank, j) *= inv;
        for (std::int64_t i = 0; i < rows_; ++i) {
            if (i == rank || at(i, col) == 0)
                continue;
            Rational f = at(i, col);
            for (std::int64_t j = col; j < cols_; ++j)
                at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::int64_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.rref();
}

RationalMatrix RationalMatrix::kernel_basis() const {
    RationalMatrix r = *this;
    std::int64_t rk = r.rref();
    // pivot column of each reduced row
    std::vector<std::int64_t> pivot_col(static_cast<std::size_t>(rk), -1);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (std::int64_t i = 0; i < rk; ++i)
        for (std::int64_t j = 0; j < cols_; ++j)
            if (r.at(i, j) != 0) {
                pivot_col[static_cast<std::size_t>(i)] = j;
                is_pivot[static_cast<std::size_t>(j)] = true;
                break;
            }
    RationalMatrix basis(cols_, cols_ - rk);
    std::int64_t k = 0;
    for (std::int64_t j = 0; j < cols_; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)])
            continue;
        basis.at(j, k) = 1;
        for (std::int64_t i = 0; i < rk; ++i)
            basis.at(pivot_col[static_cast<std::size_t>(i)], k) = -r.at(i, j);
        ++k;
    }
    return basis;
}

std::optional<RationalMatrix> RationalMatrix::solve(const RationalMatrix& b) const {
    if (b.rows() != rows_)
        throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(rows_, cols_ + b.cols());
    for (std::int64_t i = 0; i < rows_; ++i) {
        for (std::int64_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        for (std::int64_t j = 0; j < b.cols(); ++j)
            aug.at(i, cols_ + j) = b.at(i, j);
    }
    aug.rref();
    // inconsistent iff a reduced row is zero on the A-part but not on the b-part
    for (std::int64_t i = 0; i < rows_; ++i) {
        bool zero_a = true;
        for (std::int64_t j = 0; j < cols_ && zero_a; ++j)
            zero_a = aug.at(i, j) == 0;
        if (!zero_a)
            continue;
        for (std::int64_t j = 0; j < b.cols(); ++j)
            if (aug.at(i, cols_ + j) != 0)
                return std::nullopt;
    }
    // particular solution with free variables set to zero
    RationalMatrix x(cols_, b.cols());
    for (std::int64_t i = 0; i < rows_; ++i) {
        std::int64_t p = -1;
        for (std::int64_t j = 0; j < cols_; ++j)
            if (aug.at(i, j) != 0) {
                p = j;
                break;
            }
        if (p < 0)
            continue;
        for (std::int64_t j = 0; j < b.cols(); ++j)
            x.at(p, j) = aug.at(i, cols_ + j);
    }
    return x;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (!is_square())
        throw std::invalid_argument("inverse of non-square matrix");
    RationalMatrix aug(rows_, 2 * cols_);
    for (std::int64_t i = 0; i < rows_; ++i) {
        for (std::int64_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    aug.rref();
    // invertible iff the left block reduced to the identity (pivots may land
    // in the right block otherwise)
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j)
            if (aug.at(i, j) != Rational(i == j ? 1 : 0))
                return std::nullopt;
    RationalMatrix inv(rows_, cols_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j)
            inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

RationalMatrix RationalMatrix::dual_action() const {
    auto inv = inverse();
    if (!inv)
        throw std::invalid_argument("dual action of singular matrix");
    return inv->transpose();
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::int64_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::int64_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "" : " ") << at(i, j).get_str();
        os << (i + 1 == rows_ ? "]" : ";\n");
    }
    return os.str();
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0)
                continue;
            for (std::int64_t k = 0; k < b.rows(); ++k)
                for (std::int64_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

RationalMatrix vstack(const std::vector<RationalMatrix>& blocks) {
    if (blocks.empty())
        return {};
    std::int64_t cols = blocks[0].cols();
    std::int64_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    RationalMatrix r(rows, cols);
    std::int64_t off = 0;
    for (const auto& b : blocks) {
        for (std::int64_t i = 0; i < b.rows(); ++i)
            for (std::int64_t j = 0; j < cols; ++j)
                r.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

bool matrix_less(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows())
        return a.rows() < b.rows();
    if (a.cols() != b.cols())
        return a.cols() < b.cols();
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            int c = cmp(a.at(i, j), b.at(i, j));
            if (c != 0)
                return c < 0;
        }
    return false;
}

} // namespace hopfcalc
