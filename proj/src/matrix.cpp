#include "carcode/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace carcode {

Matrix::Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, ctx_->zero()) {}

Matrix::Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !ctx_->same(*o.ctx_)) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

Matrix Matrix::identity(FieldCtxPtr ctx, std::size_t n) {
    Matrix r(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = ctx->one();
    return r;
}

Matrix Matrix::from_rows(FieldCtxPtr ctx, const std::vector<std::vector<FieldElement>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix r(ctx, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = rows[i][j];
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix r(ctx_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

std::vector<FieldElement> Matrix::row(std::size_t r) const {
    return std::vector<FieldElement>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply dimension mismatch");
    std::vector<FieldElement> out(rows_, ctx_->zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        FieldElement s = ctx_->zero();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            s = s + at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

std::size_t Matrix::rref(std::vector<std::size_t>* pivots) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t sel = rank;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(rank, j));
        FieldElement inv = at(rank, col).inv();
        for (std::size_t j = col; j < cols_; ++j) at(rank, j) = at(rank, j) * inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || at(r, col).is_zero()) continue;
            FieldElement f = at(r, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(r, j) = at(r, j) - f * at(rank, j);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref();
}

std::vector<std::vector<FieldElement>> Matrix::kernel() const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t rank = m.rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<FieldElement> v(cols_, ctx_->zero());
        v[fc] = ctx_->one();
        for (std::size_t r = 0; r < rank; ++r)
            v[piv[r]] = -m.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::row_space_canonical() const {
    Matrix m = *this;
    std::size_t rank = m.rref();
    Matrix r(ctx_, rank, cols_);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

std::optional<std::vector<FieldElement>> Matrix::solve(const std::vector<FieldElement>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve dimension mismatch");
    Matrix aug(ctx_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    std::size_t rank = aug.rref(&piv);
    for (std::size_t r = 0; r < rank; ++r)
        if (piv[r] == cols_) return std::nullopt;  // inconsistent
    std::vector<FieldElement> x(cols_, ctx_->zero());
    for (std::size_t r = 0; r < rank; ++r) x[piv[r]] = aug.at(r, cols_);
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace carcode
