#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carcode/ff.hpp"

namespace carcode {

/// Dense matrix over a FieldCtx, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols);
    Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;

    static Matrix identity(FieldCtxPtr ctx, std::size_t n);
    static Matrix from_rows(FieldCtxPtr ctx, const std::vector<std::vector<FieldElement>>& rows);
    Matrix vstack(const Matrix& below) const;

    std::vector<FieldElement> row(std::size_t r) const;
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;  // M v

    /// In-place reduced row echelon form with pivot order = column order.
    /// Returns rank; pivot columns appended to *pivots when provided.
    std::size_t rref(std::vector<std::size_t>* pivots = nullptr);
    std::size_t rank() const;

    /// Canonical basis of {v : Mv = 0}; one vector per free column, in
    /// increasing free-column order, so output is deterministic.
    std::vector<std::vector<FieldElement>> kernel() const;

    /// RREF of the row space with zero rows dropped (canonical per row space).
    Matrix row_space_canonical() const;

    /// one solution of M x = b, if any
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

    std::string str() const;  // one row per line, entries space-separated

private:
    FieldCtxPtr ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

}  // namespace carcode
