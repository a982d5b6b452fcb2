#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torspect/gf.hpp"
#include "torspect/kernels.hpp"

namespace torspect {

/* Dense row-major matrix over GF(p).  Zero-dimensional matrices are legal and
 * show up routinely as graded pieces of ideals. */
class Matrix {
public:
    Matrix(uint32_t rows, uint32_t cols, Fp fp);
    static Matrix identity(uint32_t n, Fp fp);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    const Fp& field() const { return fp_; }

    uint32_t operator()(uint32_t r, uint32_t c) const { return data_[size_t(r) * cols_ + c]; }
    uint32_t& operator()(uint32_t r, uint32_t c) { return data_[size_t(r) * cols_ + c]; }
    const uint32_t* row(uint32_t r) const { return data_.data() + size_t(r) * cols_; }
    uint32_t* row(uint32_t r) { return data_.data() + size_t(r) * cols_; }

    void append_row(const std::vector<uint32_t>& v);
    void append_row(const uint32_t* v);
    Matrix transposed() const;

    bool operator==(const Matrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && fp_ == other.fp_ &&
               data_ == other.data_;
    }

private:
    uint32_t rows_, cols_;
    Fp fp_;
    std::vector<uint32_t> data_;
};

/* Incremental reduced row echelon form.  Rows are kept normalized with
 * pivot 1, pivot columns cleared everywhere else, rows ordered by pivot
 * column; the resulting matrix is the canonical basis of the row space, so
 * subspace equality is plain data comparison. */
class RrefBuilder {
public:
    RrefBuilder(uint32_t cols, Fp fp);

    // Returns true iff the row enlarged the span.
    bool add_row(const uint32_t* v);
    void add_rows(const Matrix& m);

    // Remainder of v after elimination; zero iff v lies in the span.
    std::vector<uint32_t> reduce(const std::vector<uint32_t>& v) const;
    bool contains(const std::vector<uint32_t>& v) const;

    uint32_t rank() const { return static_cast<uint32_t>(rows_.size()); }
    const std::vector<uint32_t>& pivots() const { return pivots_; }
    Matrix matrix() const;

private:
    Fp fp_;
    uint32_t cols_;
    const kernels::Ops& ops_;
    uint64_t axpy_budget_;
    std::vector<std::vector<uint32_t>> rows_;  // sorted by pivot column
    std::vector<uint32_t> pivots_;
};

struct Echelon {
    Matrix mat;  // canonical RREF, zero rows dropped
    std::vector<uint32_t> pivots;
    uint32_t rank() const { return mat.rows(); }
};

Echelon echelon(const Matrix& m);

// (rank, canonical reduced form); row space preserved, zero rows dropped.
std::pair<uint32_t, Matrix> row_reduce(const Matrix& m);

// Rows form a basis of the right null space {v : Mv = 0}.
Matrix kernel_basis(const Matrix& m);

// Subspaces are row spaces; results are canonical RREF bases.
Matrix subspace_sum(const Matrix& u, const Matrix& v);
Matrix subspace_intersect(const Matrix& u, const Matrix& v);
bool subspace_contains(const Matrix& u, const std::vector<uint32_t>& v);
bool subspace_contains_all(const Matrix& u, const Matrix& v);  // row(v) subset of row(u)

// One particular solution of Mx = b, or nullopt when inconsistent.
std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b);

}  // namespace torspect
