#include "torspect/linalg.hpp"

#include <algorithm>

#include "torspect/errors.hpp"

namespace torspect {

Matrix::Matrix(uint32_t rows, uint32_t cols, Fp fp)
    : rows_(rows), cols_(cols), fp_(fp), data_(size_t(rows) * cols, 0)
{
}

Matrix Matrix::identity(uint32_t n, Fp fp)
{
    Matrix m(n, n, fp);
    for (uint32_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void Matrix::append_row(const std::vector<uint32_t>& v)
{
    if (v.size() != cols_)
        throw DimensionError("append_row: length mismatch");
    append_row(v.data());
}

void Matrix::append_row(const uint32_t* v)
{
    data_.insert(data_.end(), v, v + cols_);
    ++rows_;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_, fp_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RrefBuilder::RrefBuilder(uint32_t cols, Fp fp)
    : fp_(fp), cols_(cols), ops_(kernels::select_ops(fp.modulus()))
{
    const uint64_t p = fp.modulus();
    const uint64_t per_axpy = (p - 1) * (p - 1);
    axpy_budget_ = per_axpy ? (uint64_t(1) << 62) / per_axpy : UINT64_MAX;
    if (axpy_budget_ == 0)
        axpy_budget_ = 1;
}

bool RrefBuilder::add_row(const uint32_t* v)
{
    const uint32_t p = fp_.modulus();
    std::vector<uint64_t> acc(v, v + cols_);
    uint64_t used = 0;
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t c = static_cast<uint32_t>(acc[pivots_[k]] % p);
        if (c == 0)
            continue;
        if (++used > axpy_budget_) {
            for (auto& x : acc)
                x %= p;
            used = 1;
        }
        ops_.axpy_acc(acc.data(), rows_[k].data(), p - c, cols_);
    }
    std::vector<uint32_t> row(cols_);
    ops_.reduce_mod(row.data(), acc.data(), cols_, p);

    uint32_t piv = cols_;
    for (uint32_t j = 0; j < cols_; ++j) {
        if (row[j] != 0) {
            piv = j;
            break;
        }
    }
    if (piv == cols_)
        return false;
    if (row[piv] != 1)
        ops_.scale_mod(row.data(), fp_.inv(row[piv]), cols_, p);
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t c = rows_[k][piv];
        if (c != 0)
            ops_.axpy_mod(rows_[k].data(), row.data(), p - c, cols_, p);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

void RrefBuilder::add_rows(const Matrix& m)
{
    if (m.cols() != cols_)
        throw DimensionError("add_rows: column mismatch");
    for (uint32_t r = 0; r < m.rows(); ++r)
        add_row(m.row(r));
}

std::vector<uint32_t> RrefBuilder::reduce(const std::vector<uint32_t>& v) const
{
    if (v.size() != cols_)
        throw DimensionError("reduce: length mismatch");
    const uint32_t p = fp_.modulus();
    std::vector<uint32_t> r = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t c = r[pivots_[k]];
        if (c != 0)
            ops_.axpy_mod(r.data(), rows_[k].data(), p - c, cols_, p);
    }
    return r;
}

bool RrefBuilder::contains(const std::vector<uint32_t>& v) const
{
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

Matrix RrefBuilder::matrix() const
{
    Matrix m(0, cols_, fp_);
    for (const auto& row : rows_)
        m.append_row(row);
    return m;
}

Echelon echelon(const Matrix& m)
{
    RrefBuilder b(m.cols(), m.field());
    b.add_rows(m);
    return Echelon{b.matrix(), b.pivots()};
}

std::pair<uint32_t, Matrix> row_reduce(const Matrix& m)
{
    Echelon e = echelon(m);
    return {e.rank(), e.mat};
}

Matrix kernel_basis(const Matrix& m)
{
    Echelon e = echelon(m);
    const Fp& fp = m.field();
    const uint32_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (uint32_t c : e.pivots)
        is_pivot[c] = true;

    Matrix basis(0, n, fp);
    std::vector<uint32_t> v(n);
    for (uint32_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::fill(v.begin(), v.end(), 0);
        v[f] = 1;
        for (uint32_t k = 0; k < e.rank(); ++k)
            v[e.pivots[k]] = fp.neg(e.mat(k, f));
        basis.append_row(v);
    }
    return basis;
}

Matrix subspace_sum(const Matrix& u, const Matrix& v)
{
    if (u.cols() != v.cols())
        throw DimensionError("subspace_sum: column mismatch");
    RrefBuilder b(u.cols(), u.field());
    b.add_rows(u);
    b.add_rows(v);
    return b.matrix();
}

Matrix subspace_intersect(const Matrix& u, const Matrix& v)
{
    if (u.cols() != v.cols())
        throw DimensionError("subspace_intersect: column mismatch");
    const Fp& fp = u.field();
    const uint32_t n = u.cols();
    // Columns: coefficients over rows of u, then rows of v; a kernel vector
    // (alpha, beta) encodes one element alpha*u = beta*v of the intersection.
    Matrix stacked(n, u.rows() + v.rows(), fp);
    for (uint32_t r = 0; r < u.rows(); ++r)
        for (uint32_t c = 0; c < n; ++c)
            stacked(c, r) = u(r, c);
    for (uint32_t r = 0; r < v.rows(); ++r)
        for (uint32_t c = 0; c < n; ++c)
            stacked(c, u.rows() + r) = fp.neg(v(r, c));
    Matrix ker = kernel_basis(stacked);

    RrefBuilder b(n, fp);
    std::vector<uint32_t> w(n);
    for (uint32_t k = 0; k < ker.rows(); ++k) {
        std::fill(w.begin(), w.end(), 0);
        for (uint32_t r = 0; r < u.rows(); ++r) {
            uint32_t a = ker(k, r);
            if (a == 0)
                continue;
            for (uint32_t c = 0; c < n; ++c)
                w[c] = fp.add(w[c], fp.mul(a, u(r, c)));
        }
        b.add_row(w.data());
    }
    return b.matrix();
}

bool subspace_contains(const Matrix& u, const std::vector<uint32_t>& v)
{
    if (v.size() != u.cols())
        throw DimensionError("subspace_contains: length mismatch");
    RrefBuilder b(u.cols(), u.field());
    b.add_rows(u);
    return b.contains(v);
}

bool subspace_contains_all(const Matrix& u, const Matrix& v)
{
    if (u.cols() != v.cols())
        throw DimensionError("subspace_contains_all: column mismatch");
    RrefBuilder b(u.cols(), u.field());
    b.add_rows(u);
    for (uint32_t r = 0; r < v.rows(); ++r) {
        std::vector<uint32_t> row(v.row(r), v.row(r) + v.cols());
        if (!b.contains(row))
            return false;
    }
    return true;
}

std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b)
{
    if (b.size() != m.rows())
        throw DimensionError("solve: rhs length mismatch");
    const uint32_t n = m.cols();
    Matrix aug(m.rows(), n + 1, m.field());
    for (uint32_t r = 0; r < m.rows(); ++r) {
        for (uint32_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    Echelon e = echelon(aug);
    std::vector<uint32_t> x(n, 0);
    for (uint32_t k = 0; k < e.rank(); ++k) {
        if (e.pivots[k] == n)
            return std::nullopt;
        x[e.pivots[k]] = e.mat(k, n);
    }
    return x;
}

}  // namespace torspect
