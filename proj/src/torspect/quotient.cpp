#include "torspect/quotient.hpp"

#include <algorithm>

#include "torspect/errors.hpp"

namespace torspect {

QuotientRing::QuotientRing(const GradedIdeal& I) : fp_(I.field()), s_(socle_degree(I))
{
    // Need R_d for d <= s_+1 (socle maps look one degree up).
    int top = s_ + 1;
    deg_.reserve(top + 1);
    for (int d = 0; d <= top; ++d) {
        deg_.push_back(DegreeData{I.piece(d), {}, {}, {}});
        DegreeData& dd = deg_.back();
        uint32_t n = static_cast<uint32_t>(hq(3, d));
        dd.col_coset.assign(n, -1);
        std::vector<bool> is_pivot(n, false);
        for (uint32_t c : dd.piece.pivots)
            is_pivot[c] = true;
        for (uint32_t c = 0; c < n; ++c) {
            if (!is_pivot[c]) {
                dd.col_coset[c] = static_cast<int32_t>(dd.cosets.size());
                dd.cosets.push_back(c);
            }
        }
    }
    for (int d = 0; d < top; ++d) {
        DegreeData& dd = deg_[d];
        const MultTable& t = MultTable::get(1, d);
        uint32_t hn = static_cast<uint32_t>(h(d + 1));
        for (int v = 0; v < 3; ++v) {
            Matrix m(hn, static_cast<uint32_t>(h(d)), fp_);
            for (uint32_t k = 0; k < dd.cosets.size(); ++k) {
                std::vector<uint32_t> q(static_cast<size_t>(hq(3, d + 1)), 0);
                q[t.at(static_cast<uint32_t>(v), dd.cosets[k])] = 1;
                std::vector<uint32_t> r = reduce(d + 1, std::move(q));
                for (uint32_t i = 0; i < hn; ++i)
                    m(i, k) = r[i];
            }
            dd.vmul.push_back(std::move(m));
        }
    }
}

int64_t QuotientRing::h(int d) const
{
    if (d < 0 || d > s_)
        return 0;
    return static_cast<int64_t>(deg_[d].cosets.size());
}

const std::vector<uint32_t>& QuotientRing::coset_cols(int d) const
{
    return deg_[d].cosets;
}

std::vector<uint32_t> QuotientRing::reduce(int d, std::vector<uint32_t> qvec) const
{
    if (d < 0 || d > s_ + 1 || h(d) == 0)
        return {};
    const DegreeData& dd = deg_[d];
    const Echelon& e = dd.piece;
    const uint32_t p = fp_.modulus();
    const auto& ops = kernels::select_ops(p);
    for (uint32_t k = 0; k < e.rank(); ++k) {
        uint32_t c = qvec[e.pivots[k]];
        if (c != 0)
            ops.axpy_mod(qvec.data(), e.mat.row(k), p - c, qvec.size(), p);
    }
    std::vector<uint32_t> out(dd.cosets.size());
    for (size_t k = 0; k < dd.cosets.size(); ++k)
        out[k] = qvec[dd.cosets[k]];
    return out;
}

const Matrix& QuotientRing::var_mult(int v, int d) const
{
    if (d < 0 || d > s_)
        throw InputError("var_mult: degree out of range");
    return deg_[d].vmul[v];
}

std::vector<uint32_t> QuotientRing::mult(int d1, const std::vector<uint32_t>& a, int d2,
                                         const std::vector<uint32_t>& b) const
{
    int d = d1 + d2;
    if (d > s_)
        return {};
    const MultTable& t = MultTable::get(d1, d2);
    std::vector<uint32_t> q(static_cast<size_t>(hq(3, d)), 0);
    const auto& c1 = deg_[d1].cosets;
    const auto& c2 = deg_[d2].cosets;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0)
                continue;
            uint32_t k = t.at(c1[i], c2[j]);
            q[k] = fp_.add(q[k], fp_.mul(a[i], b[j]));
        }
    }
    return reduce(d, std::move(q));
}

}  // namespace torspect
