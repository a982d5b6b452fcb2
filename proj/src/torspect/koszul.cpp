#include "torspect/koszul.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "torspect/errors.hpp"
#include "torspect/quotient.hpp"

namespace torspect {

namespace {

// Exterior algebra bookkeeping on three generators, by homological level.
const std::vector<std::vector<int>>& subsets(int level)
{
    static const std::vector<std::vector<int>> L[4] = {
        {{}},
        {{0}, {1}, {2}},
        {{0, 1}, {0, 2}, {1, 2}},
        {{0, 1, 2}},
    };
    return L[level];
}

int subset_index(int level, const std::vector<int>& s)
{
    const auto& all = subsets(level);
    for (size_t k = 0; k < all.size(); ++k)
        if (all[k] == s)
            return static_cast<int>(k);
    throw std::logic_error("subset_index: not found");
}

/* Homology of one Koszul slice: boundaries extended to a basis of the cycle
 * space by greedy pivot completion.  Stored rows form an RREF of the cycle
 * space; each carries the coefficients expressing it over the chosen
 * representatives, so reducing any cycle yields its homology coordinates. */
class HomologySolver {
public:
    HomologySolver(Fp fp, uint32_t dim) : fp_(fp), dim_(dim) {}

    void add_boundary_rows(const Matrix& rows)
    {
        for (uint32_t r = 0; r < rows.rows(); ++r)
            insert(std::vector<uint32_t>(rows.row(r), rows.row(r) + rows.cols()), false);
    }

    void add_cycle_rows(const Matrix& rows)
    {
        for (uint32_t r = 0; r < rows.rows(); ++r)
            insert(std::vector<uint32_t>(rows.row(r), rows.row(r) + rows.cols()), true);
    }

    uint32_t hom_dim() const { return static_cast<uint32_t>(reps_.size()); }
    const std::vector<std::vector<uint32_t>>& reps() const { return reps_; }

    // Homology coordinates of a cycle; throws if the vector is not a cycle.
    std::vector<uint32_t> coords(const std::vector<uint32_t>& cycle) const
    {
        std::vector<uint32_t> v = cycle;
        std::vector<uint32_t> out(reps_.size(), 0);
        for (const Row& row : rows_) {
            uint32_t c = v[row.piv];
            if (c == 0)
                continue;
            axpy(v, row.v, fp_.neg(c));
            for (size_t l = 0; l < row.aug.size(); ++l)
                out[l] = fp_.add(out[l], fp_.mul(c, row.aug[l]));
        }
        if (std::any_of(v.begin(), v.end(), [](uint32_t x) { return x != 0; }))
            throw std::logic_error("homology coords of a non-cycle");
        return out;
    }

private:
    struct Row {
        std::vector<uint32_t> v;
        std::vector<uint32_t> aug;  // coefficients over reps_, logical zeros beyond size
        uint32_t piv;
    };

    void axpy(std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t c) const
    {
        if (b.size() > a.size())
            a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i)
            a[i] = fp_.add(a[i], fp_.mul(c, b[i]));
    }

    void insert(std::vector<uint32_t> v, bool is_cycle_rep)
    {
        std::vector<uint32_t> aug;
        for (const Row& row : rows_) {
            uint32_t c = v[row.piv];
            if (c == 0)
                continue;
            axpy(v, row.v, fp_.neg(c));
            aug.resize(std::max(aug.size(), row.aug.size()), 0);
            for (size_t l = 0; l < row.aug.size(); ++l)
                aug[l] = fp_.sub(aug[l], fp_.mul(c, row.aug[l]));
        }
        uint32_t piv = dim_;
        for (uint32_t j = 0; j < dim_; ++j) {
            if (v[j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv == dim_)
            return;
        uint32_t inv = fp_.inv(v[piv]);
        if (inv != 1) {
            for (auto& x : v)
                x = fp_.mul(x, inv);
            for (auto& x : aug)
                x = fp_.mul(x, inv);
        }
        if (is_cycle_rep) {
            // The reduced remainder is the chosen representative of a new class.
            aug.assign(reps_.size() + 1, 0);
            aug.back() = 1;
            reps_.push_back(v);
        }
        for (Row& row : rows_) {
            uint32_t c = row.v[piv];
            if (c == 0)
                continue;
            axpy(row.v, v, fp_.neg(c));
            row.aug.resize(std::max(row.aug.size(), aug.size()), 0);
            for (size_t l = 0; l < aug.size(); ++l)
                row.aug[l] = fp_.sub(row.aug[l], fp_.mul(c, aug[l]));
        }
        Row nr{std::move(v), std::move(aug), piv};
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), nr.piv,
                                    [](const Row& r, uint32_t p) { return r.piv < p; });
        rows_.insert(pos, std::move(nr));
    }

    Fp fp_;
    uint32_t dim_;
    std::vector<Row> rows_;
    std::vector<std::vector<uint32_t>> reps_;
};

struct KoszulComplex {
    const QuotientRing& R;
    int jmax;

    int64_t kdim(int i, int j) const
    {
        return static_cast<int64_t>(subsets(i).size()) * R.h(j - i);
    }

    /* Differential of slice (i, j) as a matrix from K_{i,j} into K_{i-1,j}:
     * (m @ e_S) -> sum_k (-1)^k (x_{S[k]} m) @ e_{S minus S[k]}. */
    Matrix differential(int i, int j) const
    {
        const Fp& fp = R.field();
        uint32_t nsrc = static_cast<uint32_t>(kdim(i, j));
        uint32_t ntgt = static_cast<uint32_t>(kdim(i - 1, j));
        Matrix D(ntgt, nsrc, fp);
        if (nsrc == 0 || ntgt == 0)
            return D;
        int d = j - i;  // coefficient degree of the source
        uint32_t hs = static_cast<uint32_t>(R.h(d));
        uint32_t ht = static_cast<uint32_t>(R.h(d + 1));
        const auto& src_sets = subsets(i);
        for (size_t si = 0; si < src_sets.size(); ++si) {
            const auto& S = src_sets[si];
            for (size_t k = 0; k < S.size(); ++k) {
                int v = S[k];
                std::vector<int> T = S;
                T.erase(T.begin() + k);
                uint32_t ti = static_cast<uint32_t>(subset_index(i - 1, T));
                bool negative = (k % 2) == 1;
                const Matrix& mv = R.var_mult(v, d);
                for (uint32_t row = 0; row < ht; ++row) {
                    for (uint32_t col = 0; col < hs; ++col) {
                        uint32_t val = mv(row, col);
                        if (val == 0)
                            continue;
                        uint32_t rr = ti * ht + row;
                        uint32_t cc = static_cast<uint32_t>(si) * hs + col;
                        D(rr, cc) = fp.add(D(rr, cc), negative ? fp.neg(val) : val);
                    }
                }
            }
        }
        return D;
    }
};

// Global coordinates for one homological degree: blocks indexed by internal degree.
struct HomBasis {
    struct Elem {
        int j;
        const std::vector<uint32_t>* vec;
    };
    std::vector<Elem> elems;
    std::map<int, uint32_t> offset;  // internal degree -> first global coordinate
    uint32_t dim = 0;
};

}  // namespace

int64_t BettiTable::total(int i) const
{
    int64_t t = 0;
    for (auto& [ij, v] : entries)
        if (ij.first == i)
            t += v;
    return t;
}

std::string betti_grid(const BettiTable& b)
{
    int max_shift = 0;
    for (auto& [ij, v] : b.entries)
        max_shift = std::max(max_shift, ij.second - ij.first);
    std::vector<std::string> cell(size_t(max_shift + 1) * 4, ".");
    for (auto& [ij, v] : b.entries)
        cell[size_t(ij.second - ij.first) * 4 + ij.first] = std::to_string(v);
    size_t w = 1;
    for (auto& s : cell)
        w = std::max(w, s.size());
    std::ostringstream out;
    std::string head = "   ";
    for (int i = 0; i < 4; ++i) {
        std::string n = std::to_string(i);
        head += std::string(w + 1 - n.size(), ' ') + n;
    }
    out << head << "\n";
    for (int r = 0; r <= max_shift; ++r) {
        std::string label = std::to_string(r) + ":";
        out << label << std::string(3 - label.size(), ' ');
        for (int i = 0; i < 4; ++i) {
            const std::string& s = cell[size_t(r) * 4 + i];
            out << std::string(w + 1 - s.size(), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

TorClass classify_parameters(int64_t type, int64_t m, int p, int q, int r)
{
    if (p == 0 && q == 0 && r == 0)
        return TorClass::golod();
    if (type == 1)
        return m == 3 ? TorClass::C(3) : TorClass::G(static_cast<int>(m));
    if (type == 2) {
        if (p == 1 && q == 1 && r == 2)
            return TorClass::B();
        if (p == 0 && q == 1 && r >= 1)
            return TorClass::G(r);
        if (q <= 2 && r == q)
            return TorClass::H(p, q);
    }
    return TorClass::unclassified(p, q, r);
}

TorAlgebra analyze(const GradedIdeal& I)
{
    if (I.piece_rank(0) != 0)
        throw InputError("analyze: the unit ideal has no Koszul homology");
    QuotientRing R(I);
    const Fp& fp = I.field();
    const int s = R.socle_deg();
    KoszulComplex K{R, s + 3};

    TorAlgebra out;
    out.type = socle_polynomial(I).type();

    // Homology slice by slice; differentials per internal degree.
    std::map<std::pair<int, int>, HomologySolver> hom;
    for (int j = 0; j <= K.jmax; ++j) {
        std::vector<Matrix> D;  // D[i]: K_{i,j} -> K_{i-1,j}, i = 1..3
        D.reserve(3);
        for (int i = 1; i <= 3; ++i)
            D.push_back(K.differential(i, j));
        // beta_0: rank of R_j modulo the image of the first differential.
        int64_t b0 = R.h(j) - echelon(D[0].transposed()).rank();
        if (b0 != 0)
            out.betti.entries[{0, j}] = b0;
        for (int i = 1; i <= 3; ++i) {
            if (K.kdim(i, j) == 0)
                continue;
            HomologySolver solver(fp, static_cast<uint32_t>(K.kdim(i, j)));
            if (i < 3)
                solver.add_boundary_rows(D[i].transposed());
            solver.add_cycle_rows(kernel_basis(D[i - 1]));
            if (solver.hom_dim() != 0)
                out.betti.entries[{i, j}] = solver.hom_dim();
            hom.emplace(std::make_pair(i, j), std::move(solver));
        }
    }
    out.m = out.betti.total(1);

    // Global bases of A_1, A_2, A_3 with cycle representatives.
    HomBasis A[4];
    for (int i = 1; i <= 3; ++i) {
        for (auto& [ij, solver] : hom) {
            if (ij.first != i)
                continue;
            A[i].offset[ij.second] = A[i].dim;
            for (const auto& rep : solver.reps()) {
                A[i].elems.push_back({ij.second, &rep});
                ++A[i].dim;
            }
        }
    }

    auto slice_coords = [&](int i, int j, const std::vector<uint32_t>& vec,
                            std::vector<uint32_t>& global) {
        global.assign(A[i].dim, 0);
        bool zero = std::all_of(vec.begin(), vec.end(), [](uint32_t x) { return x == 0; });
        if (zero || vec.empty())
            return;
        auto it = hom.find({i, j});
        if (it == hom.end())
            throw std::logic_error("missing homology slice");
        std::vector<uint32_t> c = it->second.coords(vec);
        uint32_t off = A[i].offset.at(j);
        for (size_t l = 0; l < c.size(); ++l)
            global[off + l] = c[l];
    };

    // x in K_{1,j1} times y in K_{1,j2} -> K_{2,j1+j2}.
    auto mult_11 = [&](int j1, const std::vector<uint32_t>& x, int j2,
                       const std::vector<uint32_t>& y) {
        int d1 = j1 - 1, d2 = j2 - 1;
        uint32_t h1 = static_cast<uint32_t>(R.h(d1));
        uint32_t h2 = static_cast<uint32_t>(R.h(d2));
        uint32_t ht = static_cast<uint32_t>(R.h(d1 + d2));
        std::vector<uint32_t> outv(size_t(3) * ht, 0);
        for (int u = 0; u < 3; ++u) {
            for (int v = 0; v < 3; ++v) {
                if (u == v)
                    continue;
                std::vector<uint32_t> xu(x.begin() + size_t(u) * h1,
                                         x.begin() + size_t(u + 1) * h1);
                std::vector<uint32_t> yv(y.begin() + size_t(v) * h2,
                                         y.begin() + size_t(v + 1) * h2);
                std::vector<uint32_t> prod = R.mult(d1, xu, d2, yv);
                if (prod.empty())
                    continue;
                int a = std::min(u, v), b = std::max(u, v);
                uint32_t ti = static_cast<uint32_t>(subset_index(2, {a, b}));
                bool neg = u > v;
                for (uint32_t k = 0; k < ht; ++k) {
                    uint32_t val = neg ? fp.neg(prod[k]) : prod[k];
                    outv[size_t(ti) * ht + k] = fp.add(outv[size_t(ti) * ht + k], val);
                }
            }
        }
        return outv;
    };

    // x in K_{1,j1} times y in K_{2,j2} -> K_{3,j1+j2}.
    auto mult_12 = [&](int j1, const std::vector<uint32_t>& x, int j2,
                       const std::vector<uint32_t>& y) {
        int d1 = j1 - 1, d2 = j2 - 2;
        uint32_t h1 = static_cast<uint32_t>(R.h(d1));
        uint32_t h2 = static_cast<uint32_t>(R.h(d2));
        uint32_t ht = static_cast<uint32_t>(R.h(d1 + d2));
        std::vector<uint32_t> outv(ht, 0);
        // e_v * e_T for T the complementary pair; signs +, -, + for v = 0,1,2.
        for (int v = 0; v < 3; ++v) {
            std::vector<int> T;
            for (int w = 0; w < 3; ++w)
                if (w != v)
                    T.push_back(w);
            uint32_t ti = static_cast<uint32_t>(subset_index(2, T));
            std::vector<uint32_t> xv(x.begin() + size_t(v) * h1, x.begin() + size_t(v + 1) * h1);
            std::vector<uint32_t> yT(y.begin() + size_t(ti) * h2,
                                     y.begin() + size_t(ti + 1) * h2);
            std::vector<uint32_t> prod = R.mult(d1, xv, d2, yT);
            if (prod.empty())
                continue;
            bool neg = (v == 1);
            for (uint32_t k = 0; k < ht; ++k) {
                uint32_t val = neg ? fp.neg(prod[k]) : prod[k];
                outv[k] = fp.add(outv[k], val);
            }
        }
        return outv;
    };

    // p = rank(A1 * A1) inside A2.
    {
        RrefBuilder span(std::max(A[2].dim, 1u), fp);
        for (size_t a = 0; a < A[1].elems.size(); ++a) {
            for (size_t b = a + 1; b < A[1].elems.size(); ++b) {
                const auto& xa = A[1].elems[a];
                const auto& yb = A[1].elems[b];
                std::vector<uint32_t> prod = mult_11(xa.j, *xa.vec, yb.j, *yb.vec);
                std::vector<uint32_t> global;
                slice_coords(2, xa.j + yb.j, prod, global);
                if (A[2].dim)
                    span.add_row(global.data());
            }
        }
        out.p = A[2].dim ? static_cast<int>(span.rank()) : 0;
    }

    // q = rank(A1 * A2) inside A3, and the pairing matrix for r.
    {
        RrefBuilder span(std::max(A[3].dim, 1u), fp);
        Matrix delta(0, std::max(A[1].dim * A[3].dim, 1u), fp);
        for (size_t b = 0; b < A[2].elems.size(); ++b) {
            std::vector<uint32_t> delta_row(std::max(A[1].dim * A[3].dim, 1u), 0);
            for (size_t a = 0; a < A[1].elems.size(); ++a) {
                const auto& xa = A[1].elems[a];
                const auto& yb = A[2].elems[b];
                std::vector<uint32_t> prod = mult_12(xa.j, *xa.vec, yb.j, *yb.vec);
                std::vector<uint32_t> global;
                slice_coords(3, xa.j + yb.j, prod, global);
                if (A[3].dim) {
                    span.add_row(global.data());
                    for (uint32_t l = 0; l < A[3].dim; ++l)
                        delta_row[a * A[3].dim + l] = global[l];
                }
            }
            delta.append_row(delta_row);
        }
        out.q = A[3].dim ? static_cast<int>(span.rank()) : 0;
        out.r = (A[1].dim && A[3].dim) ? static_cast<int>(echelon(delta).rank()) : 0;
    }

    out.cls = classify_parameters(out.type, out.m, out.p, out.q, out.r);
    return out;
}

Matrix koszul_differential(const GradedIdeal& I, int i, int j)
{
    QuotientRing R(I);
    KoszulComplex K{R, socle_degree(I) + 3};
    return K.differential(i, j);
}

BettiTable betti_numbers(const GradedIdeal& I)
{
    return analyze(I).betti;
}

std::array<int, 3> tor_parameters(const GradedIdeal& I)
{
    TorAlgebra t = analyze(I);
    return {t.p, t.q, t.r};
}

TorClass classify(const GradedIdeal& I)
{
    return analyze(I).cls;
}

}  // namespace torspect
