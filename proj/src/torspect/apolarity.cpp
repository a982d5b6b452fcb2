#include "torspect/apolarity.hpp"

#include <algorithm>

#include "torspect/errors.hpp"

namespace torspect {

GradedIdeal annihilator(const Fp& fp, const DualForm& F, int trunc)
{
    const int s = F.degree;
    if (F.coeffs.size() != MonomialBasis::get(s).size())
        throw InputError("annihilator: coefficient length mismatch");
    if (std::all_of(F.coeffs.begin(), F.coeffs.end(), [](uint32_t c) { return c == 0; }))
        throw InputError("annihilator: zero dual form");
    if (trunc < s + 2)
        throw InputError("annihilator: truncation must be at least s+2");

    std::vector<Echelon> pieces;
    for (int d = 0; d <= trunc; ++d) {
        if (d > s) {
            uint32_t n = static_cast<uint32_t>(hq(3, d));
            Echelon e{Matrix::identity(n, fp), {}};
            e.pivots.resize(n);
            for (uint32_t i = 0; i < n; ++i)
                e.pivots[i] = i;
            pieces.push_back(std::move(e));
            continue;
        }
        // Catalecticant: rows = Q_{s-d} coordinates, columns = Q_d monomials.
        const MonomialBasis& bd = MonomialBasis::get(d);
        uint32_t nrows = static_cast<uint32_t>(hq(3, s - d));
        Matrix cat(nrows, bd.size(), fp);
        std::vector<uint32_t> g(bd.size(), 0);
        for (uint32_t c = 0; c < bd.size(); ++c) {
            g[c] = 1;
            std::vector<uint32_t> img = contract(fp, d, g, s, F.coeffs);
            g[c] = 0;
            for (uint32_t r = 0; r < nrows; ++r)
                cat(r, c) = img[r];
        }
        pieces.push_back(echelon(kernel_basis(cat)));
    }
    return GradedIdeal::from_pieces(std::move(pieces), fp);
}

DualForm random_dual_form(int s, const Fp& fp, Rng& rng)
{
    if (s < 2)
        throw InputError("random_dual_form: degree must be >= 2");
    const uint32_t n = MonomialBasis::get(s).size();
    DualForm F;
    F.degree = s;
    F.coeffs.resize(n);
    for (;;) {
        for (uint32_t i = 0; i < n; ++i)
            F.coeffs[i] = rng.below(fp.modulus());
        if (!std::all_of(F.coeffs.begin(), F.coeffs.end(), [](uint32_t c) { return c == 0; }))
            return F;
    }
}

GorensteinDraw random_compressed_gorenstein(int s, const Fp& fp, Rng& rng, int retry_cap)
{
    if (s < 2)
        throw InputError("random_compressed_gorenstein: socle degree must be >= 2");
    for (int attempt = 1; attempt <= retry_cap; ++attempt) {
        DualForm F = random_dual_form(s, fp, rng);
        GradedIdeal I = annihilator(fp, F, s + 2);
        if (initial_degree(I) >= 2 && is_compressed(I, CompressedKind::Gorenstein))
            return GorensteinDraw{std::move(I), attempt};
    }
    throw GenericityError("random_compressed_gorenstein: no compressed draw", retry_cap);
}

Type2Pair random_type2_pair(int s1, int s, const Fp& fp, Rng& rng, int retry_cap)
{
    if (!(2 <= s1 && s1 <= s && s < 2 * s1))
        throw InputError("random_type2_pair: requires 2 <= s1 <= s < 2*s1");
    int draws1 = 0, draws2 = 0;
    for (int attempt = 1; attempt <= retry_cap; ++attempt) {
        GorensteinDraw g1 = random_compressed_gorenstein(s1, fp, rng, retry_cap);
        GorensteinDraw g2 = random_compressed_gorenstein(s, fp, rng, retry_cap);
        draws1 += g1.draws;
        draws2 += g2.draws;
        GradedIdeal I1 = g1.ideal.with_truncation(s + 2);
        GradedIdeal meet = intersect(I1, g2.ideal);
        if (ring_type(meet) == 2 && is_compressed(meet, CompressedKind::Type2)) {
            GradedIdeal join = ideal_sum(I1, g2.ideal);
            return Type2Pair{std::move(I1),    std::move(g2.ideal), std::move(meet),
                             std::move(join),  draws1,              draws2,
                             attempt - 1};
        }
    }
    throw GenericityError("random_type2_pair: no compressed type-2 intersection", retry_cap);
}

}  // namespace torspect
