#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "torspect/gf.hpp"

namespace torspect {

int64_t binom(int64_t n, int64_t k);

// Hilbert function of a regular ring of embedding dimension e: binom(e-1+i, e-1).
int64_t hq(int e, int i);

/* Macaulay growth bound n^<d>: write n in its unique binomial expansion
 * descending from d and bump every binomial one step up. */
int64_t macaulay_growth(int64_t n, int d);

/* Monomials of k[x,y,z] in one degree, graded lex with x > y > z.  The order
 * is fixed once and shared by every matrix in the program. */
class MonomialBasis {
public:
    int degree;
    std::vector<std::array<uint8_t, 3>> exps;

    uint32_t size() const { return static_cast<uint32_t>(exps.size()); }
    uint32_t index(int a, int b, int c) const;  // (a,b,c) with a+b+c == degree

    static const MonomialBasis& get(int d);  // cached; d >= 0
};

/* Index map realizing multiplication Q_{d1} x Q_{d2} -> Q_{d1+d2} on basis
 * monomials: entry i1*size(d2)+i2 is the index of the product. */
class MultTable {
public:
    int d1, d2;
    uint32_t size2;
    std::vector<uint32_t> target;

    uint32_t at(uint32_t i1, uint32_t i2) const { return target[size_t(i1) * size2 + i2]; }

    static const MultTable& get(int d1, int d2);
};

/* Contraction (apolarity) action g o F for g in Q_d, F in Q_s: the bilinear
 * extension of x^alpha o x^beta = x^(beta-alpha) when beta >= alpha, else 0.
 * No factorials, so Gorenstein duality works in every characteristic. */
std::vector<uint32_t> contract(const Fp& fp, int d, const std::vector<uint32_t>& g, int s,
                               const std::vector<uint32_t>& F);

std::string monomial_str(const std::array<uint8_t, 3>& e);
std::string poly_str(const Fp& fp, int degree, const std::vector<uint32_t>& coeffs);

}  // namespace torspect
