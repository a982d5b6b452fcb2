#pragma once

#include <cstdint>

#include "torspect/ideal.hpp"
#include "torspect/rng.hpp"

namespace torspect {

/* Degree-s element of the dual polynomial space; the seed of an apolarity
 * ideal.  Must be nonzero and of degree >= 2. */
struct DualForm {
    int degree = 0;
    std::vector<uint32_t> coeffs;
};

/* Ann(F): degreewise kernel of the catalecticant map Q_d -> Q_{s-d},
 * g -> g o F.  The quotient is artinian Gorenstein with socle degree s. */
GradedIdeal annihilator(const Fp& fp, const DualForm& F, int trunc);

DualForm random_dual_form(int s, const Fp& fp, Rng& rng);

struct GorensteinDraw {
    GradedIdeal ideal;
    int draws;  // dual forms consumed until acceptance
};

/* Draw dual forms until the annihilator is compressed with initial degree
 * >= 2.  Expected to accept immediately for any reasonable field size. */
GorensteinDraw random_compressed_gorenstein(int s, const Fp& fp, Rng& rng, int retry_cap = 100);

struct Type2Pair {
    GradedIdeal i1, i2;  // compressed Gorenstein, socle degrees s1 and s
    GradedIdeal meet;    // i1 intersect i2: the type-2 ring
    GradedIdeal join;    // i1 + i2
    int draws1 = 0, draws2 = 0;
    int retries = 0;  // pair draws rejected before acceptance
};

/* Compressed type-2 triple: requires 2 <= s1 <= s < 2*s1.  Pairs are redrawn
 * until the intersection has type 2 and is compressed. */
Type2Pair random_type2_pair(int s1, int s, const Fp& fp, Rng& rng, int retry_cap = 100);

}  // namespace torspect
