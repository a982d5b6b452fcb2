#pragma once

#include <cstdint>
#include <vector>

#include "torspect/ideal.hpp"

namespace torspect {

/* Working view of R = Q/I with a fixed monomial coset basis per degree: the
 * non-pivot monomials of the RREF of I_d.  Degrees above the socle degree are
 * zero.  All tables are built once per ideal; the object is immutable
 * afterwards and safe to share. */
class QuotientRing {
public:
    explicit QuotientRing(const GradedIdeal& I);

    const Fp& field() const { return fp_; }
    int socle_deg() const { return s_; }
    int64_t h(int d) const;  // dim R_d

    // Monomial (Q_d) indices of the coset basis of R_d.
    const std::vector<uint32_t>& coset_cols(int d) const;

    // Q_d coordinates -> R_d coordinates (reduction modulo I_d).
    std::vector<uint32_t> reduce(int d, std::vector<uint32_t> qvec) const;

    // Multiplication by the variable v: matrix of R_d -> R_{d+1}, h(d+1) x h(d).
    const Matrix& var_mult(int v, int d) const;

    // Product R_{d1} x R_{d2} -> R_{d1+d2} on coset coordinates.
    std::vector<uint32_t> mult(int d1, const std::vector<uint32_t>& a, int d2,
                               const std::vector<uint32_t>& b) const;

private:
    struct DegreeData {
        Echelon piece;                   // RREF of I_d
        std::vector<uint32_t> cosets;    // non-pivot monomial indices
        std::vector<int32_t> col_coset;  // monomial index -> coset position or -1
        std::vector<Matrix> vmul;        // three matrices into degree d+1
    };

    Fp fp_;
    int s_;
    std::vector<DegreeData> deg_;
};

}  // namespace torspect
