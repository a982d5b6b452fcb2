#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torspect/linalg.hpp"
#include "torspect/monomial.hpp"

namespace torspect {

/* Homogeneous polynomial in x,y,z: degree plus dense coefficients over the
 * monomial basis of that degree. */
struct HPoly {
    int degree = 0;
    std::vector<uint32_t> coeffs;
};

struct SoclePolynomial {
    std::vector<int64_t> coeff;  // coeff[d] = rank of the degree-d socle piece

    int64_t type() const;
    bool is_monomial() const;  // socle concentrated in one degree (level ring)
    int low_degree() const;    // least degree with nonzero coefficient, -1 if none
    int top_degree() const;
    std::string str() const;  // "chi^2 + chi^3", "3*chi", ...
    bool operator==(const SoclePolynomial& o) const;
};

/* Homogeneous q-primary ideal of Q = k[x,y,z], stored as one canonical RREF
 * matrix per degree up to a truncation bound D with I_D = Q_D.  Degrees above
 * D are implicitly full, which is exact once a full piece appears. */
class GradedIdeal {
public:
    // I_d = span(degree-d generators) + Q_1 * I_{d-1}; generators must be
    // homogeneous, nonzero, of degree in [2, D]; the piece at D must be full.
    static GradedIdeal from_generators(const std::vector<HPoly>& gens, Fp fp, int trunc);

    // Same, but the truncation is grown until a full piece appears (capped).
    static GradedIdeal from_generators_auto(const std::vector<HPoly>& gens, Fp fp, int cap = 40);

    // Trusted constructor from per-degree spans (apolarity, intersections).
    static GradedIdeal from_pieces(std::vector<Echelon> pieces, Fp fp);

    const Fp& field() const { return fp_; }
    int truncation() const { return trunc_; }

    // Degree-d piece; full beyond the truncation.
    const Echelon& piece(int d) const;
    int64_t piece_rank(int d) const;

    GradedIdeal with_truncation(int trunc) const;  // extend by full pieces

private:
    GradedIdeal(Fp fp) : fp_(fp) {}
    Fp fp_;
    int trunc_ = 0;
    std::vector<Echelon> pieces_;
    friend GradedIdeal intersect(const GradedIdeal&, const GradedIdeal&);
};

enum class CompressedKind { Gorenstein, Type2 };

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal add_power(const GradedIdeal& a, int i);  // a + q^i
bool equals(const GradedIdeal& a, const GradedIdeal& b);

// h-vector of Q/I, trailing zeros trimmed.
std::vector<int64_t> hilbert(const GradedIdeal& I);

SoclePolynomial socle_polynomial(const GradedIdeal& I);
int initial_degree(const GradedIdeal& I);  // t
int socle_degree(const GradedIdeal& I);    // s (top nonzero h index), -1 for the unit ideal
int64_t ring_type(const GradedIdeal& I);
bool is_level(const GradedIdeal& I);

// degree -> number of minimal generators in that degree (zeros omitted)
std::map<int, int64_t> minimal_generator_degrees(const GradedIdeal& I);
int64_t minimal_generators(const GradedIdeal& I);

// a = min{i >= 0 | q^i I2 within I1}; 0 when I2 is contained in I1.
int compute_a(const GradedIdeal& I1, const GradedIdeal& I2);
// b = min{i >= 1 | q^{i+1} meet I2 within I1}.
int compute_b(const GradedIdeal& I1, const GradedIdeal& I2);

bool is_compressed(const GradedIdeal& I, CompressedKind kind);

// The truncation ideal q^u at truncation D (u >= 0).
GradedIdeal power_ideal(Fp fp, int u, int trunc);

}  // namespace torspect
