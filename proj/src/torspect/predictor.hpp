#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "torspect/torclass.hpp"

namespace torspect {

/* Closed-form invariants of compressed quotients with socle polynomial
 * chi^s1 + chi^s over k[x,y,z]: h-vectors, initial degree, the invariant a
 * and its f-vector, Betti-table shapes, Golod thresholds, and the generic
 * class.  Everything here is integer arithmetic; threshold comparisons with
 * square roots are done on squared quantities. */

struct GorensteinProfile {
    int e, s, t;
    std::vector<int64_t> h;
};

// h(i) = min{hq(e,i), hq(e,s-i)}; t = ceil((s+1)/2) for s >= 2.
GorensteinProfile gorenstein_profile(int e, int s);

// ceil((s+1)/2) < t implies Golod.
bool golod_by_degree(int s, int t);

/* Threshold values; the *_cmp helpers are the exact integer comparisons and
 * are the implementation of record. */
struct Thresholds {
    int s;
    // odd s: N(s) = (s-2+sqrt(4s+13))/2
    // even s: N1(s) = (3s-5+sqrt(24s+97))/6, N2(s) = (s-1+sqrt(8s+25))/2,
    //         N(s) = s/2-1+sqrt(s+4)
    double n = 0, n1 = 0, n2 = 0;
};
Thresholds thresholds(int s);  // s >= 4

bool s1_ge_N(int s1, int s);   // odd s: s1 >= N(s); even s: s1 >= N(s)
bool s1_ge_N2(int s1, int s);  // even s only
bool s1_lt_N1(int s1, int s);  // even s only

struct Type2Profile {
    int s1 = 0, s = 0, e = 3;
    std::vector<int64_t> h;
    int t = 0;
    int a = 0;  // s1 - ceil((s+1)/2) + 1
    int64_t f0 = 0, f1 = 0, f2 = 0;
    bool shape_applicable = false;  // ceil((s+1)/2) == t
    int64_t generic_m = 0;
    int64_t generic_beta = 0;
    TorClass generic_class;
    Thresholds th{};
};

// Requires 2 <= s1 <= s < 2*s1.
Type2Profile type2_profile(int s1, int s);

std::pair<TorClass, int64_t> generic_class(int s1, int s);

// Classes permitted for a compressed type-2 ring with the given socle
// polynomial and generator count, when the defining ideal is an intersection
// of ideals of compressed Gorenstein rings.
std::set<TorClass> allowed_classes(int s1, int s, int64_t m);

struct BettiShape {
    int t = 0;
    std::map<int, int64_t> b1, b2, b3;  // internal degree -> count
    int64_t beta = 0;
};

// Graded Betti template for the compressed type-2 resolution; only defined
// when the profile has ceil((s+1)/2) == t.
BettiShape betti_shape(int s1, int s, int64_t beta);

// Gorenstein analogue: b1/b2/b3 of a compressed Gorenstein ring of socle
// degree s (odd s carries the free parameter beta).
BettiShape gorenstein_betti_shape(int s, int64_t beta);

// Socle polynomials that force a unique generator count.
std::optional<std::pair<int64_t, TorClass>> special_m(int s1, int s);

/* Diagnostics for general embedding dimension e >= 3: the compressed
 * Gorenstein top-degree drop, the initial-degree criterion, the level-Golod
 * bound, and the socle-gap bound for Golodness. */
struct GeneralEBounds {
    int e, s, s1, t;
    int64_t ht_difference;      // hq(e,t) - hq(e,s-t)
    bool degree_equal;          // ceil((s+1)/2) == t criterion holds
    double level_golod_bound;   // s >= this forces Golod for level rings
    bool level_golod;           // bound satisfied
    double socle_gap_bound;     // s - s1 <= this forces Golod
    bool socle_gap_golod;
};
GeneralEBounds general_e_bounds(int e, int s, int s1);

// B-polynomial ((1-x)^3 * H) coefficients of an h-vector.
std::vector<int64_t> b_polynomial(const std::vector<int64_t>& h);

}  // namespace torspect
