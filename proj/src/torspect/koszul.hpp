#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "torspect/ideal.hpp"
#include "torspect/torclass.hpp"

namespace torspect {

/* Graded Betti numbers beta_{ij} = dim Tor_i^Q(R,k)_j, computed as homology
 * dimensions of the Koszul complex of R on x, y, z. */
struct BettiTable {
    std::map<std::pair<int, int>, int64_t> entries;  // (i, j) -> beta_{ij}, zeros omitted

    int64_t at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int64_t total(int i) const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// Compact text grid: rows j-i, columns homological degree, dots for zeros.
std::string betti_grid(const BettiTable& b);

/* Betti numbers plus the Koszul multiplication parameters and class label.
 * p = rank(A1*A1), q = rank(A1*A2), r = rank of delta: A2 -> Hom(A1, A3). */
struct TorAlgebra {
    BettiTable betti;
    int64_t type = 0;  // rank of the socle
    int64_t m = 0;     // minimal generators of the ideal (= total beta_1)
    int p = 0, q = 0, r = 0;
    TorClass cls;
};

TorAlgebra analyze(const GradedIdeal& I);

BettiTable betti_numbers(const GradedIdeal& I);
std::array<int, 3> tor_parameters(const GradedIdeal& I);
TorClass classify(const GradedIdeal& I);

// Class from raw data; exposed for the predictor conformance tests.
TorClass classify_parameters(int64_t type, int64_t m, int p, int q, int r);

/* Differential of the Koszul slice (i, j) as a matrix K_{i,j} -> K_{i-1,j};
 * basis of K_{i,j} is (subset, coset monomial) pairs in fixed order.  Exposed
 * so tests can assert that consecutive differentials compose to zero. */
Matrix koszul_differential(const GradedIdeal& I, int i, int j);

}  // namespace torspect
