#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torspect/apolarity.hpp"
#include "torspect/koszul.hpp"
#include "torspect/predictor.hpp"

namespace torspect {

/* One randomized compressed type-2 trial: generation parameters, the
 * observed invariants, and how they compare with the closed-form
 * predictions. */
struct TrialRecord {
    uint64_t seed = 0;  // derived per-trial seed
    int s1 = 0, s = 0;
    uint32_t prime = 0;
    int draws1 = 0, draws2 = 0, retries = 0;
    bool failed = false;  // retry budget exhausted; no data below
    std::vector<int64_t> h;
    SoclePolynomial socle;
    int64_t m = 0;
    std::map<int, int64_t> gen_degrees;
    int a = 0;
    int p = 0, q = 0, r = 0;
    TorClass cls;
    BettiTable betti;
    bool r1_compressed = false, r2_compressed = false, r_compressed = false;
    bool matches_generic = false;  // class and m both equal the prediction
};

struct TallyRow {
    int s1 = 0, s = 0;
    uint32_t prime = 0;
    int trials = 0;
    uint64_t seed = 0;
    std::vector<int64_t> h;  // predicted h-vector
    int t = 0;
    std::map<std::pair<int64_t, TorClass>, int64_t> counts;  // (m, class) -> trials
    int64_t failed = 0;
    TorClass modal_class;
    int64_t modal_m = 0;
    TorClass generic_cls;
    int64_t generic_m = 0;
    bool agree = false;
};

// Drive one trial end to end; used by run_trials and the pair CLI command.
TrialRecord run_trial(int s1, int s, uint32_t prime, uint64_t trial_seed, int retry_cap = 100);

/* n independent trials with per-trial derived seeds.  Deterministic for
 * fixed inputs regardless of the worker count (TORSPECT_THREADS, or the
 * threads argument when nonzero). */
TallyRow run_trials(int s1, int s, uint32_t prime, int n, uint64_t seed, int threads = 0);

// All rows with 2 <= s1 <= s <= max_s, s < 2*s1, in (s, s1) order.
std::vector<TallyRow> reproduce_table1(int max_s, uint32_t prime, int n, uint64_t seed,
                                       int threads = 0);

std::string emit_csv(const std::vector<TallyRow>& rows);
std::string emit_markdown(const std::vector<TallyRow>& rows);

int thread_count(int requested);  // resolves 0 via TORSPECT_THREADS/hardware

}  // namespace torspect
