#include "torspect/experiment.hpp"

#include <algorithm>
#include <optional>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "torspect/errors.hpp"
#include "torspect/rng.hpp"

namespace torspect {

int thread_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("TORSPECT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

TrialRecord run_trial(int s1, int s, uint32_t prime, uint64_t trial_seed, int retry_cap)
{
    TrialRecord rec;
    rec.seed = trial_seed;
    rec.s1 = s1;
    rec.s = s;
    rec.prime = prime;
    Fp fp(prime);
    Rng rng(trial_seed);
    std::optional<Type2Pair> drawn;
    try {
        drawn = random_type2_pair(s1, s, fp, rng, retry_cap);
    }
    catch (const GenericityError& e) {
        rec.failed = true;
        rec.retries = e.attempts;
        return rec;
    }
    Type2Pair& pair = *drawn;
    rec.draws1 = pair.draws1;
    rec.draws2 = pair.draws2;
    rec.retries = pair.retries;
    rec.r1_compressed = is_compressed(pair.i1, CompressedKind::Gorenstein);
    rec.r2_compressed = is_compressed(pair.i2, CompressedKind::Gorenstein);
    rec.r_compressed = is_compressed(pair.meet, CompressedKind::Type2);
    rec.h = hilbert(pair.meet);
    rec.socle = socle_polynomial(pair.meet);
    rec.gen_degrees = minimal_generator_degrees(pair.meet);
    rec.a = compute_a(pair.i1, pair.i2);
    TorAlgebra ta = analyze(pair.meet);
    rec.m = ta.m;
    rec.p = ta.p;
    rec.q = ta.q;
    rec.r = ta.r;
    rec.cls = ta.cls;
    rec.betti = ta.betti;
    auto [gcls, gm] = generic_class(s1, s);
    rec.matches_generic = rec.cls == gcls && rec.m == gm;
    return rec;
}

TallyRow run_trials(int s1, int s, uint32_t prime, int n, uint64_t seed, int threads)
{
    if (n < 1)
        throw InputError("run_trials: need at least one trial");
    Type2Profile pr = type2_profile(s1, s);
    Fp fp(prime);  // validate the modulus up front

    std::vector<TrialRecord> recs(n);
    const int workers = std::min(thread_count(threads), n);
    auto work = [&](int w) {
        for (int i = w; i < n; i += workers) {
            uint64_t trial_seed = derive_seed(seed, static_cast<uint64_t>(i));
            try {
                recs[i] = run_trial(s1, s, prime, trial_seed);
            }
            catch (const std::exception& e) {
                std::fprintf(stderr, "trial %d (s1=%d, s=%d, seed=%llu) failed: %s\n", i, s1,
                             s, static_cast<unsigned long long>(trial_seed), e.what());
                recs[i].failed = true;
                recs[i].seed = trial_seed;
            }
        }
    };
    if (workers <= 1) {
        work(0);
    }
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    TallyRow row;
    row.s1 = s1;
    row.s = s;
    row.prime = prime;
    row.trials = n;
    row.seed = seed;
    row.h = pr.h;
    row.t = pr.t;
    row.generic_cls = pr.generic_class;
    row.generic_m = pr.generic_m;
    for (const TrialRecord& rec : recs) {
        if (rec.failed || !rec.r_compressed) {
            ++row.failed;
            continue;
        }
        ++row.counts[{rec.m, rec.cls}];
    }
    int64_t best = 0;
    for (const auto& [key, count] : row.counts) {
        if (count > best) {  // ties resolved toward the smaller (m, class)
            best = count;
            row.modal_m = key.first;
            row.modal_class = key.second;
        }
    }
    row.agree = best > 0 && row.modal_class == row.generic_cls && row.modal_m == row.generic_m;
    return row;
}

std::vector<TallyRow> reproduce_table1(int max_s, uint32_t prime, int n, uint64_t seed,
                                       int threads)
{
    std::vector<TallyRow> rows;
    for (int s = 2; s <= max_s; ++s)
        for (int s1 = 2; s1 <= s; ++s1)
            if (s < 2 * s1)
                rows.push_back(run_trials(s1, s, prime, n, seed, threads));
    return rows;
}

namespace {

std::string h_str(const std::vector<int64_t>& h)
{
    std::string s = "(";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(h[i]);
    }
    return s + ")";
}

std::string others_str(const TallyRow& row)
{
    std::string s;
    for (const auto& [key, count] : row.counts) {
        if (key.first == row.modal_m && key.second == row.modal_class)
            continue;
        if (!s.empty())
            s += "; ";
        s += key.second.str() + " m=" + std::to_string(key.first) + " x" + std::to_string(count);
    }
    return s;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string emit_csv(const std::vector<TallyRow>& rows)
{
    std::ostringstream out;
    out << "s1,s,h,t,modal_class,modal_m,other_observed,predictor_class,predictor_m,agree\n";
    for (const TallyRow& r : rows) {
        out << r.s1 << ',' << r.s << ',' << csv_quote(h_str(r.h)) << ',' << r.t << ','
            << r.modal_class.str() << ',' << r.modal_m << ',' << csv_quote(others_str(r)) << ','
            << r.generic_cls.str() << ',' << r.generic_m << ',' << (r.agree ? "yes" : "no")
            << '\n';
    }
    return out.str();
}

std::string emit_markdown(const std::vector<TallyRow>& rows)
{
    std::ostringstream out;
    out << "| s1 | s | h-vector | t | modal class | m | other observed | predicted | agree |\n";
    out << "|---:|--:|:---------|--:|:------------|--:|:---------------|:----------|:-----:|\n";
    for (const TallyRow& r : rows) {
        out << "| " << r.s1 << " | " << r.s << " | " << h_str(r.h) << " | " << r.t << " | "
            << r.modal_class.str() << " | " << r.modal_m << " | " << others_str(r) << " | "
            << r.generic_cls.str() << " / m=" << r.generic_m << " | "
            << (r.agree ? "yes" : "no") << " |\n";
    }
    return out.str();
}

}  // namespace torspect
