#include "torspect/monomial.hpp"

#include <map>
#include <mutex>

#include "torspect/errors.hpp"

namespace torspect {

int64_t binom(int64_t n, int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

int64_t hq(int e, int i)
{
    if (i < 0)
        return 0;
    return binom(e - 1 + i, e - 1);
}

int64_t macaulay_growth(int64_t n, int d)
{
    if (n < 0 || d < 1)
        throw InputError("macaulay_growth: need n >= 0, d >= 1");
    int64_t rest = n;
    int64_t out = 0;
    int i = d;
    while (rest > 0 && i >= 1) {
        int64_t k = i;
        while (binom(k + 1, i) <= rest)
            ++k;
        rest -= binom(k, i);
        out += binom(k + 1, i + 1);
        --i;
    }
    return out;
}

uint32_t MonomialBasis::index(int a, int b, int c) const
{
    int d = degree;
    (void)c;
    // Monomials with larger x-exponent come first, then larger y-exponent.
    return static_cast<uint32_t>((int64_t(d - a) * (d - a + 1)) / 2 + (d - a - b));
}

const MonomialBasis& MonomialBasis::get(int d)
{
    static std::mutex mu;
    static std::map<int, MonomialBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    if (d < 0)
        throw InputError("MonomialBasis: negative degree");
    MonomialBasis b;
    b.degree = d;
    for (int a = d; a >= 0; --a)
        for (int y = d - a; y >= 0; --y)
            b.exps.push_back({uint8_t(a), uint8_t(y), uint8_t(d - a - y)});
    return cache.emplace(d, std::move(b)).first->second;
}

const MultTable& MultTable::get(int d1, int d2)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, MultTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d1, d2);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    const MonomialBasis& b1 = MonomialBasis::get(d1);
    const MonomialBasis& b2 = MonomialBasis::get(d2);
    const MonomialBasis& bt = MonomialBasis::get(d1 + d2);
    MultTable t;
    t.d1 = d1;
    t.d2 = d2;
    t.size2 = b2.size();
    t.target.resize(size_t(b1.size()) * b2.size());
    for (uint32_t i = 0; i < b1.size(); ++i)
        for (uint32_t j = 0; j < b2.size(); ++j)
            t.target[size_t(i) * b2.size() + j] =
                bt.index(b1.exps[i][0] + b2.exps[j][0], b1.exps[i][1] + b2.exps[j][1],
                         b1.exps[i][2] + b2.exps[j][2]);
    return cache.emplace(key, std::move(t)).first->second;
}

std::vector<uint32_t> contract(const Fp& fp, int d, const std::vector<uint32_t>& g, int s,
                               const std::vector<uint32_t>& F)
{
    if (d > s)
        throw DegreeError("contract: degree of g exceeds degree of F");
    const MonomialBasis& bg = MonomialBasis::get(d);
    const MonomialBasis& bF = MonomialBasis::get(s);
    const MonomialBasis& bt = MonomialBasis::get(s - d);
    if (g.size() != bg.size() || F.size() != bF.size())
        throw DimensionError("contract: coefficient length mismatch");
    std::vector<uint32_t> out(bt.size(), 0);
    for (uint32_t i = 0; i < bg.size(); ++i) {
        if (g[i] == 0)
            continue;
        for (uint32_t j = 0; j < bF.size(); ++j) {
            if (F[j] == 0)
                continue;
            int a = bF.exps[j][0] - bg.exps[i][0];
            int b = bF.exps[j][1] - bg.exps[i][1];
            int c = bF.exps[j][2] - bg.exps[i][2];
            if (a < 0 || b < 0 || c < 0)
                continue;
            uint32_t k = bt.index(a, b, c);
            out[k] = fp.add(out[k], fp.mul(g[i], F[j]));
        }
    }
    return out;
}

std::string monomial_str(const std::array<uint8_t, 3>& e)
{
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += names[v];
        if (e[v] > 1)
            s += "^" + std::to_string(int(e[v]));
    }
    return s.empty() ? "1" : s;
}

std::string poly_str(const Fp& fp, int degree, const std::vector<uint32_t>& coeffs)
{
    const MonomialBasis& b = MonomialBasis::get(degree);
    std::string s;
    for (uint32_t i = 0; i < b.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (coeffs[i] != 1)
            s += std::to_string(coeffs[i]) + "*";
        s += monomial_str(b.exps[i]);
    }
    (void)fp;
    return s.empty() ? "0" : s;
}

}  // namespace torspect
