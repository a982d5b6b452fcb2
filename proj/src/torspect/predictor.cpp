#include "torspect/predictor.hpp"

#include <algorithm>
#include <cmath>

#include "torspect/errors.hpp"
#include "torspect/monomial.hpp"

namespace torspect {

namespace {

int ceil_half_succ(int s)
{
    return (s + 2) / 2;  // ceil((s+1)/2)
}

void check_range(int s1, int s)
{
    if (!(2 <= s1 && s1 <= s && s < 2 * s1))
        throw InputError("socle degrees must satisfy 2 <= s1 <= s < 2*s1");
}

}  // namespace

std::vector<int64_t> b_polynomial(const std::vector<int64_t>& h)
{
    static const int64_t k[4] = {1, -3, 3, -1};
    std::vector<int64_t> b(h.size() + 3, 0);
    for (size_t i = 0; i < h.size(); ++i)
        for (int j = 0; j < 4; ++j)
            b[i + j] += k[j] * h[i];
    return b;
}

GorensteinProfile gorenstein_profile(int e, int s)
{
    if (e < 1 || s < 0)
        throw InputError("gorenstein_profile: need e >= 1, s >= 0");
    GorensteinProfile p;
    p.e = e;
    p.s = s;
    for (int i = 0; i <= s; ++i)
        p.h.push_back(std::min(hq(e, i), hq(e, s - i)));
    p.t = s >= 2 ? ceil_half_succ(s) : s + 1;
    return p;
}

bool golod_by_degree(int s, int t)
{
    return ceil_half_succ(s) < t;
}

Thresholds thresholds(int s)
{
    if (s < 4)
        throw InputError("thresholds: defined for s >= 4");
    Thresholds th;
    th.s = s;
    if (s % 2 == 1) {
        th.n = (s - 2 + std::sqrt(4.0 * s + 13.0)) / 2.0;
    }
    else {
        th.n1 = (3.0 * s - 5 + std::sqrt(24.0 * s + 97.0)) / 6.0;
        th.n2 = (s - 1 + std::sqrt(8.0 * s + 25.0)) / 2.0;
        th.n = s / 2.0 - 1 + std::sqrt(s + 4.0);
    }
    return th;
}

bool s1_ge_N(int s1, int s)
{
    if (s % 2 == 1) {
        int64_t lhs = 2LL * s1 - s + 2;
        return lhs >= 0 && lhs * lhs >= 4LL * s + 13;
    }
    int64_t lhs = s1 - s / 2 + 1;
    return lhs >= 0 && lhs * lhs >= s + 4;
}

bool s1_ge_N2(int s1, int s)
{
    int64_t lhs = 2LL * s1 - s + 1;
    return lhs >= 0 && lhs * lhs >= 8LL * s + 25;
}

bool s1_lt_N1(int s1, int s)
{
    int64_t lhs = 6LL * s1 - 3LL * s + 5;
    return lhs < 0 || lhs * lhs < 24LL * s + 97;
}

std::pair<TorClass, int64_t> generic_class(int s1, int s)
{
    check_range(s1, s);
    // Minimal Betti numbers compatible with the B-polynomial of the
    // compressed h-vector; reproduces every m in the reference table.
    Type2Profile pr;
    pr.s1 = s1;
    pr.s = s;
    for (int i = 0; i <= s; ++i)
        pr.h.push_back(std::min(hq(3, i), hq(3, s1 - i) + hq(3, s - i)));
    std::vector<int64_t> b = b_polynomial(pr.h);
    int t = s + 1;
    for (int i = 0; i <= s; ++i) {
        if (pr.h[i] < hq(3, i)) {
            t = i;
            break;
        }
    }
    int64_t m = std::max<int64_t>(0, -b[t]) + std::max<int64_t>(0, -b[t + 1]);

    TorClass cls;
    if (s == 2) {
        cls = TorClass::H(3, 2);
    }
    else if (s == 3) {
        cls = s1 == 2 ? TorClass::B() : TorClass::golod();
    }
    else if (s % 2 == 1) {
        if (s1_ge_N(s1, s)) {
            cls = TorClass::golod();
        }
        else {
            int64_t a = s1 - (s - 1) / 2;
            cls = TorClass::G(static_cast<int>((s + 3 - a * (a + 1)) / 2));
        }
    }
    else {
        if (s1 == s / 2 + 1)
            cls = TorClass::G(s - 1);
        else if (s1_ge_N(s1, s))
            cls = TorClass::golod();
        else {
            int64_t a = s1 - s / 2;
            cls = TorClass::G(static_cast<int>(s + 3 - a * (a + 2)));
        }
    }
    return {cls, m};
}

Type2Profile type2_profile(int s1, int s)
{
    check_range(s1, s);
    Type2Profile pr;
    pr.s1 = s1;
    pr.s = s;
    pr.e = 3;
    for (int i = 0; i <= s; ++i)
        pr.h.push_back(std::min(hq(3, i), hq(3, s1 - i) + hq(3, s - i)));
    pr.t = s + 1;
    for (int i = 0; i <= s; ++i) {
        if (pr.h[i] < hq(3, i)) {
            pr.t = i;
            break;
        }
    }
    const int t2 = ceil_half_succ(s);
    pr.a = s1 - t2 + 1;
    pr.f0 = binom(pr.a + 1, 2);
    pr.f1 = static_cast<int64_t>(pr.a) * (pr.a + 2);
    pr.f2 = binom(pr.a + 2, 2);
    pr.shape_applicable = pr.t == t2;
    auto [cls, m] = generic_class(s1, s);
    pr.generic_class = cls;
    pr.generic_m = m;
    if (pr.shape_applicable)
        pr.generic_beta = s % 2 == 1 ? 0 : std::max<int64_t>(0, pr.f1 - 2 * pr.t - 1);
    if (s >= 4)
        pr.th = thresholds(s);
    else
        pr.th.s = s;
    return pr;
}

std::set<TorClass> allowed_classes(int s1, int s, int64_t m)
{
    check_range(s1, s);
    if (m < 3)
        throw InputError("allowed_classes: need m >= 3");
    Type2Profile pr = type2_profile(s1, s);
    const int t2 = ceil_half_succ(s);
    std::set<TorClass> out;

    if (s % 2 == 1) {
        if (pr.t > t2) {
            out.insert(TorClass::golod());
            return out;
        }
        if (s == 3) {
            if (m == 5)
                out.insert(TorClass::B());
            if (m == 6)
                out.insert(TorClass::G(3));
            return out;
        }
        int64_t a = s1 - (s - 1) / 2;
        int64_t r = m - a * (a + 2);
        int64_t rmin = (s + 3 - a * (a + 1)) / 2;
        if (r >= rmin && r >= 1)
            out.insert(TorClass::G(static_cast<int>(r)));
        return out;
    }

    if (pr.t > s / 2 + 1) {
        out.insert(TorClass::golod());
        return out;
    }
    if (s1 == s) {
        switch (s) {
            case 2:
                if (m == 4)
                    out.insert(TorClass::H(3, 2));
                if (m == 5)
                    out.insert(TorClass::B());
                break;
            case 4:
                if (5 <= m && m <= 8)
                    out.insert(TorClass::golod());
                if (6 <= m && m <= 7)
                    for (int64_t r = 1; r <= m - 5; ++r)
                        out.insert(TorClass::G(static_cast<int>(r)));
                if (m == 7)
                    out.insert(TorClass::H(0, 2));
                break;
            case 6:
                if (9 <= m && m <= 11)
                    out.insert(TorClass::golod());
                if (m == 10)
                    out.insert(TorClass::G(1));
                break;
            case 8:
                if (m == 14)
                    out.insert(TorClass::golod());
                break;
            default:
                break;  // t = s/2+1 with s1 = s cannot occur for s >= 10
        }
        return out;
    }
    if (s1 == s / 2 + 1) {
        if (m - 3 >= 1)
            out.insert(TorClass::G(static_cast<int>(m - 3)));
        return out;
    }
    int64_t a = s1 - s / 2;
    out.insert(TorClass::golod());
    int64_t rlo = std::max<int64_t>(1, m - a * (a + 2));
    int64_t rhi = m - a * (a + 3) / 2;
    for (int64_t r = rlo; r <= rhi; ++r)
        out.insert(TorClass::G(static_cast<int>(r)));
    return out;
}

BettiShape betti_shape(int s1, int s, int64_t beta)
{
    Type2Profile pr = type2_profile(s1, s);
    if (!pr.shape_applicable)
        throw InputError("betti_shape: resolution shape requires ceil((s+1)/2) == t");
    if (beta < 0)
        throw InputError("betti_shape: beta must be nonnegative");
    BettiShape sh;
    sh.t = pr.t;
    sh.beta = beta;
    const int t = pr.t;
    auto put = [](std::map<int, int64_t>& m, int j, int64_t v) {
        if (v != 0)
            m[j] = v;
    };
    if (s % 2 == 1) {
        put(sh.b1, t, t + 1 - pr.f0);
        put(sh.b1, t + 1, pr.f1 + beta);
        put(sh.b2, t + 1, beta);
        put(sh.b2, t + 2, t + 1 + pr.f2);
    }
    else {
        if (beta < std::max<int64_t>(0, pr.f1 - 2 * t - 1))
            throw InputError("betti_shape: beta below the lower bound for even socle degree");
        put(sh.b1, t, 2 * t + 1 - pr.f0);
        put(sh.b1, t + 1, beta);
        put(sh.b2, t + 1, 2 * t + 1 - pr.f1 + beta);
        put(sh.b2, t + 2, pr.f2);
    }
    sh.b3[s1 + 3] += 1;
    sh.b3[s + 3] += 1;
    return sh;
}

BettiShape gorenstein_betti_shape(int s, int64_t beta)
{
    if (s < 2)
        throw InputError("gorenstein_betti_shape: need s >= 2");
    if (beta < 0 || (s % 2 == 0 && beta != 0))
        throw InputError("gorenstein_betti_shape: invalid beta");
    BettiShape sh;
    const int t = ceil_half_succ(s);
    sh.t = t;
    sh.beta = beta;
    auto put = [](std::map<int, int64_t>& m, int j, int64_t v) {
        if (v != 0)
            m[j] = v;
    };
    if (s % 2 == 1) {
        put(sh.b1, t, t + 1);
        put(sh.b1, t + 1, beta);
        put(sh.b2, t + 1, beta);
        put(sh.b2, t + 2, t + 1);
    }
    else {
        put(sh.b1, t, 2 * t + 1);
        put(sh.b2, t + 1, 2 * t + 1);
    }
    sh.b3[s + 3] = 1;
    return sh;
}

std::optional<std::pair<int64_t, TorClass>> special_m(int s1, int s)
{
    if (s1 == 3 && s == 3)
        return std::make_pair<int64_t>(8, TorClass::golod());
    if (s1 == 7 && s == 9)
        return std::make_pair<int64_t>(15, TorClass::golod());
    if (s1 == 6 && s == 7)
        return std::make_pair<int64_t>(12, TorClass::golod());
    for (int64_t k = 2; k * (k + 1) - 1 <= s; ++k)
        if (s == k * (k + 1) - 1 && 2LL * s1 == k * (k + 3) - 2)
            return std::make_pair(1 + k * (k + 2), TorClass::G(1));
    for (int64_t k = 4; k * (k + 1) - 4 <= 2LL * s; ++k)
        if (2LL * s == k * (k + 1) - 4 && 4LL * s1 == k * (k + 5) - 4)
            return std::make_pair(k * (k + 3) / 2, TorClass::golod());
    return std::nullopt;
}

GeneralEBounds general_e_bounds(int e, int s, int s1)
{
    if (e < 3)
        throw InputError("general_e_bounds: need e >= 3");
    GeneralEBounds out{};
    out.e = e;
    out.s = s;
    out.s1 = s1;
    const int t = s >= 2 ? ceil_half_succ(s) : s + 1;
    out.t = t;
    out.ht_difference = hq(e, t) - hq(e, s - t);

    const bool even = s % 2 == 0;
    int64_t rhs = binom(e - 2 + t, e - 2) + (even ? binom(e - 3 + t, e - 2) : 0);
    out.degree_equal = binom(e - 1 + s1 - t, e - 1) < rhs;

    out.level_golod_bound =
        2.0 * e - 3 + (even ? std::sqrt(8.0 * (e - 1) * (e - 1) + 1) : 0.0);
    if (even) {
        int64_t lhs = s - 2LL * e + 3;
        out.level_golod = lhs >= 0 && lhs * lhs >= 8LL * (e - 1) * (e - 1) + 1;
    }
    else {
        out.level_golod = s >= 2 * e - 3;
    }

    if (even) {
        out.socle_gap_bound = (s + 1 - std::sqrt(8.0 * s + 25)) / 2.0;
        int64_t lhs = 2LL * s1 - s + 1;
        out.socle_gap_golod = lhs >= 0 && lhs * lhs >= 8LL * s + 25;
    }
    else {
        out.socle_gap_bound = (s + 2 - std::sqrt(4.0 * s + 13)) / 2.0;
        int64_t lhs = 2LL * s1 - s + 2;
        out.socle_gap_golod = lhs >= 0 && lhs * lhs >= 4LL * s + 13;
    }
    return out;
}

}  // namespace torspect
