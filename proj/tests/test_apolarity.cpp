#include <doctest.h>

#include "helpers.hpp"
#include "torspect/apolarity.hpp"
#include "torspect/errors.hpp"

using namespace torspect;
using namespace torspect::testing;

TEST_SUITE("apolarity")
{
    TEST_CASE("monomial dual form is a degenerate seed")
    {
        Fp fp(32003);
        for (int s : {3, 5}) {
            DualForm F;
            F.degree = s;
            F.coeffs.assign(MonomialBasis::get(s).size(), 0);
            F.coeffs[MonomialBasis::get(s).index(s, 0, 0)] = 1;  // x^s
            GradedIdeal I = annihilator(fp, F, s + 2);
            CHECK(ring_type(I) == 1);
            CHECK(socle_degree(I) == s);
            CHECK(initial_degree(I) == 1);  // not embedded: y and z annihilate x^s
            CHECK(hilbert(I) == std::vector<int64_t>(s + 1, 1));
        }
    }

    TEST_CASE("generic small-degree annihilators")
    {
        Fp fp(32003);
        Rng rng(11);
        DualForm f2 = random_dual_form(2, fp, rng);
        CHECK(hilbert(annihilator(fp, f2, 4)) == hvec({1, 3, 1}));
        DualForm f3 = random_dual_form(3, fp, rng);
        CHECK(hilbert(annihilator(fp, f3, 5)) == hvec({1, 3, 3, 1}));

        DualForm zero;
        zero.degree = 2;
        zero.coeffs.assign(6, 0);
        CHECK_THROWS_AS(annihilator(fp, zero, 4), InputError);
    }

    TEST_CASE("random compressed Gorenstein draws")
    {
        Fp fp(32003);
        Rng rng(5);
        auto d4 = random_compressed_gorenstein(4, fp, rng);
        CHECK(hilbert(d4.ideal) == hvec({1, 3, 6, 3, 1}));
        CHECK(initial_degree(d4.ideal) == 3);
        auto d5 = random_compressed_gorenstein(5, fp, rng);
        CHECK(hilbert(d5.ideal) == hvec({1, 3, 6, 6, 3, 1}));
        CHECK(initial_degree(d5.ideal) == 3);
        auto d2 = random_compressed_gorenstein(2, fp, rng);
        CHECK(hilbert(d2.ideal) == hvec({1, 3, 1}));

        // Gorenstein by construction, socle chi^s.
        for (int s = 2; s <= 7; ++s) {
            auto d = random_compressed_gorenstein(s, fp, rng);
            SoclePolynomial soc = socle_polynomial(d.ideal);
            CHECK(soc.type() == 1);
            CHECK(soc.top_degree() == s);
            CHECK(is_level(d.ideal));
        }
    }

    TEST_CASE("type-2 pair draws")
    {
        Fp fp(32003);
        Rng rng(17);
        Type2Pair p22 = random_type2_pair(2, 2, fp, rng);
        CHECK(hilbert(p22.meet) == hvec({1, 3, 2}));
        SoclePolynomial soc = socle_polynomial(p22.meet);
        CHECK(soc.coeff == std::vector<int64_t>{0, 0, 2});

        Type2Pair p56 = random_type2_pair(5, 6, fp, rng);
        CHECK(hilbert(p56.meet) == hvec({1, 3, 6, 10, 9, 4, 1}));

        CHECK_THROWS_AS(random_type2_pair(2, 4, fp, rng), InputError);
        CHECK_THROWS_AS(random_type2_pair(1, 1, fp, rng), InputError);
    }

    TEST_CASE("pair invariants over random draws")
    {
        Fp fp(32003);
        Rng rng(23);
        for (auto [s1, s] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {4, 6}}) {
            Type2Pair pair = random_type2_pair(s1, s, fp, rng);
            // Mayer-Vietoris
            auto hm = hilbert(pair.meet);
            auto hj = hilbert(pair.join);
            auto h1 = hilbert(pair.i1);
            auto h2 = hilbert(pair.i2);
            for (size_t i = 0; i < hm.size() + 2; ++i) {
                auto get = [&](const std::vector<int64_t>& v) {
                    return i < v.size() ? v[i] : 0;
                };
                CHECK(get(hm) + get(hj) == get(h1) + get(h2));
            }
            // socle polynomial chi^s1 + chi^s
            SoclePolynomial soc = socle_polynomial(pair.meet);
            CHECK(soc.type() == 2);
            CHECK(soc.low_degree() == s1);
            CHECK(soc.top_degree() == s);
            // a = s1 - t2 + 1 with t2 = ceil((s+1)/2)
            CHECK(compute_a(pair.i1, pair.i2) == s1 - (s + 2) / 2 + 1);
            CHECK(compute_b(pair.i1, pair.i2) == s1);
            // 2 <= t1 <= t2 <= t <= s1 <= s < 2 s1
            int t1 = initial_degree(pair.i1);
            int t2 = initial_degree(pair.i2);
            int t = initial_degree(pair.meet);
            CHECK(2 <= t1);
            CHECK(t1 <= t2);
            CHECK(t2 <= t);
            CHECK(t <= s1);
            // join equals I1 + q^t when ceil((s+1)/2) = t
            if ((s + 2) / 2 == t)
                CHECK(equals(pair.join, add_power(pair.i1.with_truncation(s + 2), t)));
        }
    }

    TEST_CASE("type 2 exactly when neither Gorenstein ideal contains the other")
    {
        Fp fp(32003);
        Rng rng(61);
        // Ann(F) sits inside Ann(g o F), so the pair below is nested.
        DualForm F = random_dual_form(5, fp, rng);
        const MonomialBasis& b1 = MonomialBasis::get(1);
        std::vector<uint32_t> x(b1.size(), 0);
        x[b1.index(1, 0, 0)] = 1;
        DualForm G{4, contract(fp, 1, x, 5, F.coeffs)};
        GradedIdeal big = annihilator(fp, F, 7);
        GradedIdeal small = annihilator(fp, G, 7);
        CHECK(ring_type(intersect(big, small)) == 1);
        CHECK(equals(intersect(big, small), big));

        // independent draws give type 2
        GradedIdeal other = random_compressed_gorenstein(5, fp, rng).ideal;
        CHECK(ring_type(intersect(other, small.with_truncation(7))) == 2);
    }

    TEST_CASE("join h-vector formula and level truncations")
    {
        Fp fp(32003);
        Rng rng(67);
        Type2Pair pair = random_type2_pair(4, 5, fp, rng);
        auto hj = hilbert(pair.join);
        auto h1 = hilbert(pair.i1);
        auto h2 = hilbert(pair.i2);
        for (int i = 0; i <= 6; ++i) {
            auto at = [&](const std::vector<int64_t>& v) {
                return i < static_cast<int>(v.size()) ? v[i] : 0;
            };
            CHECK(at(hj) == std::max<int64_t>(0, at(h1) + at(h2) - hq(3, i)));
        }

        // truncating a compressed Gorenstein ring at t <= i <= s is level of
        // socle degree i-1
        GradedIdeal I = random_compressed_gorenstein(5, fp, rng).ideal;
        int t = initial_degree(I);
        CHECK(t == 3);
        for (int i = t; i <= 5; ++i) {
            GradedIdeal J = add_power(I, i);
            CHECK(is_level(J));
            CHECK(socle_degree(J) == i - 1);
        }
    }

    TEST_CASE("first-draw acceptance rate at p = 101")
    {
        Fp fp(101);
        Rng rng(1234);
        int first = 0, total = 0;
        for (int s = 2; s <= 10; ++s) {
            for (int i = 0; i < 25; ++i) {
                auto d = random_compressed_gorenstein(s, fp, rng);
                ++total;
                if (d.draws == 1)
                    ++first;
            }
        }
        // genericity: acceptance on the first draw in at least 95% of trials
        CHECK(first * 100 >= total * 95);
    }

    TEST_CASE("tiny fields eventually fail loudly")
    {
        Fp fp(2);
        Rng rng(3);
        bool threw = false;
        try {
            for (int i = 0; i < 20; ++i)
                random_type2_pair(2, 2, fp, rng, 2);
        }
        catch (const GenericityError& e) {
            threw = true;
            CHECK(e.attempts == 2);
        }
        CHECK(threw);
    }
}
