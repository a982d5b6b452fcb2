#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "torspect/errors.hpp"
#include "torspect/predictor.hpp"

using namespace torspect;
using namespace torspect::testing;

TEST_SUITE("predictor")
{
    TEST_CASE("gorenstein profiles")
    {
        GorensteinProfile g33 = gorenstein_profile(3, 3);
        CHECK(g33.h == hvec({1, 3, 3, 1}));
        CHECK(g33.t == 2);
        GorensteinProfile g36 = gorenstein_profile(3, 6);
        CHECK(g36.h == hvec({1, 3, 6, 10, 6, 3, 1}));
        CHECK(g36.t == 4);
        GorensteinProfile g32 = gorenstein_profile(3, 2);
        CHECK(g32.h == hvec({1, 3, 1}));
        CHECK(g32.t == 2);
    }

    TEST_CASE("type-2 profiles")
    {
        Type2Profile p44 = type2_profile(4, 4);
        CHECK(p44.h == hvec({1, 3, 6, 6, 2}));
        CHECK(p44.t == 3);
        Type2Profile p77 = type2_profile(7, 7);
        CHECK(p77.h == hvec({1, 3, 6, 10, 15, 12, 6, 2}));
        CHECK(p77.t == 5);
        Type2Profile p59 = type2_profile(5, 9);
        CHECK(p59.h == hvec({1, 3, 6, 10, 15, 16, 10, 6, 3, 1}));
        CHECK(p59.t == 5);
        CHECK_THROWS_AS(type2_profile(2, 4), InputError);
        CHECK_THROWS_AS(type2_profile(3, 2), InputError);
    }

    TEST_CASE("golod by degree")
    {
        CHECK(golod_by_degree(3, 3));
        CHECK_FALSE(golod_by_degree(4, 3));
        CHECK(golod_by_degree(1, 2));
    }

    TEST_CASE("thresholds")
    {
        CHECK(thresholds(9).n == doctest::Approx(7.0));  // sqrt(49) = 7 exactly
        CHECK(s1_ge_N(7, 9));
        CHECK_FALSE(s1_ge_N(6, 9));

        CHECK(thresholds(5).n == doctest::Approx((3 + std::sqrt(33.0)) / 2));
        CHECK_FALSE(s1_ge_N(3, 5));
        CHECK_FALSE(s1_ge_N(4, 5));
        CHECK(s1_ge_N(5, 5));

        CHECK(thresholds(6).n == doctest::Approx(2 + std::sqrt(10.0)));
        CHECK_FALSE(s1_ge_N(5, 6));
        CHECK(s1_ge_N(6, 6));

        CHECK_THROWS_AS(thresholds(3), InputError);
    }

    TEST_CASE("generic classes across the reference range")
    {
        struct Row {
            int s1, s;
            const char* cls;
            int64_t m;
        };
        // Generic class and m columns for every socle polynomial with s <= 10.
        static const Row table[] = {
            {2, 2, "H(3,2)", 4},  {2, 3, "B", 5},        {3, 3, "H(0,0)", 8},
            {3, 4, "G(3)", 6},    {4, 4, "H(0,0)", 5},   {3, 5, "G(3)", 6},
            {4, 5, "G(1)", 9},    {5, 5, "H(0,0)", 9},   {4, 6, "G(5)", 8},
            {5, 6, "G(1)", 6},    {6, 6, "H(0,0)", 9},   {4, 7, "G(4)", 7},
            {5, 7, "G(2)", 10},   {6, 7, "H(0,0)", 12},  {7, 7, "H(0,0)", 9},
            {5, 8, "G(7)", 10},   {6, 8, "G(3)", 8},     {7, 8, "H(0,0)", 9},
            {8, 8, "H(0,0)", 14}, {5, 9, "G(5)", 8},     {6, 9, "G(3)", 11},
            {7, 9, "H(0,0)", 15}, {8, 9, "H(0,0)", 12},  {9, 9, "H(0,0)", 8},
            {6, 10, "G(9)", 12},  {7, 10, "G(5)", 10},   {8, 10, "H(0,0)", 9},
            {9, 10, "H(0,0)", 14}, {10, 10, "H(0,0)", 16},
        };
        for (const Row& row : table) {
            auto [cls, m] = generic_class(row.s1, row.s);
            CHECK_MESSAGE(cls == TorClass::parse(row.cls),
                          "(s1,s)=(", row.s1, ",", row.s, ") got ", cls.str());
            CHECK_MESSAGE(m == row.m, "(s1,s)=(", row.s1, ",", row.s, ") got m=", m);
        }
    }

    TEST_CASE("allowed classes")
    {
        CHECK(allowed_classes(2, 3, 5) == std::set<TorClass>{TorClass::B()});
        CHECK(allowed_classes(2, 3, 6) == std::set<TorClass>{TorClass::G(3)});
        CHECK(allowed_classes(4, 4, 7) ==
              std::set<TorClass>{TorClass::golod(), TorClass::G(1), TorClass::G(2),
                                 TorClass::H(0, 2)});
        CHECK(allowed_classes(8, 8, 14) == std::set<TorClass>{TorClass::golod()});
        CHECK(allowed_classes(3, 3, 8) == std::set<TorClass>{TorClass::golod()});
        // even, s1 = s/2 + 1: exactly G(m-3)
        CHECK(allowed_classes(4, 6, 8) == std::set<TorClass>{TorClass::G(5)});
        // even, s/2+1 < s1 < s: Golod or G(r) in the stated band
        CHECK(allowed_classes(6, 8, 8) ==
              std::set<TorClass>{TorClass::golod(), TorClass::G(1), TorClass::G(2),
                                 TorClass::G(3)});
        CHECK_THROWS_AS(allowed_classes(2, 4, 5), InputError);
    }

    TEST_CASE("generic class is always allowed")
    {
        for (int s = 2; s <= 20; ++s) {
            for (int s1 = 2; s1 <= s; ++s1) {
                if (s >= 2 * s1)
                    continue;
                auto [cls, m] = generic_class(s1, s);
                if (m < 3)
                    continue;
                auto allowed = allowed_classes(s1, s, m);
                CHECK_MESSAGE(allowed.count(cls) == 1, "(s1,s)=(", s1, ",", s, ") class ",
                              cls.str(), " m=", m);
            }
        }
    }

    TEST_CASE("betti shapes")
    {
        BettiShape s45 = betti_shape(4, 5, 0);
        CHECK(s45.b1 == std::map<int, int64_t>{{3, 1}, {4, 8}});
        CHECK(s45.b2 == std::map<int, int64_t>{{5, 10}});
        CHECK(s45.b3 == std::map<int, int64_t>{{7, 1}, {8, 1}});

        // Rank balance forces the degree-(t+2) column of the even shapes.
        BettiShape s66 = betti_shape(6, 6, 6);
        CHECK(s66.b1 == std::map<int, int64_t>{{4, 3}, {5, 6}});
        CHECK(s66.b2 == std::map<int, int64_t>{{6, 10}});
        CHECK(s66.b3 == std::map<int, int64_t>{{9, 2}});

        BettiShape s44 = betti_shape(4, 4, 1);
        CHECK(s44.b1 == std::map<int, int64_t>{{3, 4}, {4, 1}});
        CHECK(s44.b2 == std::map<int, int64_t>{{5, 6}});
        CHECK(s44.b3 == std::map<int, int64_t>{{7, 2}});

        CHECK_THROWS_AS(betti_shape(3, 3, 0), InputError);   // Golod regime, no shape
        CHECK_THROWS_AS(betti_shape(6, 6, 5), InputError);   // beta below the bound
        CHECK_THROWS_AS(betti_shape(4, 5, -1), InputError);

        // rank balance on every applicable shape
        for (int s = 2; s <= 12; ++s) {
            for (int s1 = 2; s1 <= s; ++s1) {
                if (s >= 2 * s1)
                    continue;
                Type2Profile pr = type2_profile(s1, s);
                if (!pr.shape_applicable)
                    continue;
                BettiShape sh = betti_shape(s1, s, pr.generic_beta + 2);
                int64_t b1 = 0, b2 = 0, b3 = 0;
                for (auto& [j, v] : sh.b1)
                    b1 += v;
                for (auto& [j, v] : sh.b2)
                    b2 += v;
                for (auto& [j, v] : sh.b3)
                    b3 += v;
                CHECK(1 - b1 + b2 - b3 == 0);
            }
        }
    }

    TEST_CASE("profile relations")
    {
        for (int s = 2; s <= 20; ++s) {
            for (int s1 = 2; s1 <= s; ++s1) {
                if (s >= 2 * s1)
                    continue;
                Type2Profile pr = type2_profile(s1, s);
                CHECK(pr.f0 - pr.f1 + pr.f2 - 1 == 0);
                CHECK(2 <= pr.t);
                CHECK(pr.t <= s1);
                // Mayer-Vietoris against the two Gorenstein profiles and the
                // join formula max{0, h1 + h2 - hq}
                GorensteinProfile g1 = gorenstein_profile(3, s1);
                GorensteinProfile g2 = gorenstein_profile(3, s);
                for (int i = 0; i <= s + 1; ++i) {
                    auto at = [&](const std::vector<int64_t>& v) {
                        return i < static_cast<int>(v.size()) ? v[i] : 0;
                    };
                    int64_t joined = std::max<int64_t>(0, at(g1.h) + at(g2.h) - hq(3, i));
                    CHECK(at(pr.h) + joined == at(g1.h) + at(g2.h));
                }
                // degree test matches the threshold comparison and the
                // socle-gap inequality
                bool golod = golod_by_degree(s, pr.t);
                CHECK(golod == general_e_bounds(3, s, s1).socle_gap_golod);
                if (s >= 4) {
                    if (s % 2 == 1)
                        CHECK(golod == s1_ge_N(s1, s));
                    else
                        CHECK(golod == s1_ge_N2(s1, s));
                }
                // Golod rings predicted exactly when the shape is absent
                CHECK(pr.shape_applicable == !golod);
            }
        }
    }

    TEST_CASE("special m cases")
    {
        auto m45 = special_m(4, 5);
        REQUIRE(m45.has_value());
        CHECK(m45->first == 9);
        CHECK(m45->second == TorClass::G(1));

        auto m79 = special_m(7, 9);
        REQUIRE(m79.has_value());
        CHECK(m79->first == 15);
        CHECK(m79->second == TorClass::golod());

        auto m88 = special_m(8, 8);
        REQUIRE(m88.has_value());
        CHECK(m88->first == 14);

        auto m33 = special_m(3, 3);
        REQUIRE(m33.has_value());
        CHECK(m33->first == 8);

        auto m67 = special_m(6, 7);
        REQUIRE(m67.has_value());
        CHECK(m67->first == 12);

        CHECK_FALSE(special_m(5, 6).has_value());
        CHECK_FALSE(special_m(2, 2).has_value());

        // whenever defined, it matches the generic prediction
        for (int s = 2; s <= 20; ++s)
            for (int s1 = 2; s1 <= s; ++s1) {
                if (s >= 2 * s1)
                    continue;
                if (auto sp = special_m(s1, s)) {
                    auto [cls, m] = generic_class(s1, s);
                    CHECK(sp->first == m);
                    CHECK(sp->second == cls);
                }
            }
    }

    TEST_CASE("general embedding dimension diagnostics")
    {
        // odd s at e = 3: top-degree drop is t+1
        for (int s : {3, 5, 7, 9}) {
            GeneralEBounds gb = general_e_bounds(3, s, s);
            CHECK(gb.ht_difference == gb.t + 1);
        }
        GeneralEBounds g77 = general_e_bounds(3, 7, 7);
        CHECK(g77.socle_gap_bound == doctest::Approx((9 - std::sqrt(41.0)) / 2));
        CHECK(g77.socle_gap_golod);  // s - s1 = 0 is inside the Golod gap

        // level odd rings are Golod from s >= 2e-3 = 3 onwards
        for (int s : {3, 5, 9, 13}) {
            GeneralEBounds gb = general_e_bounds(3, s, s);
            CHECK(gb.level_golod);
        }
        GeneralEBounds g8 = general_e_bounds(3, 8, 8);
        CHECK(g8.level_golod_bound == doctest::Approx(3 + std::sqrt(33.0)));
        CHECK_FALSE(general_e_bounds(3, 8, 8).level_golod);   // 8 < 3 + sqrt(33)
        CHECK(general_e_bounds(3, 10, 10).level_golod);       // 10 > 3 + sqrt(33)
        CHECK_THROWS_AS(general_e_bounds(2, 5, 5), InputError);
    }

    TEST_CASE("gorenstein betti shapes")
    {
        BettiShape even = gorenstein_betti_shape(4, 0);
        CHECK(even.b1 == std::map<int, int64_t>{{3, 7}});
        CHECK(even.b2 == std::map<int, int64_t>{{4, 7}});
        CHECK(even.b3 == std::map<int, int64_t>{{7, 1}});
        BettiShape odd = gorenstein_betti_shape(3, 2);
        CHECK(odd.b1 == std::map<int, int64_t>{{2, 3}, {3, 2}});
        CHECK(odd.b2 == std::map<int, int64_t>{{3, 2}, {4, 3}});
        CHECK_THROWS_AS(gorenstein_betti_shape(4, 1), InputError);
    }
}
