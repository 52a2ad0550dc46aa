#include "fatcantor/intervals.hpp"

#include <doctest.h>

using fc::ClosedInterval;
using fc::IntervalFamily;
using fc::Rational;

namespace {

const fc::ParamSequence& seq16() {
    static fc::ParamSequence seq = fc::generate_params(16);
    return seq;
}

}  // namespace

TEST_CASE("interval width and translation") {
    ClosedInterval unit(Rational(0), Rational(1));
    CHECK(unit.width() == Rational(1));
    CHECK(ClosedInterval(Rational(0), Rational(1, 3)).width() == Rational(1, 3));
    CHECK(ClosedInterval(Rational(13, 96), Rational(19, 96)).width() == Rational(1, 16));

    ClosedInterval left(Rational(0), Rational(1, 3));
    CHECK(left.translated(Rational(2, 3)) == ClosedInterval(Rational(2, 3), Rational(1)));
    CHECK(left.translated(Rational(0)) == left);
    CHECK(ClosedInterval(Rational(13, 96), Rational(19, 96)).translated(Rational(2, 3)) ==
          ClosedInterval(Rational(77, 96), Rational(83, 96)));
    CHECK_THROWS_AS(ClosedInterval(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("level families at small depth") {
    IntervalFamily i1 = fc::build_intervals(seq16(), 1);
    REQUIRE(i1.members.size() == 1);
    CHECK(i1.members[0] == ClosedInterval(Rational(0), Rational(1)));

    IntervalFamily i2 = fc::build_intervals(seq16(), 2);
    REQUIRE(i2.members.size() == 2);
    CHECK(i2.members[0] == ClosedInterval(Rational(0), Rational(1, 3)));
    CHECK(i2.members[1] == ClosedInterval(Rational(2, 3), Rational(1)));

    IntervalFamily i3 = fc::build_intervals(seq16(), 3);
    REQUIRE(i3.members.size() == 4);
    CHECK(i3.members[0] == ClosedInterval(Rational(0), Rational(13, 96)));
    CHECK(i3.members[1] == ClosedInterval(Rational(19, 96), Rational(1, 3)));
    CHECK(i3.members[2] == ClosedInterval(Rational(2, 3), Rational(77, 96)));
    CHECK(i3.members[3] == ClosedInterval(Rational(83, 96), Rational(1)));
}

TEST_CASE("family structure holds at every level") {
    for (int k = 1; k <= 12; ++k) {
        IntervalFamily fam = fc::build_intervals(seq16(), k);
        CHECK(fam.members.size() == (std::size_t(1) << (k - 1)));
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
            CHECK(fam.members[i].width() == seq16().width(k));
            if (i > 0) CHECK(fam.members[i].lo > fam.members[i - 1].hi);
        }
        // mirror symmetry for k >= 2
        if (k >= 2) {
            for (const auto& iv : fam.members) {
                ClosedInterval mirror = iv.hi <= Rational(1, 3) ? iv.translated(Rational(2, 3))
                                                                : iv.translated(Rational(-2, 3));
                bool found = false;
                for (const auto& other : fam.members)
                    if (other == mirror) { found = true; break; }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("measures telescope by the removed gaps") {
    CHECK(fc::family_measure(fc::build_intervals(seq16(), 1)) == Rational(1));
    CHECK(fc::family_measure(fc::build_intervals(seq16(), 2)) == Rational(2, 3));
    CHECK(fc::family_measure(fc::build_intervals(seq16(), 3)) == Rational(13, 24));
    for (int k = 1; k < 14; ++k) {
        Rational drop = fc::family_measure(fc::build_intervals(seq16(), k)) -
                        fc::family_measure(fc::build_intervals(seq16(), k + 1));
        CHECK(drop == fc::pow2(k) * seq16().epsilon(k));
    }
    // closed form under the default chooser, confirmed against the sums
    for (int k = 2; k <= 14; ++k) {
        Rational want = Rational(2, 3) -
                        Rational(1, 6) * (Rational(1) - Rational(4).pow(-(k - 2)));
        CHECK(fc::family_measure(fc::build_intervals(seq16(), k)) == want);
    }
}

TEST_CASE("family_measure rejects overlapping members") {
    IntervalFamily bad;
    bad.members.emplace_back(Rational(0), Rational(1, 2));
    bad.members.emplace_back(Rational(1, 3), Rational(1));
    CHECK_THROWS_AS(fc::family_measure(bad), std::invalid_argument);
}

TEST_CASE("gap families") {
    CHECK(fc::gap_family(fc::build_intervals(seq16(), 1)).empty());

    auto g2 = fc::gap_family(fc::build_intervals(seq16(), 2));
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == fc::OpenInterval{Rational(1, 3), Rational(2, 3)});

    auto g3 = fc::gap_family(fc::build_intervals(seq16(), 3));
    REQUIRE(g3.size() == 3);
    CHECK(g3[0] == fc::OpenInterval{Rational(13, 96), Rational(19, 96)});
    CHECK(g3[1] == fc::OpenInterval{Rational(1, 3), Rational(2, 3)});
    CHECK(g3[2] == fc::OpenInterval{Rational(77, 96), Rational(83, 96)});

    for (int k = 1; k <= 10; ++k) {
        Rational total(0);
        for (const auto& g : fc::gap_family(fc::build_intervals(seq16(), k))) total += g.width();
        CHECK(total == Rational(1) - fc::family_measure(fc::build_intervals(seq16(), k)));
    }
}

TEST_CASE("membership by binary search") {
    auto i3 = fc::build_intervals(seq16(), 3);
    CHECK(fc::family_contains(i3, Rational(0)));
    CHECK(fc::family_contains(i3, Rational(13, 96)));   // gap endpoints count as inside
    CHECK_FALSE(fc::family_contains(i3, Rational(1, 6)));
    CHECK_FALSE(fc::family_contains(i3, Rational(1, 2)));
    CHECK(fc::family_contains(i3, Rational(1)));

    CHECK(fc::ejection_level(seq16(), Rational(1, 2)) == 2);
    CHECK(fc::ejection_level(seq16(), Rational(1, 6)) == 3);
    CHECK_FALSE(fc::ejection_level(seq16(), Rational(0)).has_value());
    CHECK_FALSE(fc::ejection_level(seq16(), Rational(1, 3)).has_value());
}

TEST_CASE("nowhere-density witnesses") {
    SUBCASE("window inside the central gap") {
        auto w = fc::nowhere_dense_witness(seq16(), Rational(1, 2), Rational(1, 100));
        CHECK(w.level == 2);
        CHECK(w.gap == fc::OpenInterval{Rational(49, 100), Rational(51, 100)});
    }
    SUBCASE("window overlapping the left half") {
        auto w = fc::nowhere_dense_witness(seq16(), Rational(1, 6), Rational(1, 4));
        CHECK(w.level == 3);
        CHECK(w.gap == fc::OpenInterval{Rational(13, 96), Rational(19, 96)});
    }
    SUBCASE("the full unit window sees the central gap") {
        auto w = fc::nowhere_dense_witness(seq16(), Rational(1, 2), Rational(1, 2));
        CHECK(w.level == 2);
        CHECK(w.gap == fc::OpenInterval{Rational(1, 3), Rational(2, 3)});
    }
    SUBCASE("returned gap always fits the window and misses the family") {
        auto w = fc::nowhere_dense_witness(seq16(), Rational(1, 5), Rational(1, 50));
        CHECK(w.gap.lo >= Rational(1, 5) - Rational(1, 50));
        CHECK(w.gap.hi <= Rational(1, 5) + Rational(1, 50));
        auto fam = fc::build_intervals(seq16(), w.level);
        Rational mid = (w.gap.lo + w.gap.hi) / Rational(2);
        CHECK_FALSE(fc::family_contains(fam, mid));
    }
    SUBCASE("shallow sequences run out of depth") {
        auto shallow = fc::generate_params(2);
        CHECK_THROWS_AS(fc::nowhere_dense_witness(shallow, Rational(1, 6), Rational(1, 1000)),
                        std::runtime_error);
    }
}
