#include <doctest.h>

#include <cmath>
#include <random>
#include <secscore/cvss.hpp>
#include <secscore/errors.hpp>
#include <secscore/exploit_model.hpp>

#include "helpers.hpp"

using namespace secscore;

namespace {

const AlParams kGeneral{-2.857e-01, 2.179e+01, 9.075e-01};
const AlParams kPhp{-4.286e-01, 1.456e+01, 1.128e+00};

}  // namespace

TEST_SUITE("exploit_model") {

TEST_CASE("maturity bounds validation") {
    CHECK(valid(MaturityBounds{}));
    CHECK(valid(MaturityBounds{0.8, 0.95}));
    CHECK_FALSE(valid(MaturityBounds{0.0, 1.0}));
    CHECK_FALSE(valid(MaturityBounds{-0.1, 1.0}));
    CHECK_FALSE(valid(MaturityBounds{0.96, 0.91}));
    CHECK_FALSE(valid(MaturityBounds{0.5, 1.1}));
}

TEST_CASE("exploit maturity frozen value and bounds") {
    const MaturityBounds b{};
    CHECK(close_rel(exploit_maturity(0.0, kGeneral, b), 0.99982631850231967));
    CHECK(close_rel(exploit_maturity(-1000.0, kGeneral, b), 0.91, 1e-12));
    CHECK(close_rel(exploit_maturity(1000.0, kGeneral, b), 1.0, 1e-15));
    const MaturityBounds narrow{0.8, 0.95};
    CHECK(close_rel(exploit_maturity(-1000.0, kGeneral, narrow), 0.8, 1e-12));
    CHECK(close_rel(exploit_maturity(1000.0, kGeneral, narrow), 0.95, 1e-15));
}

TEST_CASE("maturity never leaves its bounds and never decreases") {
    const MaturityBounds b{};
    double prev = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = -50.0 + 0.3 * i;
        const double e = exploit_maturity(t, kGeneral, b);
        CHECK(e >= b.e_min);
        CHECK(e <= b.e_max);
        CHECK(e >= prev);
        prev = e;
    }
}

TEST_CASE("temporal secscore composition") {
    const MaturityBounds b{};
    // roundup(7.5 * 0.96 * 0.97) = roundup(6.984) = 7.0
    const double st = secscore_temporal(7.5, 0.96, 0.97, 0.0, kGeneral, b);
    CHECK(close_rel(st, 7.0 * exploit_maturity(0.0, kGeneral, b)));
    CHECK(secscore_temporal_pinned(7.5, 0.96, 0.97, b) == 7.0);
    CHECK(secscore_temporal_pinned(9.8, 1.0, 1.0, MaturityBounds{0.8, 0.95}) ==
          doctest::Approx(9.8 * 0.95));
}

TEST_CASE("temporal secscore stays inside the rounded temporal envelope") {
    const MaturityBounds b{};
    for (int tenth = 1; tenth <= 100; ++tenth) {
        const double base = tenth / 10.0;
        for (double rc : {1.0, 0.96, 0.92}) {
            for (double rl : {1.0, 0.97, 0.95, 0.9}) {
                const double high = roundup(base * 1.0 * rc * rl);
                const double unproven = roundup(base * 0.91 * rc * rl);
                for (double t : {-20.0, -1.0, 0.0, 1.0, 4.0, 52.0}) {
                    const double st = secscore_temporal(base, rc, rl, t, kGeneral, b);
                    CHECK(st <= high);
                    // the unrounded maturity factor can undercut the rounded
                    // E=0.91 product by strictly less than one rounding step
                    CHECK(st > unproven - 0.1 - 1e-9);
                }
            }
        }
    }
}

TEST_CASE("environmental secscore matches the official shape when pinned") {
    const auto v = parse_vector(
        "CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H/RL:W/RC:R/CR:L/MC:N/MAV:A");
    const double official = environmental_score(v).environmental;
    CHECK(secscore_environmental(v, 0.0, kGeneral, MaturityBounds{}, true) == official);
    // unpinned scales the same rounded core by the maturity factor
    const double unpinned = secscore_environmental(v, 0.0, kGeneral, MaturityBounds{});
    CHECK(close_rel(unpinned, official * exploit_maturity(0.0, kGeneral, MaturityBounds{})));
}

TEST_CASE("environmental secscore is zero when modified impact vanishes") {
    const auto v = parse_vector("CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H/MC:N/MI:N/MA:N");
    CHECK(secscore_environmental(v, 0.0, kGeneral, MaturityBounds{}) == 0.0);
}

TEST_CASE("v4 maturity floor") {
    CHECK(close_rel(v4_e_min({7.0, 6.3}), 0.9));
    CHECK_THROWS_AS(v4_e_min({0.0, 5.0}), DegenerateScore);
    CHECK(close_rel(secscore_v4({7.0, 6.3}, 1000.0, kGeneral), 7.0, 1e-12));
    CHECK(close_rel(secscore_v4({7.0, 6.3}, -1000.0, kGeneral), 6.3, 1e-9));
    double prev = 0.0;
    for (double t = -30.0; t <= 30.0; t += 0.5) {
        const double s = secscore_v4({7.0, 6.3}, t, kGeneral);
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("maturity keys order by cdf with pinning on top") {
    // same parameters: later time orders higher
    CHECK(compare_maturity_exact(1.0, kGeneral, false, 0.0, kGeneral, false) == 1);
    CHECK(compare_maturity_exact(0.0, kGeneral, false, 1.0, kGeneral, false) == -1);
    CHECK(compare_maturity_exact(1.0, kGeneral, false, 1.0, kGeneral, false) == 0);
    // across parameters: php is ahead of general at publication time
    CHECK(compare_maturity_exact(0.0, kGeneral, false, 0.0, kPhp, false) == -1);
    // pinned outranks any unpinned maturity and ties with pinned
    CHECK(compare_maturity_exact(-50.0, kGeneral, true, 1000.0, kGeneral, false) == 1);
    CHECK(compare_maturity_exact(1000.0, kGeneral, false, -50.0, kGeneral, true) == -1);
    CHECK(compare_maturity_exact(-50.0, kGeneral, true, 3.0, kPhp, true) == 0);
}

TEST_CASE("maturity keys resolve where the plain cdf saturates") {
    // right tail: both cdfs are exactly 1.0 in doubles, the time component decides
    REQUIRE(al_cdf(100.0, kGeneral) == 1.0);
    REQUIRE(al_cdf(101.0, kGeneral) == 1.0);
    CHECK(compare_maturity_exact(101.0, kGeneral, false, 100.0, kGeneral, false) == 1);
    // left tail: both cdfs underflow to 0.0, the log cdf still separates them
    REQUIRE(al_cdf(-40.0, kGeneral) == 0.0);
    REQUIRE(al_cdf(-39.0, kGeneral) == 0.0);
    CHECK(compare_maturity_exact(-39.0, kGeneral, false, -40.0, kGeneral, false) == 1);
}

TEST_CASE("maturity comparison is antisymmetric and transitive") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> t_d(-60.0, 120.0);
    std::bernoulli_distribution pin_d(0.2);
    std::bernoulli_distribution par_d(0.5);
    struct Item {
        double t;
        AlParams p;
        bool pinned;
    };
    std::vector<Item> items;
    for (int i = 0; i < 60; ++i) {
        items.push_back({t_d(rng), par_d(rng) ? kGeneral : kPhp, pin_d(rng)});
    }
    const auto cmp = [](const Item& a, const Item& b) {
        return compare_maturity_exact(a.t, a.p, a.pinned, b.t, b.p, b.pinned);
    };
    for (const Item& a : items) {
        for (const Item& b : items) {
            CHECK(cmp(a, b) == -cmp(b, a));
            for (const Item& c : items) {
                if (cmp(a, b) > 0 && cmp(b, c) > 0) CHECK(cmp(a, c) > 0);
                if (cmp(a, b) == 0 && cmp(b, c) == 0) CHECK(cmp(a, c) == 0);
            }
        }
    }
}

}
