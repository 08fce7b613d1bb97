#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcert/catalog.hpp"
#include "seqcert/errors.hpp"
#include "seqcert/log_behavior.hpp"

#include <random>

using namespace seqcert;

namespace {

std::vector<BigRat> rats(std::initializer_list<long> xs) {
    std::vector<BigRat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<BigRat> random_positive_sequence(std::mt19937& rng, std::size_t len) {
    std::uniform_int_distribution<long> num(1, 40), den(1, 12);
    std::vector<BigRat> out;
    for (std::size_t i = 0; i < len; ++i) out.emplace_back(num(rng), den(rng));
    return out;
}

} // namespace

TEST_CASE("apply_R") {
    auto r = apply_R(rats({1, 2, 6, 20}), 0);
    CHECK(r == std::vector<BigRat>{BigRat(2), BigRat(3), BigRat(10, 3)});
    // geometric sequence maps to a constant ratio list
    std::vector<BigRat> geo;
    BigRat v(1);
    for (int i = 0; i < 6; ++i) { geo.push_back(v); v = v * BigRat(3, 2); }
    for (const auto& x : apply_R(geo, 0)) CHECK(x == BigRat(3, 2));
    CHECK_THROWS_AS(apply_R(rats({1, 0, 1}), 0), NonPositiveTerm);
    try {
        apply_R(rats({1, 0, 1}), 0);
    } catch (const NonPositiveTerm& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("log-convexity and log-concavity") {
    auto d = generate_terms(catalog_lookup("derangement"), 41);
    std::vector<BigRat> d2(d.begin() + 2, d.end());  // d_2..d_40, all positive
    CHECK(check_log_convex(d2, 2, false).holds);

    std::vector<BigRat> cst(5, BigRat(7));
    CHECK(check_log_convex(cst, 0, false).holds);
    CHECK(check_log_concave(cst, 0, false).holds);
    auto strict = check_log_convex(cst, 0, true);
    CHECK_FALSE(strict.holds);
    REQUIRE(strict.first_violation.has_value());
    CHECK(strict.first_violation->lhs == strict.first_violation->rhs);

    auto oc = check_log_concave(rats({1, 2, 3}), 0, false);
    CHECK(oc.holds);  // 1*3 <= 4
    auto ocv = check_log_convex(rats({1, 2, 3}), 0, false);
    CHECK_FALSE(ocv.holds);
    REQUIRE(ocv.first_violation.has_value());
    CHECK(ocv.first_violation->index == 1);
    CHECK(ocv.first_violation->lhs == BigRat(3));
    CHECK(ocv.first_violation->rhs == BigRat(4));

    CHECK_THROWS_AS(check_log_convex(rats({1, 2}), 0, false), TooFewTerms);
    CHECK_THROWS_AS(check_log_convex(rats({1, -1, 2}), 0, false), NonPositiveTerm);
}

TEST_CASE("degree-2 product form: published ranges") {
    auto domb = generate_terms(catalog_lookup("domb"), 184);
    CHECK(check_ratio_log_convex(domb, 0, 2, true).holds);  // the published [0..181] claim

    auto d = generate_terms(catalog_lookup("derangement"), 160);
    std::vector<BigRat> d2(d.begin() + 2, d.end());
    // true onset is 8: P(n) <= 0 at n in {3,5,7} (an often-quoted start of 4 is
    // refuted by exact arithmetic)
    CHECK(check_ratio_log_convex(d2, 2, 8, true).holds);
    auto at4 = check_ratio_log_convex(d2, 2, 4, true);
    CHECK_FALSE(at4.holds);
    REQUIRE(at4.first_violation.has_value());
    CHECK(at4.first_violation->index == 5);

    // geometric: equality everywhere
    std::vector<BigRat> geo;
    BigRat v(1);
    for (int i = 0; i < 9; ++i) { geo.push_back(v); v = v * BigRat(5, 3); }
    CHECK(check_ratio_log_convex(geo, 0, 2, false).holds);
    CHECK_FALSE(check_ratio_log_convex(geo, 0, 2, true).holds);

    CHECK_THROWS_AS(check_ratio_log_convex(rats({1, 2, 3, 4}), 0, 2, true), TooFewTerms);
}

TEST_CASE("degree-1 product form (ratio log-concavity)") {
    auto d = generate_terms(catalog_lookup("derangement"), 110);
    std::vector<BigRat> d2(d.begin() + 2, d.end());
    CHECK(check_ratio_log_concave(d2, 2, 8, false).holds);  // published bound n >= 8
    CHECK(check_ratio_log_concave(d2, 2, 5, false).holds);  // empirically minimal start
    auto at4 = check_ratio_log_concave(d2, 2, 4, false);
    CHECK_FALSE(at4.holds);
    CHECK(at4.first_violation->index == 4);

    auto cat = generate_terms(catalog_lookup("catalan"), 62);
    CHECK(check_ratio_log_concave(cat, 0, 1, false).holds);

    std::vector<BigRat> geo;
    BigRat v(2);
    for (int i = 0; i < 8; ++i) { geo.push_back(v); v = v * BigRat(7, 4); }
    CHECK(check_ratio_log_concave(geo, 0, 1, false).holds);
    CHECK_FALSE(check_ratio_log_concave(geo, 0, 1, true).holds);
}

TEST_CASE("product form equals double-R log-convexity (identity, random)") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<std::size_t> len(5, 12);
        auto z = random_positive_sequence(rng, len(rng));
        auto rr = apply_R(apply_R(z, 0), 0);
        // product form at n  <=>  log-convexity of R^2 z at n-1
        auto prod = check_ratio_log_convex(z, 0, 2, false);
        auto conv = check_log_convex(rr, 0, false);
        CHECK(prod.holds == conv.holds);
        if (!prod.holds && !conv.holds)
            CHECK(prod.first_violation->index == conv.first_violation->index + 1);
    }
}

TEST_CASE("log-convex iff ratio sequence non-decreasing (random)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto z = random_positive_sequence(rng, 8);
        auto r = apply_R(z, 0);
        bool nondec = true;
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            if (r[i + 1] < r[i]) nondec = false;
        CHECK(check_log_convex(z, 0, false).holds == nondec);
    }
}

TEST_CASE("scaling and geometric invariance (random)") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> cnum(1, 9), cden(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        auto z = random_positive_sequence(rng, 9);
        BigRat c(cnum(rng), cden(rng)), ratio(cnum(rng), cden(rng));
        std::vector<BigRat> scaled, geom;
        BigRat g(1);
        for (const auto& t : z) {
            scaled.push_back(t * c);
            geom.push_back(t * c * g);
            g = g * ratio;
        }
        CHECK(check_log_convex(z, 0, false).holds == check_log_convex(scaled, 0, false).holds);
        CHECK(check_log_convex(z, 0, false).holds == check_log_convex(geom, 0, false).holds);
        CHECK(check_ratio_log_convex(z, 0, 2, false).holds ==
              check_ratio_log_convex(geom, 0, 2, false).holds);
    }
}

TEST_CASE("log_monotonic_order matches explicit level-by-level recomputation") {
    auto cb = generate_terms(catalog_lookup("central-binomial"), 60);
    auto levels = log_monotonic_order(cb, 0, 5, false);
    REQUIRE(levels.size() == 5);
    for (const auto& lv : levels) CHECK(lv.holds);
    // independent recomputation: materialize each R-level list
    std::vector<BigRat> cur = cb;
    for (int r = 0; r < 5; ++r) {
        auto oc = r % 2 == 0 ? check_log_convex(cur, 0, false) : check_log_concave(cur, 0, false);
        CHECK(oc.holds == levels[static_cast<std::size_t>(r)].holds);
        if (r + 1 < 5) cur = apply_R(cur, 0);
    }

    auto cat = generate_terms(catalog_lookup("catalan"), 60);
    for (const auto& lv : log_monotonic_order(cat, 0, 5, false)) CHECK(lv.holds);

    std::vector<BigRat> cst(8, BigRat(5));
    auto strict_levels = log_monotonic_order(cst, 0, 2, true);
    CHECK_FALSE(strict_levels[0].holds);
    auto lax_levels = log_monotonic_order(cst, 0, 2, false);
    CHECK(lax_levels[0].holds);
    CHECK(lax_levels[1].holds);
}

TEST_CASE("order_onset: oracle-computed values") {
    // window-relative onsets pinned by exhaustive exact scanning (derangement
    // level-1 log-concavity fails at x_3 x_5 = 2385/88 > x_4^2 = 1936/81, so
    // k=2 cannot start before 4; motzkin P(3),P(5),P(7) < 0 push k=3 to 6)
    SequenceDef der = catalog_lookup("derangement");
    CHECK(order_onset(der, 1, 200) == 2);
    CHECK(order_onset(der, 2, 200) == 4);
    CHECK(order_onset(der, 3, 200) == 6);
    SequenceDef motz = catalog_lookup("motzkin");
    CHECK(order_onset(motz, 1, 200) == 0);
    CHECK(order_onset(motz, 3, 200) == 6);
    SequenceDef fine = catalog_lookup("fine");
    CHECK(order_onset(fine, 3, 200) == 4);
    // impossible window
    SequenceDef tiny;
    tiny.name = "tiny";
    tiny.kind = std::vector<BigRat>{BigRat(1), BigRat(1), BigRat(1), BigRat(1), BigRat(1)};
    CHECK(order_onset(tiny, 2, 4) == 0);  // constants: non-strict everywhere
}
