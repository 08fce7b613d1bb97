#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcert/errors.hpp"
#include "seqcert/int_poly.hpp"
#include "seqcert/positivity.hpp"
#include "seqcert/rat_func.hpp"
#include "seqcert/rational.hpp"

#include <random>

using namespace seqcert;

TEST_CASE("BigRat normalization and arithmetic") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(-2, -4) == BigRat(1, 2));
    CHECK(BigRat(2, -4).denominator() == 2);
    CHECK(BigRat(2, -4).numerator() == -1);
    CHECK(BigRat(0, 7).str() == "0");
    CHECK((BigRat(1, 3) + BigRat(1, 6)) == BigRat(1, 2));
    CHECK((BigRat(3, 2) * BigRat(2, 3)) == BigRat(1));
    CHECK((BigRat(1, 2) / BigRat(1, 4)) == BigRat(2));
    CHECK(BigRat(7, 2).floor() == 3);
    CHECK(BigRat(7, 2).ceil() == 4);
    CHECK(BigRat(-7, 2).floor() == -4);
    CHECK(BigRat::parse("-22/7") == BigRat(-22, 7));
    CHECK(BigRat::parse("12345678901234567890").is_integer());
    CHECK_THROWS_AS(BigRat(1, 0), Error);
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), Error);
}

TEST_CASE("BigRat results stay in lowest terms with positive denominator") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        long dn1 = d(rng), dn2 = d(rng);
        if (dn1 == 0 || dn2 == 0) continue;
        BigRat a(d(rng), dn1), b(d(rng), dn2);
        for (BigRat v : {a + b, a - b, a * b}) {
            CHECK(sgn(v.denominator()) > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("IntPoly arithmetic") {
    IntPoly x{0, 1};
    CHECK((IntPoly{1, 1} * IntPoly{-1, 1}) == IntPoly{-1, 0, 1});  // (x+1)(x-1) = x^2-1
    CHECK((IntPoly{1, 2} + IntPoly{}) == IntPoly{1, 2});
    CHECK((x * x * x).degree() == 3);
    CHECK((x * x * x) == IntPoly{0, 0, 0, 1});
    CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
    // degree of a product is the sum of degrees
    CHECK((IntPoly{3, 0, 2} * IntPoly{0, 0, 0, 5}).degree() == 5);
}

TEST_CASE("IntPoly derivative") {
    IntPoly x6{0, 0, 0, 0, 0, 0, 1};
    CHECK(x6.derivative() == IntPoly{0, 0, 0, 0, 0, 6});
    CHECK(IntPoly{42}.derivative().is_zero());
    // d^3/dx^3 x^8 = 336 x^5 and 336 = 8*42
    IntPoly x8 = IntPoly::monomial(BigInt(1), 8);
    IntPoly d3 = x8.derivative().derivative().derivative();
    CHECK(d3 == IntPoly::monomial(BigInt(336), 5));
}

TEST_CASE("IntPoly evaluation") {
    IntPoly p{0, -4, 32};  // 32n^2 - 4n
    CHECK(p.eval(BigRat(1)) == BigRat(28));
    CHECK(p.eval_int(BigInt(1)) == 28);
    CHECK(IntPoly{5, 1, 9}.eval(BigRat(0)) == BigRat(5));
    CHECK(IntPoly{-2, 0, 1}.eval(BigRat(3, 2)) == BigRat(1, 4));  // x^2-2 at 3/2
}

TEST_CASE("IntPoly eval is a ring homomorphism on random instances") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 5);
    std::uniform_int_distribution<long> xd(-12, 12);
    for (int i = 0; i < 400; ++i) {
        std::vector<BigInt> ca, cb;
        for (int j = 0; j <= deg(rng); ++j) ca.emplace_back(coeff(rng));
        for (int j = 0; j <= deg(rng); ++j) cb.emplace_back(coeff(rng));
        IntPoly p(ca), q(cb);
        long den = xd(rng);
        BigRat x(xd(rng), den == 0 ? 1 : den);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("IntPoly Taylor shift") {
    IntPoly p{0, -4, 32};
    CHECK(p.shifted(BigInt(1)) == IntPoly{28, 60, 32});  // 32(m+1)^2-4(m+1)
    IntPoly q{-1, 0, 0, 2};
    CHECK(q.shifted(BigInt(-3)).shifted(BigInt(3)) == q);
}

TEST_CASE("IntPoly gcd") {
    IntPoly a = IntPoly{1, 1} * IntPoly{-3, 1} * IntPoly{2};  // 2(x+1)(x-3)
    IntPoly b = IntPoly{1, 1} * IntPoly{5, 1} * IntPoly{4};   // 4(x+1)(x+5)
    CHECK(IntPoly::gcd(a, b) == IntPoly{2, 2});               // 2(x+1)
    CHECK(IntPoly::gcd(IntPoly{}, b) == b);
    CHECK(IntPoly::gcd(IntPoly{7}, IntPoly{21}) == IntPoly{7});
}

TEST_CASE("sturm root counting") {
    IntPoly x2m2{-2, 0, 1};
    CHECK(sturm_distinct_roots_geq(x2m2, BigRat(0)) == 1);
    CHECK(sturm_distinct_roots_geq(x2m2, BigRat(-2)) == 2);
    // (x-3)^2 (x+1): distinct roots >= 0 is 1 (multiplicity ignored)
    IntPoly p = IntPoly{-3, 1} * IntPoly{-3, 1} * IntPoly{1, 1};
    CHECK(sturm_distinct_roots_geq(p, BigRat(0)) == 1);
    CHECK(sturm_distinct_roots_geq(p, BigRat(-1)) == 2);  // root at the endpoint counts
    CHECK(sturm_distinct_roots_geq(p, BigRat(3)) == 1);
    CHECK(sturm_distinct_roots_geq(p, BigRat(4)) == 0);
    CHECK(sturm_distinct_roots_geq(IntPoly{1, 0, 1}, BigRat(-100)) == 0);  // x^2+1
    CHECK_THROWS_AS(sturm_distinct_roots_geq(IntPoly{}, BigRat(0)), ZeroPolynomial);
}

TEST_CASE("sturm counting with a multiple root at an interval endpoint") {
    // x^2 (x-1): the raw chain vanishes identically at 0, the square-free
    // reduction keeps the count correct
    IntPoly p = IntPoly{0, 0, 1} * IntPoly{-1, 1};
    SturmChain sc(p);
    CHECK(sc.count_in(BigRat(0), BigRat(2)) == 1);
    CHECK(sc.count_in(BigRat(-1), BigRat(2)) == 2);
    CHECK(sc.count_above(BigRat(0)) == 1);
    CHECK(sturm_distinct_roots_geq(p, BigRat(0)) == 2);
}

TEST_CASE("sturm count matches known linear factorizations") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> rnum(-20, 20), rden(1, 4);
    std::uniform_int_distribution<int> nf(1, 5);
    std::uniform_int_distribution<long> x0num(-25, 25), x0den(1, 3);
    for (int i = 0; i < 300; ++i) {
        int k = nf(rng);
        IntPoly p{1};
        std::vector<BigRat> roots;
        for (int j = 0; j < k; ++j) {
            BigRat r(rnum(rng), rden(rng));
            roots.push_back(r);
            // primitive factor (den x - num)
            p = p * IntPoly(std::vector<BigInt>{-r.numerator(), r.denominator()});
        }
        BigRat x0(x0num(rng), x0den(rng));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        long expect = 0;
        for (const auto& r : roots)
            if (r >= x0) ++expect;
        CHECK(sturm_distinct_roots_geq(p, x0) == expect);
    }
}

TEST_CASE("prove_positive_on_integers: published instances") {
    // 32n^2-4n > 0 for n >= 1 via the coefficient shift (32m^2+60m+28)
    auto v = prove_positive_on_integers(IntPoly{0, -4, 32}, BigInt(1));
    CHECK(v.status == PositivityStatus::PositiveByShiftedCoefficients);

    // a published factored positivity instance, taken literally as input
    IntPoly inner{1152, 3968, 5568, 4048, 162, 362, 4, 2};
    auto v2 = prove_positive_on_integers(inner * IntPoly{1, 1}, BigInt(1));
    CHECK(v2.positive());

    auto v3 = prove_positive_on_integers(IntPoly{-10, 1}, BigInt(5));  // n - 10 from 5
    CHECK(v3.status == PositivityStatus::NotPositive);
    REQUIRE(v3.witness.has_value());
    CHECK(*v3.witness == 5);

    auto v4 = prove_positive_on_integers(IntPoly{-1}, BigInt(3));
    CHECK(v4.status == PositivityStatus::NotPositive);
    CHECK(*v4.witness == 3);

    CHECK_THROWS_AS(prove_positive_on_integers(IntPoly{}, BigInt(0)), ZeroPolynomial);
}

TEST_CASE("prove_positive_on_integers: integer half-line semantics") {
    // (4x-1)(4x-3) is negative between 1/4 and 3/4 but positive at every integer
    IntPoly p = IntPoly{-1, 4} * IntPoly{-3, 4};
    auto v = prove_positive_on_integers(p, BigInt(0));
    CHECK(v.positive());
    CHECK(v.status == PositivityStatus::PositiveBySturm);
    // root exactly at an integer: strict fails with that witness, non-strict holds
    IntPoly q = IntPoly{-4, 1} * IntPoly{-4, 1};  // (x-4)^2
    auto vs = prove_positive_on_integers(q, BigInt(0), true);
    CHECK_FALSE(vs.positive());
    CHECK(*vs.witness == 4);
    auto vn = prove_positive_on_integers(q, BigInt(0), false);
    CHECK(vn.positive());
}

TEST_CASE("prover finds violations far beyond any fixed scan window") {
    // positive on [0, 499], first violation at n = 500
    auto v = prove_positive_on_integers(IntPoly{500, -1}, BigInt(0));
    CHECK_FALSE(v.positive());
    CHECK(*v.witness == 500);
    // (x-300)(x-700): first non-positive integer is the root itself
    auto v2 = prove_positive_on_integers(IntPoly{-300, 1} * IntPoly{-700, 1}, BigInt(0));
    CHECK_FALSE(v2.positive());
    CHECK(*v2.witness == 300);
    auto v2n = prove_positive_on_integers(IntPoly{-300, 1} * IntPoly{-700, 1}, BigInt(0), false);
    CHECK_FALSE(v2n.positive());
    CHECK(*v2n.witness == 301);  // non-strict skips the roots, catches the interior
    // distant root pair straddling no integer: positive on all of Z
    auto v3 = prove_positive_on_integers(IntPoly{-1000, 3} * IntPoly{-1001, 3}, BigInt(0));
    CHECK(v3.positive());
    // multiple root exactly at an integer far out
    IntPoly sq = IntPoly{-444, 1} * IntPoly{-444, 1};
    CHECK_FALSE(prove_positive_on_integers(sq, BigInt(0), true).positive());
    CHECK(*prove_positive_on_integers(sq, BigInt(0), true).witness == 444);
    CHECK(prove_positive_on_integers(sq, BigInt(0), false).positive());
    // tight cluster of four rational roots around one integer gap
    IntPoly cluster = IntPoly{-13, 7} * IntPoly{-15, 8} * IntPoly{-1999, 1000} * IntPoly{-2001, 1000};
    // roots ~ 1.857, 1.875, 1.999, 2.001: p(2) < 0 is the only integer hit
    auto vc = prove_positive_on_integers(cluster, BigInt(0));
    CHECK_FALSE(vc.positive());
    CHECK(*vc.witness == 2);
}

TEST_CASE("prover agrees with brute-force integer scan on random polynomials") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> Nd(-10, 10);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        std::vector<BigInt> c;
        int d = deg(rng);
        for (int j = 0; j <= d; ++j) c.emplace_back(coeff(rng));
        IntPoly p(c);
        if (p.is_zero()) continue;
        ++checked;
        long N = Nd(rng);
        auto v = prove_positive_on_integers(p, BigInt(N));
        // scan n in [N, N+200]
        long long bad = -1;
        for (long n = N; n <= N + 200; ++n) {
            if (sgn(p.eval_int(BigInt(n))) <= 0) {
                bad = n;
                break;
            }
        }
        if (v.positive()) {
            CHECK(bad == -1);
        } else {
            REQUIRE(v.witness.has_value());
            CHECK(sgn(p.eval_int(*v.witness)) <= 0);
            if (bad != -1) CHECK(*v.witness == BigInt(static_cast<long>(bad)));  // smallest violation
        }
    }
    CHECK(checked > 450);
}

TEST_CASE("RatFunc canonical form and arithmetic") {
    RatFunc r(IntPoly{3, 2}, IntPoly{3, 1});  // (2n+3)/(n+3)
    CHECK(r.shifted(1) == RatFunc(IntPoly{5, 2}, IntPoly{4, 1}));
    CHECK(r.shifted(0) == r);
    RatFunc n = RatFunc::variable();
    CHECK(n.shifted(-1) == RatFunc(IntPoly{-1, 1}, IntPoly{1}));
    // gcd cancellation incl. integer content
    RatFunc s(IntPoly{0, 2}, IntPoly{4});
    CHECK(s.num() == IntPoly{0, 1});
    CHECK(s.den() == IntPoly{2});
    // denominator sign normalization
    RatFunc t(IntPoly{1}, IntPoly{2, -1});
    CHECK(sgn(t.den().leading()) > 0);
    CHECK(t.num() == -IntPoly{1});
    CHECK(t.eval(BigRat(0)) == BigRat(1, 2));
}

TEST_CASE("RatFunc evaluation") {
    RatFunc lam(IntPoly{6, 4}, IntPoly{3, 1});  // (4n+6)/(n+3)
    CHECK(lam.eval(BigRat(2)) == BigRat(14, 5));
    RatFunc c(BigRat(7, 3));
    CHECK(c.eval(BigRat(1000)) == BigRat(7, 3));
    RatFunc fr(IntPoly{1, 8, 8}, IntPoly{1, 2, 1});  // (8n^2+8n+1)/(n+1)^2
    CHECK(fr.eval(BigRat(1)) == BigRat(17, 4));
    CHECK_THROWS_AS(fr.eval(BigRat(-1)), PoleAtPoint);
}

TEST_CASE("RatFunc arithmetic is field arithmetic (random)") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> c(-6, 6), xd(2, 40);
    auto random_rf = [&] {
        IntPoly num{c(rng), c(rng), c(rng)};
        IntPoly den;
        while (den.is_zero()) den = IntPoly{c(rng), c(rng)};
        return RatFunc(num, den);
    };
    for (int trial = 0; trial < 300; ++trial) {
        RatFunc p = random_rf(), q = random_rf();
        // canonical invariants on every result
        for (const RatFunc& v : {p + q, p - q, p * q}) {
            CHECK(sgn(v.den().leading()) > 0);
            IntPoly g = IntPoly::gcd(v.num(), v.den());
            CHECK(g.degree() <= 0);
            if (!v.num().is_zero()) CHECK(g.coeff(0) == 1);
        }
        // evaluation homomorphism at a point past all small denominators' roots
        BigRat x(xd(rng) + 40);
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        if (!q.is_zero()) CHECK((p / q * q) == p);
        CHECK(p.shifted(3).shifted(-3) == p);
    }
}

TEST_CASE("RatFunc sign proving") {
    RatFunc b(IntPoly{0, 3}, IntPoly{3, 1});  // 3n/(n+3)
    CHECK(b.prove_sign_on_integers(BigInt(1), true, true).positive());
    CHECK_FALSE(b.prove_sign_on_integers(BigInt(0), true, true).positive());  // b(0) = 0
    CHECK(b.prove_sign_on_integers(BigInt(0), false, true).positive());
    RatFunc neg(IntPoly{0, 0, 0, -64}, IntPoly{1, 3, 3, 1});
    CHECK(neg.prove_sign_on_integers(BigInt(1), true, false).positive());  // -64n^3/(n+1)^3 < 0
    // non-strict must reject integer poles: 1/(n-7)^2 has num*den >= 0
    // everywhere yet is undefined at n = 7
    RatFunc pole(IntPoly{1}, IntPoly{-7, 1} * IntPoly{-7, 1});
    auto v = pole.prove_sign_on_integers(BigInt(6), false, true);
    CHECK_FALSE(v.positive());
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == 7);
    // Sturm fallback inside a rational function: (4n-1)(4n-3)/(n^2+1) is
    // positive at every integer although its numerator has real roots
    RatFunc gap(IntPoly{-1, 4} * IntPoly{-3, 4}, IntPoly{1, 0, 1});
    auto vg = gap.prove_sign_on_integers(BigInt(0), true, true);
    CHECK(vg.positive());
    CHECK(vg.status == PositivityStatus::PositiveBySturm);
}
