#include <doctest.h>

#include "narayana/combinatorics.hpp"
#include "narayana/powers.hpp"
#include "narayana/squares.hpp"

using namespace narayana;
using arith::Int;

TEST_SUITE("powers") {

TEST_CASE("ramanujan_check holds on a wide range") {
    for (std::uint64_t n = 6; n <= 3000; ++n) CHECK(powers::ramanujan_check(n));
    CHECK_THROWS_AS(powers::ramanujan_check(5), precondition_error);
}

TEST_CASE("catalan_witness golden primes") {
    auto w = powers::catalan_witness(6);
    CHECK(w.p == 11);
    CHECK(w.valuation == 1);
    CHECK(w.k_bound == 1);
    CHECK(w.rule == "catalan-ramanujan");
    CHECK(!w.b.has_value());
    CHECK(powers::catalan_witness(7).p == 13);
    CHECK(powers::catalan_witness(10).p == 19);
    CHECK_THROWS_AS(powers::catalan_witness(5), precondition_error);
    // witness valuation cross-checked against the actual Catalan value
    for (std::uint64_t n = 6; n <= 60; ++n) {
        auto wit = powers::catalan_witness(n);
        CHECK(wit.p >= n + 2);
        CHECK(wit.p <= 2 * n);
        CHECK(arith::vp(combinatorics::catalan(n), wit.p) == 1);
    }
}

TEST_CASE("no Catalan number is a nontrivial perfect power") {
    for (std::uint64_t n = 1; n <= 400; ++n) CHECK(powers::catalan_not_power(n));
    // the small cases go through the direct perfect-power check
    CHECK(!arith::perfect_power(combinatorics::catalan(2)).has_value());
    CHECK(!arith::perfect_power(combinatorics::catalan(5)).has_value());
}

TEST_CASE("exponent_gcd agrees with the full factorization") {
    for (std::uint64_t a = 3; a <= 80; ++a)
        for (std::uint64_t b = 2; b < a; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(powers::exponent_gcd(a, b) ==
                  combinatorics::narayana_factorization({a, b}).exponent_gcd());
        }
    CHECK(powers::exponent_gcd(9, 2) == 2);   // N = 36
    CHECK(powers::exponent_gcd(9, 5) == 2);   // N = 1764 = 42^2
    CHECK(powers::exponent_gcd(7, 3) == 1);   // N = 105
    CHECK_THROWS_AS(powers::exponent_gcd(7, 7), precondition_error);
    CHECK_THROWS_AS(powers::exponent_gcd(7, 1), precondition_error);
    CHECK_THROWS_AS(powers::exponent_gcd(3, 5), precondition_error);
}

TEST_CASE("square pairs have even exponent gcd and vice versa") {
    for (std::uint64_t a = 3; a <= 80; ++a)
        for (std::uint64_t b = 2; b < a; ++b) {
            std::uint64_t g = powers::exponent_gcd(a, b);
            bool nontrivial_square = g >= 2 && g % 2 == 0;
            CHECK(nontrivial_square ==
                  (squares::is_square_pair(a, b) && combinatorics::narayana({a, b}) != 1));
        }
}

TEST_CASE("prop_bound: prime a and prime-square a") {
    auto c = powers::prop_bound(7, 3);
    REQUIRE(c.has_value());
    CHECK(c->rule == "prop-a-prime");
    CHECK(c->p == 7);
    CHECK(c->valuation == 1);
    CHECK(c->k_bound == 1);
    CHECK(c->b == 3);

    c = powers::prop_bound(9, 4);
    REQUIRE(c.has_value());
    CHECK(c->rule == "prop-a-prime-square");
    CHECK(c->p == 3);
    CHECK(c->valuation == 1);
    CHECK(c->k_bound == 2);

    CHECK(!powers::prop_bound(12, 5).has_value());
    CHECK(!powers::prop_bound(100, 6).has_value());
    CHECK_THROWS_AS(powers::prop_bound(9, 5), precondition_error);   // 2b > a
    CHECK_THROWS_AS(powers::prop_bound(10, 1), precondition_error);  // b too small

    // prime a always gives valuation exactly 1; p^2 gives 1 or 2, matching vp(N)
    for (std::uint64_t a = 5; a <= 200; ++a) {
        for (std::uint64_t b = 2; 2 * b <= a; ++b) {
            auto cert = powers::prop_bound(a, b);
            if (!cert) continue;
            CHECK(cert->valuation ==
                  combinatorics::narayana_valuation({a, b}, cert->p));
            CHECK(cert->valuation == arith::vp(combinatorics::narayana({a, b}), cert->p));
            if (cert->rule == "prop-a-prime") CHECK(cert->valuation == 1);
        }
    }
}

TEST_CASE("thm1_threshold golden values") {
    CHECK(powers::thm1_threshold(1362) == std::pair<std::uint64_t, std::uint64_t>{1361, 2});
    CHECK(powers::thm1_threshold(1360) == std::pair<std::uint64_t, std::uint64_t>{1327, 34});
    CHECK(powers::thm1_threshold(100) == std::pair<std::uint64_t, std::uint64_t>{97, 4});
    CHECK(powers::thm1_threshold(4) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
    CHECK_THROWS_AS(powers::thm1_threshold(3), precondition_error);
}

TEST_CASE("thm1_certify golden instances") {
    auto c = powers::thm1_certify(100, 50);
    CHECK(c.rule == "thm1");
    CHECK(c.p == 97);
    CHECK(c.valuation == 2);
    CHECK(c.k_bound == 2);

    c = powers::thm1_certify(1362, 100);
    CHECK(c.p == 1361);
    CHECK(c.k_bound == 2);

    c = powers::thm1_certify(1360, 40);
    CHECK(c.p == 1327);
    CHECK(c.k_bound == 2);

    c = powers::thm1_certify(20, 3);
    CHECK(c.p == 19);
    CHECK(c.valuation == 2);
    CHECK(c.k_bound == 2);

    CHECK_THROWS_AS(powers::thm1_certify(100, 4), precondition_error);   // b == threshold
    CHECK_THROWS_AS(powers::thm1_certify(100, 51), precondition_error);  // 2b > a
}

TEST_CASE("thm1_certify never falsifies inside its hypothesis (a <= 600)") {
    for (std::uint64_t a = 4; a <= 600; ++a) {
        auto [p, threshold] = powers::thm1_threshold(a);
        for (std::uint64_t b = threshold + 1; 2 * b <= a; ++b) {
            auto cert = powers::thm1_certify(a, b);
            CHECK(cert.p == p);
            CHECK((cert.valuation == 1 || cert.valuation == 2));
            CHECK(cert.k_bound <= 2);
        }
    }
}

TEST_CASE("thm2_certify golden instances") {
    auto c = powers::thm2_certify(100, 6);
    CHECK(c.rule == "thm2");
    CHECK(c.p == 97);
    CHECK(c.valuation == 2);
    CHECK(c.k_bound == 2);
    CHECK(arith::vp(combinatorics::binomial(100, 6), 97) == 1);

    c = powers::thm2_certify(1360, 19);  // just above sqrt(1360)/1.95 = 18.91...
    CHECK(c.p == 677);
    CHECK(c.valuation == 2);
    CHECK(arith::vp(combinatorics::binomial(1360, 19), 677) == 1);

    c = powers::thm2_certify(20, 3);
    CHECK(c.p == 19);
    CHECK(c.valuation == 2);

    c = powers::thm2_certify(7, 3);  // p = a divides a: valuation drops to 1
    CHECK(c.p == 7);
    CHECK(c.valuation == 1);
    CHECK(c.k_bound == 2);

    CHECK_THROWS_AS(powers::thm2_certify(1360, 18), precondition_error);  // below the bound
    CHECK_THROWS_AS(powers::thm2_certify(100, 51), precondition_error);
    CHECK_THROWS_AS(powers::thm2_certify(100, 1), precondition_error);
}

TEST_CASE("thm2_certify signals the known small-pair exceptions distinctly") {
    CHECK_THROWS_AS(powers::thm2_certify(100, 50), powers::bound_exception);
    CHECK_THROWS_AS(powers::thm2_certify(100, 50), falsified_step);  // subtype
    CHECK_THROWS_AS(powers::thm2_certify(4, 2), powers::bound_exception);
    CHECK_THROWS_AS(powers::thm2_certify(540, 270), powers::bound_exception);
}

TEST_CASE("certified pairs really bound the exponent") {
    // wherever any certificate emits k_bound <= 2, the actual exponent gcd of
    // N(a, b) cannot exceed 2 (N = 1 aside, where any k works trivially)
    for (std::uint64_t a = 5; a <= 120; ++a) {
        for (std::uint64_t b = 2; 2 * b <= a; ++b) {
            std::uint64_t g = powers::exponent_gcd(a, b);
            bool certified = false;
            if (powers::prop_bound(a, b).has_value()) certified = true;
            try {
                powers::thm1_certify(a, b);
                certified = true;
            } catch (const precondition_error&) {
            }
            try {
                powers::thm2_certify(a, b);
                certified = true;
            } catch (const falsified_step&) {  // includes bound_exception
            } catch (const precondition_error&) {
            }
            if (certified) CHECK(g <= 2);
        }
    }
}

TEST_CASE("conjecture_scan matches figure1 and finds no higher powers") {
    auto report = powers::conjecture_scan(120);
    CHECK(report.a_max == 120);
    CHECK(report.higher_power_hits.empty());
    CHECK(report.square_hits == report.square_pairs.size());
    CHECK(report.square_pairs == squares::figure1_data(120));
    CHECK(powers::conjecture_scan(2).square_pairs.empty());
}

TEST_CASE("conjecture_scan is worker-count independent") {
    auto one = powers::conjecture_scan(200, 1);
    auto three = powers::conjecture_scan(200, 3);
    auto eight = powers::conjecture_scan(200, 8);
    CHECK(one.square_pairs == three.square_pairs);
    CHECK(one.square_pairs == eight.square_pairs);
    CHECK(one.higher_power_hits == three.higher_power_hits);
}

TEST_CASE("figure2_data frozen rows and exact stronger-rule decisions") {
    auto rows = powers::figure2_data(1362);
    REQUIRE(rows.size() == 1359);  // a = 4 .. 1362
    CHECK(rows[0].a == 4);
    CHECK(rows[0].thm1_threshold == 2);
    CHECK(rows[0].thm2_sq_num == 1600);
    CHECK(rows[0].thm2_sq_den == 1521);
    CHECK(rows[0].stronger == "thm2");

    const auto& r100 = rows[100 - 4];
    CHECK(r100.a == 100);
    CHECK(r100.thm1_threshold == 4);
    CHECK(r100.thm2_sq_num == 40000);
    CHECK(r100.thm2_sq_den == 1521);
    CHECK(r100.stronger == "thm1");

    const auto& r1360 = rows[1360 - 4];
    CHECK(r1360.thm1_threshold == 34);
    CHECK(r1360.stronger == "thm2");  // 34 > sqrt(1360)/1.95 = 18.91...

    const auto& r1362 = rows[1362 - 4];
    CHECK(r1362.thm1_threshold == 2);
    CHECK(r1362.stronger == "thm1");  // 2 < sqrt(1362)/1.95 = 18.93...
    CHECK(r1362.thm2_sq_num == 181600);  // 400*1362 / gcd 3
    CHECK(r1362.thm2_sq_den == 507);

    CHECK(powers::figure2_data(3).empty());

    // the reduced fraction always reproduces 400a/1521 and the decision is the
    // exact comparison threshold^2 * 1521 < 400a
    for (const auto& r : rows) {
        CHECK(r.thm2_sq_num * static_cast<unsigned __int128>(1521) ==
              static_cast<unsigned __int128>(r.thm2_sq_den) * 400 * r.a);
        bool thm1_stronger =
            static_cast<unsigned __int128>(r.thm1_threshold) * r.thm1_threshold * 1521 <
            static_cast<unsigned __int128>(400) * r.a;
        CHECK(r.stronger == (thm1_stronger ? "thm1" : "thm2"));
    }
}

}  // TEST_SUITE

TEST_SUITE("powers_long") {

TEST_CASE("exactly 181 known exception pairs inside the thm2 hypothesis (a <= 600)") {
    std::uint64_t exceptions = 0, max_a = 0;
    bool has_4_2 = false, has_100_50 = false, has_540_270 = false;
    for (std::uint64_t a = 4; a <= 600; ++a) {
        for (std::uint64_t b = 2; 2 * b <= a; ++b) {
            if (!(static_cast<unsigned __int128>(39 * b) * (39 * b) >=
                  static_cast<unsigned __int128>(400) * a))
                continue;  // outside the hypothesis
            try {
                auto c = powers::thm2_certify(a, b);
                CHECK((c.valuation == 1 || c.valuation == 2));
            } catch (const powers::bound_exception&) {
                ++exceptions;
                max_a = std::max(max_a, a);
                if (a == 4 && b == 2) has_4_2 = true;
                if (a == 100 && b == 50) has_100_50 = true;
                if (a == 540 && b == 270) has_540_270 = true;
            }
            // no other failure mode is acceptable inside the hypothesis: a bare
            // falsified_step would propagate and fail the test
        }
    }
    CHECK(exceptions == 181);
    CHECK(max_a == 540);
    CHECK(has_4_2);
    CHECK(has_100_50);
    CHECK(has_540_270);
}

TEST_CASE("thm1 exhaustive over its hypothesis up to a = 1200") {
    for (std::uint64_t a = 4; a <= 1200; ++a) {
        auto [p, threshold] = powers::thm1_threshold(a);
        for (std::uint64_t b = threshold + 1; 2 * b <= a; ++b) {
            auto cert = powers::thm1_certify(a, b);  // must not throw
            CHECK(cert.p == p);
        }
    }
}

TEST_CASE("catalan audit up to n = 2000") {
    for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(powers::catalan_not_power(n));
}

}  // TEST_SUITE
