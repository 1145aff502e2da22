#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "narayana/arith.hpp"

namespace narayana::powers {

using arith::Int;

// The greatest-prime-factor inequality P(binom(a,b)) > 1.95*b has finitely
// many small exceptions; at those pairs the thm2 derivation cannot proceed
// even though its conclusion is untouched. Still a falsified_step, but callers
// may treat it as "certificate unavailable" rather than a broken proof.
struct bound_exception : falsified_step {
    using falsified_step::falsified_step;
};

// A checked derivation that a value of the given shape can only be an m^k
// with k <= k_bound, naming the witness prime and its valuation.
struct PowerCertificate {
    std::string rule;  // catalan-ramanujan | prop-a-prime | prop-a-prime-square | thm1 | thm2 | exponent-gcd
    std::uint64_t a = 0;
    std::optional<std::uint64_t> b;  // absent for Catalan certificates
    std::uint64_t p = 0;
    std::uint64_t valuation = 0;  // vp of the certified value, in {1, 2}
    unsigned k_bound = 0;         // 1 or 2
};

// numerical spot-verification: at least two primes in (n, 2n]; n >= 6
bool ramanujan_check(std::uint64_t n);

// a prime p with n+2 <= p <= 2n and vp(C_n) = 1, valuation via Legendre; n >= 6
PowerCertificate catalan_witness(std::uint64_t n);

// true iff C_n is not a nontrivial perfect power
bool catalan_not_power(std::uint64_t n);

// gcd of the exponents of N(a, b), each computed via Legendre; a > b > 1.
// N is a nontrivial perfect k-th power iff k >= 2 divides the result.
std::uint64_t exponent_gcd(std::uint64_t a, std::uint64_t b);

// a prime => k = 1; a = p^2 => k <= 2; otherwise nullopt. b <= a/2.
std::optional<PowerCertificate> prop_bound(std::uint64_t a, std::uint64_t b);

// p = prev_prime(a) and the threshold a - p + 1: every b with
// a/2 >= b > threshold is certified k <= 2
std::pair<std::uint64_t, std::uint64_t> thm1_threshold(std::uint64_t a);

// re-derives the largest-prime-below-a argument; pre a/2 >= b > a - prev_prime(a) + 1
PowerCertificate thm1_certify(std::uint64_t a, std::uint64_t b);

// re-derives the greatest-prime-factor argument; pre a/2 >= b and
// (39*b)^2 >= 400*a  (exact form of b >= sqrt(a)/1.95)
PowerCertificate thm2_certify(std::uint64_t a, std::uint64_t b);

struct ScanReport {
    std::uint64_t a_max = 0;
    std::uint64_t square_hits = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> square_pairs;
    // every (a, b, gcd) with exponent_gcd >= 3 and N > 1 — expected empty
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> higher_power_hits;
};

// all a <= a_max, 2 <= b <= a-b+1
ScanReport conjecture_scan(std::uint64_t a_max, unsigned workers = 1);

struct Figure2Row {
    std::uint64_t a = 0;
    std::uint64_t thm1_threshold = 0;  // a - prev_prime(a) + 1
    // (sqrt(a)/1.95)^2 = 400a/1521 as a reduced fraction
    std::uint64_t thm2_sq_num = 0;
    std::uint64_t thm2_sq_den = 0;
    std::string stronger;  // "thm1" or "thm2", decided exactly
};

std::vector<Figure2Row> figure2_data(std::uint64_t a_max);

}  // namespace narayana::powers
