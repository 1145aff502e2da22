#include "narayana/powers.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "narayana/combinatorics.hpp"

namespace narayana::powers {

bool ramanujan_check(std::uint64_t n) {
    if (n < 6) throw precondition_error("ramanujan_check: stated for n >= 6");
    std::uint64_t count = 0;
    for (std::uint64_t c = n + 1; c <= 2 * n && count < 2; ++c)
        if (arith::is_prime(c)) ++count;
    return count >= 2;
}

PowerCertificate catalan_witness(std::uint64_t n) {
    if (n < 6) throw precondition_error("catalan_witness: need n >= 6");
    // search downward from 2n; any prime in [n+2, 2n] divides C_n exactly once
    for (std::uint64_t q = 2 * n; q >= n + 2; --q) {
        if (!arith::is_prime(q)) continue;
        std::uint64_t val = arith::vp_factorial(2 * n, q) - arith::vp_factorial(n, q) -
                            arith::vp_factorial(n + 1, q);
        if (val == 1) return {"catalan-ramanujan", n, std::nullopt, q, 1, 1};
    }
    throw falsified_step("catalan_witness: no prime in [n+2, 2n] with valuation 1");
}

bool catalan_not_power(std::uint64_t n) {
    if (n < 1) throw precondition_error("catalan_not_power: n must be >= 1");
    if (n <= 5) return !arith::perfect_power(combinatorics::catalan(n)).has_value();
    try {
        return catalan_witness(n).valuation == 1;
    } catch (const falsified_step&) {
        return false;
    }
}

namespace {

std::uint64_t exponent_gcd_with(std::uint64_t a, std::uint64_t b,
                                const std::vector<std::uint64_t>& primes) {
    std::uint64_t g = 0;
    for (std::uint64_t p : primes) {
        if (p > a) break;
        std::uint64_t e = combinatorics::narayana_valuation({a, b}, p);
        if (e == 0) continue;
        g = std::gcd(g, e);
        if (g == 1) break;  // the common case; nothing can lower it further
    }
    return g;
}

}  // namespace

std::uint64_t exponent_gcd(std::uint64_t a, std::uint64_t b) {
    if (!(a > b && b > 1)) throw precondition_error("exponent_gcd: need a > b > 1");
    auto primes = arith::shared_primes(a);
    return exponent_gcd_with(a, b, *primes);
}

std::optional<PowerCertificate> prop_bound(std::uint64_t a, std::uint64_t b) {
    if (b < 2 || 2 * b > a) throw precondition_error("prop_bound: need 2 <= b <= a/2");
    if (arith::is_prime(a)) {
        std::uint64_t val = combinatorics::narayana_valuation({a, b}, a);
        if (val != 1) throw falsified_step("prop_bound: prime a must divide N(a, b) exactly once");
        return PowerCertificate{"prop-a-prime", a, b, a, val, 1};
    }
    std::uint64_t r = arith::isqrt_u64(a);
    if (r * r == a && arith::is_prime(r)) {
        // vp(N(p^2, b)) = -2 + (2 - vp(b)) + (2 - vp(b-1)), always 1 or 2
        std::uint64_t val = combinatorics::narayana_valuation({a, b}, r);
        if (val != 1 && val != 2)
            throw falsified_step("prop_bound: valuation at p outside {1, 2} for a = p^2");
        return PowerCertificate{"prop-a-prime-square", a, b, r, val, 2};
    }
    return std::nullopt;
}

std::pair<std::uint64_t, std::uint64_t> thm1_threshold(std::uint64_t a) {
    if (a < 4) throw precondition_error("thm1_threshold: need a >= 4");
    std::uint64_t p = arith::prev_prime(a);
    return {p, a - p + 1};
}

PowerCertificate thm1_certify(std::uint64_t a, std::uint64_t b) {
    auto [p, threshold] = thm1_threshold(a);
    if (!(2 * b <= a && b > threshold))
        throw precondition_error("thm1_certify: need a/2 >= b > a - prev_prime(a) + 1");

    if (p == a - b + 1) {
        // boundary branch: p*binom(a, p)^2 = a*b*m^k with p outside binom(a, p)
        if (combinatorics::binomial_valuation(a, p, p) != 0)
            throw falsified_step("thm1_certify: p divides binom(a, p)");
        if (a % p == 0 || b % p == 0)
            throw falsified_step("thm1_certify: p divides a or b in the boundary branch");
        return {"thm1", a, b, p, 1, 1};
    }

    if (a % p == 0) throw falsified_step("thm1_certify: p divides a");
    if (b % p == 0) throw falsified_step("thm1_certify: p divides b");
    if ((a - b + 1) % p == 0) throw falsified_step("thm1_certify: p divides a - b + 1");
    if (combinatorics::binomial_valuation(a, b, p) != 1)
        throw falsified_step("thm1_certify: p does not divide binom(a, b) exactly once");
    // b*binom(a, b)^2 = a*(a-b+1)*m^k: the left side carries p exactly twice
    return {"thm1", a, b, p, 2, 2};
}

PowerCertificate thm2_certify(std::uint64_t a, std::uint64_t b) {
    if (b < 2 || 2 * b > a) throw precondition_error("thm2_certify: need 2 <= b <= a/2");
    // b >= sqrt(a)/1.95 with 1.95 = 39/20, compared exactly
    if (!(static_cast<unsigned __int128>(39 * b) * (39 * b) >= static_cast<unsigned __int128>(400) * a))
        throw precondition_error("thm2_certify: need (39*b)^2 >= 400*a");

    // largest prime with positive valuation in binom(a, b), via Legendre only
    auto primes = arith::shared_primes(a);
    std::uint64_t p = 0;
    for (auto it = std::upper_bound(primes->begin(), primes->end(), a); it != primes->begin();) {
        --it;
        if (combinatorics::binomial_valuation(a, b, *it) > 0) {
            p = *it;
            break;
        }
    }
    if (p == 0) throw falsified_step("thm2_certify: binom(a, b) has no prime factor");

    if (!(20 * p > 39 * b))
        throw bound_exception("thm2_certify: greatest prime factor bound p > 1.95*b fails");
    if (!(static_cast<unsigned __int128>(p) * p > a))
        throw falsified_step("thm2_certify: p^2 > a fails");
    if (combinatorics::binomial_valuation(a, b, p) != 1)
        throw falsified_step("thm2_certify: p does not divide binom(a, b) exactly once");
    if (b % p == 0) throw falsified_step("thm2_certify: p divides b");

    std::uint64_t va = arith::vp_u64(a, p);
    std::uint64_t vend = arith::vp_u64(a - b + 1, p);
    if (va > 0 && vend > 0)
        throw falsified_step("thm2_certify: p divides both a and a - b + 1");
    std::uint64_t val = 2 - va - vend;
    return {"thm2", a, b, p, val, 2};
}

namespace {

struct ScanBlock {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> squares;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> higher;
};

ScanBlock scan_block(std::uint64_t a_lo, std::uint64_t a_hi,
                     std::shared_ptr<const std::vector<std::uint64_t>> primes) {
    ScanBlock block;
    for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
        for (std::uint64_t b = 2; b <= a - b + 1; ++b) {
            std::uint64_t g = exponent_gcd_with(a, b, *primes);
            if (g >= 2 && g % 2 == 0) block.squares.emplace_back(a, b);
            if (g >= 3) block.higher.emplace_back(a, b, g);
        }
    }
    return block;
}

}  // namespace

ScanReport conjecture_scan(std::uint64_t a_max, unsigned workers) {
    ScanReport report;
    report.a_max = a_max;
    if (a_max < 3) return report;
    if (workers == 0) workers = 1;

    auto primes = arith::shared_primes(a_max);
    std::uint64_t lo = 3, count = a_max - lo + 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));

    std::vector<std::future<ScanBlock>> parts;
    std::uint64_t chunk = count / workers, extra = count % workers, start = lo;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (w < extra ? 1 : 0);
        std::uint64_t end = start + len - 1;
        parts.push_back(std::async(std::launch::async, scan_block, start, end, primes));
        start = end + 1;
    }
    for (auto& part : parts) {
        ScanBlock block = part.get();
        report.square_pairs.insert(report.square_pairs.end(), block.squares.begin(),
                                   block.squares.end());
        report.higher_power_hits.insert(report.higher_power_hits.end(), block.higher.begin(),
                                        block.higher.end());
    }
    report.square_hits = report.square_pairs.size();
    return report;
}

std::vector<Figure2Row> figure2_data(std::uint64_t a_max) {
    std::vector<Figure2Row> rows;
    if (a_max < 4) return rows;
    rows.reserve(a_max - 3);
    for (std::uint64_t a = 4; a <= a_max; ++a) {
        auto [p, threshold] = thm1_threshold(a);
        std::uint64_t num = 400 * a, den = 1521;  // (sqrt(a)/1.95)^2 = 400a/39^2
        std::uint64_t g = std::gcd(num, den);
        // thm1 is stronger when its threshold sits below the thm2 curve
        bool thm1_stronger = static_cast<unsigned __int128>(threshold) * threshold * 1521 <
                             static_cast<unsigned __int128>(400) * a;
        rows.push_back({a, threshold, num / g, den / g, thm1_stronger ? "thm1" : "thm2"});
    }
    return rows;
}

}  // namespace narayana::powers
