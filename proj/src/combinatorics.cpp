#include "narayana/combinatorics.hpp"

namespace narayana::combinatorics {

Int binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) throw precondition_error("binomial_valuation: k > n");
    return arith::vp_factorial(n, p) - arith::vp_factorial(k, p) - arith::vp_factorial(n - k, p);
}

Int catalan(std::uint64_t n) {
    if (n < 1) throw precondition_error("catalan: n must be >= 1");
    Int b = binomial(2 * n, static_cast<std::int64_t>(n));
    Int q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + 1));
    if (r != 0) throw falsified_step("catalan: (n+1) does not divide binom(2n, n)");
    return q;
}

Int narayana(NarayanaIndex idx) {
    if (idx.a < 1 || idx.b < 1) throw precondition_error("narayana: a, b must be >= 1");
    if (idx.a < idx.b) return 0;
    if (idx.b == idx.a || idx.b == 1) return 1;
    Int prod = binomial(idx.a, static_cast<std::int64_t>(idx.b)) *
               binomial(idx.a, static_cast<std::int64_t>(idx.b - 1));
    Int q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), prod.get_mpz_t(),
                   static_cast<unsigned long>(idx.a));
    if (r != 0) throw falsified_step("narayana: a does not divide binom(a,b)*binom(a,b-1)");
    return q;
}

std::uint64_t narayana_valuation(NarayanaIndex idx, std::uint64_t p) {
    if (idx.a < idx.b || idx.b < 1) throw precondition_error("narayana_valuation: need a >= b >= 1");
    std::uint64_t up = binomial_valuation(idx.a, idx.b, p) +
                       binomial_valuation(idx.a, idx.b - 1, p);
    std::uint64_t down = arith::vp_u64(idx.a, p);
    if (up < down) throw falsified_step("narayana_valuation: negative exponent");
    return up - down;
}

arith::PrimeFactorization narayana_factorization(NarayanaIndex idx) {
    if (idx.a < idx.b || idx.b < 1) throw precondition_error("narayana_factorization: need a >= b >= 1");
    arith::PrimeFactorization f;
    auto primes = arith::shared_primes(idx.a);
    for (std::uint64_t p : *primes) {
        if (p > idx.a) break;
        std::uint64_t e = narayana_valuation(idx, p);
        if (e > 0) f.entries.emplace_back(p, e);
    }
    return f;
}

Int narayana_row_sum(std::uint64_t n) {
    if (n < 1) throw precondition_error("narayana_row_sum: n must be >= 1");
    Int sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += narayana({n, k});
    return sum;
}

}  // namespace narayana::combinatorics
