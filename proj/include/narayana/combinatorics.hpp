#pragma once

#include <cstdint>

#include "narayana/arith.hpp"

namespace narayana::combinatorics {

using arith::Int;

struct NarayanaIndex {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    bool nontrivial() const { return a > b && b > 1; }
};

// binom(n, k); out-of-range k (k < 0 or k > n) yields 0
Int binomial(std::uint64_t n, std::int64_t k);

// vp(binom(n, k)) via Legendre; 0 <= k <= n
std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// C_n = binom(2n, n) / (n + 1)
Int catalan(std::uint64_t n);

// N(a, b) = binom(a, b) * binom(a, b-1) / a; 0 when a < b, 1 when b == a or b == 1
Int narayana(NarayanaIndex idx);

// vp(N(a, b)) via Legendre, never by factoring the value; a >= b >= 1
std::uint64_t narayana_valuation(NarayanaIndex idx, std::uint64_t p);

// Full factorization of N(a, b) through factorial valuations; a >= b >= 1
arith::PrimeFactorization narayana_factorization(NarayanaIndex idx);

// sum_{k=1..n} N(n, k), which equals C_n
Int narayana_row_sum(std::uint64_t n);

}  // namespace narayana::combinatorics
