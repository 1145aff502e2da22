#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "narayana/errors.hpp"

namespace narayana::arith {

using Int = mpz_class;

// floor(sqrt(x)); x >= 0
Int isqrt(const Int& x);
std::uint64_t isqrt_u64(std::uint64_t x);

struct RootResult {
    Int root;    // floor(x^(1/k))
    bool exact;  // root^k == x
};

// x >= 1, k >= 2
RootResult kth_root(const Int& x, unsigned k);

struct PerfectPower {
    Int base;    // >= 2
    unsigned k;  // >= 2, maximal
};

// Maximal-exponent representation x = base^k, or nullopt when x is 1 or not a
// nontrivial power. Maximality guarantees perfect_power(base) is nullopt.
std::optional<PerfectPower> perfect_power(const Int& x);

struct SquarefreeDecomposition {
    std::uint64_t b;  // the input
    std::uint64_t d;  // squarefree part
    std::uint64_t s;  // b == d * s^2
};

SquarefreeDecomposition squarefree_decompose(std::uint64_t b);

// p-adic valuation of x >= 1
unsigned vp(const Int& x, std::uint64_t p);
unsigned vp_u64(std::uint64_t x, std::uint64_t p);

// Legendre: vp(n!) = sum_{i>=1} floor(n / p^i)
std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p);

struct PrimeFactorization {
    // strictly increasing primes, exponents >= 1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    Int value() const;
    // gcd of all exponents; 0 for the empty factorization (value 1)
    std::uint64_t exponent_gcd() const;
};

PrimeFactorization factorize_u64(std::uint64_t x);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
// Immutable shared sieve covering at least [2, n]; grows geometrically and is
// safe to request from any thread.
std::shared_ptr<const std::vector<std::uint64_t>> shared_primes(std::uint64_t n);

bool is_prime(std::uint64_t n);

// largest prime < n; throws precondition_error when none exists (n <= 2)
std::uint64_t prev_prime(std::uint64_t n);

// primes p with lo <= p <= hi
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// largest prime dividing x; x >= 2
std::uint64_t greatest_prime_factor(std::uint64_t x);

}  // namespace narayana::arith
