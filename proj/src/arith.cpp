#include "narayana/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace narayana::arith {

Int isqrt(const Int& x) {
    if (x < 0) throw precondition_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x == 0) return 0;
    // integer Newton; seed from the bit width so the sequence is decreasing
    int bits = 64 - __builtin_clzll(x);
    std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t next = (r + x / r) / 2;
        if (next >= r) return r;
        r = next;
    }
}

RootResult kth_root(const Int& x, unsigned k) {
    if (k < 2) throw precondition_error("kth_root: k must be >= 2");
    if (x < 1) throw precondition_error("kth_root: x must be >= 1");
    Int r;
    bool exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) != 0;
    return {r, exact};
}

std::optional<PerfectPower> perfect_power(const Int& x) {
    if (x < 1) throw precondition_error("perfect_power: x must be >= 1");
    if (x == 1) return std::nullopt;  // 1 is not a perfect power here
    auto max_k = static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
    for (unsigned k = max_k; k >= 2; --k) {
        RootResult rr = kth_root(x, k);
        if (rr.exact && rr.root >= 2) return PerfectPower{rr.root, k};
    }
    return std::nullopt;
}

SquarefreeDecomposition squarefree_decompose(std::uint64_t b) {
    if (b < 1) throw precondition_error("squarefree_decompose: b must be >= 1");
    std::uint64_t d = 1, s = 1, rest = b;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    if (rest > 1) d *= rest;
    return {b, d, s};
}

unsigned vp(const Int& x, std::uint64_t p) {
    if (x < 1) throw precondition_error("vp: x must be >= 1");
    Int rest, prime(static_cast<unsigned long>(p));
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

unsigned vp_u64(std::uint64_t x, std::uint64_t p) {
    if (x < 1) throw precondition_error("vp_u64: x must be >= 1");
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p) {
    std::uint64_t sum = 0, q = p;
    while (q <= n) {
        sum += n / q;
        if (q > n / p) break;  // q * p would overflow or exceed n
        q *= p;
    }
    return sum;
}

Int PrimeFactorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : entries) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
        v *= pw;
    }
    return v;
}

std::uint64_t PrimeFactorization::exponent_gcd() const {
    std::uint64_t g = 0;
    for (const auto& [p, e] : entries) g = std::gcd(g, e);
    return g;
}

PrimeFactorization factorize_u64(std::uint64_t x) {
    if (x < 1) throw precondition_error("factorize_u64: x must be >= 1");
    PrimeFactorization f;
    for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p != 0) continue;
        std::uint64_t e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        f.entries.emplace_back(p, e);
    }
    if (x > 1) f.entries.emplace_back(x, 1);
    return f;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> sieve(n + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    for (std::uint64_t i = 2; i <= n; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

std::shared_ptr<const std::vector<std::uint64_t>> shared_primes(std::uint64_t n) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::uint64_t>> cache;
    static std::uint64_t cache_limit = 0;

    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache_limit < n) {
        std::uint64_t limit = std::max<std::uint64_t>(n, std::max<std::uint64_t>(1024, cache_limit * 2));
        cache = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(limit));
        cache_limit = limit;
    }
    return cache;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs with the first twelve primes
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t prev_prime(std::uint64_t n) {
    if (n <= 2) throw precondition_error("prev_prime: no prime below " + std::to_string(n));
    for (std::uint64_t c = n - 1;; --c) {
        if (is_prime(c)) return c;
        if (c == 2) break;
    }
    throw precondition_error("prev_prime: no prime found");  // unreachable for n > 2
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = std::max<std::uint64_t>(lo, 2); c <= hi; ++c)
        if (is_prime(c)) out.push_back(c);
    return out;
}

std::uint64_t greatest_prime_factor(std::uint64_t x) {
    if (x < 2) throw precondition_error("greatest_prime_factor: x must be >= 2");
    std::uint64_t best = 1;
    for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        while (x % p == 0) {
            best = p;
            x /= p;
        }
    }
    return x > 1 ? x : best;
}

}  // namespace narayana::arith
