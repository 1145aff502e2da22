#include "narayana/squares.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "narayana/combinatorics.hpp"

namespace narayana::squares {

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt_u128(u128 v) {
    if (v == 0) return 0;
    std::uint64_t high = static_cast<std::uint64_t>(v >> 64);
    int bits = high ? 128 - __builtin_clzll(high)
                    : 64 - __builtin_clzll(static_cast<std::uint64_t>(v));
    u128 r = u128{1} << ((bits + 1) / 2);
    for (;;) {
        u128 next = (r + v / r) / 2;
        if (next >= r) return static_cast<std::uint64_t>(r);
        r = next;
    }
}

}  // namespace

bool is_square_pair(std::uint64_t a, std::uint64_t b) {
    if (b < 1 || a < b) throw precondition_error("is_square_pair: need a >= b >= 1");
    u128 v = static_cast<u128>(a) * b * (a - b + 1);
    std::uint64_t r = isqrt_u128(v);
    return static_cast<u128>(r) * r == v;
}

std::vector<SquareHit> squares_for_b(std::uint64_t b, std::uint64_t a_limit) {
    if (b < 2) throw precondition_error("squares_for_b: b must be > 1");
    std::vector<SquareHit> hits;
    if (a_limit <= b) return hits;

    arith::SquarefreeDecomposition dec = arith::squarefree_decompose(b);
    std::uint64_t z = b - 1;

    std::vector<pell::PellSolution> sols;
    if (dec.d == 1) {
        sols = pell::solve_degenerate(z);
    } else {
        Int n_limit = Int(2) * static_cast<unsigned long>(a_limit) + 1 - static_cast<unsigned long>(b);
        sols = pell::solutions_even_m({dec.d, z}, n_limit);
    }

    for (pell::PellSolution& sol : sols) {
        Int two_a = sol.n + static_cast<unsigned long>(z);
        if (mpz_odd_p(two_a.get_mpz_t()))
            throw falsified_step("squares_for_b: n and b-1 disagree in parity despite even m");
        Int a_big = two_a / 2;
        if (a_big <= static_cast<unsigned long>(b) || a_big > static_cast<unsigned long>(a_limit))
            continue;
        std::uint64_t a = static_cast<std::uint64_t>(a_big.get_ui());

        Int value = combinatorics::narayana({a, b});
        Int root = arith::isqrt(value);
        if (root * root != value)
            throw falsified_step("squares_for_b: solver produced a non-square N(a, b)");
        hits.push_back({a, b, root, std::move(sol), dec.s});
    }
    std::sort(hits.begin(), hits.end(),
              [](const SquareHit& x, const SquareHit& y) { return x.a < y.a; });
    return hits;
}

std::pair<std::uint64_t, std::uint64_t> family_odd(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw precondition_error("family_odd: n must be odd and >= 3");
    return {n * n, (n * n + 1) / 2};
}

std::pair<std::uint64_t, std::uint64_t> family_even(std::uint64_t n) {
    if (n < 4 || n % 2 == 1) throw precondition_error("family_even: n must be even and >= 4");
    return {n * n - 2, (n * n - 2) / 2};
}

std::pair<std::uint64_t, std::uint64_t> family_poly(std::uint64_t n) {
    if (n < 2) throw precondition_error("family_poly: n must be >= 2");
    return {n * n * (n * n + 1), n * n + 1};
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> figure1_block(std::uint64_t a_lo,
                                                                   std::uint64_t a_hi) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    for (std::uint64_t a = a_lo; a <= a_hi; ++a) {
        for (std::uint64_t b = 2; b <= a - b + 1; ++b) {
            if (is_square_pair(a, b)) rows.emplace_back(a, b);
        }
    }
    return rows;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> figure1_data(std::uint64_t a_max,
                                                                  unsigned workers) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    if (a_max < 3) return rows;
    if (workers == 0) workers = 1;

    std::uint64_t lo = 3, count = a_max - lo + 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));

    // contiguous a-blocks per worker, merged in block order: byte-identical
    // output for every worker count
    std::vector<std::future<std::vector<std::pair<std::uint64_t, std::uint64_t>>>> parts;
    std::uint64_t chunk = count / workers, extra = count % workers, start = lo;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (w < extra ? 1 : 0);
        std::uint64_t end = start + len - 1;
        parts.push_back(std::async(std::launch::async, figure1_block, start, end));
        start = end + 1;
    }
    for (auto& part : parts) {
        auto block = part.get();
        rows.insert(rows.end(), block.begin(), block.end());
    }
    return rows;
}

CrosscheckReport crosscheck(std::uint64_t b, std::uint64_t a_limit) {
    if (b < 2) throw precondition_error("crosscheck: b must be > 1");
    CrosscheckReport rep;
    rep.b = b;
    rep.a_limit = a_limit;
    for (const SquareHit& hit : squares_for_b(b, a_limit)) rep.pell_as.push_back(hit.a);
    for (std::uint64_t a = b + 1; a <= a_limit; ++a)
        if (is_square_pair(a, b)) rep.oracle_as.push_back(a);
    rep.equal = rep.pell_as == rep.oracle_as;
    return rep;
}

}  // namespace narayana::squares
