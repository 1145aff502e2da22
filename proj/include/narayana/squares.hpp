#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "narayana/pell.hpp"

namespace narayana::squares {

using arith::Int;

// a certified pair (a, b) with N(a, b) a perfect square
struct SquareHit {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    Int root;                    // isqrt(N(a, b)), verified exact
    pell::PellSolution witness;  // the (n, m) behind a = (n + b - 1) / 2
    std::uint64_t s = 0;         // from b = d * s^2
};

// true iff a*b*(a-b+1) is a perfect square, equivalently N(a, b) is one; a >= b >= 1
bool is_square_pair(std::uint64_t a, std::uint64_t b);

// all hits with b < a <= a_limit, each verified by exact square root of N(a, b)
std::vector<SquareHit> squares_for_b(std::uint64_t b, std::uint64_t a_limit);

// the three explicit families; quotient a*(a-b+1)/b equals n^2, n^2, n^6
std::pair<std::uint64_t, std::uint64_t> family_odd(std::uint64_t n);   // n odd >= 3
std::pair<std::uint64_t, std::uint64_t> family_even(std::uint64_t n);  // n even >= 4
std::pair<std::uint64_t, std::uint64_t> family_poly(std::uint64_t n);  // n >= 2

// all (a, b) with 2 <= b <= a-b+1, b < a <= a_max, N(a, b) a nontrivial
// perfect square; sorted by (a, b)
std::vector<std::pair<std::uint64_t, std::uint64_t>> figure1_data(std::uint64_t a_max,
                                                                  unsigned workers = 1);

struct CrosscheckReport {
    std::uint64_t b = 0;
    std::uint64_t a_limit = 0;
    std::vector<std::uint64_t> pell_as;    // from squares_for_b
    std::vector<std::uint64_t> oracle_as;  // from is_square_pair scan
    bool equal = false;
};

CrosscheckReport crosscheck(std::uint64_t b, std::uint64_t a_limit);

}  // namespace narayana::squares
