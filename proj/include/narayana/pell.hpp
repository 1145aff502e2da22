#pragma once

#include <cstdint>
#include <vector>

#include "narayana/arith.hpp"

namespace narayana::pell {

using arith::Int;

// n^2 - d*m^2 = z^2 over the integers, d squarefree
struct PellInstance {
    std::uint64_t d = 0;
    std::uint64_t z = 0;
};

// periodic continued fraction of sqrt(d): [a0; period...], last element = 2*a0
struct SurdExpansion {
    std::uint64_t a0 = 0;
    std::vector<std::uint64_t> period;
};

// minimal positive (n1, m1) with n1^2 - d*m1^2 = 1
struct FundamentalSolution {
    Int n1;
    Int m1;
};

enum class ParityClass { all_k, even_k, odd_k, none };

struct Representative {
    Int nprime;
    Int mprime;
    ParityClass parity = ParityClass::all_k;
};

struct PellSolution {
    Int n;
    Int m;
    int rep_index = -1;   // index into representatives(); -1 for degenerate d = 1
    long long k = 0;      // unit exponent relative to the representative
};

// d >= 2, non-square; throws degenerate_surd for perfect squares
SurdExpansion sqrt_cf(std::uint64_t d);

FundamentalSolution fundamental_solution(std::uint64_t d);

// coefficients of (n1 + m1*sqrt(d))^k; negative k uses the conjugate
std::pair<Int, Int> unit_power(std::uint64_t d, long long k);

// exact comparison  a < b*sqrt(d)  without floating point
bool less_than_sqrt(const Int& a, const Int& b, std::uint64_t d);

// parity classification per the even-m solution lemma; n1 is accepted for
// interface completeness (the classification depends only on d and the
// representative's parities)
ParityClass classify_parity(const Representative& rep, std::uint64_t d, const Int& n1);

// all nonnegative (n', m') with n'^2 - d*m'^2 = z^2 inside the exact bounds
//   n' < z*sqrt(n1 + m1*sqrt(d)),  m' < z*sqrt((n1 + m1*sqrt(d)) / d),
// sorted by n'
std::vector<Representative> representatives(const PellInstance& inst);

// one representative per unit orbit (the minimal-n element), sorted by n'
std::vector<Representative> representatives_deduped(const PellInstance& inst);

// every solution (n, m) with n >= 1, m >= 0 even and n <= n_limit, exactly
// once, in strictly increasing n
std::vector<PellSolution> solutions_even_m(const PellInstance& inst, const Int& n_limit);

// d = 1 branch: n^2 - m^2 = z^2 with m >= 2 even, via divisor pairs of z^2
std::vector<PellSolution> solve_degenerate(std::uint64_t z);

}  // namespace narayana::pell
