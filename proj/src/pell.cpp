#include "narayana/pell.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace narayana::pell {

namespace {

// (x + y*sqrt(d)) * (u + v*sqrt(d))
std::pair<Int, Int> mul(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b,
                        std::uint64_t d) {
    return {a.first * b.first + a.second * b.second * static_cast<unsigned long>(d),
            a.first * b.second + a.second * b.first};
}

}  // namespace

SurdExpansion sqrt_cf(std::uint64_t d) {
    if (d < 2) throw degenerate_surd("sqrt_cf: d must be >= 2");
    std::uint64_t a0 = arith::isqrt_u64(d);
    if (a0 * a0 == d) throw degenerate_surd("sqrt_cf: " + std::to_string(d) + " is a perfect square");

    SurdExpansion se;
    se.a0 = a0;
    // standard P-Q recurrence; the period closes when Q returns to 1
    std::uint64_t P = 0, Q = 1, a = a0;
    do {
        P = a * Q - P;
        Q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(d) - static_cast<unsigned __int128>(P) * P) / Q);
        a = (a0 + P) / Q;
        se.period.push_back(a);
    } while (Q != 1);
    return se;
}

FundamentalSolution fundamental_solution(std::uint64_t d) {
    SurdExpansion se = sqrt_cf(d);
    std::size_t L = se.period.size();
    // truncate at the end of the first period (L even) or the second (L odd)
    std::size_t terms = (L % 2 == 0) ? L : 2 * L;

    Int h_prev = 1, h = se.a0;
    Int k_prev = 0, k = 1;
    for (std::size_t i = 1; i < terms; ++i) {
        std::uint64_t t = se.period[(i - 1) % L];
        Int h_next = static_cast<unsigned long>(t) * h + h_prev;
        Int k_next = static_cast<unsigned long>(t) * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    if (h * h - static_cast<unsigned long>(d) * k * k != 1)
        throw falsified_step("fundamental_solution: convergent does not solve the unit equation");
    return {h, k};
}

std::pair<Int, Int> unit_power(std::uint64_t d, long long k) {
    FundamentalSolution f = fundamental_solution(d);
    std::pair<Int, Int> base{f.n1, k >= 0 ? f.m1 : -f.m1};
    std::pair<Int, Int> acc{1, 0};
    for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) acc = mul(acc, base, d);
    return acc;
}

bool less_than_sqrt(const Int& a, const Int& b, std::uint64_t d) {
    if (a < 0) return true;
    return a * a < b * b * static_cast<unsigned long>(d);
}

ParityClass classify_parity(const Representative& rep, std::uint64_t d, const Int& n1) {
    (void)n1;
    bool ne = mpz_even_p(rep.nprime.get_mpz_t()) != 0;
    bool me = mpz_even_p(rep.mprime.get_mpz_t()) != 0;
    if (d % 2 == 0 || (ne && me)) return ParityClass::all_k;
    if (!ne && me) return ParityClass::even_k;
    if (ne && !me) return ParityClass::odd_k;
    return ParityClass::none;
}

std::vector<Representative> representatives(const PellInstance& inst) {
    if (inst.d < 2 || arith::squarefree_decompose(inst.d).s != 1)
        throw precondition_error("representatives: d must be squarefree and >= 2");
    if (inst.z < 1) throw precondition_error("representatives: z must be >= 1");

    FundamentalSolution f = fundamental_solution(inst.d);
    Int z2 = Int(static_cast<unsigned long>(inst.z)) * static_cast<unsigned long>(inst.z);
    Int zz_m1 = z2 * f.m1;

    std::vector<Representative> out;
    for (Int m = 0;; ++m) {
        // m' < z*sqrt((n1 + m1*sqrt(d))/d)  <=>  d*m'^2 - z^2*n1 < z^2*m1*sqrt(d)
        Int lhs_m = static_cast<unsigned long>(inst.d) * m * m - z2 * f.n1;
        if (!less_than_sqrt(lhs_m, zz_m1, inst.d)) break;

        Int t = z2 + static_cast<unsigned long>(inst.d) * m * m;
        Int n = arith::isqrt(t);
        if (n * n != t) continue;

        // n' < z*sqrt(n1 + m1*sqrt(d))  <=>  n'^2 - z^2*n1 < z^2*m1*sqrt(d)
        Int lhs_n = n * n - z2 * f.n1;
        if (!less_than_sqrt(lhs_n, zz_m1, inst.d)) continue;

        Representative rep{n, m, ParityClass::all_k};
        rep.parity = classify_parity(rep, inst.d, f.n1);
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

// minimal-n element of the orbit of (n, m) under the unit, coefficients taken
// in absolute value
std::pair<Int, Int> orbit_canonical(Int n, Int m, std::uint64_t d, const FundamentalSolution& f) {
    for (;;) {
        Int nn = abs(n * f.n1 - m * f.m1 * static_cast<unsigned long>(d));
        Int mm = abs(m * f.n1 - n * f.m1);
        if (nn >= n) return {n, m};
        n = nn;
        m = mm;
    }
}

}  // namespace

std::vector<Representative> representatives_deduped(const PellInstance& inst) {
    FundamentalSolution f = fundamental_solution(inst.d);
    std::vector<Representative> out;
    std::map<std::pair<Int, Int>, bool> seen;
    for (const Representative& rep : representatives(inst)) {
        auto key = orbit_canonical(rep.nprime, rep.mprime, inst.d, f);
        if (seen.emplace(key, true).second) out.push_back(rep);
    }
    return out;
}

std::vector<PellSolution> solutions_even_m(const PellInstance& inst, const Int& n_limit) {
    std::vector<Representative> reps = representatives(inst);
    FundamentalSolution f = fundamental_solution(inst.d);
    Int z2 = Int(static_cast<unsigned long>(inst.z)) * static_cast<unsigned long>(inst.z);

    // n determines m (m^2 = (n^2 - z^2)/d), so keying on n deduplicates
    // overlapping representative orbits
    std::map<Int, PellSolution> found;
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
        for (int dir : {+1, -1}) {
            std::pair<Int, Int> unit{f.n1, dir > 0 ? f.m1 : -f.m1};
            std::pair<Int, Int> cur{reps[ri].nprime, reps[ri].mprime};
            long long k = 0;
            int beyond = 0;
            for (;;) {
                Int n = abs(cur.first), m = abs(cur.second);
                if (n <= n_limit) {
                    beyond = 0;
                    if (n >= 1 && mpz_even_p(m.get_mpz_t())) {
                        if (n * n - static_cast<unsigned long>(inst.d) * m * m != z2)
                            throw falsified_step("solutions_even_m: generated pair fails substitution");
                        found.emplace(n, PellSolution{n, m, static_cast<int>(ri), k});
                    }
                } else if (++beyond >= 3) {
                    // |n| grows monotonically after at most one dip; three
                    // consecutive exceedances end the direction
                    break;
                }
                cur = mul(cur, unit, inst.d);
                k += dir;
            }
        }
    }

    std::vector<PellSolution> out;
    out.reserve(found.size());
    for (auto& [n, sol] : found) out.push_back(std::move(sol));
    return out;
}

std::vector<PellSolution> solve_degenerate(std::uint64_t z) {
    if (z < 1) throw precondition_error("solve_degenerate: z must be >= 1");
    // n^2 - m^2 = z^2: factor z^2 = e*f with e <= f, e and f of equal parity
    std::vector<PellSolution> out;
    Int zz = Int(static_cast<unsigned long>(z)) * static_cast<unsigned long>(z);
    for (std::uint64_t e = 1; e <= z; ++e) {
        if ((static_cast<unsigned __int128>(z) * z) % e != 0) continue;
        Int f = zz / static_cast<unsigned long>(e);
        bool f_even = mpz_even_p(f.get_mpz_t()) != 0;
        if (f_even != (e % 2 == 0)) continue;  // need equal parity
        Int n = (f + static_cast<unsigned long>(e)) / 2;
        Int m = (f - static_cast<unsigned long>(e)) / 2;
        if (m >= 2 && mpz_even_p(m.get_mpz_t())) out.push_back({n, m, -1, 0});
    }
    std::sort(out.begin(), out.end(),
              [](const PellSolution& a, const PellSolution& b) { return a.n < b.n; });
    return out;
}

}  // namespace narayana::pell
