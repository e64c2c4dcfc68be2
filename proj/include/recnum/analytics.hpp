#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recnum/enumerate.hpp"
#include "recnum/rational.hpp"

namespace recnum {

// Smallest admissible density checkpoint; keeps log log x above 0.52.
inline constexpr uint64_t kMinCheckpoint = 100;

// Count of n <= x with exactly k distinct prime factors, k in [1, 3].
// Segmented distinct-factor sieve under the same budget rules as sweep.
uint64_t pi_k(uint64_t x, int k, uint64_t budget = kDefaultSweepBudget);

// Same sieve, one pass: fn(n, omega(n)) for every n in [1, x], ascending.
void for_each_omega(uint64_t x, uint64_t budget,
                    const std::function<void(uint64_t, uint32_t)>& fn);

// Densities of the recurrent numbers against the counts of n with k
// distinct prime factors. All logs natural, ratios binary64.
struct DensityReport {
  std::vector<uint64_t> checkpoints;
  std::vector<uint64_t> f;                  // # recurrent <= x
  std::array<std::vector<uint64_t>, 3> pi;  // pi_k(x), k = 1..3
  // pi_k(x) / (x (log log x)^{k-1} / ((k-1)! log x)), k = 1..3
  std::array<std::vector<double>, 3> landau_ratio;
  // f(x) / (x/log x + x log log x/log x + x (log log x)^2/(2 log x))
  std::vector<double> envelope_c;
  // Optional check pi_k(x) < A x (log log x + B)^{k-1} / ((k-1)! log x).
  std::optional<std::pair<double, double>> bound_ab;
  std::array<std::vector<bool>, 3> bound_holds;

  void write_csv(std::ostream& os) const;
  std::string to_json() const;
};

// recurrent: ascending, complete up to the last checkpoint (a sweep
// result or a read b-file). Checkpoints ascending, each >= kMinCheckpoint
// (std::invalid_argument otherwise); last one within budget.
DensityReport density_report(
    std::span<const uint64_t> checkpoints, std::span<const uint64_t> recurrent,
    std::optional<std::pair<double, double>> bound_ab = std::nullopt,
    uint64_t budget = kDefaultSweepBudget);

// The quintic bound polynomial, exactly:
// P(u,x) = -u x^5 + (u+3) x^4 - ((2u+3)/u) x^3 + ((3u+1)/u^2) x^2
//          - (2/u^2) x + 1/u^2.
Rational bound_poly(long long u, long long x);

// P(u,x) - (x^2 + 1); the inequality holds at (u,x) iff this is >= 0.
Rational bound_gap(long long u, long long x);

// All integer pairs 1 <= u <= u_max, 2 <= x <= x_max with
// bound_gap(u,x) >= 0. Requires u_max >= 1, x_max >= 2.
std::vector<std::pair<int, int>> verify_bounds_lemma(int u_max, int x_max);

// Exact-rational check of the tail behavior on a finite box: for every
// u in [u_lo, u_hi], P(u, x) strictly decreases over integer x in
// [2, x_max], and P(u, 2) < 0.
struct TailCheck {
  bool decreasing_in_x = true;
  bool p_at_2_negative = true;
};

TailCheck bounds_lemma_tail(int u_lo, int u_hi, int x_max);

// Prime pairs p < q < p^2 with q <= limit and (p^2 - q) | (q - p),
// ordered by (p, q). For each of them p^3 q is recurrent with small
// divisors {1, p, q, p^2}.
std::vector<std::pair<uint64_t, uint64_t>> conjecture_pairs(uint64_t limit);

}  // namespace recnum
