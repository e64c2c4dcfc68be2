#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace recnum {

// One linear constraint alpha*a + beta*b = gamma over the integers.
struct LinearEquation {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
};

enum class SolutionKind { kPlane, kLine, kPoint, kEmpty };

// Integer solution set in the (a, b) plane: all of Z^2, a lattice line,
// a single point, or nothing. Lines are kept canonical: primitive
// direction with first nonzero component positive, base point the
// lattice point minimizing |a|, then |b|, then (a, b) lexicographically.
// Equal sets therefore compare equal member-wise.
struct AffineSolutionSet {
  SolutionKind kind = SolutionKind::kPlane;
  long long a = 0, b = 0;    // point, or line base point
  long long da = 0, db = 0;  // line direction, zero otherwise

  static AffineSolutionSet plane();
  static AffineSolutionSet empty();
  static AffineSolutionSet point(long long a, long long b);
  // Accepts any point on the line and any nonzero direction; canonicalizes.
  static AffineSolutionSet line(long long a0, long long b0, long long da,
                                long long db);

  bool contains(long long pa, long long pb) const;
  bool operator==(const AffineSolutionSet&) const = default;
};

// Solution set of a single equation: Plane when 0=0, Empty when 0=c or
// when gcd(alpha,beta) does not divide gamma, a Line otherwise.
AffineSolutionSet solve_line(const LinearEquation& eq);

AffineSolutionSet intersect(const AffineSolutionSet& s1,
                            const AffineSolutionSet& s2);

// All (a, b) with seq[i] = a*seq[i-1] + b*seq[i-2] for every i >= 2.
// seq must be non-empty, positive, strictly increasing, and below 2^63
// (larger values throw ResourceError; violations of the rest throw
// std::invalid_argument). Sequences of length <= 2 impose no constraint.
AffineSolutionSet fit_order2(std::span<const uint64_t> seq);

// d_i of the sequence 1, p, ap+b, ... for i in [2, 5]:
// d_2=p, d_3=ap+b, d_4=(a^2+b)p+ab, d_5=(a^3+2ab)p+b(a^2+b).
// Throws std::invalid_argument for i outside [2, 5], ResourceError if the
// value leaves the signed 64-bit range.
long long closed_form_d(int i, long long p, long long a, long long b);

}  // namespace recnum
