#include "recnum/recfit.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "recnum/errors.hpp"

namespace recnum {
namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw ResourceError(std::string(what) + ": value outside 64-bit range");
  }
  return static_cast<long long>(v);
}

i128 cross(i128 x1, i128 y1, i128 x2, i128 y2) { return x1 * y2 - y1 * x2; }

// g = gcd(a, b) > 0 and x*a + y*b = g, for a, b not both zero.
struct ExtGcd {
  i128 g, x, y;
};

ExtGcd ext_gcd(i128 a, i128 b) {
  if (b == 0) {
    if (a >= 0) return {a, 1, 0};
    return {-a, -1, 0};
  }
  ExtGcd sub = ext_gcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

// Canonical line through (a0, b0) with direction (da, db) != (0, 0).
AffineSolutionSet make_line(i128 a0, i128 b0, i128 da, i128 db) {
  i128 g = ext_gcd(da, db).g;
  da /= g;
  db /= g;
  if (da < 0 || (da == 0 && db < 0)) {
    da = -da;
    db = -db;
  }
  // Pick t minimizing |a|, then |b|, then (a, b); the optimum is within
  // one step of the rounded ratio on whichever coordinate varies.
  i128 lead = da != 0 ? da : db;
  i128 pos = da != 0 ? a0 : b0;
  i128 t0 = -pos / lead;  // truncated; neighbors cover the floor/ceil cases
  i128 best_a = 0, best_b = 0;
  bool have = false;
  for (i128 t = t0 - 2; t <= t0 + 2; ++t) {
    i128 ca = a0 + t * da;
    i128 cb = b0 + t * db;
    if (!have) {
      best_a = ca;
      best_b = cb;
      have = true;
      continue;
    }
    i128 abs_ca = ca < 0 ? -ca : ca;
    i128 abs_cb = cb < 0 ? -cb : cb;
    i128 abs_ba = best_a < 0 ? -best_a : best_a;
    i128 abs_bb = best_b < 0 ? -best_b : best_b;
    if (abs_ca != abs_ba ? abs_ca < abs_ba
        : abs_cb != abs_bb ? abs_cb < abs_bb
        : ca != best_a     ? ca < best_a
                           : cb < best_b) {
      best_a = ca;
      best_b = cb;
    }
  }
  AffineSolutionSet s;
  s.kind = SolutionKind::kLine;
  s.a = checked_ll(best_a, "line base");
  s.b = checked_ll(best_b, "line base");
  s.da = checked_ll(da, "line direction");
  s.db = checked_ll(db, "line direction");
  return s;
}

}  // namespace

AffineSolutionSet AffineSolutionSet::plane() { return {}; }

AffineSolutionSet AffineSolutionSet::empty() {
  AffineSolutionSet s;
  s.kind = SolutionKind::kEmpty;
  return s;
}

AffineSolutionSet AffineSolutionSet::point(long long a, long long b) {
  AffineSolutionSet s;
  s.kind = SolutionKind::kPoint;
  s.a = a;
  s.b = b;
  return s;
}

AffineSolutionSet AffineSolutionSet::line(long long a0, long long b0,
                                          long long da, long long db) {
  if (da == 0 && db == 0) {
    throw std::invalid_argument("line: direction must be nonzero");
  }
  return make_line(a0, b0, da, db);
}

bool AffineSolutionSet::contains(long long pa, long long pb) const {
  switch (kind) {
    case SolutionKind::kPlane:
      return true;
    case SolutionKind::kEmpty:
      return false;
    case SolutionKind::kPoint:
      return pa == a && pb == b;
    case SolutionKind::kLine: {
      // On the line iff (p - base) is parallel to the primitive direction,
      // and parallel to a primitive vector means an integer multiple of it.
      i128 ra = static_cast<i128>(pa) - a;
      i128 rb = static_cast<i128>(pb) - b;
      return cross(ra, rb, da, db) == 0;
    }
  }
  return false;
}

AffineSolutionSet solve_line(const LinearEquation& eq) {
  i128 al = eq.alpha, be = eq.beta, ga = eq.gamma;
  if (al == 0 && be == 0) {
    return ga == 0 ? AffineSolutionSet::plane() : AffineSolutionSet::empty();
  }
  ExtGcd e = ext_gcd(al, be);
  if (ga % e.g != 0) return AffineSolutionSet::empty();
  i128 k = ga / e.g;
  // Particular solution (x*k, y*k); direction (beta/g, -alpha/g) spans
  // the homogeneous solutions.
  return make_line(e.x * k, e.y * k, be / e.g, -al / e.g);
}

AffineSolutionSet intersect(const AffineSolutionSet& s1,
                            const AffineSolutionSet& s2) {
  using K = SolutionKind;
  if (s1.kind == K::kEmpty || s2.kind == K::kEmpty) {
    return AffineSolutionSet::empty();
  }
  if (s1.kind == K::kPlane) return s2;
  if (s2.kind == K::kPlane) return s1;
  if (s1.kind == K::kPoint) {
    return s2.contains(s1.a, s1.b) ? s1 : AffineSolutionSet::empty();
  }
  if (s2.kind == K::kPoint) {
    return s1.contains(s2.a, s2.b) ? s2 : AffineSolutionSet::empty();
  }
  // Line vs line. Parallel directions: either the same canonical line or
  // disjoint. Otherwise solve base1 + t*dir1 = base2 + s*dir2 for t; the
  // meet is a lattice point only when t is integral.
  i128 det = cross(s1.da, s1.db, s2.da, s2.db);
  i128 ra = static_cast<i128>(s2.a) - s1.a;
  i128 rb = static_cast<i128>(s2.b) - s1.b;
  if (det == 0) {
    if (cross(ra, rb, s1.da, s1.db) == 0) return s1;
    return AffineSolutionSet::empty();
  }
  i128 tn = cross(ra, rb, s2.da, s2.db);
  if (tn % det != 0) return AffineSolutionSet::empty();
  i128 t = tn / det;
  return AffineSolutionSet::point(
      checked_ll(s1.a + t * s1.da, "intersection point"),
      checked_ll(s1.b + t * s1.db, "intersection point"));
}

AffineSolutionSet fit_order2(std::span<const uint64_t> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("fit_order2: sequence must be non-empty");
  }
  for (uint64_t v : seq) {
    if (v >= (1ull << 63)) {
      throw ResourceError("fit_order2: term " + std::to_string(v) +
                          " outside signed 64-bit range");
    }
  }
  if (seq[0] == 0) {
    throw std::invalid_argument("fit_order2: terms must be positive");
  }
  for (size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] <= seq[i - 1]) {
      throw std::invalid_argument(
          "fit_order2: sequence must be strictly increasing");
    }
  }
  AffineSolutionSet sol = AffineSolutionSet::plane();
  for (size_t i = 2; i < seq.size(); ++i) {
    LinearEquation eq{static_cast<long long>(seq[i - 1]),
                      static_cast<long long>(seq[i - 2]),
                      static_cast<long long>(seq[i])};
    sol = intersect(sol, solve_line(eq));
    if (sol.kind == SolutionKind::kEmpty) break;
  }
  return sol;
}

long long closed_form_d(int i, long long p, long long a, long long b) {
  // Keeps every monomial below 2^126 so the 128-bit intermediates are exact.
  if (std::llabs(a) > (1ll << 31) || std::llabs(b) > (1ll << 31) ||
      std::llabs(p) > (1ll << 32)) {
    throw ResourceError("closed_form_d: argument magnitude too large");
  }
  i128 pp = p, aa = a, bb = b;
  i128 v;
  switch (i) {
    case 2:
      v = pp;
      break;
    case 3:
      v = aa * pp + bb;
      break;
    case 4:
      v = (aa * aa + bb) * pp + aa * bb;
      break;
    case 5:
      v = (aa * aa * aa + 2 * aa * bb) * pp + bb * (aa * aa + bb);
      break;
    default:
      throw std::invalid_argument("closed_form_d: index must be in [2, 5]");
  }
  return checked_ll(v, "closed_form_d");
}

}  // namespace recnum
