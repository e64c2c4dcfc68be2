#include "recnum/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "recnum/errors.hpp"

namespace recnum {
namespace {

// Landau's ordering function x (log log x)^{k-1} / ((k-1)! log x).
double landau_term(double x, int k) {
  double ll = std::log(std::log(x));
  double fact = k == 3 ? 2.0 : 1.0;
  return x * std::pow(ll, k - 1) / (fact * std::log(x));
}

double envelope_term(double x) {
  double l = std::log(x);
  double ll = std::log(l);
  return x / l + x * ll / l + x * ll * ll / (2 * l);
}

}  // namespace

void for_each_omega(uint64_t x, uint64_t budget,
                    const std::function<void(uint64_t, uint32_t)>& fn) {
  if (x == 0) throw std::invalid_argument("x must be positive");
  if (x > budget) {
    throw ResourceError("x " + std::to_string(x) + " exceeds sieve budget " +
                        std::to_string(budget));
  }
  const uint64_t step = 1u << 17;
  std::vector<uint64_t> base =
      primes_up_to(static_cast<uint64_t>(std::sqrt(double(x))) + 1);
  std::vector<uint64_t> remaining(step);
  std::vector<uint32_t> omega(step);
  for (uint64_t lo = 1; lo <= x; lo += step) {
    uint64_t hi = std::min(x, lo + step - 1);
    size_t len = hi - lo + 1;
    for (size_t i = 0; i < len; ++i) {
      remaining[i] = lo + i;
      omega[i] = 0;
    }
    for (uint64_t p : base) {
      if (p * p > hi) break;
      for (uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
        size_t i = m - lo;
        ++omega[i];
        do {
          remaining[i] /= p;
        } while (remaining[i] % p == 0);
      }
    }
    for (size_t i = 0; i < len; ++i) {
      fn(lo + i, omega[i] + (remaining[i] > 1 ? 1 : 0));
    }
  }
}

uint64_t pi_k(uint64_t x, int k, uint64_t budget) {
  if (k < 1 || k > 3) throw std::invalid_argument("k must be in [1, 3]");
  uint64_t count = 0;
  for_each_omega(x, budget, [&](uint64_t, uint32_t om) {
    if (om == static_cast<uint32_t>(k)) ++count;
  });
  return count;
}

DensityReport density_report(std::span<const uint64_t> checkpoints,
                             std::span<const uint64_t> recurrent,
                             std::optional<std::pair<double, double>> bound_ab,
                             uint64_t budget) {
  if (checkpoints.empty()) {
    throw std::invalid_argument("at least one checkpoint required");
  }
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < kMinCheckpoint) {
      throw std::invalid_argument("checkpoint " +
                                  std::to_string(checkpoints[i]) +
                                  " below floor " +
                                  std::to_string(kMinCheckpoint));
    }
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw std::invalid_argument("checkpoints must be strictly ascending");
    }
  }
  DensityReport rep;
  rep.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  rep.bound_ab = bound_ab;

  // One omega pass to the last checkpoint, snapshotting at each one.
  uint64_t x_max = checkpoints.back();
  std::array<uint64_t, 3> counts{0, 0, 0};
  size_t next = 0;
  for_each_omega(x_max, budget, [&](uint64_t n, uint32_t om) {
    while (next < checkpoints.size() && n > checkpoints[next]) {
      for (int k = 0; k < 3; ++k) rep.pi[k].push_back(counts[k]);
      ++next;
    }
    if (om >= 1 && om <= 3) ++counts[om - 1];
  });
  while (next < checkpoints.size()) {
    for (int k = 0; k < 3; ++k) rep.pi[k].push_back(counts[k]);
    ++next;
  }

  for (size_t i = 0; i < rep.checkpoints.size(); ++i) {
    uint64_t x = rep.checkpoints[i];
    auto end = std::upper_bound(recurrent.begin(), recurrent.end(), x);
    rep.f.push_back(static_cast<uint64_t>(end - recurrent.begin()));
    double xd = static_cast<double>(x);
    for (int k = 1; k <= 3; ++k) {
      rep.landau_ratio[k - 1].push_back(
          static_cast<double>(rep.pi[k - 1][i]) / landau_term(xd, k));
    }
    rep.envelope_c.push_back(static_cast<double>(rep.f[i]) /
                             envelope_term(xd));
    if (bound_ab) {
      auto [A, B] = *bound_ab;
      double l = std::log(xd), ll = std::log(l);
      for (int k = 1; k <= 3; ++k) {
        double fact = k == 3 ? 2.0 : 1.0;
        double rhs = A * xd * std::pow(ll + B, k - 1) / (fact * l);
        rep.bound_holds[k - 1].push_back(
            static_cast<double>(rep.pi[k - 1][i]) < rhs);
      }
    }
  }
  return rep;
}

void DensityReport::write_csv(std::ostream& os) const {
  os << "x,f,pi1,pi2,pi3,ratio1,ratio2,ratio3,envelope_C\n";
  char buf[64];
  for (size_t i = 0; i < checkpoints.size(); ++i) {
    os << checkpoints[i] << ',' << f[i] << ',' << pi[0][i] << ',' << pi[1][i]
       << ',' << pi[2][i];
    for (int k = 0; k < 3; ++k) {
      std::snprintf(buf, sizeof buf, "%.6f", landau_ratio[k][i]);
      os << ',' << buf;
    }
    std::snprintf(buf, sizeof buf, "%.6f", envelope_c[i]);
    os << ',' << buf << '\n';
  }
}

std::string DensityReport::to_json() const {
  nlohmann::json j;
  j["checkpoints"] = checkpoints;
  j["f"] = f;
  for (int k = 0; k < 3; ++k) j["pi"].push_back(pi[k]);
  for (int k = 0; k < 3; ++k) j["landau_ratio"].push_back(landau_ratio[k]);
  j["envelope_C"] = envelope_c;
  if (bound_ab) {
    j["bound"]["A"] = bound_ab->first;
    j["bound"]["B"] = bound_ab->second;
    for (int k = 0; k < 3; ++k) {
      j["bound"]["holds"].push_back(bound_holds[k]);
    }
  }
  return j.dump();
}

Rational bound_poly(long long u, long long x) {
  if (u < 1 || u > 1'000'000'000) {
    throw std::invalid_argument("u must be in [1, 10^9]");
  }
  Rational U(u), X(x);
  Rational x2 = X * X;
  Rational x3 = x2 * X;
  Rational x4 = x3 * X;
  Rational x5 = x4 * X;
  return -(U * x5) + (U + Rational(3)) * x4 - Rational(2 * u + 3, u) * x3 +
         Rational(3 * u + 1, u * u) * x2 - Rational(2, u * u) * X +
         Rational(1, u * u);
}

Rational bound_gap(long long u, long long x) {
  Rational X(x);
  return bound_poly(u, x) - (X * X + Rational(1));
}

std::vector<std::pair<int, int>> verify_bounds_lemma(int u_max, int x_max) {
  if (u_max < 1 || x_max < 2) {
    throw std::invalid_argument("need u_max >= 1 and x_max >= 2");
  }
  std::vector<std::pair<int, int>> hits;
  for (int u = 1; u <= u_max; ++u) {
    for (int x = 2; x <= x_max; ++x) {
      if (bound_gap(u, x).sign() >= 0) hits.emplace_back(u, x);
    }
  }
  return hits;
}

TailCheck bounds_lemma_tail(int u_lo, int u_hi, int x_max) {
  if (u_lo < 1 || u_hi < u_lo || x_max < 2) {
    throw std::invalid_argument("need 1 <= u_lo <= u_hi and x_max >= 2");
  }
  TailCheck check;
  for (int u = u_lo; u <= u_hi; ++u) {
    if (bound_poly(u, 2).sign() >= 0) check.p_at_2_negative = false;
    Rational prev = bound_poly(u, 2);
    for (int x = 3; x <= x_max; ++x) {
      Rational cur = bound_poly(u, x);
      if (!(cur < prev)) check.decreasing_in_x = false;
      prev = cur;
    }
  }
  return check;
}

std::vector<std::pair<uint64_t, uint64_t>> conjecture_pairs(uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("limit must be >= 2");
  std::vector<uint64_t> primes = primes_up_to(limit);
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  for (size_t i = 0; i < primes.size(); ++i) {
    uint64_t p = primes[i];
    for (size_t j = i + 1; j < primes.size(); ++j) {
      uint64_t q = primes[j];
      if (q >= p * p) break;
      if ((q - p) % (p * p - q) == 0) pairs.emplace_back(p, q);
    }
  }
  return pairs;
}

}  // namespace recnum
