#include "recnum/classifier.hpp"

#include <stdexcept>

#include "recnum/errors.hpp"

namespace recnum {
namespace {

using u128 = unsigned __int128;

// p^k as u128; every call site compares against a 64-bit bound, so the
// value is capped rather than grown without limit.
u128 pow_u128(uint64_t p, uint32_t k) {
  u128 r = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r *= p;
    if (r > (static_cast<u128>(1) << 96)) break;  // far above any n
  }
  return r;
}

void match_categories(const Factorization& f, Mode mode,
                      std::vector<Category>& out) {
  const auto& fs = f.factors;
  if (fs.size() == 1) {
    const auto [p, k] = fs[0];
    out.push_back({CategoryTag::kC1, p, 0, 0, k});
  } else if (fs.size() == 2) {
    const auto [p, kp] = fs[0];
    const auto [q, kq] = fs[1];
    if (kq == 1 && q > pow_u128(p, kp)) {
      out.push_back({CategoryTag::kC2, p, q, 0, kp});
    }
    if (kp == 1) {
      out.push_back({CategoryTag::kC3, p, q, 0, kq});
    }
    if (kp == 3 && kq == 1 && q < p * p && (q - p) % (p * p - q) == 0) {
      out.push_back({CategoryTag::kC6, p, q, 0, 0});
    }
  } else if (fs.size() == 3) {
    const auto [p, kp] = fs[0];
    const auto [q, kq] = fs[1];
    const auto [r, kr] = fs[2];
    if (kp == 1 && kr == 1 && r > pow_u128(q, kq) * p) {
      out.push_back({CategoryTag::kC4, p, q, r, kq});
    }
    if (f.n == 60) {
      out.push_back({CategoryTag::kC5, 0, 0, 0, 0});
    }
    // The divisibility test alone would admit r > p*q (e.g. 42 = 2*3*7),
    // whose fourth divisor is p*q rather than r; the shape needs r < p*q.
    // p^2 - q may be negative (70 = 2*5*7 has p^2 - q = -1), so this runs
    // in signed arithmetic; p*q <= n^(2/3) keeps everything well inside
    // 64 bits.
    if (kp == 1 && kq == 1 && kr == 1 && r < p * q) {
      long long den = static_cast<long long>(p * p) - static_cast<long long>(q);
      long long num = static_cast<long long>(p * q) - static_cast<long long>(r);
      if (den != 0 && num % den == 0) {
        out.push_back({CategoryTag::kC7, p, q, r, 0});
      }
    }
  }
  if (mode == Mode::kOracleComplete) {
    if (f.n == 1) {
      out.push_back({CategoryTag::kX1, 0, 0, 0, 0});
    }
    if (fs.size() == 2 && fs[0].second == 2 && fs[1].second == 1 &&
        fs[1].first < fs[0].first * fs[0].first) {
      out.push_back({CategoryTag::kX2, fs[0].first, fs[1].first, 0, 0});
    }
  }
}

void append_strand(std::vector<uint64_t>& out, uint64_t p, uint64_t q,
                   uint32_t j_max, bool with_p_at_top) {
  // Interleaves q^j and p*q^j ascending (p < q ensures the order).
  uint64_t qj = 1;
  for (uint32_t j = 0; j <= j_max; ++j) {
    out.push_back(qj);
    if (j < j_max || with_p_at_top) out.push_back(p * qj);
    qj *= q;
  }
}

}  // namespace

const char* to_string(CategoryTag tag) {
  switch (tag) {
    case CategoryTag::kC1:
      return "C1";
    case CategoryTag::kC2:
      return "C2";
    case CategoryTag::kC3:
      return "C3";
    case CategoryTag::kC4:
      return "C4";
    case CategoryTag::kC5:
      return "C5";
    case CategoryTag::kC6:
      return "C6";
    case CategoryTag::kC7:
      return "C7";
    case CategoryTag::kX1:
      return "X1";
    case CategoryTag::kX2:
      return "X2";
  }
  return "?";
}

uint64_t Category::n() const {
  switch (tag) {
    case CategoryTag::kC1: {
      uint64_t v = 1;
      for (uint32_t i = 0; i < k; ++i) v *= p;
      return v;
    }
    case CategoryTag::kC2: {
      uint64_t v = q;
      for (uint32_t i = 0; i < k; ++i) v *= p;
      return v;
    }
    case CategoryTag::kC3: {
      uint64_t v = p;
      for (uint32_t i = 0; i < k; ++i) v *= q;
      return v;
    }
    case CategoryTag::kC4: {
      uint64_t v = p * r;
      for (uint32_t i = 0; i < k; ++i) v *= q;
      return v;
    }
    case CategoryTag::kC5:
      return 60;
    case CategoryTag::kC6:
      return p * p * p * q;
    case CategoryTag::kC7:
      return p * q * r;
    case CategoryTag::kX1:
      return 1;
    case CategoryTag::kX2:
      return p * p * q;
  }
  return 0;
}

std::vector<uint64_t> predicted_small_divisors(const Category& c) {
  std::vector<uint64_t> out;
  switch (c.tag) {
    case CategoryTag::kC1: {
      uint64_t v = 1;
      for (uint32_t j = 0; j <= c.k / 2; ++j) {
        out.push_back(v);
        v *= c.p;
      }
      break;
    }
    case CategoryTag::kC2: {
      uint64_t v = 1;
      for (uint32_t j = 0; j <= c.k; ++j) {
        out.push_back(v);
        v *= c.p;
      }
      break;
    }
    case CategoryTag::kC3:
      if (c.k % 2 == 1) {
        append_strand(out, c.p, c.q, (c.k - 1) / 2, true);
      } else {
        append_strand(out, c.p, c.q, c.k / 2, false);
      }
      break;
    case CategoryTag::kC4:
      append_strand(out, c.p, c.q, c.k, true);
      break;
    case CategoryTag::kC5:
      out = {1, 2, 3, 4, 5, 6};
      break;
    case CategoryTag::kC6:
      out = {1, c.p, c.q, c.p * c.p};
      break;
    case CategoryTag::kC7:
      out = {1, c.p, c.q, c.r};
      break;
    case CategoryTag::kX1:
      out = {1};
      break;
    case CategoryTag::kX2:
      out = {1, c.p, c.q};
      break;
  }
  return out;
}

Classification classify(const Factorization& f, Mode mode) {
  Classification cls;
  cls.n = f.n;
  match_categories(f, mode, cls.categories);
  if (!cls.categories.empty()) {
    cls.predicted = predicted_small_divisors(cls.categories.front());
  }
  return cls;
}

Classification classify(uint64_t n, Mode mode) {
  return classify(factorize(n), mode);
}

bool is_recurrent_fast(const Factorization& f, Mode mode) {
  std::vector<Category> cats;
  match_categories(f, mode, cats);
  return !cats.empty();
}

bool is_recurrent_fast(uint64_t n, Mode mode) {
  return is_recurrent_fast(factorize(n), mode);
}

}  // namespace recnum
