#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recnum/arithmetic.hpp"

namespace recnum {

// Structural families of recurrent numbers. Shapes:
//   C1  p^k
//   C2  p^k * q with q > p^k
//   C3  p * q^k with p < q
//   C4  p * q^k * r with p < q, r > p*q^k
//   C5  n = 60
//   C6  p^3 * q with p < q < p^2 and (p^2 - q) | (q - p)
//   C7  p*q*r with p < q < r < p*q and (p^2 - q) | (p*q - r)
//   X1  n = 1                             (oracle-complete only)
//   X2  p^2 * q with p < q < p^2         (oracle-complete only)
enum class CategoryTag { kC1, kC2, kC3, kC4, kC5, kC6, kC7, kX1, kX2 };

const char* to_string(CategoryTag tag);

// kTheoremLiteral matches C1-C7 only; kOracleComplete adds X1 and X2,
// which closes the gap between the category list and the oracle.
enum class Mode { kTheoremLiteral, kOracleComplete };

struct Category {
  CategoryTag tag = CategoryTag::kC1;
  uint64_t p = 0, q = 0, r = 0;  // the primes the shape uses, 0 if unused
  uint32_t k = 0;                // the exponent the shape uses, 0 if unused

  uint64_t n() const;  // the member this parametrization denotes
  bool operator==(const Category&) const = default;
};

struct Classification {
  uint64_t n = 1;
  std::vector<Category> categories;  // all matches, in tag order
  // Present iff categories is non-empty; every matching category predicts
  // the same set, which equals the actual small-divisor set.
  std::optional<std::vector<uint64_t>> predicted;
};

Classification classify(const Factorization& f, Mode mode);
Classification classify(uint64_t n, Mode mode);

// The small-divisor set the category's shape dictates, with no divisor
// enumeration.
std::vector<uint64_t> predicted_small_divisors(const Category& c);

// True iff some category (of the mode) matches; never enumerates divisors.
bool is_recurrent_fast(const Factorization& f, Mode mode);
bool is_recurrent_fast(uint64_t n, Mode mode);

}  // namespace recnum
