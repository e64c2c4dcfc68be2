#pragma once

#include <cstdint>
#include <vector>

#include "recnum/arithmetic.hpp"
#include "recnum/recfit.hpp"

namespace recnum {

// Ground-truth verdict for one n: the ordered small divisors
// d_1 < ... < d_s together with the full solution set of
// d_i = a*d_{i-1} + b*d_{i-2} for 3 <= i <= s. n is recurrent exactly
// when that set is non-empty; s <= 2 leaves the whole plane.
struct OracleVerdict {
  uint64_t n = 1;
  bool recurrent = true;
  uint32_t s = 0;
  AffineSolutionSet fit;
  std::vector<uint64_t> small_divisors;
};

OracleVerdict is_recurrent(uint64_t n, uint32_t cap = kDefaultDivisorCap);
OracleVerdict is_recurrent(const Factorization& f,
                           uint32_t cap = kDefaultDivisorCap);

}  // namespace recnum
