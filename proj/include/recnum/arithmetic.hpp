#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace recnum {

// Prime factorization of n, primes strictly increasing, exponents >= 1.
// n = 1 has an empty factor list.
struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, uint32_t>> factors;

  uint32_t tau() const;
  uint32_t omega() const { return static_cast<uint32_t>(factors.size()); }
  bool is_square() const;
};

// Deterministic for all 64-bit n. Returns false for n < 2.
bool is_prime(uint64_t n);

// Trial division by primes below 10^4, then Miller-Rabin + Pollard rho
// (Brent variant, deterministic polynomial schedule) on what remains.
// Throws std::invalid_argument for n = 0.
Factorization factorize(uint64_t n);

// All divisors of n plus the small-divisor prefix {d : d | n, d*d <= n}.
struct DivisorProfile {
  uint64_t n = 1;
  std::vector<uint64_t> divisors;        // strictly increasing, all of them
  std::vector<uint64_t> small_divisors;  // prefix with d*d <= n
  uint32_t tau = 0;
  uint32_t s = 0;  // = small_divisors.size()
  bool is_square = false;
};

inline constexpr uint32_t kDefaultDivisorCap = 1u << 16;

// Throw ResourceError if tau(n) exceeds cap; the check runs on the
// factorization exponents before any divisor is materialized.
std::vector<uint64_t> divisor_list(const Factorization& f,
                                   uint32_t cap = kDefaultDivisorCap);

DivisorProfile divisor_profile(const Factorization& f,
                               uint32_t cap = kDefaultDivisorCap);
DivisorProfile divisor_profile(uint64_t n, uint32_t cap = kDefaultDivisorCap);

std::vector<uint64_t> small_divisors(uint64_t n,
                                     uint32_t cap = kDefaultDivisorCap);

// Simple Eratosthenes sieve, ascending primes <= limit.
std::vector<uint64_t> primes_up_to(uint64_t limit);

}  // namespace recnum
