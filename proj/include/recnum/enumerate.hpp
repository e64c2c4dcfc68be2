#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "recnum/arithmetic.hpp"
#include "recnum/classifier.hpp"

namespace recnum {

inline constexpr uint64_t kDefaultSweepBudget = 10'000'000;
// Below this bound ranges are factored by a segmented sieve; from it on,
// each n is factored individually.
inline constexpr uint64_t kSieveCrossover = 100'000'000;

struct SweepOptions {
  uint64_t budget = kDefaultSweepBudget;
  uint32_t segment_size = 1u << 17;
  unsigned workers = 1;  // results are merged in segment order regardless
  uint32_t divisor_cap = kDefaultDivisorCap;
};

struct SweepResult {
  uint64_t lo = 1, hi = 0;
  std::vector<uint64_t> recurrent;       // ascending
  std::map<uint32_t, uint64_t> s_counts;  // s(n) -> count over recurrent n
};

// Oracle over [lo, hi]. Throws ResourceError when hi exceeds the budget,
// std::invalid_argument when lo is 0 or lo > hi.
SweepResult sweep(uint64_t lo, uint64_t hi, const SweepOptions& opt = {});

// Factorizations of every n in [lo, hi], ascending. Same budget rules as
// sweep. The Factorization reference is only valid during the call.
void for_each_factorization(
    uint64_t lo, uint64_t hi, const SweepOptions& opt,
    const std::function<void(const Factorization&)>& fn);

// All members of the mode's families up to limit, by direct construction
// from primes (no per-n testing), deduplicated, ascending.
std::vector<uint64_t> generate_families(uint64_t limit, Mode mode,
                                        const SweepOptions& opt = {});

// One n on which the oracle and the theorem-literal classifier disagree.
struct ReconciliationRecord {
  uint64_t n = 1;
  bool oracle_recurrent = false;
  std::vector<CategoryTag> categories;  // theorem-literal matches
};

// Records for all n <= limit where oracle and theorem-literal classifier
// differ. oracle_recurrent=true rows are oracle-only, false rows
// classifier-only.
std::vector<ReconciliationRecord> reconcile(uint64_t limit,
                                            const SweepOptions& opt = {});

// OEIS-style b-file lines "index value\n", indices consecutive from
// start_index. Values must be ascending (the sequences written here are).
void write_bfile(std::ostream& os, std::span<const uint64_t> values,
                 uint64_t start_index = 1);
void write_bfile(const std::filesystem::path& path,
                 std::span<const uint64_t> values, uint64_t start_index = 1);

// Inverse of write_bfile. Accepts '#' comment lines and blank lines;
// throws ParseError (with the line number) on anything else irregular.
std::vector<uint64_t> read_bfile(std::istream& is);
std::vector<uint64_t> read_bfile(const std::filesystem::path& path);

}  // namespace recnum
