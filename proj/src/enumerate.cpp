#include "recnum/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "recnum/errors.hpp"
#include "recnum/oracle.hpp"

namespace recnum {
namespace {

using u128 = unsigned __int128;

struct Segment {
  uint64_t lo, hi;  // inclusive
};

std::vector<Segment> plan_segments(uint64_t lo, uint64_t hi,
                                   const SweepOptions& opt) {
  if (lo == 0 || lo > hi) {
    throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
  }
  uint32_t step = std::max<uint32_t>(opt.segment_size, 1024);
  std::vector<Segment> segs;
  uint64_t a = lo;
  while (a <= hi) {
    uint64_t b = std::min(hi, a + step - 1);
    // Keep the sieve/per-n regimes from sharing a segment.
    if (a < kSieveCrossover && b >= kSieveCrossover) b = kSieveCrossover - 1;
    if (b > opt.budget) {
      throw ResourceError("segment [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] exceeds sieve budget " +
                          std::to_string(opt.budget));
    }
    segs.push_back({a, b});
    a = b + 1;
  }
  return segs;
}

// Factors every n in [seg.lo, seg.hi] and hands each to fn, ascending.
// Below the crossover a factor sieve does the work; above it each n is
// factored on its own.
void factor_segment(const Segment& seg,
                    const std::vector<uint64_t>& base_primes,
                    const std::function<void(const Factorization&)>& fn) {
  if (seg.lo >= kSieveCrossover) {
    for (uint64_t n = seg.lo; n <= seg.hi; ++n) fn(factorize(n));
    return;
  }
  size_t len = seg.hi - seg.lo + 1;
  std::vector<uint64_t> remaining(len);
  for (size_t i = 0; i < len; ++i) remaining[i] = seg.lo + i;
  std::vector<std::vector<std::pair<uint64_t, uint32_t>>> slots(len);
  for (uint64_t p : base_primes) {
    if (p * p > seg.hi) break;
    uint64_t first = ((seg.lo + p - 1) / p) * p;
    for (uint64_t m = first; m <= seg.hi; m += p) {
      size_t i = m - seg.lo;
      uint32_t e = 0;
      while (remaining[i] % p == 0) {
        remaining[i] /= p;
        ++e;
      }
      slots[i].emplace_back(p, e);
    }
  }
  Factorization f;
  for (size_t i = 0; i < len; ++i) {
    f.n = seg.lo + i;
    f.factors = std::move(slots[i]);
    // What survives the base primes is a single prime > sqrt(seg.hi).
    if (remaining[i] > 1) f.factors.emplace_back(remaining[i], 1);
    if (f.n == 1) f.factors.clear();
    fn(f);
  }
}

std::vector<uint64_t> base_primes_for(const std::vector<Segment>& segs) {
  uint64_t sieve_hi = 0;
  for (const Segment& s : segs) {
    if (s.lo < kSieveCrossover) sieve_hi = std::max(sieve_hi, s.hi);
  }
  if (sieve_hi < 4) return {};
  return primes_up_to(static_cast<uint64_t>(std::sqrt(double(sieve_hi))) + 1);
}

// Runs fn(segment_index, segment) across opt.workers threads. fn must not
// touch shared state; callers keep one result slot per segment and merge
// in index order, so the output never depends on scheduling.
void run_segments(const std::vector<Segment>& segs, const SweepOptions& opt,
                  const std::function<void(size_t, const Segment&)>& fn) {
  unsigned workers = std::max(1u, opt.workers);
  workers = std::min<unsigned>(workers, segs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < segs.size(); ++i) fn(i, segs[i]);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= segs.size()) return;
      try {
        fn(i, segs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void for_each_factorization(
    uint64_t lo, uint64_t hi, const SweepOptions& opt,
    const std::function<void(const Factorization&)>& fn) {
  auto segs = plan_segments(lo, hi, opt);
  auto primes = base_primes_for(segs);
  for (const Segment& seg : segs) factor_segment(seg, primes, fn);
}

SweepResult sweep(uint64_t lo, uint64_t hi, const SweepOptions& opt) {
  auto segs = plan_segments(lo, hi, opt);
  auto primes = base_primes_for(segs);
  SweepResult result;
  result.lo = lo;
  result.hi = hi;
  struct Partial {
    std::vector<uint64_t> recurrent;
    std::map<uint32_t, uint64_t> s_counts;
  };
  std::vector<Partial> parts(segs.size());
  run_segments(segs, opt, [&](size_t i, const Segment& seg) {
    factor_segment(seg, primes, [&](const Factorization& f) {
      OracleVerdict v = is_recurrent(f, opt.divisor_cap);
      if (v.recurrent) {
        parts[i].recurrent.push_back(f.n);
        ++parts[i].s_counts[v.s];
      }
    });
  });
  for (Partial& part : parts) {
    result.recurrent.insert(result.recurrent.end(), part.recurrent.begin(),
                            part.recurrent.end());
    for (auto [s, c] : part.s_counts) result.s_counts[s] += c;
  }
  return result;
}

std::vector<ReconciliationRecord> reconcile(uint64_t limit,
                                            const SweepOptions& opt) {
  auto segs = plan_segments(1, limit, opt);
  auto primes = base_primes_for(segs);
  std::vector<std::vector<ReconciliationRecord>> parts(segs.size());
  run_segments(segs, opt, [&](size_t i, const Segment& seg) {
    factor_segment(seg, primes, [&](const Factorization& f) {
      bool fast = is_recurrent_fast(f, Mode::kTheoremLiteral);
      OracleVerdict v = is_recurrent(f, opt.divisor_cap);
      if (fast == v.recurrent) return;
      ReconciliationRecord rec;
      rec.n = f.n;
      rec.oracle_recurrent = v.recurrent;
      for (const Category& c :
           classify(f, Mode::kTheoremLiteral).categories) {
        rec.categories.push_back(c.tag);
      }
      parts[i].push_back(std::move(rec));
    });
  });
  std::vector<ReconciliationRecord> records;
  for (auto& part : parts) {
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

std::vector<uint64_t> generate_families(uint64_t limit, Mode mode,
                                        const SweepOptions& opt) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  if (limit > opt.budget) {
    throw ResourceError("limit " + std::to_string(limit) +
                        " exceeds sieve budget " + std::to_string(opt.budget));
  }
  std::vector<uint64_t> primes = primes_up_to(limit);
  auto primes_in = [&](uint64_t lo_excl, uint64_t hi_incl) {
    auto first = std::upper_bound(primes.begin(), primes.end(), lo_excl);
    auto last = std::upper_bound(primes.begin(), primes.end(), hi_incl);
    return std::pair(first, last);
  };
  std::vector<uint64_t> out;

  // C1: prime powers.
  for (uint64_t p : primes) {
    for (u128 pk = p; pk <= limit; pk *= p) {
      out.push_back(static_cast<uint64_t>(pk));
    }
  }
  // C2: p^k * q with prime q > p^k. Needs p^k * q <= limit, so p^2k < limit.
  for (uint64_t p : primes) {
    if (static_cast<u128>(p) * p > limit) break;
    for (u128 pk = p; pk * pk < limit; pk *= p) {
      uint64_t pk64 = static_cast<uint64_t>(pk);
      auto [first, last] = primes_in(pk64, limit / pk64);
      for (auto it = first; it != last; ++it) out.push_back(pk64 * *it);
    }
  }
  // C3: p * q^k with p < q. p*q <= limit forces p below sqrt(limit).
  for (uint64_t p : primes) {
    if (static_cast<u128>(p) * p >= limit) break;
    auto [first, last] = primes_in(p, limit / p);
    for (auto it = first; it != last; ++it) {
      for (u128 m = static_cast<u128>(p) * *it; m <= limit; m *= *it) {
        out.push_back(static_cast<uint64_t>(m));
      }
    }
  }
  // C4: p * q^k * r with p < q, prime r > p*q^k; m = p*q^k needs m^2 < limit.
  for (uint64_t p : primes) {
    if (static_cast<u128>(p) * p * p >= limit) break;
    auto [qfirst, qlast] = primes_in(p, limit / p);
    for (auto qit = qfirst; qit != qlast; ++qit) {
      // Even k = 1 needs (p*q)^2 < limit; larger q can stop the scan.
      if (static_cast<u128>(p) * *qit * p * *qit >= limit) break;
      for (u128 m = static_cast<u128>(p) * *qit; m * m < limit; m *= *qit) {
        uint64_t m64 = static_cast<uint64_t>(m);
        auto [rfirst, rlast] = primes_in(m64, limit / m64);
        for (auto rit = rfirst; rit != rlast; ++rit) {
          out.push_back(m64 * *rit);
        }
      }
    }
  }
  // C5.
  if (limit >= 60) out.push_back(60);
  // C6: p^3 * q with p < q < p^2 and (p^2 - q) | (q - p).
  for (uint64_t p : primes) {
    u128 p3 = static_cast<u128>(p) * p * p;
    if (p3 * p > limit) break;  // need some q > p
    uint64_t qmax = std::min<uint64_t>(p * p - 1,
                                       static_cast<uint64_t>(limit / p3));
    auto [first, last] = primes_in(p, qmax);
    for (auto it = first; it != last; ++it) {
      uint64_t q = *it;
      if ((q - p) % (p * p - q) == 0) {
        out.push_back(static_cast<uint64_t>(p3) * q);
      }
    }
  }
  // C7: p*q*r, p < q < r < p*q, (p^2 - q) | (p*q - r), signed divisibility.
  for (uint64_t p : primes) {
    if (static_cast<u128>(p) * p * p >= limit) break;
    auto [qfirst, qlast] = primes_in(p, limit / p / p);
    for (auto qit = qfirst; qit != qlast; ++qit) {
      uint64_t q = *qit;
      // r > q and p*q*r <= limit need p*q^2 < limit.
      if (static_cast<u128>(p) * q * q >= limit) break;
      long long den =
          static_cast<long long>(p * p) - static_cast<long long>(q);
      if (den == 0) continue;
      uint64_t rmax = std::min<u128>(p * q - 1, limit / (p * q));
      auto [rfirst, rlast] = primes_in(q, rmax);
      for (auto rit = rfirst; rit != rlast; ++rit) {
        long long num =
            static_cast<long long>(p * q) - static_cast<long long>(*rit);
        if (num % den == 0) out.push_back(p * q * *rit);
      }
    }
  }
  if (mode == Mode::kOracleComplete) {
    // X1.
    out.push_back(1);
    // X2: p^2 * q with p < q < p^2.
    for (uint64_t p : primes) {
      u128 p2 = static_cast<u128>(p) * p;
      if (p2 * p > limit) break;
      uint64_t qmax = std::min<uint64_t>(p * p - 1,
                                         static_cast<uint64_t>(limit / p2));
      auto [first, last] = primes_in(p, qmax);
      for (auto it = first; it != last; ++it) {
        out.push_back(static_cast<uint64_t>(p2) * *it);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_bfile(std::ostream& os, std::span<const uint64_t> values,
                 uint64_t start_index) {
  uint64_t idx = start_index;
  for (uint64_t v : values) {
    os << idx << ' ' << v << '\n';
    ++idx;
  }
}

void write_bfile(const std::filesystem::path& path,
                 std::span<const uint64_t> values, uint64_t start_index) {
  std::ofstream os(path);
  if (!os) {
    throw ResourceError("cannot open " + path.string() + " for writing");
  }
  write_bfile(os, values, start_index);
  os.flush();
  if (!os) throw ResourceError("write to " + path.string() + " failed");
}

std::vector<uint64_t> read_bfile(std::istream& is) {
  std::vector<uint64_t> values;
  std::string line;
  size_t lineno = 0;
  bool have_index = false;
  uint64_t expect_index = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    // Two unsigned decimal fields; anything else on the line is an error.
    auto field = [&](size_t& at) {
      size_t start = line.find_first_not_of(" \t", at);
      if (start == std::string::npos) {
        throw ParseError("malformed b-file line", lineno);
      }
      size_t end = line.find_first_of(" \t\r", start);
      if (end == std::string::npos) end = line.size();
      uint64_t out = 0;
      auto [ptr, ec] =
          std::from_chars(line.data() + start, line.data() + end, out);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("b-file value out of range", lineno);
      }
      if (ec != std::errc() || ptr != line.data() + end) {
        throw ParseError("malformed b-file line", lineno);
      }
      at = end;
      return out;
    };
    size_t at = pos;
    uint64_t idx = field(at);
    uint64_t value = field(at);
    if (line.find_first_not_of(" \t\r", at) != std::string::npos) {
      throw ParseError("trailing content on b-file line", lineno);
    }
    if (have_index) {
      if (idx != expect_index) {
        throw ParseError("non-consecutive index " + std::to_string(idx) +
                             ", expected " + std::to_string(expect_index),
                         lineno);
      }
      if (!values.empty() && value <= values.back()) {
        throw ParseError("values not strictly increasing", lineno);
      }
    }
    values.push_back(value);
    have_index = true;
    expect_index = idx + 1;
  }
  return values;
}

std::vector<uint64_t> read_bfile(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ResourceError("cannot open " + path.string());
  return read_bfile(is);
}

}  // namespace recnum
