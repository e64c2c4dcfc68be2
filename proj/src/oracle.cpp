#include "recnum/oracle.hpp"

namespace recnum {

OracleVerdict is_recurrent(const Factorization& f, uint32_t cap) {
  OracleVerdict v;
  v.n = f.n;
  v.small_divisors = divisor_profile(f, cap).small_divisors;
  v.s = static_cast<uint32_t>(v.small_divisors.size());
  v.fit = fit_order2(v.small_divisors);
  v.recurrent = v.fit.kind != SolutionKind::kEmpty;
  return v;
}

OracleVerdict is_recurrent(uint64_t n, uint32_t cap) {
  return is_recurrent(factorize(n), cap);
}

}  // namespace recnum
