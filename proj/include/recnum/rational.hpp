#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>
#include <utility>

#include "recnum/errors.hpp"

namespace recnum {

// Exact reduced fraction over 256-bit integers. Products and cross
// comparisons run in 512 bits and narrow back with a range check, so an
// out-of-range result throws ResourceError instead of wrapping.
class Rational {
 public:
  using Int = boost::multiprecision::int256_t;
  using Wide = boost::multiprecision::int512_t;

  Rational() = default;
  Rational(long long v) : num_(v) {}
  Rational(const Int& num, const Int& den) { assign(Wide(num), Wide(den)); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return make(Wide(num_) * o.den_ + Wide(o.num_) * den_,
                Wide(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(Wide(num_) * o.den_ - Wide(o.num_) * den_,
                Wide(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(Wide(num_) * o.num_, Wide(den_) * o.den_);
  }
  Rational operator-() const { return make(-Wide(num_), Wide(den_)); }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const Rational& o) const {
    return Wide(num_) * o.den_ < Wide(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  static Rational make(Wide num, Wide den) {
    Rational r;
    r.assign(std::move(num), std::move(den));
    return r;
  }

  void assign(Wide num, Wide den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    Wide g = boost::multiprecision::gcd(num < 0 ? Wide(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    static const Wide lo = Wide(std::numeric_limits<Int>::min());
    static const Wide hi = Wide(std::numeric_limits<Int>::max());
    if (num < lo || num > hi || den > hi) {
      throw ResourceError("Rational: magnitude exceeds 256 bits");
    }
    num_ = Int(num);
    den_ = Int(den);
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace recnum
