#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <gmpxx.h>

namespace ut4 {

// Arbitrary-precision integer. Small values stay in an int64; anything that
// overflows is promoted to an mpz and demoted again when it fits.
class Int {
 public:
  Int() = default;
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(static_cast<int64_t>(v)) {}
  explicit Int(const mpz_class& z) { assign(z); }

  Int(const Int& o) : v_(o.v_), p_(o.p_ ? new mpz_class(*o.p_) : nullptr) {}
  Int(Int&& o) noexcept : v_(o.v_), p_(o.p_) { o.p_ = nullptr; }
  Int& operator=(const Int& o) {
    if (this != &o) {
      if (o.p_) {
        if (p_) *p_ = *o.p_;
        else p_ = new mpz_class(*o.p_);
      } else {
        delete p_;
        p_ = nullptr;
        v_ = o.v_;
      }
    }
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    if (this != &o) {
      delete p_;
      v_ = o.v_;
      p_ = o.p_;
      o.p_ = nullptr;
    }
    return *this;
  }
  ~Int() { delete p_; }

  static Int parse(const std::string& s);

  bool is_small() const { return p_ == nullptr; }
  int64_t small() const { return v_; }
  mpz_class mpz() const { return p_ ? *p_ : mpz_class(static_cast<long>(v_)); }
  bool fits_int64() const { return p_ == nullptr; }
  int64_t to_int64() const;  // throws std::overflow_error
  double to_double() const { return p_ ? p_->get_d() : static_cast<double>(v_); }
  std::string str() const;

  int sign() const { return p_ ? sgn(*p_) : (v_ > 0) - (v_ < 0); }
  bool is_zero() const { return p_ == nullptr && v_ == 0; }
  bool is_one() const { return p_ == nullptr && v_ == 1; }

  Int operator-() const;
  Int& operator+=(const Int& o) { return *this = *this + o; }
  Int& operator-=(const Int& o) { return *this = *this - o; }
  Int& operator*=(const Int& o) { return *this = *this * o; }

  friend Int operator+(const Int& x, const Int& y) {
    if (!x.p_ && !y.p_) {
      int64_t r;
      if (!__builtin_add_overflow(x.v_, y.v_, &r)) return Int(r, 0);
    }
    return Int(mpz_class(x.mpz() + y.mpz()));
  }
  friend Int operator-(const Int& x, const Int& y) {
    if (!x.p_ && !y.p_) {
      int64_t r;
      if (!__builtin_sub_overflow(x.v_, y.v_, &r)) return Int(r, 0);
    }
    return Int(mpz_class(x.mpz() - y.mpz()));
  }
  friend Int operator*(const Int& x, const Int& y) {
    if (!x.p_ && !y.p_) {
      int64_t r;
      if (!__builtin_mul_overflow(x.v_, y.v_, &r)) return Int(r, 0);
    }
    return Int(mpz_class(x.mpz() * y.mpz()));
  }

  friend bool operator==(const Int& x, const Int& y) {
    if (!x.p_ && !y.p_) return x.v_ == y.v_;
    return cmp(x.mpz(), y.mpz()) == 0;
  }
  friend bool operator!=(const Int& x, const Int& y) { return !(x == y); }
  friend bool operator<(const Int& x, const Int& y) {
    if (!x.p_ && !y.p_) return x.v_ < y.v_;
    return cmp(x.mpz(), y.mpz()) < 0;
  }
  friend bool operator>(const Int& x, const Int& y) { return y < x; }
  friend bool operator<=(const Int& x, const Int& y) { return !(y < x); }
  friend bool operator>=(const Int& x, const Int& y) { return !(x < y); }

  size_t hash() const;

 private:
  Int(int64_t v, int) : v_(v) {}
  void assign(const mpz_class& z);

  int64_t v_ = 0;
  mpz_class* p_ = nullptr;
};

Int abs(const Int& x);
// Floor division and the matching non-negative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
// Truncating division (C semantics).
Int trunc_div(const Int& a, const Int& b);
bool divides(const Int& d, const Int& a);  // d | a; 0 | a iff a == 0
Int exact_div(const Int& a, const Int& b);  // throws if b does not divide a
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// g = gcd(a,b) = s*a + t*b
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t);
// C(r,2), C(r,3) as polynomials in r; valid for negative r.
Int binom2(const Int& r);
Int binom3(const Int& r);

mpq_class to_mpq(const Int& x);

std::ostream& operator<<(std::ostream& os, const Int& x);

}  // namespace ut4

template <>
struct std::hash<ut4::Int> {
  size_t operator()(const ut4::Int& x) const { return x.hash(); }
};
