#include "ut4/int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace ut4 {

void Int::assign(const mpz_class& z) {
  if (z.fits_slong_p()) {
    delete p_;
    p_ = nullptr;
    v_ = z.get_si();
  } else {
    if (p_) *p_ = z;
    else p_ = new mpz_class(z);
    v_ = 0;
  }
}

Int Int::parse(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("not an integer: " + s);
  return Int(z);
}

int64_t Int::to_int64() const {
  if (p_) throw std::overflow_error("integer does not fit in 64 bits");
  return v_;
}

std::string Int::str() const { return p_ ? p_->get_str() : std::to_string(v_); }

Int Int::operator-() const {
  if (!p_ && v_ != std::numeric_limits<int64_t>::min()) return Int(-v_, 0);
  return Int(mpz_class(-mpz()));
}

size_t Int::hash() const {
  if (!p_) return std::hash<int64_t>()(v_);
  return std::hash<std::string>()(p_->get_str(16));
}

Int abs(const Int& x) { return x.sign() < 0 ? -x : x; }

Int floor_div(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && b.small() != -1) {
    int64_t q = a.small() / b.small(), r = a.small() % b.small();
    if (r != 0 && ((r < 0) != (b.small() < 0))) --q;
    return Int(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_fdiv_q(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(q);
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Int trunc_div(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && b.small() != -1)
    return Int(static_cast<long long>(a.small() / b.small()));
  mpz_class q;
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_tdiv_q(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(q);
}

bool divides(const Int& d, const Int& a) {
  if (d.is_zero()) return a.is_zero();
  if (a.is_small() && d.is_small()) return d.small() == -1 || a.small() % d.small() == 0;
  mpz_class am = a.mpz(), dm = d.mpz();
  return mpz_divisible_p(am.get_mpz_t(), dm.get_mpz_t()) != 0;
}

Int exact_div(const Int& a, const Int& b) {
  if (!divides(b, a)) throw std::domain_error("inexact division: " + a.str() + " / " + b.str());
  return trunc_div(a, b);
}

Int gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) {
    uint64_t x = a.small() < 0 ? 0 - static_cast<uint64_t>(a.small()) : a.small();
    uint64_t y = b.small() < 0 ? 0 - static_cast<uint64_t>(b.small()) : b.small();
    while (y) {
      uint64_t t = x % y;
      x = y;
      y = t;
    }
    if (x <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max()))
      return Int(static_cast<long long>(x));
  }
  mpz_class g;
  mpz_class am = a.mpz(), bm = b.mpz();
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(g);
}

Int lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    Int q = trunc_div(r0, r1);
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.sign() < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

Int binom2(const Int& r) { return exact_div(r * (r - 1), 2); }
Int binom3(const Int& r) { return exact_div(r * (r - 1) * (r - 2), 6); }

mpq_class to_mpq(const Int& x) { return mpq_class(x.mpz()); }

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.str(); }

}  // namespace ut4
