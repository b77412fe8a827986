#pragma once

#include <array>
#include <string>

#include "ut4/int.hpp"

namespace ut4 {

// Element of UT(4,Z) in Mal'cev coordinates <a,d,f | b,e | c>:
//   (1,2)=a (2,3)=d (3,4)=f (1,3)=b (2,4)=e (1,4)=c.
struct Element {
  Int a, d, f, b, e, c;

  static Element identity() { return {}; }
  static Element make(long long a, long long d, long long f, long long b, long long e,
                      long long c) {
    return {Int(a), Int(d), Int(f), Int(b), Int(e), Int(c)};
  }
  // Elementary generators.
  static Element x12(const Int& k = 1) { return {k, 0, 0, 0, 0, 0}; }
  static Element x23(const Int& k = 1) { return {0, k, 0, 0, 0, 0}; }
  static Element x34(const Int& k = 1) { return {0, 0, k, 0, 0, 0}; }
  static Element x13(const Int& k = 1) { return {0, 0, 0, k, 0, 0}; }
  static Element x24(const Int& k = 1) { return {0, 0, 0, 0, k, 0}; }
  static Element x14(const Int& k = 1) { return {0, 0, 0, 0, 0, k}; }

  bool is_identity() const {
    return a.is_zero() && d.is_zero() && f.is_zero() && b.is_zero() && e.is_zero() &&
           c.is_zero();
  }
  bool in_derived() const { return a.is_zero() && d.is_zero() && f.is_zero(); }
  bool in_center() const { return in_derived() && b.is_zero() && e.is_zero(); }
  std::array<Int, 3> level1() const { return {a, d, f}; }
  std::array<Int, 2> level2() const { return {b, e}; }

  // Upper unitriangular 4x4 matrix, row-major.
  std::array<std::array<Int, 4>, 4> matrix() const;
  static Element from_matrix(const std::array<std::array<Int, 4>, 4>& m);  // throws if not unitriangular

  std::string str() const;  // "<a,d,f|b,e|c>"
  static Element parse(const std::string& s);

  friend bool operator==(const Element& x, const Element& y) {
    return x.a == y.a && x.d == y.d && x.f == y.f && x.b == y.b && x.e == y.e && x.c == y.c;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
  size_t hash() const;
};

Element mul(const Element& x, const Element& y);
Element inv(const Element& x);
Element pow(const Element& x, const Int& r);
// h x h^-1
Element conj(const Element& x, const Element& h);
// x y x^-1 y^-1
Element comm(const Element& x, const Element& y);

inline Element operator*(const Element& x, const Element& y) { return mul(x, y); }

}  // namespace ut4

template <>
struct std::hash<ut4::Element> {
  size_t operator()(const ut4::Element& x) const { return x.hash(); }
};
