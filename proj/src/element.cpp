#include "ut4/element.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ut4 {

Element mul(const Element& x, const Element& y) {
  return {x.a + y.a,
          x.d + y.d,
          x.f + y.f,
          x.b + y.b + x.a * y.d,
          x.e + y.e + x.d * y.f,
          x.c + y.c + x.a * y.e + x.b * y.f};
}

Element inv(const Element& x) {
  Int ad = x.a * x.d;
  return {-x.a,
          -x.d,
          -x.f,
          ad - x.b,
          x.d * x.f - x.e,
          x.a * x.e + x.b * x.f - ad * x.f - x.c};
}

Element pow(const Element& x, const Int& r) {
  Int r2 = binom2(r), r3 = binom3(r);
  return {r * x.a,
          r * x.d,
          r * x.f,
          r * x.b + r2 * x.a * x.d,
          r * x.e + r2 * x.d * x.f,
          r * x.c + r2 * (x.a * x.e + x.b * x.f) + r3 * x.a * x.d * x.f};
}

Element conj(const Element& x, const Element& h) { return mul(mul(h, x), inv(h)); }

Element comm(const Element& x, const Element& y) {
  return mul(mul(x, y), inv(mul(y, x)));
}

std::array<std::array<Int, 4>, 4> Element::matrix() const {
  std::array<std::array<Int, 4>, 4> m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  m[0][1] = a;
  m[1][2] = d;
  m[2][3] = f;
  m[0][2] = b;
  m[1][3] = e;
  m[0][3] = c;
  return m;
}

Element Element::from_matrix(const std::array<std::array<Int, 4>, 4>& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j)
      if (m[i][j] != Int(i == j ? 1 : 0))
        throw std::invalid_argument("matrix is not upper unitriangular");
  return {m[0][1], m[1][2], m[2][3], m[0][2], m[1][3], m[0][3]};
}

std::string Element::str() const {
  std::ostringstream os;
  os << "<" << a << "," << d << "," << f << "|" << b << "," << e << "|" << c << ">";
  return os.str();
}

Element Element::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  bool open = false, closed = false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '<' || ch == '(' || ch == '[') {
      if (open) throw std::invalid_argument("bad element literal: " + s);
      open = true;
      continue;
    }
    if (ch == '>' || ch == ')' || ch == ']') {
      closed = true;
      continue;
    }
    if (ch == ',' || ch == '|') {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    if (closed) throw std::invalid_argument("bad element literal: " + s);
    cur += ch;
  }
  parts.push_back(cur);
  if (parts.size() != 6) throw std::invalid_argument("element needs 6 coordinates: " + s);
  return {Int::parse(parts[0]), Int::parse(parts[1]), Int::parse(parts[2]),
          Int::parse(parts[3]), Int::parse(parts[4]), Int::parse(parts[5])};
}

size_t Element::hash() const {
  size_t h = 0;
  for (const Int* v : {&a, &d, &f, &b, &e, &c}) h = h * 1000003u ^ v->hash();
  return h;
}

}  // namespace ut4
