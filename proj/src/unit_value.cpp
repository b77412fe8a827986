#include "ut4/unit_value.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ut4 {

const char* to_string(SymbolClass c) {
  return c == SymbolClass::off_circle ? "off_circle" : "circle_free";
}

const char* to_string(ModulusClass c) {
  switch (c) {
    case ModulusClass::root_of_unity: return "root_of_unity";
    case ModulusClass::circle_nontorsion: return "circle_nontorsion";
    case ModulusClass::off_circle: return "off_circle";
  }
  return "?";
}

void SymbolTable::declare(const std::string& name, SymbolClass cls) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  auto it = cls_.find(name);
  if (it != cls_.end() && it->second != cls)
    throw std::invalid_argument("symbol redeclared with a different class: " + name);
  cls_[name] = cls;
}

SymbolClass SymbolTable::cls(const std::string& name) const {
  auto it = cls_.find(name);
  if (it == cls_.end()) throw std::invalid_argument("undeclared symbol: " + name);
  return it->second;
}

namespace {

mpq_class frac_part(mpq_class q) {
  q.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  mpq_class r = q - mpq_class(fl);
  r.canonicalize();
  return r;
}

}  // namespace

void UnitValue::normalize() {
  tor_ = frac_part(tor_);
  for (auto it = exp_.begin(); it != exp_.end();) {
    it->second.canonicalize();
    if (it->second == 0) it = exp_.erase(it);
    else ++it;
  }
}

UnitValue UnitValue::root(const mpq_class& torsion) {
  UnitValue v;
  v.tor_ = torsion;
  v.normalize();
  return v;
}

UnitValue UnitValue::symbol(const std::string& name, const mpq_class& exponent) {
  UnitValue v;
  v.exp_[name] = exponent;
  v.normalize();
  return v;
}

mpq_class UnitValue::exponent(const std::string& name) const {
  auto it = exp_.find(name);
  return it == exp_.end() ? mpq_class(0) : it->second;
}

Int UnitValue::order() const {
  if (!exp_.empty()) return 0;
  return Int(mpz_class(tor_.get_den()));
}

ModulusClass UnitValue::modulus_class(const SymbolTable& syms) const {
  if (exp_.empty()) return ModulusClass::root_of_unity;
  for (const auto& [s, q] : exp_)
    if (syms.cls(s) == SymbolClass::off_circle) return ModulusClass::off_circle;
  return ModulusClass::circle_nontorsion;
}

UnitValue operator*(const UnitValue& x, const UnitValue& y) {
  UnitValue r = x;
  r.tor_ += y.tor_;
  for (const auto& [s, q] : y.exp_) r.exp_[s] += q;
  r.normalize();
  return r;
}

bool operator<(const UnitValue& x, const UnitValue& y) {
  if (x.tor_ != y.tor_) return x.tor_ < y.tor_;
  return x.exp_ < y.exp_;
}

UnitValue UnitValue::inverse() const {
  UnitValue r = *this;
  r.tor_ = -r.tor_;
  for (auto& [s, q] : r.exp_) q = -q;
  r.normalize();
  return r;
}

UnitValue UnitValue::pow(const Int& n) const {
  return pow(to_mpq(n));
}

UnitValue UnitValue::pow(const mpq_class& n) const {
  UnitValue r = *this;
  r.tor_ *= n;
  for (auto& [s, q] : r.exp_) q *= n;
  r.normalize();
  return r;
}

std::string rational_str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string UnitValue::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  if (tor_ != 0) {
    os << "e(" << rational_str(tor_) << ")";
    first = false;
  }
  for (const auto& [s, q] : exp_) {
    os << (first ? "" : "*") << s;
    if (q != 1) os << "^" << rational_str(q);
    first = false;
  }
  return os.str();
}

UnitValue UnitValue::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty value");
  UnitValue r;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) throw std::invalid_argument("bad value: " + text);
    if (tok == "1") {
    } else if (tok.size() > 3 && tok.compare(0, 2, "e(") == 0 && tok.back() == ')') {
      r.tor_ += parse_rational(tok.substr(2, tok.size() - 3));
    } else {
      size_t caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
      for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
      if (!ok || name == "e") throw std::invalid_argument("bad symbol in value: " + text);
      r.exp_[name] += caret == std::string::npos ? mpq_class(1) : parse_rational(tok.substr(caret + 1));
    }
    pos = end + 1;
  }
  r.normalize();
  return r;
}

std::complex<double> UnitValue::numeric(
    const std::map<std::string, std::complex<double>>& symvals) const {
  std::complex<double> v = std::polar(1.0, 2 * std::numbers::pi * tor_.get_d());
  for (const auto& [s, q] : exp_) {
    auto it = symvals.find(s);
    if (it == symvals.end()) throw std::invalid_argument("no numeric value for symbol " + s);
    v *= std::pow(it->second, q.get_d());
  }
  return v;
}

UnitValue product(const std::vector<UnitValue>& vals, const std::vector<Int>& exps) {
  // Accumulate first, reduce once.
  UnitValue r;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (exps[i].is_zero()) continue;
    const mpq_class n = to_mpq(exps[i]);
    r.tor_ += vals[i].tor_ * n;
    for (const auto& [s, q] : vals[i].exp_) r.exp_[s] += q * n;
  }
  r.normalize();
  return r;
}

bool lift_root_of_unity(std::complex<double> v, int max_q, double tol, mpq_class& torsion) {
  if (std::abs(std::abs(v) - 1.0) > tol) return false;
  double turn = std::arg(v) / (2 * std::numbers::pi);
  if (turn < 0) turn += 1;
  bool found = false;
  for (int q = 1; q <= max_q; ++q) {
    long p = std::lround(turn * q);
    std::complex<double> c = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(p) / q);
    if (std::abs(c - v) > tol) continue;
    mpq_class cand(p, q);
    cand = frac_part(cand);
    if (found && cand != torsion)
      throw std::invalid_argument("ambiguous root of unity: candidates " + rational_str(torsion) +
                                  " and " + rational_str(cand));
    torsion = cand;
    found = true;
  }
  return found;
}

}  // namespace ut4
