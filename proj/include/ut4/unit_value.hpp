#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ut4/int.hpp"

namespace ut4 {

enum class SymbolClass { off_circle, circle_free };
enum class ModulusClass { root_of_unity, circle_nontorsion, off_circle };

const char* to_string(SymbolClass c);
const char* to_string(ModulusClass c);

// Declared value symbols. Symbols are multiplicatively independent modulo
// roots of unity; circle_free symbols have modulus 1.
class SymbolTable {
 public:
  void declare(const std::string& name, SymbolClass cls);  // throws on a conflicting redeclaration
  bool has(const std::string& name) const { return cls_.count(name) != 0; }
  SymbolClass cls(const std::string& name) const;
  const std::map<std::string, SymbolClass>& all() const { return cls_; }

 private:
  std::map<std::string, SymbolClass> cls_;
};

// exp(2 pi i torsion) * prod sym^exponent. Exponents are rational so that the
// root extractions used by F-equivalences stay exact; the torsion is in [0,1).
class UnitValue {
 public:
  UnitValue() = default;
  static UnitValue root(const mpq_class& torsion);
  static UnitValue symbol(const std::string& name, const mpq_class& exponent = 1);

  const mpq_class& torsion() const { return tor_; }
  const std::map<std::string, mpq_class>& exponents() const { return exp_; }
  mpq_class exponent(const std::string& name) const;

  bool is_one() const { return tor_ == 0 && exp_.empty(); }
  bool is_root_of_unity() const { return exp_.empty(); }
  // Order as a root of unity; 0 when infinite.
  Int order() const;
  ModulusClass modulus_class(const SymbolTable& syms) const;

  friend UnitValue operator*(const UnitValue& x, const UnitValue& y);
  friend bool operator==(const UnitValue& x, const UnitValue& y) {
    return x.tor_ == y.tor_ && x.exp_ == y.exp_;
  }
  friend bool operator!=(const UnitValue& x, const UnitValue& y) { return !(x == y); }
  friend bool operator<(const UnitValue& x, const UnitValue& y);
  UnitValue inverse() const;
  UnitValue pow(const Int& n) const;
  // Principal rational power: torsion scaled by q, then reduced mod 1.
  UnitValue pow(const mpq_class& q) const;
  friend UnitValue product(const std::vector<UnitValue>& vals, const std::vector<Int>& exps);

  // "1", "e(1/3)", "z^2*lambda^-1", "e(1/2)*w^1/2"
  std::string str() const;
  // Inverse of str(); also accepts repeated factors and "e(p/q)" anywhere.
  // Throws std::invalid_argument.
  static UnitValue parse(const std::string& s);
  // Numeric value given numeric values for the symbols.
  std::complex<double> numeric(const std::map<std::string, std::complex<double>>& symvals) const;

 private:
  void normalize();
  mpq_class tor_ = 0;
  std::map<std::string, mpq_class> exp_;
};

UnitValue product(const std::vector<UnitValue>& vals, const std::vector<Int>& exps);

mpq_class parse_rational(const std::string& s);  // "p/q" or "p"; throws std::invalid_argument
std::string rational_str(const mpq_class& q);

// Lift a complex number to exp(2 pi i p/q) with q <= max_q. Returns false if
// no candidate is within tol; throws std::invalid_argument if two are.
bool lift_root_of_unity(std::complex<double> v, int max_q, double tol, mpq_class& torsion);

}  // namespace ut4
