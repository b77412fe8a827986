#include <sstream>

#include "ut4/classification.hpp"

namespace ut4 {

std::string Fiber::str() const {
  if (args.empty()) return kind;
  std::string s = kind + "(";
  for (size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
  return s + ")";
}

namespace {

using Mono = std::vector<std::pair<std::string, Int>>;

std::string mono(const Mono& m) {
  std::string s;
  for (const auto& [name, e] : m) {
    if (e.is_zero()) continue;
    if (!s.empty()) s += "*";
    s += name;
    if (!e.is_one()) s += "^" + e.str();
  }
  return s.empty() ? "1" : s;
}

Fiber F(const std::string& kind, std::vector<std::string> args = {}) { return {kind, std::move(args)}; }
Fiber Fm(const std::string& kind, const Mono& m) { return {kind, {mono(m)}}; }
Fiber Fn(const std::string& kind, const Int& n) { return {kind, {abs(n).str()}}; }

// Whether z * (lambda^n)^k is a root of unity for some integer k.
bool orbit_hits_roots(const UnitValue& z, const UnitValue& lambda, const Int& n) {
  if (z.is_root_of_unity()) return true;
  UnitValue step = lambda.pow(n);
  if (step.is_root_of_unity()) return false;
  // exps(z) = -k exps(step): compare against one nonzero coordinate.
  const auto& se = step.exponents();
  const auto& [name, q] = *se.begin();
  mpq_class k = -z.exponent(name) / q;
  if (k.get_den() != 1) return false;
  return (z * step.pow(Int(mpz_class(k.get_num())))).is_root_of_unity();
}

// Smallest d > 0 with p | a d and q | f d.
Int min_multiplier(const Int& p, const Int& a, const Int& q, const Int& f) {
  Int m1 = p.is_zero() ? Int(1) : exact_div(abs(p), gcd(p, a));
  Int m2 = q.is_zero() ? Int(1) : exact_div(abs(q), gcd(q, f));
  return lcm(m1, m2);
}

}  // namespace

StratumRow stratum(const Verdict& v, const SymbolTable& syms) {
  if (!v.irreducible) throw PreconditionError("stratum requires an irreducible pair");
  const Params& p = v.nf.params;
  const std::string& sub = v.nf.id.subset;
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  auto V = [&](const char* n) -> const UnitValue& { return v.values.at(n); };
  auto cls = [&](const char* n) { return V(n).modulus_class(syms); };
  const UnitValue& lambda = V("lambda");
  const ModulusClass lc = cls("lambda");
  const bool l_off = lc == ModulusClass::off_circle;
  const std::string l_col = l_off ? "CstarMinusS1" : "S1MinusMuInf";

  StratumRow row;
  row.block = v.nf.id.str();
  auto set = [&](int idx, std::vector<std::string> cols, std::vector<Fiber> fib) {
    row.row = idx;
    row.columns = std::move(cols);
    row.fibers = std::move(fib);
  };

  switch (p.rk1 * 10 + p.rk2) {
    case 11: {
      const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &e = P("e");
      std::vector<std::string> cols{"t", "z", "lambda"};
      if (sub == "N1" || sub == "N2") {
        const Int& m = sub == "N1" ? a : f;
        bool hits = orbit_hits_roots(V("z"), lambda, 1);
        Fiber t = hits ? Fm(l_off ? "E" : "P", {{"lambda", 1}})
                       : Fiber{"T", {mono({{"z", m}}), mono({{"lambda", m}})}};
        Fiber z = hits ? F("mu_infty") : Fm(l_off ? "EMinusMuInf" : "PMinusMuInf", {{"lambda", 1}});
        set((hits ? 3 : 1) + (l_off ? 0 : 1), cols, {t, z, F(l_col)});
        break;
      }
      Int n = gcd(a, f), ap = exact_div(a, n), fp = exact_div(f, n);
      if (sub == "S1") {
        Int k = ap * e + fp * b + ap * fp * d;
        Int two = 2 * ap * fp;
        bool hits = orbit_hits_roots(V("z"), lambda, two);
        Fiber t = hits ? Fm(l_off ? "E" : "P", {{"lambda", gcd(k, a)}})
                       : Fiber{"T", {mono({{"z", d}, {"lambda", k}}), mono({{"lambda", a}})}};
        Fiber z = hits ? F("mu_infty") : Fm(l_off ? "EMinusMuInf" : "PMinusMuInf", {{"lambda", two}});
        set((hits ? 3 : 1) + (l_off ? 0 : 1), cols, {t, z, F(l_col)});
      } else if (sub == "S2" || sub == "S3") {
        // S2 follows the per-case fiber description; its table rows repeat S1.
        Int k = sub == "S2" ? fp * b : ap * e;
        const Int& m = sub == "S2" ? f : a;
        Fiber T{"T", {mono({{"z", d}, {"lambda", k}}), mono({{"lambda", m}})}};
        ModulusClass zc = cls("z");
        if (zc == ModulusClass::root_of_unity)
          set(l_off ? 4 : 5, cols,
              {Fm(l_off ? "E" : "P", {{"lambda", gcd(k, m)}}), F("mu_infty"), F(l_col)});
        else if (!l_off)
          set(3, cols, {T, F("CstarMinusMuInf"), F(l_col)});
        else
          set(zc == ModulusClass::off_circle ? 1 : 2, cols,
              {T, F(zc == ModulusClass::off_circle ? "CstarMinusS1" : "S1MinusMuInf"), F(l_col)});
      } else {  // S4
        const char* k = l_off ? "E" : "P";
        set(l_off ? 1 : 2, cols,
            {Fm(k, {{"lambda", gcd(ap * e + fp * b, a)}}), Fm(k, {{"lambda", 2 * ap * fp}}), F(l_col)});
      }
      break;
    }
    case 20: {
      const char* k = l_off ? "E" : "P";
      set(l_off ? 1 : 2, {"t", "s", "lambda"},
          {Fm(k, {{"lambda", P("f1")}}), Fm(k, {{"lambda", P("a")}}), F(l_col)});
      break;
    }
    case 21:
      set(l_off ? 1 : 2, {"t", "r", "z", "lambda"},
          {Fm(l_off ? "E" : "P", {{"lambda", P("a")}}), F("Cstar"), Fn("muN", P("a") * P("d1")),
           F(l_col)});
      break;
    case 12: {
      std::vector<std::string> cols{"t", "z", "w", "lambda"};
      if (sub != "A") {
        const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &b1 = P("b1"), &e1 = P("e1");
        // The printed generators carry d' and f'; the normalizer uses the minimal
        // multipliers d~ and f~ from the same proof.
        Int dt = min_multiplier(b1, a, e1, f);
        Int ft = min_multiplier(e1, d, Int(0), Int(0));
        Fiber T{"T",
                {mono({{"z", exact_div(a * dt, b1)}, {"w", exact_div(f * dt, e1)}}),
                 mono({{"w", exact_div(ft * d, e1)}, {"lambda", b * ft}})}};
        set(1, cols,
            {T, F("CstarMinusMuInf"), F("CstarMinusMuInf"), Fn("muN", gcd(a * e1, f * b1))});
        break;
      }
      if (lc == ModulusClass::root_of_unity) {
        set(9, cols, {Fiber{"T", {"z", "w"}}, F("CstarMinusMuInf"), F("CstarMinusMuInf"), F("mu_infty")});
        break;
      }
      bool zh = orbit_hits_roots(V("z"), lambda, 1), wh = orbit_hits_roots(V("w"), lambda, 1);
      const std::string E = l_off ? "E" : "P";
      Mono L{{"lambda", 1}};
      Fiber zf = zh ? Fm(E + "CapMuInf", L) : Fm(E + "MinusMuInf", L);
      Fiber wf = wh ? Fm(E + "CapMuInf", L) : Fm(E + "MinusMuInf", L);
      Fiber t = (!zh && !wh) ? Fiber{"T", {"z", "w"}}
                : (!zh)      ? Fm(E, {{"z", 1}})
                : (!wh)      ? Fm(E, {{"w", 1}})
                             : F("Cstar");
      int base = (!zh && !wh) ? 1 : (!zh) ? 3 : (!wh) ? 5 : 7;
      set(base + (l_off ? 0 : 1), cols, {t, zf, wf, F(l_col)});
      break;
    }
    case 22: {
      const Int &a = P("a"), &f = P("f"), &b = P("b"), &d1 = P("d1"), &f1 = P("f1"), &b1 = P("b1"),
                &e1 = P("e1"), &b2 = P("b2"), &e2 = P("e2");
      std::vector<std::string> cols{"t", "s", "z", "w", "lambda"};
      Int n = gcd(gcd(f * b2, f1 * b2), a * e2);
      ModulusClass zc = cls("z"), wc = cls("w");
      auto EP = [](ModulusClass c) { return c == ModulusClass::off_circle ? "E" : "P"; };
      auto col = [](ModulusClass c) {
        return c == ModulusClass::off_circle ? "CstarMinusS1" : "S1MinusMuInf";
      };
      if (sub == "S4") {
        // d' = 0 here; the multiplier of the normalizer generator (0, d~, 1) takes its place.
        Int dt = min_multiplier(b2, a, e2, f1);
        Mono zm{{"z", exact_div(dt * a, b2)}}, wm{{"w", exact_div(dt * f1, e2)}};
        bool zr = zc == ModulusClass::root_of_unity, wr = wc == ModulusClass::root_of_unity;
        Fiber t = zr ? F("Cstar") : Fm(EP(zc), zm);
        Fiber s = wr ? F("Cstar") : Fm(EP(wc), wm);
        Fiber zf = zr ? F("mu_infty") : F(col(zc));
        Fiber wf = wr ? F("mu_infty") : F(col(wc));
        bool zo = zc == ModulusClass::off_circle, wo = wc == ModulusClass::off_circle;
        int idx = zr   ? (wo ? 5 : 7)
                  : wr ? (zo ? 6 : 8)
                       : (zo ? (wo ? 1 : 3) : (wo ? 2 : 4));
        set(idx, cols, {t, s, zf, wf, Fn("muN", n)});
        break;
      }
      Int ft = min_multiplier(e2, d1, Int(0), Int(0));
      Mono wm{{"w", exact_div(d1 * ft, e2)}};
      if (sub == "S1") {
        bool sing = wc == ModulusClass::circle_nontorsion;
        set(sing ? 2 : 1, cols,
            {F("Cstar"), Fm(sing ? "P" : "E", wm), F(sing ? "CzwSing" : "Czw"),
             F(sing ? "CzwSing" : "Czw"), Fn("muN", n)});
      } else if (sub == "S2") {
        Int n2 = abs(exact_div(d1 * a, b2)) * lambda.pow(a * e1).order();
        set(wc == ModulusClass::off_circle ? 1 : 2, cols,
            {F("Cstar"), Fm(EP(wc), wm), Fn("muN", n2), F(col(wc)), Fn("muN", a * e2)});
      } else {  // S3, mirror of S2
        Int n3 = abs(exact_div(d1 * f, e2)) * lambda.pow(b * f1 - b1 * f).order();
        Mono zm{{"z", exact_div(d1 * a, b2)}};
        set(zc == ModulusClass::off_circle ? 1 : 2, cols,
            {Fm(EP(zc), zm), F("Cstar"), F(col(zc)), Fn("muN", n3), Fn("muN", f * b2)});
      }
      break;
    }
    case 32: {
      Int n3 = gcd(gcd(P("f2") * P("b3"), P("a") * P("e2") + P("b") * P("f2")), P("a") * P("e3"));
      Int n1 = abs(exact_div(P("d1") * P("a"), P("b3"))) * lambda.pow(P("a") * P("e1")).order();
      Int n2 = abs(exact_div(P("d1") * P("f2"), P("e3"))) * lambda.pow(P("b1") * P("f2")).order();
      set(1, {"t", "r", "s", "z", "w", "lambda"},
          {F("Cstar"), F("Cstar"), F("Cstar"), Fn("muN", n1), Fn("muN", n2), Fn("muN", n3)});
      break;
    }
    default:
      throw std::logic_error("no matching row");
  }
  if (row.row == 0) throw std::logic_error("no matching row for " + row.block);
  return row;
}

}  // namespace ut4
