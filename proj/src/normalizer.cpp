#include "ut4/classification.hpp"

namespace ut4 {

namespace {

Factor fac(size_t gen, const Int& e) { return {gen, to_mpq(e)}; }

// Smallest natural m with p | m x and q | m y (a zero divisor imposes nothing).
Int min_natural(const Int& p, const Int& x, const Int& q, const Int& y) {
  Int m1 = p.is_zero() ? Int(1) : exact_div(abs(p), gcd(p, x));
  Int m2 = q.is_zero() ? Int(1) : exact_div(abs(q), gcd(q, y));
  return lcm(m1, m2);
}

Int div_or_throw(const Int& a, const Int& b, const char* what) {
  if (b.is_zero() || !divides(b, a)) throw PreconditionError(std::string("divisibility fails: ") + what);
  return exact_div(a, b);
}

}  // namespace

std::vector<NormalizerGen> normalizer_generators(const CaseId& id, const Params& p) {
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  const std::string& sub = id.subset;
  std::vector<NormalizerGen> out;
  switch (p.rk1 * 10 + p.rk2) {
    case 11: {
      const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &e = P("e");
      const size_t H1 = 0, H2 = 1, C = 2;
      if (sub == "N1") {
        out.push_back({"g1", Element::x23(), true, {{H1, {fac(H2, -a)}}}});
        out.push_back({"g2", Element::x24(), true, {{H1, {fac(C, -a)}}}});
        out.push_back({"g3", Element::x34(), true, {{H2, {fac(C, -1)}}}});
        break;
      }
      if (sub == "N2") {
        // Treated "similarly" without formulas.
        out.push_back({"g1", Element::x12(), false, {}});
        out.push_back({"g2", Element::x23(), false, {}});
        out.push_back({"g3", Element::x13(), false, {}});
        break;
      }
      Int n = gcd(a, f), ap = exact_div(a, n), fp = exact_div(f, n);
      if (sub == "S2") {
        out.push_back({"g1", Element{0, 0, -fp, 0, 0, 0}, true,
                       {{H1, {fac(H2, d), fac(C, fp * b)}}}});
        out.push_back({"g2", Element::x13(), true, {{H1, {fac(C, f)}}}});
      } else {
        out.push_back({"g1", Element{ap, 0, -fp, 0, 0, 0}, true,
                       {{H1, {fac(H2, d), fac(C, ap * e + fp * b + ap * fp * d)}},
                        {H2, {fac(C, 2 * ap * fp)}}}});
        out.push_back({"g2", Element::x24(), true, {{H1, {fac(C, -a)}}}});
      }
      break;
    }
    case 20:
      // As printed: E13 on h1 by lambda^f', E24 on h2 by lambda^-a.
      out.push_back({"g1", Element::x13(), true, {{0, {fac(2, P("f1"))}}}});
      out.push_back({"g2", Element::x24(), true, {{1, {fac(2, -P("a"))}}}});
      break;
    case 21:
      out.push_back({"g", Element::x24(), true, {{0, {fac(3, -P("a"))}}}});
      break;
    case 12: {
      if (sub == "A") {
        out.push_back({"g1", Element::x12(), true, {{0, {fac(1, 1)}}, {2, {fac(3, 1)}}}});
        out.push_back({"g2", Element::x34(), true, {{0, {fac(2, -1)}}, {1, {fac(3, -1)}}}});
        break;
      }
      const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &b1 = P("b1"), &e1 = P("e1");
      Int dt = min_natural(b1, a, e1, f);
      Int ft = min_natural(e1, d, Int(0), Int(0));
      out.push_back({"g1", Element::x23(dt), true,
                     {{0, {fac(1, -div_or_throw(a * dt, b1, "b' | a d~")),
                           fac(2, div_or_throw(f * dt, e1, "e' | f d~"))}}}});
      out.push_back({"g2", Element::x34(ft), true,
                     {{0, {fac(2, -div_or_throw(ft * d, e1, "e' | f~ d")), fac(3, -b * ft)}},
                      {1, {fac(3, -b1 * ft)}}}});
      break;
    }
    case 22: {
      const Int &a = P("a"), &b = P("b"), &d1 = P("d1"), &f1 = P("f1"), &b1 = P("b1"),
                &b2 = P("b2"), &e2 = P("e2");
      if (sub == "S4") {
        Int dt = min_natural(b2, a, e2, f1);
        out.push_back({"g", Element{0, dt, 1, 0, 0, 0}, true,
                       {{0, {fac(2, -div_or_throw(a * dt, b2, "b'' | a d~"))}},
                        {1, {fac(3, -div_or_throw(f1 * dt, e2, "e'' | f' d~"))}}}});
        break;
      }
      Int ft = min_natural(e2, d1, Int(0), Int(0));
      out.push_back({"g", Element::x34(ft), true,
                     {{0, {fac(4, -b * ft)}},
                      {1, {fac(3, -div_or_throw(d1 * ft, e2, "e'' | d' f~")), fac(4, -b1 * ft)}},
                      {2, {fac(4, -b2 * ft)}}}});
      break;
    }
    case 32:
      break;  // the quotient is finite and not listed
    default:
      throw StructureError("infeasible ranks");
  }
  return out;
}

std::vector<CommutatorDisplay> commutator_displays(const CaseId& id, const Params& p) {
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  std::vector<CommutatorDisplay> out;
  switch (p.rk1 * 10 + p.rk2) {
    case 21:
      out.push_back({0, 1, {fac(2, P("a") * P("d1")), fac(3, P("a") * P("e1"))}});
      break;
    case 12:
      out.push_back({0, 1, {fac(3, P("f") * P("b1"))}});
      out.push_back({0, 2, {fac(3, P("a") * P("e1"))}});
      break;
    case 22: {
      const Int &a = P("a"), &f = P("f"), &b = P("b"), &d1 = P("d1"), &f1 = P("f1"),
                &b1 = P("b1"), &e1 = P("e1"), &b2 = P("b2"), &e2 = P("e2");
      if (id.subset == "S4") {
        out.push_back({0, 1, {fac(4, a * e1 + b * f1)}});
      } else {
        out.push_back({0, 1,
                       {fac(3, -exact_div(d1 * f, e2)), fac(2, -exact_div(d1 * a, b2)),
                        fac(4, a * e1 + b * f1 - b1 * f)}});
        out.push_back({0, 2, {fac(4, -f * b2)}});
      }
      out.push_back({0, 3, {fac(4, a * e2)}});
      out.push_back({1, 2, {fac(4, -f1 * b2)}});
      break;
    }
    case 32: {
      const Int &a = P("a"), &b = P("b"), &d1 = P("d1"), &b1 = P("b1"), &e1 = P("e1"),
                &f2 = P("f2"), &e2 = P("e2"), &b3 = P("b3"), &e3 = P("e3");
      out.push_back({0, 1, {fac(3, -exact_div(d1 * a, b3)), fac(5, -a * e1)}});
      out.push_back({1, 2, {fac(4, exact_div(d1 * f2, e3)), fac(5, b1 * f2)}});
      out.push_back({0, 2, {fac(5, -a * e2 - b * f2)}});
      out.push_back({2, 3, {fac(5, b3 * f2)}});
      out.push_back({0, 4, {fac(5, -a * e3)}});
      break;
    }
    default:
      break;
  }
  return out;
}

UnitValue monomial(const std::vector<UnitValue>& vals, const std::vector<Factor>& f) {
  UnitValue r;
  for (const auto& x : f) r = r * vals.at(x.gen).pow(x.exp);
  return r;
}

std::string monomial_str(const std::vector<std::string>& names, const std::vector<Factor>& f) {
  std::string s;
  for (const auto& x : f) {
    if (x.exp == 0) continue;
    if (!s.empty()) s += "*";
    s += names.at(x.gen);
    if (x.exp != 1) s += "^" + rational_str(x.exp);
  }
  return s.empty() ? "1" : s;
}

ActionResult normalizer_action(const NormalForm& nf, const Character& chi, size_t index) {
  const auto gens = phi_generators(nf.params);
  ActionResult r;
  for (const auto& h : gens) r.actual.push_back(chi.evaluate(h));
  if (index == 0) {
    r.acted = chi;
    r.predicted = r.actual;
    r.displayed = true;
    r.agrees = true;
    return r;
  }
  const auto list = normalizer_generators(nf.id, nf.params);
  if (index > list.size()) throw std::out_of_range("no normalizer generator " + std::to_string(index));
  const NormalizerGen& g = list[index - 1];
  if (!normalizes(g.g, chi.domain()))
    throw std::logic_error("listed generator " + g.g.str() + " does not normalize " +
                           chi.domain().str());
  std::vector<UnitValue> base = r.actual;
  r.acted = conjugate_character(chi, g.g);
  for (size_t i = 0; i < gens.size(); ++i) r.actual[i] = r.acted.evaluate(gens[i]);
  r.displayed = g.displayed;
  r.predicted = base;
  for (const auto& d : g.displays) r.predicted[d.target] = base[d.target] * monomial(base, d.factors);
  r.agrees = r.displayed && r.predicted == r.actual;
  return r;
}

}  // namespace ut4
