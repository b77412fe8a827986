#include "ut4/classification.hpp"

#include <sstream>

namespace ut4 {

namespace {

int key(int rk1, int rk2) { return rk1 * 10 + rk2; }

bool nz(const Int& x) { return !x.is_zero(); }
bool abs_lt(const Int& x, const Int& y) { return abs(x) < abs(y); }

Element el(const Int& a, const Int& d, const Int& f, const Int& b, const Int& e) {
  return Element{a, d, f, b, e, 0};
}

// Collects the first violated clause.
struct Clauses {
  std::string failed;
  void need(bool ok, const char* what) {
    if (!ok && failed.empty()) failed = what;
  }
  bool ok() const { return failed.empty(); }
};

SetMembership member(const std::string& label) { return {true, label, ""}; }
SetMembership reject(const std::string& why) { return {false, "", why}; }

}  // namespace

bool feasible_ranks(int rk1, int rk2) { return is_case(rk1, rk2); }

bool is_case(int rk1, int rk2) {
  switch (key(rk1, rk2)) {
    case 11: case 20: case 21: case 12: case 22: case 32: return true;
    default: return false;
  }
}

const std::vector<std::string>& param_names(int rk1, int rk2) {
  static const std::map<int, std::vector<std::string>> names{
      {11, {"a", "d", "f", "b", "e"}},
      {20, {"a", "b", "e", "f1", "b1", "e1"}},
      {21, {"a", "e", "d1", "e1"}},
      {12, {"a", "d", "f", "b", "e", "b1", "e1"}},
      {22, {"a", "f", "b", "e", "d1", "f1", "b1", "e1", "b2", "e2"}},
      {32, {"a", "b", "e", "d1", "b1", "e1", "f2", "b2", "e2", "b3", "e3"}},
  };
  auto it = names.find(key(rk1, rk2));
  if (it == names.end()) throw StructureError("infeasible ranks");
  return it->second;
}

const std::vector<std::string>& value_names(int rk1, int rk2) {
  static const std::map<int, std::vector<std::string>> names{
      {11, {"t", "z", "lambda"}},           {20, {"t", "s", "lambda"}},
      {21, {"t", "r", "z", "lambda"}},      {12, {"t", "z", "w", "lambda"}},
      {22, {"t", "s", "z", "w", "lambda"}}, {32, {"t", "r", "s", "z", "w", "lambda"}},
  };
  auto it = names.find(key(rk1, rk2));
  if (it == names.end()) throw StructureError("infeasible ranks");
  return it->second;
}

const std::vector<std::string>& subset_labels(int rk1, int rk2) {
  static const std::map<int, std::vector<std::string>> labels{
      {11, {"S1", "S2", "S3", "S4", "N1", "N2"}}, {20, {"S"}}, {21, {"S1", "S2"}},
      {12, {"S1", "S2", "S3", "A"}},               {22, {"S1", "S2", "S3", "S4"}}, {32, {"S"}},
  };
  auto it = labels.find(key(rk1, rk2));
  if (it == labels.end()) throw StructureError("infeasible ranks");
  return it->second;
}

Params Params::make(int rk1, int rk2, std::vector<Int> v) {
  if (v.size() != param_names(rk1, rk2).size())
    throw std::invalid_argument("wrong number of parameters for case (" + std::to_string(rk1) +
                                "," + std::to_string(rk2) + ")");
  return {rk1, rk2, std::move(v)};
}

const Int& Params::at(std::string_view name) const {
  const auto& names = param_names(rk1, rk2);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return v[i];
  throw std::invalid_argument("no parameter " + std::string(name));
}

std::string Params::str() const {
  const auto& names = param_names(rk1, rk2);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << names[i] << "=" << v[i].str();
  os << ")";
  return os.str();
}

bool operator<(const Params& x, const Params& y) {
  if (x.rk1 != y.rk1) return x.rk1 < y.rk1;
  if (x.rk2 != y.rk2) return x.rk2 < y.rk2;
  return x.v < y.v;
}

std::string CaseId::str() const {
  return "(" + std::to_string(rk1) + "," + std::to_string(rk2) + ") " + subset;
}

std::vector<Element> phi_generators(const Params& p) {
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  const Element c = Element::x14();
  switch (key(p.rk1, p.rk2)) {
    case 11: {
      const Int &a = P("a"), &f = P("f");
      if (a.is_zero() && f.is_zero()) throw PreconditionError("phi undefined for a = f = 0");
      Int n = gcd(a, f);
      return {el(a, P("d"), f, P("b"), P("e")), el(0, 0, 0, exact_div(a, n), exact_div(f, n)), c};
    }
    case 20:
      return {el(P("a"), 0, 0, P("b"), P("e")), el(0, 0, P("f1"), P("b1"), P("e1")), c};
    case 21:
      return {el(P("a"), 0, 0, 0, P("e")), el(0, P("d1"), 0, 0, P("e1")), Element::x13(), c};
    case 12:
      return {el(P("a"), P("d"), P("f"), P("b"), P("e")), Element::x13(P("b1")),
              Element::x24(P("e1")), c};
    case 22:
      return {el(P("a"), 0, P("f"), P("b"), P("e")), el(0, P("d1"), P("f1"), P("b1"), P("e1")),
              Element::x13(P("b2")), Element::x24(P("e2")), c};
    case 32:
      return {el(P("a"), 0, 0, P("b"), P("e")), el(0, P("d1"), 0, P("b1"), P("e1")),
              el(0, 0, P("f2"), P("b2"), P("e2")), Element::x13(P("b3")), Element::x24(P("e3")),
              c};
  }
  throw StructureError("infeasible ranks");
}

SetMembership param_set_of(const Params& p, Reading r) {
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  switch (key(p.rk1, p.rk2)) {
    case 11: {
      const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &e = P("e");
      if (a.is_zero() && f.is_zero()) return reject("a = f = 0 (n undefined)");
      Int n = gcd(a, f);
      Int g = gcd(gcd(exact_div(f * b - a * e, n), a), gcd(d, f));
      if (!g.is_one()) return reject("GCD((fb - ae)/n, a, d, f) = 1 fails");
      if (nz(a) && nz(d) && nz(f)) return member("S1");
      if (a.is_zero() && nz(d) && nz(f)) return member("S2");
      if (nz(a) && nz(d) && f.is_zero()) return member("S3");
      if (nz(a) && d.is_zero() && nz(f)) return member("S4");
      if (nz(a) && d.is_zero() && f.is_zero())
        return b.is_one() ? member("N1") : reject("N1 requires b = 1");
      if (a.is_zero() && d.is_zero() && nz(f))
        return e.is_one() ? member("N2") : reject("N2 requires e = 1");
      return reject("no subset");
    }
    case 20: {
      // The printed set has "f != 0"; the tuple only has f'.
      Clauses c;
      c.need(P("a") * P("e1") + P("f1") * P("b") == 0, "ae' + f'b = 0");
      c.need(nz(P("a")), "a != 0");
      c.need(nz(P("f1")), "f' != 0");
      c.need(gcd(gcd(P("a"), P("b")), P("e")).is_one(), "|GCD(a, b, e)| = 1");
      c.need(gcd(gcd(P("f1"), P("b1")), P("e1")).is_one(), "|GCD(f', b', e')| = 1");
      return c.ok() ? member("S") : reject(c.failed);
    }
    case 21: {
      // The printed sets have "d != 0"; the tuple only has d'.
      Clauses c;
      c.need(nz(P("a")), "a != 0");
      c.need(nz(P("d1")), "d' != 0");
      if (!c.ok()) return reject(c.failed);
      Int k1 = gcd(P("a"), P("e")), k2 = gcd(P("d1"), P("e1"));
      return (k1.is_one() && k2.is_one()) ? member("S1") : member("S2");
    }
    case 12: {
      const Int &a = P("a"), &d = P("d"), &f = P("f"), &b = P("b"), &e = P("e"), &b1 = P("b1"),
                &e1 = P("e1");
      if (a.is_zero() && f.is_zero()) {
        Clauses c;
        c.need(d.is_one(), "A: d = 1");
        c.need(b.is_zero() && e.is_zero(), "A: b = e = 0");
        c.need(b1.is_one() && e1.is_one(), "A: b' = e' = 1");
        return c.ok() ? member("A") : reject(c.failed);
      }
      if (f.is_zero()) {
        Clauses c;
        c.need(nz(d), "S2: d != 0");
        c.need(nz(e1), "S2: e' != 0");
        c.need(b1.is_one(), "S2: b' = 1");
        c.need(b.is_zero(), "S2: b = 0");
        c.need(abs_lt(e, e1), "S2: |e| < |e'|");
        return c.ok() ? member("S2") : reject(c.failed);
      }
      if (a.is_zero()) {
        Clauses c;
        c.need(nz(d), "S3: d != 0");
        c.need(nz(b1), "S3: b' != 0");
        c.need(e1.is_one(), "S3: e' = 1");
        c.need(abs_lt(b, b1), "S3: |b| < |b'|");
        c.need(e.is_zero(), "S3: e = 0");
        return c.ok() ? member("S3") : reject(c.failed);
      }
      Clauses c;
      c.need(nz(b1) && nz(e1), "S1: b', e' != 0");
      c.need(abs_lt(b, b1), "S1: |b| < |b'|");
      c.need(abs_lt(e, e1), "S1: |e| < |e'|");
      return c.ok() ? member("S1") : reject(c.failed);
    }
    case 22: {
      const Int &a = P("a"), &f = P("f"), &b = P("b"), &e = P("e"), &d1 = P("d1"), &f1 = P("f1"),
                &b1 = P("b1"), &e1 = P("e1"), &b2 = P("b2"), &e2 = P("e2");
      auto bounds = [&](Clauses& c) {
        c.need(abs_lt(b, b2) && abs_lt(b1, b2), "|b|, |b'| < |b''|");
        c.need(abs_lt(e, e2) && abs_lt(e1, e2), "|e|, |e'| < |e''|");
      };
      // The printed S1/S2 write "d != 0"; read as d' != 0.
      if (d1.is_zero()) {
        Clauses c;
        c.need(nz(a), "S4: a != 0");
        c.need(nz(f1), "S4: f' != 0");
        c.need(nz(b2) && nz(e2), "S4: b'', e'' != 0");
        bounds(c);
        return c.ok() ? member("S4") : reject(c.failed);
      }
      if (a.is_zero()) {
        Clauses c;
        if (r == Reading::literal) {
          // As printed: f = 0, f' != 0. Then h1 lies in [G,G].
          c.need(nz(f1), "S3: f' != 0");
          c.need(f.is_zero(), "S3: f = 0");
        } else {
          // Mirror of S2: f != 0, f' = 0.
          c.need(nz(f), "S3: f != 0");
          c.need(f1.is_zero(), "S3: f' = 0");
        }
        c.need(e2.is_one(), "S3: e'' = 1");
        c.need(nz(b2), "S3: b'' != 0");
        c.need(e.is_zero() && e1.is_zero(), "S3: e = e' = 0");
        c.need(abs_lt(b, b2) && abs_lt(b1, b2), "S3: |b|, |b'| < |b''|");
        return c.ok() ? member("S3") : reject(c.failed);
      }
      if (f.is_zero() && f1.is_zero()) {
        Clauses c;
        c.need(nz(e2), "S2: e'' != 0");
        c.need(b2.is_one(), "S2: b'' = 1");
        c.need(b.is_zero() && b1.is_zero(), "S2: b = b' = 0");
        c.need(abs_lt(e, e2) && abs_lt(e1, e2), "S2: |e|, |e'| < |e''|");
        return c.ok() ? member("S2") : reject(c.failed);
      }
      Clauses c;
      c.need(nz(f1) && nz(f), "S1: f, f' != 0");
      c.need(nz(b2) && nz(e2), "S1: b'', e'' != 0");
      if (c.ok()) {
        c.need(divides(e2, d1 * f), "S1: d'f divisible by e''");
        c.need(divides(b2, d1 * a), "S1: d'a divisible by b''");
      }
      bounds(c);
      return c.ok() ? member("S1") : reject(c.failed);
    }
    case 32: {
      const Int &b3 = P("b3"), &e3 = P("e3");
      Clauses c;
      c.need(nz(P("a")) && nz(P("d1")) && nz(P("f2")), "a, d', f'' != 0");
      c.need(nz(b3) && nz(e3), "b''', e''' != 0");
      c.need(abs_lt(P("b"), b3) && abs_lt(P("b1"), b3) && abs_lt(P("b2"), b3),
             "|b|, |b'|, |b''| < |b'''|");
      c.need(abs_lt(P("e"), e3) && abs_lt(P("e1"), e3) && abs_lt(P("e2"), e3),
             "|e|, |e'|, |e''| < |e'''|");
      if (r == Reading::reconciled && c.ok()) {
        // Needed for h4, h5 to span the level-2 lattice of H.
        c.need(divides(b3, P("a") * P("d1")), "b''' divides ad'");
        c.need(divides(e3, P("d1") * P("f2")), "e''' divides d'f''");
      }
      return c.ok() ? member("S") : reject(c.failed);
    }
  }
  throw StructureError("infeasible ranks");
}

namespace {

[[noreturn]] void shape_error(const std::string& why) {
  throw StructureError("violates case structure: " + why);
}

bool row_is(const IntVec& r, const Int& x, const Int& y, const Int& z) {
  return r[0] == x && r[1] == y && r[2] == z;
}

}  // namespace

NormalForm normal_form(const Subgroup& h) {
  const Ranks rk = h.ranks();
  if (!feasible_ranks(rk.rk1, rk.rk2))
    throw StructureError("infeasible ranks (" + std::to_string(rk.rk1) + "," +
                         std::to_string(rk.rk2) + ")");
  if (!h.contains_center()) shape_error("center not contained");
  const IntMat& l1 = h.level1();
  const IntMat& l2 = h.level2();
  const auto& t1 = h.tails1();
  const auto& t2 = h.tails2();
  (void)t2;
  std::vector<Int> v;
  switch (key(rk.rk1, rk.rk2)) {
    case 11: {
      const Int &a = l1[0][0], &d = l1[0][1], &f = l1[0][2];
      if (a.is_zero() && f.is_zero()) shape_error("level-1 generator has a = f = 0");
      Int n = gcd(a, f);
      Int ap = exact_div(a, n), fp = exact_div(f, n);
      const Int &beta = l2[0][0], &eps = l2[0][1];
      if (!(a * eps - beta * f).is_zero()) shape_error("non-abelian");
      if (!((beta == ap && eps == fp) || (beta == -ap && eps == -fp)))
        shape_error("level-2 lattice is not generated by (a/n, f/n)");
      Int b = t1[0].b, e = t1[0].e;
      if (d.is_zero() && f.is_zero()) b = 1;   // N1 keeps the printed b = 1
      if (a.is_zero() && d.is_zero()) e = 1;   // N2 keeps the printed e = 1
      v = {a, d, f, b, e};
      break;
    }
    case 20: {
      if (!(row_is(l1[0], l1[0][0], 0, 0) && row_is(l1[1], 0, 0, l1[1][2])))
        shape_error("level-1 lattice not of the case shape <(a,0,0), (0,0,f')>");
      v = {l1[0][0], t1[0].b, t1[0].e, l1[1][2], t1[1].b, t1[1].e};
      break;
    }
    case 21: {
      if (!(row_is(l1[0], l1[0][0], 0, 0) && row_is(l1[1], 0, l1[1][1], 0))) {
        if (l1[0][0].is_zero() && l2[0][0].is_zero())
          shape_error("mirror orientation (level-2 lattice generated by E24) is not parametrized");
        shape_error("level-1 lattice not of the case shape <(a,0,0), (0,d',0)>");
      }
      if (!(l2[0][0].is_one() && l2[0][1].is_zero()))
        shape_error("level-2 lattice is not generated by E13");
      v = {l1[0][0], t1[0].e, l1[1][1], t1[1].e};
      break;
    }
    case 12: {
      if (!l2[0][1].is_zero()) shape_error("level-2 lattice not diagonal");
      v = {l1[0][0], l1[0][1], l1[0][2], t1[0].b, t1[0].e, l2[0][0], l2[1][1]};
      break;
    }
    case 22: {
      if (!l2[0][1].is_zero()) shape_error("level-2 lattice not diagonal");
      const IntVec &r1 = l1[0], &r2 = l1[1];
      const Element *h1 = &t1[0], *h2 = &t1[1];
      Int a, f, d1, f1;
      if (nz(r1[0]) && r1[1].is_zero() && r2[0].is_zero()) {
        a = r1[0];
        f = r1[2];
        d1 = r2[1];
        f1 = r2[2];
      } else if (r1[0].is_zero() && nz(r1[1]) && r2[0].is_zero() && r2[1].is_zero()) {
        // a = 0: h1 = (0,0,f), h2 = (0,d',f').
        a = 0;
        f = r2[2];
        d1 = r1[1];
        f1 = r1[2];
        std::swap(h1, h2);
      } else {
        shape_error("level-1 lattice not of the case shape <(a,0,f), (0,d',f')>");
      }
      v = {a, f, h1->b, h1->e, d1, f1, h2->b, h2->e, l2[0][0], l2[1][1]};
      break;
    }
    case 32: {
      if (!(row_is(l1[0], l1[0][0], 0, 0) && row_is(l1[1], 0, l1[1][1], 0)))
        shape_error("level-1 lattice not diagonal");
      if (!l2[0][1].is_zero()) shape_error("level-2 lattice not diagonal");
      v = {l1[0][0], t1[0].b, t1[0].e, l1[1][1], t1[1].b, t1[1].e,
           l1[2][2], t1[2].b, t1[2].e, l2[0][0], l2[1][1]};
      break;
    }
  }
  NormalForm nf;
  nf.params = Params::make(rk.rk1, rk.rk2, std::move(v));
  SetMembership m = param_set_of(nf.params, Reading::reconciled);
  if (!m.ok) shape_error(m.reason);
  nf.id = {rk.rk1, rk.rk2, m.subset};
  nf.conjugator = Element::identity();
  if (Subgroup::generate(phi_generators(nf.params)) != h)
    throw std::logic_error("normal form does not reproduce the subgroup: " + nf.params.str());
  return nf;
}

const UnitValue& CaseValues::at(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw std::invalid_argument("no value " + std::string(name));
}

CaseValues case_values(const Params& p, const Character& chi) {
  CaseValues cv;
  cv.names = value_names(p.rk1, p.rk2);
  for (const auto& g : phi_generators(p)) cv.values.push_back(chi.evaluate(g));
  return cv;
}

namespace {

std::string ord_str(const UnitValue& v) {
  Int o = v.order();
  return o.is_zero() ? std::string("infinite") : o.str();
}

Condition not_root(const std::string& name, const UnitValue& v) {
  return {name + " not a root of unity", !v.is_root_of_unity(), name + " = " + v.str()};
}

Condition order_is(const std::string& what, const UnitValue& v, const Int& n) {
  return {"ord(" + what + ") = " + abs(n).str(), v.order() == abs(n),
          "ord(" + what + ") = " + ord_str(v)};
}

}  // namespace

Verdict is_irreducible(const Character& chi) {
  Verdict out;
  out.nf = normal_form(chi.domain());
  const Params& p = out.nf.params;
  out.values = case_values(p, chi);
  auto P = [&](const char* n) -> const Int& { return p.at(n); };
  auto V = [&](const char* n) -> const UnitValue& { return out.values.at(n); };
  const UnitValue& lambda = V("lambda");
  auto& cs = out.conditions;
  const std::string& sub = out.nf.id.subset;
  switch (key(p.rk1, p.rk2)) {
    case 11:
    case 20:
      cs.push_back(not_root("lambda", lambda));
      break;
    case 21: {
      cs.push_back(not_root("lambda", lambda));
      UnitValue rel = V("z").pow(P("a") * P("d1")) * lambda.pow(P("a") * P("e1"));
      cs.push_back({"z^(ad') lambda^(ae') = 1", rel.is_one(), rel.str()});
      if (sub == "S2") {
        Int k = gcd(P("a"), P("e")) * gcd(P("d1"), P("e1"));
        UnitValue u = V("z").pow(exact_div(P("a") * P("d1"), k)) *
                      lambda.pow(exact_div(P("a") * P("e1"), k));
        cs.push_back(order_is("z^(ad'/k1k2) lambda^(ae'/k1k2)", u, k));
      }
      break;
    }
    case 12:
      if (sub == "A") {
        bool zw = !V("z").is_root_of_unity() && !V("w").is_root_of_unity();
        bool l = !lambda.is_root_of_unity();
        cs.push_back({"(z and w not roots of unity) or lambda not a root of unity", zw || l,
                      "z = " + V("z").str() + ", w = " + V("w").str() + ", lambda = " +
                          lambda.str()});
      } else {
        cs.push_back(not_root("z", V("z")));
        cs.push_back(not_root("w", V("w")));
        cs.push_back(order_is("lambda^f", lambda.pow(P("f")), P("b1")));
        cs.push_back(order_is("lambda^a", lambda.pow(P("a")), P("e1")));
        cs.push_back({"d != 0", nz(P("d")), "d = " + P("d").str()});
      }
      break;
    case 22: {
      Int n = gcd(gcd(P("f") * P("b2"), P("f1") * P("b2")), P("a") * P("e2"));
      cs.push_back(order_is("lambda", lambda, n));
      bool zr = V("z").is_root_of_unity(), wr = V("w").is_root_of_unity();
      if (sub == "S2") cs.push_back(not_root("w", V("w")));
      else if (sub == "S3") cs.push_back(not_root("z", V("z")));
      else
        cs.push_back({"z and w not both roots of unity", !(zr && wr),
                      "z = " + V("z").str() + ", w = " + V("w").str()});
      break;
    }
    case 32: {
      Int n3 = gcd(gcd(P("f2") * P("b3"), P("a") * P("e2") + P("b") * P("f2")),
                   P("a") * P("e3"));
      cs.push_back(order_is("lambda", lambda, n3));
      Int n1 = abs(exact_div(P("d1") * P("a"), P("b3"))) *
               lambda.pow(P("a") * P("e1")).order();
      Int n2 = abs(exact_div(P("d1") * P("f2"), P("e3"))) *
               lambda.pow(P("b1") * P("f2")).order();
      cs.push_back(order_is("z", V("z"), n1));
      cs.push_back(order_is("w", V("w"), n2));
      break;
    }
  }
  out.irreducible = true;
  for (const auto& c : cs) out.irreducible = out.irreducible && c.holds;
  return out;
}

namespace {

// Tail parameters and the parameter bounding each of them.
std::map<std::string, std::string> tail_bounds(int rk1, int rk2) {
  switch (key(rk1, rk2)) {
    case 12: return {{"b", "b1"}, {"e", "e1"}};
    case 22: return {{"b", "b2"}, {"b1", "b2"}, {"e", "e2"}, {"e1", "e2"}};
    case 32:
      return {{"b", "b3"}, {"b1", "b3"}, {"b2", "b3"}, {"e", "e3"}, {"e1", "e3"}, {"e2", "e3"}};
    default: return {};
  }
}

}  // namespace

std::vector<Params> enumerate_params(int rk1, int rk2, const std::string& subset, int box,
                                     size_t limit, Reading r) {
  std::vector<Params> out;
  if (box < 0 || limit == 0) return out;
  const auto& names = param_names(rk1, rk2);
  const auto tails = tail_bounds(rk1, rk2);
  std::vector<size_t> level, tail, bound;
  for (size_t i = 0; i < names.size(); ++i) {
    auto it = tails.find(names[i]);
    if (it == tails.end()) {
      level.push_back(i);
    } else {
      tail.push_back(i);
      for (size_t j = 0; j < names.size(); ++j)
        if (names[j] == it->second) bound.push_back(j);
    }
  }
  std::vector<Int> v(names.size(), Int(-box));
  // Odometer over the level parameters; tails range over |x| < |bound| within the box.
  std::vector<long> lv(level.size(), -box);
  while (true) {
    for (size_t k = 0; k < level.size(); ++k) v[level[k]] = lv[k];
    std::vector<long> lo(tail.size()), hi(tail.size());
    bool empty = false;
    for (size_t k = 0; k < tail.size(); ++k) {
      long bnd = std::labs(v[bound[k]].to_int64());
      long m = bnd == 0 ? box : std::min<long>(box, bnd - 1);
      lo[k] = -m;
      hi[k] = m;
      if (bnd == 0) empty = true;  // every set requires the bound to be nonzero
    }
    if (!empty) {
      std::vector<long> tv(lo);
      while (true) {
        for (size_t k = 0; k < tail.size(); ++k) v[tail[k]] = tv[k];
        Params p{rk1, rk2, v};
        SetMembership m = param_set_of(p, r);
        if (m.ok && (subset.empty() || m.subset == subset)) {
          out.push_back(p);
          if (out.size() >= limit) return out;
        }
        size_t k = 0;
        while (k < tail.size() && tv[k] == hi[k]) tv[k] = lo[k], ++k;
        if (k == tail.size()) break;
        ++tv[k];
      }
    }
    size_t k = 0;
    while (k < level.size() && lv[k] == box) lv[k] = -box, ++k;
    if (k == level.size()) break;
    ++lv[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ut4
