// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance c4 c7      run the named criteria
// Exit status is 0 iff every requested criterion passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "samplers.hpp"
#include "ut4/oracle.hpp"

using namespace ut4;
using namespace ut4::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Wall-clock limits in seconds.
const std::map<std::string, double> kLimit{
    {"c1", 5},   {"c2", 30},  {"c3", 10},  {"c4", 600}, {"c5", 300},
    {"c6", 900}, {"c7", 300}, {"c8", 300}, {"c9", 120}, {"c10", 60},
};

// Sweep boxes and sample sizes.
constexpr int kVerifyBox = 3;
constexpr int kVerifyBox32 = 2;
constexpr int kIsolatorBox = 4;
constexpr int kRootExponent = 6;
constexpr int kPairsPerCase = 60;
constexpr int kIrreducibleRadius = 4;
constexpr int kWitnessRadius = 3;
constexpr int kSampleBox = 2;
constexpr int kEndoBox = 2;
constexpr int kEndoCharsPerSubgroup = 1;
constexpr int kOrbitBox = 3;
constexpr int kCensusSubgroups = 5000;

const std::vector<std::pair<int, int>> kCases{{1, 1}, {2, 0}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};

Subgroup phi(const Params& p) { return Subgroup::generate(phi_generators(p)); }

// ---- c1: group law ---------------------------------------------------------

Outcome c1() {
  std::mt19937_64 rng(101);
  const int n = 10000;
  size_t bad = 0;
  for (int i = 0; i < n; ++i) {
    Element x = random_element(rng, 5), y = random_element(rng, 5), z = random_element(rng, 5);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) ++bad;
    if (mul(x, inv(x)) != Element::identity() || mul(inv(x), x) != Element::identity()) ++bad;
    if (Element::from_matrix(x.matrix()) != x) ++bad;
    if (mul(x, y).matrix() != matmul4(x.matrix(), y.matrix())) ++bad;
  }
  return {bad == 0, std::to_string(n) + " triples, " + std::to_string(bad) + " failures"};
}

// ---- c2: power formula -----------------------------------------------------

Outcome c2() {
  size_t checked = 0, bad = 0;
  for (int a = -3; a <= 3; ++a)
    for (int d = -3; d <= 3; ++d)
      for (int f = -3; f <= 3; ++f)
        for (int b = -3; b <= 3; ++b)
          for (int e = -3; e <= 3; ++e)
            for (int c = -3; c <= 3; ++c) {
              Element x = Element::make(a, d, f, b, e, c);
              for (int r = -4; r <= 4; ++r) {
                ++checked;
                Int expect = Int(r) * b + Int(r * (r - 1) / 2) * a * d;
                Element p = pow(x, Int(r));
                if (p.b != expect || naive_pow(x, r).b != expect) ++bad;
              }
            }
  return {bad == 0, std::to_string(checked) + " powers, " + std::to_string(bad) + " failures"};
}

// ---- c3: commutation in case (2,0) -----------------------------------------

Element from_entries(const Int& a, const Int& d, const Int& f, const Int& b, const Int& e) {
  Mat4 m = identity4();
  m[0][1] = a, m[1][2] = d, m[2][3] = f, m[0][2] = b, m[1][3] = e;
  return Element::from_matrix(m);
}

Outcome c3() {
  size_t checked = 0, bad = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int e = -3; e <= 3; ++e)
        for (int f1 = -3; f1 <= 3; ++f1)
          for (int b1 = -3; b1 <= 3; ++b1)
            for (int e1 = -3; e1 <= 3; ++e1) {
              if (a == 0 || f1 == 0) continue;
              ++checked;
              Element h1 = from_entries(a, 0, 0, b, e), h2 = from_entries(0, 0, f1, b1, e1);
              bool commute = comm(h1, h2) == Element::identity();
              if (commute != (a * e1 + f1 * b == 0)) ++bad;
            }
  return {bad == 0, std::to_string(checked) + " tuples, " + std::to_string(bad) + " failures"};
}

// ---- c4: printed normalizer actions ----------------------------------------

Outcome c4() {
  Outcome o;
  size_t total_params = 0, total_checks = 0, total_bad = 0;
  std::ostringstream os;
  for (auto [r1, r2] : kCases)
    for (const auto& sub : subset_labels(r1, r2)) {
      CaseId id{r1, r2, sub};
      int box = (r1 == 3) ? kVerifyBox32 : kVerifyBox;
      VerifyReport rep = verify_case(id, box, Reading::reconciled, 1);
      total_params += rep.params_checked;
      total_checks += rep.action_checks;
      size_t bad = rep.action_discrepancies + rep.normalize_failures;
      total_bad += bad;
      if (bad) {
        os << "\n    " << id.str() << ": " << rep.action_discrepancies << "/" << rep.action_checks
           << " actions differ, " << rep.normalize_failures << " generators fail to normalize";
        if (!rep.discrepancies.empty()) {
          const auto& d = rep.discrepancies[0];
          os << "; e.g. " << d.params.str() << " " << d.what << ": shown " << d.displayed
             << ", actual " << d.actual;
        }
      }
      if (rep.commutator_discrepancies)
        os << "\n    " << id.str() << ": (info) " << rep.commutator_discrepancies << "/"
           << rep.commutator_checks << " commutator identities differ";
    }
  o.pass = total_bad == 0;
  o.detail = std::to_string(total_params) + " tuples, " + std::to_string(total_checks) +
             " action checks, " + std::to_string(total_bad) + " discrepancies" + os.str();
  return o;
}

// ---- c5: isolated subgroups of case (1,1) ----------------------------------

// The unique x with x^k = y, if it has integer coordinates.
std::optional<Element> kth_root(const Element& y, int k) {
  if (!divides(Int(k), y.a) || !divides(Int(k), y.d) || !divides(Int(k), y.f)) return std::nullopt;
  Element x{exact_div(y.a, Int(k)), exact_div(y.d, Int(k)), exact_div(y.f, Int(k)), 0, 0, 0};
  // The (1,3) and (2,4) coordinates of x^k are k b + const and k e + const, then k c + const.
  Element p = naive_pow(x, k);
  Int db = y.b - p.b, de = y.e - p.e;
  if (!divides(Int(k), db) || !divides(Int(k), de)) return std::nullopt;
  x.b = exact_div(db, Int(k));
  x.e = exact_div(de, Int(k));
  p = naive_pow(x, k);
  Int dc = y.c - p.c;
  if (!divides(Int(k), dc)) return std::nullopt;
  x.c = exact_div(dc, Int(k));
  if (naive_pow(x, k) != y) throw std::logic_error("root extraction");
  return x;
}

Outcome c5() {
  size_t checked = 0, bad_gcd = 0, bad_root = 0;
  std::string example;
  const int B = kIsolatorBox;
  for (int a = -B; a <= B; ++a)
    for (int d = -B; d <= B; ++d)
      for (int f = -B; f <= B; ++f)
        for (int b = -B; b <= B; ++b)
          for (int e = -B; e <= B; ++e) {
            if (a == 0 && f == 0) continue;
            ++checked;
            Params p = Params::make(1, 1, {a, d, f, b, e});
            auto gens = phi_generators(p);
            Subgroup h = Subgroup::generate(gens);
            bool iso = is_isolated(h);
            long n = std::gcd(a, f);
            long g = std::gcd(std::gcd(std::gcd((long(f) * b - long(a) * e) / n, long(a)), long(d)),
                              long(f));
            if (iso != (g == 1)) {
              ++bad_gcd;
              if (example.empty()) example = p.str() + " isolated=" + std::to_string(iso);
            }
            // H is abelian, so H* is too and a root x of y can be moved by
            // elements of H: y's exponents may be taken in [0, k).
            bool root = false;
            for (int k = 2; k <= kRootExponent && !root; ++k)
              for (int i = 0; i < k && !root; ++i)
                for (int j = 0; j < k && !root; ++j)
                  for (int l = 0; l < k && !root; ++l) {
                    if (i == 0 && j == 0 && l == 0) continue;
                    Element y = mul(mul(pow(gens[0], Int(i)), pow(gens[1], Int(j))), pow(gens[2], Int(l)));
                    auto x = kth_root(y, k);
                    if (x && !h.contains(*x)) root = true;
                  }
            if (root == iso) {
              ++bad_root;
              if (example.empty()) example = p.str() + " root found=" + std::to_string(root);
            }
          }
  std::string detail = std::to_string(checked) + " tuples, " + std::to_string(bad_gcd) +
                       " GCD mismatches, " + std::to_string(bad_root) + " root-search mismatches";
  if (!example.empty()) detail += "; e.g. " + example;
  return {bad_gcd == 0 && bad_root == 0, detail};
}

// ---- shared pair generation for c6, c10 -------------------------------------

struct CasePairs {
  std::vector<Character> irreducible, violating;
  std::vector<std::string> irr_subset, viol_subset;
};

// Round-robin over the subsets so that each one contributes.
CasePairs sample_pairs(int r1, int r2, uint64_t seed) {
  CharacterSampler s(seed);
  CasePairs out;
  const auto& subs = subset_labels(r1, r2);
  const size_t per = (kPairsPerCase + subs.size() - 1) / subs.size();
  for (const auto& sub : subs) {
    auto pool = enumerate_params(r1, r2, sub, kSampleBox, SIZE_MAX);
    if (pool.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    size_t ni = 0, nv = 0;
    for (int attempt = 0; attempt < 20000 && (ni < per || nv < per); ++attempt) {
      Character chi = s.sample(pool[pick(s.rng())]);
      Verdict v = is_irreducible(chi);
      size_t fails = failed_conditions(v);
      if (v.irreducible && ni < per) {
        out.irreducible.push_back(chi);
        out.irr_subset.push_back(sub);
        ++ni;
      } else if (fails == 1 && nv < per) {
        out.violating.push_back(chi);
        out.viol_subset.push_back(sub);
        ++nv;
      }
    }
  }
  return out;
}

std::string describe(const Character& chi) {
  Verdict v = is_irreducible(chi);
  std::string s = v.nf.id.str() + " " + v.nf.params.str() + " with";
  for (size_t i = 0; i < v.values.names.size(); ++i)
    s += " " + v.values.names[i] + "=" + v.values.values[i].str();
  for (const auto& c : v.conditions)
    if (!c.holds) s += " [fails: " + c.name + "]";
  return s;
}

uint64_t case_seed(int r1, int r2) { return 6000 + 10 * r1 + r2; }

Outcome c6() {
  Outcome o;
  std::ostringstream os;
  for (auto [r1, r2] : kCases) {
    CasePairs cp = sample_pairs(r1, r2, case_seed(r1, r2));
    std::map<std::string, size_t> irr_bad, viol_bad;
    std::string irr_ex, viol_ex;
    for (size_t i = 0; i < cp.irreducible.size(); ++i) {
      auto w = s_chi_witness(cp.irreducible[i], kIrreducibleRadius);
      if (w) {
        ++irr_bad[cp.irr_subset[i]];
        if (irr_ex.empty()) irr_ex = describe(cp.irreducible[i]) + ", witness " + w->g.str();
      }
    }
    for (size_t i = 0; i < cp.violating.size(); ++i) {
      if (!s_chi_witness(cp.violating[i], kWitnessRadius)) {
        ++viol_bad[cp.viol_subset[i]];
        if (viol_ex.empty()) viol_ex = describe(cp.violating[i]);
      }
    }
    size_t ib = 0, vb = 0;
    for (auto& [k, v] : irr_bad) ib += v;
    for (auto& [k, v] : viol_bad) vb += v;
    bool ok = cp.irreducible.size() >= 50 && cp.violating.size() >= 50 && ib == 0 && vb == 0;
    o.pass = o.pass && ok;
    os << "\n    (" << r1 << "," << r2 << "): irreducible " << cp.irreducible.size() - ib << "/"
       << cp.irreducible.size() << " clean at radius " << kIrreducibleRadius << ", violating "
       << cp.violating.size() - vb << "/" << cp.violating.size() << " with witness at radius "
       << kWitnessRadius;
    for (auto& [k, v] : irr_bad) os << "; " << k << ": " << v << " irreducible with witness";
    for (auto& [k, v] : viol_bad) os << "; " << k << ": " << v << " violating without witness";
    if (!irr_ex.empty()) os << "\n      e.g. " << irr_ex;
    if (!viol_ex.empty()) os << "\n      e.g. " << viol_ex;
  }
  o.detail = os.str();
  return o;
}

// ---- c7: double coset count in case (3,2) ----------------------------------

template <class Fn>
void for_endo_characters(Fn&& fn) {
  CharacterSampler s(7007);
  s.set_palette(1, 1, 2);
  for (const auto& p : enumerate_params(3, 2, "", kEndoBox, SIZE_MAX))
    for (int k = 0; k < kEndoCharsPerSubgroup; ++k) fn(p, s.sample(p), s);
}

Outcome c7() {
  size_t checked = 0, minimal = 0, bad = 0;
  std::string example;
  for_endo_characters([&](const Params& p, const Character& chi, CharacterSampler&) {
    ++checked;
    Verdict v = is_irreducible(chi);
    minimal += v.irreducible;
    Int dim = endo_dimension_finite(chi);
    if (dim.is_one() != v.irreducible) {
      ++bad;
      if (example.empty()) example = p.str() + " dim " + dim.str();
    }
  });
  // H = G with an arbitrary character.
  CharacterSampler s(77);
  Params whole = Params::make(3, 2, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1});
  bool anchor = phi(whole) == Subgroup::whole_group();
  for (int k = 0; k < 5 && anchor; ++k) anchor = endo_dimension_finite(s.sample(whole)).is_one();
  std::string detail = std::to_string(checked) + " characters (" + std::to_string(minimal) +
                       " minimal), " + std::to_string(bad) + " mismatches; H = G anchor " +
                       (anchor ? "ok" : "FAILED");
  if (!example.empty()) detail += "; e.g. " + example;
  return {bad == 0 && anchor && minimal > 0, detail};
}

// ---- c8: conjugation orbits ------------------------------------------------

struct OrbitCheck {
  std::string name;
  int r1, r2;
  std::function<Params(const Params&, int)> claimed;
  std::function<Element(int)> conjugator;
};

const std::vector<OrbitCheck>& orbit_checks() {
  static const std::vector<OrbitCheck> checks{
      {"(1,1) E23", 1, 1,
       [](const Params& p, int t) {
         return Params::make(1, 1, {p.at("a"), p.at("d"), p.at("f"), p.at("b") + t * p.at("f"),
                                    p.at("e") - t * p.at("a")});
       },
       [](int t) { return Element::x23(t); }},
      {"(2,0) E23", 2, 0,
       [](const Params& p, int t) {
         return Params::make(2, 0, {p.at("a"), p.at("b") - p.at("a") * t, p.at("e"), p.at("f1"),
                                    p.at("b1"), p.at("e1") + p.at("f1") * t});
       },
       [](int t) { return Element::x23(t); }},
      {"(2,1) E34", 2, 1,
       [](const Params& p, int t) {
         return Params::make(2, 1, {p.at("a"), p.at("e"), p.at("d1"), p.at("e1") - p.at("d1") * t});
       },
       [](int t) { return Element::x34(t); }},
  };
  return checks;
}

// Pairs (chi1, chi2) related by the explicit conjugator; pairs whose printed
// conjugate differs from both orientations are counted and skipped.
struct OrbitResult {
  size_t tuples = 0, mismatched = 0, uncertified = 0;
  std::string example;
  std::vector<Character> pairs;
};

OrbitResult run_orbit(const OrbitCheck& ch, bool certify) {
  OrbitResult r;
  CharacterSampler s(8000 + ch.r1 * 10 + ch.r2);
  for (const auto& p : enumerate_params(ch.r1, ch.r2, "", kOrbitBox, SIZE_MAX)) {
    Subgroup h = phi(p);
    Character chi1 = s.sample(p);
    for (int t = -3; t <= 3; ++t) {
      ++r.tuples;
      Params q = ch.claimed(p, t);
      Subgroup hc = phi(q);
      Element g = ch.conjugator(t);
      std::optional<Element> via;
      if (conjugate(h, g) == hc) via = g;
      else if (conjugate(h, inv(g)) == hc) via = inv(g);
      if (!via) {
        ++r.mismatched;
        if (r.example.empty()) {
          NormalForm a = normal_form(conjugate(h, g));
          r.example = p.str() + ", t=" + std::to_string(t) + ": printed " + q.str() + ", actual " +
                      a.params.str();
        }
        continue;
      }
      Character chi2 = conjugate_character(chi1, inv(*via));
      if (certify) {
        EquivalenceResult e = equivalent(chi1, chi2, 0, {*via});
        if (e.status != Equivalence::equivalent || !certifies(chi1, chi2, *via)) ++r.uncertified;
      }
      if (t == 1) {
        r.pairs.push_back(chi1);
        r.pairs.push_back(chi2);
      }
    }
  }
  return r;
}

Outcome c8() {
  Outcome o;
  std::ostringstream os;
  for (const auto& ch : orbit_checks()) {
    OrbitResult r = run_orbit(ch, true);
    bool ok = r.mismatched == 0 && r.uncertified == 0;
    o.pass = o.pass && ok;
    os << "\n    " << ch.name << ": " << r.tuples << " (tuple, shift) pairs, " << r.mismatched
       << " printed conjugates differ from direct conjugation, " << r.uncertified
       << " not certified";
    if (!r.example.empty()) os << "; e.g. " << r.example;
  }
  o.detail = os.str();
  return o;
}

// ---- c9: rank census ---------------------------------------------------------

Outcome c9() {
  const std::set<std::pair<int, int>> allowed{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                              {1, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 2}};
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<int> ng(1, 3);
  std::map<std::pair<int, int>, size_t> seen;
  size_t bad = 0;
  for (int i = 0; i < kCensusSubgroups; ++i) {
    Subgroup h = random_subgroup(rng, 2, ng(rng));
    Ranks r = h.ranks();
    ++seen[{r.rk1, r.rk2}];
    if (!allowed.count({r.rk1, r.rk2})) ++bad;
  }
  std::ostringstream os;
  os << kCensusSubgroups << " subgroups, " << bad << " outside the list; seen";
  for (auto& [k, v] : seen) os << " (" << k.first << "," << k.second << "):" << v;
  return {bad == 0, os.str()};
}

// ---- c10: stratum totality -------------------------------------------------

// Whether a value lies in a column set that constrains values directly.
std::optional<bool> column_holds(const std::string& block, const Fiber& f, const UnitValue& v,
                                 const SymbolTable& syms) {
  ModulusClass c = v.modulus_class(syms);
  if (f.kind == "Cstar") return true;
  if (f.kind == "CstarMinusS1") return c == ModulusClass::off_circle;
  if (f.kind == "S1MinusMuInf") return c == ModulusClass::circle_nontorsion;
  if (f.kind == "CstarMinusMuInf") return c != ModulusClass::root_of_unity;
  if (f.kind == "mu_infty") return c == ModulusClass::root_of_unity;
  if (f.kind == "muN") {
    // In case (2,1) the z column is the set of solutions of z^(ad') = lambda^(-ae'),
    // a torsor under mu_(ad'), not a set of roots of unity.
    if (block.rfind("(2,1)", 0) == 0) return std::nullopt;
    return v.pow(Int(std::stol(f.args.at(0)))).is_one();
  }
  return std::nullopt;  // quotient descriptions (E, P, T, ...) and the curve
}

Outcome c10() {
  size_t total = 0, bad = 0;
  std::string example;
  auto check = [&](const Character& chi, const SymbolTable& syms) {
    Verdict v = is_irreducible(chi);
    if (!v.irreducible) return;
    ++total;
    try {
      StratumRow r1 = stratum(v, syms), r2 = stratum(v, syms);
      bool ok = r1.row >= 1 && r1.row == r2.row && r1.fibers.size() == r1.columns.size();
      // The value columns of the chosen row must contain chi's values.
      for (size_t i = 0; ok && i < r1.columns.size(); ++i) {
        if (i == 0 && r1.fibers[i].kind != "Cstar") continue;  // t-column describes a quotient
        auto h = column_holds(r1.block, r1.fibers[i], v.values.at(r1.columns[i]), syms);
        if (h && !*h) ok = false;
      }
      if (!ok) {
        ++bad;
        if (example.empty()) example = r1.block + " row " + std::to_string(r1.row) + " for " +
                                       v.nf.params.str();
      }
    } catch (const std::exception& e) {
      ++bad;
      if (example.empty()) example = v.nf.params.str() + ": " + e.what();
    }
  };
  for (auto [r1, r2] : kCases) {
    CharacterSampler s(case_seed(r1, r2));
    CasePairs cp = sample_pairs(r1, r2, case_seed(r1, r2));
    for (const auto& chi : cp.irreducible) check(chi, s.symbols());
  }
  size_t c7_count = 0;
  for_endo_characters([&](const Params&, const Character& chi, CharacterSampler& s) {
    ++c7_count;
    check(chi, s.symbols());
  });
  for (const auto& ch : orbit_checks()) {
    CharacterSampler s(0);
    for (const auto& chi : run_orbit(ch, false).pairs) check(chi, s.symbols());
  }
  // The (2,0) off-circle family.
  size_t anchor_bad = 0, anchor_total = 0;
  SymbolTable syms;
  syms.declare("lambda", SymbolClass::off_circle);
  syms.declare("t", SymbolClass::off_circle);
  syms.declare("s", SymbolClass::circle_free);
  for (const auto& p : enumerate_params(2, 0, "", 2, SIZE_MAX)) {
    ++anchor_total;
    Character chi = Character::from_generators(
        phi_generators(p), {UnitValue::symbol("t"), UnitValue::symbol("s"), UnitValue::symbol("lambda")});
    Verdict v = is_irreducible(chi);
    StratumRow r = stratum(v, syms);
    // Rows are labelled with the canonical parameters.
    const Params& q = v.nf.params;
    auto L = [](const Int& k) { return "lambda" + (k.is_one() ? std::string() : "^" + k.str()); };
    bool ok = v.irreducible && r.fibers.size() == 3 && r.fibers[0].str() == "E(" + L(q.at("f1")) + ")" &&
              r.fibers[1].str() == "E(" + L(q.at("a")) + ")" && r.fibers[2].kind == "CstarMinusS1";
    anchor_bad += !ok;
  }
  std::string detail = std::to_string(total) + " irreducible pairs (" + std::to_string(c7_count) +
                       " from the (3,2) sweep), " + std::to_string(bad) + " without a consistent row; " +
                       "(2,0) off-circle family " + std::to_string(anchor_total - anchor_bad) + "/" +
                       std::to_string(anchor_total);
  if (!example.empty()) detail += "; e.g. " + example;
  return {bad == 0 && anchor_bad == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"c5", c5},
      {"c6", c6}, {"c7", c7}, {"c8", c8}, {"c9", c9}, {"c10", c10},
  };
  std::set<std::string> want(argv + 1, argv + argc);
  bool all_pass = true;
  for (const auto& [name, fn] : all) {
    if (!want.empty() && !want.count(name)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= kLimit.at(name);
    bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("%s %s (%.1f s, limit %.0f s) %s\n", name.c_str(), pass ? "PASS" : "FAIL", secs,
                kLimit.at(name), o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
