#include "ut4/oracle.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace ut4 {

std::vector<Element> ball(int r) {
  std::vector<Element> out;
  if (r < 0) return out;
  for (int a = -r; a <= r; ++a)
    for (int d = -r; d <= r; ++d)
      for (int f = -r; f <= r; ++f)
        for (int b = -r; b <= r; ++b)
          for (int e = -r; e <= r; ++e)
            for (int c = -r; c <= r; ++c) out.push_back(Element::make(a, d, f, b, e, c));
  return out;
}

namespace {

Subgroup self_intersection(const Subgroup& h, const Element& g) {
  return intersect(h, conjugate(h, inv(g)));
}

// Visits B_r in shells of growing max-norm. With skip_center the c coordinate
// is pinned to 0.
bool for_shells(int r, bool skip_center, const std::function<bool(const Element&)>& fn) {
  for (int s = 0; s <= r; ++s) {
    const int cr = skip_center ? 0 : s;
    for (int a = -s; a <= s; ++a)
      for (int d = -s; d <= s; ++d)
        for (int f = -s; f <= s; ++f)
          for (int b = -s; b <= s; ++b)
            for (int e = -s; e <= s; ++e)
              for (int c = -cr; c <= cr; ++c) {
                int m = std::max({std::abs(a), std::abs(d), std::abs(f), std::abs(b), std::abs(e),
                                  std::abs(c)});
                if (m != s) continue;
                if (fn(Element::make(a, d, f, b, e, c))) return true;
              }
  }
  return false;
}

// Membership of g in S(H, chi), memoized on the right coset gH (the set is a
// union of double cosets).
class SChiTester {
 public:
  explicit SChiTester(const Character& chi) : chi_(chi), h_(chi.domain()), hs_(isolator(h_)) {}

  bool in_s(const Element& g) { return normalizes(g, hs_); }

  bool in_s_chi(const Element& g, SWitness* w = nullptr) {
    if (!in_s(g)) return false;
    Element key = h_.coset_rep(g);
    if (w == nullptr) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
      // Cheap rejection: small powers of H's generators that g conjugates into H.
      for (const auto& s : h_.generators())
        for (int m = 1; m <= 8; ++m) {
          Element x = pow(s, Int(m)), y = conj(x, g);
          if (h_.contains(y) && !chi_.evaluate(mul(x, inv(y))).is_one()) return memo_[key] = false;
        }
    }
    Subgroup k = self_intersection(h_, g);
    bool ok = true;
    for (const auto& x : k.generators()) {
      UnitValue u = chi_.evaluate(x), v = chi_.evaluate(conj(x, g));
      if (w) w->character_check.push_back({u, v});
      if (u != v) ok = false;
    }
    if (w) w->intersection = k;
    memo_[key] = ok;
    return ok;
  }

 private:
  const Character& chi_;
  const Subgroup& h_;
  Subgroup hs_;
  std::unordered_map<Element, bool> memo_;
};

}  // namespace

std::vector<SWitness> s_set_ball(const Subgroup& h, int r) {
  Subgroup hs = isolator(h);
  std::vector<SWitness> out;
  for (const auto& g : ball(r)) {
    if (!normalizes(g, hs)) continue;
    SWitness w;
    w.g = g;
    w.in_h = h.contains(g);
    if (!w.in_h) w.intersection = self_intersection(h, g);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<SWitness> s_set_ball_literal(const Subgroup& h, int r) {
  std::vector<SWitness> out;
  const Ranks rk = h.ranks();
  for (const auto& g : ball(r)) {
    Subgroup k = self_intersection(h, g);
    if (!(k.ranks() == rk)) continue;
    SWitness w;
    w.g = g;
    w.in_h = h.contains(g);
    if (!w.in_h) w.intersection = k;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<SWitness> s_chi_ball(const Character& chi, int r) {
  SChiTester t(chi);
  const Subgroup& h = chi.domain();
  std::vector<SWitness> out;
  for (const auto& g : ball(r)) {
    if (h.contains(g)) {
      SWitness w;
      w.g = g;
      w.in_h = true;
      out.push_back(std::move(w));
      continue;
    }
    SWitness w;
    w.g = g;
    if (t.in_s_chi(g, &w)) out.push_back(std::move(w));
  }
  return out;
}

std::optional<SWitness> s_chi_witness(const Character& chi, int r) {
  SChiTester t(chi);
  const Subgroup& h = chi.domain();
  // With Z in H, membership is constant on gZ and g in H iff gC^k in H.
  const bool skip_center = h.contains_center();
  std::optional<SWitness> found;
  for_shells(r, skip_center, [&](const Element& g) {
    if (h.contains(g) || !t.in_s_chi(g)) return false;
    SWitness w;
    w.g = g;
    t.in_s_chi(g, &w);
    found = std::move(w);
    return true;
  });
  return found;
}

Int endo_dimension_finite(const Character& chi) {
  const Subgroup& h = chi.domain();
  const Ranks rk = h.ranks();
  if (!(rk.rk1 == 3 && rk.rk2 == 2 && rk.rk3 == 1)) throw std::invalid_argument("infinite index");
  const Int idx = index(Subgroup::whole_group(), h);
  // Level-wise transversal: coordinates inside the HNF diagonals.
  const IntMat &l1 = h.level1(), &l2 = h.level2();
  std::vector<Element> reps;
  std::unordered_map<Element, size_t> id;
  for (Int x1 = 0; x1 < l1[0][0]; x1 += 1)
    for (Int x2 = 0; x2 < l1[1][1]; x2 += 1)
      for (Int x3 = 0; x3 < l1[2][2]; x3 += 1)
        for (Int y1 = 0; y1 < l2[0][0]; y1 += 1)
          for (Int y2 = 0; y2 < l2[1][1]; y2 += 1)
            for (Int z = 0; z < h.center_index(); z += 1) {
              Element t = h.coset_rep(Element{x1, x2, x3, y1, y2, z});
              if (id.emplace(t, reps.size()).second) reps.push_back(t);
            }
  if (Int(static_cast<long>(reps.size())) != idx)
    throw std::logic_error("transversal size " + std::to_string(reps.size()) + " != index " +
                           idx.str());
  // Orbits of H acting on G/H from the left are the double cosets.
  std::vector<size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto gens = h.generators();
  for (size_t i = 0; i < reps.size(); ++i)
    for (const auto& s : gens) {
      auto it = id.find(h.coset_rep(mul(s, reps[i])));
      if (it == id.end()) throw std::logic_error("coset representative outside the transversal");
      parent[find(i)] = find(it->second);
    }
  SChiTester t(chi);
  Int count = 0;
  for (size_t i = 0; i < reps.size(); ++i)
    if (find(i) == i && t.in_s_chi(reps[i])) count += 1;
  return count;
}

namespace {

// Exponents over phi's generators of an element of H, modulo [H,H].
std::vector<Factor> phi_exponents(const Subgroup& h, const std::vector<IntVec>& words,
                                  const Element& x) {
  IntVec ex;
  if (!h.sift(x, ex)) throw std::logic_error("element outside H: " + x.str());
  size_t n = words.empty() ? 0 : words[0].size();
  std::vector<Int> acc(n, Int(0));
  for (size_t i = 0; i < ex.size(); ++i)
    for (size_t j = 0; j < n; ++j) acc[j] += ex[i] * words[i][j];
  std::vector<Factor> out;
  for (size_t j = 0; j < n; ++j)
    if (!acc[j].is_zero()) out.push_back({j, to_mpq(acc[j])});
  return out;
}

bool word_of_factors(const std::vector<Element>& gens, const std::vector<Factor>& f, Element& out) {
  out = Element::identity();
  for (const auto& x : f) {
    if (x.exp.get_den() != 1) return false;
    out = mul(out, pow(gens[x.gen], Int(mpz_class(x.exp.get_num()))));
  }
  return true;
}

bool in_center_multiple(const Element& x, const Int& n) {
  return x.in_center() && divides(n, x.c);
}

}  // namespace

VerifyReport verify_case(const CaseId& id, int box, Reading reading, size_t max_listed) {
  VerifyReport rep;
  rep.id = id;
  rep.box = box;
  rep.reading = reading;
  const auto& names = value_names(id.rk1, id.rk2);
  auto note = [&](const Params& p, const char* kind, std::string what, std::string disp,
                  std::string act) {
    if (rep.discrepancies.size() < max_listed)
      rep.discrepancies.push_back({p, kind, std::move(what), std::move(disp), std::move(act)});
  };
  for (const auto& p : enumerate_params(id.rk1, id.rk2, id.subset, box,
                                        std::numeric_limits<size_t>::max(), reading)) {
    ++rep.params_checked;
    const auto gens = phi_generators(p);
    std::vector<IntVec> words;
    Subgroup h = Subgroup::generate_tracked(gens, words);
    Subgroup dh = derived_subgroup(h);
    const size_t ctr = gens.size() - 1;

    std::vector<NormalizerGen> ngens;
    try {
      ngens = normalizer_generators(id, p);
    } catch (const PreconditionError& e) {
      ++rep.normalize_failures;
      note(p, "normalizes", "generators", e.what(), "undefined");
      continue;
    }
    for (const auto& g : ngens) {
      if (!normalizes(g.g, h)) {
        ++rep.normalize_failures;
        note(p, "normalizes", g.name + " = " + g.g.str(), "normalizes H", "does not");
        continue;
      }
      if (!g.displayed) continue;
      for (size_t t = 0; t < ctr; ++t) {
        std::vector<Factor> shown;
        for (const auto& d : g.displays)
          if (d.target == t) shown = d.factors;
        ++rep.action_checks;
        Element k = mul(conj(gens[t], g.g), inv(gens[t]));
        Element m;
        bool integral = word_of_factors(gens, shown, m);
        if (integral && dh.contains(mul(k, inv(m)))) continue;
        ++rep.action_discrepancies;
        Element kop = mul(conj(gens[t], inv(g.g)), inv(gens[t]));
        if (integral && dh.contains(mul(kop, inv(m)))) ++rep.opposite_orientation_matches;
        note(p, "action", g.name + " on " + names[t], monomial_str(names, shown),
             monomial_str(names, phi_exponents(h, words, k)));
      }
    }

    const auto comms = commutator_displays(id, p);
    Int n = 0;
    for (const auto& c : comms) {
      bool central = true;
      for (const auto& f : c.factors) central = central && f.gen == ctr;
      if (central)
        for (const auto& f : c.factors) n = gcd(n, Int(mpz_class(f.exp.get_num())));
    }
    for (const auto& c : comms) {
      ++rep.commutator_checks;
      Element k = comm(gens[c.i], gens[c.j]);
      Element m;
      bool central = true;
      for (const auto& f : c.factors) central = central && f.gen == ctr;
      bool ok = word_of_factors(gens, c.factors, m);
      if (ok) {
        if (central)
          ok = k == m || k == inv(m);
        else
          ok = in_center_multiple(mul(k, inv(m)), n) || in_center_multiple(mul(k, m), n);
      }
      if (ok) continue;
      ++rep.commutator_discrepancies;
      note(p, "commutator", "[" + names[c.i] + ", " + names[c.j] + "]",
           monomial_str(names, c.factors), monomial_str(names, phi_exponents(h, words, k)));
    }
  }
  return rep;
}

}  // namespace ut4
