#include <algorithm>
#include <functional>
#include <set>

#include "ut4/classification.hpp"

namespace ut4 {

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::not_equivalent: return "not equivalent (proved)";
    case Equivalence::unknown: return "not equivalent within radius";
  }
  return "?";
}

namespace {

bool same_level_lattices(const Subgroup& x, const Subgroup& y) {
  return x.level1() == y.level1() && x.level2() == y.level2() &&
         x.center_index() == y.center_index();
}

// chi1 = chi2^g on H1 ∩ g^-1 H2 g, given that the isolators already match.
bool characters_match(const Character& c1, const Character& c2, const Element& g) {
  Subgroup k = intersect(c1.domain(), conjugate(c2.domain(), inv(g)));
  for (const auto& x : k.generators())
    if (c1.evaluate(x) != c2.evaluate(conj(x, g))) return false;
  return true;
}

}  // namespace

bool certifies(const Character& c1, const Character& c2, const Element& g) {
  if (conjugate(isolator(c2.domain()), inv(g)) != isolator(c1.domain())) return false;
  return characters_match(c1, c2, g);
}

EquivalenceResult equivalent(const Character& c1, const Character& c2, int radius,
                             const std::vector<Element>& hints) {
  EquivalenceResult out;
  const Subgroup &h1 = c1.domain(), &h2 = c2.domain();
  if (h1 == h2 && c1.values() == c2.values()) {
    out.status = Equivalence::equivalent;
    out.g = Element::identity();
    out.reason = "identical pairs";
    return out;
  }
  if (!(h1.ranks() == h2.ranks())) {
    out.status = Equivalence::not_equivalent;
    out.reason = "rank signatures differ";
    return out;
  }
  // Level lattices are invariant under conjugation.
  Subgroup s1 = isolator(h1), s2 = isolator(h2);
  if (!same_level_lattices(s1, s2)) {
    out.status = Equivalence::not_equivalent;
    out.reason = "isolator level lattices differ";
    return out;
  }
  const Element c = Element::x14();
  if (h1.contains(c) && h2.contains(c) && c1.evaluate(c) != c2.evaluate(c)) {
    out.status = Equivalence::not_equivalent;
    out.reason = "values on the center differ";
    return out;
  }
  auto try_g = [&](const Element& g) {
    if (conjugate(s2, inv(g)) != s1 || !characters_match(c1, c2, g)) return false;
    out.status = Equivalence::equivalent;
    out.g = g;
    out.reason = "certificate found";
    return true;
  };
  for (const auto& g : hints)
    if (try_g(g)) return out;
  // Central elements act trivially, so the c coordinate is skipped. Shells of
  // growing max-norm keep the certificate small.
  for (int r = 0; r <= radius; ++r) {
    for (int a = -r; a <= r; ++a)
      for (int d = -r; d <= r; ++d)
        for (int f = -r; f <= r; ++f)
          for (int b = -r; b <= r; ++b)
            for (int e = -r; e <= r; ++e) {
              if (std::max({std::abs(a), std::abs(d), std::abs(f), std::abs(b), std::abs(e)}) != r)
                continue;
              if (try_g(Element::make(a, d, f, b, e, 0))) return out;
            }
  }
  out.status = Equivalence::unknown;
  out.reason = "no certificate in the ball of radius " + std::to_string(radius);
  return out;
}

std::vector<Character> extensions(const Character& chi_on_k, const Subgroup& h) {
  const Subgroup& k = chi_on_k.domain();
  if (!h.contains_subgroup(k)) throw std::invalid_argument("extensions: K is not contained in H");
  if (index(h, k).is_zero()) throw std::invalid_argument("extensions: infinite index");
  const auto hg = h.generators();
  const size_t m = hg.size();
  // prod x^row = target, one row per generator of K and per commutator of H's generators.
  IntMat rows;
  std::vector<UnitValue> target;
  for (const auto& g : k.generators()) {
    IntVec ex;
    h.sift(g, ex);
    rows.push_back(ex);
    target.push_back(chi_on_k.evaluate(g));
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      IntVec ex;
      h.sift(comm(hg[i], hg[j]), ex);
      rows.push_back(ex);
      target.push_back(UnitValue());
    }
  const size_t n = rows.size();
  Smith s = smith(rows, n, m);
  // y_l^{d_l} = prod_i t_i^{P_li}, x = Q y.
  std::vector<UnitValue> rhs(n);
  for (size_t l = 0; l < n; ++l) rhs[l] = product(target, s.P[l]);
  size_t rank = 0;
  while (rank < std::min(n, m) && !s.D[rank][rank].is_zero()) ++rank;
  if (rank < m) throw std::logic_error("extensions: underdetermined system");
  for (size_t l = rank; l < n; ++l)
    if (!rhs[l].is_one()) return {};
  std::vector<Int> deg(m);
  std::vector<UnitValue> base(m);
  for (size_t l = 0; l < m; ++l) {
    deg[l] = abs(s.D[l][l]);
    UnitValue r = rhs[l];
    if (s.D[l][l].sign() < 0) r = r.inverse();
    base[l] = r.pow(mpq_class(1, deg[l].mpz()));
  }
  std::vector<Character> out;
  std::vector<Int> pick(m, Int(0));
  while (true) {
    std::vector<UnitValue> y(m);
    for (size_t l = 0; l < m; ++l)
      y[l] = base[l] * UnitValue::root(mpq_class(pick[l].mpz(), deg[l].mpz()));
    std::vector<UnitValue> x(m);
    for (size_t i = 0; i < m; ++i) x[i] = product(y, s.Q[i]);
    out.push_back(Character::from_canonical(h, x));
    size_t l = 0;
    while (l < m && pick[l] + 1 == deg[l]) pick[l] = 0, ++l;
    if (l == m) break;
    pick[l] += 1;
  }
  return out;
}

namespace {

// HNF matrices (upper triangular, 0 <= off-diagonal < pivot below) of determinant n.
void hnf_of_det(size_t r, const Int& n, std::vector<IntMat>& out) {
  // Diagonals with product n.
  std::vector<std::vector<Int>> diags;
  std::vector<Int> cur;
  std::function<void(size_t, Int)> rec = [&](size_t i, Int rest) {
    if (i + 1 == r) {
      cur.push_back(rest);
      diags.push_back(cur);
      cur.pop_back();
      return;
    }
    for (Int d = 1; d <= rest; d += 1)
      if (divides(d, rest)) {
        cur.push_back(d);
        rec(i + 1, exact_div(rest, d));
        cur.pop_back();
      }
  };
  if (r == 0) {
    if (n.is_one()) out.push_back({});
    return;
  }
  rec(0, n);
  for (const auto& dg : diags) {
    // Free entries (i, j), i < j, range over [0, dg[j]).
    std::vector<std::pair<size_t, size_t>> slots;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j) slots.push_back({i, j});
    std::vector<Int> v(slots.size(), Int(0));
    while (true) {
      IntMat mtx(r, IntVec(r, Int(0)));
      for (size_t i = 0; i < r; ++i) mtx[i][i] = dg[i];
      for (size_t s = 0; s < slots.size(); ++s) mtx[slots[s].first][slots[s].second] = v[s];
      out.push_back(mtx);
      size_t s = 0;
      while (s < slots.size() && v[s] + 1 == dg[slots[s].second]) v[s] = 0, ++s;
      if (s == slots.size()) break;
      v[s] += 1;
    }
  }
}

// Element of hs with the given level-1 coordinates (in hs's level-1 basis) and
// level-2 coordinates (in hs's level-2 basis).
Element word_of(const Subgroup& hs, const IntVec& c1, const IntVec& c2) {
  IntVec ex(hs.num_generators(), Int(0));
  for (size_t i = 0; i < c1.size(); ++i) ex[i] = c1[i];
  for (size_t i = 0; i < c2.size(); ++i) ex[c1.size() + i] = c2[i];
  return hs.word(ex);
}

}  // namespace

std::vector<FEquivalent> f_equivalents(const Character& chi, size_t limit) {
  const Subgroup& h = chi.domain();
  NormalForm nf = normal_form(h);
  Subgroup hs = isolator(h);
  Int dtot = index(hs, h);
  std::vector<FEquivalent> out;
  if (dtot.is_one()) return out;
  const size_t r1 = hs.level1().size(), r2 = hs.level2().size();
  std::set<std::string> seen;
  for (Int d1 = 1; d1 <= dtot; d1 += 1) {
    if (!divides(d1, dtot)) continue;
    Int d2 = exact_div(dtot, d1);
    std::vector<IntMat> u1s, u2s;
    hnf_of_det(r1, d1, u1s);
    hnf_of_det(r2, d2, u2s);
    for (const auto& u2 : u2s) {
      // Residues of L2(H*) modulo the new level-2 lattice: a box in the HNF diagonal.
      std::vector<IntVec> res{IntVec{}};
      for (size_t j = 0; j < r2; ++j) {
        std::vector<IntVec> nx;
        for (const auto& p : res)
          for (Int t = 0; t < u2[j][j]; t += 1) {
            IntVec q = p;
            q.push_back(t);
            nx.push_back(q);
          }
        res = std::move(nx);
      }
      for (const auto& u1 : u1s) {
        // Choose a level-2 residue per level-1 row.
        std::vector<size_t> pick(r1, 0);
        while (true) {
          std::vector<Element> gens;
          for (size_t i = 0; i < r1; ++i) gens.push_back(word_of(hs, u1[i], res[pick[i]]));
          for (size_t j = 0; j < r2; ++j) gens.push_back(word_of(hs, IntVec(r1, Int(0)), u2[j]));
          gens.push_back(Element::x14());
          Subgroup cand = Subgroup::generate(gens);
          bool ok = cand != h && cand.ranks() == h.ranks() && index(hs, cand) == dtot &&
                    isolator(cand) == hs && seen.insert(cand.str()).second;
          if (ok) {
            NormalForm cnf;
            bool shaped = true;
            try {
              cnf = normal_form(cand);
            } catch (const StructureError&) {
              shaped = false;
            }
            if (shaped && cnf.id.rk1 == nf.id.rk1 && cnf.id.rk2 == nf.id.rk2) {
              Subgroup k = intersect(h, cand);
              for (auto& ext : extensions(restrict(chi, k), cand)) {
                Verdict v = is_irreducible(ext);
                if (!v.irreducible) continue;
                out.push_back({cnf, std::move(ext)});
                if (out.size() >= limit) return out;
              }
            }
          }
          size_t i = 0;
          while (i < r1 && pick[i] + 1 == res.size()) pick[i] = 0, ++i;
          if (i == r1) break;
          ++pick[i];
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FEquivalent& x, const FEquivalent& y) { return x.nf.params < y.nf.params; });
  return out;
}

}  // namespace ut4
