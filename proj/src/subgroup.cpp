#include "ut4/subgroup.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ut4 {

struct Subgroup::Item {
  Element x;
  IntVec w;  // empty when words are not tracked
};

namespace {


IntVec image(int level, const Element& x) {
  if (level == 1) return {x.a, x.d, x.f};
  return {x.b, x.e};
}

void add_scaled(IntVec& dst, const IntVec& src, const Int& k) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += k * src[i];
}

}  // namespace

namespace {

struct Tracked {
  Element x;
  IntVec w;
};

Tracked tmul(const Tracked& p, const Tracked& q) {
  Tracked r{mul(p.x, q.x), p.w};
  if (!r.w.empty()) add_scaled(r.w, q.w, 1);
  return r;
}

Tracked tpow(const Tracked& p, const Int& k) {
  Tracked r{pow(p.x, k), p.w};
  for (auto& v : r.w) v *= k;
  return r;
}

Tracked tcomm(const Tracked& p, const Tracked& q) {
  return {comm(p.x, q.x), IntVec(p.w.size(), Int(0))};
}

// Echelonize the images at one level; elements whose image vanishes go to rest.
void echelon(std::vector<Tracked>& in, int level, std::vector<Tracked>& tails, IntMat& rows,
             std::vector<size_t>& piv, std::vector<Tracked>& rest) {
  const size_t dim = level == 1 ? 3 : 2;
  std::vector<Tracked> work;
  for (auto& t : in) {
    IntVec v = image(level, t.x);
    bool zero = true;
    for (auto& c : v) zero = zero && c.is_zero();
    (zero ? rest : work).push_back(std::move(t));
  }
  size_t top = 0;
  for (size_t col = 0; col < dim && top < work.size(); ++col) {
    while (true) {
      size_t best = work.size();
      for (size_t i = top; i < work.size(); ++i) {
        Int v = image(level, work[i].x)[col];
        if (!v.is_zero() && (best == work.size() || abs(v) < abs(image(level, work[best].x)[col])))
          best = i;
      }
      if (best == work.size()) break;
      std::swap(work[top], work[best]);
      const Int pv = image(level, work[top].x)[col];
      bool done = true;
      for (size_t i = top + 1; i < work.size(); ++i) {
        Int v = image(level, work[i].x)[col];
        if (v.is_zero()) continue;
        Int q = trunc_div(v, pv);
        work[i] = tmul(work[i], tpow(work[top], -q));
        if (!image(level, work[i].x)[col].is_zero()) done = false;
      }
      if (done) break;
    }
    if (top >= work.size() || image(level, work[top].x)[col].is_zero()) continue;
    if (image(level, work[top].x)[col].sign() < 0) work[top] = tpow(work[top], -1);
    const Int pv = image(level, work[top].x)[col];
    for (size_t i = 0; i < top; ++i) {
      Int q = floor_div(image(level, work[i].x)[col], pv);
      if (!q.is_zero()) work[i] = tmul(work[i], tpow(work[top], -q));
    }
    piv.push_back(col);
    ++top;
  }
  for (size_t i = 0; i < work.size(); ++i) {
    if (i < top) {
      rows.push_back(image(level, work[i].x));
      tails.push_back(std::move(work[i]));
    } else {
      rest.push_back(std::move(work[i]));
    }
  }
}

}  // namespace

Subgroup Subgroup::build(std::vector<Item> items, std::vector<IntVec>* words, size_t nin) {
  (void)nin;
  std::vector<Tracked> pool1, pool2, pool3, t1, t2;
  for (auto& it : items) pool1.push_back({std::move(it.x), std::move(it.w)});
  const size_t wl = pool1.empty() ? 0 : pool1[0].w.size();

  Subgroup h;
  echelon(pool1, 1, t1, h.l1_, h.piv1_, pool2);
  for (size_t i = 0; i < t1.size(); ++i)
    for (size_t j = i + 1; j < t1.size(); ++j) pool2.push_back(tcomm(t1[i], t1[j]));
  echelon(pool2, 2, t2, h.l2_, h.piv2_, pool3);
  for (auto& p : t1)
    for (auto& q : t2) pool3.push_back(tcomm(p, q));

  bool have = false;
  Tracked cm{Element::identity(), IntVec(wl, Int(0))};
  for (auto& p : pool3) {
    if (p.x.c.is_zero()) continue;
    if (!have) {
      cm = p;
      have = true;
      continue;
    }
    Int g, s, t;
    ext_gcd(cm.x.c, p.x.c, g, s, t);
    cm = tmul(tpow(cm, s), tpow(p, t));
  }
  if (have && cm.x.c.sign() < 0) cm = tpow(cm, -1);
  h.m_ = have ? cm.x.c : Int(0);

  auto reduce_c = [&](Tracked& t) {
    if (h.m_.is_zero()) return;
    Int q = floor_div(t.x.c, h.m_);
    if (!q.is_zero()) t = tmul(t, tpow(cm, -q));
  };
  for (auto& u : t2) reduce_c(u);
  for (auto& t : t1) {
    for (size_t j = 0; j < t2.size(); ++j) {
      const size_t p = h.piv2_[j];
      Int q = floor_div(image(2, t.x)[p], h.l2_[j][p]);
      if (!q.is_zero()) t = tmul(t, tpow(t2[j], -q));
    }
    reduce_c(t);
  }

  for (auto& t : t1) h.t1_.push_back(t.x);
  for (auto& u : t2) h.t2_.push_back(u.x);
  if (words) {
    words->clear();
    for (auto& t : t1) words->push_back(t.w);
    for (auto& u : t2) words->push_back(u.w);
    if (!h.m_.is_zero()) words->push_back(cm.w);
  }
  return h;
}

Subgroup Subgroup::generate(const std::vector<Element>& gens) {
  std::vector<Item> items;
  for (const auto& g : gens) items.push_back({g, {}});
  return build(std::move(items), nullptr, gens.size());
}

Subgroup Subgroup::generate_tracked(const std::vector<Element>& gens, std::vector<IntVec>& words) {
  std::vector<Item> items;
  for (size_t i = 0; i < gens.size(); ++i) {
    IntVec w(gens.size(), Int(0));
    w[i] = 1;
    items.push_back({gens[i], std::move(w)});
  }
  return build(std::move(items), &words, gens.size());
}

Subgroup Subgroup::whole_group() {
  return generate({Element::x12(), Element::x23(), Element::x34()});
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> g = t1_;
  g.insert(g.end(), t2_.begin(), t2_.end());
  if (!m_.is_zero()) g.push_back(Element::x14(m_));
  return g;
}

bool Subgroup::sift(const Element& x, IntVec& exps) const {
  exps.assign(num_generators(), Int(0));
  Element y = x;
  for (size_t i = 0; i < t1_.size(); ++i) {
    const size_t p = piv1_[i];
    const Int& v = p == 0 ? y.a : (p == 1 ? y.d : y.f);
    if (!divides(l1_[i][p], v)) return false;
    Int q = exact_div(v, l1_[i][p]);
    exps[i] = q;
    if (!q.is_zero()) y = mul(pow(t1_[i], -q), y);
  }
  if (!y.in_derived()) return false;
  for (size_t j = 0; j < t2_.size(); ++j) {
    const size_t p = piv2_[j];
    const Int& v = p == 0 ? y.b : y.e;
    if (!divides(l2_[j][p], v)) return false;
    Int q = exact_div(v, l2_[j][p]);
    exps[t1_.size() + j] = q;
    if (!q.is_zero()) y = mul(pow(t2_[j], -q), y);
  }
  if (!y.b.is_zero() || !y.e.is_zero()) return false;
  if (m_.is_zero()) return y.c.is_zero();
  if (!divides(m_, y.c)) return false;
  exps.back() = exact_div(y.c, m_);
  return true;
}

bool Subgroup::contains(const Element& x) const {
  IntVec e;
  return sift(x, e);
}

Element Subgroup::word(const IntVec& exps) const {
  std::vector<Element> g = generators();
  Element r = Element::identity();
  for (size_t i = 0; i < g.size(); ++i)
    if (!exps[i].is_zero()) r = mul(r, pow(g[i], exps[i]));
  return r;
}

Element Subgroup::coset_rep(const Element& g) const {
  Element y = g;
  for (size_t i = 0; i < t1_.size(); ++i) {
    const size_t p = piv1_[i];
    const Int& v = p == 0 ? y.a : (p == 1 ? y.d : y.f);
    Int q = floor_div(v, l1_[i][p]);
    if (!q.is_zero()) y = mul(y, pow(t1_[i], -q));
  }
  for (size_t j = 0; j < t2_.size(); ++j) {
    const size_t p = piv2_[j];
    const Int& v = p == 0 ? y.b : y.e;
    Int q = floor_div(v, l2_[j][p]);
    if (!q.is_zero()) y = mul(y, pow(t2_[j], -q));
  }
  if (!m_.is_zero()) y.c = floor_mod(y.c, m_);
  return y;
}

bool Subgroup::contains_subgroup(const Subgroup& k) const {
  for (const auto& g : k.generators())
    if (!contains(g)) return false;
  return true;
}

std::string Subgroup::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& g : generators()) {
    os << (first ? "" : ", ") << g.str();
    first = false;
  }
  os << "}";
  return os.str();
}

bool operator==(const Subgroup& x, const Subgroup& y) {
  return x.l1_ == y.l1_ && x.t1_ == y.t1_ && x.l2_ == y.l2_ && x.t2_ == y.t2_ && x.m_ == y.m_;
}

Subgroup conjugate(const Subgroup& h, const Element& g) {
  std::vector<Element> gens;
  for (const auto& x : h.generators()) gens.push_back(conj(x, g));
  return Subgroup::generate(gens);
}

bool normalizes(const Element& g, const Subgroup& h) {
  Element gi = inv(g);
  for (const auto& x : h.generators()) {
    if (!h.contains(mul(mul(g, x), gi))) return false;
    if (!h.contains(mul(mul(gi, x), g))) return false;
  }
  return true;
}

Subgroup hom_kernel(const Subgroup& k, const std::vector<IntVec>& values, const IntMat& relations,
                    size_t dim) {
  const std::vector<Element> gens = k.generators();
  const size_t n = gens.size();
  std::vector<Element> out;
  if (n == 0) return Subgroup::generate({});
  if (dim == 0) return k;
  IntMat m = values;
  m.insert(m.end(), relations.begin(), relations.end());
  for (const auto& x : left_kernel(m, dim)) {
    IntVec ex(x.begin(), x.begin() + static_cast<long>(n));
    out.push_back(k.word(ex));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Element c = comm(gens[i], gens[j]);
      if (c.is_identity()) continue;
      out.push_back(c);
      for (size_t l = 0; l < n; ++l) out.push_back(comm(gens[l], c));
    }
  return Subgroup::generate(out);
}

namespace {

// Element of H with the given level-1 image (which must lie in the level-1 lattice).
Element lift(const Subgroup& h, const IntVec& v) {
  IntVec coords;
  if (!lattice_coords(h.level1(), h.pivots1(), v, coords))
    throw std::logic_error("lift: vector outside level-1 lattice");
  Element r = Element::identity();
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) r = mul(r, pow(h.tails1()[i], coords[i]));
  return r;
}

// x = h * C^c with h in H, for x in H*Z(G)... returns false if x is not in H Z(G).
bool sift_to_center(const Subgroup& h, const Element& x, Int& c) {
  Element y = x;
  for (size_t i = 0; i < h.tails1().size(); ++i) {
    const size_t p = h.pivots1()[i];
    const Int& v = p == 0 ? y.a : (p == 1 ? y.d : y.f);
    if (!divides(h.level1()[i][p], v)) return false;
    Int q = exact_div(v, h.level1()[i][p]);
    if (!q.is_zero()) y = mul(pow(h.tails1()[i], -q), y);
  }
  if (!y.in_derived()) return false;
  for (size_t j = 0; j < h.tails2().size(); ++j) {
    const size_t p = h.pivots2()[j];
    const Int& v = p == 0 ? y.b : y.e;
    if (!divides(h.level2()[j][p], v)) return false;
    Int q = exact_div(v, h.level2()[j][p]);
    if (!q.is_zero()) y = mul(pow(h.tails2()[j], -q), y);
  }
  if (!y.b.is_zero() || !y.e.is_zero()) return false;
  c = y.c;
  return true;
}

}  // namespace

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  IntMat m1 = lattice_intersection(h.level1(), k.level1(), 3);
  std::vector<Element> g1;
  for (const auto& v : m1) g1.push_back({v[0], v[1], v[2], 0, 0, 0});
  g1.push_back(Element::x13());
  g1.push_back(Element::x24());
  g1.push_back(Element::x14());
  Subgroup k1 = Subgroup::generate(g1);

  // Level 2: x = h u with h in H, u in [G,G]; record u mod level2(H), same for K.
  std::vector<IntVec> vals;
  for (const auto& g : k1.generators()) {
    IntVec row;
    for (const Subgroup* s : {&h, &k}) {
      Element u = mul(inv(lift(*s, {g.a, g.d, g.f})), g);
      row.push_back(u.b);
      row.push_back(u.e);
    }
    vals.push_back(std::move(row));
  }
  IntMat rel;
  for (const auto& r : h.level2()) rel.push_back({r[0], r[1], 0, 0});
  for (const auto& r : k.level2()) rel.push_back({0, 0, r[0], r[1]});
  Subgroup k2 = hom_kernel(k1, vals, rel, 4);

  // Level 3: x = h C^c with h in H; record c mod m(H), same for K.
  vals.clear();
  for (const auto& g : k2.generators()) {
    IntVec row;
    for (const Subgroup* s : {&h, &k}) {
      Int c;
      if (!sift_to_center(*s, g, c)) throw std::logic_error("intersect: level-3 sift failed");
      row.push_back(c);
    }
    vals.push_back(std::move(row));
  }
  rel.clear();
  if (!h.center_index().is_zero()) rel.push_back({h.center_index(), 0});
  if (!k.center_index().is_zero()) rel.push_back({0, k.center_index()});
  return hom_kernel(k2, vals, rel, 2);
}

Int index(const Subgroup& h, const Subgroup& k) {
  if (!h.contains_subgroup(k)) throw std::invalid_argument("index: not a subgroup");
  if (!(h.ranks() == k.ranks())) return 0;
  Int r = lattice_index(h.level1(), k.level1(), 3) * lattice_index(h.level2(), k.level2(), 2);
  if (!h.center_index().is_zero()) r *= exact_div(k.center_index(), h.center_index());
  return r;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const std::vector<Element> g = h.generators();
  std::vector<Element> out;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      Element c = comm(g[i], g[j]);
      out.push_back(c);
      for (const auto& k : g) out.push_back(comm(k, c));
    }
  return Subgroup::generate(out);
}

Subgroup centralizer(const Subgroup& h) {
  const std::vector<Element> gens = h.generators();
  // Level-1 condition: the (1,3) and (2,4) entries of [g, x] vanish.
  IntMat a(3);
  for (const auto& x : gens) {
    // (1,3): a_g d_x - a_x d_g ; (2,4): d_g f_x - d_x f_g
    a[0].push_back(x.d);
    a[1].push_back(-x.a);
    a[2].push_back(Int(0));
    a[0].push_back(Int(0));
    a[1].push_back(x.f);
    a[2].push_back(-x.d);
  }
  IntMat m1;
  if (gens.empty()) m1 = identity_matrix(3);
  else m1 = left_kernel(a, 2 * gens.size());
  std::vector<Element> g1;
  for (const auto& v : m1) g1.push_back({v[0], v[1], v[2], 0, 0, 0});
  g1.push_back(Element::x13());
  g1.push_back(Element::x24());
  g1.push_back(Element::x14());
  Subgroup p = Subgroup::generate(g1);
  if (gens.empty()) return p;
  std::vector<IntVec> vals;
  for (const auto& g : p.generators()) {
    IntVec row;
    for (const auto& x : gens) row.push_back(comm(g, x).c);
    vals.push_back(std::move(row));
  }
  return hom_kernel(p, vals, {}, gens.size());
}

namespace {

using Q6 = std::array<mpq_class, 6>;  // a d f b e c

// The unique k-th root of h in UT(4,Q).
Q6 rational_root(const Element& h, const Int& k) {
  mpq_class kk = to_mpq(k), k2 = to_mpq(binom2(k)), k3 = to_mpq(binom3(k));
  Q6 r;
  r[0] = to_mpq(h.a) / kk;
  r[1] = to_mpq(h.d) / kk;
  r[2] = to_mpq(h.f) / kk;
  r[3] = (to_mpq(h.b) - k2 * r[0] * r[1]) / kk;
  r[4] = (to_mpq(h.e) - k2 * r[1] * r[2]) / kk;
  r[5] = (to_mpq(h.c) - k2 * (r[0] * r[4] + r[3] * r[2]) - k3 * r[0] * r[1] * r[2]) / kk;
  for (auto& q : r) q.canonicalize();
  return r;
}

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

IntMat inverse_unimodular(const IntMat& q, size_t n) {
  RowEchelon e = hnf(q, n, true);
  return e.U;
}

}  // namespace

Subgroup isolator(const Subgroup& h) {
  std::vector<Element> gens = h.generators();

  // Level >= 2 part: Q-span of H ∩ [G,G] intersected with Z^3, in (b,e,c).
  IntMat w;
  for (const auto& u : h.tails2()) w.push_back({u.b, u.e, u.c});
  if (!h.center_index().is_zero()) w.push_back({0, 0, h.center_index()});
  IntMat wsat = w.empty() ? IntMat{} : saturation(w, 3);
  for (const auto& v : wsat) gens.push_back({0, 0, 0, v[0], v[1], v[2]});

  const IntMat& l1 = h.level1();
  if (!l1.empty()) {
    IntMat s = saturation(l1, 3);
    RowEchelon se = hnf(s, 3);
    const size_t r = se.rank;
    IntMat cm;
    for (const auto& row : l1) {
      IntVec c;
      if (!lattice_coords(s, se.pivots, row, c)) throw std::logic_error("isolator: saturation");
      cm.push_back(c);
    }
    Smith sm = smith(cm, r, r);
    IntMat qinv = inverse_unimodular(sm.Q, r);
    Int expo = 1;
    for (const auto& d : sm.diag) expo = lcm(expo, d);
    // Enumerate residues y' with 0 <= y'_i < d_i.
    std::vector<Int> yp(r, Int(0));
    while (true) {
      bool nonzero = false;
      for (const auto& y : yp) nonzero = nonzero || !y.is_zero();
      if (nonzero) {
        IntVec y(r, Int(0));
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) y[j] += yp[i] * qinv[i][j];
        IntVec v(3, Int(0));
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < 3; ++j) v[j] += y[i] * s[i][j];
        IntVec kv = {v[0] * expo, v[1] * expo, v[2] * expo};
        Element hk = lift(h, kv);
        Q6 x0 = rational_root(hk, expo);
        // Need u = (beta, eps, gamma) in Q-span(wsat) with x0*u integral:
        //   b0+beta, e0+eps, c0+gamma+a*eps in Z.
        const size_t wd = wsat.size();
        IntMat mp;
        for (const auto& row : wsat) mp.push_back({row[0], row[1], row[2] + v[0] * row[1]});
        std::vector<mpq_class> rr = {x0[3], x0[4], x0[5]};
        std::vector<mpq_class> theta(wd, mpq_class(0));
        bool ok = true;
        if (wd == 0) {
          for (auto& q : rr) ok = ok && is_integral(q);
        } else {
          Smith ms = smith(mp, wd, 3);
          // s = -r Q
          std::vector<mpq_class> sv(3, mpq_class(0));
          for (size_t j = 0; j < 3; ++j)
            for (size_t i = 0; i < 3; ++i) sv[j] -= rr[i] * to_mpq(ms.Q[i][j]);
          std::vector<mpq_class> phi(wd, mpq_class(0));
          for (size_t i = 0; i < 3 && ok; ++i) {
            Int di = i < ms.diag.size() ? ms.diag[i] : Int(0);
            if (i < wd && !di.is_zero()) {
              phi[i] = sv[i] / to_mpq(di);
            } else {
              sv[i].canonicalize();
              ok = is_integral(sv[i]);
            }
          }
          if (ok)
            for (size_t j = 0; j < wd; ++j)
              for (size_t i = 0; i < wd; ++i) theta[j] += phi[i] * to_mpq(ms.P[i][j]);
        }
        if (ok) {
          std::vector<mpq_class> u(3, mpq_class(0));
          for (size_t i = 0; i < wd; ++i)
            for (size_t j = 0; j < 3; ++j) u[j] += theta[i] * to_mpq(wsat[i][j]);
          mpq_class b = x0[3] + u[0], e = x0[4] + u[1], c = x0[5] + u[2] + x0[0] * u[1];
          b.canonicalize();
          e.canonicalize();
          c.canonicalize();
          if (!is_integral(b) || !is_integral(e) || !is_integral(c))
            throw std::logic_error("isolator: fibre solution not integral");
          gens.push_back({v[0], v[1], v[2], Int(b.get_num()), Int(e.get_num()), Int(c.get_num())});
        }
      }
      size_t i = 0;
      for (; i < r; ++i) {
        yp[i] += 1;
        if (yp[i] < sm.diag[i]) break;
        yp[i] = 0;
      }
      if (i == r) break;
    }
  }
  return Subgroup::generate(gens);
}

bool is_isolated(const Subgroup& h) { return isolator(h) == h; }

}  // namespace ut4
