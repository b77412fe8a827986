#pragma once

#include <string>
#include <vector>

#include "ut4/element.hpp"
#include "ut4/lattice.hpp"

namespace ut4 {

struct Ranks {
  int rk1 = 0, rk2 = 0, rk3 = 0;
  int hirsch() const { return rk1 + rk2 + rk3; }
  friend bool operator==(const Ranks& x, const Ranks& y) {
    return x.rk1 == y.rk1 && x.rk2 == y.rk2 && x.rk3 == y.rk3;
  }
};

// Canonical form of a subgroup H <= UT(4,Z), following the filtration
// G > [G,G] > Z(G):
//   level1: HNF basis of the image of H in Z^3 = G/[G,G], with one tail in H per row;
//   level2: HNF basis of the image of H ∩ [G,G] in Z^2, with tails;
//   level3: H ∩ Z(G) = <C^m>, m >= 0.
// Tails have their lower coordinates reduced, so two subgroups are equal iff
// their canonical forms are equal.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generate(const std::vector<Element>& gens);
  // Also returns, for each canonical generator, its exponent vector in the
  // abelianization of the free group on the inputs.
  static Subgroup generate_tracked(const std::vector<Element>& gens, std::vector<IntVec>& words);
  static Subgroup whole_group();

  const IntMat& level1() const { return l1_; }
  const IntMat& level2() const { return l2_; }
  const std::vector<size_t>& pivots1() const { return piv1_; }
  const std::vector<size_t>& pivots2() const { return piv2_; }
  const std::vector<Element>& tails1() const { return t1_; }
  const std::vector<Element>& tails2() const { return t2_; }
  const Int& center_index() const { return m_; }  // H ∩ Z = <C^m>

  // tails1, tails2, then C^m when m > 0; a polycyclic sequence for H.
  std::vector<Element> generators() const;
  size_t num_generators() const { return t1_.size() + t2_.size() + (m_.is_zero() ? 0 : 1); }

  Ranks ranks() const {
    return {static_cast<int>(l1_.size()), static_cast<int>(l2_.size()), m_.is_zero() ? 0 : 1};
  }

  bool contains(const Element& x) const;
  // x = prod generators()[i]^exps[i] in order; false if x is not in H.
  bool sift(const Element& x, IntVec& exps) const;
  // Product of generators()^exps in order.
  Element word(const IntVec& exps) const;
  // Canonical representative of the right coset gH.
  Element coset_rep(const Element& g) const;

  bool contains_subgroup(const Subgroup& k) const;
  bool contains_center() const { return m_.is_one(); }

  std::string str() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y);
  friend bool operator!=(const Subgroup& x, const Subgroup& y) { return !(x == y); }

 private:
  struct Item;
  static Subgroup build(std::vector<Item> items, std::vector<IntVec>* words, size_t nin);

  IntMat l1_;
  std::vector<size_t> piv1_;
  std::vector<Element> t1_;
  IntMat l2_;
  std::vector<size_t> piv2_;
  std::vector<Element> t2_;
  Int m_ = 0;
};

// g H g^-1
Subgroup conjugate(const Subgroup& h, const Element& g);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
// H* = {x : x^n in H for some n >= 1}
Subgroup isolator(const Subgroup& h);
bool is_isolated(const Subgroup& h);
// [H : K] for K <= H; 0 when infinite. Throws if K is not contained in H.
Int index(const Subgroup& h, const Subgroup& k);
Subgroup centralizer(const Subgroup& h);
// [H,H]: commutators of weight 2 and 3 in the canonical generators (class 3).
Subgroup derived_subgroup(const Subgroup& h);
bool normalizes(const Element& g, const Subgroup& h);

// Kernel of a homomorphism from K to Z^dim / span(relations), given by its
// values on K.generators().
Subgroup hom_kernel(const Subgroup& k, const std::vector<IntVec>& values, const IntMat& relations,
                    size_t dim);

}  // namespace ut4
