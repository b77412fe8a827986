#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ut4/classification.hpp"

namespace ut4 {

// All elements with every coordinate in [-r, r], lexicographic.
std::vector<Element> ball(int r);

struct SWitness {
  Element g;
  bool in_h = false;
  Subgroup intersection;  // H ∩ g^-1 H g; filled for elements outside H
  // chi(x) and chi(g x g^-1) on the generators of the intersection (s_chi_ball only)
  std::vector<std::pair<UnitValue, UnitValue>> character_check;
};

// g in B_r with H ∩ g^-1 H g of finite index in H. Uses S(H) = N(H*).
std::vector<SWitness> s_set_ball(const Subgroup& h, int r);
// Same set by the definition (rank signature of the intersection); slow.
std::vector<SWitness> s_set_ball_literal(const Subgroup& h, int r);
// The part of s_set_ball where chi and chi^g agree on the intersection.
std::vector<SWitness> s_chi_ball(const Character& chi, int r);
// First g in B_r \ H lying in S(H, chi), in shells of growing max-norm.
std::optional<SWitness> s_chi_witness(const Character& chi, int r);

// dim End_G(ind chi) = number of double cosets HgH with g in S(H, chi).
// Throws std::invalid_argument("infinite index") unless [G:H] is finite.
Int endo_dimension_finite(const Character& chi);

struct Discrepancy {
  Params params;
  std::string kind;  // "normalizes", "action", "commutator"
  std::string what;  // generator and target
  std::string displayed;
  std::string actual;
};

struct VerifyReport {
  CaseId id;
  int box = 0;
  Reading reading = Reading::reconciled;
  size_t params_checked = 0;
  size_t action_checks = 0;
  size_t commutator_checks = 0;
  std::vector<Discrepancy> discrepancies;  // first max_listed kept
  size_t action_discrepancies = 0;         // counted in full
  size_t commutator_discrepancies = 0;
  size_t normalize_failures = 0;
  size_t opposite_orientation_matches = 0;  // action mismatches matching under g^-1
};

// Sweeps every tuple of the subset in the box and compares the printed
// normalizer actions and commutator identities with direct computation.
VerifyReport verify_case(const CaseId& id, int box, Reading r = Reading::reconciled,
                         size_t max_listed = 50);

}  // namespace ut4
