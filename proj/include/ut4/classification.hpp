#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ut4/character.hpp"

namespace ut4 {

// Divisibility or range preconditions of a case formula do not hold.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// The subgroup is outside the parametrized families ("infeasible ranks",
// "violates case structure: ...").
struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// literal: parameter sets exactly as printed; reconciled: with the typo and
// consistency fixes documented in the README.
enum class Reading { literal, reconciled };

bool feasible_ranks(int rk1, int rk2);
bool is_case(int rk1, int rk2);

// Parameter names per case, ASCII: a prime becomes 1, two primes 2, three 3.
//   (1,1) a d f b e                 (2,0) a b e f1 b1 e1
//   (2,1) a e d1 e1                 (1,2) a d f b e b1 e1
//   (2,2) a f b e d1 f1 b1 e1 b2 e2 (3,2) a b e d1 b1 e1 f2 b2 e2 b3 e3
const std::vector<std::string>& param_names(int rk1, int rk2);
// Names of the character values on phi's generators h1..hk, C.
const std::vector<std::string>& value_names(int rk1, int rk2);
const std::vector<std::string>& subset_labels(int rk1, int rk2);

struct Params {
  int rk1 = 0, rk2 = 0;
  std::vector<Int> v;

  static Params make(int rk1, int rk2, std::vector<Int> v);  // checks the arity
  const Int& at(std::string_view name) const;
  std::string str() const;  // "(a=1, d=0, ...)"
  friend bool operator==(const Params& x, const Params& y) {
    return x.rk1 == y.rk1 && x.rk2 == y.rk2 && x.v == y.v;
  }
  friend bool operator<(const Params& x, const Params& y);
};

struct CaseId {
  int rk1 = 0, rk2 = 0;
  std::string subset;
  std::string str() const;  // "(2,2) S1"
  friend bool operator==(const CaseId& x, const CaseId& y) {
    return x.rk1 == y.rk1 && x.rk2 == y.rk2 && x.subset == y.subset;
  }
};

// h1..hk followed by C. Throws PreconditionError when phi is undefined
// (case (1,1) with a = f = 0).
std::vector<Element> phi_generators(const Params& p);

struct SetMembership {
  bool ok = false;
  std::string subset;  // when ok
  std::string reason;  // first violated clause otherwise
};
SetMembership param_set_of(const Params& p, Reading r = Reading::reconciled);

struct NormalForm {
  CaseId id;
  Params params;
  Element conjugator;  // conjugate(H, conjugator) == phi(params)
};
// Throws StructureError.
NormalForm normal_form(const Subgroup& h);

struct CaseValues {
  std::vector<std::string> names;
  std::vector<UnitValue> values;
  const UnitValue& at(std::string_view name) const;
};
// chi on phi(params)'s generators; chi.domain() must equal phi(params).
CaseValues case_values(const Params& p, const Character& chi);

struct Condition {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct Verdict {
  NormalForm nf;
  CaseValues values;
  bool irreducible = false;
  std::vector<Condition> conditions;
};
// The case conditions for chi on its domain. Throws StructureError.
Verdict is_irreducible(const Character& chi);

// One column entry of a stratum row. kind is one of Cstar, CstarMinusS1,
// S1MinusMuInf, CstarMinusMuInf, E, P, EMinusMuInf, PMinusMuInf, ECapMuInf,
// PCapMuInf, T, muN, mu_infty, Czw, CzwSing; args are monomials or integers.
struct Fiber {
  std::string kind;
  std::vector<std::string> args;
  std::string str() const;
};

struct StratumRow {
  std::string block;  // "(1,1) S1"
  int row = 0;        // 1-based within the block
  std::vector<std::string> columns;
  std::vector<Fiber> fibers;
};
// Throws std::logic_error when no row matches (an internal inconsistency for
// irreducible pairs) and PreconditionError for reducible verdicts.
StratumRow stratum(const Verdict& v, const SymbolTable& syms);

// chi^g(h_target) = chi(h_target) * prod_k value(gen_k)^exp_k, with gen
// indexing phi's generators (C last).
struct Factor {
  size_t gen = 0;
  mpq_class exp;
};
struct ActionDisplay {
  size_t target = 0;
  std::vector<Factor> factors;
};
struct NormalizerGen {
  std::string name;
  Element g;
  bool displayed = false;  // whether the formulas below are printed for this case
  std::vector<ActionDisplay> displays;
};
// The listed generators of N(H)/H with their printed action formulas.
// Throws PreconditionError when a formula's divisibility fails.
std::vector<NormalizerGen> normalizer_generators(const CaseId& id, const Params& p);

// chi([h_i, h_j]) = prod value(gen_k)^exp_k as printed.
struct CommutatorDisplay {
  size_t i = 0, j = 0;
  std::vector<Factor> factors;
};
std::vector<CommutatorDisplay> commutator_displays(const CaseId& id, const Params& p);

struct ActionResult {
  Character acted;                  // conjugate_character(chi, g)
  std::vector<UnitValue> actual;    // acted on phi's generators
  std::vector<UnitValue> predicted; // from the printed formula
  bool displayed = false;
  bool agrees = false;
};
// index 0 is the identity; i >= 1 is the i-th listed generator.
ActionResult normalizer_action(const NormalForm& nf, const Character& chi, size_t index);

UnitValue monomial(const std::vector<UnitValue>& vals, const std::vector<Factor>& f);
std::string monomial_str(const std::vector<std::string>& names, const std::vector<Factor>& f);

enum class Equivalence { equivalent, not_equivalent, unknown };
const char* to_string(Equivalence e);

struct EquivalenceResult {
  Equivalence status = Equivalence::unknown;
  Element g;  // certificate: g^-1 H2* g = H1* and chi1 = chi2^g on H1 ∩ g^-1 H2 g
  std::string reason;
};
// Searches hints first, then the ball of the given radius.
EquivalenceResult equivalent(const Character& c1, const Character& c2, int radius,
                             const std::vector<Element>& hints = {});
// True iff g certifies equivalence of the two pairs.
bool certifies(const Character& c1, const Character& c2, const Element& g);

struct FEquivalent {
  NormalForm nf;
  Character chi;
};
// Irreducible pairs (H', chi') != (H, chi) with H'* = H*, [H*:H'] = [H*:H] and
// chi' = chi on H ∩ H'. Empty for isolated H.
std::vector<FEquivalent> f_equivalents(const Character& chi, size_t limit = 4096);

// All characters of H extending chi restricted to K <= H, [H:K] finite.
std::vector<Character> extensions(const Character& chi_on_k, const Subgroup& h);

// Parameter tuples of a case subset with every entry in [-box, box],
// lexicographic order, at most limit. Empty subset means every subset.
std::vector<Params> enumerate_params(int rk1, int rk2, const std::string& subset, int box,
                                     size_t limit, Reading r = Reading::reconciled);

}  // namespace ut4
