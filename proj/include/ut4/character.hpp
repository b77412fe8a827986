#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ut4/subgroup.hpp"
#include "ut4/unit_value.hpp"

namespace ut4 {

struct RelationViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// chi : H -> C*, stored by its values on H.generators().
class Character {
 public:
  Character() = default;
  // Values on the canonical generators; throws RelationViolated.
  static Character from_canonical(const Subgroup& h, std::vector<UnitValue> values);
  // Values on arbitrary generators of H; transported through tracked words and
  // checked against the inputs. Throws RelationViolated.
  static Character from_generators(const std::vector<Element>& gens,
                                   const std::vector<UnitValue>& values);
  static Character trivial(const Subgroup& h);

  const Subgroup& domain() const { return h_; }
  const std::vector<UnitValue>& values() const { return v_; }

  // Throws std::invalid_argument when x is not in the domain.
  UnitValue evaluate(const Element& x) const;
  bool agrees_with(const Character& o) const { return h_ == o.h_ && v_ == o.v_; }

 private:
  Subgroup h_;
  std::vector<UnitValue> v_;
};

// chi^g(x) = chi(g x g^-1), a character of g^-1 H g.
Character conjugate_character(const Character& chi, const Element& g);
// chi restricted to K <= H.
Character restrict(const Character& chi, const Subgroup& k);

}  // namespace ut4
