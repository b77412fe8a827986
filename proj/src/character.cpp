#include "ut4/character.hpp"

namespace ut4 {

Character Character::from_canonical(const Subgroup& h, std::vector<UnitValue> values) {
  const auto gens = h.generators();
  if (values.size() != gens.size())
    throw std::invalid_argument("character needs one value per canonical generator");
  Character chi;
  chi.h_ = h;
  chi.v_ = std::move(values);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      UnitValue v = chi.evaluate(comm(gens[i], gens[j]));
      if (!v.is_one())
        throw RelationViolated("relation violated: chi([" + gens[i].str() + ", " + gens[j].str() +
                               "]) = " + v.str());
    }
  return chi;
}

Character Character::from_generators(const std::vector<Element>& gens,
                                     const std::vector<UnitValue>& values) {
  if (values.size() != gens.size()) throw std::invalid_argument("one value per generator required");
  std::vector<IntVec> words;
  Subgroup h = Subgroup::generate_tracked(gens, words);
  std::vector<UnitValue> canon;
  for (const auto& w : words) canon.push_back(product(values, w));
  Character chi = from_canonical(h, std::move(canon));
  for (size_t i = 0; i < gens.size(); ++i) {
    UnitValue v = chi.evaluate(gens[i]);
    if (v != values[i])
      throw RelationViolated("relation violated: values are inconsistent at generator " +
                             gens[i].str() + " (given " + values[i].str() + ", forced " + v.str() +
                             ")");
  }
  return chi;
}

Character Character::trivial(const Subgroup& h) {
  Character chi;
  chi.h_ = h;
  chi.v_.assign(h.num_generators(), UnitValue());
  return chi;
}

UnitValue Character::evaluate(const Element& x) const {
  IntVec ex;
  if (!h_.sift(x, ex)) throw std::invalid_argument("not in domain: " + x.str());
  return product(v_, ex);
}

Character conjugate_character(const Character& chi, const Element& g) {
  Subgroup k = conjugate(chi.domain(), inv(g));
  std::vector<UnitValue> vals;
  for (const auto& x : k.generators()) vals.push_back(chi.evaluate(conj(x, g)));
  return Character::from_canonical(k, std::move(vals));
}

Character restrict(const Character& chi, const Subgroup& k) {
  std::vector<UnitValue> vals;
  for (const auto& x : k.generators()) vals.push_back(chi.evaluate(x));
  return Character::from_canonical(k, std::move(vals));
}

}  // namespace ut4
