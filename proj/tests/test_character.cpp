#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ut4/character.hpp"

using namespace ut4;
using namespace ut4::testing;

namespace {

UnitValue sym(const char* s, long e = 1) { return UnitValue::symbol(s, mpq_class(e)); }
UnitValue root(long p, long q) { return UnitValue::root(mpq_class(p, q)); }

// Restriction of a character of G (it only sees the level-1 image) to H.
Character level1_character(const Subgroup& h, const UnitValue& x, const UnitValue& y,
                           const UnitValue& z) {
  std::vector<UnitValue> vals;
  for (const auto& g : h.generators()) vals.push_back(x.pow(g.a) * y.pow(g.d) * z.pow(g.f));
  return Character::from_canonical(h, vals);
}

// The abelian subgroup <(a,d,f|b,e), E13^{a/n} E24^{f/n}, C> with free values t, z, lambda.
Character abelian_character(long a, long d, long f, long b, long e) {
  long n = std::gcd(a, f);
  std::vector<Element> gens{Element::make(a, d, f, b, e, 0), Element::make(0, 0, 0, a / n, f / n, 0),
                            Element::x14()};
  return Character::from_generators(gens, {sym("t"), sym("z"), sym("lambda")});
}

Element random_in(std::mt19937_64& rng, const Subgroup& h, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  IntVec ex;
  for (size_t i = 0; i < h.num_generators(); ++i) ex.push_back(u(rng));
  return h.word(ex);
}

}  // namespace

TEST_CASE("unit values") {
  CHECK(UnitValue().is_one());
  CHECK(UnitValue().order() == 1);
  CHECK(root(1, 3).order() == 3);
  CHECK(root(4, 6).order() == 3);
  CHECK((root(1, 2) * sym("w")).order() == 0);
  SymbolTable syms;
  syms.declare("lambda", SymbolClass::off_circle);
  syms.declare("w", SymbolClass::circle_free);
  CHECK(UnitValue().modulus_class(syms) == ModulusClass::root_of_unity);
  CHECK(sym("lambda").modulus_class(syms) == ModulusClass::off_circle);
  CHECK((sym("w") * root(1, 5)).modulus_class(syms) == ModulusClass::circle_nontorsion);
  CHECK((sym("w") * sym("lambda", -2)).modulus_class(syms) == ModulusClass::off_circle);
  CHECK((sym("w", 2) * sym("w", -2)).is_one());
  CHECK(root(2, 3).pow(Int(3)).is_one());
  CHECK(root(1, 4).inverse() == root(3, 4));
  CHECK_THROWS(syms.declare("w", SymbolClass::off_circle));
}

TEST_CASE("numeric lifting of roots of unity") {
  for (int q = 1; q <= 12; ++q)
    for (int p = 0; p < q; ++p) {
      std::complex<double> v = std::polar(1.0, 2 * std::numbers::pi * p / q);
      mpq_class t;
      REQUIRE(lift_root_of_unity(v, 120, 1e-9, t));
      mpq_class want(p, q);
      want.canonicalize();
      CHECK(t == want);
    }
  mpq_class t;
  CHECK_FALSE(lift_root_of_unity({0.5, 0.0}, 120, 1e-9, t));
  CHECK_FALSE(lift_root_of_unity(std::polar(1.0, 1.0), 120, 1e-9, t));
  // A loose tolerance admits several torsions; refuse instead of guessing.
  CHECK_THROWS(lift_root_of_unity(std::polar(1.0, 2 * std::numbers::pi / 100), 120, 1e-2, t));
}

TEST_CASE("evaluation is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    Subgroup h = random_subgroup(rng, 3, 3);
    Character chi = level1_character(h, sym("x"), root(1, 6) * sym("y", 2), sym("x", -1));
    for (int k = 0; k < 100; ++k) {
      Element x = random_in(rng, h, 3), y = random_in(rng, h, 3);
      CHECK(chi.evaluate(mul(x, y)) == chi.evaluate(x) * chi.evaluate(y));
    }
  }
  Character chi = abelian_character(2, 1, 4, 1, 0);
  const Subgroup& h = chi.domain();
  for (int k = 0; k < 1000; ++k) {
    Element x = random_in(rng, h, 4), y = random_in(rng, h, 4);
    REQUIRE(chi.evaluate(mul(x, y)) == chi.evaluate(x) * chi.evaluate(y));
  }
  CHECK(chi.evaluate(Element::identity()).is_one());
  Element x = random_in(rng, h, 3);
  CHECK(chi.evaluate(pow(x, Int(5))) == chi.evaluate(x).pow(Int(5)));
  CHECK_THROWS_AS(chi.evaluate(Element::x12()), std::invalid_argument);
}

TEST_CASE("validity rejects characters that do not kill commutators") {
  // h1 = (1,1,1|0,0), h2 = E13^2, h3 = E24^2: [h1,h2] is a power of C.
  std::vector<Element> gens{Element::make(1, 1, 1, 0, 0, 0), Element::x13(2), Element::x24(2),
                            Element::x14()};
  Element c = comm(gens[0], gens[1]);
  REQUIRE(c.in_center());
  CHECK_THROWS_AS(Character::from_generators(gens, {sym("t"), sym("z"), sym("w"), root(1, 3)}),
                  RelationViolated);
  CHECK_NOTHROW(Character::from_generators(gens, {sym("t"), sym("z"), sym("w"), root(1, 2)}));
  // Inconsistent values on redundant generators.
  std::vector<Element> red{Element::x14(), Element::x14(2)};
  CHECK_THROWS_AS(Character::from_generators(red, {sym("lambda"), sym("lambda")}), RelationViolated);
  CHECK_NOTHROW(Character::from_generators(red, {sym("lambda"), sym("lambda", 2)}));
  CHECK_NOTHROW(Character::trivial(Subgroup::whole_group()));
}

TEST_CASE("conjugation of characters is an action") {
  std::mt19937_64 rng(5);
  Character chi = abelian_character(1, 2, 1, 0, 1);
  for (int it = 0; it < 200; ++it) {
    Element g = random_element(rng, 3), h = random_element(rng, 3);
    Character lhs = conjugate_character(conjugate_character(chi, g), h);
    Character rhs = conjugate_character(chi, mul(g, h));
    REQUIRE(lhs.agrees_with(rhs));
    // chi^g(x) = chi(g x g^-1) on g^-1 H g.
    Element x = conj(random_in(rng, chi.domain(), 2), inv(g));
    CHECK(conjugate_character(chi, g).evaluate(x) == chi.evaluate(conj(x, g)));
  }
  CHECK(conjugate_character(chi, Element::identity()).agrees_with(chi));
}

TEST_CASE("orientation of the character action") {
  // The (2,0) subgroup <(a,0,0|b,e), (0,0,f'|b',e'), C>. With chi^g(x) = chi(g x g^-1),
  // E13 moves the second generator by lambda^f' and E24 moves the first by lambda^-a.
  // The opposite orientation only flips both signs; neither moves h1 under E13.
  const long a = 2, b = 1, e = 0, fp = 3, bp = 0, ep = 1;
  REQUIRE(a * ep + fp * b != 0);  // non-abelian is fine for the action itself
  std::vector<Element> gens{Element::make(a, 0, 0, b, e, 0), Element::make(0, 0, fp, bp, ep, 0),
                            Element::x14()};
  Subgroup h = Subgroup::generate(gens);
  Element g1 = Element::x13(), g2 = Element::x24();
  REQUIRE(normalizes(g1, h));
  REQUIRE(normalizes(g2, h));
  for (const auto& g : {g1, g2}) {
    for (size_t i = 0; i < 2; ++i) {
      Element k = mul(conj(gens[i], g), inv(gens[i]));
      REQUIRE(k.in_center());
      Element k_alt = mul(conj(gens[i], inv(g)), inv(gens[i]));
      CHECK(k_alt.c == -k.c);
    }
  }
  CHECK(mul(conj(gens[0], g1), inv(gens[0])).c == 0);
  CHECK(mul(conj(gens[1], g1), inv(gens[1])).c == fp);
  CHECK(mul(conj(gens[0], g2), inv(gens[0])).c == -a);
  CHECK(mul(conj(gens[1], g2), inv(gens[1])).c == 0);
}
