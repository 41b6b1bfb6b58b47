#include "doctest.h"

#include "moltype/elements.hpp"
#include "moltype/rational.hpp"

using namespace moltype;

TEST_CASE("element attributes carry fixed atomic data") {
  const auto carbon = element_attributes(AtomicSymbol::C);
  CHECK(carbon.atomic_number == 6);
  CHECK(carbon.atomic_weight == doctest::Approx(12.011));

  const auto iron = element_attributes(AtomicSymbol::Fe);
  CHECK(iron.atomic_number == 26);
  CHECK(iron.atomic_weight == doctest::Approx(55.845));

  const auto iodine = element_attributes(AtomicSymbol::I);
  CHECK(iodine.atomic_number == 53);
}

TEST_CASE("symbol round trip through text") {
  for (const AtomicSymbol symbol : kAllSymbols) {
    const auto back = symbol_from_string(to_string(symbol));
    REQUIRE(back.has_value());
    CHECK(*back == symbol);
  }
  CHECK_FALSE(symbol_from_string("Xx").has_value());
  CHECK_FALSE(symbol_from_string("").has_value());
  CHECK_FALSE(symbol_from_string("h").has_value());
}

TEST_CASE("two-letter symbols are distinct from one-letter prefixes") {
  CHECK(symbol_from_string("F") == AtomicSymbol::F);
  CHECK(symbol_from_string("Fe") == AtomicSymbol::Fe);
  CHECK(symbol_from_string("B") == AtomicSymbol::B);
  CHECK(symbol_from_string("Br") == AtomicSymbol::Br);
}

TEST_CASE("noble core electrons pick the largest closed core below z") {
  CHECK(noble_core_electrons(1) == 0);
  CHECK(noble_core_electrons(2) == 0);  // helium itself is not its own core
  CHECK(noble_core_electrons(3) == 2);
  CHECK(noble_core_electrons(6) == 2);
  CHECK(noble_core_electrons(10) == 2);
  CHECK(noble_core_electrons(11) == 10);
  CHECK(noble_core_electrons(18) == 10);
  CHECK(noble_core_electrons(19) == 18);
  CHECK(noble_core_electrons(26) == 18);
  CHECK(noble_core_electrons(36) == 18);
  CHECK(noble_core_electrons(37) == 36);
  CHECK(noble_core_electrons(53) == 36);
}

TEST_CASE("rational arithmetic stays reduced with positive denominators") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) + Rational(1, 2) + Rational(1, 2)) == Rational(3, 2));
  CHECK((Rational(3, 2) * Rational(2, 3)) == Rational(1));
  CHECK((Rational(1) - Rational(5, 2)) == Rational(-3, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(3, 2).to_double() == 1.5);
  CHECK_THROWS(Rational(1, 0));
}
