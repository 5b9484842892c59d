#include <doctest.h>

#include <cstdint>
#include <vector>

#include "agm/errors.hpp"
#include "agm/field.hpp"

using agm::Elem;
using agm::FieldCtx;
using agm::ResidueClass;

TEST_CASE("make_field basics") {
  FieldCtx f7 = FieldCtx::make(7);
  CHECK(f7.q() == 7);
  CHECK(f7.q_mod8() == 7);
  CHECK(f7.t() == 1);

  FieldCtx f125 = FieldCtx::make(5, 3);
  CHECK(f125.q() == 125);
  CHECK(f125.q_mod8() == 5);
  // smallest monic irreducible cubic over F_5: x^3 + x + 1
  CHECK(f125.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});

  FieldCtx f29 = FieldCtx::make(29);
  CHECK(f29.q_mod8() == 5);
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(FieldCtx::make(9), agm::NotPrimeError);
  CHECK_THROWS_AS(FieldCtx::make(1), agm::NotPrimeError);
  CHECK_THROWS_AS(FieldCtx::make(2), agm::CharTwoError);
  CHECK_THROWS_AS(FieldCtx::make(3, 40), agm::OverflowError);
}

TEST_CASE("arithmetic closes and inverts") {
  for (auto [p, t] : {std::pair{29u, 1u}, {7u, 2u}, {5u, 3u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    for (Elem x = 1; x < f.q(); ++x) {
      CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.sub(x, x) == 0);
    }
    CHECK_THROWS_AS(f.inv(0), agm::ZeroDivisionError);
  }
}

TEST_CASE("residue classes in F_29") {
  FieldCtx f = FieldCtx::make(29);
  CHECK(f.residue_class(11) == ResidueClass::NonSquare);
  CHECK(f.residue_class(1) == ResidueClass::FourthPower);
  CHECK(f.residue_class(16) == ResidueClass::FourthPower);
  CHECK(f.residue_class(0) == ResidueClass::Zero);
}

TEST_CASE("residue class tags match exhaustive power tables") {
  for (auto [p, t] : {std::pair{29u, 1u}, {7u, 1u}, {113u, 1u}, {5u, 3u}, {3u, 4u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    std::vector<bool> sq(f.q(), false), fourth(f.q(), false);
    for (Elem x = 1; x < f.q(); ++x) {
      sq[f.mul(x, x)] = true;
      fourth[f.mul(f.mul(x, x), f.mul(x, x))] = true;
    }
    for (Elem x = 1; x < f.q(); ++x) {
      ResidueClass c = f.residue_class(x);
      CHECK(c != ResidueClass::Zero);
      CHECK((c == ResidueClass::FourthPower) == fourth[x]);
      CHECK((c != ResidueClass::NonSquare) == sq[x]);
    }
  }
}

TEST_CASE("square / fourth-power census") {
  for (auto [p, t] : {std::pair{7u, 1u}, {29u, 1u}, {113u, 1u}, {5u, 3u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    std::uint64_t nonsq = 0, fourth = 0, sq_not_fourth = 0;
    for (Elem x = 1; x < f.q(); ++x) {
      switch (f.residue_class(x)) {
        case ResidueClass::NonSquare: ++nonsq; break;
        case ResidueClass::FourthPower: ++fourth; break;
        case ResidueClass::SquareNotFourth: ++sq_not_fourth; break;
        default: break;
      }
    }
    CHECK(nonsq == (f.q() - 1) / 2);
    if (f.q_mod8() == 5) CHECK(fourth == (f.q() - 1) / 4);
    if (f.q_mod8() % 4 == 3) CHECK(sq_not_fourth == 0);  // every square is a fourth power
  }
}

TEST_CASE("residue class is stable under fourth-power multiplication") {
  FieldCtx f = FieldCtx::make(37);
  for (Elem x = 1; x < f.q(); ++x)
    for (Elem y = 1; y < f.q(); ++y) {
      Elem y4 = f.mul(f.mul(y, y), f.mul(y, y));
      CHECK(f.residue_class(f.mul(x, y4)) == f.residue_class(x));
    }
}

TEST_CASE("sqrt_all") {
  FieldCtx f29 = FieldCtx::make(29);
  agm::SqrtRoots r = f29.sqrt_all(25);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 5);
  CHECK(r[1] == 24);
  CHECK(f29.sqrt_all(11).empty());
  CHECK(f29.sqrt_all(0).size() == 1);

  for (auto [p, t] : {std::pair{29u, 1u}, {5u, 3u}, {3u, 2u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    for (Elem x = 0; x < f.q(); ++x) {
      agm::SqrtRoots roots = f.sqrt_all(x);
      for (Elem y : roots) CHECK(f.mul(y, y) == x);
    }
    // sqrt_all(x^2) contains x
    for (Elem x = 0; x < f.q(); ++x) CHECK(f.sqrt_all(f.mul(x, x)).contains(x));
    // size pattern: 2 iff nonzero square
    for (Elem x = 1; x < f.q(); ++x)
      CHECK(f.sqrt_all(x).size() == (f.is_square(x) ? 2 : 0));
  }
}

TEST_CASE("minus one residue per congruence class") {
  FieldCtx f7 = FieldCtx::make(7);
  CHECK(!f7.is_minus_one_square());
  CHECK(f7.residue_class(f7.minus_one()) == ResidueClass::NonSquare);

  FieldCtx f29 = FieldCtx::make(29);
  CHECK(f29.is_minus_one_square());
  CHECK(!f29.is_minus_one_fourth_power());
  CHECK(f29.residue_class(f29.minus_one()) == ResidueClass::SquareNotFourth);

  FieldCtx f113 = FieldCtx::make(113);
  CHECK(f113.is_minus_one_fourth_power());
  CHECK(f113.residue_class(f113.minus_one()) == ResidueClass::FourthPower);
}

TEST_CASE("Frobenius is additive in extension fields") {
  for (auto [p, t] : {std::pair{5u, 3u}, {7u, 2u}, {3u, 4u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    for (Elem x = 0; x < f.q(); x += 7)
      for (Elem y = 0; y < f.q(); y += 11)
        CHECK(f.pow(f.add(x, y), p) == f.add(f.pow(x, p), f.pow(y, p)));
  }
}

TEST_CASE("generator generates the unit group") {
  for (auto [p, t] : {std::pair{29u, 1u}, {5u, 3u}}) {
    FieldCtx f = FieldCtx::make(p, t);
    std::vector<bool> seen(f.q(), false);
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < f.q(); ++i) {
      CHECK(!seen[x]);
      seen[x] = true;
      x = f.mul(x, f.generator());
    }
    CHECK(x == 1);
  }
}
