#include <random>
#include <vector>

#include "doctest.h"
#include "sslab/error.hpp"
#include "sslab/ordinal.hpp"

using namespace sslab;

namespace {

Ordinal O(const char* lit) { return Ordinal::parse(lit); }

Ordinal random_ordinal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> exps(0, kMaxExponent);
  std::uniform_int_distribution<std::uint64_t> coeffs(1, 9);
  std::vector<int> es;
  int k = nterms(rng);
  while (static_cast<int>(es.size()) < k) {
    int e = exps(rng);
    bool dup = false;
    for (int x : es) dup |= x == e;
    if (!dup) es.push_back(e);
  }
  std::sort(es.rbegin(), es.rend());
  std::vector<Ordinal::Term> terms;
  for (int e : es) terms.push_back({e, coeffs(rng)});
  return Ordinal::from_terms(terms);
}

}  // namespace

TEST_CASE("cnf parsing matches direct readings") {
  auto o = O("w^2*3+w+4");
  REQUIRE(o.terms().size() == 3);
  CHECK(o.terms()[0] == Ordinal::Term{2, 3});
  CHECK(o.terms()[1] == Ordinal::Term{1, 1});
  CHECK(o.terms()[2] == Ordinal::Term{0, 4});

  CHECK(O("0").is_zero());
  CHECK(O("0").terms().empty());

  CHECK_THROWS_WITH_AS(O("w^9"), doctest::Contains("exceeds bound"), Error);
  CHECK_THROWS_AS(O("w+w^2"), Error);      // non-canonical order
  CHECK_THROWS_AS(O("w+w"), Error);        // equal exponents
  CHECK_THROWS_AS(O("w*0"), Error);        // zero coefficient
  CHECK_THROWS_AS(O("w+0"), Error);        // 0 only valid alone
  CHECK_THROWS_AS(O("3+4"), Error);
  CHECK_THROWS_AS(O(""), Error);
  CHECK_THROWS_AS(O("w^"), Error);
}

TEST_CASE("comparison is the expected total order") {
  CHECK(O("w*2+1") > O("w*2"));
  CHECK(O("0") == Ordinal());
  CHECK(O("w^2") > O("w*5+9"));  // higher leading exponent wins
  CHECK(O("w") < O("w+1"));
  CHECK(O("w") < O("w*2"));
}

TEST_CASE("ordinal sum and left subtraction") {
  CHECK(O("w") + O("w") == O("w*2"));
  CHECK(O("2") + O("w") == O("w"));
  CHECK(O("w+3") + O("w^2+1") == O("w^2+1"));
  CHECK(O("w^2+w") + O("w*2+5") == O("w^2+w*3+5"));

  CHECK(left_subtract(O("2"), O("w")) == O("w"));      // 2 + w == w
  CHECK(left_subtract(O("w"), O("w*2")) == O("w"));    // w + w == w*2
  CHECK(left_subtract(O("w"), O("w")) == O("0"));
  CHECK_THROWS_AS(left_subtract(O("w"), O("5")), Error);
}

TEST_CASE("classification: limits, nu, successor") {
  auto c = classify(O("w"));
  CHECK(c.is_limit);
  CHECK(c.nu == 1);
  CHECK(c.successor == O("w+1"));

  c = classify(O("5"));
  CHECK_FALSE(c.is_limit);
  CHECK(c.nu == 0);
  CHECK(c.successor == O("6"));

  c = classify(O("0"));
  CHECK_FALSE(c.is_limit);
  CHECK(c.nu == kNuTop);
  CHECK(c.successor == O("1"));
}

TEST_CASE("floor/ceil to a divisibility level") {
  CHECK(O("w^2*3+w+4").floor_to(1) == O("w^2*3+w"));
  CHECK(O("w^2*3+w+4").ceil_to(1) == O("w^2*3+w*2"));
  CHECK(O("w^2").floor_to(1) == O("w^2"));
  CHECK(O("w^2").ceil_to(1) == O("w^2"));
  CHECK(O("5").floor_to(1) == O("0"));
  CHECK(O("5").ceil_to(1) == O("w"));
}

TEST_CASE("order and arithmetic laws on random ordinals") {
  std::mt19937_64 rng(20260810);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);

    // Antisymmetry and transitivity.
    if (a <= b && b <= a) CHECK(a == b);
    if (a <= b && b <= c) CHECK(a <= c);

    // Associativity of the sum.
    CHECK((a + b) + c == a + (b + c));

    // Left subtraction inverts addition on the left.
    CHECK(left_subtract(a, a + c) == c);

    // nu of a sum is the nu of the right summand.
    if (!b.is_zero()) CHECK((a + b).nu() == b.nu());

    // Sums are monotone and extensive on the right.
    CHECK(a + b >= a);
    if (!b.is_zero()) CHECK(a + b > a);
  }
}

TEST_CASE("parse/render round-trip on 1000 random ordinals") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = random_ordinal(rng);
    CHECK(Ordinal::parse(a.str()) == a);
  }
}
