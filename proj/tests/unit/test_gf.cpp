#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdm/error.hpp"
#include "qdm/gf.hpp"

namespace {

using qdm::Elem;
using qdm::Field;

struct Order {
  std::uint32_t p, e;
};

class FieldAxioms : public ::testing::TestWithParam<Order> {};

TEST_P(FieldAxioms, AgreesWithPolynomialArithmetic) {
  const auto [p, e] = GetParam();
  const auto f = Field::make(p, e);
  const oracle::PolyField ref(p, e == 1 ? std::vector<std::uint32_t>{} : f->spec().modulus);
  ASSERT_EQ(f->order(), ref.order());
  for (Elem a = 0; a < f->order(); ++a) {
    EXPECT_EQ(f->neg(a), ref.neg(a));
    for (Elem b = 0; b < f->order(); ++b) {
      ASSERT_EQ(f->add(a, b), ref.add(a, b)) << a << " + " << b;
      ASSERT_EQ(f->mul(a, b), ref.mul(a, b)) << a << " * " << b;
      ASSERT_EQ(f->sub(f->add(a, b), b), a);
      if (b != 0) ASSERT_EQ(f->mul(f->div(a, b), b), a);
    }
  }
}

TEST_P(FieldAxioms, PrimitiveGeneratesUnits) {
  const auto [p, e] = GetParam();
  const auto f = Field::make(p, e);
  std::set<Elem> seen;
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < f->order(); ++i) {
    seen.insert(x);
    x = f->mul(x, f->primitive());
  }
  EXPECT_EQ(x, 1u);
  EXPECT_EQ(seen.size(), f->order() - 1);
}

TEST_P(FieldAxioms, CoefficientRoundTrip) {
  const auto [p, e] = GetParam();
  const auto f = Field::make(p, e);
  for (Elem a = 0; a < f->order(); ++a) EXPECT_EQ(f->from_coeffs(f->coeffs(a)), a);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(Order{2, 1}, Order{3, 1}, Order{5, 1}, Order{7, 1}, Order{2, 2},
                                           Order{2, 3}, Order{3, 2}, Order{2, 4}, Order{5, 2}));

TEST(DefaultModulus, LeastFromTheTop) {
  EXPECT_EQ(qdm::default_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(qdm::default_modulus(2, 3), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(qdm::default_modulus(2, 4), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(qdm::default_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(DefaultModulus, IsIrreducibleAndMinimal) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t e = 2; e <= 4; ++e) {
      const auto m = qdm::default_modulus(p, e);
      EXPECT_TRUE(qdm::is_irreducible(p, m));
      // Every monic polynomial that reads smaller from the top is reducible.
      std::vector<std::uint32_t> c(e + 1, 0);
      c[e] = 1;
      while (true) {
        if (std::lexicographical_compare(c.rbegin(), c.rend(), m.rbegin(), m.rend())) {
          EXPECT_FALSE(qdm::is_irreducible(p, c));
        }
        std::uint32_t i = 0;
        while (i < e && ++c[i] == p) c[i++] = 0;
        if (i == e) break;
      }
    }
  }
}

TEST(Field, RootSatisfiesModulus) {
  const auto f = Field::make(2, 4);
  const Elem w = f->root();
  EXPECT_EQ(f->pow(w, 4), f->add(w, 1));
  EXPECT_EQ(f->pow(w, 15), 1u);
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::of_order(6), qdm::Error);
  EXPECT_THROW(Field::make(4, 1), qdm::Error);
  const auto f = Field::make(3);
  try {
    f->div(1, 0);
    FAIL();
  } catch (const qdm::Error& e) {
    EXPECT_EQ(e.code(), qdm::Errc::kDivisionByZero);
  }
  try {
    Field::make(qdm::FieldSpec{2, 2, {1, 0, 1}});
    FAIL();
  } catch (const qdm::Error& e) {
    EXPECT_EQ(e.code(), qdm::Errc::kInvalidField);
  }
}

TEST(Field, OfOrderMatchesMake) {
  EXPECT_TRUE(qdm::same_field(Field::of_order(9), Field::make(3, 2)));
  EXPECT_FALSE(qdm::same_field(Field::of_order(8), Field::make(2, 2)));
}

}  // namespace
