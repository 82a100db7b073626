#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qdm/error.hpp"
#include "qdm/lattice.hpp"

namespace {

using qdm::Field;
using qdm::Lattice;
using qdm::Subspace;
using qdm::SubspaceId;

struct Shape {
  std::uint32_t q;
  int n;
};

class Counts : public ::testing::TestWithParam<Shape> {};

TEST_P(Counts, EnumerationMatchesGrowingSpans) {
  const auto [q, n] = GetParam();
  const oracle::PrimeSpace sp{q, n};
  std::vector<std::size_t> by_dim(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : sp.all_subspaces()) ++by_dim[static_cast<std::size_t>(sp.dim(s))];
  const auto f = Field::make(q);
  for (int k = 0; k <= n; ++k) {
    const auto listed = qdm::enumerate_subspaces(f, n, k);
    EXPECT_EQ(listed.size(), by_dim[static_cast<std::size_t>(k)]) << "k = " << k;
    EXPECT_EQ(qdm::gaussian_binomial(n, k, q), by_dim[static_cast<std::size_t>(k)]);
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    EXPECT_EQ(std::adjacent_find(listed.begin(), listed.end()), listed.end());
  }
}

INSTANTIATE_TEST_SUITE_P(PrimeFields, Counts,
                         ::testing::Values(Shape{2, 1}, Shape{2, 3}, Shape{2, 4}, Shape{2, 5}, Shape{3, 3},
                                           Shape{3, 4}, Shape{5, 3}));

TEST(Subspace, GaussianBinomialValues) {
  EXPECT_EQ(qdm::gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(qdm::gaussian_binomial(5, 2, 2), 155u);
  EXPECT_EQ(qdm::gaussian_binomial(4, 2, 4), 357u);
  EXPECT_EQ(qdm::gaussian_binomial(4, 5, 2), 0u);
  EXPECT_EQ(qdm::gaussian_binomial(10, 5, 2), 109221651u);
}

TEST(Subspace, SumMeetAndPerpAgainstVectorSets) {
  const auto f = Field::make(3);
  const oracle::PrimeSpace sp{3, 3};
  std::vector<Subspace> all;
  for (int k = 0; k <= 3; ++k) {
    for (auto& s : qdm::enumerate_subspaces(f, 3, k)) all.push_back(s);
  }
  auto as_set = [&](const Subspace& s) { return sp.span(s.packed_rows()); };
  const auto form = qdm::BilinearForm::identity(f, 3);
  for (const auto& a : all) {
    const Subspace pa = qdm::perp(a, form);
    EXPECT_EQ(pa.dim(), 3 - a.dim());
    EXPECT_EQ(qdm::perp(pa, form), a);
    for (const auto& b : all) {
      const Subspace s = qdm::sum(a, b);
      const Subspace m = qdm::intersect(a, b);
      EXPECT_EQ(as_set(s), sp.sum(as_set(a), as_set(b)));
      EXPECT_EQ(as_set(m), sp.meet(as_set(a), as_set(b)));
      EXPECT_EQ(s.dim() + m.dim(), a.dim() + b.dim());
      EXPECT_EQ(qdm::contains(a, b), oracle::PrimeSpace::inside(as_set(b), as_set(a)));
    }
  }
}

TEST(Subspace, CanonicalFormIgnoresGenerators) {
  const auto f = Field::make(2);
  const Subspace a = Subspace::span_packed(f, 4, {0b1100, 0b0110});
  const Subspace b = Subspace::span_packed(f, 4, {0b1010, 0b0110, 0b1100});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "1010 0110");
  EXPECT_EQ(Subspace(f, 4).to_string(), "0");
}

TEST(Subspace, ParseAndRender) {
  EXPECT_EQ(qdm::parse_vector("1021", 3, 4), (std::vector<qdm::Elem>{1, 0, 2, 1}));
  EXPECT_EQ(qdm::render_vector(std::vector<qdm::Elem>{1, 0, 2, 1}), "1021");
  EXPECT_THROW(qdm::parse_vector("1031", 3, 4), qdm::Error);
  EXPECT_THROW(qdm::parse_vector("10", 3, 4), qdm::Error);
}

TEST(Subspace, FormsMustBeReflexiveAndInvertible) {
  const auto f = Field::make(3);
  auto expect_code = [](auto&& fn, qdm::Errc code) {
    try {
      fn();
      FAIL() << "expected an error";
    } catch (const qdm::Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([&] { qdm::BilinearForm(qdm::MatGF::from_rows(f, 2, {{1, 1}, {1, 1}})); }, qdm::Errc::kSingularForm);
  expect_code([&] { qdm::BilinearForm(qdm::MatGF::from_rows(f, 2, {{1, 1}, {0, 1}})); }, qdm::Errc::kSingularForm);
  const qdm::BilinearForm symplectic(qdm::MatGF::from_rows(f, 2, {{0, 1}, {2, 0}}));
  const Subspace line = Subspace::span(f, 2, qdm::MatGF::from_rows(f, 2, {{1, 2}}));
  EXPECT_EQ(qdm::perp(line, symplectic), line);
}

TEST(Subspace, IntervalNeighbors) {
  const auto f = Field::make(2);
  const Subspace full = Subspace::full(f, 4);
  const Subspace line = Subspace::span_packed(f, 4, {0b1000, 0b0100});
  EXPECT_EQ(qdm::interval_neighbors(line, qdm::Neighbor::kCodim1Inside, full).size(), 3u);
  EXPECT_EQ(qdm::interval_neighbors(line, qdm::Neighbor::kCoverAbove, full).size(), 3u);
  const Subspace plane = Subspace::span_packed(f, 4, {0b1000, 0b0100, 0b0010});
  EXPECT_EQ(qdm::interval_neighbors(line, qdm::Neighbor::kCoverAbove, plane).size(), 1u);
  EXPECT_THROW(qdm::interval_neighbors(full, qdm::Neighbor::kCoverAbove, line), qdm::Error);
}

class LatticeShape : public ::testing::TestWithParam<Shape> {};

TEST_P(LatticeShape, TablesAgreeWithSubspaceOperations) {
  const auto [q, n] = GetParam();
  const auto f = Field::of_order(q);
  const auto lat = Lattice::build(f, n);
  EXPECT_EQ(lat->size(), Lattice::subspace_count(n, q));
  EXPECT_EQ(lat->dim(lat->zero()), 0);
  EXPECT_EQ(lat->dim(lat->full()), n);
  std::mt19937 rng(q * 10 + static_cast<unsigned>(n));
  std::uniform_int_distribution<SubspaceId> any(0, static_cast<SubspaceId>(lat->size() - 1));
  for (int t = 0; t < 400; ++t) {
    const SubspaceId a = any(rng), b = any(rng);
    const Subspace sa = lat->subspace(a), sb = lat->subspace(b);
    EXPECT_EQ(lat->subspace(lat->join(a, b)), qdm::sum(sa, sb));
    EXPECT_EQ(lat->subspace(lat->meet(a, b)), qdm::intersect(sa, sb));
    EXPECT_EQ(lat->contains(a, b), qdm::contains(sa, sb));
    EXPECT_EQ(lat->id_of(sa), a);
  }
  for (SubspaceId id : lat->all()) {
    for (SubspaceId c : lat->lower_covers(id)) {
      EXPECT_EQ(lat->dim(c) + 1, lat->dim(id));
      EXPECT_TRUE(lat->contains(id, c));
    }
    for (SubspaceId c : lat->upper_covers(id)) {
      EXPECT_EQ(lat->dim(c), lat->dim(id) + 1);
      EXPECT_TRUE(lat->contains(c, id));
    }
    const int d = lat->dim(id);
    EXPECT_EQ(lat->lower_covers(id).size(), d == 0 ? 0 : qdm::gaussian_binomial(d, 1, q));
    if (id > 0) {
      EXPECT_TRUE(lat->dim(id - 1) < d || lat->subspace(id - 1) < lat->subspace(id));
    }
  }
}

TEST_P(LatticeShape, PerpIsAnInvolution) {
  const auto [q, n] = GetParam();
  const auto amb = qdm::Ambient::make(Field::of_order(q), n);
  const auto& lat = amb->lattice();
  for (SubspaceId id : lat.all()) {
    EXPECT_EQ(amb->perp(amb->perp(id)), id);
    EXPECT_EQ(lat.dim(amb->perp(id)), n - lat.dim(id));
    EXPECT_EQ(lat.subspace(amb->perp(id)), qdm::perp(lat.subspace(id), amb->form()));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, LatticeShape,
                         ::testing::Values(Shape{2, 3}, Shape{2, 4}, Shape{2, 5}, Shape{3, 3}, Shape{4, 3},
                                           Shape{2, 6}));

TEST(Lattice, CountsOfF2) {
  const auto f2 = Field::make(2);
  const auto l4 = Lattice::build(f2, 4);
  std::vector<std::size_t> dims;
  for (int k = 0; k <= 4; ++k) dims.push_back(l4->of_dim(k).size());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 15, 35, 15, 1}));
  EXPECT_EQ(Lattice::build(f2, 5)->size(), 374u);
}

TEST(Lattice, CapIsEnforced) {
  qdm::LatticeOptions small;
  small.cap = 100;
  try {
    Lattice::build(Field::make(2), 5, small);
    FAIL();
  } catch (const qdm::Error& e) {
    EXPECT_EQ(e.code(), qdm::Errc::kCapExceeded);
  }
}

TEST(Lattice, WithoutDenseTables) {
  qdm::LatticeOptions bare;
  bare.join_table_cap = 0;
  bare.relation_table_cap = 0;
  const auto f = Field::make(2);
  const auto plain = Lattice::build(f, 4, bare);
  const auto dense = Lattice::build(f, 4);
  EXPECT_FALSE(plain->has_relation_tables());
  for (SubspaceId a : plain->all()) {
    for (SubspaceId b : plain->all()) {
      ASSERT_EQ(plain->join(a, b), dense->join(a, b));
      ASSERT_EQ(plain->meet(a, b), dense->meet(a, b));
      ASSERT_EQ(plain->contains(a, b), dense->contains(a, b));
    }
  }
}

TEST(Lattice, NonIdentityFormPerp) {
  const auto f = Field::make(2);
  qdm::MatGF gram(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) gram.set(i, 3 - i, 1);
  const auto amb = qdm::Ambient::make(Lattice::build(f, 4), qdm::BilinearForm(gram));
  const auto& lat = amb->lattice();
  const SubspaceId e1 = lat.span_of({0b1000});
  EXPECT_EQ(amb->perp(e1), lat.span_of({0b1000, 0b0100, 0b0010}));
}

}  // namespace
