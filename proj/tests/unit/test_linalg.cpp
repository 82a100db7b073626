#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qdm/error.hpp"
#include "qdm/linalg.hpp"

namespace {

using qdm::Elem;
using qdm::Field;
using qdm::MatGF;

MatGF random_matrix(const qdm::FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng, double density = 0.6) {
  MatGF m(f, r, c);
  std::bernoulli_distribution nonzero(density);
  std::uniform_int_distribution<Elem> any(1, f->order() - 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (nonzero(rng)) m.set(i, j, any(rng));
    }
  }
  return m;
}

oracle::PolyField ref_of(const qdm::FieldPtr& f) {
  return oracle::PolyField(f->characteristic(), f->degree() == 1 ? std::vector<std::uint32_t>{} : f->spec().modulus);
}

// Rank as log_q of the number of distinct linear combinations of the rows.
std::size_t brute_rank(const MatGF& m) {
  const auto ref = ref_of(m.field());
  const std::uint32_t q = m.field()->order();
  std::set<std::vector<Elem>> seen;
  std::vector<Elem> coeff(m.rows(), 0);
  while (true) {
    std::vector<Elem> v(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = ref.add(v[j], ref.mul(coeff[i], m(i, j)));
    }
    seen.insert(v);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  std::size_t r = 0;
  for (std::size_t s = 1; s < seen.size(); s *= q) ++r;
  return r;
}

class Linalg : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(Linalg, RankMatchesEnumeration) {
  const auto f = Field::of_order(GetParam());
  std::mt19937 rng(GetParam());
  for (int t = 0; t < 60; ++t) {
    const MatGF m = random_matrix(f, 1 + t % 4, 1 + (t / 4) % 5, rng, 0.2 + 0.1 * (t % 7));
    ASSERT_EQ(qdm::rank(m), brute_rank(m));
  }
}

TEST_P(Linalg, ReducedEchelonShape) {
  const auto f = Field::of_order(GetParam());
  std::mt19937 rng(7 * GetParam());
  for (int t = 0; t < 40; ++t) {
    const MatGF m = random_matrix(f, 2 + t % 4, 2 + t % 5, rng, 0.5);
    const qdm::Echelon e = qdm::rref(m);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      const std::size_t pc = e.pivots[i];
      EXPECT_EQ(e.reduced(i, pc), 1u);
      for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
        if (r != i) EXPECT_EQ(e.reduced(r, pc), 0u);
      }
      for (std::size_t c = 0; c < pc; ++c) EXPECT_EQ(e.reduced(i, c), 0u);
    }
    for (std::size_t r = e.rank(); r < e.reduced.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_EQ(e.reduced(r, c), 0u);
    }
    EXPECT_EQ(qdm::rank(qdm::vstack(m, e.reduced)), e.rank());
  }
}

TEST_P(Linalg, KernelIsAnnihilatedAndComplete) {
  const auto f = Field::of_order(GetParam());
  const auto ref = ref_of(f);
  std::mt19937 rng(11 * GetParam());
  for (int t = 0; t < 40; ++t) {
    const MatGF m = random_matrix(f, 1 + t % 4, 2 + t % 4, rng, 0.5);
    const MatGF k = qdm::kernel(m);
    EXPECT_EQ(k.rows() + qdm::rank(m), m.cols());
    EXPECT_EQ(qdm::rank(k), k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Elem dot = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) dot = ref.add(dot, ref.mul(m(i, j), k(r, j)));
        EXPECT_EQ(dot, 0u);
      }
    }
  }
}

TEST_P(Linalg, InverseAndMultiply) {
  const auto f = Field::of_order(GetParam());
  std::mt19937 rng(13 * GetParam());
  int inverted = 0;
  for (int t = 0; t < 40; ++t) {
    const MatGF m = random_matrix(f, 3, 3, rng, 0.7);
    const auto inv = qdm::inverse(m);
    EXPECT_EQ(inv.has_value(), qdm::rank(m) == 3);
    if (!inv) continue;
    ++inverted;
    EXPECT_EQ(qdm::multiply(m, *inv), MatGF::identity(f, 3));
    EXPECT_EQ(qdm::multiply(*inv, m), MatGF::identity(f, 3));
  }
  EXPECT_GT(inverted, 0);
}

INSTANTIATE_TEST_SUITE_P(Fields, Linalg, ::testing::Values(2u, 3u, 4u, 5u, 8u, 9u));

TEST(Gf2, PackedMatchesGeneric) {
  const auto f2 = Field::make(2);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 9;
    const MatGF m = random_matrix(f2, 1 + t % 6, static_cast<std::size_t>(n), rng, 0.4);
    std::vector<qdm::gf2::Row> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      qdm::gf2::Row r = 0;
      for (int j = 0; j < n; ++j) {
        if (m(i, static_cast<std::size_t>(j))) r |= qdm::gf2::column_bit(n, j);
      }
      rows.push_back(r);
    }
    const auto packed = qdm::gf2::rref(rows, n);
    const qdm::Echelon generic = qdm::rref(m);
    ASSERT_EQ(packed.size(), generic.rank());
    for (std::size_t i = 0; i < packed.size(); ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ((packed[i] & qdm::gf2::column_bit(n, j)) != 0, generic.reduced(i, static_cast<std::size_t>(j)) == 1);
      }
    }
    const auto pk = qdm::gf2::kernel(rows, n);
    EXPECT_EQ(pk.size(), qdm::kernel(m).rows());
    for (auto v : pk) {
      for (auto r : rows) EXPECT_EQ(std::popcount(v & r) % 2, 0);
    }
    for (auto r : rows) EXPECT_EQ(qdm::gf2::reduce(packed, n, r), 0u);
  }
}

TEST(MatGF, Errors) {
  const auto f = Field::make(3);
  MatGF a(f, 2, 3), b(f, 2, 3);
  EXPECT_THROW(qdm::multiply(a, b), qdm::Error);
  EXPECT_THROW(a.set(0, 0, 3), qdm::Error);
  EXPECT_THROW(qdm::vstack(a, MatGF(Field::make(2), 1, 3)), qdm::Error);
}

}  // namespace
