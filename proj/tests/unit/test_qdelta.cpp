#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qdm/error.hpp"
#include "qdm/qg.hpp"
#include "qdm/tools/corpus.hpp"

namespace {

using namespace qdm;
using oracle::PrimeSpace;
using oracle::Space;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternalInconsistency;
}

std::set<Space> to_oracle(const PrimeSpace& sp, const Family& f) {
  std::set<Space> out;
  for (SubspaceId id : f.ids()) out.insert(sp.of_lattice(f.lattice(), id));
  return out;
}

Family random_family(const LatticePtr& lat, std::mt19937& rng, double density) {
  std::bernoulli_distribution keep(density);
  Family f(lat);
  for (SubspaceId id : lat->all()) {
    if (keep(rng)) f.insert(id);
  }
  if (f.empty()) f.insert(lat->zero());
  return f;
}

TEST(ExchangeAxioms, CountsMatchLiteralOracleOnF2Cubed) {
  const LatticePtr lat = Lattice::build(Field::make(2), 3);
  const PrimeSpace sp{2, 3};
  const oracle::ExchangeOracle ref(sp);
  std::mt19937 rng(17);
  int deltas = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Family f = random_family(lat, rng, 0.1 + 0.8 * (trial % 9) / 8.0);
    const auto of = to_oracle(sp, f);
    const std::size_t weak = ref.violations(of, false);
    const std::size_t strong = ref.violations(of, true);
    ASSERT_EQ(count_f1f2_violations(f), weak);
    ASSERT_EQ(count_f3f4_violations(f), strong);
    const AxiomReport r12 = check_f1f2(f);
    EXPECT_EQ(static_cast<bool>(r12), weak == 0);
    if (strong == 0) EXPECT_EQ(weak, 0u) << "(F3)(F4) implies (F1)(F2)";
    deltas += weak == 0;
    if (!r12) {
      const Exchange axiom = r12.axiom == "F1" ? Exchange::kF1 : Exchange::kF2;
      EXPECT_FALSE(exchange_holds(f, axiom, *r12.role("X"), *r12.role("Y"), *r12.role("A")));
      EXPECT_TRUE(f.contains(*r12.role("X")) && f.contains(*r12.role("Y")));
    }
  }
  EXPECT_GT(deltas, 0);
}

TEST(ExchangeAxioms, CountsMatchLiteralOracleOnF2Fourth) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  const PrimeSpace sp{2, 4};
  const oracle::ExchangeOracle ref(sp);
  std::vector<Family> families;
  families.push_back(spread_delta(amb).feasible());
  families.push_back(even_dims_delta(amb).feasible());
  const auto ce = tools::counterexample_pair(amb);
  families.push_back(weak_qg_family(QGPair::make(ce.upper, ce.lower, Certificate::kWeak)));
  std::mt19937 rng(23);
  for (int i = 0; i < 6; ++i) families.push_back(random_family(amb->lattice_ptr(), rng, 0.1 + 0.05 * i));
  for (const Family& f : families) {
    const auto of = to_oracle(sp, f);
    EXPECT_EQ(count_f1f2_violations(f), ref.violations(of, false));
    EXPECT_EQ(count_f3f4_violations(f), ref.violations(of, true));
  }
}

TEST(ExchangeAxioms, WitnessIndependentOfThreads) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  std::mt19937 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Family f = random_family(amb->lattice_ptr(), rng, 0.3);
    const AxiomReport one = check_f1f2(f, 1);
    for (unsigned t : {2u, 3u, 8u}) {
      const AxiomReport many = check_f1f2(f, t);
      EXPECT_EQ(one.pass, many.pass);
      EXPECT_EQ(one.axiom, many.axiom);
      EXPECT_EQ(one.witness, many.witness);
    }
  }
}

class QDeltaCorpus : public ::testing::Test {
 protected:
  void SetUp() override {
    amb = Ambient::make(Field::make(2), 4);
    corpus = tools::build_corpus(amb);
  }
  const Lattice& lat() const { return amb->lattice(); }
  AmbientPtr amb;
  tools::Corpus corpus;
};

TEST_F(QDeltaCorpus, EveryMemberSatisfiesTheAxioms) {
  for (const auto& [name, d] : corpus.deltas) EXPECT_TRUE(check_f1f2(d.feasible())) << name;
}

TEST_F(QDeltaCorpus, DualityUnderBothForms) {
  const AmbientPtr swapped = Ambient::make(amb->lattice_ptr(), tools::exchange_form());
  for (const tools::Corpus& c : {corpus, tools::build_corpus(swapped)}) {
    for (const auto& [name, d] : c.deltas) {
      const QDeltaMatroid star = dual(d);
      EXPECT_EQ(dual(star), d) << name;
      EXPECT_TRUE(check_f1f2(star.feasible())) << name;
    }
  }
}

TEST_F(QDeltaCorpus, UpperAndLower) {
  for (const auto& [name, d] : corpus.deltas) {
    const UpperLower ul = upper_lower(d);
    EXPECT_TRUE(validate(ul.upper)) << name;
    EXPECT_TRUE(validate(ul.lower)) << name;
    EXPECT_EQ(derived(ul.upper).bases, d.feasible().with_dim(d.feasible().max_dim())) << name;
    EXPECT_EQ(derived(ul.lower).bases, d.feasible().with_dim(d.feasible().min_dim())) << name;
  }
  const UpperLower spread = upper_lower(spread_delta(amb));
  EXPECT_EQ(spread.upper, QMatroid::uniform(amb, 4));
  EXPECT_EQ(spread.lower, QMatroid::uniform(amb, 0));
}

TEST_F(QDeltaCorpus, RankIdentities) {
  const int n = lat().n();
  for (const auto& [name, d] : corpus.deltas) {
    const QDeltaMatroid star = dual(d);
    const UpperLower ul = upper_lower(d);
    for (SubspaceId a : lat().all()) {
      const int rho = rank_delta(d, a);
      EXPECT_EQ(rho == n, d.is_feasible(a)) << name;
      EXPECT_EQ(rank_delta(star, amb->perp(a)), rho) << name;
      EXPECT_EQ(birank(d, a, amb->perp(a)) == n, d.is_feasible(a)) << name;
      int best = 0;
      for (SubspaceId f : d.feasible().ids()) {
        best = std::max(best, n - (lat().dim(a) + lat().dim(f) - 2 * lat().dim(lat().meet(a, f))));
      }
      EXPECT_EQ(rho, best);
    }
    EXPECT_EQ(ul.upper.full_rank(), rank_delta(d, lat().full())) << name;
    EXPECT_EQ(dual(ul.lower).full_rank(), rank_delta(d, lat().zero())) << name;
  }
  EXPECT_EQ(code_of([&] { birank(corpus.deltas[0].value, lat().full(), lat().full()); }), Errc::kNotOrthogonal);
}

TEST_F(QDeltaCorpus, FromQMatroidFamilies) {
  for (const auto& [name, m] : corpus.qmatroids) {
    const DerivedFamilies d = derived(m);
    EXPECT_EQ(from_qmatroid(m, FamilyKind::kBases).feasible(), d.bases);
    EXPECT_EQ(from_qmatroid(m, FamilyKind::kIndependents).feasible(), d.independents);
    EXPECT_EQ(from_qmatroid(m, FamilyKind::kSpanning).feasible(), d.spanning);
  }
}

TEST_F(QDeltaCorpus, SaturationFollowsFromStrongAxioms) {
  std::mt19937 rng(31);
  std::vector<Family> families;
  for (const auto& [name, d] : corpus.deltas) families.push_back(d.feasible());
  for (int i = 0; i < 100; ++i) families.push_back(random_family(amb->lattice_ptr(), rng, 0.05 + 0.009 * i));
  int strong = 0;
  for (const Family& f : families) {
    if (!check_f3f4(f)) continue;
    ++strong;
    EXPECT_TRUE(is_saturated(f));
  }
  EXPECT_GT(strong, 0);
  const AxiomReport even = is_saturated(even_dims_delta(amb).feasible());
  ASSERT_FALSE(even);
  EXPECT_TRUE(lat().contains(*even.role("X"), *even.role("Z")));
  EXPECT_TRUE(lat().contains(*even.role("Z"), *even.role("Y")));
}

TEST_F(QDeltaCorpus, SpreadPartitionsNonzeroVectors) {
  for (std::uint32_t p : {2u, 3u}) {
    const LatticePtr l = Lattice::build(Field::make(p), 4);
    const Family lines = desarguesian_spread(l);
    EXPECT_EQ(lines.size(), p * p + 1);
    std::map<std::uint64_t, int> hits;
    const PrimeSpace sp{p, 4};
    for (SubspaceId id : lines.ids()) {
      EXPECT_EQ(l->dim(id), 2);
      for (auto v : sp.of_lattice(*l, id)) ++hits[v];
    }
    for (std::uint64_t v = 1; v < sp.size(); ++v) EXPECT_EQ(hits[v], 1);
    EXPECT_TRUE(characterize_dim4(lines));
  }
}

TEST_F(QDeltaCorpus, CoveringCharacterization) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    std::bernoulli_distribution keep(0.05 + 0.9 * (trial % 10) / 9.0);
    Family lines(amb->lattice_ptr());
    for (SubspaceId id : lat().of_dim(2)) {
      if (keep(rng)) lines.insert(id);
    }
    bool covers = true;
    for (SubspaceId x : lat().points()) {
      bool hit = false;
      for (SubspaceId d : lines.ids()) hit |= lat().contains(d, x);
      covers &= hit;
    }
    for (SubspaceId t : lat().of_dim(3)) {
      bool hit = false;
      for (SubspaceId d : lines.ids()) hit |= lat().contains(t, d);
      covers &= hit;
    }
    EXPECT_EQ(characterize_dim4(lines), covers);
  }
  EXPECT_EQ(code_of([&] { characterize_dim4(Family::of_dims(amb->lattice_ptr(), {1})); }), Errc::kWrongDimensions);
  const LatticePtr l3 = Lattice::build(Field::make(2), 3);
  EXPECT_EQ(code_of([&] { characterize_dim4(Family(l3)); }), Errc::kUnsupportedAmbient);
}

TEST_F(QDeltaCorpus, EvenDimensionsFailStrongAxioms) {
  const Family even = even_dims_delta(amb).feasible();
  EXPECT_TRUE(check_f1f2(even));
  const AxiomReport r = check_f3f4(even);
  ASSERT_FALSE(r);
  EXPECT_FALSE(exchange_holds(even, r.axiom == "F3" ? Exchange::kF3 : Exchange::kF4, *r.role("X"), *r.role("Y"),
                              *r.role("A")));
}

TEST_F(QDeltaCorpus, WeakFamilyFailsAtTheNamedTriple) {
  const auto ce = tools::counterexample_pair(amb);
  const Family weak = weak_qg_family(QGPair::make(ce.upper, ce.lower, Certificate::kWeak));
  EXPECT_EQ(weak.size(), 47u);
  EXPECT_FALSE(check_f1f2(weak));
  const SubspaceId x = tools::unit_span(lat(), {1, 2, 4});
  const SubspaceId y = tools::unit_span(lat(), {1, 3});
  const SubspaceId a = tools::unit_span(lat(), {1, 2});
  EXPECT_FALSE(exchange_holds(weak, Exchange::kF1, x, y, a));
  const AxiomReport pair = check_exchange_pair(weak, Exchange::kF1, Exchange::kF2, x, y);
  EXPECT_EQ(pair.axiom, "F1");
  EXPECT_EQ(pair.role("A"), a);
}

// Restricting the spread family to a hyperplane T, written in coordinates
// of T. The members inside T fail F2 at A = T; the family of intersections
// with T contains T itself and so satisfies (iv) there, and in fact passes.
TEST_F(QDeltaCorpus, SpreadRestrictionCandidates) {
  const LatticePtr plane = Lattice::build(Field::make(2), 3);
  const PrimeSpace sp{2, 3};
  const oracle::ExchangeOracle ref(sp);
  const Family feasible = spread_delta(amb).feasible();
  for (SubspaceId t : lat().hyperplanes()) {
    const Family inside = coordinatize_family(feasible, t, plane);
    Family meets(amb->lattice_ptr());
    for (SubspaceId f : feasible.ids()) meets.insert(lat().meet(f, t));
    const Family cut = coordinatize_family(meets, t, plane);
    EXPECT_EQ(inside.size(), 2u);
    EXPECT_EQ(cut.size(), 7u);
    const AxiomReport r1 = check_f1f2(inside);
    ASSERT_FALSE(r1);
    EXPECT_EQ(r1.axiom, "F2");
    EXPECT_EQ(r1.role("A"), plane->full());
    EXPECT_EQ(r1.role("Y"), plane->zero());
    EXPECT_EQ(ref.violations(to_oracle(sp, cut), false), 0u);
    EXPECT_TRUE(check_f1f2(cut));
  }
}

TEST(QDeltaErrors, Codes) {
  const AmbientPtr amb = Ambient::make(Field::make(2), 4);
  const LatticePtr other = Lattice::build(Field::make(2), 3);
  EXPECT_EQ(code_of([&] { check_f1f2(Family(amb->lattice_ptr())); }), Errc::kEmptyFamily);
  EXPECT_EQ(code_of([&] { QDeltaMatroid::unchecked(amb, Family(amb->lattice_ptr())); }), Errc::kEmptyFamily);
  EXPECT_EQ(code_of([&] { QDeltaMatroid::unchecked(amb, Family::all(other)); }), Errc::kLatticeMismatch);
  const auto ce = tools::counterexample_pair(amb);
  const Family weak = weak_qg_family(QGPair::make(ce.upper, ce.lower, Certificate::kWeak));
  EXPECT_EQ(code_of([&] { QDeltaMatroid::checked(amb, weak); }), Errc::kNotAQDeltaMatroid);
  const Family two_lines = Family::from_ids(
      amb->lattice_ptr(), {tools::unit_span(amb->lattice(), {1, 2}), tools::unit_span(amb->lattice(), {3, 4})});
  EXPECT_EQ(code_of([&] { upper_lower(QDeltaMatroid::unchecked(amb, two_lines)); }), Errc::kNotAQDeltaMatroid);
  EXPECT_EQ(code_of([&] { desarguesian_spread(other); }), Errc::kUnsupportedAmbient);
  EXPECT_EQ(code_of([&] { desarguesian_spread(Lattice::build(Field::make(2, 2), 4)); }), Errc::kUnsupportedAmbient);
}

}  // namespace
