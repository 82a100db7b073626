#include <gtest/gtest.h>

#include <sstream>

#include "qdm/error.hpp"
#include "qdm/tools/corpus.hpp"
#include "qdm/tools/reproductions.hpp"
#include "qdm/tools/search.hpp"

namespace {

using namespace qdm;
using namespace qdm::tools;

TEST(Reproductions, IdsAreUniqueAndFindable) {
  std::set<std::string> ids;
  for (const Reproduction& r : reproductions()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_EQ(&find_reproduction(r.id), &r);
  }
  EXPECT_EQ(ids.size(), 10u);
  try {
    find_reproduction("no-such-case");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownCase);
  }
}

// restriction-fails is checked by the acceptance suite, where it does not
// reproduce; every other case must.
TEST(Reproductions, Outcomes) {
  for (const Reproduction& r : reproductions()) {
    std::ostringstream trace;
    const bool ok = r.run(trace, 0);
    if (r.id == "restriction-fails") {
      EXPECT_FALSE(ok) << trace.str();
    } else {
      EXPECT_TRUE(ok) << r.id << "\n" << trace.str();
    }
    EXPECT_FALSE(trace.str().empty());
  }
}

TEST(Corpus, Shape) {
  const Corpus c = build_corpus(Ambient::make(Field::make(2), 4));
  EXPECT_EQ(c.qmatroids.size(), 13u);
  EXPECT_EQ(c.codes.size(), 6u);
  EXPECT_EQ(c.strong_pairs.size(), 24u);
  EXPECT_EQ(c.deltas.size(), 65u);
  try {
    build_corpus(Ambient::make(Field::make(2), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsupportedAmbient);
  }
}

TEST(Search, DeterministicPerSeed) {
  for (SearchTarget target : {SearchTarget::kF3F4VsQG, SearchTarget::kUpperLowerStrong}) {
    SearchOptions opt;
    opt.target = target;
    opt.budget = 300;
    opt.seed = 7;
    const SearchResult a = run_search(opt), b = run_search(opt);
    EXPECT_EQ(a.iterations, b.iterations);
    EXPECT_EQ(a.tested, b.tested);
    EXPECT_EQ(a.detail, b.detail);
    EXPECT_EQ(a.counterexample.has_value(), b.counterexample.has_value());
    EXPECT_LE(a.iterations, opt.budget);
    EXPECT_GT(a.tested, 0u);
  }
}

TEST(Search, SmallAmbients) {
  for (int n = 2; n <= 3; ++n) {
    SearchOptions opt;
    opt.budget = 200;
    opt.seed = 3;
    opt.n = n;
    EXPECT_FALSE(run_search(opt).counterexample.has_value()) << n;
  }
}

TEST(Search, Errors) {
  auto code_of = [](const SearchOptions& opt) {
    try {
      run_search(opt);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInternalInconsistency;
  };
  SearchOptions opt;
  EXPECT_EQ(code_of(opt), Errc::kBudgetZero);
  opt.budget = 5;
  opt.n = 6;
  EXPECT_EQ(code_of(opt), Errc::kUnsupportedAmbient);
  EXPECT_EQ(parse_search_target("f3f4-vs-qg"), SearchTarget::kF3F4VsQG);
  EXPECT_EQ(search_target_name(parse_search_target("upper-lower-strong")), "upper-lower-strong");
  EXPECT_THROW(parse_search_target("nope"), Error);
}

}  // namespace
