#include <gtest/gtest.h>

#include <algorithm>

#include "rootbound/domains.hpp"
#include "rootbound/serialize.hpp"
#include "support/brute_force.hpp"

namespace rootbound {
namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& text) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

RootSet crossing(const RootSet& roots, int p) {
  RootSet out;
  for (const Root& r : roots) {
    int first_block = 0;
    for (int i = 0; i < p; ++i) first_block += r[static_cast<std::size_t>(i)];
    if (first_block != 0) out.insert(r);
  }
  return out;
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(SuSpec{2, 1, 1, 1}).empty());
  EXPECT_TRUE(mentions(validate(SuSpec{2, 1, 3, 0}), "r exceeds p"));
  EXPECT_TRUE(mentions(validate(SpSpec{3, 2, 1}), "p + q must be less than n"));
}

TEST(Validate, EdgeCases) {
  EXPECT_TRUE(mentions(validate(SuSpec{0, 1, 0, 1}), "p must be positive"));
  EXPECT_TRUE(mentions(validate(SuSpec{2, 1, 2, 1}), "[1, n-1]"));
  EXPECT_TRUE(mentions(validate(SuSpec{2, 1, 0, 0}), "[1, n-1]"));
  EXPECT_TRUE(mentions(validate(SuSpec{2, 1, -1, 1}), "non-negative"));
  EXPECT_TRUE(mentions(validate(SpSpec{3, 0, 0}), "at least 1"));
  EXPECT_TRUE(mentions(validate(SpSpec{3, -1, 2}), "non-negative"));
  EXPECT_TRUE(validate(SpSpec{2, 1, 0}).empty());
  EXPECT_THROW(partition(SpSpec{3, 2, 1}), std::invalid_argument);
  EXPECT_THROW(k_roots(SuSpec{1, 1, 2, 0}), std::invalid_argument);
}

TEST(BasePoint, CoordinateDescription) {
  const auto su = base_point(SuSpec{2, 1, 1, 1});
  EXPECT_EQ(su.index_set, (std::vector<int>{0, 2}));
  const auto sp = base_point(SpSpec{5, 2, 2});
  EXPECT_EQ(sp.plus_indices, (std::vector<int>{0, 1}));
  EXPECT_EQ(sp.conj_indices, (std::vector<int>{3, 4}));
}

TEST(KRoots, Examples) {
  EXPECT_EQ(k_roots(SuSpec{2, 1, 1, 0}), (RootSet{{1, -1, 0}, {-1, 1, 0}}));
  EXPECT_TRUE(k_roots(SuSpec{1, 1, 1, 0}).empty());
  const RootSet sp = k_roots(SpSpec{3, 1, 1});
  EXPECT_EQ(sp.size(), 6u);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      if (j != k) EXPECT_TRUE(sp.contains(Root::difference(3, j, k)));
}

TEST(Q0Roots, SpThreeOneOne) {
  const RootSet q0 = q0_roots(SpSpec{3, 1, 1});
  RootSet plus, minus;
  for (const Root& r : q0) {
    const auto& c = r.coeffs();
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) plus.insert(r);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; })) minus.insert(r);
  }
  EXPECT_EQ(plus, (RootSet{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}}));
  EXPECT_EQ(minus, (RootSet{{0, -2, 0}, {0, -1, -1}, {0, 0, -2}, {-1, 0, -1}}));
}

TEST(Q0Roots, SuCrossingRoots) {
  EXPECT_EQ(crossing(q0_roots(SuSpec{2, 1, 1, 1}), 2), (RootSet{{1, 0, -1}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST(Partition, SpThreeOneOne) {
  const auto part = partition(SpSpec{3, 1, 1});
  EXPECT_EQ(part.lambda_u_minus, (RootSet{{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
  EXPECT_EQ(part.phi, (RootSet{{0, 1, 1}, {0, 0, 2}, {-2, 0, 0}, {-1, -1, 0}}));
  EXPECT_FALSE(is_convex_degenerate(part));
}

TEST(Partition, SuTwoOneOneOne) {
  const auto part = partition(SuSpec{2, 1, 1, 1});
  EXPECT_EQ(part.lambda_u_minus, (RootSet{{-1, 1, 0}}));
  EXPECT_EQ(part.gamma, (RootSet{{1, 0, -1}, {-1, 0, 1}, {0, -1, 1}}));
  EXPECT_EQ(part.phi, (RootSet{{0, 1, -1}}));
  EXPECT_FALSE(is_convex_degenerate(part));
}

TEST(Partition, FullPositiveBlockIsDegenerate) {
  // r = p leaves the A block with no rows; r' = 0 leaves B with no columns.
  for (int p = 1; p <= 4; ++p)
    for (int pp = 1; pp <= 3; ++pp) {
      const auto part = partition(SuSpec{p, pp, p, 0});
      EXPECT_TRUE(part.lambda_u_minus.empty());
      EXPECT_TRUE(is_convex_degenerate(part));
    }
  EXPECT_TRUE(is_convex_degenerate(partition(SuSpec{2, 1, 2, 0})));
}

TEST(Partition, InvariantsOverRange) {
  auto specs = su_range(7);
  const auto sp = sp_range(6);
  specs.insert(specs.end(), sp.begin(), sp.end());
  ASSERT_FALSE(specs.empty());
  for (const auto& spec : specs) {
    SCOPED_TRACE(label(spec));
    const auto part = partition(spec);
    EXPECT_EQ(part.lambda_k.size() + part.gamma.size() + part.phi.size(), part.system.size());
    for (const Root& b : part.lambda_u_minus) {
      EXPECT_TRUE(part.lambda_k.contains(b));
      EXPECT_FALSE(part.lambda_q0.contains(b));
    }
    for (const Root& g : part.gamma) EXPECT_FALSE(part.phi.contains(g));
    EXPECT_EQ(is_convex_degenerate(part), part.lambda_u_minus.empty());
    if (const auto* s = std::get_if<SuSpec>(&spec)) {
      const auto expected = s->r * (s->p - s->r) + s->r_prime * (s->p_prime - s->r_prime);
      EXPECT_EQ(part.lambda_u_minus.size(), static_cast<std::size_t>(expected));
    }
  }
}

TEST(Partition, SpMatchesDisplayedIndexRanges) {
  for (const auto& spec : sp_range(7)) {
    const auto& s = std::get<SpSpec>(spec);
    SCOPED_TRACE(label(spec));
    const auto part = partition(spec);
    const auto lists = testing::sp_displayed_lists(s.n, s.p, s.q);
    RootSet plus, minus;
    for (const Root& r : part.lambda_q0) {
      const auto& c = r.coeffs();
      if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) plus.insert(r);
      if (std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; })) minus.insert(r);
    }
    EXPECT_EQ(plus, lists.s_plus_q0);
    EXPECT_EQ(minus, lists.s_minus_q0);
    EXPECT_EQ(part.lambda_u_minus, lists.u_minus);
  }
}

TEST(Partition, JsonSchema) {
  const Json doc = partition_json(partition(SpSpec{3, 1, 1}));
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"lambda_k", "lambda_q0", "lambda_u_minus", "gamma", "phi"}));
  EXPECT_EQ(doc["lambda_u_minus"].dump(), "[[-1,0,1],[-1,1,0],[0,-1,1]]");
}

TEST(Ranges, SortedAndValid) {
  const auto su = su_range(4);
  EXPECT_TRUE(std::is_sorted(su.begin(), su.end()));
  for (const auto& s : su) EXPECT_TRUE(validate(s).empty());
  EXPECT_TRUE(su_range(1).empty());
  EXPECT_EQ(sp_range(3).size(), 7u);
}

}  // namespace
}  // namespace rootbound
