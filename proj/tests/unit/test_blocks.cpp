#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "cmcells/blocks.hpp"
#include "cmcells/errors.hpp"

using namespace cmcells;

namespace {

std::set<Partition> images(const BlockPartition& bp, const Block& block) {
  std::set<Partition> out;
  const auto& e = bp.reduction.element;
  for (const auto& mp : block.members) out.insert(tau(e.translation(), permute_components(e.permutation(), mp)));
  return out;
}

bool all_singletons(const BlockPartition& bp) {
  return std::all_of(bp.blocks.begin(), bp.blocks.end(), [](const Block& b) { return b.members.size() == 1; });
}

}  // namespace

TEST_SUITE("cm_blocks") {

TEST_CASE("c_s = c_t, n = 2") {
  auto bp = cm_partition_from_c_type_B(1, 1, 2);
  auto stats = block_statistics(bp);
  CHECK(stats.sizes == std::vector<std::size_t>{3, 1, 1});
  CHECK(stats.total == 5);
  CHECK(bp.reduction.type == TypeJ::single(0, 2));
  auto heart21 = std::find_if(bp.blocks.begin(), bp.blocks.end(),
                              [](const Block& b) { return b.heart == Partition{2, 1}; });
  REQUIRE(heart21 != bp.blocks.end());
  CHECK(images(bp, *heart21) == std::set<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(heart21->members.size() == 3);
}

TEST_CASE("blocks partition P(ell, n)") {
  for (int ell = 2; ell <= 4; ++ell)
    for (int n = 0; n <= 4; ++n) {
      std::vector<Rational> c(ell, Rational(0));
      c[0] = 1;
      auto bp = cm_partition(ell, n, ThetaPoint(c));
      std::set<Multipartition> seen;
      for (const auto& b : bp.blocks)
        for (const auto& mp : b.members) CHECK(seen.insert(mp).second);
      CHECK(static_cast<long long>(seen.size()) == oracle::multipartition_count(ell, n));
      std::set<Partition> hearts;
      for (const auto& b : bp.blocks) CHECK(hearts.insert(b.heart).second);
    }
}

TEST_CASE("generic parameters give singleton blocks") {
  std::mt19937_64 rng(oracle::seed());
  std::uniform_int_distribution<int> num(-60, 60);
  int generic = 0;
  while (generic < 50) {
    int ell = 2 + generic % 3;
    int n = 1 + generic % 4;
    std::int64_t den = 7 + generic % 5;
    std::vector<Rational> c;
    Rational sum(0);
    for (int k = 0; k + 1 < ell; ++k) {
      c.emplace_back(num(rng), den);
      sum += c.back();
    }
    c.push_back(Rational(1) - sum);
    ThetaPoint theta(c);
    if (!reduce_to_fundamental(theta).type.empty()) continue;
    CAPTURE(theta.str());
    CHECK(all_singletons(cm_partition(ell, n, theta)));
    ++generic;
  }
}

TEST_CASE("type B: non-integral c_t/c_s is trivial") {
  std::mt19937_64 rng(oracle::seed() + 1);
  std::uniform_int_distribution<int> d(-30, 30);
  int checked = 0;
  while (checked < 60) {
    Rational c_s(d(rng), 1 + checked % 6), c_t(d(rng), 1 + checked % 4);
    if (c_s == Rational(0) || c_t == Rational(0) || (c_t / c_s).is_integer()) continue;
    CAPTURE(c_s.str());
    CAPTURE(c_t.str());
    CHECK(all_singletons(cm_partition_from_c_type_B(c_s, c_t, 1 + checked % 4)));
    ++checked;
  }
  CHECK_THROWS_AS(cm_partition_from_c_type_B(0, 1, 2), InvalidParameter);
}

TEST_CASE("walls: both adjacent alcoves give one set partition") {
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      auto variants = cm_partitions_adjacent(2, n, ThetaPoint({Rational(-r), Rational(r + 1)}));
      REQUIRE(variants.size() == 2);
      CHECK(variants[0].index_classes() == variants[1].index_classes());
      CHECK(variants[0].reduction.element != variants[1].reduction.element);
    }
}

TEST_CASE("higher-codimension faces: every adjacent alcove agrees") {
  for (int n = 1; n <= 3; ++n) {
    auto variants = cm_partitions_adjacent(3, n, ThetaPoint({1, 0, 0}));
    REQUIRE(variants.size() == 6);
    for (const auto& v : variants) CHECK(v.index_classes() == variants[0].index_classes());
  }
}

TEST_CASE("worker count does not change the result") {
  ThetaPoint theta({Rational(1, 2), Rational(1, 2), 0});
  auto one = cm_partition(3, 4, theta, BlockOptions{kDefaultMaxPartitionSize, kDefaultMaxMultipartitions, 1});
  auto many = cm_partition(3, 4, theta, BlockOptions{kDefaultMaxPartitionSize, kDefaultMaxMultipartitions, 4});
  CHECK(one.index_classes() == many.index_classes());
  REQUIRE(one.blocks.size() == many.blocks.size());
  for (std::size_t i = 0; i < one.blocks.size(); ++i) CHECK(one.blocks[i].heart == many.blocks[i].heart);
}

TEST_CASE("enumeration limits surface as EnumerationLimit") {
  CHECK_THROWS_AS(cm_partition(4, 30, ThetaPoint({1, 0, 0, 0}), BlockOptions{10}), EnumerationLimit);
}

}
