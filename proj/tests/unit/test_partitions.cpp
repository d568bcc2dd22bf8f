#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "cmcells/errors.hpp"
#include "cmcells/partition.hpp"

using namespace cmcells;

TEST_SUITE("partitions") {

TEST_CASE("enumeration count matches the pentagonal recurrence") {
  auto p = oracle::partition_counts(20);
  CHECK(p[10] == 42);
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long long>(enumerate_partitions(n).size()) == p[n]);
  }
}

TEST_CASE("enumeration is strictly decreasing lexicographic") {
  auto all = enumerate_partitions(9);
  CHECK(all.front() == Partition{9});
  CHECK(all.back() == Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_partitions(41), EnumerationLimit);
  CHECK_NOTHROW(enumerate_partitions(12, 12));
  CHECK_THROWS_AS(enumerate_partitions(13, 12), EnumerationLimit);
  CHECK_THROWS_AS(enumerate_partitions(-1), InvalidParameter);
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Partition({1, 2}), InvalidParameter);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidParameter);
  CHECK_THROWS_AS(Partition({3, 1, 0}), InvalidParameter);
  CHECK(Partition::from_rows({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition{}.empty());
}

TEST_CASE("boxes, rows, columns, conjugate") {
  Partition lambda{4, 2, 1};
  CHECK(lambda.size() == 7);
  CHECK(lambda.contains({2, 2}));
  CHECK_FALSE(lambda.contains({2, 3}));
  CHECK_FALSE(lambda.contains({0, 1}));
  CHECK(lambda.column(1) == 3);
  CHECK(lambda.column(3) == 1);
  CHECK(lambda.conjugate() == Partition{3, 2, 1, 1});
  for (const auto& mu : enumerate_partitions(10)) CHECK(mu.conjugate().conjugate() == mu);
  CHECK(staircase(3) == Partition{3, 2, 1});
  CHECK(staircase(0).empty());
}

TEST_CASE("residues use row minus column") {
  CHECK(residue({1, 1}, 3).value == 0);
  CHECK(residue({1, 2}, 3).value == 2);
  CHECK(residue({2, 1}, 3).value == 1);
  CHECK(residue({5, 1}, 2).value == 0);
}

TEST_CASE("removable and addable boxes agree with a direct check") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      std::set<Box> rem, add;
      for (int p = 1; p <= lambda.length() + 1; ++p)
        for (int q = 1; q <= lambda.row(1) + 1; ++q) {
          if (oracle::removable(lambda, {p, q})) rem.insert({p, q});
          if (oracle::addable(lambda, {p, q})) add.insert({p, q});
        }
      auto r = removable_boxes(lambda);
      auto a = addable_boxes(lambda);
      CHECK(std::set<Box>(r.begin(), r.end()) == rem);
      CHECK(std::set<Box>(a.begin(), a.end()) == add);
      for (int ell = 2; ell <= 4; ++ell)
        for (int j = 0; j < ell; ++j)
          for (const Box& b : removable_boxes(lambda, ResidueClass(j, ell))) CHECK(oracle::res(b, ell) == j);
    }
  }
}

TEST_CASE("J-heart is independent of removal order") {
  std::size_t checked = 0;
  for (int ell = 2; ell <= 4; ++ell) {
    for (int mask = 0; mask < (1 << ell); ++mask) {
      std::vector<bool> inJ(ell);
      std::vector<int> members;
      for (int j = 0; j < ell; ++j)
        if (mask >> j & 1) {
          inJ[j] = true;
          members.push_back(j);
        }
      TypeJ J(ell, members);
      for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
          std::set<Partition> seen, leaves;
          oracle::heart_leaves(lambda, inJ, ell, seen, leaves);
          REQUIRE(leaves.size() == 1);
          CHECK(*leaves.begin() == j_heart(lambda, J));
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 139 * (4 + 8 + 16));
}

TEST_CASE("J-heart small cases") {
  CHECK(j_heart(Partition{2, 1}, TypeJ::single(0, 2)) == Partition{2, 1});
  CHECK(j_heart(Partition{4}, TypeJ::single(1, 2)) == Partition{3});
  CHECK(j_heart(Partition{3, 1}, TypeJ::single(1, 2)) == Partition{3});
  CHECK(j_heart(Partition{5, 3, 1}, TypeJ(3, {0, 1, 2})).empty());
  CHECK(j_heart(Partition{5, 3, 1}, TypeJ(3)) == Partition{5, 3, 1});
  CHECK(same_j_class(Partition{3, 1}, Partition{2, 1, 1}, TypeJ::single(0, 2)));
}

}
