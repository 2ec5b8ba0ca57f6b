#include <catch2/catch_amalgamated.hpp>

#include <skewschur/enumerate.hpp>
#include <skewschur/partition.hpp>

using namespace skewschur;

TEST_CASE("partition construction and canonical form") {
  CHECK(Partition{3, 2, 2, 0, 0} == Partition{3, 2, 2});
  CHECK(Partition{}.empty());
  CHECK(Partition{4, 3, 3, 1}.size() == 11);
  CHECK(Partition{4, 3, 3, 1}.length() == 4);
  CHECK(Partition{4, 3}[0] == 4);
  CHECK(Partition{4, 3}[5] == 0);  // padded access
  CHECK_THROWS_AS((Partition{2, 3}), domain_error);
  CHECK_THROWS_AS((Partition{2, -1}), domain_error);
  CHECK_THROWS_AS((Partition{2, 0, 1}), domain_error);
}

TEST_CASE("containment") {
  CHECK(Partition{3, 2, 1}.contains(Partition{2, 2}));
  CHECK(Partition{3, 2, 1}.contains(Partition{}));
  CHECK_FALSE(Partition{3, 2, 1}.contains(Partition{2, 2, 2}));
  CHECK_FALSE(Partition{3, 2}.contains(Partition{1, 1, 1}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  for_each_partition_upto(8, [](const Partition& p) {
    CHECK(conjugate(conjugate(p)) == p);
  });
}

TEST_CASE("rectangle complement") {
  CHECK(complement_in_rectangle(Partition{2, 1}, 2, 3) == Partition{2, 1});
  CHECK(complement_in_rectangle(Partition{}, 2, 2) == Partition{2, 2});
  CHECK(complement_in_rectangle(Partition{2, 2}, 2, 2) == Partition{});
  CHECK_THROWS_AS(complement_in_rectangle(Partition{3}, 2, 2), domain_error);
  CHECK_THROWS_AS(complement_in_rectangle(Partition{1, 1, 1}, 2, 2), domain_error);
  // involution, and sizes add up to the rectangle
  for_each_partition_upto(6, [](const Partition& p) {
    int rows = p.length() + 1, cols = p[0] + 2;
    Partition c = complement_in_rectangle(p, rows, cols);
    CHECK(c.size() + p.size() == static_cast<int64_t>(rows) * cols);
    CHECK(complement_in_rectangle(c, rows, cols) == p);
  });
}

TEST_CASE("fat staircase from a composition") {
  CHECK(fat_staircase(Composition{2, 2, 2}) == Partition{3, 3, 2, 2, 1, 1});
  CHECK(fat_staircase(Composition{1, 1, 1}) == Partition{3, 2, 1});
  CHECK(fat_staircase(Composition{1, 1, 3, 1, 2, 1}) == Partition{6, 5, 5, 4, 3, 3, 3, 2, 1});
  CHECK(fat_staircase(Composition{3, 1, 2, 3}) == Partition{4, 4, 4, 3, 3, 2, 1, 1, 1});
  CHECK_THROWS_AS(fat_staircase(Composition{}), domain_error);
}

TEST_CASE("recognising fat staircases") {
  CHECK(as_fat_staircase(Partition{3, 3, 2, 2, 1, 1}) == Composition{2, 2, 2});
  CHECK(as_fat_staircase(Partition{3, 2, 1, 1}) == Composition{2, 1, 1});
  CHECK_FALSE(as_fat_staircase(Partition{3, 3, 1}).has_value());  // no part equal to 2
  CHECK_FALSE(as_fat_staircase(Partition{2, 2}).has_value());     // no part equal to 1
  CHECK_FALSE(as_fat_staircase(Partition{}).has_value());
  for_each_composition_upto(6, [](const Composition& alpha) {
    auto back = as_fat_staircase(fat_staircase(alpha));
    REQUIRE(back.has_value());
    CHECK(*back == alpha);
  });
}

TEST_CASE("complement composition") {
  CHECK(complement_composition(Composition{2, 2, 2}, 3) == Composition{2, 2});
  CHECK(complement_composition(Composition{1, 2, 3}, 4) == Composition{3, 2, 1});
  CHECK_THROWS_AS(complement_composition(Composition{1, 2}, 4), domain_error);
  CHECK_THROWS_AS(complement_composition(Composition{2}, 1), domain_error);
  // the defining property: its staircase is the rectangle complement
  for_each_composition_upto(6, [](const Composition& alpha) {
    int n = alpha.length();
    int rows = static_cast<int>(alpha.size());
    for (int w : {n, n + 1}) {
      if (w == n && n < 2) continue;
      Partition expect = complement_in_rectangle(fat_staircase(alpha), rows, w);
      CHECK(fat_staircase(complement_composition(alpha, w)) == expect);
    }
  });
}

TEST_CASE("admissible first-row values") {
  CHECK(admissible_row_values(Composition{2, 2, 1}, 2) == std::vector<int>{1, 2, 4, 6});
  CHECK(admissible_row_values(Composition{1, 1, 1}, 0) == std::vector<int>{2, 3, 4});
  CHECK(admissible_row_values(Composition{3}, 1) == std::vector<int>{1, 4});
  CHECK(admissible_row_values(Composition{1, 3}, 1) == std::vector<int>{1, 4, 5});
  CHECK_THROWS_AS(admissible_row_values(Composition{1}, -1), domain_error);
}

TEST_CASE("expansion display order is descending lexicographic") {
  LexDesc less;
  CHECK(less(Partition{3, 3, 2, 1, 1}, Partition{3, 2, 2, 2, 1}));
  CHECK(less(Partition{3, 2, 2, 2, 1}, Partition{3, 2, 2, 1, 1, 1}));
  CHECK(less(Partition{2, 2}, Partition{2, 1, 1}));
  CHECK_FALSE(less(Partition{2, 2}, Partition{2, 2}));
}
