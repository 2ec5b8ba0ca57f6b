#include <catch2/catch_amalgamated.hpp>

#include <skewschur/encode.hpp>
#include <skewschur/enumerate.hpp>

using namespace skewschur;
using nlohmann::json;

TEST_CASE("partition text round trip") {
  CHECK(parse_partition("-").empty());
  CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
  CHECK(parse_partition("3,2,0") == Partition{3, 2});
  CHECK(print_partition(Partition{3, 2, 1}) == "3,2,1");
  CHECK(print_partition(Partition()) == "-");
  for_each_partition_upto(8, [](const Partition& p) {
    REQUIRE(parse_partition(print_partition(p)) == p);
  });
  CHECK_THROWS_AS(parse_partition(""), parse_error);
  CHECK_THROWS_AS(parse_partition("3,"), parse_error);
  CHECK_THROWS_AS(parse_partition(",3"), parse_error);
  CHECK_THROWS_AS(parse_partition("3, 2"), parse_error);
  CHECK_THROWS_AS(parse_partition("a"), parse_error);
  CHECK_THROWS_AS(parse_partition("99999999999999999999"), parse_error);
  CHECK_THROWS_AS(parse_partition("2,3"), domain_error);
  CHECK_THROWS_AS(parse_partition("3,-1"), domain_error);
}

TEST_CASE("composition text round trip") {
  CHECK(parse_composition("1,3") == Composition{1, 3});
  CHECK(parse_composition("-").empty());
  CHECK(print_composition(Composition{1, 3}) == "1,3");
  CHECK(print_composition(Composition()) == "-");
  CHECK_THROWS_AS(parse_composition("0"), domain_error);
  CHECK_THROWS_AS(parse_composition("1,x"), parse_error);
}

TEST_CASE("skew shape text forms") {
  CHECK(parse_skew("3,3,2,2,1,1/2") == SkewDiagram(Partition{3, 3, 2, 2, 1, 1}, Partition{2}));
  CHECK(parse_skew("^2,2,2/2") == SkewDiagram(Partition{3, 3, 2, 2, 1, 1}, Partition{2}));
  CHECK(parse_skew("^^1,3") == rotated_fat_staircase(Composition{1, 3}));
  CHECK(parse_skew("3,1") == SkewDiagram(Partition{3, 1}, Partition()));
  CHECK(parse_skew("^1,1") == SkewDiagram(Partition{2, 1}, Partition()));
  CHECK(parse_skew("-/-").empty());
  CHECK(parse_skew("-").empty());
  CHECK_THROWS_AS(parse_skew("3/2/1"), parse_error);
  CHECK_THROWS_AS(parse_skew("^^1,2/1"), parse_error);
  CHECK_THROWS_AS(parse_skew("2/3"), domain_error);
  CHECK_THROWS_AS(parse_skew("^1,1/3"), domain_error);
  for_each_skew_shape(6, [](const SkewDiagram& d) {
    REQUIRE(parse_skew(print_skew(d)) == d);
  });
}

TEST_CASE("tableau text") {
  CHECK(print_tableau(Tableau{SkewDiagram(Partition{2, 2}, Partition{1}), {1, 1, 2}}) == "1;1,2");
  // Interior empty rows keep their separator.
  CHECK(print_tableau(Tableau{SkewDiagram(Partition{2, 1, 1}, Partition{1, 1}), {9, 8}}) ==
        "9;;8");
  CHECK(print_tableau(Tableau{}) == "");
}

TEST_CASE("json encodings") {
  CHECK(to_json(Partition{2, 1}) == json::array({2, 1}));
  CHECK(to_json(Partition()) == json::array());
  CHECK(to_json(Composition{1, 3}) == json::array({1, 3}));

  SchurExpansion f;
  f.add_term(Partition{2}, 1);
  f.add_term(Partition{1, 1}, -3);
  json jf = to_json(f);
  REQUIRE(jf.size() == 2);
  CHECK(jf[0] == json{{"partition", json::array({2})}, {"coeff", 1}});
  CHECK(jf[1] == json{{"partition", json::array({1, 1})}, {"coeff", -3}});
  CHECK(to_json(SchurExpansion()) == json::array());

  SkewDiagram hook(Partition{2, 2, 2, 2, 1}, Partition{1, 1});
  json jc = to_json(hook, classify_fat_sum(hook));
  CHECK(jc["instance"] == "2,2,2,2,1/1,1");
  CHECK(jc["verdict"] == "sum");
  CHECK(jc["decomposition"] ==
        json::array({json{{"alpha", json::array({1, 3})}, {"coeff", 1}},
                     json{{"alpha", json::array({3, 2})}, {"coeff", 1}}}));
  CHECK(jc["witness"].is_null());
  CHECK(jc["difference"].is_null());

  SkewDiagram block(Partition{2, 2}, Partition());
  json jb = to_json(block, classify_fat_sum(block));
  CHECK(jb["verdict"] == "not_sum");
  CHECK(jb["witness"] == "1,1;2,2");
  CHECK(jb["decomposition"].is_null());

  json jr = to_json("transpose 2/- over ^^2,2 at 1",
                    check_transpose_positivity(Partition{2}, Composition{2, 2}, 1));
  CHECK(jr["instance"] == "transpose 2/- over ^^2,2 at 1");
  CHECK(jr["verdict"] == "positive");
  CHECK(jr["difference"].is_array());
  CHECK(jr["lhs"].is_array());
  CHECK(jr["rhs"].is_array());

  json jl = to_json("layered", check_sum_of_diff(Partition{1}, hook));
  CHECK(jl["verdict"] == "positive");
  CHECK(jl["difference"] == json::array());  // the gap vanishes for a single box
  CHECK(jl["column_residual"].is_array());
}
