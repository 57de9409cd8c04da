#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apc/code_spec.hpp"
#include "apc/text_io.hpp"
#include "test_util.hpp"

using namespace apc;
using namespace apc::test;

TEST_CASE("binary matrix text round-trip") {
  const FieldMatrix m = mat2({{1, 0, 0, 1}, {0, 1, 1, 0}});
  const std::string text = format_matrix(m);
  CHECK(text == "1001\n0110\n");
  CHECK(parse_matrix(text, FieldSpec(2)) == m);
  CHECK(parse_matrix("1001\r\n0110\n\n", FieldSpec(2)) == m);
}

TEST_CASE("p > 2 uses space-separated digits") {
  FieldMatrix m(FieldSpec(3), 2, 3);
  m(0, 0) = 2;
  m(1, 2) = 1;
  const std::string text = format_matrix(m);
  CHECK(text == "2 0 0\n0 0 1\n");
  CHECK(parse_matrix(text, FieldSpec(3)) == m);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_matrix("10\n1", FieldSpec(2)), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("12", FieldSpec(2)), std::invalid_argument);
  CHECK_THROWS_AS(parse_vec("1e01", FieldSpec(2)), std::invalid_argument);
}

TEST_CASE("received words use e for erasures") {
  const Vec w = parse_received_vec("e0e1", FieldSpec(2));
  CHECK(w == Vec{kErased, 0, kErased, 1});
  const ReceivedMatrix m = parse_received("e0e1\n1111\n", FieldSpec(2));
  CHECK(m.rows() == 2);
  CHECK(m.erased(0, 0));
  CHECK_FALSE(m.erased(1, 0));
  CHECK(format_received(m, FieldSpec(2)) == "e0e1\n1111\n");
}

TEST_CASE("code specs parse into the named families") {
  const LinearCode ew = parse_code_spec({{"family", "even_weight"}, {"n", 4}});
  CHECK(ew.same_code_as(even_weight_code(4)));
  const LinearCode rm = parse_code_spec({{"family", "reed_muller_1"}, {"r", 3}});
  CHECK(rm.same_code_as(reed_muller_1_code(3)));
  const LinearCode rep = parse_code_spec({{"family", "repetition"}, {"n", 5}});
  CHECK(rep.same_code_as(repetition_code(5)));
  const LinearCode fs = parse_code_spec({{"family", "full_space"}, {"n", 3}});
  CHECK(fs.same_code_as(full_space_code(3)));

  const LinearCode gen = parse_code_spec({{"generator", "1111\n1010"}});
  CHECK(gen.dimension() == 2);
  CHECK(gen.contains(bits({0, 1, 0, 1})));

  const LinearCode ternary = parse_code_spec(
      {{"family", "repetition"}, {"n", 3}, {"field", {{"p", 3}}}});
  CHECK(ternary.field().p() == 3);

  CHECK_THROWS_AS(parse_code_spec({{"family", "golay"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_code_spec({{"n", 4}}), std::invalid_argument);
}

TEST_CASE("product specs: rows/cols with representatives") {
  const nlohmann::json j = {{"row", {{"generator", "1111\n1010"}}},
                            {"row_rep", "0011"},
                            {"col", {{"generator", "1111\n1010"}}},
                            {"col_rep", "0011"}};
  const ProductCode pc = parse_product_spec(j);
  CHECK(pc.kind() == ProductCode::Kind::ConstructionI);
  CHECK(pc.dimension() == 4);
  CHECK(pc.leader() ==
        mat2({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}));
}

TEST_CASE("product specs: classical when representatives are absent") {
  const nlohmann::json j = {{"row", {{"family", "even_weight"}, {"n", 4}}},
                            {"col", {{"family", "even_weight"}, {"n", 4}}}};
  const ProductCode pc = parse_product_spec(j);
  CHECK(pc.kind() == ProductCode::Kind::Classical);
  CHECK(pc.dimension() == 9);
}

TEST_CASE("product specs: construction IA") {
  const nlohmann::json j = {{"construction", "IA"},
                            {"c1", {{"family", "repetition"}, {"n", 8}}},
                            {"c2", {{"family", "reed_muller_1"}, {"r", 3}}},
                            {"d1", {{"family", "repetition"}, {"n", 8}}},
                            {"d2", {{"family", "reed_muller_1"}, {"r", 3}}}};
  const ProductCode pc = parse_product_spec(j);
  CHECK(pc.kind() == ProductCode::Kind::ConstructionIA);
  CHECK(pc.dimension() == 9);
  CHECK(looks_like_product_spec(j));
}

TEST_CASE("irregular specs") {
  const nlohmann::json chain = {{"family", "repetition"}, {"n", 4}};
  const nlohmann::json ew = {{"family", "even_weight"}, {"n", 4}};
  const nlohmann::json j = {{"rows", {chain, chain, ew, ew}},
                            {"cols", {chain, chain, ew, ew}},
                            {"row_rep", "0001"},
                            {"col_rep", "0001"}};
  const IrregularSpec spec = parse_irregular_spec(j);
  CHECK(spec.m() == 4);
  CHECK(spec.n() == 4);
  CHECK(dimension_bound(spec) == 2);
  CHECK(spec.has_reps());
  CHECK(looks_like_irregular_spec(j));
  CHECK_FALSE(looks_like_product_spec(j));
}
