#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apc/errors.hpp"
#include "apc/irregular.hpp"
#include "apc/product_code.hpp"
#include "test_util.hpp"

#include <map>

using namespace apc;
using namespace apc::test;

namespace {

LinearCode span_j4_1010() {
  return LinearCode::from_span(mat2({{1, 1, 1, 1}, {1, 0, 1, 0}}));
}

// Nested 4x4 chains (<j>, <j>, even_weight, even_weight) on both axes with
// representatives (0,0,0,1).
IrregularSpec chain_spec(bool with_reps) {
  const LinearCode j4 = repetition_code(4);
  const LinearCode ew4 = even_weight_code(4);
  const std::vector<LinearCode> chain = {j4, j4, ew4, ew4};
  const Vec rep = with_reps ? bits({0, 0, 0, 1}) : bits({0, 0, 0, 0});
  return IrregularSpec(chain, chain, rep, rep);
}

// All-equal rows and columns: degenerates to the example product code.
IrregularSpec degenerate_spec(bool with_reps) {
  const LinearCode c3 = span_j4_1010();
  const std::vector<LinearCode> rows(4, c3);
  const Vec rep = with_reps ? bits({0, 0, 1, 1}) : bits({0, 0, 0, 0});
  return IrregularSpec(rows, rows, rep, rep);
}

Vec flatten(const FieldMatrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Rank oracle: dimension of the span of the encodings of the unit inputs.
int rank_of_unit_encodings(const IrregularSpec& spec) {
  const auto cap = dimension_bound(spec);
  std::vector<Vec> rows;
  for (std::uint64_t i = 0; i < cap; ++i) {
    Vec e(size_t(cap), 0);
    e[size_t(i)] = 1;
    rows.push_back(flatten(encode_irregular(spec, e)));
  }
  return rref(FieldMatrix::from_rows(spec.field(), rows)).rank;
}

}  // namespace

TEST_CASE("dimension bound collapses for uniform specs") {
  const LinearCode fs3 = full_space_code(3);
  const IrregularSpec all_full(std::vector<LinearCode>(3, fs3),
                               std::vector<LinearCode>(3, fs3));
  CHECK(dimension_bound(all_full) == 9);

  const LinearCode ew4 = even_weight_code(4);
  const IrregularSpec all_ew(std::vector<LinearCode>(4, ew4),
                             std::vector<LinearCode>(4, ew4));
  CHECK(dimension_bound(all_ew) == 9);  // k*l
  // Oracle: rank of the enumerated classical product code.
  const ProductCode classical = ProductCode::classical(ew4, ew4);
  std::vector<Vec> words;
  classical.for_each_codeword(
      [&](const FieldMatrix&, const FieldMatrix& w) { words.push_back(flatten(w)); });
  CHECK(rref(FieldMatrix::from_rows(FieldSpec(2), words)).rank == 9);
}

TEST_CASE("dimension bound of the nested 4x4 chain spec") {
  const IrregularSpec spec = chain_spec(false);
  const auto cap = dimension_bound(spec);
  CHECK(cap == rank_of_unit_encodings(spec));
  // Frozen from the rank oracle.
  CHECK(cap == 2);
}

TEST_CASE("spec validation") {
  const LinearCode j4 = repetition_code(4);
  const LinearCode ew4 = even_weight_code(4);
  // Decreasing dimensions.
  CHECK_THROWS_AS(IrregularSpec({ew4, j4, j4, j4}, {j4, j4, j4, ew4}),
                  std::invalid_argument);
  // Representative must vanish on the leading block.
  CHECK_THROWS_AS(IrregularSpec({j4, j4, ew4, ew4}, {j4, j4, ew4, ew4},
                                bits({1, 0, 0, 0}), bits({0, 0, 0, 1})),
                  std::invalid_argument);
  // A component whose information set is not the leading block is rejected:
  // the first four columns of this rm_1(3) generator have rank 3 < 4.
  const LinearCode rm3 = reed_muller_1_code(3);
  CHECK(rm3.permutation() != std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK_THROWS_AS(IrregularSpec(std::vector<LinearCode>(8, rm3),
                                std::vector<LinearCode>(8, rm3)),
                  std::invalid_argument);
  // Wrong representative length.
  CHECK_THROWS_AS(IrregularSpec({j4, j4, ew4, ew4}, {j4, j4, ew4, ew4},
                                bits({0, 0, 0}), bits({0, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("translate matrix block form") {
  CHECK(translate_matrix(chain_spec(false)) == FieldMatrix(FieldSpec(2), 4, 4));
  CHECK(translate_matrix(chain_spec(true)) ==
        mat2({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}}));
  // Uniform dimensions specialize to the product-module coset leader.
  const IrregularSpec deg = degenerate_spec(true);
  CHECK(translate_matrix(deg) ==
        coset_leader(FieldSpec(2), bits({1, 1}), bits({1, 1}), 2, 2, 4, 4));
}

TEST_CASE("degenerate irregular encoding agrees with the product module") {
  const IrregularSpec spec = degenerate_spec(true);
  const LinearCode c3 = span_j4_1010();
  const ProductCode pc = ProductCode::construction_i(
      AffineCode(c3, bits({0, 0, 1, 1})), AffineCode(c3, bits({0, 0, 1, 1})));
  REQUIRE(dimension_bound(spec) == 4);
  // Free cells fill column-major, so info index j*l + i maps to M(i, j).
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const Vec info = index_to_vec(idx, 4, 2);
    FieldMatrix m(FieldSpec(2), 2, 2);
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) m(i, j) = info[size_t(j * 2 + i)];
    CHECK(encode_irregular(spec, info) == pc.encode(m));
  }
}

TEST_CASE("zero information encodes to the translate") {
  CHECK(encode_irregular(chain_spec(false), bits({0, 0})) ==
        FieldMatrix(FieldSpec(2), 4, 4));
  CHECK(encode_irregular(chain_spec(true), bits({0, 0})) ==
        translate_matrix(chain_spec(true)));
}

TEST_CASE("encoding requires nested chains and the right length") {
  const LinearCode j4 = repetition_code(4);
  // <1000> and <j> have equal dimension but are not nested; dimensions stay
  // sorted so construction succeeds and only the encoder refuses.
  const LinearCode other = LinearCode(mat2({{1, 0, 0, 0}}));
  const IrregularSpec not_nested({j4, other, even_weight_code(4), even_weight_code(4)},
                                 {j4, j4, even_weight_code(4), even_weight_code(4)});
  CHECK_FALSE(not_nested.nested_rows());
  CHECK_THROWS_AS(encode_irregular(not_nested, bits({0, 0})), NotNested);
  CHECK_THROWS_AS(encode_irregular(chain_spec(false), bits({0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("dimension equality, injectivity and membership for nested specs") {
  for (const IrregularSpec& spec :
       {chain_spec(false), chain_spec(true), degenerate_spec(false),
        degenerate_spec(true)}) {
    const auto cap = dimension_bound(spec);
    std::set<Vec> words;
    std::map<Vec, Vec> by_info;
    for_each_irregular_codeword(spec, [&](const Vec& info, const FieldMatrix& w) {
      CHECK(verify_irregular(w, spec));
      const Vec flat = flatten(w);
      CHECK(by_info.emplace(info, flat).second);
      words.insert(flat);
    });
    CHECK(words.size() == (std::uint64_t(1) << cap));
  }
}

TEST_CASE("translate-coset identity") {
  const IrregularSpec with = chain_spec(true);
  const IrregularSpec without = chain_spec(false);
  const FieldMatrix t = translate_matrix(with);
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const Vec info = index_to_vec(idx, 2, 2);
    CHECK(encode_irregular(with, info) == encode_irregular(without, info) + t);
  }
}

TEST_CASE("specialization: uniform irregular code equals the product code") {
  const IrregularSpec spec = degenerate_spec(true);
  const LinearCode c3 = span_j4_1010();
  const ProductCode pc = ProductCode::construction_i(
      AffineCode(c3, bits({0, 0, 1, 1})), AffineCode(c3, bits({0, 0, 1, 1})));
  std::set<Vec> irregular_words, product_words;
  for_each_irregular_codeword(spec, [&](const Vec&, const FieldMatrix& w) {
    irregular_words.insert(flatten(w));
  });
  pc.for_each_codeword([&](const FieldMatrix&, const FieldMatrix& w) {
    product_words.insert(flatten(w));
  });
  CHECK(irregular_words == product_words);
}

TEST_CASE("verify_irregular rejects foreign rows") {
  const IrregularSpec spec = chain_spec(true);
  // j_n lies in every C_i, so with u outside the union, j_n is never in
  // C_i + u.
  FieldMatrix w = encode_irregular(spec, bits({1, 0}));
  REQUIRE(verify_irregular(w, spec));
  w.set_row(1, all_one_vec(4));
  CHECK_FALSE(verify_irregular(w, spec));
  CHECK_FALSE(verify_irregular(FieldMatrix(FieldSpec(2), 4, 4), spec));
}

TEST_CASE("agreement on the leading principal block forces equality") {
  for (const IrregularSpec& spec : {chain_spec(true), degenerate_spec(false)}) {
    const int ln = spec.l_max(), km = spec.k_max();
    std::map<Vec, Vec> by_block;
    for_each_irregular_codeword(spec, [&](const Vec&, const FieldMatrix& w) {
      Vec block;
      for (int i = 0; i < ln; ++i)
        for (int j = 0; j < km; ++j) block.push_back(w(i, j));
      const auto [it, inserted] = by_block.emplace(block, flatten(w));
      if (!inserted) CHECK(it->second == flatten(w));
      CHECK(inserted);  // distinct codewords have distinct leading blocks
    });
  }
}

TEST_CASE("irregular weight bounds") {
  SUBCASE("degenerate example code") {
    const IrregularWeightBounds r = weight_bounds_irregular(
        degenerate_spec(true), even_weight_code(4), even_weight_code(4));
    CHECK(r.row_min == 2);
    CHECK(r.row_max == 2);
    CHECK(r.col_min == 2);
    CHECK(r.col_max == 2);
    CHECK(r.certified);
    CHECK(r.row_lo == 2);
    CHECK(r.row_hi == 2);
  }
  SUBCASE("chain inside first-order Reed-Muller") {
    // <j, b1, b0> is leading-systematic; u = b2 avoids the whole chain.
    const LinearCode c3p = LinearCode::from_span(
        mat2({{1, 1, 1, 1, 1, 1, 1, 1},
              {0, 0, 1, 1, 0, 0, 1, 1},
              {0, 1, 0, 1, 0, 1, 0, 1}}));
    REQUIRE(c3p.permutation_is_identity());
    const LinearCode j8 = repetition_code(8);
    std::vector<LinearCode> chain(4, j8);
    chain.insert(chain.end(), 4, c3p);
    const Vec u = bits({0, 0, 0, 0, 1, 1, 1, 1});
    const IrregularSpec spec(chain, chain, u, u);
    const IrregularWeightBounds r =
        weight_bounds_irregular(spec, reed_muller_1_code(3), reed_muller_1_code(3));
    CHECK(r.row_min == 4);
    CHECK(r.row_max == 4);
    CHECK(r.col_min == 4);
    CHECK(r.col_max == 4);
    CHECK(r.certified);
  }
  SUBCASE("zero representatives violate the preconditions") {
    CHECK_THROWS_AS(weight_bounds_irregular(degenerate_spec(false),
                                            even_weight_code(4), even_weight_code(4)),
                    std::invalid_argument);
  }
}
