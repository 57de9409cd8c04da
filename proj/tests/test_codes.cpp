#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apc/errors.hpp"
#include "apc/linear_code.hpp"
#include "apc/rng.hpp"
#include "test_util.hpp"

using namespace apc;
using namespace apc::test;

namespace {

LinearCode span_j4_1010() {
  return LinearCode::from_span(mat2({{1, 1, 1, 1}, {1, 0, 1, 0}}));
}

}  // namespace

TEST_CASE("family parameters") {
  const LinearCode ew4 = even_weight_code(4);
  CHECK(ew4.length() == 4);
  CHECK(ew4.dimension() == 3);
  CHECK(ew4.min_distance() == 2);
  // The even-weight code is exactly the set of even-weight words.
  for (const Vec& w : all_codewords(ew4)) CHECK(vec_weight(w) % 2 == 0);
  CHECK(all_codewords(ew4).size() == 8);

  const LinearCode rep4 = repetition_code(4);
  CHECK(rep4.dimension() == 1);
  CHECK(rep4.min_distance() == 4);
  CHECK(all_codewords(rep4) == std::set<Vec>{bits({0, 0, 0, 0}), bits({1, 1, 1, 1})});

  const LinearCode rm3 = reed_muller_1_code(3);
  CHECK(rm3.length() == 8);
  CHECK(rm3.dimension() == 4);
  CHECK(rm3.min_distance() == 4);

  const LinearCode fs3 = full_space_code(3);
  CHECK(fs3.dimension() == 3);
  CHECK(fs3.min_distance() == 1);
}

TEST_CASE("family distances match the closed forms by enumeration") {
  for (int n : {2, 3, 4, 5, 6}) CHECK(even_weight_code(n).min_distance() == 2);
  for (int n : {1, 2, 3, 4, 7}) CHECK(repetition_code(n).min_distance() == n);
  for (int r : {1, 2, 3, 4}) {
    const LinearCode rm = reed_muller_1_code(r);
    CHECK(rm.length() == (1 << r));
    CHECK(rm.dimension() == r + 1);
    CHECK(rm.min_distance() == (1 << (r - 1)));
  }
}

TEST_CASE("reed_muller_1 generator uses MSB-first coordinate indicators") {
  const LinearCode rm2 = reed_muller_1_code(2);
  CHECK(rm2.generator() == mat2({{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}}));
}

TEST_CASE("contains decides membership without enumeration") {
  const LinearCode ew4 = even_weight_code(4);
  CHECK(ew4.contains(bits({1, 1, 0, 0})));
  CHECK_FALSE(ew4.contains(bits({1, 0, 0, 0})));
  CHECK(ew4.contains(bits({0, 0, 0, 0})));
  CHECK_THROWS_AS(ew4.contains(bits({1, 0})), std::invalid_argument);
}

TEST_CASE("self-complementary checks") {
  CHECK(even_weight_code(4).is_self_complementary());
  CHECK(repetition_code(4).is_self_complementary());
  CHECK_FALSE(LinearCode(mat2({{1, 0, 0, 0}})).is_self_complementary());
  // Lemma precondition: the shipped families contain j (even length for the
  // even-weight family; odd-length even-weight codes cannot contain j).
  for (int n : {2, 4, 6}) CHECK(even_weight_code(n).is_self_complementary());
  CHECK_FALSE(even_weight_code(3).is_self_complementary());
  for (int r : {1, 2, 3}) CHECK(reed_muller_1_code(r).is_self_complementary());
  for (int n : {2, 3, 5}) CHECK(full_space_code(n).is_self_complementary());
  for (int n : {2, 3, 5}) CHECK(repetition_code(n).is_self_complementary());
}

TEST_CASE("coset representative examples") {
  const LinearCode c3 = span_j4_1010();
  CHECK(c3.coset_representative(bits({0, 0, 1, 1})) == bits({0, 0, 1, 1}));
  CHECK(c3.coset_representative(bits({0, 0, 0, 0})) == bits({0, 0, 0, 0}));

  // Oracle: enumerate the coset {c + u} and find its unique member whose
  // systematic prefix vanishes.
  const LinearCode ew4 = even_weight_code(4);
  const Vec u = bits({1, 0, 0, 0});
  Vec expected;
  int hits = 0;
  for (const Vec& w : coset_words(ew4, u)) {
    if (w[0] == 0 && w[1] == 0 && w[2] == 0) {
      expected = w;
      ++hits;
    }
  }
  CHECK(hits == 1);
  CHECK(expected == bits({0, 0, 0, 1}));
  CHECK(ew4.coset_representative(u) == expected);
}

TEST_CASE("coset representative canonicalizes modulo the code") {
  SplitMix64 rng(0xc0de);
  const std::vector<LinearCode> codes = {even_weight_code(4), span_j4_1010(),
                                         reed_muller_1_code(3), even_weight_code(6)};
  int trials = 0;
  while (trials < 200) {
    const LinearCode& c = codes[trials % codes.size()];
    const int n = c.length();
    Vec u(size_t(n), 0);
    for (auto& e : u) e = static_cast<std::uint8_t>(rng.below(2));
    const Vec cw = c.encode(index_to_vec(rng.below(c.size()), c.dimension(), 2));
    CHECK(c.coset_representative(u) ==
          c.coset_representative(vec_add(c.field(), u, cw)));
    // Different cosets map to different representatives.
    const Vec rep = c.coset_representative(u);
    CHECK(c.contains(vec_sub(c.field(), u, rep)));
    ++trials;
  }
}

TEST_CASE("hyperplane between repetition and even-weight") {
  const LinearCode c1 = repetition_code(4);
  const LinearCode c2 = even_weight_code(4);
  const HyperplaneResult h = hyperplane_between(c1, c2);
  CHECK(h.code.dimension() == 2);
  CHECK(c1.is_subcode_of(h.code));
  CHECK(h.code.is_subcode_of(c2));
  CHECK(c2.contains(h.translate));
  CHECK_FALSE(h.code.contains(h.translate));
}

TEST_CASE("hyperplane with one dimension of room returns c1 itself") {
  const LinearCode c1 = repetition_code(4);
  const LinearCode c2 = span_j4_1010();
  const HyperplaneResult h = hyperplane_between(c1, c2);
  CHECK(h.code.same_code_as(c1));
  CHECK(c2.contains(h.translate));
  CHECK_FALSE(h.code.contains(h.translate));
}

TEST_CASE("hyperplane between repetition and first-order Reed-Muller") {
  const HyperplaneResult h =
      hyperplane_between(repetition_code(8), reed_muller_1_code(3));
  CHECK(h.code.dimension() == 3);
  CHECK(h.code.contains(all_one_vec(8)));
  CHECK(reed_muller_1_code(3).contains(h.translate));
  CHECK_FALSE(h.code.contains(h.translate));
}

TEST_CASE("hyperplane errors") {
  CHECK_THROWS_AS(hyperplane_between(LinearCode(mat2({{1, 0, 0, 0}})),
                                     repetition_code(4)),
                  NotNested);
  CHECK_THROWS_AS(hyperplane_between(even_weight_code(4), even_weight_code(4)),
                  EqualDimensions);
}

TEST_CASE("hyperplane postconditions on nested family pairs") {
  struct Pair {
    LinearCode c1, c2;
  };
  const std::vector<Pair> pairs = {
      {repetition_code(4), even_weight_code(4)},
      {repetition_code(6), even_weight_code(6)},
      {repetition_code(8), reed_muller_1_code(3)},
      {reed_muller_1_code(3), even_weight_code(8)},
      {repetition_code(4), full_space_code(4)},
  };
  for (const auto& pr : pairs) {
    const HyperplaneResult h = hyperplane_between(pr.c1, pr.c2);
    CHECK(h.code.dimension() == pr.c2.dimension() - 1);
    CHECK(pr.c1.is_subcode_of(h.code));
    CHECK(h.code.is_subcode_of(pr.c2));
    // u in c2 \ c3, checked against full enumerations.
    const auto in_c2 = all_codewords(pr.c2);
    const auto in_c3 = all_codewords(h.code);
    CHECK(in_c2.count(h.translate) == 1);
    CHECK(in_c3.count(h.translate) == 0);
    // c3's words all lie in c2.
    for (const Vec& w : in_c3) CHECK(in_c2.count(w) == 1);
  }
}

TEST_CASE("coset representative sets have index-many elements") {
  const auto reps = coset_representatives(repetition_code(4), even_weight_code(4));
  CHECK(reps.size() == 4);  // 2^(3-1)
  for (const Vec& r : reps) CHECK(even_weight_code(4).contains(r));
  const auto reps2 = coset_representatives(repetition_code(8), reed_muller_1_code(3));
  CHECK(reps2.size() == 8);
}

TEST_CASE("from_span drops dependent rows") {
  const LinearCode c = LinearCode::from_span(
      mat2({{1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(c.dimension() == 2);
  CHECK(c.same_code_as(span_j4_1010()));
}

TEST_CASE("min distance guard") {
  // 5^11 > 2^24: the guard must refuse rather than grind.
  const LinearCode big = full_space_code(11, FieldSpec(5));
  CHECK_THROWS_AS(big.min_distance(), TooLargeToEnumerate);
}
