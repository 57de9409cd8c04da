#pragma once

#include "apc/linalg.hpp"
#include "apc/matrix.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace apc {

// A linear [n, k] code held as a full-row-rank generator matrix, with its
// systematic form (A, column permutation) computed up front and the minimum
// distance cached on first use. Values are immutable and cheap to copy.
class LinearCode {
 public:
  explicit LinearCode(FieldMatrix generator);  // throws RankDeficient

  // Builds a code from a spanning set: row-reduces and keeps a basis.
  static LinearCode from_span(const FieldMatrix& rows);

  int length() const;
  int dimension() const;
  const FieldSpec& field() const;
  const FieldMatrix& generator() const;

  // Systematic data: codewords are (x, x*A) up to the column permutation,
  // where perm[pos] is the original column sitting at permuted position pos.
  const FieldMatrix& systematic_a() const;
  const std::vector<int>& permutation() const;
  const std::vector<int>& inverse_permutation() const;
  bool permutation_is_identity() const;

  std::uint64_t size() const;  // p^k

  // Systematic encoding of an information vector of length k, reported in
  // original coordinate order.
  Vec encode(const Vec& x) const;

  // Row-space membership decided by reduction against the cached rref.
  bool contains(const Vec& w) const;

  // Exact minimum nonzero-codeword weight by enumeration (guard p^k <= 2^24).
  // Cached; concurrent callers observe a single computation.
  int min_distance() const;

  bool is_self_complementary() const;  // j_n in C

  // The unique coset element of the form (0_k, a) in permuted coordinates,
  // returned in original coordinates.
  Vec coset_representative(const Vec& u) const;

  bool is_subcode_of(const LinearCode& c2) const;
  bool same_code_as(const LinearCode& other) const;

  void for_each_codeword(const std::function<void(const Vec&)>& fn) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct HyperplaneResult {
  LinearCode code;  // C3 with C1 <= C3 < C2, dim(C3) = dim(C2) - 1
  Vec translate;    // u in C2 \ C3
};

// Deterministic hyperplane pick between nested codes: extends a basis of c1
// by scanning c2's generator rows in order; the last kept row becomes the
// translate, everything before it spans C3. Throws NotNested/EqualDimensions.
HyperplaneResult hyperplane_between(const LinearCode& c1, const LinearCode& c2);

// Named families. All are self-complementary when the parameters admit j
// (even_weight needs p | n for that; the paper's uses are binary even n).
LinearCode even_weight_code(int n, FieldSpec field = FieldSpec(2));   // [n, n-1, 2]
LinearCode repetition_code(int n, FieldSpec field = FieldSpec(2));    // [n, 1, n]
LinearCode reed_muller_1_code(int r);                                 // [2^r, r+1, 2^(r-1)]
LinearCode full_space_code(int n, FieldSpec field = FieldSpec(2));    // [n, n, 1]

// All canonical representatives of cosets of c1 inside c2, sorted.
std::vector<Vec> coset_representatives(const LinearCode& c1, const LinearCode& c2);

}  // namespace apc
