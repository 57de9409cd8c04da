#pragma once

#include "apc/affine_code.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace apc {

// Product of two affine codes: an (m x n)-matrix code of dimension k*l that
// is a coset of the classical product of the base codes. The coset leader U
// is fixed at construction and consumed by the channel decoder.
class ProductCode {
 public:
  enum class Kind { Classical, ConstructionI, ConstructionIA };

  // Classical product C (x) D; both representatives zero. No
  // self-complementarity requirement.
  static ProductCode classical(LinearCode row, LinearCode col);

  // Product of two cosets. Requires the all-one vector in both base codes,
  // which makes the compatibility condition hold for every representative.
  static ProductCode construction_i(AffineCode row, AffineCode col);

  // Hyperplane construction for expurgated codes: picks C3 with
  // c1 <= C3 < c2 (and D3 likewise) and applies Construction I to the
  // translated hyperplanes. Requires j in c1 and j in d1.
  static ProductCode construction_ia(const LinearCode& c1, const LinearCode& c2,
                                     const LinearCode& d1, const LinearCode& d2);

  Kind kind() const { return kind_; }
  const AffineCode& row_code() const { return row_; }  // length n, dim k
  const AffineCode& col_code() const { return col_; }  // length m, dim l
  const FieldSpec& field() const { return row_.field(); }

  int rows() const { return col_.length(); }      // m
  int cols() const { return row_.length(); }      // n
  int info_rows() const { return col_.dimension(); }  // l
  int info_cols() const { return row_.dimension(); }  // k
  std::uint64_t dimension() const;                // k*l
  std::uint64_t size() const;                     // p^(k*l)

  const FieldMatrix& leader() const { return leader_; }  // U, original coords

  // Encodes an l x k information block by encoding the leading columns with
  // the column coset first, then every row with the row coset.
  FieldMatrix encode_cols_then_rows(const FieldMatrix& info) const;
  // Same information block, rows first; equal to the above whenever the
  // compatibility condition holds (enforced at construction).
  FieldMatrix encode_rows_then_cols(const FieldMatrix& info) const;
  FieldMatrix encode(const FieldMatrix& info) const {
    return encode_cols_then_rows(info);
  }

  // Extracts the l x k systematic block of a codeword via the two stored
  // permutations.
  FieldMatrix information_block(const FieldMatrix& word) const;

  // Yields all p^(k*l) codewords, information blocks in row-major
  // lexicographic order. Guard: p^(k*l) <= 2^20.
  void for_each_codeword(
      const std::function<void(const FieldMatrix& info, const FieldMatrix& word)>& fn)
      const;
  std::vector<FieldMatrix> enumerate_codewords() const;

 private:
  ProductCode(AffineCode row, AffineCode col, Kind kind);

  AffineCode row_, col_;
  Kind kind_;
  FieldMatrix leader_;
};

// b^T (j_k A - j_{n-k}) == (B^T j_l^T - j_{m-l}^T) a, the condition under
// which the two encoding orders agree.
bool check_compatibility(const FieldMatrix& row_a, const FieldMatrix& col_b,
                         const Vec& a, const Vec& b);

// Closed-form coset leader for self-complementary base codes, in systematic
// coordinates:  [ 0_{l x k} | j_l^T a ; b^T j_k | b^T j_{n-k} + j_{m-l}^T a ].
FieldMatrix coset_leader(const FieldSpec& f, const Vec& a, const Vec& b, int k,
                         int l, int m, int n);

// General leader (needs the row code's A):  bottom-right b^T j_k A + j^T a.
FieldMatrix coset_leader_general(const FieldSpec& f, const Vec& a, const Vec& b,
                                 const FieldMatrix& row_a, int k, int l, int m,
                                 int n);

// Every row in the row code and every column in the column code.
bool verify_property(const FieldMatrix& word, const AffineCode& row_code,
                     const AffineCode& col_code);

// |U| * |V| * p^(k1*l1), the size of the union-of-cosets matrix code.
std::uint64_t union_coset_size(int k1, int l1, std::uint64_t size_u,
                               std::uint64_t size_v, std::uint32_t p);

// Membership in the union-of-cosets code: some pair (u, v) whose
// Construction-I coset contains the matrix. Requires j in c1 and d1.
bool union_coset_contains(const FieldMatrix& word, const LinearCode& c1,
                          const std::vector<Vec>& us, const LinearCode& d1,
                          const std::vector<Vec>& vs);

}  // namespace apc
