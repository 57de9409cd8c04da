#pragma once

#include "apc/linear_code.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace apc {

// Irregular product code data: per-row component codes C_1..C_m of length n
// with nondecreasing dimensions, per-column codes D_1..D_n of length m
// likewise, and optional translate representatives u = (0_{k_m}, a),
// v = (0_{l_n}, b). Every component code must keep its information set on
// the leading coordinates (its systematic permutation must fix the leading
// block as a set); specs violating that are rejected rather than silently
// re-permuted.
class IrregularSpec {
 public:
  IrregularSpec(std::vector<LinearCode> row_codes, std::vector<LinearCode> col_codes,
                Vec row_rep, Vec col_rep);
  // Zero representatives (the linear case).
  IrregularSpec(std::vector<LinearCode> row_codes, std::vector<LinearCode> col_codes);

  int m() const { return static_cast<int>(row_codes_.size()); }
  int n() const { return static_cast<int>(col_codes_.size()); }
  const FieldSpec& field() const { return row_codes_.front().field(); }

  const LinearCode& row_code(int i) const { return row_codes_[size_t(i)]; }
  const LinearCode& col_code(int j) const { return col_codes_[size_t(j)]; }
  int k(int i) const { return row_codes_[size_t(i)].dimension(); }
  int l(int j) const { return col_codes_[size_t(j)].dimension(); }
  int k_max() const { return k(m() - 1); }
  int l_max() const { return l(n() - 1); }

  bool nested_rows() const { return nested_rows_; }
  bool nested_cols() const { return nested_cols_; }

  const Vec& row_rep() const { return row_rep_; }  // u, length n
  const Vec& col_rep() const { return col_rep_; }  // v, length m
  bool has_reps() const;

 private:
  std::vector<LinearCode> row_codes_, col_codes_;
  Vec row_rep_, col_rep_;
  bool nested_rows_ = false, nested_cols_ = false;
};

// K = sum_{j=1}^n sum_{i=l_{j-1}+1}^{l_j} max{k_i - j + 1, 0}, with l_0 = 0.
// Equality with the code dimension holds for nested chains.
std::uint64_t dimension_bound(const IrregularSpec& spec);

// The m x n translate with zero on the leading l_n x k_m block, j^T a on the
// top right, b^T j on the bottom left and b^T j + j^T a on the bottom right.
FieldMatrix translate_matrix(const IrregularSpec& spec);

// Encodes K information symbols: free cells of the leading l_n x k_m block
// are filled column by column (cell (i,j) is free iff j < k_i and i < l_j,
// zero-based), already-determined cells come from earlier row-code
// constraints, then rows and columns are extended systematically and the
// translate is added. Defined only for nested chains.
FieldMatrix encode_irregular(const IrregularSpec& spec, const Vec& info);

// Row i in C_i + u and column j in D_j + v, for all i, j.
bool verify_irregular(const FieldMatrix& word, const IrregularSpec& spec);

// All p^K codewords, information vectors in lexicographic order.
void for_each_irregular_codeword(
    const IrregularSpec& spec,
    const std::function<void(const Vec& info, const FieldMatrix& word)>& fn);

struct IrregularWeightBounds {
  int row_min, row_max, col_min, col_max;
  int row_lo, row_hi, col_lo, col_hi;  // certified interval [d, len - d]
  bool certified;
};

// Exact weight extrema over all codewords, certified against the bounds from
// supercodes C and D with union(C_i) < C, union(D_j) < D, u in C \ union,
// v in D \ union. Binary only; violated preconditions are reported by name.
IrregularWeightBounds weight_bounds_irregular(const IrregularSpec& spec,
                                              const LinearCode& c_super,
                                              const LinearCode& d_super);

}  // namespace apc
