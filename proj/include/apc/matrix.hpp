#pragma once

#include "apc/field.hpp"

#include <cstdint>
#include <vector>

namespace apc {

using Vec = std::vector<std::uint8_t>;

// Dense row-major matrix over a prime field. Entries are residues mod p.
// 0xN and Nx0 shapes are legal; they appear as degenerate systematic parts.
class FieldMatrix {
 public:
  FieldMatrix() : field_(2), rows_(0), cols_(0) {}
  FieldMatrix(FieldSpec field, int rows, int cols);

  static FieldMatrix identity(FieldSpec field, int n);
  static FieldMatrix all_one(FieldSpec field, int rows, int cols);
  static FieldMatrix from_rows(FieldSpec field, const std::vector<Vec>& rows,
                               int cols = -1);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
  std::uint8_t& operator()(int r, int c) { return e_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);
  void set_col(int c, const Vec& v);
  void swap_rows(int r1, int r2);

  FieldMatrix transposed() const;
  int weight() const;  // number of nonzero entries

  friend FieldMatrix operator+(const FieldMatrix& x, const FieldMatrix& y);
  friend FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y);
  friend FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y);

  bool operator==(const FieldMatrix&) const = default;

 private:
  FieldSpec field_;
  int rows_, cols_;
  std::vector<std::uint8_t> e_;
};

// --- vector helpers ---

Vec vec_add(const FieldSpec& f, const Vec& x, const Vec& y);
Vec vec_sub(const FieldSpec& f, const Vec& x, const Vec& y);
Vec all_one_vec(int n);
int vec_weight(const Vec& v);
int hamming_distance(const Vec& x, const Vec& y);
bool is_zero_vec(const Vec& v);

// x (1 x r) times m (r x c).
Vec row_times_matrix(const FieldSpec& f, const Vec& x, const FieldMatrix& m);

}  // namespace apc
