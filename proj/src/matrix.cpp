#include "apc/matrix.hpp"

#include <stdexcept>

namespace apc {

FieldMatrix::FieldMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  e_.assign(size_t(rows) * size_t(cols), 0);
}

FieldMatrix FieldMatrix::identity(FieldSpec field, int n) {
  FieldMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::all_one(FieldSpec field, int rows, int cols) {
  FieldMatrix m(field, rows, cols);
  for (auto& e : m.e_) e = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(FieldSpec field, const std::vector<Vec>& rows,
                                   int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  FieldMatrix m(field, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < cols; ++j) {
      if (rows[i][j] >= field.p()) throw std::invalid_argument("entry out of field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Vec FieldMatrix::row(int r) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

Vec FieldMatrix::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void FieldMatrix::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row size");
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
}

void FieldMatrix::set_col(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("col size");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

void FieldMatrix::swap_rows(int r1, int r2) {
  if (r1 == r2) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

int FieldMatrix::weight() const {
  int w = 0;
  for (auto e : e_) w += (e != 0);
  return w;
}

FieldMatrix operator+(const FieldMatrix& x, const FieldMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_ || !(x.field_ == y.field_))
    throw std::invalid_argument("matrix shape/field mismatch in +");
  FieldMatrix r = x;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = x.field_.add(x.e_[i], y.e_[i]);
  return r;
}

FieldMatrix operator-(const FieldMatrix& x, const FieldMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_ || !(x.field_ == y.field_))
    throw std::invalid_argument("matrix shape/field mismatch in -");
  FieldMatrix r = x;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = x.field_.sub(x.e_[i], y.e_[i]);
  return r;
}

FieldMatrix operator*(const FieldMatrix& x, const FieldMatrix& y) {
  if (x.cols_ != y.rows_ || !(x.field_ == y.field_))
    throw std::invalid_argument("matrix shape/field mismatch in *");
  FieldMatrix r(x.field_, x.rows_, y.cols_);
  const std::uint32_t p = x.field_.p();
  for (int i = 0; i < x.rows_; ++i)
    for (int j = 0; j < y.cols_; ++j) {
      std::uint32_t acc = 0;
      for (int t = 0; t < x.cols_; ++t) acc += std::uint32_t(x(i, t)) * y(t, j);
      r(i, j) = static_cast<std::uint8_t>(acc % p);
    }
  return r;
}

Vec vec_add(const FieldSpec& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
  return r;
}

Vec vec_sub(const FieldSpec& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
  return r;
}

Vec all_one_vec(int n) { return Vec(size_t(n), 1); }

int vec_weight(const Vec& v) {
  int w = 0;
  for (auto e : v) w += (e != 0);
  return w;
}

int hamming_distance(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
  int d = 0;
  for (size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
  return d;
}

bool is_zero_vec(const Vec& v) {
  for (auto e : v)
    if (e != 0) return false;
  return true;
}

Vec row_times_matrix(const FieldSpec& f, const Vec& x, const FieldMatrix& m) {
  if (static_cast<int>(x.size()) != m.rows())
    throw std::invalid_argument("vector/matrix shape mismatch");
  const std::uint32_t p = f.p();
  Vec r(size_t(m.cols()), 0);
  for (int j = 0; j < m.cols(); ++j) {
    std::uint32_t acc = 0;
    for (int i = 0; i < m.rows(); ++i) acc += std::uint32_t(x[i]) * m(i, j);
    r[j] = static_cast<std::uint8_t>(acc % p);
  }
  return r;
}

}  // namespace apc
