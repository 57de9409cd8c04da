#include "apc/irregular.hpp"

#include "apc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace apc {

namespace {
constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 20;

void check_leading_information_set(const LinearCode& c, const char* side, int idx) {
  const int k = c.dimension();
  for (int t = 0; t < k; ++t)
    if (c.permutation()[size_t(t)] >= k)
      throw std::invalid_argument(
          std::string(side) + " code " + std::to_string(idx) +
          ": leading " + std::to_string(k) +
          " coordinates are not an information set");
}

// Extends a word from its leading k values using the code's systematic
// encoder. The permutation fixes the leading block, so the result agrees
// with `leading` there.
Vec extend_word(const LinearCode& c, const Vec& leading) {
  const int k = c.dimension();
  Vec x(size_t(k), 0);
  for (int t = 0; t < k; ++t) x[size_t(t)] = leading[size_t(c.permutation()[size_t(t)])];
  return c.encode(x);
}

}  // namespace

IrregularSpec::IrregularSpec(std::vector<LinearCode> row_codes,
                             std::vector<LinearCode> col_codes, Vec row_rep,
                             Vec col_rep)
    : row_codes_(std::move(row_codes)),
      col_codes_(std::move(col_codes)),
      row_rep_(std::move(row_rep)),
      col_rep_(std::move(col_rep)) {
  if (row_codes_.empty() || col_codes_.empty())
    throw std::invalid_argument("need at least one row and one column code");
  const int m_ = static_cast<int>(row_codes_.size());
  const int n_ = static_cast<int>(col_codes_.size());
  const FieldSpec f = row_codes_.front().field();
  for (int i = 0; i < m_; ++i) {
    const LinearCode& c = row_codes_[size_t(i)];
    if (c.length() != n_ || !(c.field() == f))
      throw std::invalid_argument("row code " + std::to_string(i) +
                                  ": wrong length or field");
    if (i > 0 && c.dimension() < row_codes_[size_t(i - 1)].dimension())
      throw std::invalid_argument("row code dimensions must be nondecreasing");
    check_leading_information_set(c, "row", i);
  }
  for (int j = 0; j < n_; ++j) {
    const LinearCode& c = col_codes_[size_t(j)];
    if (c.length() != m_ || !(c.field() == f))
      throw std::invalid_argument("column code " + std::to_string(j) +
                                  ": wrong length or field");
    if (j > 0 && c.dimension() < col_codes_[size_t(j - 1)].dimension())
      throw std::invalid_argument("column code dimensions must be nondecreasing");
    check_leading_information_set(c, "column", j);
  }
  if (static_cast<int>(row_rep_.size()) != n_)
    throw std::invalid_argument("row representative must have length n");
  if (static_cast<int>(col_rep_.size()) != m_)
    throw std::invalid_argument("column representative must have length m");
  for (int c = 0; c < k_max(); ++c)
    if (row_rep_[size_t(c)] != 0)
      throw std::invalid_argument(
          "row representative must vanish on the leading k_m coordinates");
  for (int r = 0; r < l_max(); ++r)
    if (col_rep_[size_t(r)] != 0)
      throw std::invalid_argument(
          "column representative must vanish on the leading l_n coordinates");
  for (auto e : row_rep_)
    if (e >= f.p()) throw std::invalid_argument("row representative entry out of field");
  for (auto e : col_rep_)
    if (e >= f.p()) throw std::invalid_argument("column representative entry out of field");

  nested_rows_ = true;
  for (int i = 0; i + 1 < m_ && nested_rows_; ++i)
    nested_rows_ = row_codes_[size_t(i)].is_subcode_of(row_codes_[size_t(i + 1)]);
  nested_cols_ = true;
  for (int j = 0; j + 1 < n_ && nested_cols_; ++j)
    nested_cols_ = col_codes_[size_t(j)].is_subcode_of(col_codes_[size_t(j + 1)]);
}

IrregularSpec::IrregularSpec(std::vector<LinearCode> row_codes,
                             std::vector<LinearCode> col_codes)
    : IrregularSpec(row_codes, col_codes, Vec(col_codes.size(), 0),
                    Vec(row_codes.size(), 0)) {}

bool IrregularSpec::has_reps() const {
  return !is_zero_vec(row_rep_) || !is_zero_vec(col_rep_);
}

std::uint64_t dimension_bound(const IrregularSpec& spec) {
  std::uint64_t total = 0;
  int prev_l = 0;  // l_0 = 0
  for (int j = 1; j <= spec.n(); ++j) {
    const int lj = spec.l(j - 1);
    for (int i = prev_l + 1; i <= lj; ++i) {
      const int term = spec.k(i - 1) - j + 1;
      if (term > 0) total += std::uint64_t(term);
    }
    prev_l = lj;
  }
  return total;
}

FieldMatrix translate_matrix(const IrregularSpec& spec) {
  const FieldSpec& f = spec.field();
  const int m = spec.m(), n = spec.n();
  const int km = spec.k_max(), ln = spec.l_max();
  const Vec& u = spec.row_rep();
  const Vec& v = spec.col_rep();
  FieldMatrix t(f, m, n);
  for (int i = 0; i < ln; ++i)
    for (int j = km; j < n; ++j) t(i, j) = u[size_t(j)];
  for (int i = ln; i < m; ++i)
    for (int j = 0; j < km; ++j) t(i, j) = v[size_t(i)];
  for (int i = ln; i < m; ++i)
    for (int j = km; j < n; ++j) t(i, j) = f.add(v[size_t(i)], u[size_t(j)]);
  return t;
}

FieldMatrix encode_irregular(const IrregularSpec& spec, const Vec& info) {
  if (!spec.nested_rows() || !spec.nested_cols())
    throw NotNested("irregular encoding is defined for nested chains only");
  const std::uint64_t cap = dimension_bound(spec);
  if (info.size() != cap)
    throw std::invalid_argument("information length must be K = " +
                                std::to_string(cap));
  const FieldSpec& f = spec.field();
  const int m = spec.m(), n = spec.n();
  const int km = spec.k_max(), ln = spec.l_max();
  for (auto e : info)
    if (e >= f.p()) throw std::invalid_argument("information symbol out of field");

  FieldMatrix w(f, m, n);
  size_t next = 0;

  // Leading block, column-major. A cell is free information iff it sits in
  // the systematic part of both its row code and its column code; otherwise
  // the earlier-filled cells of its row (preferred) or column determine it.
  for (int j = 0; j < km; ++j) {
    for (int i = 0; i < ln; ++i) {
      const int ki = spec.k(i);
      const int lj = spec.l(j);
      if (j < ki && i < lj) {
        w(i, j) = info[next++];
      } else if (j >= ki) {
        Vec leading(size_t(ki), 0);
        for (int t = 0; t < ki; ++t) leading[size_t(t)] = w(i, t);
        w(i, j) = extend_word(spec.row_code(i), leading)[size_t(j)];
      } else {  // i >= lj
        Vec leading(size_t(lj), 0);
        for (int t = 0; t < lj; ++t) leading[size_t(t)] = w(t, j);
        w(i, j) = extend_word(spec.col_code(j), leading)[size_t(i)];
      }
    }
  }
  assert(next == cap);

  // Extend rows above the fold to full length, then every column downward,
  // then re-encode the remaining rows.
  for (int i = 0; i < ln; ++i) {
    const int ki = spec.k(i);
    Vec leading(size_t(ki), 0);
    for (int t = 0; t < ki; ++t) leading[size_t(t)] = w(i, t);
    const Vec full = extend_word(spec.row_code(i), leading);
    for (int j = km; j < n; ++j) w(i, j) = full[size_t(j)];
  }
  for (int j = 0; j < n; ++j) {
    const int lj = spec.l(j);
    Vec leading(size_t(lj), 0);
    for (int t = 0; t < lj; ++t) leading[size_t(t)] = w(t, j);
    const Vec full = extend_word(spec.col_code(j), leading);
    for (int i = ln; i < m; ++i) w(i, j) = full[size_t(i)];
  }
  for (int i = ln; i < m; ++i) {
    const int ki = spec.k(i);
    Vec leading(size_t(ki), 0);
    for (int t = 0; t < ki; ++t) leading[size_t(t)] = w(i, t);
    w.set_row(i, extend_word(spec.row_code(i), leading));
  }

  if (spec.has_reps()) w = w + translate_matrix(spec);
  return w;
}

bool verify_irregular(const FieldMatrix& word, const IrregularSpec& spec) {
  if (word.rows() != spec.m() || word.cols() != spec.n())
    throw std::invalid_argument("codeword shape mismatch");
  const FieldSpec& f = spec.field();
  for (int i = 0; i < spec.m(); ++i)
    if (!spec.row_code(i).contains(vec_sub(f, word.row(i), spec.row_rep())))
      return false;
  for (int j = 0; j < spec.n(); ++j)
    if (!spec.col_code(j).contains(vec_sub(f, word.col(j), spec.col_rep())))
      return false;
  return true;
}

void for_each_irregular_codeword(
    const IrregularSpec& spec,
    const std::function<void(const Vec&, const FieldMatrix&)>& fn) {
  const std::uint64_t bits = dimension_bound(spec);
  if (bits > 63) throw TooLargeToEnumerate("K too large to enumerate");
  const std::uint64_t total =
      enumeration_size(spec.field().p(), static_cast<int>(bits), kEnumerationGuard);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Vec info = index_to_vec(idx, static_cast<int>(bits), spec.field().p());
    fn(info, encode_irregular(spec, info));
  }
}

IrregularWeightBounds weight_bounds_irregular(const IrregularSpec& spec,
                                              const LinearCode& c_super,
                                              const LinearCode& d_super) {
  if (spec.field().p() != 2)
    throw std::invalid_argument("weight bounds are stated for binary codes");
  for (int i = 0; i < spec.m(); ++i)
    if (!spec.row_code(i).is_subcode_of(c_super))
      throw std::invalid_argument("row code " + std::to_string(i) +
                                  " is not inside the row supercode");
  for (int j = 0; j < spec.n(); ++j)
    if (!spec.col_code(j).is_subcode_of(d_super))
      throw std::invalid_argument("column code " + std::to_string(j) +
                                  " is not inside the column supercode");
  if (!c_super.contains(spec.row_rep()))
    throw std::invalid_argument("row representative is not in the row supercode");
  if (!d_super.contains(spec.col_rep()))
    throw std::invalid_argument(
        "column representative is not in the column supercode");
  for (int i = 0; i < spec.m(); ++i)
    if (spec.row_code(i).contains(spec.row_rep()))
      throw std::invalid_argument(
          "row representative lies in row code " + std::to_string(i) +
          "; it must avoid the union of the row codes");
  for (int j = 0; j < spec.n(); ++j)
    if (spec.col_code(j).contains(spec.col_rep()))
      throw std::invalid_argument(
          "column representative lies in column code " + std::to_string(j) +
          "; it must avoid the union of the column codes");

  IrregularWeightBounds r{std::numeric_limits<int>::max(), -1,
                          std::numeric_limits<int>::max(), -1,
                          0,  0, 0, 0, false};
  for_each_irregular_codeword(spec, [&](const Vec&, const FieldMatrix& w) {
    for (int i = 0; i < w.rows(); ++i) {
      const int wt = vec_weight(w.row(i));
      r.row_min = std::min(r.row_min, wt);
      r.row_max = std::max(r.row_max, wt);
    }
    for (int j = 0; j < w.cols(); ++j) {
      const int wt = vec_weight(w.col(j));
      r.col_min = std::min(r.col_min, wt);
      r.col_max = std::max(r.col_max, wt);
    }
  });
  r.row_lo = c_super.min_distance();
  r.row_hi = spec.n() - r.row_lo;
  r.col_lo = d_super.min_distance();
  r.col_hi = spec.m() - r.col_lo;
  r.certified = r.row_lo <= r.row_min && r.row_max <= r.row_hi &&
                r.col_lo <= r.col_min && r.col_max <= r.col_hi;
  return r;
}

}  // namespace apc
