#include "apc/linalg.hpp"

#include "apc/errors.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apc {

RrefResult rref(const FieldMatrix& m) {
  FieldMatrix r = m;
  const FieldSpec& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < r.rows(); ++i)
      if (r(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    r.swap_rows(row, pr);
    if (const std::uint8_t s = f.inv(r(row, col)); s != 1)
      for (int j = 0; j < r.cols(); ++j) r(row, j) = f.mul(r(row, j), s);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const std::uint8_t c = r(i, col);
      for (int j = 0; j < r.cols(); ++j)
        r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  const int rank = static_cast<int>(pivots.size());
  return {std::move(r), rank, std::move(pivots)};
}

SystematicForm systematic_form(const FieldMatrix& g) {
  const RrefResult rr = rref(g);
  if (rr.rank < g.rows())
    throw RankDeficient("generator has rank " + std::to_string(rr.rank) +
                        " but " + std::to_string(g.rows()) + " rows");
  const int k = g.rows();
  const int n = g.cols();

  std::vector<char> is_pivot(size_t(n), 0);
  for (int c : rr.pivots) is_pivot[size_t(c)] = 1;

  // Move the pivot columns into the leading k slots: a dependent slot swaps
  // with the leftmost later pivot slot. Leaves already-systematic generators
  // with the identity permutation.
  std::vector<int> perm(size_t(n), 0);
  std::iota(perm.begin(), perm.end(), 0);
  for (int j = 0; j < k; ++j) {
    if (is_pivot[size_t(perm[j])]) continue;
    int t = j + 1;
    while (!is_pivot[size_t(perm[t])]) ++t;
    std::swap(perm[j], perm[t]);
  }
  for (int j = 0; j < k; ++j) assert(perm[j] == rr.pivots[size_t(j)]);

  FieldMatrix a(g.field(), k, n - k);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < n - k; ++t) a(i, t) = rr.reduced(i, perm[size_t(k + t)]);
  return {std::move(a), std::move(perm)};
}

SolveResult solve(const FieldMatrix& coeffs, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != coeffs.rows())
    throw std::invalid_argument("rhs length must match equation count");
  const int c = coeffs.cols();
  FieldMatrix aug(coeffs.field(), coeffs.rows(), c + 1);
  for (int i = 0; i < coeffs.rows(); ++i) {
    for (int j = 0; j < c; ++j) aug(i, j) = coeffs(i, j);
    aug(i, c) = rhs[size_t(i)];
  }
  const RrefResult rr = rref(aug);
  for (int pc : rr.pivots)
    if (pc == c) return {SolveOutcome::NoSolution, {}};
  if (rr.rank < c) return {SolveOutcome::Underdetermined, {}};
  Vec x(size_t(c), 0);
  for (int i = 0; i < rr.rank; ++i) x[size_t(rr.pivots[size_t(i)])] = rr.reduced(i, c);
  return {SolveOutcome::Unique, std::move(x)};
}

Vec index_to_vec(std::uint64_t index, int len, std::uint32_t p) {
  Vec v(size_t(len), 0);
  for (int i = len - 1; i >= 0; --i) {
    v[size_t(i)] = static_cast<std::uint8_t>(index % p);
    index /= p;
  }
  return v;
}

std::uint64_t enumeration_size(std::uint32_t p, int e, std::uint64_t limit) {
  std::uint64_t s = 1;
  for (int i = 0; i < e; ++i) {
    if (s > limit / p)
      throw TooLargeToEnumerate("p^" + std::to_string(e) + " exceeds guard " +
                                std::to_string(limit));
    s *= p;
  }
  if (s > limit)
    throw TooLargeToEnumerate("p^" + std::to_string(e) + " exceeds guard " +
                              std::to_string(limit));
  return s;
}

}  // namespace apc
