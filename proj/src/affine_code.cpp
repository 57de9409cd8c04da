#include "apc/affine_code.hpp"

#include "apc/errors.hpp"

#include <limits>
#include <stdexcept>

namespace apc {

AffineCode::AffineCode(LinearCode base, const Vec& u) : base_(std::move(base)) {
  rep_ = base_.coset_representative(u);
  const int k = base_.dimension();
  const int n = base_.length();
  tail_.resize(size_t(n - k));
  const auto& perm = base_.permutation();
  for (int t = 0; t < n - k; ++t) tail_[size_t(t)] = rep_[size_t(perm[size_t(k + t)])];
}

bool AffineCode::rep_is_zero() const { return is_zero_vec(rep_); }

Vec AffineCode::encode(const Vec& x) const {
  Vec out = base_.encode(x);
  const FieldSpec& f = field();
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], rep_[i]);
  return out;
}

bool AffineCode::contains(const Vec& w) const {
  if (w.size() != rep_.size())
    throw std::invalid_argument("word length must be n");
  return base_.contains(vec_sub(field(), w, rep_));
}

std::pair<int, int> AffineCode::weight_profile() const {
  int lo = std::numeric_limits<int>::max();
  int hi = -1;
  for_each_codeword([&](const Vec& c) {
    const int w = vec_weight(c);
    if (w < lo) lo = w;
    if (w > hi) hi = w;
  });
  return {lo, hi};
}

ErasureDecodeResult AffineCode::erasure_decode(const Vec& w) const {
  const int n = length();
  const int k = dimension();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("word length must be n");
  const FieldSpec& f = field();
  const auto& inv_perm = base_.inverse_permutation();
  const FieldMatrix& a = base_.systematic_a();

  // One linear constraint on the information vector per non-erased position.
  std::vector<Vec> coeff_rows;
  Vec rhs;
  for (int pos = 0; pos < n; ++pos) {
    if (w[size_t(pos)] == kErased) continue;
    if (w[size_t(pos)] >= f.p()) throw std::invalid_argument("symbol out of field");
    Vec row(size_t(k), 0);
    const int i = inv_perm[size_t(pos)];
    if (i < k) {
      row[size_t(i)] = 1;
    } else {
      for (int r = 0; r < k; ++r) row[size_t(r)] = a(r, i - k);
    }
    coeff_rows.push_back(std::move(row));
    rhs.push_back(f.sub(w[size_t(pos)], rep_[size_t(pos)]));
  }

  const SolveResult sr =
      solve(FieldMatrix::from_rows(f, coeff_rows, k), rhs);
  switch (sr.outcome) {
    case SolveOutcome::Unique:
      return {ErasureOutcome::Decoded, encode(sr.solution)};
    case SolveOutcome::Underdetermined:
      return {ErasureOutcome::Ambiguous, {}};
    case SolveOutcome::NoSolution:
      return {ErasureOutcome::Inconsistent, {}};
  }
  throw std::logic_error("unhandled solve outcome");
}

std::optional<Vec> AffineCode::bounded_distance_decode(const Vec& w, int radius) const {
  if (static_cast<int>(w.size()) != length())
    throw std::invalid_argument("word length must be n");
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::optional<Vec> hit;
  int hits = 0;
  for_each_codeword([&](const Vec& c) {
    if (hamming_distance(c, w) <= radius) {
      ++hits;
      hit = c;
    }
  });
  if (hits != 1) return std::nullopt;
  return hit;
}

void AffineCode::for_each_codeword(const std::function<void(const Vec&)>& fn) const {
  base_.for_each_codeword([&](const Vec& c) { fn(vec_add(field(), c, rep_)); });
}

}  // namespace apc
