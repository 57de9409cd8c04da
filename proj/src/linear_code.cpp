#include "apc/linear_code.hpp"

#include "apc/errors.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace apc {

namespace {
constexpr std::uint64_t kDistanceGuard = std::uint64_t(1) << 24;
}

struct LinearCode::Data {
  FieldMatrix generator;
  FieldMatrix reduced;  // rref of the generator
  std::vector<int> pivots;
  FieldMatrix a;
  std::vector<int> perm;
  std::vector<int> inv_perm;
  bool identity_perm = true;

  mutable std::once_flag distance_once;
  mutable int distance = 0;
};

LinearCode::LinearCode(FieldMatrix generator) {
  auto d = std::make_shared<Data>();
  RrefResult rr = rref(generator);
  if (rr.rank < generator.rows())
    throw RankDeficient("generator has rank " + std::to_string(rr.rank) +
                        " but " + std::to_string(generator.rows()) + " rows");
  SystematicForm sf = systematic_form(generator);
  d->generator = std::move(generator);
  d->reduced = std::move(rr.reduced);
  d->pivots = std::move(rr.pivots);
  d->a = std::move(sf.a);
  d->perm = std::move(sf.perm);
  d->inv_perm.assign(d->perm.size(), 0);
  for (size_t pos = 0; pos < d->perm.size(); ++pos)
    d->inv_perm[size_t(d->perm[pos])] = static_cast<int>(pos);
  for (size_t pos = 0; pos < d->perm.size(); ++pos)
    if (d->perm[pos] != static_cast<int>(pos)) {
      d->identity_perm = false;
      break;
    }
  d_ = std::move(d);
}

LinearCode LinearCode::from_span(const FieldMatrix& rows) {
  RrefResult rr = rref(rows);
  FieldMatrix basis(rows.field(), rr.rank, rows.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis(i, j) = rr.reduced(i, j);
  return LinearCode(std::move(basis));
}

int LinearCode::length() const { return d_->generator.cols(); }
int LinearCode::dimension() const { return d_->generator.rows(); }
const FieldSpec& LinearCode::field() const { return d_->generator.field(); }
const FieldMatrix& LinearCode::generator() const { return d_->generator; }
const FieldMatrix& LinearCode::systematic_a() const { return d_->a; }
const std::vector<int>& LinearCode::permutation() const { return d_->perm; }
const std::vector<int>& LinearCode::inverse_permutation() const { return d_->inv_perm; }
bool LinearCode::permutation_is_identity() const { return d_->identity_perm; }

std::uint64_t LinearCode::size() const {
  return enumeration_size(field().p(), dimension(),
                          std::numeric_limits<std::uint64_t>::max());
}

Vec LinearCode::encode(const Vec& x) const {
  const int k = dimension();
  const int n = length();
  if (static_cast<int>(x.size()) != k)
    throw std::invalid_argument("information vector length must be k");
  Vec out(size_t(n), 0);
  for (int i = 0; i < k; ++i) out[size_t(d_->perm[size_t(i)])] = x[size_t(i)];
  const Vec xa = row_times_matrix(field(), x, d_->a);
  for (int t = 0; t < n - k; ++t) out[size_t(d_->perm[size_t(k + t)])] = xa[size_t(t)];
  return out;
}

bool LinearCode::contains(const Vec& w) const {
  if (static_cast<int>(w.size()) != length())
    throw std::invalid_argument("word length must be n");
  const FieldSpec& f = field();
  Vec v = w;
  for (int i = 0; i < dimension(); ++i) {
    const int pc = d_->pivots[size_t(i)];
    if (const std::uint8_t c = v[size_t(pc)]; c != 0)
      for (int j = 0; j < length(); ++j)
        v[size_t(j)] = f.sub(v[size_t(j)], f.mul(c, d_->reduced(i, j)));
  }
  return is_zero_vec(v);
}

int LinearCode::min_distance() const {
  std::call_once(d_->distance_once, [&] {
    const int k = dimension();
    if (k < 1) throw std::invalid_argument("zero code has no nonzero codewords");
    const std::uint64_t total = enumeration_size(field().p(), k, kDistanceGuard);
    int best = length() + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      const Vec x = index_to_vec(idx, k, field().p());
      const Vec xa = row_times_matrix(field(), x, d_->a);
      const int w = vec_weight(x) + vec_weight(xa);
      if (w < best) best = w;
    }
    d_->distance = best;
  });
  return d_->distance;
}

bool LinearCode::is_self_complementary() const {
  return contains(all_one_vec(length()));
}

Vec LinearCode::coset_representative(const Vec& u) const {
  const int k = dimension();
  const int n = length();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("word length must be n");
  Vec u1(size_t(k), 0);
  Vec u2(size_t(n - k), 0);
  for (int i = 0; i < k; ++i) u1[size_t(i)] = u[size_t(d_->perm[size_t(i)])];
  for (int t = 0; t < n - k; ++t) u2[size_t(t)] = u[size_t(d_->perm[size_t(k + t)])];
  const Vec a = vec_sub(field(), u2, row_times_matrix(field(), u1, d_->a));
  Vec out(size_t(n), 0);
  for (int t = 0; t < n - k; ++t) out[size_t(d_->perm[size_t(k + t)])] = a[size_t(t)];
  return out;
}

bool LinearCode::is_subcode_of(const LinearCode& c2) const {
  if (length() != c2.length() || !(field() == c2.field())) return false;
  for (int i = 0; i < dimension(); ++i)
    if (!c2.contains(d_->generator.row(i))) return false;
  return true;
}

bool LinearCode::same_code_as(const LinearCode& other) const {
  return dimension() == other.dimension() && is_subcode_of(other);
}

void LinearCode::for_each_codeword(const std::function<void(const Vec&)>& fn) const {
  const std::uint64_t total =
      enumeration_size(field().p(), dimension(), kDistanceGuard);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    fn(encode(index_to_vec(idx, dimension(), field().p())));
}

HyperplaneResult hyperplane_between(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.is_subcode_of(c2))
    throw NotNested("first code is not a subcode of the second");
  if (c1.dimension() >= c2.dimension())
    throw EqualDimensions("need dim(c1) < dim(c2)");
  const FieldSpec& f = c1.field();
  const int n = c1.length();

  // Elimination basis seeded with c1; rows kept from c2 extend it.
  std::vector<Vec> basis;       // reduced rows
  std::vector<int> basis_piv;   // their pivot columns
  auto reduce = [&](Vec v) {
    for (size_t t = 0; t < basis.size(); ++t)
      if (const std::uint8_t c = v[size_t(basis_piv[t])]; c != 0)
        for (int j = 0; j < n; ++j)
          v[size_t(j)] = f.sub(v[size_t(j)], f.mul(c, basis[t][size_t(j)]));
    return v;
  };
  auto insert = [&](const Vec& v) -> bool {
    Vec r = reduce(v);
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (r[size_t(j)] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    if (const std::uint8_t s = f.inv(r[size_t(piv)]); s != 1)
      for (int j = 0; j < n; ++j) r[size_t(j)] = f.mul(r[size_t(j)], s);
    basis.push_back(std::move(r));
    basis_piv.push_back(piv);
    return true;
  };

  for (int i = 0; i < c1.dimension(); ++i) insert(c1.generator().row(i));

  std::vector<Vec> extension;
  for (int i = 0; i < c2.dimension() && static_cast<int>(basis.size()) < c2.dimension();
       ++i) {
    const Vec row = c2.generator().row(i);
    if (insert(row)) extension.push_back(row);
  }

  std::vector<Vec> c3_rows;
  for (int i = 0; i < c1.dimension(); ++i) c3_rows.push_back(c1.generator().row(i));
  for (size_t i = 0; i + 1 < extension.size(); ++i) c3_rows.push_back(extension[i]);
  LinearCode c3(FieldMatrix::from_rows(f, c3_rows, n));
  return {std::move(c3), extension.back()};
}

LinearCode even_weight_code(int n, FieldSpec field) {
  if (n < 2) throw std::invalid_argument("even_weight needs n >= 2");
  FieldMatrix g(field, n - 1, n);
  for (int i = 0; i < n - 1; ++i) {
    g(i, i) = 1;
    g(i, n - 1) = field.neg(1);  // coordinate sum is zero; weight parity for p=2
  }
  return LinearCode(std::move(g));
}

LinearCode repetition_code(int n, FieldSpec field) {
  if (n < 1) throw std::invalid_argument("repetition needs n >= 1");
  return LinearCode(FieldMatrix::all_one(field, 1, n));
}

LinearCode reed_muller_1_code(int r) {
  if (r < 1) throw std::invalid_argument("reed_muller_1 needs r >= 1");
  if (r > 20) throw std::invalid_argument("reed_muller_1 r too large");
  const int n = 1 << r;
  FieldMatrix g(FieldSpec(2), r + 1, n);
  for (int c = 0; c < n; ++c) {
    g(0, c) = 1;
    // Indicator rows read the column index most-significant bit first.
    for (int t = 0; t < r; ++t) g(1 + t, c) = static_cast<std::uint8_t>((c >> (r - 1 - t)) & 1);
  }
  return LinearCode(std::move(g));
}

LinearCode full_space_code(int n, FieldSpec field) {
  if (n < 1) throw std::invalid_argument("full_space needs n >= 1");
  return LinearCode(FieldMatrix::identity(field, n));
}

std::vector<Vec> coset_representatives(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.is_subcode_of(c2))
    throw NotNested("first code is not a subcode of the second");
  std::set<Vec> reps;
  c2.for_each_codeword([&](const Vec& w) { reps.insert(c1.coset_representative(w)); });
  return {reps.begin(), reps.end()};
}

}  // namespace apc
