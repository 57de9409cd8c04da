#include "apc/product_code.hpp"

#include "apc/errors.hpp"

#include <limits>
#include <stdexcept>

namespace apc {

namespace {
constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 20;
}

ProductCode::ProductCode(AffineCode row, AffineCode col, Kind kind)
    : row_(std::move(row)), col_(std::move(col)), kind_(kind) {
  if (!(row_.field() == col_.field()))
    throw std::invalid_argument("component codes over different fields");
  if (!check_compatibility(row_.base().systematic_a(), col_.base().systematic_a(),
                           row_.tail(), col_.tail()))
    throw IncompatibleRepresentatives(
        "representatives fail the encoding-order compatibility condition");

  // U = encoding of the zero block; check it against the closed form, which
  // applies whenever construction preconditions held.
  FieldMatrix zero_info(field(), info_rows(), info_cols());
  leader_ = encode_cols_then_rows(zero_info);
  const bool self_comp = row_.base().is_self_complementary() &&
                         col_.base().is_self_complementary();
  if (self_comp || (row_.rep_is_zero() && col_.rep_is_zero())) {
    const FieldMatrix closed = coset_leader(field(), row_.tail(), col_.tail(),
                                            info_cols(), info_rows(), rows(), cols());
    const auto& rp = row_.base().permutation();
    const auto& cp = col_.base().permutation();
    for (int r = 0; r < rows(); ++r)
      for (int c = 0; c < cols(); ++c)
        if (leader_(size_t(cp[size_t(r)]), size_t(rp[size_t(c)])) != closed(r, c))
          throw std::logic_error("coset leader disagrees with its closed form");
  }
}

ProductCode ProductCode::classical(LinearCode row, LinearCode col) {
  const Vec zero_u(size_t(row.length()), 0);
  const Vec zero_v(size_t(col.length()), 0);
  AffineCode ra(std::move(row), zero_u);
  AffineCode ca(std::move(col), zero_v);
  return ProductCode(std::move(ra), std::move(ca), Kind::Classical);
}

ProductCode ProductCode::construction_i(AffineCode row, AffineCode col) {
  if (!row.base().is_self_complementary())
    throw NotSelfComplementary("row component: all-one vector not in base code");
  if (!col.base().is_self_complementary())
    throw NotSelfComplementary("column component: all-one vector not in base code");
  const Kind kind = (row.rep_is_zero() && col.rep_is_zero()) ? Kind::Classical
                                                             : Kind::ConstructionI;
  return ProductCode(std::move(row), std::move(col), kind);
}

ProductCode ProductCode::construction_ia(const LinearCode& c1, const LinearCode& c2,
                                         const LinearCode& d1, const LinearCode& d2) {
  if (!c1.is_self_complementary())
    throw MissingAllOne("row side: all-one vector not in the inner code");
  if (!d1.is_self_complementary())
    throw MissingAllOne("column side: all-one vector not in the inner code");
  HyperplaneResult hr = hyperplane_between(c1, c2);
  HyperplaneResult hc = hyperplane_between(d1, d2);
  AffineCode row(std::move(hr.code), hr.translate);
  AffineCode col(std::move(hc.code), hc.translate);
  ProductCode pc(std::move(row), std::move(col), Kind::ConstructionIA);
  return pc;
}

std::uint64_t ProductCode::dimension() const {
  return std::uint64_t(info_rows()) * std::uint64_t(info_cols());
}

std::uint64_t ProductCode::size() const {
  return enumeration_size(field().p(), info_rows() * info_cols(),
                          std::numeric_limits<std::uint64_t>::max());
}

namespace {

// Places a systematic-coordinate block matrix into original coordinates.
FieldMatrix to_original(const FieldMatrix& permuted, const std::vector<int>& row_perm,
                        const std::vector<int>& col_perm) {
  FieldMatrix out(permuted.field(), permuted.rows(), permuted.cols());
  for (int r = 0; r < permuted.rows(); ++r)
    for (int c = 0; c < permuted.cols(); ++c)
      out(col_perm[size_t(r)], row_perm[size_t(c)]) = permuted(r, c);
  return out;
}

}  // namespace

FieldMatrix ProductCode::encode_cols_then_rows(const FieldMatrix& info) const {
  const int k = info_cols(), l = info_rows(), m = rows(), n = cols();
  if (info.rows() != l || info.cols() != k)
    throw std::invalid_argument("information block must be l x k");
  const FieldSpec& f = field();
  const FieldMatrix& a_mat = row_.base().systematic_a();  // k x (n-k)
  const FieldMatrix& b_mat = col_.base().systematic_a();  // l x (m-l)
  const Vec& a = row_.tail();
  const Vec& b = col_.tail();

  FieldMatrix np(f, m, n);
  const FieldMatrix ma = info * a_mat;            // l x (n-k)
  const FieldMatrix btm = b_mat.transposed() * info;  // (m-l) x k
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < k; ++c) np(r, c) = info(r, c);
  for (int r = 0; r < l; ++r)
    for (int t = 0; t < n - k; ++t) np(r, k + t) = f.add(ma(r, t), a[size_t(t)]);
  FieldMatrix bl(f, m - l, k);
  for (int s = 0; s < m - l; ++s)
    for (int c = 0; c < k; ++c) {
      bl(s, c) = f.add(btm(s, c), b[size_t(s)]);
      np(l + s, c) = bl(s, c);
    }
  const FieldMatrix bla = bl * a_mat;  // (m-l) x (n-k)
  for (int s = 0; s < m - l; ++s)
    for (int t = 0; t < n - k; ++t)
      np(l + s, k + t) = f.add(bla(s, t), a[size_t(t)]);

  return to_original(np, row_.base().permutation(), col_.base().permutation());
}

FieldMatrix ProductCode::encode_rows_then_cols(const FieldMatrix& info) const {
  const int k = info_cols(), l = info_rows(), m = rows(), n = cols();
  if (info.rows() != l || info.cols() != k)
    throw std::invalid_argument("information block must be l x k");
  const FieldSpec& f = field();
  const FieldMatrix& a_mat = row_.base().systematic_a();
  const FieldMatrix& b_mat = col_.base().systematic_a();
  const Vec& a = row_.tail();
  const Vec& b = col_.tail();

  FieldMatrix np(f, m, n);
  const FieldMatrix ma = info * a_mat;
  FieldMatrix tr(f, l, n - k);  // M A + j_l^T a
  for (int r = 0; r < l; ++r)
    for (int t = 0; t < n - k; ++t) tr(r, t) = f.add(ma(r, t), a[size_t(t)]);
  const FieldMatrix btm = b_mat.transposed() * info;
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < k; ++c) np(r, c) = info(r, c);
  for (int r = 0; r < l; ++r)
    for (int t = 0; t < n - k; ++t) np(r, k + t) = tr(r, t);
  for (int s = 0; s < m - l; ++s)
    for (int c = 0; c < k; ++c) np(l + s, c) = f.add(btm(s, c), b[size_t(s)]);
  const FieldMatrix bttr = b_mat.transposed() * tr;  // (m-l) x (n-k)
  for (int s = 0; s < m - l; ++s)
    for (int t = 0; t < n - k; ++t)
      np(l + s, k + t) = f.add(bttr(s, t), b[size_t(s)]);

  return to_original(np, row_.base().permutation(), col_.base().permutation());
}

FieldMatrix ProductCode::information_block(const FieldMatrix& word) const {
  if (word.rows() != rows() || word.cols() != cols())
    throw std::invalid_argument("codeword shape mismatch");
  const auto& rp = row_.base().permutation();
  const auto& cp = col_.base().permutation();
  FieldMatrix info(field(), info_rows(), info_cols());
  for (int r = 0; r < info_rows(); ++r)
    for (int c = 0; c < info_cols(); ++c)
      info(r, c) = word(cp[size_t(r)], rp[size_t(c)]);
  return info;
}

void ProductCode::for_each_codeword(
    const std::function<void(const FieldMatrix&, const FieldMatrix&)>& fn) const {
  const int bits = info_rows() * info_cols();
  const std::uint64_t total = enumeration_size(field().p(), bits, kEnumerationGuard);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Vec flat = index_to_vec(idx, bits, field().p());
    FieldMatrix info(field(), info_rows(), info_cols());
    for (int r = 0; r < info_rows(); ++r)
      for (int c = 0; c < info_cols(); ++c)
        info(r, c) = flat[size_t(r) * size_t(info_cols()) + size_t(c)];
    fn(info, encode_cols_then_rows(info));
  }
}

std::vector<FieldMatrix> ProductCode::enumerate_codewords() const {
  std::vector<FieldMatrix> out;
  for_each_codeword([&](const FieldMatrix&, const FieldMatrix& w) { out.push_back(w); });
  return out;
}

bool check_compatibility(const FieldMatrix& row_a, const FieldMatrix& col_b,
                         const Vec& a, const Vec& b) {
  const FieldSpec& f = row_a.field();
  const int k = row_a.rows(), nk = row_a.cols();
  const int l = col_b.rows(), ml = col_b.cols();
  if (static_cast<int>(a.size()) != nk || static_cast<int>(b.size()) != ml)
    throw std::invalid_argument("representative tails do not match A/B shapes");

  // j_k A - j_{n-k}
  Vec ja = row_times_matrix(f, all_one_vec(k), row_a);
  for (auto& e : ja) e = f.sub(e, 1);
  // B^T j_l^T - j_{m-l}^T
  Vec btj(size_t(ml), 0);
  for (int s = 0; s < ml; ++s) {
    std::uint32_t acc = 0;
    for (int r = 0; r < l; ++r) acc += col_b(r, s);
    btj[size_t(s)] = f.sub(static_cast<std::uint8_t>(acc % f.p()), 1);
  }
  for (int s = 0; s < ml; ++s)
    for (int t = 0; t < nk; ++t)
      if (f.mul(b[size_t(s)], ja[size_t(t)]) != f.mul(btj[size_t(s)], a[size_t(t)]))
        return false;
  return true;
}

FieldMatrix coset_leader(const FieldSpec& f, const Vec& a, const Vec& b, int k,
                         int l, int m, int n) {
  if (static_cast<int>(a.size()) != n - k || static_cast<int>(b.size()) != m - l)
    throw std::invalid_argument("representative tails do not match shapes");
  FieldMatrix u(f, m, n);
  for (int r = 0; r < l; ++r)
    for (int t = 0; t < n - k; ++t) u(r, k + t) = a[size_t(t)];
  for (int s = 0; s < m - l; ++s)
    for (int c = 0; c < k; ++c) u(l + s, c) = b[size_t(s)];
  for (int s = 0; s < m - l; ++s)
    for (int t = 0; t < n - k; ++t) u(l + s, k + t) = f.add(b[size_t(s)], a[size_t(t)]);
  return u;
}

FieldMatrix coset_leader_general(const FieldSpec& f, const Vec& a, const Vec& b,
                                 const FieldMatrix& row_a, int k, int l, int m,
                                 int n) {
  if (row_a.rows() != k || row_a.cols() != n - k)
    throw std::invalid_argument("A shape mismatch");
  FieldMatrix u = coset_leader(f, a, b, k, l, m, n);
  const Vec ja = row_times_matrix(f, all_one_vec(k), row_a);  // j_k A
  for (int s = 0; s < m - l; ++s)
    for (int t = 0; t < n - k; ++t)
      u(l + s, k + t) = f.add(f.mul(b[size_t(s)], ja[size_t(t)]), a[size_t(t)]);
  return u;
}

bool verify_property(const FieldMatrix& word, const AffineCode& row_code,
                     const AffineCode& col_code) {
  if (word.cols() != row_code.length() || word.rows() != col_code.length())
    throw std::invalid_argument("codeword shape mismatch");
  for (int i = 0; i < word.rows(); ++i)
    if (!row_code.contains(word.row(i))) return false;
  for (int j = 0; j < word.cols(); ++j)
    if (!col_code.contains(word.col(j))) return false;
  return true;
}

std::uint64_t union_coset_size(int k1, int l1, std::uint64_t size_u,
                               std::uint64_t size_v, std::uint32_t p) {
  if (k1 < 0 || l1 < 0) throw std::invalid_argument("negative dimension");
  const std::uint64_t base = enumeration_size(
      p, k1 * l1, std::numeric_limits<std::uint64_t>::max());
  if (size_u != 0 && size_v != 0 &&
      base > std::numeric_limits<std::uint64_t>::max() / (size_u * size_v))
    throw std::overflow_error("union coset size overflows");
  return size_u * size_v * base;
}

bool union_coset_contains(const FieldMatrix& word, const LinearCode& c1,
                          const std::vector<Vec>& us, const LinearCode& d1,
                          const std::vector<Vec>& vs) {
  for (const Vec& u : us)
    for (const Vec& v : vs) {
      const ProductCode pc =
          ProductCode::construction_i(AffineCode(c1, u), AffineCode(d1, v));
      const FieldMatrix diff = word - pc.leader();
      bool member = true;
      for (int i = 0; member && i < diff.rows(); ++i)
        if (!c1.contains(diff.row(i))) member = false;
      for (int j = 0; member && j < diff.cols(); ++j)
        if (!d1.contains(diff.col(j))) member = false;
      if (member) return true;
    }
  return false;
}

}  // namespace apc
