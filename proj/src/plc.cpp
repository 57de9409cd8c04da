#include "apc/plc.hpp"

#include "apc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace apc {

std::vector<int> sample_without_replacement(int n, int k, SplitMix64& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("sample size out of range");
  std::vector<int> pool(size_t(n), 0);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(std::uint64_t(n - i)));
    std::swap(pool[size_t(i)], pool[size_t(j)]);
  }
  pool.resize(size_t(k));
  return pool;
}

ReceivedMatrix ReceivedMatrix::from_bits(const FieldMatrix& m) {
  ReceivedMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, m(i, j));
  return r;
}

NoiseEvents draw_noise_events(int m, int n, const NoiseConfig& cfg) {
  if (cfg.narrowband_rows < 0 || cfg.impulse_cols < 0 || cfg.fade_rows < 0 ||
      cfg.background_flips < 0)
    throw std::invalid_argument("negative event count");
  if (cfg.narrowband_rows + cfg.fade_rows > m)
    throw std::invalid_argument("narrowband + fade rows exceed m");
  if (cfg.impulse_cols > n) throw std::invalid_argument("impulse columns exceed n");
  if (cfg.background_flips > m * n)
    throw std::invalid_argument("background flips exceed m*n");

  SplitMix64 rng(cfg.seed);
  NoiseEvents ev;
  const std::vector<int> rows =
      sample_without_replacement(m, cfg.narrowband_rows + cfg.fade_rows, rng);
  ev.narrowband_rows.assign(rows.begin(), rows.begin() + cfg.narrowband_rows);
  ev.fade_rows.assign(rows.begin() + cfg.narrowband_rows, rows.end());
  ev.impulse_cols = sample_without_replacement(n, cfg.impulse_cols, rng);
  for (int cell : sample_without_replacement(m * n, cfg.background_flips, rng))
    ev.background_flips.emplace_back(cell / n, cell % n);

  std::sort(ev.narrowband_rows.begin(), ev.narrowband_rows.end());
  std::sort(ev.fade_rows.begin(), ev.fade_rows.end());
  std::sort(ev.impulse_cols.begin(), ev.impulse_cols.end());
  std::sort(ev.background_flips.begin(), ev.background_flips.end());
  return ev;
}

FieldMatrix apply_noise_events(const FieldMatrix& word, const NoiseEvents& ev) {
  if (word.field().p() != 2)
    throw std::invalid_argument("channel model is binary");
  FieldMatrix out = word;
  for (auto [i, j] : ev.background_flips) out(i, j) ^= 1;
  for (int i : ev.fade_rows)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = 0;
  for (int i : ev.narrowband_rows)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = 1;
  for (int j : ev.impulse_cols)
    for (int i = 0; i < out.rows(); ++i) out(i, j) = 1;
  return out;
}

std::pair<FieldMatrix, NoiseEvents> apply_noise(const FieldMatrix& word,
                                                const NoiseConfig& cfg) {
  NoiseEvents ev = draw_noise_events(word.rows(), word.cols(), cfg);
  return {apply_noise_events(word, ev), std::move(ev)};
}

namespace {

int effective_radius(int requested, const LinearCode& base) {
  if (requested > 0) return requested;
  return (base.min_distance() - 1) / 2;
}

ProductDecodeResult fail(FailureKind kind, FailureAxis axis, int index) {
  return {std::nullopt, DecodeFailure{kind, axis, index}};
}

}  // namespace

ProductDecodeResult decode_received(const ReceivedMatrix& received,
                                    const ProductCode& pc,
                                    const DecodeOptions& opts) {
  const int m = pc.rows(), n = pc.cols();
  if (received.rows() != m || received.cols() != n)
    throw std::invalid_argument("received shape does not match the code");
  const FieldSpec& f = pc.field();
  const FieldMatrix& leader = pc.leader();

  ReceivedMatrix grid = received;

  // Narrowband noise: all-one rows become erasures.
  for (int i = 0; i < m; ++i) {
    bool all_one = true;
    for (int j = 0; j < n && all_one; ++j) all_one = (grid.at(i, j) == 1);
    if (all_one)
      for (int j = 0; j < n; ++j) grid.set(i, j, kErased);
  }
  // Fade extension (opt-in): all-zero rows become erasures.
  if (opts.mark_all_zero_rows) {
    for (int i = 0; i < m; ++i) {
      bool all_zero = true;
      for (int j = 0; j < n && all_zero; ++j) all_zero = (grid.at(i, j) == 0);
      if (all_zero)
        for (int j = 0; j < n; ++j) grid.set(i, j, kErased);
    }
  }
  // Impulse noise: columns with entries in {1, erased} become erasures.
  for (int j = 0; j < n; ++j) {
    bool hit = true;
    for (int i = 0; i < m && hit; ++i)
      hit = (grid.at(i, j) == 1 || grid.erased(i, j));
    if (hit)
      for (int i = 0; i < m; ++i) grid.set(i, j, kErased);
  }
  // Subtract the coset leader from the non-erased cells.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (!grid.erased(i, j)) grid.set(i, j, f.sub(grid.at(i, j), leader(i, j)));

  const LinearCode& row_base = pc.row_code().base();
  const LinearCode& col_base = pc.col_code().base();
  const AffineCode row0(row_base, Vec(size_t(n), 0));
  const AffineCode col0(col_base, Vec(size_t(m), 0));

  auto row_of = [&](int i) {
    Vec v(size_t(n), 0);
    for (int j = 0; j < n; ++j) v[size_t(j)] = grid.at(i, j);
    return v;
  };
  auto col_of = [&](int j) {
    Vec v(size_t(m), 0);
    for (int i = 0; i < m; ++i) v[size_t(i)] = grid.at(i, j);
    return v;
  };
  auto has_erasure = [](const Vec& v) {
    return std::find(v.begin(), v.end(), kErased) != v.end();
  };

  // Bounded-distance cleanup for background flips, alternating row and
  // column passes until a fixpoint. Rows/columns containing erasures are
  // left for the erasure stage.
  if (opts.background_radius != 0) {
    const int rr = effective_radius(opts.background_radius, row_base);
    const int rc = effective_radius(opts.background_radius, col_base);
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      bool changed = false;
      for (int i = 0; i < m; ++i) {
        const Vec r = row_of(i);
        if (has_erasure(r) || row0.contains(r)) continue;
        if (auto d = row0.bounded_distance_decode(r, rr); d && *d != r) {
          for (int j = 0; j < n; ++j) grid.set(i, j, (*d)[size_t(j)]);
          changed = true;
        }
      }
      for (int j = 0; j < n; ++j) {
        const Vec c = col_of(j);
        if (has_erasure(c) || col0.contains(c)) continue;
        if (auto d = col0.bounded_distance_decode(c, rc); d && *d != c) {
          for (int i = 0; i < m; ++i) grid.set(i, j, (*d)[size_t(i)]);
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  // Columns first: narrowband erasures leave at most e_NBD erasures per
  // column. Ambiguous columns are deferred to the row pass.
  for (int j = 0; j < n; ++j) {
    const Vec c = col_of(j);
    if (!has_erasure(c)) continue;
    const ErasureDecodeResult res = col0.erasure_decode(c);
    if (res.outcome == ErasureOutcome::Decoded) {
      for (int i = 0; i < m; ++i) grid.set(i, j, res.codeword[size_t(i)]);
    } else if (res.outcome == ErasureOutcome::Inconsistent) {
      return fail(FailureKind::Inconsistent, FailureAxis::Column, j);
    }
  }
  for (int i = 0; i < m; ++i) {
    const Vec r = row_of(i);
    if (!has_erasure(r)) continue;
    const ErasureDecodeResult res = row0.erasure_decode(r);
    if (res.outcome == ErasureOutcome::Decoded) {
      for (int j = 0; j < n; ++j) grid.set(i, j, res.codeword[size_t(j)]);
    } else if (res.outcome == ErasureOutcome::Ambiguous) {
      return fail(FailureKind::Ambiguous, FailureAxis::Row, i);
    } else {
      return fail(FailureKind::Inconsistent, FailureAxis::Row, i);
    }
  }

  // Residual corruption (e.g. background flips past the radius) shows up as
  // a non-codeword row or column here.
  for (int i = 0; i < m; ++i)
    if (!row0.contains(row_of(i)))
      return fail(FailureKind::Inconsistent, FailureAxis::Row, i);
  for (int j = 0; j < n; ++j)
    if (!col0.contains(col_of(j)))
      return fail(FailureKind::Inconsistent, FailureAxis::Column, j);

  FieldMatrix out(f, m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = f.add(grid.at(i, j), leader(i, j));
  return {std::move(out), std::nullopt};
}

SimulationReport simulate(const ProductCode& pc, const NoiseConfig& tmpl,
                          int trials, std::uint64_t master_seed,
                          const DecodeOptions& opts) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  SimulationReport report;
  report.master_seed = master_seed;
  report.trials = trials;

  const int l = pc.info_rows(), k = pc.info_cols();
  const std::uint32_t p = pc.field().p();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = SplitMix64::derive(master_seed, std::uint64_t(t));
    SplitMix64 rng(trial_seed);
    FieldMatrix info(pc.field(), l, k);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < k; ++c)
        info(r, c) = static_cast<std::uint8_t>(rng.below(p));
    const FieldMatrix sent = pc.encode(info);

    NoiseConfig cfg = tmpl;
    cfg.seed = rng.next();
    const auto [bits, events] = apply_noise(sent, cfg);
    const ProductDecodeResult res =
        decode_received(ReceivedMatrix::from_bits(bits), pc, opts);

    if (res.ok() && *res.codeword == sent) {
      ++report.successes;
    } else if (res.ok()) {
      report.failures.push_back({t, trial_seed, "miscorrection", "", -1});
    } else {
      const DecodeFailure& df = *res.failure;
      report.failures.push_back(
          {t, trial_seed,
           df.kind == FailureKind::Ambiguous ? "ambiguous" : "inconsistent",
           df.axis == FailureAxis::Row ? "row" : "column", df.index});
    }
  }
  report.success_rate = double(report.successes) / double(trials);
  return report;
}

std::string report_to_json(const SimulationReport& report) {
  nlohmann::json j;
  j["master_seed"] = report.master_seed;
  j["trials"] = report.trials;
  j["successes"] = report.successes;
  j["success_rate"] = report.success_rate;
  j["failures"] = nlohmann::json::array();
  for (const TrialFailure& tf : report.failures) {
    nlohmann::json e;
    e["trial"] = tf.trial;
    e["seed"] = tf.seed;
    e["kind"] = tf.kind;
    if (tf.axis.empty()) {
      e["location"] = nullptr;
    } else {
      e["location"] = {{"axis", tf.axis}, {"index", tf.index}};
    }
    j["failures"].push_back(e);
  }
  return j.dump(2);
}

WeightBoundsReport weight_bounds_report(const ProductCode& pc) {
  WeightBoundsReport r{std::numeric_limits<int>::max(), -1,
                       std::numeric_limits<int>::max(), -1};
  pc.for_each_codeword([&](const FieldMatrix&, const FieldMatrix& w) {
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
  return r;
}

std::vector<GabidulinRow> gabidulin_comparison(int r_min, int r_max) {
  if (r_min < 1) throw std::invalid_argument("r_min must be >= 1");
  if (r_max < r_min) throw std::invalid_argument("empty range");
  if (r_max > 62) throw std::invalid_argument("r_max too large");
  std::vector<GabidulinRow> rows;
  for (int r = r_min; r <= r_max; ++r)
    rows.push_back({r, std::uint64_t(r) * std::uint64_t(r),
                    std::uint64_t(1) << (r - 1)});
  return rows;
}

}  // namespace apc
