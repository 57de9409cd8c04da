// apc: construct, encode, decode and simulate products of affine codes.

#include <CLI11.hpp>

#include "apc/code_spec.hpp"
#include "apc/errors.hpp"
#include "apc/plc.hpp"
#include "apc/rng.hpp"
#include "apc/text_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // decode failure / verification mismatch
constexpr int kExitUsage = 2;    // bad flags, bad files, bad specs

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

nlohmann::json load_json(const std::string& path) {
  return nlohmann::json::parse(read_input(path));
}

struct Filter {
  std::optional<int> row_weight;
  std::optional<int> col_weight;
};

Filter parse_filter(const std::string& text) {
  Filter f;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad filter item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const int value = std::stoi(item.substr(eq + 1));
    if (key == "row-weight")
      f.row_weight = value;
    else if (key == "col-weight")
      f.col_weight = value;
    else
      throw std::runtime_error("unknown filter key '" + key + "'");
  }
  return f;
}

bool matches(const apc::FieldMatrix& w, const Filter& f) {
  if (f.row_weight)
    for (int i = 0; i < w.rows(); ++i)
      if (apc::vec_weight(w.row(i)) != *f.row_weight) return false;
  if (f.col_weight)
    for (int j = 0; j < w.cols(); ++j)
      if (apc::vec_weight(w.col(j)) != *f.col_weight) return false;
  return true;
}

const char* kind_name(apc::ProductCode::Kind k) {
  switch (k) {
    case apc::ProductCode::Kind::Classical: return "classical";
    case apc::ProductCode::Kind::ConstructionI: return "construction_I";
    case apc::ProductCode::Kind::ConstructionIA: return "construction_IA";
  }
  return "?";
}

int cmd_construct(const std::string& code_path, bool as_json) {
  const nlohmann::json spec = load_json(code_path);
  if (apc::looks_like_irregular_spec(spec)) {
    const apc::IrregularSpec irr = apc::parse_irregular_spec(spec);
    const auto dim = apc::dimension_bound(irr);
    if (as_json) {
      nlohmann::json out;
      out["type"] = "irregular";
      out["m"] = irr.m();
      out["n"] = irr.n();
      out["dimension_bound"] = dim;
      out["nested_rows"] = irr.nested_rows();
      out["nested_cols"] = irr.nested_cols();
      out["translate"] = apc::format_matrix(apc::translate_matrix(irr));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "irregular product code, " << irr.m() << " x " << irr.n()
                << "\n"
                << "dimension bound K = " << dim
                << (irr.nested_rows() && irr.nested_cols()
                        ? " (nested chains: equality)"
                        : " (not nested: upper bound only)")
                << "\n"
                << "translate:\n"
                << apc::format_matrix(apc::translate_matrix(irr));
    }
    return kExitOk;
  }
  if (apc::looks_like_product_spec(spec)) {
    const apc::ProductCode pc = apc::parse_product_spec(spec);
    const apc::LinearCode& rb = pc.row_code().base();
    const apc::LinearCode& cb = pc.col_code().base();
    if (as_json) {
      nlohmann::json out;
      out["type"] = "product";
      out["kind"] = kind_name(pc.kind());
      out["m"] = pc.rows();
      out["n"] = pc.cols();
      out["k"] = pc.info_cols();
      out["l"] = pc.info_rows();
      out["dimension"] = pc.dimension();
      out["row_base"] = {{"n", rb.length()},
                         {"k", rb.dimension()},
                         {"d", rb.min_distance()}};
      out["col_base"] = {{"n", cb.length()},
                         {"k", cb.dimension()},
                         {"d", cb.min_distance()}};
      out["row_rep"] = apc::format_vec(pc.row_code().representative(), pc.field());
      out["col_rep"] = apc::format_vec(pc.col_code().representative(), pc.field());
      out["leader"] = apc::format_matrix(pc.leader());
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << kind_name(pc.kind()) << " product code, " << pc.rows() << " x "
                << pc.cols() << ", dimension " << pc.dimension() << "\n"
                << "row code: coset of [" << rb.length() << "," << rb.dimension()
                << "," << rb.min_distance() << "], rep "
                << apc::format_vec(pc.row_code().representative(), pc.field())
                << "\n"
                << "col code: coset of [" << cb.length() << "," << cb.dimension()
                << "," << cb.min_distance() << "], rep "
                << apc::format_vec(pc.col_code().representative(), pc.field())
                << "\n"
                << "coset leader U:\n"
                << apc::format_matrix(pc.leader());
    }
    return kExitOk;
  }
  const apc::LinearCode c = apc::parse_code_spec(spec);
  if (as_json) {
    nlohmann::json out;
    out["type"] = "linear";
    out["n"] = c.length();
    out["k"] = c.dimension();
    out["d"] = c.min_distance();
    out["self_complementary"] = c.is_self_complementary();
    out["generator"] = apc::format_matrix(c.generator());
    out["systematic_a"] = apc::format_matrix(c.systematic_a());
    out["permutation"] = c.permutation();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "linear [" << c.length() << "," << c.dimension() << ","
              << c.min_distance() << "] code"
              << (c.is_self_complementary() ? ", self-complementary" : "") << "\n"
              << "generator:\n"
              << apc::format_matrix(c.generator());
  }
  return kExitOk;
}

int cmd_encode(const std::string& code_path, const std::string& in_path,
               const std::string& out_path) {
  const apc::ProductCode pc = apc::parse_product_spec(load_json(code_path));
  const apc::FieldMatrix info = apc::parse_matrix(read_input(in_path), pc.field());
  write_output(out_path, apc::format_matrix(pc.encode(info)));
  return kExitOk;
}

int cmd_decode(const std::string& code_path, const std::string& in_path,
               const std::string& out_path, const apc::DecodeOptions& opts) {
  const apc::ProductCode pc = apc::parse_product_spec(load_json(code_path));
  const apc::ReceivedMatrix received =
      apc::parse_received(read_input(in_path), pc.field());
  const apc::ProductDecodeResult res = apc::decode_received(received, pc, opts);
  if (!res.ok()) {
    const apc::DecodeFailure& f = *res.failure;
    std::cerr << "decode failed: "
              << (f.kind == apc::FailureKind::Ambiguous ? "ambiguous"
                                                        : "inconsistent")
              << " at "
              << (f.axis == apc::FailureAxis::Row ? "row " : "column ") << f.index
              << "\n";
    return kExitFailure;
  }
  write_output(out_path, apc::format_matrix(*res.codeword));
  return kExitOk;
}

int cmd_simulate(const std::string& code_path, const apc::NoiseConfig& tmpl,
                 int trials, std::uint64_t seed, const apc::DecodeOptions& opts,
                 bool as_json) {
  const apc::ProductCode pc = apc::parse_product_spec(load_json(code_path));
  const apc::SimulationReport report = apc::simulate(pc, tmpl, trials, seed, opts);
  if (as_json) {
    std::cout << apc::report_to_json(report) << "\n";
  } else {
    std::cout << "trials:       " << report.trials << "\n"
              << "successes:    " << report.successes << "\n"
              << "success rate: " << report.success_rate << "\n";
    int ambiguous = 0, inconsistent = 0, miscorrected = 0;
    for (const auto& f : report.failures) {
      if (f.kind == "ambiguous") ++ambiguous;
      if (f.kind == "inconsistent") ++inconsistent;
      if (f.kind == "miscorrection") ++miscorrected;
    }
    std::cout << "failures:     " << report.failures.size() << " (ambiguous "
              << ambiguous << ", inconsistent " << inconsistent
              << ", miscorrection " << miscorrected << ")\n";
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& code_path, const std::string& filter_text,
                  bool count_only) {
  const apc::ProductCode pc = apc::parse_product_spec(load_json(code_path));
  const Filter filter = parse_filter(filter_text);
  std::uint64_t count = 0;
  pc.for_each_codeword([&](const apc::FieldMatrix&, const apc::FieldMatrix& w) {
    if (!matches(w, filter)) return;
    ++count;
    if (!count_only) std::cout << apc::format_matrix(w) << "\n";
  });
  if (count_only) std::cout << count << "\n";
  return kExitOk;
}

int cmd_table(const std::string& range, bool as_json) {
  const auto dots = range.find("..");
  if (dots == std::string::npos)
    throw std::runtime_error("range must look like 3..7");
  const int lo = std::stoi(range.substr(0, dots));
  const int hi = std::stoi(range.substr(dots + 2));
  const auto rows = apc::gabidulin_comparison(lo, hi);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
      out.push_back({{"r", r.r},
                     {"product_dim", r.product_dim},
                     {"gabidulin_dim", r.gabidulin_dim}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "r   product r^2   gabidulin 2^(r-1)\n";
    for (const auto& r : rows)
      std::cout << r.r << "   " << r.product_dim << "\t  " << r.gabidulin_dim
                << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& code_path, std::uint64_t seed) {
  const apc::ProductCode pc = apc::parse_product_spec(load_json(code_path));
  const std::uint64_t dim = pc.dimension();
  const std::uint32_t p = pc.field().p();
  bool all_pass = true;
  const auto report = [&](const char* name, bool pass, const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    all_pass = all_pass && pass;
  };

  const bool exhaustive = dim <= 12 && p == 2;
  std::vector<apc::FieldMatrix> infos;
  if (exhaustive) {
    pc.for_each_codeword(
        [&](const apc::FieldMatrix& info, const apc::FieldMatrix&) {
          infos.push_back(info);
        });
  } else {
    apc::SplitMix64 rng(seed);
    for (int t = 0; t < 500; ++t) {
      apc::FieldMatrix info(pc.field(), pc.info_rows(), pc.info_cols());
      for (int r = 0; r < info.rows(); ++r)
        for (int c = 0; c < info.cols(); ++c)
          info(r, c) = static_cast<std::uint8_t>(rng.below(p));
      infos.push_back(info);
    }
  }
  const std::string how = exhaustive
                              ? "exhaustive"
                              : "500 random information blocks, seed " +
                                    std::to_string(seed);

  bool order_ok = true, property_ok = true, coset_ok = true, systematic_ok = true;
  std::set<std::vector<std::uint8_t>> blocks;
  for (const apc::FieldMatrix& info : infos) {
    const apc::FieldMatrix w = pc.encode_cols_then_rows(info);
    order_ok = order_ok && (pc.encode_rows_then_cols(info) == w);
    property_ok =
        property_ok && apc::verify_property(w, pc.row_code(), pc.col_code());
    const apc::FieldMatrix diff = w - pc.leader();
    for (int i = 0; i < diff.rows(); ++i)
      coset_ok = coset_ok && pc.row_code().base().contains(diff.row(i));
    for (int j = 0; j < diff.cols(); ++j)
      coset_ok = coset_ok && pc.col_code().base().contains(diff.col(j));
    systematic_ok = systematic_ok && (pc.information_block(w) == info);
    std::vector<std::uint8_t> flat;
    for (int r = 0; r < info.rows(); ++r)
      for (int c = 0; c < info.cols(); ++c) flat.push_back(info(r, c));
    blocks.insert(flat);
  }
  report("order independence (cols-first == rows-first)", order_ok, how);
  report("property (C,D): rows and columns in the component cosets", property_ok,
         how);
  report("coset structure: codeword - U in the classical product", coset_ok, how);
  if (exhaustive) systematic_ok = systematic_ok && blocks.size() == pc.size();
  report("systematic of dimension k*l", systematic_ok, how);

  if (dim <= 20) {
    const apc::WeightBoundsReport wb = apc::weight_bounds_report(pc);
    std::ostringstream note;
    note << "rows [" << wb.row_min << "," << wb.row_max << "], cols ["
         << wb.col_min << "," << wb.col_max << "]";
    if (pc.kind() == apc::ProductCode::Kind::ConstructionIA) {
      const int dc = pc.row_code().base().min_distance();
      const int dd = pc.col_code().base().min_distance();
      const bool ok = wb.row_min >= dc && wb.row_max <= pc.cols() - dc &&
                      wb.col_min >= dd && wb.col_max <= pc.rows() - dd;
      report("weight bounds within [d, len - d]", ok, note.str());
    } else {
      report("weight bounds computed", true, note.str());
    }
  } else {
    report("weight bounds computed", true, "SKIP: code too large to enumerate");
  }

  if (dim <= 10) {
    std::vector<apc::FieldMatrix> words = pc.enumerate_codewords();
    int best = -1;
    for (size_t i = 0; i < words.size(); ++i)
      for (size_t j = i + 1; j < words.size(); ++j) {
        int d = 0;
        for (int r = 0; r < words[i].rows(); ++r)
          for (int c = 0; c < words[i].cols(); ++c)
            d += (words[i](r, c) != words[j](r, c));
        if (best < 0 || d < best) best = d;
      }
    const int expected = pc.row_code().base().min_distance() *
                         pc.col_code().base().min_distance();
    report("minimum distance d_C * d_D", best == expected,
           "exhaustive: " + std::to_string(best));
  } else {
    report("minimum distance d_C * d_D", true, "SKIP: code too large to enumerate");
  }

  return all_pass ? kExitOk : kExitFailure;
}

int cmd_irregular_dim(const std::string& spec_path) {
  const apc::IrregularSpec spec = apc::parse_irregular_spec(load_json(spec_path));
  std::cout << apc::dimension_bound(spec) << "\n";
  return kExitOk;
}

int cmd_irregular_encode(const std::string& spec_path, const std::string& info_text,
                         const std::string& in_path, const std::string& out_path) {
  const apc::IrregularSpec spec = apc::parse_irregular_spec(load_json(spec_path));
  std::string text = info_text;
  if (text.empty()) text = read_input(in_path);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  const apc::Vec info = apc::parse_vec(text, spec.field());
  write_output(out_path, apc::format_matrix(apc::encode_irregular(spec, info)));
  return kExitOk;
}

int cmd_irregular_verify(const std::string& spec_path, const std::string& in_path) {
  const apc::IrregularSpec spec = apc::parse_irregular_spec(load_json(spec_path));
  const apc::FieldMatrix w = apc::parse_matrix(read_input(in_path), spec.field());
  if (apc::verify_irregular(w, spec)) {
    std::cout << "PASS  every row in C_i + u, every column in D_j + v\n";
    return kExitOk;
  }
  std::cout << "FAIL  matrix violates a row or column membership\n";
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"products of affine codes: weight-restricted matrix codes for "
               "impulsive/narrowband channels"};
  app.require_subcommand(1);

  std::string code_path, spec_path, in_path = "-", out_path, filter_text,
              info_text, range = "3..7";
  bool as_json = false, count_only = false, mark_fades = false;
  int trials = 1000, e_nbd = 0, e_imp = 0, e_bg = 0, e_fade = 0;
  int background_radius = 0, max_iters = 10;
  std::uint64_t seed = 0;

  auto* construct =
      app.add_subcommand("construct", "show a code built from a JSON spec");
  construct->add_option("--code", code_path, "code spec (JSON)")->required();
  construct->add_flag("--json", as_json, "machine-readable output");

  auto* encode = app.add_subcommand("encode", "encode an information block");
  encode->add_option("--code", code_path, "product spec (JSON)")->required();
  encode->add_option("--in", in_path, "information matrix (text, - for stdin)");
  encode->add_option("--out", out_path, "output path (default stdout)");

  auto* decode = app.add_subcommand("decode", "decode a received matrix");
  decode->add_option("--code", code_path, "product spec (JSON)")->required();
  decode->add_option("--in", in_path, "received matrix with e-erasures");
  decode->add_option("--out", out_path, "output path (default stdout)");
  decode->add_option("--background-radius", background_radius,
                     "bounded-distance radius (-1: auto)");
  decode->add_option("--max-iters", max_iters, "bounded-distance pass limit");
  decode->add_flag("--mark-fades", mark_fades, "treat all-zero rows as erasures");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo channel trials");
  simulate->add_option("--code", code_path, "product spec (JSON)")->required();
  simulate->add_option("--e-nbd", e_nbd, "narrowband rows per trial");
  simulate->add_option("--e-imp", e_imp, "impulse columns per trial");
  simulate->add_option("--e-bg", e_bg, "background flips per trial");
  simulate->add_option("--e-fade", e_fade, "faded rows per trial");
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", seed, "master seed");
  simulate->add_option("--background-radius", background_radius,
                       "bounded-distance radius (-1: auto; default auto when e-bg > 0)");
  simulate->add_option("--max-iters", max_iters, "bounded-distance pass limit");
  simulate->add_flag("--mark-fades", mark_fades, "treat all-zero rows as erasures");
  simulate->add_flag("--json", as_json, "emit the JSON report");

  auto* verify = app.add_subcommand("verify", "check the code's structural claims");
  verify->add_option("--code", code_path, "product spec (JSON)")->required();
  verify->add_option("--seed", seed, "seed for sampled checks");

  auto* enumerate = app.add_subcommand("enumerate", "list or count codewords");
  enumerate->add_option("--code", code_path, "product spec (JSON)")->required();
  enumerate->add_option("--filter", filter_text, "e.g. row-weight=2,col-weight=2");
  enumerate->add_flag("--count", count_only, "print the count only");

  auto* table = app.add_subcommand("table", "dimension comparison table");
  table->add_option("--gabidulin", range, "range of r, e.g. 3..7");
  table->add_flag("--json", as_json, "machine-readable output");

  auto* irr_dim =
      app.add_subcommand("irregular-dim", "dimension of an irregular spec");
  irr_dim->add_option("--spec", spec_path, "irregular spec (JSON)")->required();

  auto* irr_enc =
      app.add_subcommand("irregular-encode", "encode an irregular codeword");
  irr_enc->add_option("--spec", spec_path, "irregular spec (JSON)")->required();
  irr_enc->add_option("--info", info_text, "information symbols inline");
  irr_enc->add_option("--in", in_path, "information symbols file");
  irr_enc->add_option("--out", out_path, "output path (default stdout)");

  auto* irr_ver =
      app.add_subcommand("irregular-verify", "check per-row/column membership");
  irr_ver->add_option("--spec", spec_path, "irregular spec (JSON)")->required();
  irr_ver->add_option("--in", in_path, "matrix to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apc::DecodeOptions opts;
    opts.background_radius = background_radius;
    opts.max_iters = max_iters;
    opts.mark_all_zero_rows = mark_fades;

    if (construct->parsed()) return cmd_construct(code_path, as_json);
    if (encode->parsed()) return cmd_encode(code_path, in_path, out_path);
    if (decode->parsed()) return cmd_decode(code_path, in_path, out_path, opts);
    if (simulate->parsed()) {
      if (e_bg > 0 && simulate->count("--background-radius") == 0)
        opts.background_radius = -1;
      apc::NoiseConfig tmpl;
      tmpl.narrowband_rows = e_nbd;
      tmpl.impulse_cols = e_imp;
      tmpl.background_flips = e_bg;
      tmpl.fade_rows = e_fade;
      return cmd_simulate(code_path, tmpl, trials, seed, opts, as_json);
    }
    if (verify->parsed()) return cmd_verify(code_path, seed);
    if (enumerate->parsed()) return cmd_enumerate(code_path, filter_text, count_only);
    if (table->parsed()) return cmd_table(range, as_json);
    if (irr_dim->parsed()) return cmd_irregular_dim(spec_path);
    if (irr_enc->parsed())
      return cmd_irregular_encode(spec_path, info_text, in_path, out_path);
    if (irr_ver->parsed()) return cmd_irregular_verify(spec_path, in_path);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
