// ddlab command-line front end. Everything goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ddlab/ddlab.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Deleter {
  void operator()(ddlab_pointset* p) const { ddlab_pointset_free(p); }
  void operator()(ddlab_curve* p) const { ddlab_curve_free(p); }
  void operator()(ddlab_spectrum* p) const { ddlab_spectrum_free(p); }
  void operator()(ddlab_report* p) const { ddlab_report_free(p); }
  void operator()(char* p) const { ddlab_string_free(p); }
};
using PointSetPtr = std::unique_ptr<ddlab_pointset, Deleter>;
using CurvePtr = std::unique_ptr<ddlab_curve, Deleter>;
using SpectrumPtr = std::unique_ptr<ddlab_spectrum, Deleter>;
using ReportPtr = std::unique_ptr<ddlab_report, Deleter>;
using StringPtr = std::unique_ptr<char, Deleter>;

// Thrown to unwind with an exit code after the message is printed.
struct Exit {
  int code;
};

void check(ddlab_status st, const std::string& what) {
  if (st == DDLAB_OK) return;
  std::cerr << "ddlab: " << what << ": " << ddlab_last_error() << " [" << ddlab_status_name(st) << "]\n";
  throw Exit{kExitUsage};
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "ddlab: cannot write " << path << "\n";
    throw Exit{kExitUsage};
  }
  out << text;
}

PointSetPtr load_points(const std::string& path) {
  ddlab_pointset* p = nullptr;
  check(ddlab_pointset_load(path.c_str(), &p), "reading " + path);
  if (ddlab_pointset_size(p) == 0) {
    ddlab_pointset_free(p);
    std::cerr << "ddlab: " << path << ": point set is empty\n";
    throw Exit{kExitUsage};
  }
  return PointSetPtr(p);
}

// A preset name, or a path to a curve file.
CurvePtr load_curve(const std::string& spec) {
  ddlab_curve* c = nullptr;
  if (std::filesystem::exists(spec)) {
    check(ddlab_curve_load(spec.c_str(), &c), "reading curve " + spec);
  } else {
    check(ddlab_curve_preset(spec.c_str(), &c), "curve " + spec);
  }
  return CurvePtr(c);
}

std::string points_text(const ddlab_pointset* p, const std::string& header) {
  std::vector<std::string> lines;
  std::istringstream in(header);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::vector<const char*> raw;
  for (const auto& l : lines) raw.push_back(l.c_str());
  char* out = nullptr;
  check(ddlab_pointset_to_text(p, raw.data(), raw.size(), &out), "serializing points");
  return take(out);
}

std::string header_for(const std::string& family, std::uint64_t seed, const ddlab_curve* curve) {
  char* out = nullptr;
  check(ddlab_instance_header(family.c_str(), seed, curve, &out), "writing header");
  return take(out);
}

std::vector<unsigned> parse_d_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      std::cerr << "ddlab: bad energy order '" << tok << "' in --d\n";
      throw Exit{kExitUsage};
    }
  }
  if (out.empty()) {
    std::cerr << "ddlab: --d needs at least one order\n";
    throw Exit{kExitUsage};
  }
  return out;
}

struct Settings {
  // global
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  int log_base = 2;
  std::string format = "text";
  unsigned threads = 0;
  std::string config;

  // gen
  std::string gen_kind;
  int k = 3;
  std::uint64_t m = 16;
  std::uint64_t n = 16;
  std::string curve = "parabola";
  std::string family;
  std::string box = "-8,-8,8,8";
  std::int64_t den = 1;
  std::string out;
  std::string out_p2;
  std::string out_curve;

  // compute / verify
  std::vector<std::string> inputs;
  std::string d_list = "2";
  std::string spectrum_out;
  std::string spectrum_in;
  std::string policy = "skip";
  std::string incidence_out;
  std::string id;

  // sweep
  std::string m_range = "16,32,64,128";
  std::string n_range = "256,1024,4096";
  std::string sweep_d = "2,3";
};

// Config-file values win over flags; a differing flag earns a warning.
void apply_config(CLI::App& app, Settings& s) {
  if (s.config.empty()) return;
  std::ifstream in(s.config);
  if (!in) {
    std::cerr << "ddlab: cannot open config " << s.config << "\n";
    throw Exit{kExitUsage};
  }
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    std::cerr << "ddlab: config " << s.config << ": " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
  if (!cfg.is_object()) {
    std::cerr << "ddlab: config " << s.config << " must be a JSON object\n";
    throw Exit{kExitUsage};
  }
  auto flag_given = [&app](const std::string& flag) {
    for (auto* sub : app.get_subcommands()) {
      for (auto* subsub : sub->get_subcommands())
        if (auto* o = subsub->get_option_no_throw("--" + flag); o && o->count() > 0) return true;
      if (auto* o = sub->get_option_no_throw("--" + flag); o && o->count() > 0) return true;
    }
    auto* o = app.get_option_no_throw("--" + flag);
    return o && o->count() > 0;
  };
  auto bind = [&](const std::string& key, auto& field) {
    if (!cfg.contains(key)) return;
    using T = std::decay_t<decltype(field)>;
    T value;
    try {
      value = cfg.at(key).get<T>();
    } catch (const std::exception& e) {
      std::cerr << "ddlab: config key '" << key << "': " << e.what() << "\n";
      throw Exit{kExitUsage};
    }
    if (flag_given(key) && !(value == field))
      std::cerr << "ddlab: warning: config " << s.config << " overrides --" << key << "\n";
    field = value;
  };
  bind("seed", s.seed);
  bind("budget", s.budget);
  bind("log-base", s.log_base);
  bind("format", s.format);
  bind("threads", s.threads);
  bind("k", s.k);
  bind("m", s.m);
  bind("n", s.n);
  bind("curve", s.curve);
  bind("family", s.family);
  bind("box", s.box);
  bind("den", s.den);
  bind("out", s.out);
  bind("out-p2", s.out_p2);
  bind("out-curve", s.out_curve);
  bind("d", s.d_list);
  bind("spectrum-out", s.spectrum_out);
  bind("spectrum", s.spectrum_in);
  bind("precondition-policy", s.policy);
  bind("incidence-out", s.incidence_out);
  bind("id", s.id);
  bind("m-range", s.m_range);
  bind("n-range", s.n_range);
  bind("energies", s.sweep_d);
}

int cmd_gen(const Settings& s) {
  if (s.gen_kind == "grid") {
    ddlab_pointset* p = nullptr;
    check(ddlab_gen_grid(s.k, &p), "gen grid");
    PointSetPtr owned(p);
    write_output(s.out, points_text(p, header_for("grid k=" + std::to_string(s.k), s.seed, nullptr)));
    return 0;
  }
  if (s.gen_kind == "on-curve") {
    CurvePtr curve = load_curve(s.curve);
    ddlab_pointset* p = nullptr;
    check(ddlab_gen_on_curve(curve.get(), s.m, s.seed, &p), "gen on-curve");
    PointSetPtr owned(p);
    write_output(s.out, points_text(p, header_for("on-curve", s.seed, curve.get())));
    return 0;
  }
  if (s.gen_kind == "cloud") {
    std::vector<std::string> parts;
    std::stringstream in(s.box);
    for (std::string tok; std::getline(in, tok, ',');) parts.push_back(tok);
    if (parts.size() != 4) {
      std::cerr << "ddlab: --box needs x_min,y_min,x_max,y_max\n";
      return kExitUsage;
    }
    ddlab_pointset* p = nullptr;
    check(ddlab_gen_cloud(s.n, parts[0].c_str(), parts[1].c_str(), parts[2].c_str(), parts[3].c_str(), s.den, s.seed,
                          &p),
          "gen cloud");
    PointSetPtr owned(p);
    write_output(s.out, points_text(p, header_for("cloud box=" + s.box, s.seed, nullptr)));
    return 0;
  }
  if (s.gen_kind == "adversarial" || s.gen_kind == "bipartite") {
    ddlab_pointset *p1 = nullptr, *p2 = nullptr;
    ddlab_curve* c = nullptr;
    std::string family;
    if (s.gen_kind == "adversarial") {
      if (s.family.empty()) {
        std::cerr << "ddlab: gen adversarial needs --family\n";
        return kExitUsage;
      }
      family = s.family;
      check(ddlab_gen_adversarial(s.family.c_str(), s.m, s.n, s.seed, &p1, &p2, &c), "gen adversarial");
    } else {
      family = "bipartite " + s.curve;
      check(ddlab_gen_bipartite(s.curve.c_str(), s.m, s.n, s.seed, &p1, &p2), "gen bipartite");
      check(ddlab_curve_preset(s.curve.c_str(), &c), "curve " + s.curve);
    }
    PointSetPtr a(p1), b(p2);
    CurvePtr curve(c);
    const std::string header = header_for(family, s.seed, c);
    if (s.out.empty() || s.out_p2.empty()) {
      std::cerr << "ddlab: gen " << s.gen_kind << " needs --out (P1) and --out-p2\n";
      return kExitUsage;
    }
    write_output(s.out, points_text(p1, header + "role: P1\n"));
    write_output(s.out_p2, points_text(p2, header + "role: P2\n"));
    if (!s.out_curve.empty()) {
      char* text = nullptr;
      check(ddlab_curve_to_text(c, &text), "serializing curve");
      write_output(s.out_curve, take(text));
    }
    return 0;
  }
  std::cerr << "ddlab: unknown generator '" << s.gen_kind << "'\n";
  return kExitUsage;
}

int cmd_compute(const Settings& s) {
  if (s.inputs.size() != 2) {
    std::cerr << "ddlab: compute needs two instance files (P1 P2)\n";
    return kExitUsage;
  }
  PointSetPtr p1 = load_points(s.inputs[0]);
  PointSetPtr p2 = load_points(s.inputs[1]);
  const auto orders = parse_d_list(s.d_list);
  ddlab_spectrum* raw = nullptr;
  check(ddlab_spectrum_compute(p1.get(), p2.get(), s.threads, &raw), "spectrum");
  SpectrumPtr spec(raw);
  std::vector<std::string> energies;
  for (unsigned d : orders) {
    char* e = nullptr;
    check(ddlab_spectrum_energy(spec.get(), d, &e), "energy");
    energies.push_back(take(e));
  }
  const auto distinct = ddlab_spectrum_distinct(spec.get());
  const auto zero = ddlab_spectrum_zero_pairs(spec.get());
  const auto total = ddlab_spectrum_total_pairs(spec.get());
  if (s.format == "csv") {
    std::cout << "D";
    for (unsigned d : orders) std::cout << ",E_" << d;
    std::cout << ",zero_pairs,total_pairs\n" << distinct;
    for (const auto& e : energies) std::cout << "," << e;
    std::cout << "," << zero << "," << total << "\n";
  } else {
    std::cout << "D=" << distinct;
    for (std::size_t i = 0; i < orders.size(); ++i) std::cout << " E_" << orders[i] << "=" << energies[i];
    std::cout << " zero_pairs=" << zero << " total_pairs=" << total;
    if (zero > 0) std::cout << " overlap=yes";
    std::cout << "\n";
  }
  if (!s.spectrum_out.empty()) {
    char* csv = nullptr;
    check(ddlab_spectrum_to_csv(spec.get(), &csv), "spectrum csv");
    write_output(s.spectrum_out, take(csv));
  }
  return 0;
}

int cmd_verify(const Settings& s) {
  if (s.inputs.size() != 2) {
    std::cerr << "ddlab: verify needs two instance files (P1 P2)\n";
    return kExitUsage;
  }
  if (s.policy != "skip" && s.policy != "fail") {
    std::cerr << "ddlab: --precondition-policy must be skip or fail\n";
    return kExitUsage;
  }
  PointSetPtr p1 = load_points(s.inputs[0]);
  PointSetPtr p2 = load_points(s.inputs[1]);
  CurvePtr curve = load_curve(s.curve);
  SpectrumPtr override_spec;
  if (!s.spectrum_in.empty()) {
    std::ifstream in(s.spectrum_in, std::ios::binary);
    if (!in) {
      std::cerr << "ddlab: cannot open " << s.spectrum_in << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ddlab_spectrum* raw = nullptr;
    check(ddlab_spectrum_from_csv(buf.str().c_str(), &raw), "reading " + s.spectrum_in);
    override_spec.reset(raw);
  }
  ddlab_verify_options opts;
  ddlab_verify_options_init(&opts);
  if (s.budget > 0) opts.tuple_budget = s.budget;
  opts.precondition_fail = s.policy == "fail";
  opts.threads = s.threads;
  opts.spectrum = override_spec.get();
  const std::string id = s.id.empty() ? s.inputs[0] + " x " + s.inputs[1] : s.id;
  opts.instance_id = id.c_str();
  ddlab_report* raw = nullptr;
  check(ddlab_verify(p1.get(), p2.get(), curve.get(), &opts, &raw), "verify");
  ReportPtr report(raw);
  char* text = nullptr;
  check(ddlab_report_render(report.get(), s.format == "lines" ? DDLAB_REPORT_LINES : DDLAB_REPORT_TEXT, &text),
        "render");
  std::cout << take(text);
  if (!s.incidence_out.empty()) {
    char* csv = nullptr;
    check(ddlab_report_render(report.get(), DDLAB_REPORT_INCIDENCE_CSV, &csv), "render");
    write_output(s.incidence_out, take(csv));
  }
  return ddlab_report_has_failures(report.get()) ? kExitFail : 0;
}

int cmd_sweep(const Settings& s) {
  ddlab_sweep_options opts;
  ddlab_sweep_options_init(&opts);
  const std::string family = s.family.empty() ? s.curve : s.family;
  opts.family = family.c_str();
  opts.m_values = s.m_range.c_str();
  opts.n_values = s.n_range.c_str();
  opts.d_values = s.sweep_d.c_str();
  opts.seed = s.seed;
  if (s.budget > 0) opts.pair_budget = s.budget;
  opts.threads = s.threads;
  char* csv = nullptr;
  check(ddlab_sweep_csv(&opts, &csv), "sweep");
  write_output(s.out, take(csv));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distinct-distance statistics for point sets on algebraic curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--seed", s.seed, "Generator seed");
  app.add_option("--budget", s.budget, "Enumeration budget (verify: tuples, sweep: pairs per cell)");
  app.add_option("--log-base", s.log_base, "Logarithm base for bound values (only 2)");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "csv", "lines"}));
  app.add_option("--threads", s.threads, "Worker threads (DDLAB_THREADS caps this)");
  app.add_option("--config", s.config, "JSON config; its values win over flags");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("kind", s.gen_kind, "grid | on-curve | cloud | adversarial | bipartite")->required();
  gen->add_option("--k", s.k, "Grid side");
  gen->add_option("--m", s.m, "Points on the curve");
  gen->add_option("--n", s.n, "Cloud points");
  gen->add_option("--curve", s.curve, "Curve preset or curve file");
  gen->add_option("--family", s.family, "Adversarial family");
  gen->add_option("--box", s.box, "Cloud box x_min,y_min,x_max,y_max");
  gen->add_option("--den", s.den, "Cloud lattice denominator");
  gen->add_option("--out", s.out, "Output file (P1 for two-set generators)");
  gen->add_option("--out-p2", s.out_p2, "Output file for P2");
  gen->add_option("--out-curve", s.out_curve, "Output file for the curve");

  auto* compute = app.add_subcommand("compute", "Distinct distances and energies");
  compute->add_option("inputs", s.inputs, "P1 and P2 instance files")->expected(2);
  compute->add_option("--d", s.d_list, "Energy orders, comma separated");
  compute->add_option("--spectrum-out", s.spectrum_out, "Write the spectrum CSV");

  auto* verify = app.add_subcommand("verify", "Run every per-instance check");
  verify->add_option("inputs", s.inputs, "P1 and P2 instance files")->expected(2);
  verify->add_option("--curve", s.curve, "Curve preset or curve file")->required();
  verify->add_option("--spectrum", s.spectrum_in, "Use this spectrum CSV instead of computing one");
  verify->add_option("--precondition-policy", s.policy, "skip | fail");
  verify->add_option("--incidence-out", s.incidence_out, "Write the incidence CSV");
  verify->add_option("--id", s.id, "Instance id for the report");

  auto* sweep = app.add_subcommand("sweep", "Ratio sweep over an (m, n) grid");
  sweep->add_option("--family", s.family, "Curve preset for P1");
  sweep->add_option("--m-range", s.m_range, "m values: 16,32 | 16:256:x2 | 10:50:+10");
  sweep->add_option("--n-range", s.n_range, "n values");
  sweep->add_option("--energies", s.sweep_d, "Energy orders");
  sweep->add_option("--out", s.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    apply_config(app, s);
    if (s.log_base != 2) {
      std::cerr << "ddlab: --log-base is fixed at 2\n";
      return kExitUsage;
    }
    if (gen->parsed()) return cmd_gen(s);
    if (compute->parsed()) return cmd_compute(s);
    if (verify->parsed()) return cmd_verify(s);
    if (sweep->parsed()) return cmd_sweep(s);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
