#include "ddlab/ddlab.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "ddlab/algebra.hpp"
#include "ddlab/bounds.hpp"
#include "ddlab/curve.hpp"
#include "ddlab/error.hpp"
#include "ddlab/geometry.hpp"
#include "ddlab/incidence.hpp"
#include "ddlab/instances.hpp"
#include "ddlab/spectrum.hpp"
#include "ddlab/sweep.hpp"

struct ddlab_pointset {
  ddlab::PointSet value;
};
struct ddlab_curve {
  ddlab::CurveSpec value;
};
struct ddlab_spectrum {
  ddlab::DistanceSpectrum value;
};
struct ddlab_report {
  ddlab::VerificationReport value;
};

namespace {

thread_local std::string last_error;

ddlab_status status_of(ddlab::ErrorCode code) {
  using ddlab::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return DDLAB_ERR_PARSE;
    case ErrorCode::duplicate_point: return DDLAB_ERR_DUPLICATE_POINT;
    case ErrorCode::empty_set: return DDLAB_ERR_EMPTY_SET;
    case ErrorCode::invalid_argument: return DDLAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::degenerate_degree: return DDLAB_ERR_DEGENERATE_DEGREE;
    case ErrorCode::zero_polynomial: return DDLAB_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::shared_component: return DDLAB_ERR_SHARED_COMPONENT;
    case ErrorCode::not_a_circle: return DDLAB_ERR_NOT_A_CIRCLE;
    case ErrorCode::precondition: return DDLAB_ERR_PRECONDITION;
    case ErrorCode::unsupported_curve: return DDLAB_ERR_UNSUPPORTED_CURVE;
    case ErrorCode::box_too_small: return DDLAB_ERR_BOX_TOO_SMALL;
    case ErrorCode::unknown_family: return DDLAB_ERR_UNKNOWN_FAMILY;
    case ErrorCode::unrealized_distance: return DDLAB_ERR_UNREALIZED_DISTANCE;
    case ErrorCode::budget_exceeded: return DDLAB_ERR_BUDGET_EXCEEDED;
    case ErrorCode::io: return DDLAB_ERR_IO;
  }
  return DDLAB_ERR_INTERNAL;
}

template <class F>
ddlab_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return DDLAB_OK;
  } catch (const ddlab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DDLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DDLAB_ERR_INTERNAL;
  }
}

ddlab_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return DDLAB_ERR_NULL_ARGUMENT;
}

#define DDLAB_REQUIRE(arg) \
  do {                     \
    if (!(arg)) return null_argument(#arg); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ddlab::Error(ddlab::ErrorCode::io, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

extern "C" {

const char* ddlab_last_error(void) { return last_error.c_str(); }

const char* ddlab_status_name(ddlab_status status) {
  switch (status) {
    case DDLAB_OK: return "ok";
    case DDLAB_ERR_NULL_ARGUMENT: return "null-argument";
    case DDLAB_ERR_PARSE: return "parse";
    case DDLAB_ERR_DUPLICATE_POINT: return "duplicate-point";
    case DDLAB_ERR_EMPTY_SET: return "empty-set";
    case DDLAB_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case DDLAB_ERR_DEGENERATE_DEGREE: return "degenerate-degree";
    case DDLAB_ERR_ZERO_POLYNOMIAL: return "zero-polynomial";
    case DDLAB_ERR_SHARED_COMPONENT: return "shared-component";
    case DDLAB_ERR_NOT_A_CIRCLE: return "not-a-circle";
    case DDLAB_ERR_PRECONDITION: return "precondition";
    case DDLAB_ERR_UNSUPPORTED_CURVE: return "unsupported-curve";
    case DDLAB_ERR_BOX_TOO_SMALL: return "box-too-small";
    case DDLAB_ERR_UNKNOWN_FAMILY: return "unknown-family";
    case DDLAB_ERR_UNREALIZED_DISTANCE: return "unrealized-distance";
    case DDLAB_ERR_BUDGET_EXCEEDED: return "budget-exceeded";
    case DDLAB_ERR_IO: return "io";
    case DDLAB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ddlab_version(void) { return "0.1.0"; }

void ddlab_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------- point sets

ddlab_status ddlab_pointset_parse(const char* text, ddlab_pointset** out) {
  DDLAB_REQUIRE(text);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_pointset{ddlab::point_set_from_text(text)}; });
}

ddlab_status ddlab_pointset_load(const char* path, ddlab_pointset** out) {
  DDLAB_REQUIRE(path);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_pointset{ddlab::point_set_from_text(read_file(path), path)}; });
}

ddlab_status ddlab_pointset_to_text(const ddlab_pointset* set, const char* const* header, size_t header_len,
                                    char** out) {
  DDLAB_REQUIRE(set);
  DDLAB_REQUIRE(out);
  if (header_len > 0 && !header) return null_argument("header");
  return guard([&] {
    std::vector<std::string> lines(header, header + header_len);
    *out = dup_string(ddlab::point_set_to_text(set->value, lines));
  });
}

size_t ddlab_pointset_size(const ddlab_pointset* set) { return set ? set->value.size() : 0; }

void ddlab_pointset_free(ddlab_pointset* set) { delete set; }

// ----------------------------------------------------------------- curves

ddlab_status ddlab_curve_parse(const char* text, ddlab_curve** out) {
  DDLAB_REQUIRE(text);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_curve{ddlab::curve_from_text(text)}; });
}

ddlab_status ddlab_curve_load(const char* path, ddlab_curve** out) {
  DDLAB_REQUIRE(path);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_curve{ddlab::curve_from_text(read_file(path))}; });
}

ddlab_status ddlab_curve_preset(const char* name, ddlab_curve** out) {
  DDLAB_REQUIRE(name);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_curve{ddlab::curve_preset(name)}; });
}

ddlab_status ddlab_curve_to_text(const ddlab_curve* curve, char** out) {
  DDLAB_REQUIRE(curve);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = dup_string(ddlab::curve_to_text(curve->value)); });
}

int ddlab_curve_degree(const ddlab_curve* curve) { return curve ? curve->value.degree() : 0; }

ddlab_status ddlab_curve_contains(const ddlab_curve* curve, const char* x, const char* y, int* out) {
  DDLAB_REQUIRE(curve);
  DDLAB_REQUIRE(x);
  DDLAB_REQUIRE(y);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = ddlab::on_curve(curve->value, {ddlab::rat(x), ddlab::rat(y)}) ? 1 : 0; });
}

ddlab_status ddlab_curve_circle_intersections(const ddlab_curve* curve, const char* cx, const char* cy,
                                              const char* squared_radius, uint64_t* out) {
  DDLAB_REQUIRE(curve);
  DDLAB_REQUIRE(cx);
  DDLAB_REQUIRE(cy);
  DDLAB_REQUIRE(squared_radius);
  DDLAB_REQUIRE(out);
  return guard([&] {
    const auto circle = ddlab::BivariatePoly::circle({ddlab::rat(cx), ddlab::rat(cy)}, ddlab::rat(squared_radius));
    *out = ddlab::count_curve_circle_intersections(curve->value, circle);
  });
}

void ddlab_curve_free(ddlab_curve* curve) { delete curve; }

// ---------------------------------------------------------------- spectra

ddlab_status ddlab_spectrum_compute(const ddlab_pointset* p1, const ddlab_pointset* p2, unsigned threads,
                                    ddlab_spectrum** out) {
  DDLAB_REQUIRE(p1);
  DDLAB_REQUIRE(p2);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_spectrum{ddlab::spectrum(p1->value, p2->value, {threads})}; });
}

ddlab_status ddlab_spectrum_from_csv(const char* text, ddlab_spectrum** out) {
  DDLAB_REQUIRE(text);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_spectrum{ddlab::spectrum_from_csv(text)}; });
}

ddlab_status ddlab_spectrum_to_csv(const ddlab_spectrum* s, char** out) {
  DDLAB_REQUIRE(s);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = dup_string(ddlab::spectrum_to_csv(s->value)); });
}

uint64_t ddlab_spectrum_distinct(const ddlab_spectrum* s) { return s ? s->value.size() : 0; }
uint64_t ddlab_spectrum_total_pairs(const ddlab_spectrum* s) { return s ? s->value.total_pairs() : 0; }
uint64_t ddlab_spectrum_zero_pairs(const ddlab_spectrum* s) { return s ? s->value.zero_pairs() : 0; }
uint64_t ddlab_spectrum_max_multiplicity(const ddlab_spectrum* s) { return s ? s->value.max_multiplicity() : 0; }

ddlab_status ddlab_spectrum_energy(const ddlab_spectrum* s, unsigned d, char** out) {
  DDLAB_REQUIRE(s);
  DDLAB_REQUIRE(out);
  return guard([&] {
    if (d == 0) throw ddlab::Error(ddlab::ErrorCode::invalid_argument, "energy order must be at least 1");
    *out = dup_string(s->value.energy(d).get_str());
  });
}

ddlab_status ddlab_spectrum_dyadic(const ddlab_spectrum* s, int r, uint64_t n, uint64_t* k, size_t cap, size_t* len) {
  DDLAB_REQUIRE(s);
  DDLAB_REQUIRE(len);
  if (cap > 0 && !k) return null_argument("k");
  return guard([&] {
    const auto profile = ddlab::dyadic_profile(s->value, r, n);
    *len = profile.levels.size();
    for (size_t j = 0; j < profile.levels.size() && j < cap; ++j) k[j] = profile.levels[j].k;
  });
}

void ddlab_spectrum_free(ddlab_spectrum* s) { delete s; }

// ------------------------------------------------------------- generators

ddlab_status ddlab_gen_grid(int k, ddlab_pointset** out) {
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_pointset{ddlab::gen_grid(k)}; });
}

ddlab_status ddlab_gen_on_curve(const ddlab_curve* curve, size_t m, uint64_t seed, ddlab_pointset** out) {
  DDLAB_REQUIRE(curve);
  DDLAB_REQUIRE(out);
  return guard([&] { *out = new ddlab_pointset{ddlab::gen_on_curve(curve->value, m, seed)}; });
}

ddlab_status ddlab_gen_cloud(size_t n, const char* x_min, const char* y_min, const char* x_max, const char* y_max,
                             int64_t den, uint64_t seed, ddlab_pointset** out) {
  DDLAB_REQUIRE(x_min);
  DDLAB_REQUIRE(y_min);
  DDLAB_REQUIRE(x_max);
  DDLAB_REQUIRE(y_max);
  DDLAB_REQUIRE(out);
  return guard([&] {
    const ddlab::Box box{ddlab::rat(x_min), ddlab::rat(y_min), ddlab::rat(x_max), ddlab::rat(y_max), den};
    *out = new ddlab_pointset{ddlab::gen_cloud(n, box, seed)};
  });
}

ddlab_status ddlab_gen_adversarial(const char* family, size_t m, size_t n, uint64_t seed, ddlab_pointset** p1,
                                   ddlab_pointset** p2, ddlab_curve** curve) {
  DDLAB_REQUIRE(family);
  DDLAB_REQUIRE(p1);
  DDLAB_REQUIRE(p2);
  DDLAB_REQUIRE(curve);
  return guard([&] {
    auto inst = ddlab::gen_adversarial(family, {m, n, seed});
    auto a = std::make_unique<ddlab_pointset>(ddlab_pointset{std::move(inst.p1)});
    auto b = std::make_unique<ddlab_pointset>(ddlab_pointset{std::move(inst.p2)});
    auto c = std::make_unique<ddlab_curve>(ddlab_curve{std::move(inst.curve)});
    *p1 = a.release();
    *p2 = b.release();
    *curve = c.release();
  });
}

ddlab_status ddlab_gen_bipartite(const char* curve_name, size_t m, size_t n, uint64_t seed, ddlab_pointset** p1,
                                 ddlab_pointset** p2) {
  DDLAB_REQUIRE(curve_name);
  DDLAB_REQUIRE(p1);
  DDLAB_REQUIRE(p2);
  return guard([&] {
    auto inst = ddlab::gen_bipartite(curve_name, m, n, seed);
    auto a = std::make_unique<ddlab_pointset>(ddlab_pointset{std::move(inst.p1)});
    auto b = std::make_unique<ddlab_pointset>(ddlab_pointset{std::move(inst.p2)});
    *p1 = a.release();
    *p2 = b.release();
  });
}

ddlab_status ddlab_instance_header(const char* family, uint64_t seed, const ddlab_curve* curve, char** out) {
  DDLAB_REQUIRE(family);
  DDLAB_REQUIRE(out);
  return guard([&] {
    std::string joined;
    for (const auto& line : ddlab::instance_header(family, seed, curve ? &curve->value : nullptr))
      joined += line + "\n";
    *out = dup_string(joined);
  });
}

// ----------------------------------------------------------- verification

void ddlab_verify_options_init(ddlab_verify_options* options) {
  if (!options) return;
  options->tuple_budget = 10'000'000;
  options->precondition_fail = 0;
  options->threads = 0;
  options->spectrum = nullptr;
  options->instance_id = nullptr;
}

ddlab_status ddlab_verify(const ddlab_pointset* p1, const ddlab_pointset* p2, const ddlab_curve* curve,
                          const ddlab_verify_options* options, ddlab_report** out) {
  DDLAB_REQUIRE(p1);
  DDLAB_REQUIRE(p2);
  DDLAB_REQUIRE(curve);
  DDLAB_REQUIRE(out);
  return guard([&] {
    ddlab::VerifyConfig cfg;
    if (options) {
      cfg.tuple_budget = options->tuple_budget;
      cfg.policy = options->precondition_fail ? ddlab::PreconditionPolicy::fail : ddlab::PreconditionPolicy::skip;
      cfg.threads = options->threads;
      if (options->spectrum) cfg.spectrum = options->spectrum->value;
      if (options->instance_id) cfg.instance_id = options->instance_id;
    }
    *out = new ddlab_report{ddlab::verify_all(p1->value, p2->value, curve->value, cfg)};
  });
}

int ddlab_report_has_failures(const ddlab_report* report) { return report && report->value.has_failures() ? 1 : 0; }

size_t ddlab_report_check_count(const ddlab_report* report) { return report ? report->value.checks.size() : 0; }

ddlab_status ddlab_report_check(const ddlab_report* report, size_t i, const char** name, ddlab_check_status* status,
                                const char** lhs, const char** rhs, const char** citation) {
  DDLAB_REQUIRE(report);
  if (i >= report->value.checks.size()) {
    last_error = "check index out of range";
    return DDLAB_ERR_INVALID_ARGUMENT;
  }
  const auto& c = report->value.checks[i];
  if (name) *name = c.name.c_str();
  if (status)
    *status = c.status == ddlab::CheckStatus::pass   ? DDLAB_CHECK_PASS
              : c.status == ddlab::CheckStatus::fail ? DDLAB_CHECK_FAIL
                                                     : DDLAB_CHECK_SKIP;
  if (lhs) *lhs = c.lhs.c_str();
  if (rhs) *rhs = c.rhs.c_str();
  if (citation) *citation = c.citation.c_str();
  last_error.clear();
  return DDLAB_OK;
}

ddlab_status ddlab_report_render(const ddlab_report* report, ddlab_report_format format, char** out) {
  DDLAB_REQUIRE(report);
  DDLAB_REQUIRE(out);
  return guard([&] {
    switch (format) {
      case DDLAB_REPORT_TEXT: *out = dup_string(ddlab::report_to_text(report->value)); return;
      case DDLAB_REPORT_LINES: *out = dup_string(ddlab::report_to_lines(report->value)); return;
      case DDLAB_REPORT_INCIDENCE_CSV: *out = dup_string(ddlab::incidence_to_csv(report->value)); return;
    }
    throw ddlab::Error(ddlab::ErrorCode::invalid_argument, "unknown report format");
  });
}

void ddlab_report_free(ddlab_report* report) { delete report; }

// ----------------------------------------------------------------- bounds

ddlab_status ddlab_theorem_bound(uint64_t m, uint64_t n, char* regime, double* value) {
  DDLAB_REQUIRE(regime);
  DDLAB_REQUIRE(value);
  return guard([&] {
    const auto tb = ddlab::theorem_bound(m, n);
    *regime = tb.regime;
    *value = static_cast<double>(tb.value);
  });
}

ddlab_status ddlab_pach_sharir_bound(uint64_t m, uint64_t n, unsigned s, double* value) {
  DDLAB_REQUIRE(value);
  return guard([&] { *value = static_cast<double>(ddlab::pach_sharir_bound(m, n, s)); });
}

// ----------------------------------------------------------------- sweeps

void ddlab_sweep_options_init(ddlab_sweep_options* options) {
  if (!options) return;
  options->family = "parabola";
  options->m_values = nullptr;
  options->n_values = nullptr;
  options->d_values = "2,3";
  options->seed = 1;
  options->pair_budget = 100'000'000;
  options->threads = 0;
}

ddlab_status ddlab_sweep_csv(const ddlab_sweep_options* options, char** out) {
  DDLAB_REQUIRE(options);
  DDLAB_REQUIRE(options->m_values);
  DDLAB_REQUIRE(options->n_values);
  DDLAB_REQUIRE(out);
  return guard([&] {
    ddlab::SweepConfig cfg;
    if (options->family) cfg.family = options->family;
    cfg.m_values = ddlab::parse_progression(options->m_values);
    cfg.n_values = ddlab::parse_progression(options->n_values);
    if (options->d_values) {
      cfg.d_values.clear();
      for (auto d : ddlab::parse_progression(options->d_values)) {
        if (d == 0) throw ddlab::Error(ddlab::ErrorCode::invalid_argument, "energy order must be at least 1");
        cfg.d_values.push_back(static_cast<unsigned>(d));
      }
    }
    cfg.seed = options->seed;
    cfg.pair_budget = options->pair_budget;
    cfg.threads = options->threads;
    *out = dup_string(ddlab::sweep_to_csv(cfg, ddlab::run_sweep(cfg)));
  });
}

}  // extern "C"
