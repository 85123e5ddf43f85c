#include "ddlab/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ddlab/bounds.hpp"
#include "ddlab/error.hpp"
#include "ddlab/parallel.hpp"
#include "ddlab/spectrum.hpp"

namespace ddlab {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  if (s.empty()) throw Error(ErrorCode::invalid_argument, "malformed progression '" + std::string(whole) + "'");
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::invalid_argument, "malformed progression '" + std::string(whole) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

std::string fmt(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  return buf;
}

}  // namespace

std::vector<std::uint64_t> parse_progression(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos || b + 2 > text.size())
      throw Error(ErrorCode::invalid_argument, "malformed progression '" + std::string(text) + "'");
    const std::uint64_t lo = parse_u64(text.substr(0, a), text);
    const std::uint64_t hi = parse_u64(text.substr(a + 1, b - a - 1), text);
    const char op = text[b + 1];
    const std::uint64_t step = parse_u64(text.substr(b + 2), text);
    if (op == 'x') {
      if (step < 2 || lo == 0) throw Error(ErrorCode::invalid_argument, "geometric progression needs ratio >= 2 and start >= 1");
      for (std::uint64_t v = lo; v <= hi; v *= step) out.push_back(v);
    } else if (op == '+') {
      if (step == 0) throw Error(ErrorCode::invalid_argument, "arithmetic progression needs a positive step");
      for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      throw Error(ErrorCode::invalid_argument, "malformed progression '" + std::string(text) + "'");
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      out.push_back(parse_u64(text.substr(start, end - start), text));
      start = end + 1;
    }
  }
  if (out.empty()) throw Error(ErrorCode::invalid_argument, "empty progression '" + std::string(text) + "'");
  return out;
}

std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t m, std::uint64_t n) {
  SplitMix64 g(seed ^ (m * 0x9e3779b97f4a7c15ull) ^ (n * 0xc2b2ae3d27d4eb4full));
  return g.next();
}

Instance sweep_instance(const SweepConfig& config, std::uint64_t m, std::uint64_t n) {
  return gen_bipartite(config.family, m, n, cell_seed(config.seed, m, n));
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.m_values.empty() || config.n_values.empty())
    throw Error(ErrorCode::invalid_argument, "sweep ranges must be nonempty");
  curve_preset(config.family);  // unknown families fail before any work
  std::vector<SweepRow> rows;
  for (auto m : config.m_values)
    for (auto n : config.n_values) {
      SweepRow row;
      row.m = m;
      row.n = n;
      rows.push_back(std::move(row));
    }

  parallel_for(rows.size(), resolve_threads(config.threads), [&](std::size_t k) {
    SweepRow& row = rows[k];
    const auto start = std::chrono::steady_clock::now();
    if (row.n < 2) {
      row.skipped = "skipped(n<2)";
    } else if (row.m < 1) {
      row.skipped = "skipped(m<1)";
    } else if (static_cast<long double>(row.m) * static_cast<long double>(row.n) >
               static_cast<long double>(config.pair_budget)) {
      row.skipped = "skipped(budget)";
    } else {
      const Instance inst = sweep_instance(config, row.m, row.n);
      const DistanceSpectrum s = spectrum(inst.p1, inst.p2, {1});
      row.distinct = s.size();
      for (unsigned d : config.d_values) row.energies.push_back(s.energy(d));
      const TheoremBound tb = theorem_bound(row.m, row.n);
      row.regime = tb.regime;
      row.bound = tb.value;
      row.ratio = static_cast<long double>(row.distinct) / tb.value;
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });
  return rows;
}

std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "m,n,regime,D";
  for (unsigned d : config.d_values) out << ",E_" << d;
  out << ",bound_value,ratio,runtime_ms\n";
  for (const auto& row : rows) {
    out << row.m << "," << row.n << ",";
    if (!row.skipped.empty()) {
      out << row.skipped << ",";
      for (std::size_t i = 0; i < config.d_values.size(); ++i) out << ",";
      out << ",,";
    } else {
      out << row.regime << "," << row.distinct;
      for (const auto& e : row.energies) out << "," << e.get_str();
      out << "," << fmt(row.bound) << "," << fmt(row.ratio) << ",";
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", row.runtime_ms);
    out << ms << "\n";
  }
  return out.str();
}

}  // namespace ddlab
