#include "ddlab/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ddlab/error.hpp"
#include "ddlab/parallel.hpp"

namespace ddlab {

namespace {

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

Integer to_integer(u128 v) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return z;
}

const Integer& to_integer(const Integer& v) { return v; }

bool fits_u64(const Integer& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }
bool fits_u128(const Integer& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 128; }

std::uint64_t to_u64(const Integer& z) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

u128 to_u128(const Integer& z) {
  std::uint64_t words[2] = {0, 0};
  mpz_export(words, nullptr, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
  return (static_cast<u128>(words[1]) << 64) | words[0];
}

// All coordinates of P1 ∪ P2 multiplied by the lcm of their denominators.
// Squared distances then become integers scaled by lcm^2.
struct ScaledFrame {
  Integer lcm = 1;
  std::vector<Integer> x1, y1, x2, y2;
  std::vector<std::int64_t> sx1, sy1, sx2, sy2;
  int tier = 2;

  ScaledFrame(const PointSet& p1, const PointSet& p2) {
    for (const auto* set : {&p1, &p2})
      for (const auto& p : *set) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.x.den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.y.den().get_mpz_t());
      }
    auto scale = [this](const Rational& v) { return Integer(v.num() * (lcm / v.den())); };
    for (const auto& p : p1) {
      x1.push_back(scale(p.x));
      y1.push_back(scale(p.y));
    }
    for (const auto& p : p2) {
      x2.push_back(scale(p.x));
      y2.push_back(scale(p.y));
    }

    Integer min_x = x1.front(), max_x = x1.front(), min_y = y1.front(), max_y = y1.front();
    std::size_t max_bits = 0;
    for (const auto* xs : {&x1, &x2})
      for (const auto& v : *xs) {
        min_x = std::min(min_x, v);
        max_x = std::max(max_x, v);
        max_bits = std::max(max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
      }
    for (const auto* ys : {&y1, &y2})
      for (const auto& v : *ys) {
        min_y = std::min(min_y, v);
        max_y = std::max(max_y, v);
        max_bits = std::max(max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
      }
    const Integer wx = max_x - min_x;
    const Integer wy = max_y - min_y;
    const Integer widest = wx * wx + wy * wy;
    if (max_bits <= 61) {
      tier = fits_u64(widest) ? 0 : 1;
      auto narrow = [](const std::vector<Integer>& v) {
        std::vector<std::int64_t> out;
        out.reserve(v.size());
        for (const auto& z : v) out.push_back(z.get_si());
        return out;
      };
      sx1 = narrow(x1);
      sy1 = narrow(y1);
      sx2 = narrow(x2);
      sy2 = narrow(y2);
    }
  }

  std::uint64_t key64(std::size_t i, std::size_t j) const {
    const std::int64_t dx = sx1[i] - sx2[j];
    const std::int64_t dy = sy1[i] - sy2[j];
    const auto ux = static_cast<std::uint64_t>(dx < 0 ? -dx : dx);
    const auto uy = static_cast<std::uint64_t>(dy < 0 ? -dy : dy);
    return ux * ux + uy * uy;
  }

  u128 key128(std::size_t i, std::size_t j) const {
    const std::int64_t dx = sx1[i] - sx2[j];
    const std::int64_t dy = sy1[i] - sy2[j];
    const auto ux = static_cast<u128>(dx < 0 ? -dx : dx);
    const auto uy = static_cast<u128>(dy < 0 ? -dy : dy);
    return ux * ux + uy * uy;
  }

  Integer key_big(std::size_t i, std::size_t j) const {
    const Integer dx = x1[i] - x2[j];
    const Integer dy = y1[i] - y2[j];
    return dx * dx + dy * dy;
  }
};

template <class Key>
struct Partial {
  std::vector<Key> keys;
  std::vector<std::uint64_t> counts;
  std::uint64_t zero = 0;
};

template <class Key>
Partial<Key> merge(const Partial<Key>& a, const Partial<Key>& b) {
  Partial<Key> out;
  out.zero = a.zero + b.zero;
  out.keys.reserve(a.keys.size() + b.keys.size());
  out.counts.reserve(a.keys.size() + b.keys.size());
  std::size_t i = 0, j = 0;
  while (i < a.keys.size() || j < b.keys.size()) {
    if (j == b.keys.size() || (i < a.keys.size() && a.keys[i] < b.keys[j])) {
      out.keys.push_back(a.keys[i]);
      out.counts.push_back(a.counts[i++]);
    } else if (i == a.keys.size() || b.keys[j] < a.keys[i]) {
      out.keys.push_back(b.keys[j]);
      out.counts.push_back(b.counts[j++]);
    } else {
      out.keys.push_back(a.keys[i]);
      out.counts.push_back(a.counts[i++] + b.counts[j++]);
    }
  }
  return out;
}

template <class Key, class KeyFn>
Partial<Key> compute_partial(std::size_t m, std::size_t n, unsigned threads, KeyFn key_of) {
  // Row blocks of about 2^22 pairs; partial spectra merge by pointwise
  // addition, so the block layout never affects the result.
  const std::size_t rows_per_block = std::max<std::size_t>(1, (std::size_t{1} << 22) / std::max<std::size_t>(n, 1));
  const std::size_t blocks = (m + rows_per_block - 1) / rows_per_block;
  std::vector<Partial<Key>> parts(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t i0 = b * rows_per_block;
    const std::size_t i1 = std::min(m, i0 + rows_per_block);
    std::vector<Key> buf;
    buf.reserve((i1 - i0) * n);
    std::uint64_t zero = 0;
    for (std::size_t i = i0; i < i1; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Key k = key_of(i, j);
        if (k == Key(0)) ++zero;
        else buf.push_back(std::move(k));
      }
    std::sort(buf.begin(), buf.end());
    Partial<Key>& out = parts[b];
    out.zero = zero;
    for (std::size_t s = 0; s < buf.size();) {
      std::size_t e = s + 1;
      while (e < buf.size() && buf[e] == buf[s]) ++e;
      out.keys.push_back(std::move(buf[s]));
      out.counts.push_back(e - s);
      s = e;
    }
  });
  while (parts.size() > 1) {
    std::vector<Partial<Key>> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(merge(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  if (parts.empty()) return {};
  return std::move(parts.front());
}

}  // namespace

class SpectrumBuilder {
 public:
  template <class Key>
  static DistanceSpectrum build(Partial<Key> part, const Integer& scale) {
    DistanceSpectrum s;
    s.scale_ = scale;
    s.keys_ = std::move(part.keys);
    s.counts_ = std::move(part.counts);
    s.zero_ = part.zero;
    s.finalize();
    return s;
  }

  static DistanceSpectrum from_sorted(std::vector<Integer> keys, std::vector<std::uint64_t> counts,
                                      Integer scale, std::uint64_t zero) {
    DistanceSpectrum s;
    s.scale_ = std::move(scale);
    const bool small = std::all_of(keys.begin(), keys.end(), [](const Integer& k) { return fits_u64(k); });
    if (small) {
      std::vector<std::uint64_t> narrow;
      narrow.reserve(keys.size());
      for (const auto& k : keys) narrow.push_back(to_u64(k));
      s.keys_ = std::move(narrow);
    } else {
      s.keys_ = std::move(keys);
    }
    s.counts_ = std::move(counts);
    s.zero_ = zero;
    s.finalize();
    return s;
  }
};

void DistanceSpectrum::finalize() {
  total_ = 0;
  for (auto c : counts_) total_ += c;
  sorted_counts_ = counts_;
  std::sort(sorted_counts_.begin(), sorted_counts_.end());
}

DistanceSpectrum DistanceSpectrum::from_entries(std::vector<std::pair<Rational, std::uint64_t>> entries,
                                                std::uint64_t zero_pairs) {
  Integer scale = 1;
  for (const auto& [delta, count] : entries) {
    if (delta.sign() <= 0) throw Error(ErrorCode::invalid_argument, "spectrum keys must be positive");
    if (count == 0) throw Error(ErrorCode::invalid_argument, "spectrum multiplicities must be positive");
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), delta.den().get_mpz_t());
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Integer> keys;
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw Error(ErrorCode::invalid_argument, "repeated spectrum key " + entries[i].first.to_string());
    keys.push_back(entries[i].first.num() * (scale / entries[i].first.den()));
    counts.push_back(entries[i].second);
  }
  return SpectrumBuilder::from_sorted(std::move(keys), std::move(counts), std::move(scale), zero_pairs);
}

Rational DistanceSpectrum::squared_distance(std::size_t i) const {
  return std::visit([&](const auto& keys) { return Rational(to_integer(keys[i]), scale_); }, keys_);
}

std::optional<std::size_t> DistanceSpectrum::find(const Rational& delta) const {
  if (delta.sign() <= 0 || !mpz_divisible_p(scale_.get_mpz_t(), delta.den().get_mpz_t())) return std::nullopt;
  const Integer key = delta.num() * (scale_ / delta.den());
  auto search = [](const auto& keys, const auto& k) -> std::optional<std::size_t> {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || !(*it == k)) return std::nullopt;
    return static_cast<std::size_t>(it - keys.begin());
  };
  switch (keys_.index()) {
    case 0:
      if (!fits_u64(key)) return std::nullopt;
      return search(std::get<0>(keys_), to_u64(key));
    case 1:
      if (!fits_u128(key)) return std::nullopt;
      return search(std::get<1>(keys_), to_u128(key));
    default:
      return search(std::get<2>(keys_), key);
  }
}

Integer DistanceSpectrum::energy(unsigned d) const {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "energy order must be at least 1");
  Integer total = 0;
  Integer power;
  for (std::size_t s = 0; s < sorted_counts_.size();) {
    std::size_t e = s + 1;
    while (e < sorted_counts_.size() && sorted_counts_[e] == sorted_counts_[s]) ++e;
    mpz_ui_pow_ui(power.get_mpz_t(), sorted_counts_[s], d);
    total += power * to_integer(static_cast<std::uint64_t>(e - s));
    s = e;
  }
  return total;
}

std::uint64_t DistanceSpectrum::rich_count(std::uint64_t q) const {
  auto it = std::lower_bound(sorted_counts_.begin(), sorted_counts_.end(), q);
  return static_cast<std::uint64_t>(sorted_counts_.end() - it);
}

std::vector<std::pair<Rational, std::uint64_t>> DistanceSpectrum::entries() const {
  std::vector<std::pair<Rational, std::uint64_t>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(squared_distance(i), counts_[i]);
  return out;
}

bool operator==(const DistanceSpectrum& a, const DistanceSpectrum& b) {
  if (a.size() != b.size() || a.zero_ != b.zero_ || a.counts_ != b.counts_) return false;
  if (a.scale_ == b.scale_ && a.keys_.index() == b.keys_.index()) return a.keys_ == b.keys_;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.squared_distance(i) == b.squared_distance(i))) return false;
  return true;
}

DistanceSpectrum spectrum(const PointSet& p1, const PointSet& p2, const SpectrumOptions& options) {
  if (p1.empty() || p2.empty()) throw Error(ErrorCode::empty_set, "spectrum needs two nonempty point sets");
  const ScaledFrame frame(p1, p2);
  const unsigned threads = resolve_threads(options.threads);
  const Integer scale = frame.lcm * frame.lcm;
  const std::size_t m = p1.size();
  const std::size_t n = p2.size();
  switch (frame.tier) {
    case 0:
      return SpectrumBuilder::build(
          compute_partial<std::uint64_t>(m, n, threads, [&](std::size_t i, std::size_t j) { return frame.key64(i, j); }),
          scale);
    case 1:
      return SpectrumBuilder::build(
          compute_partial<u128>(m, n, threads, [&](std::size_t i, std::size_t j) { return frame.key128(i, j); }),
          scale);
    default:
      return SpectrumBuilder::build(
          compute_partial<Integer>(m, n, threads, [&](std::size_t i, std::size_t j) { return frame.key_big(i, j); }),
          scale);
  }
}

std::size_t distinct_distances(const PointSet& p1, const PointSet& p2) { return spectrum(p1, p2).size(); }

Integer distance_energy(const PointSet& p1, const PointSet& p2, unsigned d) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "energy order must be at least 1");
  return spectrum(p1, p2).energy(d);
}

DyadicProfile dyadic_profile(const DistanceSpectrum& s, int r, std::uint64_t n) {
  DyadicProfile profile;
  const std::uint64_t cap_value = 2ull * static_cast<std::uint64_t>(std::max(r, 0)) * n;
  while (cap_value > 0 && (std::uint64_t{1} << profile.cap_exponent) < cap_value) ++profile.cap_exponent;

  const std::uint64_t top = s.max_multiplicity();
  int last = 0;
  while (top > 0 && (std::uint64_t{1} << last) < top) ++last;
  for (int j = 0; j <= last; ++j) {
    const std::uint64_t q = std::uint64_t{1} << j;
    profile.levels.push_back({j, q, s.rich_count(q)});
  }
  profile.within_cap = last <= profile.cap_exponent;
  return profile;
}

RichCircle richest_circle(const PointSet& p1, const PointSet& p2, const Rational& delta) {
  if (delta.sign() <= 0) throw Error(ErrorCode::invalid_argument, "squared radius must be positive");
  RichCircle best;
  bool found = false;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    std::size_t hits = 0;
    for (const auto& b : p2)
      if (squared_distance(p1[i], b) == delta) ++hits;
    if (hits == 0) continue;
    if (!found || hits > best.hit_count || (hits == best.hit_count && p1[i] < best.center)) {
      best = {p1[i], i, hits};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::unrealized_distance, "no pair realizes squared distance " + delta.to_string());
  return best;
}

std::vector<std::int64_t> pair_spectrum_index(const PointSet& p1, const PointSet& p2, const DistanceSpectrum& s) {
  std::vector<std::int64_t> out(p1.size() * p2.size(), -1);
  if (p1.empty() || p2.empty()) return out;
  const ScaledFrame frame(p1, p2);
  if (frame.lcm * frame.lcm == s.scale_ && frame.tier == s.key_tier()) {
    auto fill = [&](const auto& keys, auto key_of) {
      for (std::size_t i = 0; i < p1.size(); ++i)
        for (std::size_t j = 0; j < p2.size(); ++j) {
          const auto k = key_of(i, j);
          auto it = std::lower_bound(keys.begin(), keys.end(), k);
          if (it != keys.end() && *it == k) out[i * p2.size() + j] = it - keys.begin();
        }
    };
    switch (frame.tier) {
      case 0: fill(std::get<0>(s.keys_), [&](std::size_t i, std::size_t j) { return frame.key64(i, j); }); break;
      case 1: fill(std::get<1>(s.keys_), [&](std::size_t i, std::size_t j) { return frame.key128(i, j); }); break;
      default: fill(std::get<2>(s.keys_), [&](std::size_t i, std::size_t j) { return frame.key_big(i, j); }); break;
    }
    return out;
  }
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = 0; j < p2.size(); ++j)
      if (auto idx = s.find(squared_distance(p1[i], p2[j]))) out[i * p2.size() + j] = static_cast<std::int64_t>(*idx);
  return out;
}

std::string spectrum_to_csv(const DistanceSpectrum& s) {
  std::string out = "delta_num,delta_den,multiplicity\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Rational d = s.squared_distance(i);
    out += d.num().get_str() + "," + d.den().get_str() + "," + std::to_string(s.multiplicity(i)) + "\n";
  }
  return out;
}

DistanceSpectrum spectrum_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<std::pair<Rational, std::uint64_t>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "delta_num,delta_den,multiplicity")
        throw ParseError("expected header 'delta_num,delta_den,multiplicity'", line_no, 1);
      header_seen = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
      throw ParseError("expected three comma-separated fields", line_no, 1);
    Rational delta;
    try {
      delta = Rational::parse(line.substr(0, c1) + "/" + line.substr(c1 + 1, c2 - c1 - 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
    const std::string count_text = line.substr(c2 + 1);
    if (count_text.empty() || count_text.size() > 19 ||
        !std::all_of(count_text.begin(), count_text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("bad multiplicity '" + count_text + "'", line_no, c2 + 2);
    entries.emplace_back(delta, std::stoull(count_text));
  }
  if (!header_seen) throw ParseError("missing spectrum header", line_no == 0 ? 1 : line_no, 1);
  try {
    return DistanceSpectrum::from_entries(std::move(entries));
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace ddlab
