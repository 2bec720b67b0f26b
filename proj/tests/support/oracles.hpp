/// @file
/// @brief Test-only reference implementations, independent of the library's
/// search and synthesis code paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Terms = std::vector<std::uint64_t>;

inline std::uint64_t lcm_all(const Terms& t) {
  std::uint64_t l = 1;
  for (auto x : t) l = std::lcm(l, x);
  return l;
}

/// Reciprocal writing, sorted ascending.
inline Terms mirror_terms(const Terms& t) {
  const auto l = lcm_all(t);
  Terms out;
  for (auto x : t) out.push_back(l / x);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact for triples with terms <= 64: the inverse product stays below 2^64.
struct Products {
  unsigned __int128 direct = 1;
  unsigned __int128 inverse = 1;
};

inline Products products(const Terms& t) {
  Products p;
  const auto l = lcm_all(t);
  for (auto x : t) {
    p.direct *= x;
    p.inverse *= l / x;
  }
  return p;
}

inline double worst_error(const Terms& t, const std::vector<double>& sorted_freqs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const double c = static_cast<double>(t[j]) / static_cast<double>(t[i]);
      worst = std::max(worst, std::abs(c / (sorted_freqs[j] / sorted_freqs[i]) - 1.0));
    }
  }
  return worst;
}

/// Plain enumeration of every ascending triple with terms <= max_term, plus
/// the mirror of each; ranked by (max product, min product, quantized
/// error, direct product, terms). Triples only.
inline std::optional<Terms> brute_force_triad(std::vector<double> freqs, double tol,
                                              std::uint64_t max_term = 64) {
  std::sort(freqs.begin(), freqs.end());
  struct Best {
    unsigned __int128 hi, lo;
    long long err;
    unsigned __int128 dir;
    Terms t;
  };
  std::optional<Best> best;
  auto consider = [&](const Terms& t) {
    const double e = worst_error(t, freqs);
    if (e > tol) return;
    const auto p = products(t);
    Best b{std::max(p.direct, p.inverse), std::min(p.direct, p.inverse), std::llround(e * 1e12),
           p.direct, t};
    auto key = [](const Best& x) { return std::tie(x.hi, x.lo, x.err, x.dir, x.t); };
    if (!best || key(b) < key(*best)) best = b;
  };
  for (std::uint64_t a = 1; a <= max_term; ++a) {
    for (std::uint64_t b = a; b <= max_term; ++b) {
      for (std::uint64_t c = b; c <= max_term; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const Terms t{a, b, c};
        consider(t);
        consider(mirror_terms(t));
      }
    }
  }
  if (!best) return std::nullopt;
  return best->t;
}

/// Single-bin DFT magnitude (Goertzel), normalized so a unit sinusoid at an
/// integer-cycle frequency reads ~0.5.
inline double goertzel(const std::vector<double>& x, double freq, double sample_rate) {
  const double w = 2.0 * std::numbers::pi * freq / sample_rate;
  const double coeff = 2.0 * std::cos(w);
  double s1 = 0.0, s2 = 0.0;
  for (double v : x) {
    const double s0 = v + coeff * s1 - s2;
    s2 = s1;
    s1 = s0;
  }
  const double re = s1 - s2 * std::cos(w);
  const double im = s2 * std::sin(w);
  return std::sqrt(re * re + im * im) / static_cast<double>(x.size());
}

inline double db(double ratio) { return 20.0 * std::log10(ratio); }

/// Minimal WAV reader for the canonical 44-byte PCM header.
struct WavInfo {
  std::string riff, wave, fmt, data;
  std::uint32_t riff_size = 0, fmt_size = 0, sample_rate = 0, byte_rate = 0, data_size = 0;
  std::uint16_t audio_format = 0, channels = 0, block_align = 0, bits = 0;
  std::vector<std::int16_t> samples;
};

inline std::uint32_t le(const std::string& b, std::size_t off, int n) {
  std::uint32_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[off + i]);
  return v;
}

inline WavInfo read_wav(const std::string& b) {
  WavInfo w;
  w.riff = b.substr(0, 4);
  w.riff_size = le(b, 4, 4);
  w.wave = b.substr(8, 4);
  w.fmt = b.substr(12, 4);
  w.fmt_size = le(b, 16, 4);
  w.audio_format = static_cast<std::uint16_t>(le(b, 20, 2));
  w.channels = static_cast<std::uint16_t>(le(b, 22, 2));
  w.sample_rate = le(b, 24, 4);
  w.byte_rate = le(b, 28, 4);
  w.block_align = static_cast<std::uint16_t>(le(b, 32, 2));
  w.bits = static_cast<std::uint16_t>(le(b, 34, 2));
  w.data = b.substr(36, 4);
  w.data_size = le(b, 40, 4);
  for (std::size_t off = 44; off + 1 < b.size(); off += 2) {
    w.samples.push_back(static_cast<std::int16_t>(le(b, off, 2)));
  }
  return w;
}

/// Random ascending tuple of `voices` terms in 1..max_term (not reduced).
inline Terms random_terms(std::mt19937_64& rng, std::size_t voices, std::uint64_t max_term) {
  std::uniform_int_distribution<std::uint64_t> d(1, max_term);
  Terms t(voices);
  for (auto& x : t) x = d(rng);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace oracle
