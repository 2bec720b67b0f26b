/// @file
/// @brief Chord synthesis for listening comparisons, and 16-bit WAV output.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "chordaffect/errors.hpp"
#include "chordaffect/proportion.hpp"

namespace chordaffect {

/// 16-bit full scale; a sample of 1.0 maps to 32768 (clamped to 32767).
inline constexpr double kPcmFullScale = 32768.0;

struct RenderSpec {
  std::vector<double> freqs;
  double duration = 2.0;            ///< seconds
  std::uint32_t sample_rate = 44100;
  double peak = 0.5;                ///< fraction of full scale
  int harmonics = 1;                ///< h-th partial has amplitude 1/h
  double fade_ms = 10.0;            ///< linear fade in and out
};

struct SampleBuffer {
  std::uint32_t sample_rate = 44100;
  std::vector<double> samples;  ///< mono, full scale = 1.0
};

inline void validate(const RenderSpec& spec) {
  if (spec.freqs.empty()) throw InputError("render needs at least one voice");
  if (spec.sample_rate == 0) throw InputError("sample rate must be positive");
  if (!(spec.duration >= 0.0) || !std::isfinite(spec.duration)) {
    throw InputError("duration must be non-negative");
  }
  if (!(spec.peak > 0.0 && spec.peak <= 1.0)) throw InputError("peak must lie in (0, 1]");
  if (spec.harmonics < 1) throw InputError("harmonics must be at least 1");
  if (!(spec.fade_ms >= 0.0)) throw InputError("fade must be non-negative");
  const double nyquist = spec.sample_rate / 2.0;
  for (double f : spec.freqs) {
    if (!(f > 0.0) || !std::isfinite(f)) throw InputError("voice frequencies must be positive");
    if (f * spec.harmonics >= nyquist) {
      throw InputError("partial at " + std::to_string(f * spec.harmonics) +
                       " Hz reaches the Nyquist frequency " + std::to_string(nyquist) + " Hz");
    }
  }
}

/// Sum of zero-phase sinusoids, equal amplitude per voice, faded and
/// normalized so the largest |sample| is the peak (snapped down to the
/// 16-bit grid so quantization cannot overshoot it).
inline SampleBuffer render_chord(const RenderSpec& spec) {
  validate(spec);
  const double sr = spec.sample_rate;
  const auto n = static_cast<std::size_t>(std::llround(spec.duration * sr));
  SampleBuffer out{spec.sample_rate, std::vector<double>(n, 0.0)};

  for (double f : spec.freqs) {
    for (int h = 1; h <= spec.harmonics; ++h) {
      const double w = 2.0 * std::numbers::pi * f * h / sr;
      const double amp = 1.0 / h;
      for (std::size_t k = 0; k < n; ++k) {
        out.samples[k] += amp * std::sin(w * static_cast<double>(k));
      }
    }
  }

  const auto fade = std::min<std::size_t>(
      static_cast<std::size_t>(std::llround(spec.fade_ms * sr / 1000.0)), n / 2);
  for (std::size_t k = 0; k < fade; ++k) {
    const double g = static_cast<double>(k) / static_cast<double>(fade);
    out.samples[k] *= g;
    out.samples[n - 1 - k] *= g;
  }

  double max_abs = 0.0;
  for (double s : out.samples) max_abs = std::max(max_abs, std::abs(s));
  if (max_abs > 0.0) {
    const double target = std::floor(spec.peak * kPcmFullScale) / kPcmFullScale;
    const double scale = target / max_abs;
    for (double& s : out.samples) s *= scale;
  }
  return out;
}

/// Voice frequencies of `p` scaled so their arithmetic mean is `mean`.
inline std::vector<double> scale_to_mean(const Proportion& p, double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) throw InputError("mean frequency must be positive");
  double sum = 0.0;
  for (auto t : p.terms()) sum += static_cast<double>(t);
  const double unit = mean * static_cast<double>(p.voices()) / sum;
  std::vector<double> out;
  out.reserve(p.voices());
  for (auto t : p.terms()) out.push_back(static_cast<double>(t) * unit);
  return out;
}

/// Two chords with the same arithmetic-mean frequency, for A/B listening.
inline std::pair<std::vector<double>, std::vector<double>> matched_pair(const Proportion& a,
                                                                        const Proportion& b,
                                                                        double mean) {
  return {scale_to_mean(a, mean), scale_to_mean(b, mean)};
}

/// Half-away-from-zero rounding to signed 16-bit.
inline std::int16_t quantize_sample(double x) {
  const double q = std::clamp(std::round(x * kPcmFullScale), -32768.0, 32767.0);
  return static_cast<std::int16_t>(q);
}

namespace detail {

inline void put_le(std::string& out, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace detail

/// RIFF/WAVE, PCM 16-bit little-endian, mono; 44-byte header.
inline std::string encode_wav(const SampleBuffer& buf) {
  const auto data_bytes = static_cast<std::uint32_t>(buf.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  detail::put_le(out, 36 + data_bytes, 4);
  out += "WAVE";
  out += "fmt ";
  detail::put_le(out, 16, 4);
  detail::put_le(out, 1, 2);  // PCM
  detail::put_le(out, 1, 2);  // mono
  detail::put_le(out, buf.sample_rate, 4);
  detail::put_le(out, buf.sample_rate * 2, 4);
  detail::put_le(out, 2, 2);
  detail::put_le(out, 16, 2);
  out += "data";
  detail::put_le(out, data_bytes, 4);
  for (double s : buf.samples) {
    detail::put_le(out, static_cast<std::uint16_t>(quantize_sample(s)), 2);
  }
  return out;
}

inline void write_wav(const SampleBuffer& buf, const std::filesystem::path& path) {
  const std::string bytes = encode_wav(buf);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace chordaffect
