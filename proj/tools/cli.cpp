#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chordaffect/chordaffect.hpp"

namespace chordaffect::cli {
namespace {

using nlohmann::ordered_json;

/// Defaults shared by the subcommands; `--config` may override them.
struct Settings {
  double tolerance = 0.01;
  double grid_tolerance = 0.02;
  double threshold = 0.50;
  std::uint64_t max_term = 64;
  double root = 261.63;
  double mean = 400.0;
  std::uint32_t sample_rate = 44100;
  int harmonics = 1;
  double peak = 0.5;
  double duration = 2.0;
  double fade_ms = 10.0;
};

/// Reads "key = value" lines ('#' starts a comment).
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

template <class T>
T convert(const std::string& key, const std::string& text) {
  T value{};
  std::istringstream is(text);
  is >> value;
  if (!is || !is.eof()) throw InputError("config key '" + key + "': bad value '" + text + "'");
  return value;
}

void apply_config(const std::map<std::string, std::string>& kv, Settings& s,
                  const std::function<bool(const std::string&)>& given) {
  for (const auto& [key, value] : kv) {
    if (key == "tolerance") {
      if (!given("--tol")) s.tolerance = convert<double>(key, value);
    } else if (key == "grid_tolerance") {
      if (!given("--grid-tol")) s.grid_tolerance = convert<double>(key, value);
    } else if (key == "threshold") {
      if (!given("--threshold")) s.threshold = convert<double>(key, value);
    } else if (key == "max_term") {
      if (!given("--max-term")) s.max_term = convert<std::uint64_t>(key, value);
    } else if (key == "root") {
      if (!given("--root")) s.root = convert<double>(key, value);
    } else if (key == "mean") {
      if (!given("--mean")) s.mean = convert<double>(key, value);
    } else if (key == "sample_rate") {
      if (!given("--sr")) s.sample_rate = convert<std::uint32_t>(key, value);
    } else if (key == "harmonics") {
      if (!given("--harmonics")) s.harmonics = convert<int>(key, value);
    } else if (key == "peak") {
      if (!given("--peak")) s.peak = convert<double>(key, value);
    } else if (key == "duration") {
      if (!given("--dur")) s.duration = convert<double>(key, value);
    } else if (key == "fade_ms") {
      if (!given("--fade-ms")) s.fade_ms = convert<double>(key, value);
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
}

/// Chord input given as exactly one of the supported forms.
struct PitchArgs {
  std::string proportion;
  std::vector<double> freqs;
  std::vector<double> semitones;
  std::vector<std::string> notes;

  int forms_given() const {
    return !proportion.empty() + !freqs.empty() + !semitones.empty() + !notes.empty();
  }
};

std::vector<double> pitch_frequencies(const PitchArgs& in, double root) {
  if (!in.freqs.empty()) return in.freqs;
  if (!in.semitones.empty()) return semitones_to_freqs(in.semitones, root);
  std::vector<double> out;
  for (const auto& n : in.notes) out.push_back(parse_pitch(n));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string describe_input(const PitchArgs& in) {
  if (!in.proportion.empty()) return in.proportion;
  std::vector<std::string> parts;
  if (!in.notes.empty()) return join(in.notes, ",");
  const auto& src = in.freqs.empty() ? in.semitones : in.freqs;
  for (double v : src) {
    std::ostringstream os;
    os << v;
    parts.push_back(os.str());
  }
  return join(parts, ",");
}

std::string input_kind(const PitchArgs& in) {
  if (!in.proportion.empty()) return "proportion";
  if (!in.freqs.empty()) return "frequencies";
  if (!in.semitones.empty()) return "semitones";
  return "notes";
}

/// Products fit JSON numbers in practice; larger ones go out as strings.
ordered_json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

struct RationalizeInfo {
  double tolerance = 0.0;
  double max_error = 0.0;
  bool mirror_tie = false;
  std::vector<double> freqs;
};

ordered_json analysis_json(const std::string& input, const std::string& kind,
                           const ChordAnalysis& a, const std::optional<RationalizeInfo>& rz) {
  ordered_json j;
  j["input"] = input;
  j["input_kind"] = kind;
  j["proportion"] = a.proportion.to_string();
  j["terms"] = std::vector<std::uint64_t>(a.proportion.terms().begin(), a.proportion.terms().end());
  j["inverse"] = inverse_text(a.proportion);
  j["inverse_terms"] = a.inverse_terms;
  j["p_dir"] = big_json(a.products.direct);
  j["p_inv"] = big_json(a.products.inverse);
  j["class"] = std::string(to_string(a.power.classification));
  j["pwe_main"] = round_to(a.power.pwe_main, 6);
  j["pwe_side"] = round_to(a.power.pwe_side, 6);
  j["pwe_adjusted"] = round_to(a.power.pwe_adjusted, 6);
  j["near_symmetric"] = a.power.near_symmetric;
  j["valence_valid"] = a.power.valence_valid;
  j["band"] = std::string(to_string(a.power.band));
  if (a.consonance) {
    j["consonant"] = a.consonance->consonant;
    ordered_json pairs = ordered_json::array();
    for (const auto& p : a.consonance->pairs) {
      ordered_json e;
      e["lower"] = p.lower;
      e["upper"] = p.upper;
      e["ratio"] = p.quality.ratio.to_string();
      e["reduced"] = p.quality.reduced.to_string();
      e["verdict"] = std::string(to_string(p.quality.verdict));
      e["rank"] = p.quality.rank ? ordered_json(*p.quality.rank) : ordered_json(nullptr);
      pairs.push_back(e);
    }
    j["intervals"] = pairs;
  } else {
    j["consonant"] = nullptr;
    j["intervals"] = ordered_json::array();
  }
  if (rz) {
    j["frequencies"] = rz->freqs;
    j["tolerance"] = rz->tolerance;
    j["max_error"] = round_to(rz->max_error, 6);
    j["mirror_tie"] = rz->mirror_tie;
  }
  return j;
}

void print_text(std::ostream& out, const ordered_json& j) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    out << k << std::string(width - k.size() + 1, ' ') << ": ";
    if (k == "intervals") {
      std::vector<std::string> parts;
      for (const auto& e : v) {
        std::string s = e["ratio"].get<std::string>() + " " + e["verdict"].get<std::string>();
        if (!e["rank"].is_null()) s += "#" + std::to_string(e["rank"].get<int>());
        parts.push_back(s);
      }
      out << join(parts, ", ") << '\n';
    } else if (v.is_string()) {
      out << v.get<std::string>() << '\n';
    } else {
      out << v.dump() << '\n';
    }
  }
}

std::vector<std::filesystem::path> output_paths(const std::vector<std::string>& given,
                                                std::size_t count) {
  std::vector<std::filesystem::path> out;
  if (given.size() == count) {
    out.assign(given.begin(), given.end());
    return out;
  }
  if (given.size() > 1) {
    throw InputError("--out given " + std::to_string(given.size()) + " times for " +
                     std::to_string(count) + " chords");
  }
  const std::filesystem::path base = given.empty() ? "chord.wav" : given.front();
  if (count == 1) return {base};
  for (std::size_t i = 0; i < count; ++i) {
    auto p = base;
    p.replace_filename(base.stem().string() + "-" + std::to_string(i + 1) +
                       base.extension().string());
    out.push_back(p);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chord proportions, major/minor classification and emotional power",
               "chordaffect"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  std::string config_path;
  app.add_option("--config", config_path, "key = value file with default settings");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze one chord");
  PitchArgs a_in;
  std::string a_format = "json";
  analyze->add_option("proportion", a_in.proportion, "Proportion text, e.g. 4:5:6 or /6:/5:/4");
  analyze->add_option("--freqs", a_in.freqs, "Voice frequencies in Hz")->delimiter(',');
  analyze->add_option("--semitones", a_in.semitones, "12-TET offsets from the root")
      ->delimiter(',');
  analyze->add_option("--notes", a_in.notes, "Note names, e.g. C4,E4,G4")->delimiter(',');
  analyze->add_option("--root", s.root, "Root frequency for --semitones");
  analyze->add_option("--tol", s.tolerance, "Relative ratio tolerance");
  analyze->add_option("--max-term", s.max_term, "Largest proportion term searched");
  analyze->add_option("--threshold", s.threshold, "Near-symmetry threshold");
  analyze->add_option("--format", a_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // grid
  auto* grid = app.add_subcommand("grid", "Sweep the 12-TET triad plane");
  int g_jmax = 12;
  std::string g_format = "csv";
  std::string g_out;
  grid->add_option("--jmax", g_jmax, "Largest upper interval in semitones");
  grid->add_option("--tol,--grid-tol", s.grid_tolerance, "Relative ratio tolerance");
  grid->add_option("--max-term", s.max_term, "Largest proportion term searched");
  grid->add_option("--threshold", s.threshold, "Near-symmetry threshold");
  grid->add_option("--root", s.root, "Root frequency");
  grid->add_option("--format", g_format, "csv or image");
  grid->add_option("--out", g_out, "Output file (default stdout)");

  // wav
  auto* wav = app.add_subcommand("wav", "Render chords to WAV files");
  PitchArgs w_in;
  std::vector<std::string> w_props;
  std::vector<std::string> w_out;
  wav->add_option("--prop", w_props, "Proportion; repeat for a mean-matched pair");
  wav->add_option("--freqs", w_in.freqs, "Voice frequencies in Hz")->delimiter(',');
  wav->add_option("--semitones", w_in.semitones, "12-TET offsets from the root")
      ->delimiter(',');
  wav->add_option("--notes", w_in.notes, "Note names")->delimiter(',');
  wav->add_option("--root", s.root, "Root frequency for --semitones");
  wav->add_option("--mean", s.mean, "Arithmetic-mean frequency for --prop chords");
  wav->add_option("--harmonics", s.harmonics, "Partials per voice (1 = pure tone)");
  wav->add_option("--dur", s.duration, "Duration in seconds");
  wav->add_option("--sr", s.sample_rate, "Sample rate in Hz");
  wav->add_option("--peak", s.peak, "Peak level as a fraction of full scale");
  wav->add_option("--fade-ms", s.fade_ms, "Fade in/out length in milliseconds");
  wav->add_option("--out", w_out, "Output path(s)");

  // table
  auto* table = app.add_subcommand("table", "Print the reference power table");
  table->add_option("--threshold", s.threshold, "Near-symmetry threshold");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (!config_path.empty()) {
      CLI::App* active = app.get_subcommands().front();
      apply_config(read_config(config_path), s, [&](const std::string& flag) {
        try {
          return active->count(flag) > 0;
        } catch (const CLI::OptionNotFound&) {
          return false;
        }
      });
    }
    PowerOptions power;
    power.near_symmetry_threshold = s.threshold;

    if (analyze->parsed()) {
      if (a_in.forms_given() != 1) {
        throw InputError("give exactly one of: proportion, --freqs, --semitones, --notes");
      }
      std::optional<RationalizeInfo> rz;
      Proportion p;
      if (!a_in.proportion.empty()) {
        p = parse_proportion(a_in.proportion);
      } else {
        RationalizeConfig cfg;
        cfg.tolerance = s.tolerance;
        cfg.max_term = s.max_term;
        const auto freqs = pitch_frequencies(a_in, s.root);
        const auto r = rationalize_detailed(freqs, cfg);
        p = r.proportion;
        rz = RationalizeInfo{s.tolerance, r.max_error, r.mirror_tie, freqs};
      }
      const auto j = analysis_json(describe_input(a_in), input_kind(a_in), analyze_chord(p, power),
                                   rz);
      if (a_format == "json") {
        out << j.dump(2) << '\n';
      } else {
        print_text(out, j);
      }
    } else if (grid->parsed()) {
      GridConfig cfg;
      cfg.j_max = g_jmax;
      cfg.root = s.root;
      cfg.rationalize.tolerance = s.grid_tolerance;
      cfg.rationalize.max_term = s.max_term;
      cfg.power = power;
      const auto format = parse_grid_format(g_format);
      const std::string data = emit_grid(generate_grid(cfg), format);
      if (g_out.empty()) {
        out << data;
      } else {
        std::ofstream f(g_out, std::ios::binary | std::ios::trunc);
        if (!f || !(f << data)) throw std::runtime_error("cannot write '" + g_out + "'");
      }
    } else if (wav->parsed()) {
      const int forms = w_in.forms_given() + !w_props.empty();
      if (forms != 1) {
        throw InputError("give exactly one of: --prop, --freqs, --semitones, --notes");
      }
      std::vector<std::vector<double>> chords;
      if (!w_props.empty()) {
        for (const auto& text : w_props) chords.push_back(scale_to_mean(parse_proportion(text), s.mean));
      } else {
        chords.push_back(pitch_frequencies(w_in, s.root));
      }
      const auto paths = output_paths(w_out, chords.size());
      for (std::size_t i = 0; i < chords.size(); ++i) {
        RenderSpec spec;
        spec.freqs = chords[i];
        spec.duration = s.duration;
        spec.sample_rate = s.sample_rate;
        spec.peak = s.peak;
        spec.harmonics = s.harmonics;
        spec.fade_ms = s.fade_ms;
        write_wav(render_chord(spec), paths[i]);
        std::vector<std::string> hz;
        for (double f : chords[i]) hz.push_back(format_fixed(f, 2));
        out << paths[i].string() << '\t' << join(hz, ",") << '\n';
      }
    } else if (table->parsed()) {
      out << appendix_table(power);
    }
  } catch (const NoProportionFound& e) {
    err << "chordaffect: " << e.what() << '\n';
    return kExitNoProportion;
  } catch (const InputError& e) {
    err << "chordaffect: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OverflowError& e) {
    err << "chordaffect: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "chordaffect: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace chordaffect::cli
