#include "spinpair/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spinpair {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Entry {
  std::string value;
  int line;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

class KeyValues {
 public:
  KeyValues(const std::string& text, std::string name) : name_(std::move(name)) {
    static const std::set<std::string> sections = {
        "scenario", "geometry", "drive", "initial-state",
        "time-grid", "sweep",   "swap"};
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
      ++lineno;
      std::string line = raw;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(lineno, "unterminated section header");
        const std::string section = trim(line.substr(1, line.size() - 2));
        if (!sections.count(section)) {
          fail(lineno, "unknown section '" + section + "'");
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail(lineno, "expected 'key = value'");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail(lineno, "empty key");
      if (value.empty()) fail(lineno, "empty value for key '" + key + "'");
      if (entries_.count(key)) {
        fail(lineno, "duplicate key '" + key + "'");
      }
      entries_[key] = Entry{value, lineno};
    }
  }

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ConfigError(name_ + ":" + std::to_string(line) + ": " + msg);
  }

  [[noreturn]] void fail_key(const std::string& key,
                             const std::string& msg) const {
    const auto it = entries_.find(key);
    const int line = it == entries_.end() ? 0 : it->second.line;
    fail(line, "key '" + key + "': " + msg);
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  std::string get_string(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ConfigError(name_ + ": missing required key '" + key + "'");
    }
    consumed_.insert(key);
    return it->second.value;
  }

  std::string get_string(const std::string& key, const std::string& fallback) {
    return has(key) ? get_string(key) : fallback;
  }

  double get_number(const std::string& key) {
    return parse_number(key, get_string(key));
  }

  double get_number(const std::string& key, double fallback) {
    return has(key) ? get_number(key) : fallback;
  }

  int get_int(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const double v = get_number(key);
    if (v != std::floor(v)) fail_key(key, "expected an integer");
    return static_cast<int>(v);
  }

  bool get_switch(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string v = get_string(key);
    if (v == "on") return true;
    if (v == "off") return false;
    fail_key(key, "expected 'on' or 'off'");
  }

  std::vector<double> get_list(const std::string& key) {
    const std::string v = get_string(key);
    std::vector<double> out;
    std::istringstream is(v);
    std::string item;
    while (std::getline(is, item, ',')) {
      out.push_back(parse_number(key, trim(item)));
    }
    if (out.empty()) fail_key(key, "expected a comma-separated list");
    return out;
  }

  void finish() const {
    for (const auto& [key, entry] : entries_) {
      if (!consumed_.count(key)) {
        fail(entry.line, "unknown key '" + key + "'");
      }
    }
  }

 private:
  double parse_number(const std::string& key, const std::string& text) const {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
      fail_key(key, "malformed number '" + text + "'");
    }
    return v;
  }

  std::string name_;
  std::map<std::string, Entry> entries_;
  std::set<std::string> consumed_;
};

double read_theta(KeyValues& kv) {
  if (kv.has("theta")) {
    if (kv.has("orientation")) {
      kv.fail_key("orientation", "give either 'theta' or 'orientation'");
    }
    return kv.get_number("theta");
  }
  const std::string o = kv.get_string("orientation", "parallel");
  if (o == "parallel") return 0.0;
  if (o == "perpendicular") return 0.5 * kPi;
  kv.fail_key("orientation", "expected 'parallel' or 'perpendicular'");
}

double read_x(KeyValues& kv) {
  if (kv.has("regime")) {
    const std::string r = kv.get_string("regime");
    if (r != "small-R") kv.fail_key("regime", "expected 'small-R'");
    if (kv.has("x")) kv.fail_key("x", "give either 'x' or 'regime'");
    return 1e-4;
  }
  const double x = kv.get_number("x");
  if (x == 0.0) {
    kv.fail_key("x",
                "x = 0 is singular; use 'regime = small-R' (x = 1e-4) or the "
                "analytic small-separation solutions");
  }
  if (x < 0.0) kv.fail_key("x", "separation must be positive");
  return x;
}

void read_superposition(KeyValues& kv, double fallback_a, double fallback_b,
                        double* a, double* b) {
  *a = kv.get_number("a", fallback_a);
  *b = kv.get_number("b", fallback_b);
  if (*a < 0.0 || *b < 0.0) {
    kv.fail_key(kv.has("a") ? "a" : "b", "amplitudes must be nonnegative");
  }
  const double n2 = *a * *a + *b * *b;
  if (std::abs(n2 - 1.0) > 1e-9) {
    kv.fail_key(kv.has("a") ? "a" : "b",
                "state (a, b) is not normalized: a^2 + b^2 = " +
                    std::to_string(n2));
  }
  const double n = std::sqrt(n2);
  *a /= n;
  *b /= n;
}

DriveSpec read_drive(KeyValues& kv) {
  DriveSpec drive;
  drive.chi_over_delta = kv.get_number("chi_over_delta", 0.1);
  drive.gamma_over_delta = kv.get_number("gamma_over_delta", 1e-3);
  if (drive.gamma_over_delta <= 0.0) {
    kv.fail_key("gamma_over_delta", "must be > 0");
  }
  return drive;
}

GeneratorOptions read_options(KeyValues& kv) {
  GeneratorOptions options;
  options.include_im_shift = kv.get_switch("im_shift", false);
  options.include_stark = kv.get_switch("stark", false);
  return options;
}

Observable read_observable(KeyValues& kv) {
  const std::string o = kv.get_string("observable", "coherence");
  if (o == "coherence") return Observable::coherence;
  if (o == "population") return Observable::population;
  kv.fail_key("observable", "expected 'coherence' or 'population'");
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text,
                               const std::string& name) {
  KeyValues kv(text, name);
  const std::string kind = kv.get_string("kind");

  if (kind == "sweep") {
    SweepSpec spec;
    spec.x_min = kv.get_number("x_min");
    spec.x_max = kv.get_number("x_max");
    spec.samples = kv.get_int("samples", 100);
    spec.t_star = kv.get_number("t_star", 1.0);
    spec.theta = read_theta(kv);
    spec.observable = read_observable(kv);
    spec.drive = read_drive(kv);
    spec.options = read_options(kv);
    if (!(spec.x_min > 0.0) || !(spec.x_max > spec.x_min)) {
      kv.fail_key("x_min", "requires 0 < x_min < x_max");
    }
    if (spec.samples < 2) kv.fail_key("samples", "requires samples >= 2");
    kv.finish();
    return spec;
  }

  Scenario s;
  s.drive = read_drive(kv);
  s.options = read_options(kv);
  s.t_max = kv.get_number("t_max", 3.0);
  s.samples = kv.get_int("samples", 301);
  if (s.samples < 2) kv.fail_key("samples", "requires samples >= 2");
  if (!(s.t_max > 0.0)) kv.fail_key("t_max", "requires t_max > 0");

  if (kind == "swap") {
    s.id = "config:swap";
    const std::string initial = kv.get_string("initial");
    if (initial != "up" && initial != "down") {
      kv.fail_key("initial", "expected 'up' or 'down'");
    }
    double a, b;
    const double bal = 1.0 / std::sqrt(2.0);
    read_superposition(kv, bal, bal, &a, &b);
    const std::vector<double> xs = kv.get_list("x_list");
    const double theta = read_theta(kv);
    kv.finish();
    for (double x : xs) {
      if (x <= 0.0) kv.fail_key("x_list", "separations must be positive");
      CurveSpec c;
      std::ostringstream label;
      label << "sigma1_x" << x;
      c.label = label.str();
      c.x = x;
      c.theta = theta;
      c.a1 = initial == "down" ? 1.0 : 0.0;
      c.b1 = initial == "down" ? 0.0 : 1.0;
      c.a2 = a;
      c.b2 = b;
      c.observable = Observable::one_atom_coherence;
      s.curves.push_back(c);
    }
    return s;
  }

  if (kind != "coherence" && kind != "population") {
    kv.fail_key("kind",
                "expected 'coherence', 'population', 'swap' or 'sweep'");
  }
  s.id = "config:" + kind;
  const Observable obs =
      kind == "coherence" ? Observable::coherence : Observable::population;
  const double x = read_x(kv);
  const double theta = read_theta(kv);
  double a, b;
  const double bal = 1.0 / std::sqrt(2.0);
  read_superposition(kv, kind == "coherence" ? bal : 1.0,
                     kind == "coherence" ? bal : 0.0, &a, &b);
  kv.finish();

  CurveSpec coupled;
  coupled.label = "coupled";
  coupled.x = x;
  coupled.theta = theta;
  coupled.a1 = coupled.a2 = a;
  coupled.b1 = coupled.b2 = b;
  coupled.observable = obs;
  CurveSpec baseline = coupled;
  baseline.label = "independent";
  baseline.analytic = true;
  s.curves = {coupled, baseline};
  return s;
}

ParsedConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

}  // namespace spinpair
