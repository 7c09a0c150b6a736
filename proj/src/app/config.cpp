// Copyright 2026 The dissq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dissq/app/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace dissq::app {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Key/value pairs of one section; tracks which keys were consumed so that
// typos surface as "unknown key" errors.
class Section {
 public:
  Section() = default;
  Section(std::string name, std::map<std::string, std::string> values)
      : name_(std::move(name)), values_(std::move(values)) {}

  const std::string& name() const { return name_; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::optional<std::string> raw(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  std::string where(const std::string& key) const {
    return name_.empty() ? key : "[" + name_ + "] " + key;
  }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto v = raw(key);
    if (!v) {
      if (fallback) return *fallback;
      throw ConfigError(where(key) + ": required value missing");
    }
    return parse_number(key, *v);
  }

  double parse_number(const std::string& key, const std::string& text) const {
    try {
      std::size_t used = 0;
      const double x = std::stod(text, &used);
      if (trim(text.substr(used)).empty() && std::isfinite(x)) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError(where(key) + ": expected a number, got '" + text + "'");
  }

  std::vector<double> numbers(const std::string& key) {
    auto v = raw(key);
    if (!v) throw ConfigError(where(key) + ": required value missing");
    std::vector<double> out;
    std::string item;
    std::stringstream ss(*v);
    while (ss >> item) {
      if (item.back() == ',') item.pop_back();
      if (!item.empty()) out.push_back(parse_number(key, item));
    }
    return out;
  }

  std::string word(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    auto v = raw(key);
    if (!v) {
      if (fallback) return *fallback;
      throw ConfigError(where(key) + ": required value missing");
    }
    return lower(*v);
  }

  bool flag(const std::string& key, bool fallback) {
    auto v = raw(key);
    if (!v) return fallback;
    const std::string w = lower(*v);
    if (w == "on" || w == "true" || w == "yes" || w == "1") return true;
    if (w == "off" || w == "false" || w == "no" || w == "0") return false;
    throw ConfigError(where(key) + ": expected on/off, got '" + *v + "'");
  }

  void reject_unused() const {
    for (const auto& [key, value] : values_) {
      if (!used_.count(key)) throw ConfigError(where(key) + ": unknown key");
    }
  }

 private:
  std::string name_;
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

std::string strip_inline_comment(const std::string& v) {
  // '#' or ';' preceded by whitespace starts a trailing comment
  for (std::size_t i = 1; i < v.size(); ++i) {
    if ((v[i] == '#' || v[i] == ';') && std::isspace(static_cast<unsigned char>(v[i - 1]))) {
      return trim(v.substr(0, i));
    }
  }
  return trim(v);
}

struct Document {
  Section root;
  std::map<std::string, Section> sections;

  std::set<std::string> present;

  // Absent sections read as empty so that every key falls back to its default.
  Section& section(const std::string& name) {
    return sections.try_emplace(name, Section(name, {})).first->second;
  }
  bool has(const std::string& name) const { return present.count(name) != 0; }
};

Document read_document(const std::string& text, const std::string& origin) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("{}:{}: {}", origin, e.line(), e.message()));
  }
  // The INI reader drops empty sections and stores them like top-level keys
  // otherwise; the headers in the text settle both.
  std::set<std::string> headers;
  static const std::regex header_re(R"(^\s*\[([^\]]*)\]\s*$)");
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::smatch m;
    if (std::regex_match(line, m, header_re)) headers.insert(lower(trim(m[1])));
  }
  Document doc;
  std::map<std::string, std::string> root;
  for (const auto& [name, child] : tree) {
    if (child.empty() && !headers.count(lower(name))) {
      root[lower(name)] = strip_inline_comment(child.data());
      continue;
    }
    std::map<std::string, std::string> values;
    for (const auto& [key, leaf] : child) values[lower(key)] = strip_inline_comment(leaf.data());
    doc.present.insert(lower(name));
    doc.sections.emplace(lower(name), Section(lower(name), std::move(values)));
  }
  for (const std::string& h : headers) {
    if (doc.present.insert(h).second) doc.sections.emplace(h, Section(h, {}));
  }
  doc.root = Section("", std::move(root));
  return doc;
}

Scenario parse_scenario(const std::string& w) {
  if (w == "simulate") return Scenario::simulate;
  if (w == "optimize") return Scenario::optimize;
  if (w == "pump") return Scenario::pump;
  if (w == "check") return Scenario::check;
  throw ConfigError("scenario: expected simulate, optimize, pump or check, got '" + w + "'");
}

RealMatrix real_matrix(Section& s, const std::string& key, Eigen::Index dim) {
  const std::vector<double> v = s.numbers(key);
  if (static_cast<Eigen::Index>(v.size()) != dim * dim) {
    throw ConfigError(s.where(key) + fmt::format(": expected {} entries, got {}", dim * dim, v.size()));
  }
  RealMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = v[static_cast<std::size_t>(r * dim + c)];
  }
  return m;
}

Matrix complex_matrix(Section& s, const std::string& key, Eigen::Index dim) {
  auto v = s.raw(key);
  if (!v) throw ConfigError(s.where(key) + ": required value missing");
  try {
    return parse_complex_matrix(*v, dim);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(s.where(key) + ": " + e.what());
  }
}

void parse_system(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("system");
  const std::string kind = s.word("kind", cfg.scenario == Scenario::pump ? "pumping" : "two_level");
  const std::string frame = s.word("frame", "rwa");
  if (frame == "rwa") {
    cfg.frame = Frame::rwa;
  } else if (frame == "lab") {
    cfg.frame = Frame::lab;
  } else {
    throw ConfigError(s.where("frame") + ": expected rwa or lab, got '" + frame + "'");
  }

  if (kind == "two_level") {
    cfg.kind = SystemKind::two_level;
    cfg.two_level = {s.number("e1", 0.0), s.number("e2", 1.0), s.number("d1", 1.0),
                     s.number("d2", 1.0)};
    if (!(cfg.two_level.e1 < cfg.two_level.e2)) {
      throw ConfigError("[system] e1/e2: two-level system requires e1 < e2");
    }
    cfg.omega = cfg.two_level.omega();
    cfg.system = cfg.frame == Frame::rwa
                     ? rotating_frame_two_level(cfg.two_level, cfg.omega)
                     : standard_two_level(cfg.two_level);
  } else if (kind == "matrix") {
    cfg.kind = SystemKind::matrix;
    cfg.omega = s.number("omega", 1.0);
    if (!(cfg.omega > 0.0)) throw ConfigError("[system] omega: must be positive");
    const double dim_value = s.number("dim");
    const auto dim = static_cast<Eigen::Index>(dim_value);
    if (dim < 1 || static_cast<double>(dim) != dim_value) {
      throw ConfigError("[system] dim: expected a positive integer");
    }
    Matrix h0 = complex_matrix(s, "h0", dim);
    std::vector<Matrix> controls;
    for (int m = 1; s.has("control." + std::to_string(m)); ++m) {
      controls.push_back(complex_matrix(s, "control." + std::to_string(m), dim));
    }
    try {
      cfg.system = ControlSystem(std::move(h0), std::move(controls), {}, 1e-12);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("[system]: ") + e.what());
    }
  } else if (kind == "pumping") {
    cfg.kind = SystemKind::pumping;
    cfg.omega = s.number("omega", 1.0);
    if (!(cfg.omega > 0.0)) throw ConfigError("[system] omega: must be positive");
  } else {
    throw ConfigError(s.where("kind") + ": expected two_level, matrix or pumping, got '" + kind + "'");
  }
  s.reject_unused();
}

void parse_rates(Document& doc, RunConfig& cfg) {
  if (cfg.kind == SystemKind::pumping) {
    if (doc.has("rates")) throw ConfigError("[rates]: not used by the pumping system; see [pump]");
    return;
  }
  Section& s = doc.section("rates");
  const std::string unit = s.word("unit", "per_period");
  double scale = 0.0;
  if (unit == "per_period") {
    cfg.rate_unit = RateUnit::per_period;
    scale = cfg.omega / (2.0 * kPi);
  } else if (unit == "omega") {
    cfg.rate_unit = RateUnit::omega;
    scale = cfg.omega;
  } else {
    throw ConfigError(s.where("unit") + ": expected per_period or omega, got '" + unit + "'");
  }
  const Eigen::Index dim = cfg.system->dim();
  try {
    if (cfg.kind == SystemKind::two_level) {
      cfg.rates = RateModel::two_level(scale * s.number("gamma_12", 0.0),
                                       scale * s.number("gamma_21", 0.0),
                                       scale * s.number("dephasing", 0.0));
    } else {
      const RealMatrix gamma =
          s.has("gamma") ? RealMatrix(scale * real_matrix(s, "gamma", dim)) : RealMatrix::Zero(dim, dim);
      const RealMatrix deph = s.has("dephasing_matrix")
                                  ? RealMatrix(scale * real_matrix(s, "dephasing_matrix", dim))
                                  : RealMatrix::Zero(dim, dim);
      cfg.rates = RateModel(gamma, deph);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("[rates]: ") + e.what());
  }
  s.reject_unused();
}

void parse_initial(Document& doc, RunConfig& cfg, Eigen::Index dim) {
  Section& s = doc.section("initial");
  const std::string state = s.word("state", s.has("rho") ? "rho" : "ground");
  if (state == "ground") {
    cfg.initial = DensityMatrix::basis(dim, 0);
  } else if (state == "excited") {
    cfg.initial = DensityMatrix::basis(dim, dim - 1);
  } else if (state == "level") {
    const double k = s.number("level");
    if (k < 1 || k > static_cast<double>(dim) || k != std::floor(k)) {
      throw ConfigError(s.where("level") + ": expected a level between 1 and " + std::to_string(dim));
    }
    cfg.initial = DensityMatrix::basis(dim, static_cast<Eigen::Index>(k) - 1);
  } else if (state == "maximally_mixed") {
    cfg.initial = DensityMatrix::maximally_mixed(dim);
  } else if (state == "uniform_ground") {
    if (cfg.kind != SystemKind::pumping) {
      throw ConfigError(s.where("state") + ": uniform_ground requires the pumping system");
    }
    cfg.initial = uniform_ground_mixture(cfg.pump.scheme);
  } else if (state == "rho") {
    cfg.initial = DensityMatrix(complex_matrix(s, "rho", dim));
    const ValidationReport r = validate(cfg.initial, 1e-9);
    if (!r.passed) throw ConfigError(s.where("rho") + ": not a valid density matrix");
  } else {
    throw ConfigError(s.where("state") + ": unknown initial state '" + state + "'");
  }
  s.reject_unused();
}

void parse_pulses(Document& doc, RunConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& [name, section] : doc.sections) {
    if (name == "pulse" || name.rfind("pulse.", 0) == 0) names.push_back(name);
  }
  const double period = cfg.period();
  for (const std::string& name : names) {
    Section& s = doc.sections.at(name);
    PulseSpec p;
    const std::string shape = s.word("shape", "gaussian");
    if (shape == "gaussian") {
      p.shape = PulseShape::gaussian;
    } else if (shape == "constant") {
      p.shape = PulseShape::constant;
    } else {
      throw ConfigError(s.where("shape") + ": expected gaussian or constant, got '" + shape + "'");
    }
    const double control = s.number("control", 1.0);
    if (control < 1 || control > static_cast<double>(cfg.system->num_controls()) ||
        control != std::floor(control)) {
      throw ConfigError(s.where("control") + ": no such control field");
    }
    p.field_index = static_cast<std::size_t>(control) - 1;
    p.effective_area = kPi * s.number("area_pi");
    p.duration = period * s.number("duration");
    p.start = period * s.number("start", 0.0);
    p.center = p.start + p.duration / 2.0;
    p.width = p.duration / 6.0;
    if (s.has("width")) p.width = period * s.number("width");
    p.carrier_frequency = cfg.omega * s.number("carrier", 1.0);
    p.frame = cfg.frame;
    double default_coupling = 1.0;
    if (cfg.kind == SystemKind::two_level) {
      default_coupling = p.field_index == 0 ? cfg.two_level.d1 : cfg.two_level.d2;
    }
    p.coupling = s.number("coupling", default_coupling);
    if (cfg.frame == Frame::rwa && cfg.kind == SystemKind::two_level &&
        std::abs(p.carrier_frequency - cfg.omega) > 1e-12 * cfg.omega) {
      throw ConfigError(s.where("carrier") + ": the rotating frame is resonant; carrier must be 1 (omega)");
    }
    try {
      check_pulse(p);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("[" + name + "]: " + e.what());
    }
    s.reject_unused();
    cfg.pulses.push_back(p);
  }
}

void parse_integrator(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("integrator");
  cfg.integrator.rtol = s.number("rtol", 1e-9);
  cfg.integrator.atol = s.number("atol", 1e-9);
  const double max_step = s.number("max_step", 0.0);
  if (max_step > 0.0) cfg.integrator.max_step = max_step * cfg.period();
  cfg.integrator.positivity_tol = s.number("positivity_tol", 1e-7);
  if (!(cfg.integrator.rtol > 0.0) || !(cfg.integrator.atol > 0.0)) {
    throw ConfigError("[integrator]: tolerances must be positive");
  }
  s.reject_unused();
}

void parse_simulate(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("simulate");
  double latest_end = 0.0;
  for (const PulseSpec& p : cfg.pulses) latest_end = std::max(latest_end, p.end());
  const double duration = s.number("duration", latest_end > 0.0 ? latest_end / cfg.period() : 20.0);
  if (!(duration > 0.0)) throw ConfigError("[simulate] duration: must be positive");
  cfg.duration = duration * cfg.period();
  const double dt = s.number("dt_out", duration / 100.0);
  if (!(dt > 0.0)) throw ConfigError("[simulate] dt_out: must be positive");
  cfg.dt_out = dt * cfg.period();
  s.reject_unused();
}

PulseParameter parse_parameter(const std::string& w) {
  if (w == "area_pi") return PulseParameter::area;
  if (w == "duration") return PulseParameter::duration;
  if (w == "width") return PulseParameter::width;
  throw ConfigError("[optimize] free: unknown parameter '" + w + "' (area_pi, duration, width)");
}

void parse_optimize(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("optimize");
  if (cfg.pulses.size() != 1) {
    throw ConfigError("[optimize]: exactly one [pulse] section is required");
  }
  const Eigen::Index dim = cfg.system->dim();
  OptimizeSettings& o = cfg.optimize;
  const std::string kind = s.word("objective", "max_entropy_final");
  if (kind == "max_entropy_final") {
    o.objective.kind = ObjectiveKind::max_entropy_final;
  } else if (kind == "target_state_distance") {
    o.objective.kind = ObjectiveKind::target_state_distance;
    o.objective.target = DensityMatrix(complex_matrix(s, "target", dim));
    if (!validate(*o.objective.target, 1e-9).passed) {
      throw ConfigError(s.where("target") + ": not a valid density matrix");
    }
  } else if (kind == "target_population") {
    o.objective.kind = ObjectiveKind::target_population;
    const double level = s.number("target_level");
    if (level < 1 || level > static_cast<double>(dim) || level != std::floor(level)) {
      throw ConfigError(s.where("target_level") + ": no such level");
    }
    o.objective.target_level = static_cast<Eigen::Index>(level) - 1;
  } else {
    throw ConfigError(s.where("objective") + ": unknown objective '" + kind + "'");
  }
  o.objective.horizon = cfg.period() * s.number("horizon", 0.0);

  const std::string free = s.word("free", "area_pi");
  std::stringstream ss(free);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    FreeParameter p;
    p.which = parse_parameter(item);
    const std::vector<double> b = s.numbers(item + "_bounds");
    if (b.size() != 2 || !(b[0] < b[1])) {
      throw ConfigError(s.where(item + "_bounds") + ": expected 'lower upper' with lower < upper");
    }
    const double unit = p.which == PulseParameter::area ? kPi : cfg.period();
    p.bounds = {b[0] * unit, b[1] * unit};
    o.free.push_back(p);
  }
  if (o.free.empty() || o.free.size() > 3) {
    throw ConfigError(s.where("free") + ": between one and three free parameters required");
  }
  const double budget = s.number("budget", 60.0);
  if (budget < 1 || budget != std::floor(budget)) throw ConfigError(s.where("budget") + ": positive integer required");
  o.search.budget = static_cast<std::size_t>(budget);
  o.search.xtol = s.number("xtol", 1e-6);
  o.naive_area = kPi * s.number("naive_area_pi", 0.5);
  s.reject_unused();
}

std::pair<int, int> parse_pair(const std::string& key, const std::string& text, double& value) {
  static const std::regex re(R"(^\s*(\d+)\s*-\s*(\d+)\s*:\s*([-+0-9.eE]+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw ConfigError("[pump] " + key + ": expected 'a-b:value', got '" + text + "'");
  }
  value = std::stod(m[3]);
  return {std::stoi(m[1]), std::stoi(m[2])};
}

void parse_pump(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("pump");
  PumpSettings& p = cfg.pump;
  p.rabi = cfg.omega * s.number("rabi", 1.0);
  const double decay_rate = cfg.omega * s.number("decay_rate", p.rabi / cfg.omega);
  p.detuning = cfg.omega * s.number("detuning", 0.0);
  p.decays = s.flag("decays", true);
  p.duration = cfg.period() * s.number("duration", 40.0);
  p.dt_out = cfg.period() * s.number("dt_out", 0.25);
  if (!(p.duration > 0.0) || !(p.dt_out > 0.0)) {
    throw ConfigError("[pump]: duration and dt_out must be positive");
  }

  p.scheme = default_pumping_scheme(decay_rate);
  auto labels = [&](const std::string& key) {
    std::vector<int> out;
    for (double x : s.numbers(key)) out.push_back(static_cast<int>(x));
    return out;
  };
  if (s.has("ground")) p.scheme.ground = labels("ground");
  if (s.has("excited")) p.scheme.excited = labels("excited");
  auto split = [](const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!trim(item).empty()) items.push_back(trim(item));
    }
    return items;
  };
  if (auto c = s.raw("couplings")) {
    p.scheme.couplings.clear();
    for (const std::string& item : split(*c)) {
      double dipole = 0.0;
      auto [g, e] = parse_pair("couplings", item, dipole);
      p.scheme.couplings.push_back({g, e, dipole});
    }
  }
  if (auto d = s.raw("decay_channels")) {
    p.scheme.decays.clear();
    for (const std::string& item : split(*d)) {
      double rate = 0.0;
      auto [e, g] = parse_pair("decay_channels", item, rate);
      p.scheme.decays.push_back({e, g, cfg.omega * rate});
    }
  }
  try {
    check_scheme(p.scheme);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[pump]: ") + e.what());
  }
  s.reject_unused();
}

void parse_output(Document& doc, RunConfig& cfg) {
  Section& s = doc.section("output");
  if (auto d = s.raw("directory")) cfg.output_directory = *d;
  if (auto p = s.raw("prefix")) cfg.prefix = *p;
  if (cfg.prefix.empty() || cfg.prefix.find('/') != std::string::npos) {
    throw ConfigError("[output] prefix: must be a plain file-name prefix");
  }
  s.reject_unused();
}

}  // namespace

Matrix parse_complex_matrix(const std::string& text, Eigen::Index dim) {
  static const std::regex pair_re(R"(\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\))");
  std::vector<Complex> values;
  auto begin = std::sregex_iterator(text.begin(), text.end(), pair_re);
  std::string leftover = std::regex_replace(text, pair_re, "");
  if (!trim(leftover).empty()) {
    throw std::invalid_argument("expected (re,im) pairs, found stray text '" + trim(leftover) + "'");
  }
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string re = (*it)[1], im = (*it)[2];
      const double a = std::stod(re, &u1), b = std::stod(im, &u2);
      if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument("trailing text");
      values.emplace_back(a, b);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed pair '" + it->str() + "'");
    }
  }
  if (static_cast<Eigen::Index>(values.size()) != dim * dim) {
    throw std::invalid_argument(fmt::format("expected {} (re,im) pairs, got {}", dim * dim, values.size()));
  }
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = values[static_cast<std::size_t>(r * dim + c)];
  }
  return m;
}

std::string format_complex_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!out.empty()) out += ' ';
      out += fmt::format("({:.17g},{:.17g})", m(r, c).real(), m(r, c).imag());
    }
  }
  return out;
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  Document doc = read_document(text, origin);
  RunConfig cfg;
  cfg.scenario = parse_scenario(doc.root.word("scenario"));
  const double seed = doc.root.number("seed", 1.0);
  if (seed < 0 || seed != std::floor(seed)) throw ConfigError("seed: non-negative integer required");
  cfg.seed = static_cast<std::uint64_t>(seed);
  doc.root.reject_unused();

  static const std::set<std::string> known{"system", "rates", "initial", "integrator", "simulate",
                                           "optimize", "pump", "output"};
  for (const auto& [name, section] : doc.sections) {
    if (!known.count(name) && name != "pulse" && name.rfind("pulse.", 0) != 0) {
      throw ConfigError("[" + name + "]: unknown section");
    }
  }

  parse_system(doc, cfg);
  parse_integrator(doc, cfg);
  parse_output(doc, cfg);
  if (cfg.kind == SystemKind::pumping) {
    if (cfg.scenario != Scenario::pump) {
      throw ConfigError("[system] kind: the pumping system is only used by scenario = pump");
    }
    parse_pump(doc, cfg);
    parse_rates(doc, cfg);
    cfg.initial = uniform_ground_mixture(cfg.pump.scheme);
    if (doc.has("initial")) parse_initial(doc, cfg, cfg.pump.scheme.dim());
    for (const auto& [name, section] : doc.sections) {
      if (name.rfind("pulse", 0) == 0) throw ConfigError("[" + name + "]: the pump drive is set in [pump]");
    }
    return cfg;
  }
  if (cfg.scenario == Scenario::pump) {
    throw ConfigError("scenario = pump requires [system] kind = pumping");
  }
  if (doc.has("pump")) throw ConfigError("[pump]: only used by scenario = pump");
  parse_rates(doc, cfg);
  parse_initial(doc, cfg, cfg.system->dim());
  parse_pulses(doc, cfg);
  if (cfg.scenario == Scenario::optimize) {
    parse_optimize(doc, cfg);
    if (doc.has("simulate")) throw ConfigError("[simulate]: not used by scenario = optimize");
  } else {
    parse_simulate(doc, cfg);
    if (doc.has("optimize")) throw ConfigError("[optimize]: only used by scenario = optimize");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

}  // namespace dissq::app
