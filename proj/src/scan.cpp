#include "scs/scan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "scs/oracle.hpp"

namespace scs::scan {

void ScanConfig::validate() const {
  if (!std::isfinite(zmin) || !std::isfinite(zmax) || zmin < 0.0) {
    throw UsageError("zmin must be finite and >= 0");
  }
  if (!(zmax > zmin)) throw UsageError("zmax must exceed zmin");
  if (steps < 2) throw UsageError("steps must be >= 2");
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw UsageError("p1 must lie in [0, 1]");
  if (!std::isfinite(phi) || !std::isfinite(phi2)) {
    throw UsageError("phases must be finite");
  }
}

double ScanConfig::grid_value(int index) const {
  return zmin + (zmax - zmin) * index / (steps - 1);
}

namespace {

struct Preset {
  Mode mode;
  int two_j1;  // 0 keeps the configured spin
  int two_j2;
  double comp2_amplitude;
};

const std::map<std::string, Preset, std::less<>>& presets() {
  static const std::map<std::string, Preset, std::less<>> table{
      {"fig1a", {Mode::Pure, 1, 1, 0.0}}, {"fig1b", {Mode::Pure, 2, 2, 0.0}},
      {"fig1c", {Mode::Pure, 4, 4, 0.0}}, {"fig1d", {Mode::Pure, 8, 8, 0.0}},
      {"fig2a", {Mode::Pure, 1, 2, 0.0}}, {"fig2b", {Mode::Pure, 1, 8, 0.0}},
      {"fig2c", {Mode::Pure, 2, 8, 0.0}}, {"fig3", {Mode::Mixed, 0, 0, 1.0}},
      {"fig4", {Mode::Mixed, 0, 0, 4.0}},
  };
  return table;
}

}  // namespace

void apply_preset(std::string_view name, ScanConfig& config) {
  const auto it = presets().find(name);
  if (it == presets().end()) {
    throw UsageError("unknown preset '" + std::string(name) + "'");
  }
  const Preset& p = it->second;
  config.mode = p.mode;
  config.phi = 0.0;
  if (p.mode == Mode::Pure) {
    config.j1 = SpinJ(p.two_j1);
    config.j2 = SpinJ(p.two_j2);
  } else {
    config.phi2 = 0.0;
    config.p1 = 0.5;
    config.z1b = p.comp2_amplitude;
    config.z2b = p.comp2_amplitude;
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, preset] : presets()) out.push_back(name);
    return out;
  }();
  return names;
}

MixedReport evaluate_mixed(const RankTwoMixture& m) {
  const DensityMatrix4 rho = density_matrix(m);
  MixedReport r{};
  r.wootters = wootters_concurrence(rho);
  r.simplified_spectral = simplified_concurrence_sq(spectral_rank2(rho));
  r.simplified_direct = simplified_concurrence_sq_direct(m);
  r.bounds = bounds(m);
  r.case_result = classify_case(m);
  r.quantities = mixture_quantities(m);
  return r;
}

EntangledScsParams pure_params(const ScanConfig& config, Complex z1,
                               Complex z2) {
  return {config.j1, config.j2, z1, z2, config.phi};
}

RankTwoMixture mixture_at(const ScanConfig& config, Complex z1, Complex z2) {
  RankTwoMixture m;
  m.comp1 = {config.j1, config.j2, z1, z2, config.phi};
  m.comp2 = {config.j1, config.j2, config.z1b, config.z2b, config.phi2};
  m.p1 = config.p1;
  m.p2 = 1.0 - config.p1;
  return m;
}

ScanRow evaluate_row(const ScanConfig& config, double z1, double z2) {
  ScanRow row;
  row.z1 = z1;
  row.z2 = z2;
  try {
    if (config.mode == Mode::Pure) {
      row.concurrence = concurrence_pure(pure_params(config, z1, z2));
    } else {
      const MixedReport r = evaluate_mixed(mixture_at(config, z1, z2));
      row.concurrence = r.wootters;
      row.wootters = r.wootters;
      row.simplified = r.simplified_spectral;
      row.lower = r.bounds.lower;
      row.upper = r.bounds.upper;
      row.label = r.case_result.label;
    }
  } catch (const DegenerateState&) {
    row.degenerate = true;
  }
  return row;
}

std::vector<ScanRow> run_scan(const ScanConfig& config, unsigned threads) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.steps);
  std::vector<ScanRow> rows(n * n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < n; i += threads) {
      const double z1 = config.grid_value(static_cast<int>(i));
      for (std::size_t k = 0; k < n; ++k) {
        rows[i * n + k] =
            evaluate_row(config, z1, config.grid_value(static_cast<int>(k)));
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  return rows;
}

std::size_t count_degenerate(const std::vector<ScanRow>& rows) {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const ScanRow& r) { return r.degenerate; }));
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string render_csv(const std::vector<ScanRow>& rows, Mode mode) {
  std::string out = mode == Mode::Pure
                        ? "z1,z2,concurrence\n"
                        : "z1,z2,concurrence,wootters,simplified,lower,upper,"
                          "case_label\n";
  for (const ScanRow& r : rows) {
    out += format_number(r.z1);
    out += ',';
    out += format_number(r.z2);
    out += ',';
    if (mode == Mode::Pure) {
      if (!r.degenerate) out += format_number(r.concurrence);
    } else if (r.degenerate) {
      out += ",,,,,";
    } else {
      for (double v : {r.concurrence, r.wootters, r.simplified, r.lower,
                       r.upper}) {
        out += format_number(v);
        out += ',';
      }
      out += to_string(r.label);
    }
    out += '\n';
  }
  return out;
}

std::string csv_to_pgm(std::string_view csv) {
  std::vector<std::string> lines;
  {
    std::string text(csv);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  if (lines.empty()) throw UsageError("empty CSV");

  const auto header = split(lines.front());
  const auto col = std::find(header.begin(), header.end(), "concurrence");
  if (col == header.end()) throw UsageError("CSV has no concurrence column");
  const auto index = static_cast<std::size_t>(col - header.begin());

  const std::size_t count = lines.size() - 1;
  const auto side = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(count))));
  if (count == 0 || side * side != count) {
    throw UsageError("row count " + std::to_string(count) +
                     " is not a square grid");
  }

  std::string pixels;
  pixels.reserve(count);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r]);
    if (cells.size() != header.size()) {
      throw UsageError("row " + std::to_string(r) + " has " +
                       std::to_string(cells.size()) + " cells");
    }
    const std::string& cell = cells[index];
    unsigned char value = 0;
    if (!cell.empty()) {
      char* end = nullptr;
      const double c = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() + cell.size() || !(c >= 0.0 && c <= 1.0)) {
        throw UsageError("bad concurrence '" + cell + "' on row " +
                         std::to_string(r));
      }
      value = static_cast<unsigned char>(std::lround(255.0 * c));
    }
    pixels.push_back(static_cast<char>(value));
  }
  return "P5\n" + std::to_string(side) + " " + std::to_string(side) +
         "\n255\n" + pixels;
}

namespace {

std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }

  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text =
      split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  const std::string_view im_text =
      split == std::string_view::npos ? body : body.substr(split);

  double re = 0.0;
  if (!re_text.empty()) {
    const auto parsed = parse_real(re_text);
    if (!parsed) return std::nullopt;
    re = *parsed;
  }
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    const auto parsed = parse_real(im_text);
    if (!parsed) return std::nullopt;
    im = *parsed;
  }
  return Complex(re, im);
}

namespace {

nlohmann::ordered_json complex_json(Complex z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

nlohmann::ordered_json component_json(const EntangledScsParams& p) {
  const EmbeddingData e = embedding(p);
  const TwoQubitPure s = to_two_qubit(p);
  nlohmann::ordered_json out;
  out["j1"] = p.j1.value();
  out["j2"] = p.j2.value();
  out["z1"] = complex_json(p.z1);
  out["z2"] = complex_json(p.z2);
  out["phi"] = p.phi;
  out["P1"] = e.p1;
  out["P2"] = e.p2;
  out["N"] = e.n;
  out["N1"] = e.n1;
  out["N2"] = e.n2;
  out["amplitudes"] = {{"a", complex_json(s.a)},
                       {"b", complex_json(s.b)},
                       {"c", complex_json(s.c)},
                       {"d", complex_json(s.d)}};
  out["concurrence"] = concurrence_pure(p);
  out["oracle_concurrence"] = oracle::oracle_concurrence(p);
  out["is_bell"] = is_bell(p);
  return out;
}

}  // namespace

nlohmann::ordered_json point_report(const PointRequest& request) {
  if (request.mode == Mode::Pure) {
    nlohmann::ordered_json out;
    out["mode"] = "pure";
    out.update(component_json(request.comp1));
    return out;
  }

  RankTwoMixture m;
  m.comp1 = request.comp1;
  m.comp2 = request.comp2;
  m.p1 = request.p1;
  m.p2 = 1.0 - request.p1;
  const MixedReport r = evaluate_mixed(m);

  nlohmann::ordered_json out;
  out["mode"] = "mixed";
  out["p1"] = m.p1;
  out["p2"] = m.p2;
  out["components"] = {component_json(m.comp1), component_json(m.comp2)};
  out["concurrence"] = r.wootters;
  out["wootters"] = r.wootters;
  out["simplified_spectral"] = r.simplified_spectral;
  out["simplified_direct"] = r.simplified_direct;
  out["C1"] = r.quantities.C1;
  out["C2"] = r.quantities.C2;
  out["c1"] = complex_json(r.quantities.c1);
  out["c2"] = complex_json(r.quantities.c2);
  out["c_plus"] = complex_json(r.quantities.cplus);
  out["c_minus"] = complex_json(r.quantities.cminus);
  out["lower"] = r.bounds.lower;
  out["upper"] = r.bounds.upper;
  out["case_label"] = std::string(to_string(r.case_result.label));
  if (r.case_result.classified()) {
    out["case_value"] = r.case_result.value;
  } else {
    out["case_value"] = nullptr;
  }
  return out;
}

}  // namespace scs::scan
