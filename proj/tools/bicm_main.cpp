// Command-line front end: rate tables, dB-loss curves, and losslessness
// classification for PAM constellations with exact and max-log demappers.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicm/analysis.hpp"
#include "bicm/constellation.hpp"
#include "bicm/oracle.hpp"
#include "bicm/parallel.hpp"
#include "bicm/rates.hpp"

using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KindSpec {
  std::string token;
  bool label_level;
  bicm::RateKind kind;
  bicm::LValueKind lvalue;
};

const std::vector<KindSpec>& kind_table() {
  using bicm::LValueKind;
  using bicm::RateKind;
  static const std::vector<KindSpec> table{
      {"mi_bicm_exact", true, RateKind::mi_bicm, LValueKind::exact},
      {"mi_bicm_maxlog", true, RateKind::mi_bicm, LValueKind::maxlog},
      {"gmi_bicm_exact", true, RateKind::gmi_bicm, LValueKind::exact},
      {"gmi_bicm_maxlog", true, RateKind::gmi_bicm, LValueKind::maxlog},
      {"gmi_harm_exact", true, RateKind::gmi_harmonized, LValueKind::exact},
      {"gmi_harm_maxlog", true, RateKind::gmi_harmonized, LValueKind::maxlog},
      {"mi_exact", false, RateKind::mi_exact, LValueKind::exact},
      {"mi_maxlog", false, RateKind::mi_maxlog, LValueKind::maxlog},
      {"mi_corrected", false, RateKind::mi_corrected, LValueKind::corrected},
      {"gmi_exact", false, RateKind::gmi_exact, LValueKind::exact},
      {"gmi_maxlog", false, RateKind::gmi_maxlog, LValueKind::maxlog},
  };
  return table;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<KindSpec> parse_kinds(const std::string& arg) {
  std::vector<KindSpec> out;
  for (const std::string& token : split(arg, ',')) {
    if (token == "all") {
      for (const auto& k : kind_table()) {
        if (k.label_level) out.push_back(k);
      }
      continue;
    }
    bool found = false;
    for (const auto& k : kind_table()) {
      if (k.token == token) {
        out.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown rate kind: " + token);
  }
  if (out.empty()) throw ConfigError("at least one rate kind must be selected");
  return out;
}

std::vector<double> parse_snr_grid(const std::string& arg) {
  const auto parts = split(arg, ':');
  if (parts.size() != 3) throw ConfigError("--snr expects start:stop:step in dB");
  const double start = std::stod(parts[0]);
  const double stop = std::stod(parts[1]);
  const double step = std::stod(parts[2]);
  if (!(step > 0.0) || !(stop >= start)) {
    throw ConfigError("--snr needs stop >= start and step > 0");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 1e-9) break;
    grid.push_back(v);
  }
  return grid;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return j;
}

bicm::Labeling labeling_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    throw ConfigError("labeling name must be resolved by the caller: " + name);
  }
  if (!j.is_array()) throw ConfigError("labeling must be a matrix of bits");
  std::vector<bicm::Pattern> rows;
  for (const auto& row : j) {
    std::vector<std::uint8_t> bits;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ConfigError("labeling entries must be bits");
      const int b = v.get<int>();
      if (b != 0 && b != 1) throw ConfigError("labeling entries must be 0 or 1");
      bits.push_back(std::uint8_t(b));
    }
    try {
      rows.emplace_back(std::move(bits));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad labeling row: ") + e.what());
    }
  }
  try {
    return bicm::Labeling(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad labeling: ") + e.what());
  }
}

struct ChannelSetup {
  bicm::Constellation constellation;
  bicm::Labeling labeling;
  std::string constellation_desc;
  std::string labeling_desc;
};

ChannelSetup load_setup(const std::string& constellation_arg,
                        const std::string& labeling_arg) {
  std::optional<bicm::Constellation> c;
  std::optional<json> file_labeling;
  std::string cdesc = constellation_arg;

  if (constellation_arg.rfind("pam:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(constellation_arg.substr(4));
    } catch (...) {
      throw ConfigError("bad --constellation: " + constellation_arg);
    }
    try {
      c = bicm::make_equally_spaced_pam(m);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    const json j = load_json_file(constellation_arg);
    if (j.contains("points")) {
      std::vector<double> pts;
      for (const auto& v : j["points"]) pts.push_back(v.get<double>());
      try {
        c = bicm::normalize(std::move(pts));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad points: ") + e.what());
      }
      if (j.contains("m") && (1 << j["m"].get<int>()) != c->size()) {
        throw ConfigError("field m disagrees with the number of points");
      }
    } else if (j.contains("m")) {
      try {
        c = bicm::make_equally_spaced_pam(j["m"].get<int>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else {
      throw ConfigError(constellation_arg + ": needs \"points\" or \"m\"");
    }
    if (j.contains("labeling")) file_labeling = j["labeling"];
  }

  const int m = c->bits_per_symbol();
  std::optional<bicm::Labeling> lab;
  std::string ldesc = labeling_arg;
  auto resolve = [&](const json& spec) {
    if (spec.is_string()) {
      const std::string name = spec.get<std::string>();
      if (name == "brgc") return bicm::brgc(m);
      if (name == "nbc") return bicm::nbc(m);
      throw ConfigError("unknown labeling name: " + name);
    }
    return labeling_from_json(spec);
  };

  if (!labeling_arg.empty()) {
    if (labeling_arg == "brgc" || labeling_arg == "nbc") {
      lab = resolve(json(labeling_arg));
    } else if (!labeling_arg.empty() && labeling_arg.front() == '[') {
      try {
        lab = resolve(json::parse(labeling_arg));
      } catch (const json::parse_error& e) {
        throw ConfigError(std::string("bad inline labeling: ") + e.what());
      }
    } else {
      json j = load_json_file(labeling_arg);
      if (j.is_object() && j.contains("labeling")) j = j["labeling"];
      lab = resolve(j);
    }
  } else if (file_labeling) {
    lab = resolve(*file_labeling);
    ldesc = "from constellation file";
  } else {
    lab = bicm::brgc(m);
    ldesc = "brgc";
  }

  if (lab->symbol_count() != c->size()) {
    throw ConfigError("labeling size does not match the constellation");
  }
  return {*c, *lab, cdesc, ldesc};
}

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct RateRow {
  double snr_db;
  std::string kind;
  std::string bit_or_label;
  double value;
  std::optional<double> s_star;
};

std::vector<RateRow> compute_rows(const ChannelSetup& setup, double snr_db,
                                  const KindSpec& spec,
                                  const bicm::QuadratureConfig& quad) {
  using namespace bicm;
  const Snr snr = Snr::from_db(snr_db);
  std::vector<RateRow> rows;
  if (spec.label_level) {
    RateValue rv;
    switch (spec.kind) {
      case RateKind::mi_bicm:
        rv = bicm_mi(setup.constellation, setup.labeling, snr, spec.lvalue, quad);
        break;
      case RateKind::gmi_bicm:
        rv = bicm_gmi(setup.constellation, setup.labeling, snr, spec.lvalue, quad);
        break;
      default:
        rv = harmonized_gmi(setup.constellation, setup.labeling, snr, spec.lvalue,
                            quad);
        break;
    }
    if (rv.s_at_boundary) {
      std::cerr << "warning: s minimizer at search boundary for " << spec.token
                << " at " << snr_db << " dB\n";
    }
    rows.push_back({snr_db, spec.token, "label", rv.value, rv.s_star});
  } else {
    for (int j = 0; j < setup.labeling.bit_count(); ++j) {
      const Pattern& row = setup.labeling.row(j);
      RateValue rv;
      switch (spec.kind) {
        case RateKind::mi_exact:
          rv = bit_mi_exact(setup.constellation, row, snr, quad);
          break;
        case RateKind::mi_maxlog:
          rv = bit_mi_maxlog(setup.constellation, row, snr, quad);
          break;
        default:
          rv = bit_gmi(setup.constellation, row, snr, spec.lvalue, quad);
          break;
      }
      if (rv.s_at_boundary) {
        std::cerr << "warning: s minimizer at search boundary for " << spec.token
                  << " bit " << (j + 1) << " at " << snr_db << " dB\n";
      }
      rows.push_back(
          {snr_db, spec.token, "bit" + std::to_string(j + 1), rv.value, rv.s_star});
    }
  }
  return rows;
}

void mc_check_rows(const ChannelSetup& setup, const std::vector<RateRow>& rows,
                   std::uint64_t samples, std::uint64_t seed) {
  using namespace bicm;
  int failures = 0;
  for (const auto& row : rows) {
    const KindSpec* spec = nullptr;
    for (const auto& k : kind_table()) {
      if (k.token == row.kind) spec = &k;
    }
    const Snr snr = Snr::from_db(row.snr_db);
    McEstimate est;
    if (spec->label_level) {
      std::vector<double> s;
      if (spec->kind == RateKind::gmi_bicm) {
        s.push_back(*row.s_star);
      } else if (spec->kind == RateKind::gmi_harmonized) {
        for (const auto& r : setup.labeling.rows()) {
          s.push_back(*bit_gmi(setup.constellation, r, snr, spec->lvalue).s_star);
        }
      }
      est = mc_rate(setup.constellation, setup.labeling, snr, spec->kind,
                    spec->lvalue, samples, seed, s);
    } else {
      const int j = std::stoi(row.bit_or_label.substr(3)) - 1;
      est = mc_rate(setup.constellation, setup.labeling.row(j), snr, spec->kind,
                    samples, seed, row.s_star);
    }
    const double delta = std::abs(est.mean - row.value);
    const bool ok = delta <= 3.0 * est.std_error;
    std::cerr << "mc-check " << row.kind << " " << row.bit_or_label << " @ "
              << fmt(row.snr_db, "%.6g") << " dB: quad=" << fmt(row.value)
              << " mc=" << fmt(est.mean) << " se=" << fmt(est.std_error)
              << (ok ? " ok" : " MISMATCH") << "\n";
    if (!ok) ++failures;
  }
  if (failures > 0) {
    throw std::runtime_error(std::to_string(failures) +
                             " Monte Carlo cross-checks failed");
  }
}

void write_svg(const std::string& path,
               const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
               const std::string& x_label, const std::string& y_label) {
  double xmin = 1e300, xmax = -1e300, ymin = 0.0, ymax = -1e300;
  for (const auto& [name, pts] : series) {
    for (const auto& [x, y] : pts) {
      if (!std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax <= xmin) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (ymax <= ymin) ymax = ymin + 1.0;

  const double w = 640, h = 480, ml = 70, mr = 20, mt = 20, mb = 50;
  auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
  auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
  const char* palette[] = {"#c0392b", "#27ae60", "#2980b9", "#8e44ad", "#d35400", "#16a085"};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " "
      << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << h - mb << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = xmin + (xmax - xmin) * i / 5;
    const double y = ymin + (ymax - ymin) * i / 5;
    out << "<text x=\"" << sx(x) << "\" y=\"" << h - mb + 18
        << "\" text-anchor=\"middle\">" << fmt(x, "%.4g") << "</text>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << sy(y) + 4
        << "\" text-anchor=\"end\">" << fmt(y, "%.4g") << "</text>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << sy(y) << "\" x2=\"" << w - mr
        << "\" y2=\"" << sy(y) << "\" stroke=\"#dddddd\"/>\n";
  }
  out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (mt + h - mb) / 2 << ")\">" << y_label << "</text>\n";
  int color = 0;
  double legend_y = mt + 14;
  for (const auto& [name, pts] : series) {
    const char* stroke = palette[color % 6];
    out << "<polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) {
      if (!std::isfinite(y)) continue;
      out << sx(x) << "," << sy(y) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << w - mr - 6 << "\" y=\"" << legend_y
        << "\" text-anchor=\"end\" fill=\"" << stroke << "\">" << name
        << "</text>\n";
    legend_y += 16;
    ++color;
  }
  out << "</svg>\n";
}

int cmd_rates(const std::string& constellation_arg, const std::string& labeling_arg,
              const std::string& kinds_arg, const std::string& snr_arg,
              const std::string& out_path, int quad_nodes, std::uint64_t mc_samples,
              std::uint64_t seed) {
  const ChannelSetup setup = load_setup(constellation_arg, labeling_arg);
  const auto kinds = parse_kinds(kinds_arg);
  const auto grid = parse_snr_grid(snr_arg);
  bicm::QuadratureConfig quad;
  quad.nodes_per_point = quad_nodes;

  std::vector<std::vector<RateRow>> per_point(grid.size());
  bicm::parallel_for(grid.size(), [&](std::size_t i) {
    for (const auto& spec : kinds) {
      auto rows = compute_rows(setup, grid[i], spec, quad);
      per_point[i].insert(per_point[i].end(), rows.begin(), rows.end());
    }
  });

  std::vector<RateRow> rows;
  for (auto& chunk : per_point) rows.insert(rows.end(), chunk.begin(), chunk.end());

  std::ostringstream csv;
  csv << "snr_db,kind,bit_or_label,value,s_star\n";
  for (const auto& r : rows) {
    csv << fmt(r.snr_db, "%.10g") << "," << r.kind << "," << r.bit_or_label << ","
        << fmt(r.value) << "," << (r.s_star ? fmt(*r.s_star) : "") << "\n";
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
  }

  if (mc_samples > 0) mc_check_rows(setup, rows, mc_samples, seed);
  return 0;
}

int cmd_loss(const std::string& constellation_arg, const std::string& labeling_arg,
             const std::string& reference_arg, const std::string& degraded_arg,
             const std::string& targets_arg, const std::string& snr_arg,
             const std::string& out_arg, int quad_nodes) {
  const ChannelSetup setup = load_setup(constellation_arg, labeling_arg);
  const auto ref_kinds = parse_kinds(reference_arg);
  if (ref_kinds.size() != 1) throw ConfigError("--reference expects a single kind");
  const auto deg_kinds = parse_kinds(degraded_arg);
  const auto grid = parse_snr_grid(snr_arg);
  if (grid.size() < 2) throw ConfigError("--snr grid needs at least two points");
  bicm::QuadratureConfig quad;
  quad.nodes_per_point = quad_nodes;

  std::vector<double> targets;
  for (const auto& t : split(targets_arg, ',')) targets.push_back(std::stod(t));
  if (targets.empty()) throw ConfigError("--targets expects at least one rate");

  // Labeling-level kinds give one curve; bit-level kinds give one curve per
  // bit position, compared bit against bit. Mixed levels have different
  // rate ranges and cannot be compared.
  for (const auto& spec : deg_kinds) {
    if (spec.label_level != ref_kinds.front().label_level) {
      throw ConfigError("reference and degraded kinds must both be labeling-level "
                        "or both bit-level");
    }
  }
  const bool label_level = ref_kinds.front().label_level;
  const int curves_per_kind = label_level ? 1 : setup.labeling.bit_count();

  auto curves_for = [&](const KindSpec& spec) {
    std::vector<bicm::RateCurve> out;
    for (int j = 0; j < curves_per_kind; ++j) {
      const std::string name =
          label_level ? spec.token : spec.token + ":bit" + std::to_string(j + 1);
      out.push_back(bicm::build_curve(
          [&, spec, j](double db) {
            return compute_rows(setup, db, spec, quad)[std::size_t(j)].value;
          },
          grid, label_level ? setup.labeling.bit_count() : 1.0, name));
    }
    return out;
  };

  const std::vector<bicm::RateCurve> reference = curves_for(ref_kinds.front());
  std::vector<std::vector<bicm::RateCurve>> degraded;
  degraded.reserve(deg_kinds.size());
  for (const auto& spec : deg_kinds) degraded.push_back(curves_for(spec));

  std::string stem = out_arg.empty() ? "loss" : out_arg;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") {
    stem = stem.substr(0, stem.size() - 4);
  }
  std::ofstream csv(stem + ".csv");
  if (!csv) throw std::runtime_error("cannot write " + stem + ".csv");
  csv << "kind,target_rate,loss_db\n";

  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
  for (std::size_t d = 0; d < degraded.size(); ++d) {
    for (std::size_t j = 0; j < degraded[d].size(); ++j) {
      const std::string& name = degraded[d][j].label();
      series.emplace_back(name, std::vector<std::pair<double, double>>{});
      for (double t : targets) {
        double loss = std::nan("");
        try {
          loss = bicm::loss_db(reference[j], degraded[d][j], t);
        } catch (const std::out_of_range& e) {
          std::cerr << "warning: target " << t << " for " << name << ": "
                    << e.what() << "\n";
        }
        csv << name << "," << fmt(t) << ","
            << (std::isfinite(loss) ? fmt(loss) : "nan") << "\n";
        series.back().second.emplace_back(t, loss);
      }
    }
  }
  write_svg(stem + ".svg", series, "rate (bits/channel use)", "loss (dB)");
  return 0;
}

int cmd_classify(const std::string& constellation_arg,
                 const std::string& labeling_arg) {
  const ChannelSetup setup = load_setup(constellation_arg, labeling_arg);
  const auto res = bicm::classify_labeling(setup.constellation, setup.labeling);
  const auto center = bicm::symmetry_center(setup.constellation);
  std::cout << "constellation: " << setup.constellation_desc
            << (center ? " (symmetric)" : " (asymmetric)") << "\n";
  std::cout << "labeling: " << setup.labeling_desc << "\n";
  std::vector<int> lossy_rows;
  for (std::size_t j = 0; j < res.rows.size(); ++j) {
    const auto& v = res.rows[j];
    std::cout << "row " << (j + 1) << ": "
              << (v.lossless() ? "lossless" : "lossy") << " (" << v.reason
              << ")\n";
    if (!v.lossless()) lossy_rows.push_back(int(j + 1));
  }
  if (res.all_lossless) {
    std::cout << "all bit positions lossless\n";
  } else if (lossy_rows.size() == 1) {
    std::cout << "row " << lossy_rows[0] << " lossy ("
              << res.rows[std::size_t(lossy_rows[0] - 1)].reason << ")\n";
  } else {
    std::cout << "rows ";
    for (std::size_t i = 0; i < lossy_rows.size(); ++i) {
      std::cout << (i ? "," : "") << lossy_rows[i];
    }
    std::cout << " lossy\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable-rate analysis for PAM with exact and max-log L-values"};
  app.require_subcommand(1);

  std::string constellation = "pam:2";
  std::string labeling;
  std::string kinds = "all";
  std::string snr = "-10:20:0.25";
  std::string out;
  std::string reference = "mi_bicm_exact";
  std::string degraded = "mi_bicm_maxlog,gmi_harm_maxlog,gmi_bicm_maxlog";
  std::string targets = "0.5,1.0,1.5";
  int quad_nodes = 64;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--constellation", constellation,
                    "builtin pam:<m> or a JSON file with points/m/labeling");
    cmd->add_option("--labeling", labeling,
                    "brgc, nbc, inline JSON bit matrix, or a JSON file");
  };

  CLI::App* rates = app.add_subcommand("rates", "tabulate rates over an SNR grid");
  add_common(rates);
  rates->add_option("--kinds", kinds, "comma list of rate kinds, or 'all'");
  rates->add_option("--snr", snr, "grid start:stop:step in dB");
  rates->add_option("--out", out, "CSV output path (default: stdout)");
  rates->add_option("--quad-nodes", quad_nodes, "quadrature order per point");
  rates->add_option("--mc-check", mc_samples,
                    "verify each row against the Monte Carlo oracle");
  rates->add_option("--seed", seed, "seed for --mc-check");

  CLI::App* loss = app.add_subcommand("loss", "dB loss between two rate curves");
  add_common(loss);
  loss->add_option("--reference", reference, "reference rate kind");
  loss->add_option("--degraded", degraded, "comma list of degraded kinds");
  loss->add_option("--targets", targets, "comma list of target rates");
  loss->add_option("--snr", snr, "curve grid start:stop:step in dB");
  loss->add_option("--out", out, "output stem (writes <stem>.csv and <stem>.svg)");
  loss->add_option("--quad-nodes", quad_nodes, "quadrature order per point");

  CLI::App* classify = app.add_subcommand("classify", "losslessness classification");
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (rates->parsed()) {
      return cmd_rates(constellation, labeling, kinds, snr, out, quad_nodes,
                       mc_samples, seed);
    }
    if (loss->parsed()) {
      return cmd_loss(constellation, labeling, reference, degraded, targets, snr,
                      out, quad_nodes);
    }
    return cmd_classify(constellation, labeling);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
