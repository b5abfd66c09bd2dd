#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "almost2d/criteria.hpp"
#include "almost2d/families.hpp"
#include "almost2d/field_io.hpp"
#include "almost2d/norms.hpp"
#include "almost2d/random_field.hpp"
#include "almost2d/solver.hpp"
#include "almost2d/wholespace.hpp"

namespace a2d::cli {
namespace {

using json = nlohmann::ordered_json;
constexpr double pi = std::numbers::pi;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<bool> integral;  // columns printed as integers
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.header.size(); ++c) os << (c ? "," : "") << t.header[c];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? "," : "");
      if (c < t.integral.size() && t.integral[c])
        os << std::llround(r[c]);
      else
        os << num(r[c]);
    }
    os << '\n';
  }
  return os.str();
}

json to_json(const Table& t) {
  json arr = json::array();
  for (const auto& r : t.rows) {
    json o;
    for (std::size_t c = 0; c < r.size(); ++c) o[t.header[c]] = r[c];
    arr.push_back(o);
  }
  return arr;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw IoError("write to " + path + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json report_json(const CriterionReport& r) {
  json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["log_lhs"] = r.log_lhs;
  j["satisfied"] = r.satisfied;
  json in = json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  json fl = json::object();
  for (const auto& [k, v] : r.flags) fl[k] = v;
  j["flags"] = fl;
  j["constants_version"] = r.constants_version;
  j["label"] = r.label;
  return j;
}

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return inf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

SpectralVectorField load_field(const std::string& path) { return to_spectral(read_field_file(path).field); }

int default_grid(int kmax) {
  int g = 16;
  while (g / 2 - 1 < kmax) g *= 2;
  return g;
}

}  // namespace

std::map<std::string, double> field_norms(const SpectralVectorField& u) {
  const SpectralVectorField w = curl(u);
  std::map<std::string, double> out;
  out["K"] = kinetic_energy(u);
  out["E"] = enstrophy(u);
  const double h = sobolev_norm(u, 0.5);
  out["u_hhalf_sq"] = h * h;
  out["u_l2"] = sobolev_norm(u, 0.0);
  out["u_l3"] = lebesgue_norm(u, 3.0);
  out["omega_l2"] = sobolev_norm(w, 0.0);
  out["omega_l3_2"] = lebesgue_norm(w, 1.5);
  out["omega_l6_5"] = lebesgue_norm(w, 1.2);
  out["omega_h_hminushalf"] = sobolev_norm(horizontal(w), -0.5);
  out["omega_h_l3_2"] = lebesgue_norm(horizontal(w), 1.5);
  out["max_divergence"] = max_divergence(u);
  out["mean_zero"] = u.mean_zero() ? 1.0 : 0.0;
  return out;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"Almost two-dimensional Navier-Stokes regularity toolkit"};
  app.require_subcommand(1, 1);

  std::string format;
  std::string output;
  double nu = 1.0;
  std::vector<int> ns;
  double dt = 0.0, t_end = -1.0;
  std::string dealias_rule;
  std::uint64_t seed = 1;
  int grid = 0;
  double amplitude = 1.0, energy = 0.0, a_log = 1.0;
  std::vector<std::string> ps;
  std::vector<double> epss;
  std::vector<int> ms;
  int kmax = 4;
  std::string file, config, family, kind;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "json or csv; sweep and wholespace default to csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--output", output, "output path; stdout when omitted");
  };

  auto* c_const = app.add_subcommand("constants", "sharp whole-space constants");
  add_format(c_const);

  auto* c_norms = app.add_subcommand("norms", "norms of a field file");
  c_norms->add_option("field", file, "field file")->required();
  add_format(c_norms);

  auto* c_check = app.add_subcommand("check", "small-data and almost-2D criteria for a field file");
  c_check->add_option("field", file, "field file")->required();
  c_check->add_option("--nu", nu, "viscosity")->required();
  add_format(c_check);

  auto* c_construct = app.add_subcommand("construct", "write a family member as a field file");
  c_construct
      ->add_option("family", family, "taylor-green | un | large-almost-2d | annulus-analog | random")
      ->required()
      ->check(CLI::IsMember({"taylor-green", "un", "large-almost-2d", "annulus-analog", "random"}));
  c_construct->add_option("--n", ns, "family index")->delimiter(',');
  c_construct->add_option("--grid", grid, "grid points per axis");
  c_construct->add_option("--seed", seed, "seed for the random family");
  c_construct->add_option("--amplitude", amplitude, "Taylor-Green amplitude");
  c_construct->add_option("--energy", energy, "target energy for the random family");
  c_construct->add_option("--kmax", kmax, "largest |k_i| for the random family");
  c_construct->add_option("--output", output, "field file path; the report goes to <output>.json")->required();

  auto* c_sim = app.add_subcommand("simulate", "integrate a field file and record diagnostics");
  c_sim->add_option("config", config, "key=value solver config")->required();
  c_sim->add_option("field", file, "initial field file")->required();
  c_sim->add_option("--nu", nu, "override viscosity");
  c_sim->add_option("--dt", dt, "override time step");
  c_sim->add_option("--t-end", t_end, "override horizon");
  c_sim->add_option("--dealias", dealias_rule, "two-thirds | none")->check(CLI::IsMember({"two-thirds", "none"}));
  c_sim->add_option("--output", output, "CSV path; the summary goes to <output>.json");

  auto* c_sweep = app.add_subcommand("sweep", "criterion quantities over a family");
  c_sweep->add_option("family", family, "annulus-analog | un | large-almost-2d")
      ->required()
      ->check(CLI::IsMember({"annulus-analog", "un", "large-almost-2d"}));
  c_sweep->add_option("--n", ns, "family indices")->delimiter(',')->required();
  c_sweep->add_option("--nu", nu, "viscosity");
  add_format(c_sweep);

  auto* c_whole = app.add_subcommand("wholespace", "quadrature on R^3");
  c_whole
      ->add_option("kind", kind, "lambda | embedding | cone | heat-kernel | besov-equivalence | rescaling")
      ->required()
      ->check(CLI::IsMember({"lambda", "embedding", "cone", "heat-kernel", "besov-equivalence", "rescaling"}));
  c_whole->add_option("--n", ns, "annulus indices")->delimiter(',');
  c_whole->add_option("--p", ps, "Lebesgue exponents (inf allowed)")->delimiter(',');
  c_whole->add_option("--eps", epss, "cone apertures")->delimiter(',');
  c_whole->add_option("--m", ms, "stretch factors")->delimiter(',');
  c_whole->add_option("--a", a_log, "log exponent of the rescaling");
  c_whole->add_option("--nu", nu, "viscosity");
  add_format(c_whole);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (format.empty()) format = (*c_sweep || *c_whole) ? "csv" : "json";

  try {
    if (*c_const) {
      const SharpConstants k = constants();
      Table t{{"c1", "c2", "r1", "r2", "small_data_threshold_coeff"},
              {{k.c1, k.c2, k.r1, k.r2, k.small_data_threshold_coeff}}};
      if (format == "csv") {
        write_text(output, to_csv(t));
      } else {
        json j = to_json(t)[0];
        j["constants_version"] = constants_version;
        write_text(output, dump(j));
      }
    } else if (*c_norms) {
      const auto norms = field_norms(load_field(file));
      Table t;
      t.rows.emplace_back();
      for (const auto& [k, v] : norms) {
        t.header.push_back(k);
        t.rows[0].push_back(v);
      }
      write_text(output, format == "csv" ? to_csv(t) : dump(to_json(t)[0]));
    } else if (*c_check) {
      const SpectralVectorField u = load_field(file);
      std::vector<CriterionReport> reps = {small_data_check(kinetic_energy(u), enstrophy(u), nu),
                                           gamma2d_check(u, nu), gamma2d_lp_check(curl(u), nu)};
      if (format == "csv") {
        std::string s = "name,lhs,rhs,log_lhs,satisfied\n";
        for (const auto& r : reps)
          s += r.name + "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.log_lhs) + "," +
               (r.satisfied ? "1" : "0") + "\n";
        write_text(output, s);
      } else {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(report_json(r));
        write_text(output, dump(arr));
      }
    } else if (*c_construct) {
      const int n = ns.empty() ? 1 : ns.front();
      std::map<std::string, std::string> extra{{"family", family}};
      json closed = json::object();
      SpectralVectorField u(GridSpec(4));
      if (family == "taylor-green") {
        u = taylor_green_2d(GridSpec(grid ? grid : 16), amplitude);
        closed["K"] = amplitude * amplitude / 4.0;
        closed["E"] = 2.0 * pi * pi * amplitude * amplitude;
        extra["amplitude"] = num(amplitude);
      } else if (family == "un") {
        u = un_family(n, GridSpec(grid ? grid : default_grid(n)));
        closed["omega_h_hminushalf"] = 1.0;
        closed["u_hhalf_sq"] = double(n) * n + 2.0;
      } else if (family == "large-almost-2d") {
        u = large_almost_2d(n, GridSpec(grid ? grid : 16));
        const auto c = large_almost_2d_norms(n, -std::pow(double(n), 5));
        closed["K"] = c.K0;
        closed["E"] = c.E0;
        closed["omega_h_hminushalf"] = std::exp(c.log_omega_h_hminushalf);
      } else if (family == "annulus-analog") {
        const GridSpec g(grid ? grid : annulus_required_grid(n));
        u = biot_savart(annulus_analog(n, g));
        extra["rho"] = num(annulus_default_rho(n));
      } else {
        u = random_solenoidal(GridSpec(grid ? grid : 16), seed, {.kmax = kmax, .slope = 1.0, .energy = energy});
        if (energy > 0.0) closed["K"] = energy;
        extra["kmax"] = std::to_string(kmax);
      }
      extra["seed"] = std::to_string(seed);
      extra["index"] = std::to_string(n);
      write_field_file(output, to_physical(u), extra);
      json side;
      side["family"] = family;
      side["n"] = n;
      side["grid"] = u.grid.n();
      side["seed"] = seed;
      side["closed_form"] = closed;
      side["computed"] = field_norms(u);
      write_text(output + ".json", dump(side));
    } else if (*c_sim) {
      std::ifstream cs(config);
      if (!cs) throw IoError("cannot open config " + config);
      std::stringstream text;
      text << cs.rdbuf();
      bool has_n = false;
      for (std::string line; std::getline(text, line);) {
        const auto eq = line.find('=');
        if (eq != std::string::npos && line.substr(0, line.find_first_of(" \t=")) == "n") has_n = true;
      }
      text.clear();
      text.seekg(0);
      SolverConfig cfg = parse_solver_config(text);
      const SpectralVectorField u0 = load_field(file);
      if (!has_n) cfg.grid = u0.grid;
      if (c_sim->count("--nu")) cfg.nu = nu;
      if (c_sim->count("--dt")) cfg.dt = dt;
      if (c_sim->count("--t-end")) cfg.t_end = t_end;
      if (!dealias_rule.empty()) cfg.dealias = dealias_rule == "none" ? Dealias::none : Dealias::two_thirds;
      const DiagnosticsSeries s = run(u0, cfg);

      Table t;
      t.header = DiagnosticsSeries::columns();
      t.integral.assign(t.header.size(), false);
      t.integral[11] = true;
      double max_energy = 0.0, max_identity = 0.0, worst_cubic = inf, worst_cor22 = inf, worst_gronwall = 0.0;
      bool decay_ok = true;
      for (const auto& r : s.rows) {
        t.rows.push_back({r.t, r.K, r.E, r.strain_h1_sq, r.det_S_integral, r.strain_l3_cubed, r.omega_h_hminushalf,
                          r.energy_eq_residual, r.strain_identity_residual, r.enstrophy_ineq_slack, r.cor22_slack,
                          r.horizontal_decay_flag ? 1.0 : 0.0, r.gronwall_envelope_sq});
        max_energy = std::max(max_energy, std::abs(r.energy_eq_residual));
        if (!std::isnan(r.strain_identity_residual)) max_identity = std::max(max_identity, r.strain_identity_residual);
        decay_ok = decay_ok && r.horizontal_decay_flag;
        if (!std::isnan(r.gronwall_envelope_sq) && r.gronwall_envelope_sq > 0.0)
          worst_gronwall = std::max(worst_gronwall, r.omega_h_hminushalf * r.omega_h_hminushalf / r.gronwall_envelope_sq);
      }
      for (std::size_t i = 1; i + 1 < s.rows.size(); ++i) {
        if (!cfg.monitors.count("enstrophy_inequality")) break;
        const auto sl = monitor_enstrophy_inequality(s, i);
        if (sl.scale > 0.0) {
          worst_cubic = std::min(worst_cubic, sl.cubic / sl.scale);
          worst_cor22 = std::min(worst_cor22, sl.cor22 / sl.scale);
        }
      }
      write_text(output, to_csv(t));

      const auto& r0 = s.rows.front();
      const BlowupTimes bt = blowup_time_bounds(r0.K, r0.E, cfg.nu);
      json sum;
      sum["status"] = s.status == RunStatus::completed ? "completed" : "blowup_suspected";
      sum["steps"] = s.steps;
      sum["nu"] = cfg.nu;
      sum["dt"] = cfg.dt;
      sum["advective_cfl"] = s.advective_cfl;
      sum["warnings"] = s.warnings;
      sum["max_energy_eq_residual"] = max_energy;
      sum["max_strain_identity_residual"] = max_identity;
      sum["min_relative_cubic_slack"] = worst_cubic;
      sum["min_relative_cor22_slack"] = worst_cor22;
      sum["max_gronwall_ratio"] = worst_gronwall;
      sum["verdicts"] = {{"energy_equality", max_energy <= 1e-6},
                         {"enstrophy_inequality", worst_cubic >= -1e-6 && worst_cor22 >= -1e-6},
                         {"horizontal_decay", decay_ok},
                         {"gronwall_envelope", worst_gronwall <= 1.0 + 1e-6}};
      sum["blowup_time_lower"] = bt.lower;
      sum["blowup_time_upper_if_blowup"] = bt.upper_if_blowup;
      sum["initial_criteria"] = {report_json(small_data_check(r0.K, r0.E, cfg.nu)),
                                 report_json(gamma2d_check(u0, cfg.nu))};
      if (output.empty() || output == "-")
        std::cerr << dump(sum);
      else
        write_text(output + ".json", dump(sum));
    } else if (*c_sweep) {
      Table t;
      if (family == "annulus-analog") {
        t.header = {"n", "grid", "rho", "K0", "E0", "omega_h_hminushalf", "log_criterion_quantity",
                    "criterion_quantity", "besov_hminushalf"};
        t.integral = {true, true};
        for (int n : ns) {
          const GridSpec g(annulus_required_grid(n));
          const SpectralVectorField w = annulus_analog(n, g);
          const SpectralVectorField u = biot_savart(w);
          const double K0 = kinetic_energy(u), E0 = enstrophy(u);
          const double wh = sobolev_norm(horizontal(w), -0.5);
          const double lq = log_gamma2d_quantity(wh, K0, E0, nu);
          t.rows.push_back({double(n), double(g.n()), annulus_default_rho(n), K0, E0, wh, lq, std::exp(lq),
                            besov_norm(w, 0.5, 2.0).value});
        }
      } else if (family == "un") {
        t.header = {"n", "omega_h_hminushalf", "u_hhalf_sq", "log_criterion_quantity", "criterion_quantity"};
        t.integral = {true};
        for (int n : ns) {
          const SpectralVectorField u = un_family(n, GridSpec(default_grid(n)));
          const double wh = sobolev_norm(horizontal(curl(u)), -0.5);
          const double h = sobolev_norm(u, 0.5);
          const double lq = log_gamma2d_quantity(wh, kinetic_energy(u), enstrophy(u), nu);
          t.rows.push_back({double(n), wh, h * h, lq, std::exp(lq)});
        }
      } else {
        t.header = {"n", "K0", "E0", "log_omega_h_hminushalf", "log_criterion_quantity", "log_threshold",
                    "satisfied"};
        t.integral = {true, false, false, false, false, false, true};
        const double log_rhs = std::log(constants().r1 * nu);
        for (int n : ns) {
          const auto c = large_almost_2d_norms(n, -std::pow(double(n), 5));
          const double lq = c.log_omega_h_hminushalf + log_gamma2d_quantity(1.0, c.K0, c.E0, nu);
          t.rows.push_back({double(n), c.K0, c.E0, c.log_omega_h_hminushalf, lq, log_rhs, lq < log_rhs ? 1.0 : 0.0});
        }
      }
      write_text(output, format == "json" ? dump(to_json(t)) : to_csv(t));
    } else if (*c_whole) {
      Table t;
      if (kind == "lambda") {
        t.header = {"n", "volume", "l2_sq", "hminus1_sq_upper", "horizontal_hminushalf_sq", "criterion_quantity",
                    "besov_half_lower", "besov_half"};
        t.integral = {true};
        for (int n : ns.empty() ? std::vector<int>{3, 10, 100, 1000} : ns) {
          const auto r = lambda_n_report(n, {}, nu);
          t.rows.push_back({double(n), r.volume, r.l2_sq, r.hminus1_sq_upper, r.horizontal_hminushalf_sq,
                            r.criterion_quantity, r.besov_half_lower, r.besov_half});
        }
      } else if (kind == "embedding") {
        t.header = {"p", "constant"};
        for (const auto& p : ps.empty() ? std::vector<std::string>{"inf"} : ps)
          t.rows.push_back({parse_exponent(p), besov_embedding_constant(parse_exponent(p))});
      } else if (kind == "cone") {
        t.header = {"p", "eps", "direct", "majorant"};
        for (const auto& p : ps.empty() ? std::vector<std::string>{"inf"} : ps)
          for (double e : epss.empty() ? std::vector<double>{0.5} : epss) {
            const auto c = cone_embedding_constant(parse_exponent(p), e);
            t.rows.push_back({parse_exponent(p), e, c.direct, c.majorant});
          }
      } else if (kind == "heat-kernel") {
        const auto h = heat_kernel_constants();
        t.header = {"grad_g_l1", "curl_bound_check", "worst_ratio"};
        t.rows.push_back({h.grad_g_l1, h.curl_bound_check ? 1.0 : 0.0, h.worst_ratio});
      } else if (kind == "besov-equivalence") {
        t.header = {"p", "forward", "backward"};
        for (const auto& p : ps.empty() ? std::vector<std::string>{"inf"} : ps) {
          const auto b = besov_equivalence_constants(parse_exponent(p));
          t.rows.push_back({parse_exponent(p), b.forward, b.backward});
        }
      } else {
        t.header = {"m", "eps", "lq_6_5_ratio", "lq_3_2_ratio", "lq_2_ratio", "criterion_quantity"};
        t.integral = {true};
        const SpectralVectorField base = curl(random_solenoidal(GridSpec(16), seed, {.kmax = 3}));
        const StretchedField ref = stretch(base, 1);
        for (int m : ms.empty() ? std::vector<int>{2, 4, 8} : ms) {
          const StretchedField f = stretch(base, m);
          const StretchedField w = rescaled_vorticity(base, m, a_log);
          t.rows.push_back({double(m), 1.0 / m, f.lebesgue_norm(1.2) / ref.lebesgue_norm(1.2),
                            f.lebesgue_norm(1.5) / ref.lebesgue_norm(1.5), f.lebesgue_norm(2.0) / ref.lebesgue_norm(2.0),
                            rescaled_criterion_quantity(w, nu)});
        }
      }
      write_text(output, format == "json" ? dump(to_json(t)) : to_csv(t));
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace a2d::cli
