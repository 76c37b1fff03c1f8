// gt: tunneling spectra of Schrodinger operators on finite graphs.
//
// Reports go to stdout (JSON by default, --format csv for the main table),
// a short human summary to stderr.  Exit codes: 0 ok, 1 verification FAIL,
// 2 invalid input, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gt/annealing.hpp"
#include "gt/errors.hpp"
#include "gt/graph.hpp"
#include "gt/hamiltonian.hpp"
#include "gt/io.hpp"
#include "gt/linalg.hpp"
#include "gt/paths.hpp"
#include "gt/quasimodes.hpp"
#include "gt/tunneling.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

int g_digits = 0;  // 0 = shortest round-trip representation

void init_digits() {
  const char* env = std::getenv("GT_REPORT_DIGITS");
  if (!env) return;
  char* end = nullptr;
  const long d = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || d < 1 || d > 17)
    throw gt::ValidationError("BadDigits", "GT_REPORT_DIGITS must be an integer in 1..17");
  g_digits = static_cast<int>(d);
}

double rounded(double x) {
  if (g_digits == 0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", g_digits, x);
  return std::strtod(buf, nullptr);
}

ordered_json jnum(double x) { return rounded(x); }

ordered_json jvec(const gt::Vector& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(jnum(x));
  return a;
}

ordered_json jmatrix(const gt::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(jnum(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string csv_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", g_digits == 0 ? 17 : g_digits, x);
  return buf;
}

ordered_json base_report(const std::string& command, const std::string& path,
                         const std::string& sha) {
  ordered_json r;
  r["format"] = "gt-report/1";
  r["command"] = command;
  r["input"] = ordered_json::object();
  r["input"]["path"] = path;
  r["input"]["sha256"] = sha;
  r["parameters"] = ordered_json::object();
  r["warnings"] = ordered_json::array();
  r["results"] = ordered_json::object();
  return r;
}

void emit(const ordered_json& report, const std::string& csv, const std::string& format) {
  if (format == "csv")
    std::cout << csv;
  else
    std::cout << report.dump(2) << "\n";
}

struct CommonArgs {
  std::string file;
  std::string format = "json";
};

int run_wells(const CommonArgs& args) {
  const gt::GraphInput in = gt::load_graph_file(args.file);
  const gt::WellSet wells = gt::WellSet::detect(in.graph, in.potential);

  ordered_json report = base_report("wells", args.file, in.sha256);
  auto& res = report["results"];
  res["vertex_count"] = in.graph.size();
  res["edge_count"] = static_cast<int>(in.graph.edges().size());
  ordered_json names = ordered_json::array();
  for (int w : wells.wells()) names.push_back(in.graph.label(w));
  res["wells"] = names;
  res["s0"] = wells.separation() ? ordered_json(*wells.separation()) : ordered_json(nullptr);
  ordered_json pairs = ordered_json::array();
  std::ostringstream csv;
  csv << "from,to,distance\n";
  const auto& dist = wells.pair_distances();
  for (int i = 0; i < wells.count(); ++i)
    for (int j = i + 1; j < wells.count(); ++j) {
      ordered_json p;
      p["from"] = in.graph.label(wells.wells()[i]);
      p["to"] = in.graph.label(wells.wells()[j]);
      p["distance"] = dist[i][j] ? ordered_json(*dist[i][j]) : ordered_json(nullptr);
      pairs.push_back(p);
      csv << in.graph.label(wells.wells()[i]) << "," << in.graph.label(wells.wells()[j]) << ","
          << (dist[i][j] ? std::to_string(*dist[i][j]) : "inf") << "\n";
    }
  res["pair_distances"] = pairs;

  std::cerr << "wells:";
  for (const auto& n : names) std::cerr << " " << n.get<std::string>();
  if (wells.separation())
    std::cerr << " (S0 = " << *wells.separation() << ")\n";
  else
    std::cerr << " (S0 = none)\n";
  emit(report, csv.str(), args.format);
  return 0;
}

int run_spectrum(const CommonArgs& args, double hbar, const std::string& dirichlet_well) {
  const gt::GraphInput in = gt::load_graph_file(args.file);

  ordered_json report = base_report("spectrum", args.file, in.sha256);
  report["parameters"]["hbar"] = jnum(hbar);

  gt::EigenDecomposition eig;
  if (dirichlet_well.empty()) {
    eig = gt::sym_eigen(gt::build_hamiltonian(in.graph, in.potential, hbar));
  } else {
    const gt::WellSet wells = gt::WellSet::detect(in.graph, in.potential);
    const int well = in.graph.index_of(dirichlet_well);
    eig = gt::sym_eigen(
        gt::dirichlet_restriction(in.graph, in.potential, wells, well, hbar).matrix);
    report["parameters"]["dirichlet_well"] = dirichlet_well;
  }

  auto& res = report["results"];
  res["eigenvalues"] = jvec(eig.eigenvalues);
  res["solver_residual"] = jnum(eig.residual);
  res["solver_sweeps"] = eig.sweeps;

  std::ostringstream csv;
  csv << "index,eigenvalue\n";
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
    csv << k << "," << csv_num(eig.eigenvalues[k]) << "\n";

  std::cerr << eig.eigenvalues.size() << " eigenvalues, lowest = "
            << csv_num(eig.eigenvalues.front()) << "\n";
  emit(report, csv.str(), args.format);
  return 0;
}

int run_mu(const CommonArgs& args, const std::string& well_label, double hbar,
           std::optional<int> max_len_arg) {
  const gt::GraphInput in = gt::load_graph_file(args.file);
  const gt::WellSet wells = gt::WellSet::detect(in.graph, in.potential);
  const int well = in.graph.index_of(well_label);
  const int max_len = max_len_arg.value_or(gt::default_truncation_len(wells.separation()));

  ordered_json report = base_report("mu", args.file, in.sha256);
  report["parameters"]["well"] = well_label;
  report["parameters"]["hbar"] = jnum(hbar);
  report["parameters"]["max_path_len"] = max_len;
  report["parameters"]["max_path_len_defaulted"] = !max_len_arg.has_value();

  const gt::WellEigenvalue we = gt::solve_mu(in.graph, in.potential, wells, well, hbar, max_len);
  const gt::GroundState oracle = gt::dirichlet_ground_state(
      gt::dirichlet_restriction(in.graph, in.potential, wells, well, hbar));

  double sum_inverse = 0.0;
  for (int y : in.graph.neighbors(well)) sum_inverse += 1.0 / in.potential.value(y);

  auto& res = report["results"];
  res["mu"] = jnum(we.mu);
  res["iterations"] = we.iterations;
  res["residual"] = jnum(we.residual);
  res["truncation_len"] = we.truncation_len;
  res["tail_bound"] = jnum(we.tail_bound);
  res["dirichlet_mu"] = jnum(oracle.mu);
  res["dirichlet_gap"] = jnum(oracle.gap);
  res["mu_vs_dirichlet"] = jnum(std::abs(we.mu - oracle.mu));
  ordered_json leading;
  leading["sum_inverse_potential"] = jnum(sum_inverse);
  if (hbar > 0.0) {
    const double ratio = std::abs(we.mu) / (hbar * hbar * hbar * hbar);
    leading["abs_mu_over_hbar4"] = jnum(ratio);
    if (sum_inverse > 0.0)
      leading["relative_gap"] = jnum(std::abs(ratio - sum_inverse) / sum_inverse);
  }
  res["leading_order"] = leading;
  res["sign_note"] =
      "computed mu is negative; the displayed leading term hbar^4 * sum 1/V(y) is positive; "
      "the magnitudes agree: |mu|/hbar^4 approaches sum 1/V(y) as hbar -> 0";

  std::ostringstream csv;
  csv << "field,value\n";
  csv << "mu," << csv_num(we.mu) << "\n";
  csv << "iterations," << we.iterations << "\n";
  csv << "residual," << csv_num(we.residual) << "\n";
  csv << "tail_bound," << csv_num(we.tail_bound) << "\n";
  csv << "dirichlet_mu," << csv_num(oracle.mu) << "\n";

  std::cerr << "mu(" << well_label << ") = " << csv_num(we.mu) << " in " << we.iterations
            << " iterations (|mu - dirichlet| = " << csv_num(std::abs(we.mu - oracle.mu))
            << ")\n";
  emit(report, csv.str(), args.format);
  return 0;
}

int run_interaction(const CommonArgs& args, double hbar, const std::string& mode,
                    std::optional<int> max_len_arg) {
  const gt::GraphInput in = gt::load_graph_file(args.file);
  const gt::WellSet wells = gt::WellSet::detect(in.graph, in.potential);
  const int max_len = max_len_arg.value_or(gt::default_truncation_len(wells.separation()));
  const int n = wells.count();

  ordered_json report = base_report("interaction", args.file, in.sha256);
  report["parameters"]["hbar"] = jnum(hbar);
  report["parameters"]["mode"] = mode;
  report["parameters"]["max_path_len"] = max_len;
  report["parameters"]["max_path_len_defaulted"] = !max_len_arg.has_value();

  auto& res = report["results"];
  ordered_json names = ordered_json::array();
  for (int w : wells.wells()) names.push_back(in.graph.label(w));
  res["wells"] = names;
  std::ostringstream csv;

  if (mode == "leading") {
    const gt::InteractionMatrix im =
        gt::interaction_matrix_leading(in.graph, in.potential, wells, hbar, max_len);
    const gt::Vector ieigs = gt::sym_eigen(im.full()).eigenvalues;
    const gt::Vector all = gt::sym_eigen(gt::build_hamiltonian(in.graph, in.potential, hbar))
                               .eigenvalues;
    const gt::Vector heigs(all.begin(), all.begin() + n);

    res["s0"] = im.s0 ? ordered_json(*im.s0) : ordered_json(nullptr);
    ordered_json diag = ordered_json::array();
    for (const auto& we : im.diag) {
      ordered_json d;
      d["well"] = in.graph.label(we.well);
      d["mu"] = jnum(we.mu);
      d["iterations"] = we.iterations;
      d["residual"] = jnum(we.residual);
      d["tail_bound"] = jnum(we.tail_bound);
      diag.push_back(d);
    }
    res["diagonal"] = diag;
    res["offdiag"] = jmatrix(im.offdiag);
    res["interaction_eigenvalues"] = jvec(ieigs);
    res["exact_eigenvalues"] = jvec(heigs);
    ordered_json errors = ordered_json::array();
    csv << "index,interaction_eigenvalue,exact_eigenvalue,abs_error\n";
    for (int k = 0; k < n; ++k) {
      errors.push_back(jnum(std::abs(ieigs[k] - heigs[k])));
      csv << k << "," << csv_num(ieigs[k]) << "," << csv_num(heigs[k]) << ","
          << csv_num(std::abs(ieigs[k] - heigs[k])) << "\n";
    }
    res["per_index_error"] = errors;
    double worst = 0.0;
    for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(ieigs[k] - heigs[k]));
    for (const auto& [i, j] : im.pairs_beyond_s0)
      report["warnings"].push_back("no length-S0 path between " +
                                   in.graph.label(im.wells[i]) + " and " +
                                   in.graph.label(im.wells[j]) +
                                   "; their coupling vanishes at this order");
    std::cerr << "leading interaction " << n << "x" << n
              << ", max per-index error = " << csv_num(worst) << "\n";
  } else {  // appendixA
    const gt::QuasimodeFamily fam =
        gt::tunneling_family(in.graph, in.potential, wells, hbar, max_len);
    const gt::InteractionReport rep = gt::build_interaction_appendixA(fam);

    res["interval"] = ordered_json::array({jnum(fam.alpha), jnum(fam.beta)});
    res["gap"] = jnum(fam.gap);
    res["eps"] = jnum(fam.eps);
    res["eta"] = jnum(fam.eta);
    res["lambda_s"] = jnum(fam.lambda_s);
    res["a_exact"] = jmatrix(rep.a_exact);
    res["a_approx"] = jmatrix(rep.a_approx);
    res["max_difference"] = jnum(rep.max_difference);
    res["dist_fe"] = jnum(rep.dist_fe);
    res["dist_bound"] = jnum(rep.dist_bound);
    res["cluster_eigenvalues"] = jvec(fam.subspace.eigenvalues);
    res["per_index_error"] = jvec(rep.eig_errors);
    res["corollary_reference"] = jnum(rep.corollary_reference);
    csv << "index,cluster_eigenvalue,abs_error\n";
    for (std::size_t k = 0; k < rep.eig_errors.size(); ++k)
      csv << k << "," << csv_num(fam.subspace.eigenvalues[k]) << ","
          << csv_num(rep.eig_errors[k]) << "\n";
    std::cerr << "appendixA interaction: max |exact - approx| = "
              << csv_num(rep.max_difference) << ", d(F,E) = " << csv_num(rep.dist_fe)
              << " <= " << csv_num(rep.dist_bound) << "\n";
  }
  emit(report, csv.str(), args.format);
  return 0;
}

int run_verify(const CommonArgs& args, double hbar_max, double hbar_min, int steps,
               bool defaulted) {
  const gt::GraphInput in = gt::load_graph_file(args.file);
  const gt::WellSet wells = gt::WellSet::detect(in.graph, in.potential);

  if (!(hbar_min > 0.0) || !(hbar_max > hbar_min))
    throw gt::ValidationError("BadGrid", "need hbar-max > hbar-min > 0");
  if (steps < 2) throw gt::ValidationError("BadGrid", "need at least 4 grid points");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = hbar_max * std::pow(hbar_min / hbar_max,
                                  static_cast<double>(i) / (steps - 1));
  grid.back() = hbar_min;

  ordered_json report = base_report("verify", args.file, in.sha256);
  report["parameters"]["hbar_max"] = jnum(hbar_max);
  report["parameters"]["hbar_min"] = jnum(hbar_min);
  report["parameters"]["steps"] = steps;
  report["parameters"]["grid_defaulted"] = defaulted;

  const gt::OrderFitReport rep = gt::verify_order(in.graph, in.potential, wells, grid);

  auto& res = report["results"];
  res["hbars"] = jvec(rep.hbars);
  res["s0"] = rep.s0 ? ordered_json(*rep.s0) : ordered_json(nullptr);
  res["threshold"] = jnum(rep.threshold);
  ordered_json fits = ordered_json::array();
  std::ostringstream csv;
  csv << "index,slope,exact,pass\n";
  for (const auto& f : rep.fits) {
    ordered_json jf;
    jf["index"] = f.index;
    jf["errors"] = jvec(f.errors);
    jf["exact"] = f.exact;
    jf["slope"] = f.exact ? ordered_json(nullptr) : ordered_json(jnum(f.slope));
    jf["pass"] = f.pass;
    fits.push_back(jf);
    csv << f.index << "," << (f.exact ? "" : csv_num(f.slope)) << ","
        << (f.exact ? "true" : "false") << "," << (f.pass ? "true" : "false") << "\n";
    std::cerr << "index " << f.index << ": "
              << (f.exact ? std::string("exact agreement")
                          : "slope " + std::string(csv_num(f.slope)))
              << (f.pass ? "  PASS" : "  FAIL") << "\n";
  }
  res["fits"] = fits;
  res["pass"] = rep.pass;
  std::cerr << (rep.pass ? "PASS" : "FAIL") << " (threshold " << csv_num(rep.threshold)
            << ")\n";
  emit(report, csv.str(), args.format);
  return rep.pass ? 0 : 1;
}

int run_anneal(const CommonArgs& args, std::vector<double> temps, bool defaulted) {
  const gt::LandscapeInput in = gt::load_landscape_file(args.file);
  const gt::Landscape& l = in.landscape;

  ordered_json report = base_report("anneal", args.file, in.sha256);
  {
    ordered_json jt = ordered_json::array();
    for (double t : temps) jt.push_back(jnum(t));
    report["parameters"]["temps"] = jt;
    report["parameters"]["temps_defaulted"] = defaulted;
  }

  double stationarity_max = 0.0, conjugation_max = 0.0, zero_mode_max = 0.0;
  for (double t : temps) {
    stationarity_max = std::max(stationarity_max, gt::check_stationarity(l, t));
    const gt::ConjugationReport conj = gt::conjugated_operator(l, t);
    conjugation_max = std::max(conjugation_max, conj.max_relative_difference);
    const gt::Vector f = gt::zero_mode(l, t);
    const gt::Vector hf = conj.h_formula * f;
    for (double x : hf) zero_mode_max = std::max(zero_mode_max, std::abs(x));
  }

  auto& res = report["results"];
  ordered_json points = ordered_json::array();
  std::ostringstream csv;
  csv << "temperature,eps,gap,lambda1\n";

  if (temps.size() >= 4) {
    const gt::GapReport rep = gt::gap_order_fit(l, temps);
    for (const auto& p : rep.points) {
      ordered_json jp;
      jp["temperature"] = jnum(p.temperature);
      jp["eps"] = jnum(p.eps);
      jp["gap"] = jnum(p.gap);
      jp["lambda1"] = jnum(p.lambda1);
      points.push_back(jp);
      csv << csv_num(p.temperature) << "," << csv_num(p.eps) << "," << csv_num(p.gap) << ","
          << csv_num(p.lambda1) << "\n";
    }
    res["points"] = points;
    ordered_json fit;
    fit["fitted_exponent"] = jnum(rep.fitted_exponent);
    fit["fitted_exponent_exp_minus_1_over_T"] = jnum(rep.fitted_exponent_alt);
    fit["rounded_even_exponent"] = rep.rounded_even_exponent;
    fit["fit_residual"] = jnum(rep.fit_residual);
    res["fit"] = fit;
    std::cerr << "gap order " << csv_num(rep.fitted_exponent) << " in e^(-1/2T) (even: "
              << rep.rounded_even_exponent << ", residual " << csv_num(rep.fit_residual)
              << ")\n";
  } else {
    for (double t : temps) {
      const gt::SpectralGap p = gt::spectral_gap(l, t);
      ordered_json jp;
      jp["temperature"] = jnum(p.temperature);
      jp["eps"] = jnum(p.eps);
      jp["gap"] = jnum(p.gap);
      jp["lambda1"] = jnum(p.lambda1);
      points.push_back(jp);
      csv << csv_num(p.temperature) << "," << csv_num(p.eps) << "," << csv_num(p.gap) << ","
          << csv_num(p.lambda1) << "\n";
    }
    res["points"] = points;
    res["fit"] = nullptr;
    report["warnings"].push_back("order fit skipped: need at least 4 temperatures");
    std::cerr << "gap computed at " << temps.size() << " temperature(s); no order fit\n";
  }

  ordered_json diag;
  diag["stationarity_residual_max"] = jnum(stationarity_max);
  diag["conjugation_relative_difference_max"] = jnum(conjugation_max);
  diag["zero_mode_residual_max"] = jnum(zero_mode_max);
  res["diagnostics"] = diag;

  emit(report, csv.str(), args.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tunneling spectra of Schrodinger operators on finite graphs"};
  app.require_subcommand(1);

  CommonArgs wells_args;
  auto* cmd_wells = app.add_subcommand("wells", "detect wells and their separation");
  cmd_wells->add_option("file", wells_args.file, "graph JSON file")->required();
  cmd_wells->add_option("--format", wells_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonArgs spectrum_args;
  double spectrum_hbar = 0.1;
  std::string spectrum_well;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "dense spectrum of H or a Dirichlet restriction");
  cmd_spectrum->add_option("file", spectrum_args.file, "graph JSON file")->required();
  cmd_spectrum->add_option("--hbar", spectrum_hbar, "semiclassical parameter")->required();
  cmd_spectrum->add_option("--dirichlet-well", spectrum_well,
                           "restrict to functions vanishing on the other wells");
  cmd_spectrum->add_option("--format", spectrum_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonArgs mu_args;
  std::string mu_well;
  double mu_hbar = 0.1;
  int mu_max_len = -1;
  auto* cmd_mu = app.add_subcommand("mu", "well eigenvalue from the implicit path equation");
  cmd_mu->add_option("file", mu_args.file, "graph JSON file")->required();
  cmd_mu->add_option("--well", mu_well, "well label")->required();
  cmd_mu->add_option("--hbar", mu_hbar, "semiclassical parameter")->required();
  auto* opt_mu_len =
      cmd_mu->add_option("--max-path-len", mu_max_len,
                         "loop truncation length (default 2*S0+6, or 10 without separation)");
  cmd_mu->add_option("--format", mu_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonArgs inter_args;
  double inter_hbar = 0.1;
  std::string inter_mode = "leading";
  int inter_max_len = -1;
  auto* cmd_inter = app.add_subcommand("interaction", "interaction matrix vs the exact low spectrum");
  cmd_inter->add_option("file", inter_args.file, "graph JSON file")->required();
  cmd_inter->add_option("--hbar", inter_hbar, "semiclassical parameter")->required();
  cmd_inter->add_option("--mode", inter_mode, "leading or appendixA (default leading)")
      ->check(CLI::IsMember({"leading", "appendixA"}));
  auto* opt_inter_len =
      cmd_inter->add_option("--max-path-len", inter_max_len,
                            "loop truncation length (default 2*S0+6, or 10 without separation)");
  cmd_inter->add_option("--format", inter_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonArgs verify_args;
  double verify_hmax = 0.2, verify_hmin = 0.025;
  int verify_steps = 4;
  auto* cmd_verify = app.add_subcommand("verify", "fit the interaction-matrix error order over an hbar sweep");
  cmd_verify->add_option("file", verify_args.file, "graph JSON file")->required();
  auto* opt_hmax = cmd_verify->add_option("--hbar-max", verify_hmax, "largest hbar (default 0.2)");
  auto* opt_hmin = cmd_verify->add_option("--hbar-min", verify_hmin, "smallest hbar (default 0.025)");
  auto* opt_steps = cmd_verify->add_option("--steps", verify_steps,
                                           "geometric grid size, at least 4 (default 4)");
  cmd_verify->add_option("--format", verify_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  CommonArgs anneal_args;
  std::vector<double> anneal_temps;
  auto* cmd_anneal = app.add_subcommand("anneal", "spectral gap of the annealing generator over temperatures");
  cmd_anneal->add_option("file", anneal_args.file, "landscape JSON file")->required();
  auto* opt_temps = cmd_anneal
                        ->add_option("--temps", anneal_temps,
                                     "comma-separated temperatures, decreasing "
                                     "(default 0.5,1/3,0.25,0.2,1/6)")
                        ->delimiter(',');
  cmd_anneal->add_option("--format", anneal_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    init_digits();
    if (cmd_wells->parsed()) return run_wells(wells_args);
    if (cmd_spectrum->parsed()) return run_spectrum(spectrum_args, spectrum_hbar, spectrum_well);
    if (cmd_mu->parsed())
      return run_mu(mu_args, mu_well, mu_hbar,
                    opt_mu_len->count() ? std::optional<int>(mu_max_len) : std::nullopt);
    if (cmd_inter->parsed())
      return run_interaction(inter_args, inter_hbar, inter_mode,
                             opt_inter_len->count() ? std::optional<int>(inter_max_len)
                                                    : std::nullopt);
    if (cmd_verify->parsed()) {
      const bool defaulted = opt_hmax->count() == 0 && opt_hmin->count() == 0 &&
                             opt_steps->count() == 0;
      return run_verify(verify_args, verify_hmax, verify_hmin, verify_steps, defaulted);
    }
    if (cmd_anneal->parsed()) {
      const bool defaulted = opt_temps->count() == 0;
      if (defaulted)
        anneal_temps = {0.5, 1.0 / 3.0, 0.25, 0.2, 1.0 / 6.0};
      return run_anneal(anneal_args, anneal_temps, defaulted);
    }
  } catch (const gt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gt::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
