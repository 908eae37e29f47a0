// Command-line front end for the scattering toolkit.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.
// Set RAMMSCATTER_LOG=info (or debug) for progress output on stderr.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rammscatter/datastore.hpp"
#include "rammscatter/dtn.hpp"
#include "rammscatter/geophysics.hpp"
#include "rammscatter/inversion.hpp"
#include "rammscatter/ls_grid.hpp"
#include "rammscatter/obstacle.hpp"
#include "rammscatter/radial.hpp"
#include "svgplot.hpp"

using namespace ramm;

namespace {

bool log_enabled() {
  const char* v = std::getenv("RAMMSCATTER_LOG");
  return v && *v;
}

void log_info(const std::string& msg) {
  if (log_enabled()) std::cerr << "[rammscatter] " << msg << "\n";
}

Vec3 parse_xi(const std::string& s) {
  std::stringstream ss(s);
  double v[3];
  char comma;
  if (!(ss >> v[0] >> comma >> v[1] >> comma >> v[2]))
    throw ValidationError("cannot parse --xi '" + s + "', expected x,y,z");
  return Vec3(v[0], v[1], v[2]);
}

ExperimentConfig config_or_default(const std::string& path) {
  if (path.empty()) return ExperimentConfig{};
  return load_config(path);
}

FarField compute_farfield(const ExperimentConfig& cfg, const std::string& method,
                          int jobs) {
  if (method == "radial") {
    if (!cfg.q.is_radial)
      throw ValidationError("radial method requires a radial potential");
    log_info("solving radial partial waves, L=" + std::to_string(cfg.L));
    return farfield_radial(cfg.q, cfg.L);
  }
  if (method == "grid") {
    log_info("grid solver, n=" + std::to_string(cfg.grid_n) +
             ", L=" + std::to_string(cfg.L));
    return far_field_from_grid(cfg.q, cfg.L, cfg.grid_n, cfg.tol, jobs);
  }
  throw ValidationError("unknown method '" + method + "' (radial|grid)");
}

int run(int argc, char** argv) {
  CLI::App app{"fixed-energy scattering: synthesis and inversion"};
  app.require_subcommand(1);

  std::string config_path, out_path, in_path, method = "radial";
  std::uint64_t seed = 1;
  int jobs = 1, L = -1, grid_n = -1;
  std::string xi_str = "1,0,0";
  double delta = 1e-3;

  app.add_option("--config", config_path, "experiment config JSON")->capture_default_str();
  app.add_option("--out", out_path, "output file");
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads")->capture_default_str();
  app.add_option("--xi", xi_str, "Fourier point x,y,z")->capture_default_str();
  app.add_option("--delta", delta, "noise level")->capture_default_str();
  app.add_option("--L", L, "harmonic degree cutoff");
  app.add_option("--grid-n", grid_n, "voxel grid size per axis");

  auto* c_sim = app.add_subcommand("simulate", "compute a far-field matrix");
  c_sim->add_option("--method", method, "radial|grid")->capture_default_str();
  auto* c_ps = app.add_subcommand("phase-shifts", "radial phase shift table");
  auto* c_ie = app.add_subcommand("invert-exact", "recover q~(xi) from exact data");
  c_ie->add_option("--in", in_path, "far-field JSON (else computed from config)");
  int rungs = 6;
  c_ie->add_option("--rungs", rungs, "growth ladder length")->capture_default_str();
  auto* c_in = app.add_subcommand("invert-noisy", "recover q~(xi) from noisy data");
  c_in->add_option("--in", in_path, "far-field JSON (else computed from config)");
  auto* c_sw = app.add_subcommand("stability-sweep", "error vs noise level table");
  auto* c_ob = app.add_subcommand("obstacle-limit", "penetrable potential -> hard sphere");
  double R = 1.0, s_param = 1.0, a_sphere = 0.0;
  c_ob->add_option("--R", R, "sphere radius")->capture_default_str();
  auto* c_sh = app.add_subcommand("reconstruct-shape", "indicator transform of a sphere");
  c_sh->add_option("--R", R, "sphere radius")->capture_default_str();
  c_sh->add_option("--s", s_param, "variety parameter")->capture_default_str();
  auto* c_dtn = app.add_subcommand("dtn", "Dirichlet-to-Neumann map two ways");
  c_dtn->add_option("--a-sphere", a_sphere, "DtN sphere radius (0 = 1.3 a)");
  auto* c_nu = app.add_subcommand("nonuniqueness", "surface-data nonuniqueness demo");
  auto* c_lf = app.add_subcommand("lift", "lift plane data to a higher plane");
  double z_src = -2.0, z_tgt = 1.0, disk_R = 30.0;
  c_lf->add_option("--z-source", z_src, "point source height (<0)")->capture_default_str();
  c_lf->add_option("--z-target", z_tgt, "target height (>0)")->capture_default_str();
  c_lf->add_option("--disk-R", disk_R, "truncation disk radius")->capture_default_str();
  auto* c_pl = app.add_subcommand("plot", "CSV columns -> SVG polyline plot");
  std::string xcol, ycols, title = "plot";
  bool logx = false, logy = false;
  c_pl->add_option("--in", in_path, "CSV table")->required();
  c_pl->add_option("--x", xcol, "x column name")->required();
  c_pl->add_option("--y", ycols, "comma-separated y column names")->required();
  c_pl->add_option("--title", title, "plot title")->capture_default_str();
  c_pl->add_flag("--logx", logx, "log10 x axis");
  c_pl->add_flag("--logy", logy, "log10 y axis");

  // let the global options appear after the subcommand name as well
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();
  CLI11_PARSE(app, argc, argv);

  ExperimentConfig cfg = config_or_default(config_path);
  if (L >= 0) cfg.L = L;
  if (grid_n > 0) cfg.grid_n = grid_n;
  cfg.seed = seed;
  AnnulusSpec spec;
  spec.a1 = cfg.a1;
  spec.b = cfg.b;
  spec.n_r = cfg.n_r;
  Vec3 xi = parse_xi(xi_str);

  auto get_ff = [&]() {
    if (!in_path.empty()) {
      log_info("loading far field from " + in_path);
      return load_farfield(in_path);
    }
    return compute_farfield(cfg, method, jobs);
  };

  if (c_sim->parsed()) {
    FarField ff = compute_farfield(cfg, method, jobs);
    std::cout << "L=" << ff.L << " a=" << ff.a
              << " unitarity=" << unitarity_residual(ff)
              << " reciprocity=" << reciprocity_residual(ff) << "\n";
    if (!out_path.empty()) save_farfield(ff, out_path);
    return 0;
  }

  if (c_ps->parsed()) {
    PhaseShifts ps = solve_radial(cfg.q, cfg.L);
    std::vector<std::vector<double>> rows;
    for (size_t ell = 0; ell < ps.delta.size(); ++ell)
      rows.push_back({static_cast<double>(ell), ps.delta[ell],
                      ps.A_ell[ell].real(), ps.A_ell[ell].imag()});
    for (const auto& r : rows)
      std::cout << "l=" << r[0] << " delta=" << r[1] << "\n";
    if (!out_path.empty())
      emit_table(out_path, {"ell", "delta", "re_A", "im_A"}, rows);
    return 0;
  }

  if (c_ie->parsed()) {
    FarField ff = get_ff();
    std::vector<double> norms = growth_schedule(xi, rungs);
    std::vector<DirectionPair> ladder;
    for (double n : norms) ladder.push_back(pair_for_norm(xi, n));
    std::optional<cd> truth;
    if (cfg.q.is_radial) truth = radial_fourier(cfg.q, xi.norm());
    auto reports = reconstruct_exact(ff, xi, ladder, spec, cfg.reg, truth);
    std::vector<std::vector<double>> rows;
    for (const auto& r : reports) {
      double err = r.error_vs_truth ? std::abs(*r.error_vs_truth) : -1.0;
      std::cout << "|theta|=" << r.theta_norm << " q_hat=(" << r.q_hat.real()
                << "," << r.q_hat.imag() << ") rho=" << r.rho_norm
                << (err >= 0 ? " err=" + std::to_string(err) : "") << "\n";
      rows.push_back({r.theta_norm, r.q_hat.real(), r.q_hat.imag(), r.rho_norm,
                      r.nu_norm, err});
    }
    if (!out_path.empty())
      emit_table(out_path, {"theta_norm", "re_q_hat", "im_q_hat", "rho", "nu_norm", "err"}, rows);
    return 0;
  }

  if (c_in->parsed()) {
    FarField ff = get_ff();
    NoisyData nd = inject_noise(ff, delta, seed);
    ReconstructionReport r = reconstruct_noisy(nd, xi, spec, 0.0, cfg.c_budget);
    std::cout << "delta=" << delta << " N=" << r.truncation
              << " |theta|=" << r.theta_norm << " q_hat=(" << r.q_hat.real()
              << "," << r.q_hat.imag() << ")"
              << (r.budget_violated ? " [budget violated]" : "") << "\n";
    if (cfg.q.is_radial) {
      cd truth = radial_fourier(cfg.q, xi.norm());
      std::cout << "truth=(" << truth.real() << "," << truth.imag()
                << ") err=" << std::abs(r.q_hat - truth) << "\n";
    }
    return 0;
  }

  if (c_sw->parsed()) {
    if (cfg.deltas.empty()) cfg.deltas = {1e-2, 1e-3, 1e-4, 1e-6, 1e-8};
    if (cfg.xis.empty()) cfg.xis = {Vec3(1, 0, 0), Vec3(0, 1.5, 0)};
    auto rows_s = stability_sweep(cfg.q, cfg.L, cfg.deltas, cfg.xis, spec,
                                  cfg.seed, 0.0, cfg.c_budget);
    std::vector<std::vector<double>> rows;
    for (const auto& r : rows_s) {
      std::cout << "delta=" << r.delta << " N=" << r.N << " sup_err=" << r.sup_err
                << " field_err=" << r.field_err << "\n";
      rows.push_back({r.delta, static_cast<double>(r.N), r.sup_err, r.theta_sel,
                      r.field_err, r.env_recon, r.env_field});
    }
    if (!out_path.empty())
      emit_table(out_path,
                 {"delta", "N", "sup_err", "theta_sel", "field_err", "env_recon", "env_field"},
                 rows);
    return 0;
  }

  if (c_ob->parsed()) {
    std::vector<double> ts;
    for (double t = 10.0; t <= 1.001e4; t *= 10.0) ts.push_back(t);
    int Lo = (cfg.L > 0) ? cfg.L : 10;
    auto rows_o = penetrable_limit(R, ts, Lo);
    std::vector<std::vector<double>> rows;
    for (const auto& r : rows_o) {
      std::cout << "t=" << r.t << " interior_norm=" << r.interior_norm
                << " amp_dist=" << r.amp_dist << "\n";
      rows.push_back({r.t, r.interior_norm, r.amp_dist});
    }
    if (!out_path.empty())
      emit_table(out_path, {"t", "interior_norm", "amp_dist"}, rows);
    return 0;
  }

  if (c_sh->parsed()) {
    int Lo = (cfg.L > 0) ? std::max(cfg.L, 16) : 16;
    FarField ff = dirichlet_sphere_farfield(R, Lo);
    cd rec = reconstruct_indicator(ff, R, xi, s_param);
    cd truth = ball_indicator_ft(R, xi.norm());
    std::cout << "xi=(" << xi.transpose() << ") chi_hat=(" << rec.real() << ","
              << rec.imag() << ") truth=" << truth.real()
              << " err=" << std::abs(rec - truth) << "\n";
    if (!out_path.empty())
      emit_table(out_path, {"xi_norm", "re_chi", "im_chi", "truth", "err"},
                 {{xi.norm(), rec.real(), rec.imag(), truth.real(), std::abs(rec - truth)}});
    return 0;
  }

  if (c_dtn->parsed()) {
    double asph = (a_sphere > 0.0) ? a_sphere : 1.3 * cfg.q.a;
    int Ld = std::min(cfg.L, 8);
    FarField ff = compute_farfield(cfg, method, jobs);
    DtnResult from_amp = dtn_from_amplitude(ff, asph, Ld);
    DtnResult direct = dtn_direct(cfg.q, asph, Ld);
    double diff = (from_amp.Lambda - direct.Lambda).cwiseAbs().maxCoeff();
    std::cout << "a_sphere=" << asph << " L=" << Ld
              << " max|Lambda_amp - Lambda_direct|=" << diff
              << " cond=" << from_amp.condition << "\n";
    if (!out_path.empty()) {
      std::vector<std::vector<double>> rows;
      for (int ell = 0; ell <= Ld; ++ell) {
        int u = flat_index({ell, 0});
        rows.push_back({static_cast<double>(ell), from_amp.Lambda(u, u).real(),
                        from_amp.Lambda(u, u).imag(), direct.Lambda(u, u).real(),
                        direct.Lambda(u, u).imag()});
      }
      emit_table(out_path, {"ell", "re_amp", "im_amp", "re_direct", "im_direct"}, rows);
    }
    return 0;
  }

  if (c_nu->parsed()) {
    NonuniqueSpec ns;
    double matched = nonuniqueness_residual(ns);
    NonuniqueSpec pert = ns;
    pert.c2 = 2.01;
    double perturbed = nonuniqueness_residual(pert);
    NonuniqueSpec flip = ns;
    flip.flip_sign = true;
    double flipped = nonuniqueness_residual(flip);
    std::cout << "matched residual=" << matched << "\n"
              << "c2=2.01 residual=" << perturbed << "\n"
              << "sign-flip residual=" << flipped << "\n";
    if (!out_path.empty())
      emit_table(out_path, {"case", "residual"},
                 {{0.0, matched}, {1.0, perturbed}, {2.0, flipped}});
    return 0;
  }

  if (c_lf->parsed()) {
    if (z_src >= 0.0) throw ValidationError("--z-source must be negative");
    Vec3 src(0.0, 0.0, z_src);
    auto trace = [&](double x1, double x2) {
      double r = (Vec3(x1, x2, 0.0) - src).norm();
      return std::exp(iu * r) / (4.0 * pi * r);
    };
    Vec3 tgt(0.0, 0.0, z_tgt);
    LiftedValue lv = lift_halfspace(trace, disk_R, tgt);
    double rd = (tgt - src).norm();
    cd direct = std::exp(iu * rd) / (4.0 * pi * rd);
    std::cout << "lifted=(" << lv.value.real() << "," << lv.value.imag()
              << ") direct=(" << direct.real() << "," << direct.imag()
              << ") rel_err=" << std::abs(lv.value - direct) / std::abs(direct)
              << (lv.edge_flagged ? " [edge flagged]" : "") << "\n";
    return 0;
  }

  if (c_pl->parsed()) {
    if (out_path.empty()) throw ValidationError("plot requires --out");
    Table t = load_table(in_path);
    auto col = [&](const std::string& name) {
      for (size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == name) return i;
      throw ValidationError("no column '" + name + "' in " + in_path);
    };
    size_t xi_col = col(xcol);
    std::vector<PlotSeries> series;
    std::stringstream ys(ycols);
    std::string yname;
    while (std::getline(ys, yname, ',')) {
      size_t yc = col(yname);
      PlotSeries s;
      s.label = yname;
      for (const auto& row : t.rows) {
        s.x.push_back(row[xi_col]);
        s.y.push_back(row[yc]);
      }
      series.push_back(std::move(s));
    }
    PlotSpec ps;
    ps.title = title;
    ps.xlabel = xcol;
    ps.ylabel = ycols;
    ps.logx = logx;
    ps.logy = logy;
    write_svg_plot(out_path, ps, series);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
