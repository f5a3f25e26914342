// Command-line front end: build the saturating functions, verify the
// quantitative bounds, profile partial sums, estimate spectra, and export
// CSV/JSON/SVG artifacts. Every run writes a manifest alongside its outputs
// so it can be replayed with --manifest.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdl/ct_saturator.hpp"
#include "fdl/divergence.hpp"
#include "fdl/dyadic.hpp"
#include "fdl/errors.hpp"
#include "fdl/fejer.hpp"
#include "fdl/fft.hpp"
#include "fdl/lp_saturator.hpp"
#include "fdl/serialize.hpp"
#include "fdl/trigpoly.hpp"

namespace {

namespace fs = std::filesystem;

struct RunState {
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  bool any_flag_false = false; // verification falsity => exit 2
};

std::string join_out(const RunState& st, const std::string& name) {
  fs::path p(name);
  if (p.is_absolute()) return name;
  return (fs::path(st.out_dir) / p).string();
}

void ensure_out_dir(const RunState& st) {
  std::error_code ec;
  fs::create_directories(st.out_dir, ec);
  if (ec && !fs::exists(st.out_dir))
    throw fdl::Error("cannot create output directory: " + st.out_dir);
}

long long parse_horizon(const std::string& text, long long degree) {
  if (text == "max") return degree;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--N", "expects an integer or 'max'");
  }
}

std::vector<double> default_centers(fdl::ProfileMode mode) {
  std::vector<double> c;
  if (mode == fdl::ProfileMode::LP)
    for (int i = 1; i <= 10; ++i) c.push_back(0.05 * i);
  else
    for (int i = 1; i <= 10; ++i) c.push_back(0.1 * i);
  return c;
}

fdl::ProfileMode parse_mode(const std::string& text) {
  if (text == "lp" || text == "LP") return fdl::ProfileMode::LP;
  if (text == "ct" || text == "CT") return fdl::ProfileMode::CT;
  throw CLI::ValidationError("--mode", "expects lp or ct");
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // Replay mode: substitute the argument vector recorded in a manifest.
  if (args.size() >= 2 && args[0] == "--manifest") {
    try {
      args = fdl::manifest_args(fdl::read_text(args[1]));
    } catch (const std::exception& e) {
      std::fprintf(stderr, "fdl: %s\n", e.what());
      return 1;
    }
  }

  RunState st;
  CLI::App app{"numerical laboratory for partial-sum divergence of Fourier "
               "series"};
  app.require_subcommand(1);
  app.add_option("--out-dir", st.out_dir,
                 "directory for outputs and the run manifest");
  app.add_option("--seed", st.seed, "seed for randomized sweeps");

  // ---- build-lp ----------------------------------------------------------
  double lp_p = 2.0;
  int lp_jmax = 10;
  std::string lp_out = "g.json";
  auto* c_build_lp = app.add_subcommand(
      "build-lp", "build the L^p saturating trigonometric polynomial");
  c_build_lp->add_option("--p", lp_p, "exponent p > 1")->required();
  c_build_lp->add_option("--jmax", lp_jmax, "last generation (3..14)")
      ->required();
  c_build_lp->add_option("--out", lp_out, "output polynomial JSON");
  c_build_lp->callback([&] {
    ensure_out_dir(st);
    fdl::TrigPoly g = fdl::build_saturating_lp(lp_p, lp_jmax);
    fdl::write_text(join_out(st, lp_out), fdl::trigpoly_to_json(g));
    std::printf("wrote %s (degree %lld)\n", join_out(st, lp_out).c_str(),
                g.degree());
  });

  // ---- build-ct ----------------------------------------------------------
  double ct_beta = 0.5, ct_delta = 0.3;
  long long ct_kmin = 16, ct_kcap = 2048;
  int ct_jmax = 3;
  bool ct_composite = false;
  std::vector<double> ct_betas, ct_deltas, ct_weights;
  std::string ct_out = "block.json";
  auto* c_build_ct = app.add_subcommand(
      "build-ct", "build a uniform-norm block (or composite sum)");
  c_build_ct->add_option("--beta", ct_beta, "arc decay exponent in (0,1)");
  c_build_ct->add_option("--delta", ct_delta, "slack exponent in (0,1/3)");
  c_build_ct->add_option("--k-min", ct_kmin,
                         "block size k (power of two); composite mode "
                         "escalates from here");
  c_build_ct->add_flag("--composite", ct_composite,
                       "build the composite saturating sum instead of one "
                       "block");
  c_build_ct->add_option("--betas", ct_betas, "composite: distinct betas")
      ->delimiter(',');
  c_build_ct->add_option("--deltas", ct_deltas, "composite: deltas")
      ->delimiter(',');
  c_build_ct->add_option("--weights", ct_weights,
                         "composite: arc weights, sum <= 1")
      ->delimiter(',');
  c_build_ct->add_option("--jmax", ct_jmax, "composite: generations (1..6)");
  c_build_ct->add_option("--k-cap", ct_kcap, "composite: largest block size");
  c_build_ct->add_option("--out", ct_out, "output JSON");
  c_build_ct->callback([&] {
    ensure_out_dir(st);
    if (ct_composite) {
      std::vector<fdl::CtPlacedBlock> placement;
      fdl::TrigPoly g = fdl::build_saturating_ct(
          ct_betas, ct_deltas, ct_weights, ct_jmax, ct_kmin, ct_kcap,
          &placement);
      fdl::write_text(join_out(st, ct_out), fdl::trigpoly_to_json(g));
      std::string csv = "j,l,k,n,beta,delta,weight\n";
      for (const fdl::CtPlacedBlock& b : placement) {
        csv += std::to_string(b.j) + "," + std::to_string(b.l) + "," +
               std::to_string(b.k) + "," + std::to_string(b.n) + "," +
               fdl::sig17(b.beta) + "," + fdl::sig17(b.delta) + "," +
               fdl::sig17(b.weight) + "\n";
      }
      fdl::write_text(join_out(st, "placement.csv"), csv);
      std::printf("wrote %s (degree %lld, %zu blocks)\n",
                  join_out(st, ct_out).c_str(), g.degree(), placement.size());
    } else {
      fdl::CtBlock b = fdl::build_P(ct_kmin, ct_beta, ct_delta);
      fdl::write_text(join_out(st, ct_out), fdl::ct_block_to_json(b));
      std::printf("wrote %s (k=%lld n=%lld eps=%s)\n",
                  join_out(st, ct_out).c_str(), b.spec.k, b.spec.n,
                  fdl::sig17(b.spec.epsilon).c_str());
    }
  });

  // ---- verify ------------------------------------------------------------
  auto* c_verify = app.add_subcommand("verify", "verify a quantitative bound");
  c_verify->require_subcommand(1);

  long long vf_n = 8;
  double vf_delta = 1.0;
  int vf_count = 1;
  std::string vf_out = "fejer.csv";
  auto* c_vf = c_verify->add_subcommand(
      "fejer", "localization bound of the triangular mean at zeros");
  c_vf->add_option("--n", vf_n, "mean order")->required();
  c_vf->add_option("--delta", vf_delta,
                   "window scale: 1 checks the tight form, 2 the coarse one")
      ->required();
  c_vf->add_option("--count", vf_count, "number of randomized inputs");
  c_vf->add_option("--out", vf_out, "output CSV");
  c_vf->callback([&] {
    if (vf_delta != 1.0 && vf_delta != 2.0)
      throw CLI::ValidationError("--delta", "must be 1 or 2");
    ensure_out_dir(st);
    const fdl::FejerForm form =
        vf_delta == 1.0 ? fdl::FejerForm::EQ1 : fdl::FejerForm::EQ2;
    const std::size_t M =
        std::max<std::size_t>(1024, 8 * fdl::next_pow2(std::size_t(vf_n)));
    std::vector<fdl::FejerBoundReport> rows;
    for (int i = 0; i < vf_count; ++i) {
      fdl::AdmissibleTheta th =
          fdl::random_admissible_theta(st.seed + std::uint64_t(i), vf_n, M);
      rows.push_back(fdl::check_fejer_localization(th.samples, vf_n, th.x,
                                                   form));
      if (!rows.back().holds) st.any_flag_false = true;
    }
    fdl::write_text(join_out(st, vf_out), fdl::fejer_reports_to_csv(rows));
    std::printf("wrote %s (%zu rows)\n", join_out(st, vf_out).c_str(),
                rows.size());
  });

  double vj_p = 2.0;
  int vj_j = 5, vj_samples = 32;
  std::string vj_out = "lp_jumps.csv";
  auto* c_vj = c_verify->add_subcommand(
      "lp-jumps", "partial-sum jump lower bounds across one generation");
  c_vj->add_option("--p", vj_p, "exponent p > 1")->required();
  c_vj->add_option("--j", vj_j, "generation j >= 3")->required();
  c_vj->add_option("--samples-per-arc", vj_samples, "points tested per arc");
  c_vj->add_option("--out", vj_out, "output CSV");
  c_vj->callback([&] {
    ensure_out_dir(st);
    fdl::TrigPoly gj = fdl::build_gj(vj_j, vj_p);
    std::vector<fdl::JumpWitnessRow> rows;
    for (int J = 1; J <= vj_j; ++J) {
      fdl::IntervalFamily fam = fdl::interval_family_IJj(J, vj_j);
      for (const fdl::Arc& a : fam.arcs) {
        for (int t = 0; t < vj_samples; ++t) {
          const double off =
              a.radius * (2.0 * (double(t) + 0.5) / double(vj_samples) - 1.0);
          fdl::JumpWitnessRow row;
          row.J = J;
          row.j = vj_j;
          row.w = fdl::witness_jump(gj, a.center + off, J, vj_j, vj_p, false);
          if (!row.w.holds) st.any_flag_false = true;
          rows.push_back(row);
        }
      }
    }
    fdl::write_text(join_out(st, vj_out), fdl::jump_witnesses_to_csv(rows));
    std::printf("wrote %s (%zu rows)\n", join_out(st, vj_out).c_str(),
                rows.size());
  });

  std::string vc_in = "block.json", vc_out = "ct_bound.csv";
  int vc_pts = 16;
  auto* c_vc = c_verify->add_subcommand(
      "ct-bound", "iterated-log lower bound over the arc family");
  c_vc->add_option("--in", vc_in, "block JSON from build-ct")->required();
  c_vc->add_option("--pts-per-arc", vc_pts, "points tested per arc");
  c_vc->add_option("--out", vc_out, "output CSV");
  c_vc->callback([&] {
    ensure_out_dir(st);
    fdl::CtBlock block = fdl::ct_block_from_json(fdl::read_text(vc_in));
    fdl::CtBoundReport rep = fdl::verify_ct_bound(block, vc_pts);
    if (!rep.flag) st.any_flag_false = true;
    fdl::write_text(join_out(st, vc_out), fdl::ct_bound_to_csv(rep));
    std::printf("wrote %s (min_ratio=%s required=%s flag=%d)\n",
                join_out(st, vc_out).c_str(), fdl::sig17(rep.min_ratio).c_str(),
                fdl::sig17(rep.required).c_str(), int(rep.flag));
  });

  // ---- profile -----------------------------------------------------------
  std::string pr_in, pr_N = "max", pr_mode = "lp", pr_out = "profile.csv";
  double pr_x = 0.0;
  long long pr_nmin = 16;
  auto* c_profile = app.add_subcommand(
      "profile", "partial-sum growth profile at one point");
  c_profile->add_option("--in", pr_in, "polynomial JSON")->required();
  c_profile->add_option("--x", pr_x, "evaluation point in [0,1)")->required();
  c_profile->add_option("--N", pr_N, "horizon (integer or 'max')");
  c_profile->add_option("--n-min", pr_nmin, "smallest order scored");
  c_profile->add_option("--mode", pr_mode, "lp or ct scoring scale");
  c_profile->add_option("--out", pr_out, "output CSV");
  c_profile->callback([&] {
    ensure_out_dir(st);
    fdl::TrigPoly f = fdl::trigpoly_from_json(fdl::read_text(pr_in));
    const long long N = parse_horizon(pr_N, f.degree());
    fdl::DivergenceProfile prof =
        fdl::divergence_profile(f, pr_x, N, parse_mode(pr_mode), pr_nmin);
    std::string csv = "n,running_max\n";
    for (std::size_t i = 0; i < prof.checkpoints.size(); ++i)
      csv += std::to_string(prof.checkpoints[i]) + "," +
             fdl::sig17(prof.running_max[i]) + "\n";
    fdl::write_text(join_out(st, pr_out), csv);
    std::printf("x=%s N=%lld beta_poly=%s beta_log=%s\n",
                fdl::sig17(prof.x).c_str(), N,
                fdl::sig17(prof.beta_poly).c_str(),
                fdl::sig17(prof.beta_log).c_str());
  });

  // ---- spectrum ----------------------------------------------------------
  std::string sp_in, sp_mode = "lp", sp_N = "max";
  std::string sp_out = "spectrum.csv", sp_json = "spectrum.json", sp_plot;
  double sp_p = 2.0, sp_hw = 0.05;
  std::size_t sp_grid = 16384;
  long long sp_nmin = 16;
  std::vector<double> sp_centers;
  auto* c_spectrum = app.add_subcommand(
      "spectrum", "empirical divergence spectrum over a sample grid");
  c_spectrum->add_option("--in", sp_in, "polynomial JSON")->required();
  c_spectrum->add_option("--mode", sp_mode, "lp or ct scoring scale");
  c_spectrum->add_option("--p", sp_p, "exponent for the lp reference");
  c_spectrum->add_option("--grid", sp_grid, "grid size (power of two)");
  c_spectrum->add_option("--N", sp_N, "horizon (integer or 'max')");
  c_spectrum->add_option("--n-min", sp_nmin, "smallest order scored");
  c_spectrum->add_option("--centers", sp_centers, "bin centers (ascending)")
      ->delimiter(',');
  c_spectrum->add_option("--half-width", sp_hw, "bin half width");
  c_spectrum->add_option("--out", sp_out, "output CSV");
  c_spectrum->add_option("--json", sp_json, "output JSON document");
  c_spectrum->add_option("--plot", sp_plot, "optional output SVG");
  c_spectrum->callback([&] {
    ensure_out_dir(st);
    const fdl::ProfileMode mode = parse_mode(sp_mode);
    fdl::TrigPoly f = fdl::trigpoly_from_json(fdl::read_text(sp_in));
    const long long N = parse_horizon(sp_N, f.degree());
    const std::vector<double> centers =
        sp_centers.empty() ? default_centers(mode) : sp_centers;
    fdl::SpectrumTable table = fdl::empirical_spectrum(
        f, mode, sp_p, sp_grid, N, centers, sp_hw, sp_nmin);
    fdl::write_text(join_out(st, sp_out), fdl::spectrum_to_csv(table));
    fdl::write_text(join_out(st, sp_json), fdl::spectrum_to_json(table));
    if (!sp_plot.empty())
      fdl::write_text(join_out(st, sp_plot), fdl::spectrum_to_svg(table));
    std::printf("wrote %s (%zu bins)\n", join_out(st, sp_out).c_str(),
                table.bins.size());
  });

  // ---- geom --------------------------------------------------------------
  std::string gm_family = "ijj", gm_out = "arcs.csv";
  int gm_J = 2, gm_j = 5;
  bool gm_primed = false;
  long long gm_k = 16;
  double gm_beta = 0.5;
  auto* c_geom = app.add_subcommand(
      "geom", "export an interval family and its measure diagnostics");
  c_geom->add_option("--family", gm_family, "ijj or ikbeta");
  c_geom->add_option("--J", gm_J, "plateau generation (ijj)");
  c_geom->add_option("--j", gm_j, "resolution generation (ijj)");
  c_geom->add_flag("--primed", gm_primed, "use the widened radius (ijj)");
  c_geom->add_option("--k", gm_k, "number of arcs (ikbeta)");
  c_geom->add_option("--beta", gm_beta, "decay exponent (ikbeta)");
  c_geom->add_option("--out", gm_out, "output CSV");
  c_geom->callback([&] {
    ensure_out_dir(st);
    fdl::IntervalFamily fam;
    if (gm_family == "ijj")
      fam = fdl::interval_family_IJj(gm_J, gm_j, gm_primed);
    else if (gm_family == "ikbeta")
      fam = fdl::ikbeta_family(gm_k, gm_beta);
    else
      throw CLI::ValidationError("--family", "expects ijj or ikbeta");
    fdl::write_text(join_out(st, gm_out), fdl::arcs_to_csv(fam));
    std::printf("wrote %s (%zu arcs, sum=%s union=%s disjoint=%d)\n",
                join_out(st, gm_out).c_str(), fam.arcs.size(),
                fdl::sig17(fdl::measure_sum(fam)).c_str(),
                fdl::sig17(fdl::union_measure(fam)).c_str(),
                int(fdl::arcs_disjoint(fam)));
  });

  // ---- plot --------------------------------------------------------------
  std::string pl_in, pl_out = "spec.svg";
  auto* c_plot = app.add_subcommand(
      "plot", "render a spectrum JSON document to SVG");
  c_plot->add_option("--in", pl_in, "spectrum JSON")->required();
  c_plot->add_option("--out", pl_out, "output SVG");
  c_plot->callback([&] {
    ensure_out_dir(st);
    fdl::SpectrumTable table = fdl::spectrum_from_json(fdl::read_text(pl_in));
    fdl::write_text(join_out(st, pl_out), fdl::spectrum_to_svg(table));
    std::printf("wrote %s\n", join_out(st, pl_out).c_str());
  });

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> orig_args = args;
  std::reverse(args.begin(), args.end()); // the parser consumes from the back
  try {
    app.parse(args); // callbacks run inside
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the offending flag
    return 1;
  } catch (const fdl::Error& e) {
    std::fprintf(stderr, "fdl: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fdl: %s\n", e.what());
    return 1;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  try {
    fdl::write_text(
        join_out(st, "manifest.json"),
        fdl::manifest_to_json(orig_args, st.seed, st.out_dir, wall_ms));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fdl: %s\n", e.what());
    return 1;
  }
  return st.any_flag_false ? 2 : 0;
}
