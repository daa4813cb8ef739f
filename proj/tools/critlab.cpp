// critlab - constructs rotationally symmetric critical metrics of the volume
// functional and verifies their identities, sharp estimates, and level-set
// monotonicity to quantified tolerances.
//
// Subcommands:
//   verify ball          --space euclidean --dim 3 --radius 1
//   verify schwarzschild --dim 3 --mass 1 --r1 2.2 --r2 6
//   profile {phi|F|residual|gradient_bound} <solution flags>
//   scan ball            --space hyperbolic --dim 3 --radius-range 0.25:2.0:0.25
//   scan schwarzschild   --dim 3 --mass 1 --r1 2.2 --r2-range 3:9:1
//
// Exit codes: 0 all asserted checks pass, 1 an asserted check failed,
// 2 usage or construction error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <algorithm>

#include "critlab/ball.hpp"
#include "critlab/curvature.hpp"
#include "critlab/levelset.hpp"
#include "critlab/report.hpp"
#include "critlab/residuals.hpp"
#include "critlab/schwarzschild.hpp"

namespace {

using namespace critlab;

struct SolutionFlags {
  std::string space;
  int dim = 3;
  double radius = 1.0;
  double mass = 1.0;
  double r1 = 0.0, r2 = 0.0;
  bool ads = false;
};

SpaceForm parse_space(const std::string& s) {
  if (s == "euclidean") return SpaceForm::euclidean;
  if (s == "spherical") return SpaceForm::spherical;
  if (s == "hyperbolic") return SpaceForm::hyperbolic;
  throw DomainError("unknown space form: " + s);
}

std::vector<double> parse_range(const std::string& spec) {
  // lo:hi:step inclusive of hi up to rounding
  double lo, hi, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(step > 0.0) || hi < lo)
    throw DomainError("bad range specification (expected lo:hi:step): " + spec);
  std::vector<double> out;
  for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
  if (out.empty()) throw DomainError("empty parameter range: " + spec);
  return out;
}

void emit(const std::string& payload, const std::optional<std::string>& path) {
  if (path) {
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw DomainError("cannot open output path: " + *path);
    out << payload;
  } else {
    std::cout << payload;
  }
}

RunConfig resolve_config(const std::optional<std::string>& config_flag) {
  RunConfig cfg;
  std::optional<std::string> path = config_flag;
  if (!path) {
    if (const char* env = std::getenv("CRITLAB_CONFIG")) path = std::string(env);
  }
  if (path) cfg = load_config_file(*path);
  return cfg;
}

void add_ball_flags(CLI::App* app, SolutionFlags& f) {
  app->add_option("--space", f.space, "space form: euclidean|spherical|hyperbolic")
      ->required();
  app->add_option("--dim", f.dim, "dimension n >= 3")->required();
  app->add_option("--radius", f.radius, "geodesic radius")->required();
}

void add_schwarzschild_flags(CLI::App* app, SolutionFlags& f) {
  app->add_option("--dim", f.dim, "dimension n >= 3")->required();
  app->add_option("--mass", f.mass, "mass parameter m > 0")->required();
  app->add_option("--r1", f.r1, "inner areal radius (realized by the solve)")
      ->required();
  app->add_option("--r2", f.r2, "outer areal radius (anchors the domain)")
      ->required();
  app->add_flag("--ads", f.ads, "use the AdS lapse (R = -n(n-1))");
}

int run_verify(const SolutionSpec& spec, const RunConfig& cfg) {
  const SuiteReport rep = run_suite(spec, cfg);
  emit(serialize(rep, cfg.format), cfg.output_path);
  return rep.overall_pass ? 0 : 1;
}

int run_profile(const std::string& quantity, const SolutionSpec& spec,
                std::size_t component, const RunConfig& cfg) {
  const CriticalSolution sol =
      std::holds_alternative<BallSpec>(spec)
          ? construct_ball(std::get<BallSpec>(spec), cfg.grid_size)
          : construct_schwarzschild(std::get<SchwarzschildSpec>(spec), cfg.grid_size);
  std::ostringstream out;
  if (quantity == "phi") {
    const PhiProfile phi = phi_profile(sol, cfg.f_floor_fraction);
    out << "# coordinate,phi\n";
    for (std::size_t i = 0; i < phi.grid.size(); ++i)
      out << csv_number(phi.grid[i]) << ',' << csv_number(phi.phi[i]) << '\n';
  } else if (quantity == "F") {
    const FTrace trace = f_functional(sol, component);
    out << "# t,F\n";
    for (std::size_t i = 0; i < trace.t_grid.size(); ++i)
      out << csv_number(trace.t_grid[i]) << ',' << csv_number(trace.F_values[i])
          << '\n';
  } else if (quantity == "residual") {
    out << "# coordinate,residual\n";
    const auto& metric = sol.metric();
    const auto& prof = sol.potential();
    const int n = metric.dimension();
    const double scal = metric.scalar_curvature_constant();
    for (std::size_t i = 1; i + 1 < metric.size(); ++i) {
      const auto ric = ricci_components(metric, i);
      const auto hess = hessian_laplacian(metric, prof, i);
      const double fv = prof.f[i];
      const double rad = -hess.laplacian + hess.radial - fv * ric.radial - 1.0;
      const double tan =
          -hess.laplacian + hess.tangential - fv * ric.tangential - 1.0;
      const double tra = hess.laplacian + scal * fv / (n - 1) + n / (n - 1.0);
      const double worst =
          std::max({std::abs(rad), std::abs(tan), std::abs(tra)});
      out << csv_number(prof.grid[i]) << ',' << csv_number(worst) << '\n';
    }
  } else if (quantity == "gradient_bound") {
    out << "# coordinate,grad_f_sq,bound\n";
    const auto& metric = sol.metric();
    const auto& prof = sol.potential();
    const int n = metric.dimension();
    const double scal = metric.scalar_curvature_constant();
    const double fm = sol.f_max();
    for (std::size_t i = 0; i < metric.size(); ++i) {
      const auto d = frame_derivatives(metric, prof, i);
      const double fv = prof.f[i];
      const double bound = (scal * (fm * fm - fv * fv) + 2.0 * n * (fm - fv)) /
                           (n * (n - 1.0));
      out << csv_number(prof.grid[i]) << ',' << csv_number(d.f_rho * d.f_rho)
          << ',' << csv_number(bound) << '\n';
    }
  } else {
    throw DomainError("unknown profile quantity: " + quantity);
  }
  emit(out.str(), cfg.output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical-metric construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "path to a key=value config file");
  std::optional<std::string> output_path;
  app.add_option("-o,--output", output_path, "write the report to a file");
  std::optional<std::string> format_flag;
  app.add_option("--format", format_flag, "output format: json|csv|text");
  std::optional<std::size_t> grid_flag;
  app.add_option("--grid", grid_flag, "grid size (default 2048)");
  std::optional<std::size_t> workers_flag;
  app.add_option("--workers", workers_flag, "concurrent scan workers");

  SolutionFlags vb, vs, pf, sb, ss;

  auto* verify = app.add_subcommand("verify", "run the full check suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* verify_ball = verify->add_subcommand("ball", "space-form geodesic ball");
  add_ball_flags(verify_ball, vb);
  verify_ball->fallthrough();
  auto* verify_schw =
      verify->add_subcommand("schwarzschild", "annular domain through the horizon");
  add_schwarzschild_flags(verify_schw, vs);
  verify_schw->fallthrough();

  auto* profile = app.add_subcommand("profile", "write one quantity as CSV");
  profile->fallthrough();
  std::string quantity;
  profile->add_option("quantity", quantity, "phi|F|residual|gradient_bound")
      ->required();
  std::size_t component = 0;
  profile->add_option("--component", component, "component index for F");
  profile->add_option("--space", pf.space, "ball: space form");
  profile->add_option("--dim", pf.dim, "dimension")->required();
  profile->add_option("--radius", pf.radius, "ball: geodesic radius");
  profile->add_option("--mass", pf.mass, "schwarzschild: mass");
  profile->add_option("--r1", pf.r1, "schwarzschild: inner areal radius");
  profile->add_option("--r2", pf.r2, "schwarzschild: outer areal radius");
  profile->add_flag("--ads", pf.ads, "schwarzschild: AdS lapse");

  auto* scan = app.add_subcommand("scan", "suite summary over a parameter range");
  scan->require_subcommand(1);
  scan->fallthrough();
  auto* scan_ball = scan->add_subcommand("ball", "family of geodesic balls");
  scan_ball->fallthrough();
  scan_ball->add_option("--space", sb.space)->required();
  scan_ball->add_option("--dim", sb.dim)->required();
  std::string radius_range;
  scan_ball->add_option("--radius-range", radius_range, "lo:hi:step")->required();
  auto* scan_schw = scan->add_subcommand("schwarzschild", "family of annular domains");
  scan_schw->fallthrough();
  scan_schw->add_option("--dim", ss.dim)->required();
  scan_schw->add_option("--mass", ss.mass)->required();
  scan_schw->add_option("--r1", ss.r1)->required();
  std::string r2_range, mass_range;
  scan_schw->add_option("--r2-range", r2_range, "lo:hi:step");
  scan_schw->add_option("--mass-range", mass_range, "lo:hi:step");
  scan_schw->add_flag("--ads", ss.ads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage / message
    return 2;
  }

  try {
    RunConfig cfg = resolve_config(config_path);
    if (output_path) cfg.output_path = output_path;
    if (format_flag) cfg.format = parse_format(*format_flag);
    if (grid_flag) cfg.grid_size = *grid_flag;
    if (workers_flag) cfg.workers = *workers_flag;
    cfg.validate();

    if (verify->parsed()) {
      if (verify_ball->parsed())
        return run_verify(BallSpec{parse_space(vb.space), vb.dim, vb.radius}, cfg);
      return run_verify(SchwarzschildSpec{vs.dim, vs.mass, vs.r1, vs.r2, vs.ads},
                        cfg);
    }
    if (profile->parsed()) {
      SolutionSpec spec =
          !pf.space.empty()
              ? SolutionSpec(BallSpec{parse_space(pf.space), pf.dim, pf.radius})
              : SolutionSpec(SchwarzschildSpec{pf.dim, pf.mass, pf.r1, pf.r2, pf.ads});
      return run_profile(quantity, spec, component, cfg);
    }
    if (scan->parsed()) {
      ScanReport rep;
      if (scan_ball->parsed()) {
        const SpaceForm kind = parse_space(sb.space);
        rep = run_scan(
            [&](double r) { return SolutionSpec(BallSpec{kind, sb.dim, r}); },
            parse_range(radius_range), "radius", cfg);
      } else {
        if (r2_range.empty() == mass_range.empty())
          throw DomainError("scan schwarzschild: give exactly one of --r2-range, --mass-range");
        if (!r2_range.empty())
          rep = run_scan(
              [&](double r2) {
                return SolutionSpec(SchwarzschildSpec{ss.dim, ss.mass, ss.r1, r2, ss.ads});
              },
              parse_range(r2_range), "r2", cfg);
        else
          rep = run_scan(
              [&](double m) {
                return SolutionSpec(SchwarzschildSpec{ss.dim, m, ss.r1, ss.r2, ss.ads});
              },
              parse_range(mass_range), "mass", cfg);
      }
      emit(serialize(rep, cfg.format), cfg.output_path);
      if (rep.any_construction_error) return 2;
      return rep.overall_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
