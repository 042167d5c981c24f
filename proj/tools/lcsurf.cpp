#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "lcs/hull.hpp"
#include "lcs/io.hpp"
#include "lcs/uniformize.hpp"

namespace {

using namespace lcs;

int exit_code_for(errc code) {
  switch (code) {
    case errc::bad_file:
    case errc::invalid_surface:
      return 64;
    case errc::iteration_cap_exceeded:
    case errc::no_convergence:
      return 3;
    default:
      return 2;
  }
}

std::vector<double> parse_csv(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(std::stod(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

const ConeMetric& as_cone(const SurfaceVariant& m, const char* what) {
  require(std::holds_alternative<ConeMetric>(m), errc::domain_error,
          std::string(what) + " requires a cone metric input");
  return std::get<ConeMetric>(m);
}

const DecoratedMetric& as_decorated(const SurfaceVariant& m, const char* what) {
  require(std::holds_alternative<DecoratedMetric>(m), errc::domain_error,
          std::string(what) + " requires a decorated metric input");
  return std::get<DecoratedMetric>(m);
}

int run(int argc, char** argv) {
  CLI::App app{"Decorated hyperbolic surfaces, cone metrics and light-cone hulls"};
  app.require_subcommand(1);

  // convert
  auto* convert = app.add_subcommand("convert", "apply the metric maps between coordinates");
  std::string to, in_path, out_path;
  int curv = 0;
  bool bps = false, have_k = false;
  convert->add_option("--to", to, "target: cone or decorated")
      ->required()
      ->check(CLI::IsMember({"cone", "decorated"}));
  convert->add_option("-K,--curvature", curv, "curvature sign for --to cone")
      ->check(CLI::IsMember({-1, 0, 1}))
      ->each([&](const std::string&) { have_k = true; });
  convert->add_flag("--bps-convention", bps, "Euclidean lambda = l instead of l/2");
  convert->add_option("input", in_path)->required();
  convert->add_option("output", out_path)->required();
  convert->callback([&] {
    const SurfaceVariant in = read_surface(in_path);
    if (to == "cone") {
      require(have_k, errc::domain_error, "--to cone needs -K");
      write_surface(out_path,
                    decorated_to_cone(as_decorated(in, "convert --to cone"),
                                      geometry_from_int(curv)));
    } else {
      const ConeMetric& m = as_cone(in, "convert --to decorated");
      if (have_k)
        require(geometry_sign(m.K) == curv, errc::domain_error,
                "file curvature disagrees with -K");
      write_surface(out_path, cone_to_decorated(m, bps));
    }
  });

  // delaunay
  auto* delaunay = app.add_subcommand("delaunay", "flip to Delaunay and report the decomposition");
  std::string d_in, d_out, d_log;
  delaunay->add_option("input", d_in)->required();
  delaunay->add_option("output", d_out)->required();
  delaunay->add_option("--log", d_log, "write flipped edge ids, one per line");
  delaunay->callback([&] {
    SurfaceVariant m = read_surface(d_in);
    DelaunayLog log;
    int strict = 0, flat = 0;
    std::visit(
        [&](auto& metric) {
          log = make_delaunay(metric);
          for (int e = 0; e < metric.tri.n_edges(); ++e) {
            const EdgeStatus s = edge_status(metric, e);
            (s == EdgeStatus::Strict ? strict : flat) += 1;
          }
          write_surface(d_out, metric);
        },
        m);
    std::printf("flips %zu strict %d flat %d\n", log.flips.size(), strict, flat);
    if (!d_log.empty()) {
      std::ofstream f(d_log);
      for (const FlipRecord& rec : log.flips) f << rec.edge << '\n';
    }
  });

  // scale
  auto* scale = app.add_subcommand("scale", "discrete conformal vertex scaling");
  std::string s_u, s_in, s_out;
  scale->add_option("-u", s_u, "comma-separated u_1,...,u_n")->required();
  scale->add_option("input", s_in)->required();
  scale->add_option("output", s_out)->required();
  scale->callback([&] {
    const std::vector<double> u = parse_csv(s_u);
    const SurfaceVariant in = read_surface(s_in);
    if (std::holds_alternative<ConeMetric>(in))
      write_surface(s_out, vertex_scale_cone(std::get<ConeMetric>(in), u));
    else
      write_surface(s_out, vertex_scale_decorated(std::get<DecoratedMetric>(in), u));
  });

  // uniformize
  auto* unif = app.add_subcommand("uniformize", "solve for prescribed singular curvature");
  std::string u_kappa, u_in, u_out;
  int u_curv = 0, u_max_iter = 200;
  bool u_have_k = false;
  unif->add_option("--kappa", u_kappa, "comma-separated target curvatures")->required();
  unif->add_option("-K,--curvature", u_curv)->check(CLI::IsMember({-1, 0}))->each([&](const std::string&) {
    u_have_k = true;
  });
  unif->add_option("--max-iter", u_max_iter);
  unif->add_option("input", u_in)->required();
  unif->add_option("output", u_out)->required();
  unif->callback([&] {
    const ConeMetric& m = as_cone(read_surface(u_in), "uniformize");
    if (u_have_k)
      require(geometry_sign(m.K) == u_curv, errc::domain_error,
              "file curvature disagrees with -K");
    UniformizeOptions opts;
    opts.max_iter = u_max_iter;
    const UniformizeResult res = uniformize(m, parse_csv(u_kappa), opts);
    std::printf("converged in %d iterations\n", res.iterations);
    for (size_t i = 0; i < res.residual_history.size(); ++i)
      std::printf("residual[%zu] %.3e\n", i, res.residual_history[i]);
    write_surface(u_out, res.metric);
  });

  // check
  auto* check = app.add_subcommand("check", "diagnostics, exit 0 on pass / 1 on fail");
  std::string c_mode, c_a, c_b;
  check->add_option("mode", c_mode)->required()->check(
      CLI::IsMember({"gauss-bonnet", "tstar", "equivalent"}));
  check->add_option("A", c_a)->required();
  check->add_option("B", c_b);
  check->callback([&] {
    if (c_mode == "gauss-bonnet") {
      const ConeMetric& m = as_cone(read_surface(c_a), "check gauss-bonnet");
      const double res = gauss_bonnet_residual(m);
      std::printf("gauss-bonnet residual %.3e\n", res);
      if (std::abs(res) >= 1e-9) std::exit(1);
    } else if (c_mode == "tstar") {
      const TStarReport report = tstar_membership(as_decorated(read_surface(c_a), "check tstar"));
      std::printf("max rho_hat %.12g member %d\n", report.max_rho_hat, report.member ? 1 : 0);
      if (!report.member) std::exit(1);
    } else {
      require(!c_b.empty(), errc::domain_error, "check equivalent needs two files");
      const ConeMetric& a = as_cone(read_surface(c_a), "check equivalent");
      const ConeMetric& b = as_cone(read_surface(c_b), "check equivalent");
      const bool eq = discretely_conformal_test(a, b);
      std::printf("discretely conformal %d\n", eq ? 1 : 0);
      if (!eq) std::exit(1);
    }
  });

  // hull
  auto* hull = app.add_subcommand("hull", "Epstein-Penner hull mesh of the decoration orbit");
  std::string h_in, h_out, h_chart = "minkowski";
  int h_depth = 6;
  double h_cap = 4.0;
  hull->add_option("--depth", h_depth, "orbit word depth")->required();
  hull->add_option("--chart", h_chart)->check(CLI::IsMember({"minkowski", "cylinder"}));
  hull->add_option("--ray-cap", h_cap, "truncation height for lightlike rays");
  hull->add_option("input", h_in)->required();
  hull->add_option("output", h_out)->required();
  hull->callback([&] {
    const SurfaceVariant in = read_surface(h_in);
    const DecoratedMetric d = std::holds_alternative<DecoratedMetric>(in)
                                  ? std::get<DecoratedMetric>(in)
                                  : cone_to_decorated(std::get<ConeMetric>(in));
    const EpsteinPennerResult res = epstein_penner_faces(d, h_depth);
    const Chart chart = h_chart == "cylinder" ? Chart::cylinder : Chart::minkowski;
    std::ofstream f(h_out);
    require(f.good(), errc::bad_file, "cannot open for writing: " + h_out);
    f << export_mesh(res.quotient_faces, chart, h_cap);
    std::printf("orbit %d candidates %d validated %d unvalidated %d quotient faces %zu\n",
                res.orbit_size, res.candidate_faces, res.validated_faces, res.unvalidated_faces,
                res.quotient_faces.size());
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
