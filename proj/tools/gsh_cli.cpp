// Command-line front end for the generalized harmonic library. Built
// entirely on the C API in gsh/gsh.h.
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsh/gsh.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Locale-independent, 17-significant-digit round-trip formatting.
std::string fmt17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct HarmonicArgs {
  int m = 0;
  std::vector<double> axis;
  std::string kind = "w";
};

void add_harmonic_options(CLI::App *cmd, HarmonicArgs &args) {
  cmd->add_option("--m", args.m, "projection quantum number (-1, 0 or +1)")
      ->required();
  cmd->add_option("--axis", args.axis,
                  "quantization axis polar angles THETA PHI (radians)")
      ->expected(2)
      ->required();
  cmd->add_option("--kind", args.kind,
                  "frame vector quantizing the initial state (w, u or v)")
      ->check(CLI::IsMember({"w", "u", "v"}));
}

// Exits with a diagnostic when the handle cannot be built (bad m or angles).
gsh_harmonic *make_harmonic_or_die(const HarmonicArgs &args) {
  const gsh_axis_kind kind = args.kind == "u"   ? GSH_KIND_U
                             : args.kind == "v" ? GSH_KIND_V
                                                : GSH_KIND_W;
  gsh_harmonic *h = nullptr;
  if (gsh_harmonic_create(args.m, args.axis[0], args.axis[1], kind, &h) !=
      GSH_OK) {
    std::cerr << "error: " << gsh_last_error_message() << "\n";
    std::exit(kExitUsage);
  }
  return h;
}

std::ofstream open_output_or_die(const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output path '" << path << "'\n";
    std::exit(kExitUsage);
  }
  return out;
}

int run_eval(const HarmonicArgs &args, const std::vector<double> &point) {
  gsh_harmonic *h = make_harmonic_or_die(args);
  double re = 0.0, im = 0.0;
  const gsh_status st =
      gsh_harmonic_evaluate(h, point[0], point[1], &re, &im);
  gsh_harmonic_destroy(h);
  if (st != GSH_OK) {
    std::cerr << "error: " << gsh_last_error_message() << "\n";
    return kExitUsage;
  }
  std::cout << "{\"re\": " << fmt17(re) << ", \"im\": " << fmt17(im)
            << ", \"abs2\": " << fmt17(re * re + im * im) << "}\n";
  return kExitPass;
}

int run_grid(const HarmonicArgs &args, int n_theta, int n_phi,
             const std::string &quantity, const std::string &format,
             const std::string &out_path) {
  gsh_harmonic *h = make_harmonic_or_die(args);

  const double pi = 3.141592653589793238462643383279502884;
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "theta,phi,value\n";

  // Cell centers in theta, left edges in phi; row-major, theta outer.
  for (int i = 0; i < n_theta; ++i) {
    const double theta = (i + 0.5) * pi / n_theta;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * 2.0 * pi / n_phi;
      double re = 0.0, im = 0.0;
      if (gsh_harmonic_evaluate(h, theta, phi, &re, &im) != GSH_OK) {
        std::cerr << "error: " << gsh_last_error_message() << "\n";
        gsh_harmonic_destroy(h);
        return kExitUsage;
      }
      const double value = quantity == "re"   ? re
                           : quantity == "im" ? im
                                              : re * re + im * im;
      if (format == "csv")
        csv += fmt17(theta) + "," + fmt17(phi) + "," + fmt17(value) + "\n";
      else
        rows.push_back({theta, phi, value});
    }
  }
  gsh_harmonic_destroy(h);

  std::string payload;
  if (format == "csv") {
    payload = std::move(csv);
  } else {
    nlohmann::json j{{"m", args.m},
                     {"axis", {args.axis[0], args.axis[1]}},
                     {"kind", args.kind},
                     {"ntheta", n_theta},
                     {"nphi", n_phi},
                     {"quantity", quantity},
                     {"rows", std::move(rows)}};
    payload = j.dump(2) + "\n";
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    auto out = open_output_or_die(out_path);
    out << payload;
    if (!out.good()) {
      std::cerr << "error: failed writing '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  return kExitPass;
}

int run_verify(std::uint64_t seed, double tol_algebra, double tol_fd,
               double tol_l2, const std::string &json_path) {
  gsh_verify_options options;
  gsh_verify_options_init(&options);
  options.seed = seed;
  if (tol_algebra > 0.0)
    options.tol_algebra = tol_algebra;
  if (tol_fd > 0.0)
    options.tol_fd = tol_fd;
  if (tol_l2 > 0.0)
    options.tol_l2 = tol_l2;

  int all_pass = 0;
  char *report_json = nullptr;
  if (gsh_verify_run(&options, &all_pass, &report_json) != GSH_OK) {
    std::cerr << "error: " << gsh_last_error_message() << "\n";
    return kExitUsage;
  }

  const nlohmann::json report = nlohmann::json::parse(report_json);
  for (const auto &suite : report.at("suites")) {
    std::cout << suite.at("status").get<std::string>() << "  "
              << suite.at("name").get<std::string>();
    if (!suite.at("max_residual").is_null())
      std::cout << "  max_residual=" << suite.at("max_residual").dump()
                << " tolerance=" << suite.at("tolerance").dump();
    std::cout << "\n";
  }

  int rc = all_pass ? kExitPass : kExitFail;
  if (!json_path.empty()) {
    auto out = open_output_or_die(json_path);
    out << report_json << "\n";
    if (!out.good()) {
      std::cerr << "error: failed writing '" << json_path << "'\n";
      rc = kExitUsage;
    }
  }
  gsh_string_free(report_json);
  return rc;
}

int run_sample(const HarmonicArgs &args, std::size_t n, std::uint64_t seed,
               const std::string &out_path) {
  gsh_harmonic *h = make_harmonic_or_die(args);
  std::vector<double> thetas(n), phis(n);
  const gsh_status st =
      gsh_harmonic_sample(h, n, seed, thetas.data(), phis.data());
  gsh_harmonic_destroy(h);
  if (st != GSH_OK) {
    std::cerr << "error: " << gsh_last_error_message() << "\n";
    return kExitUsage;
  }

  auto out = open_output_or_die(out_path);
  out << "theta,phi\n";
  for (std::size_t i = 0; i < n; ++i)
    out << fmt17(thetas[i]) << "," << fmt17(phis[i]) << "\n";
  if (!out.good()) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized l=1 spherical harmonics: evaluation, grids, "
               "identity verification and sampling"};
  app.require_subcommand(1);

  HarmonicArgs eval_args;
  std::vector<double> eval_point;
  CLI::App *eval_cmd =
      app.add_subcommand("eval", "evaluate one harmonic at one point");
  add_harmonic_options(eval_cmd, eval_args);
  eval_cmd->add_option("--point", eval_point, "angular position THETA PHI")
      ->expected(2)
      ->required();

  HarmonicArgs grid_args;
  int grid_ntheta = 0, grid_nphi = 0;
  std::string grid_quantity = "abs2", grid_format = "csv", grid_out;
  CLI::App *grid_cmd =
      app.add_subcommand("grid", "emit a value grid for plotting");
  add_harmonic_options(grid_cmd, grid_args);
  grid_cmd->add_option("--ntheta", grid_ntheta, "theta cell count")
      ->check(CLI::Range(2, 1 << 20))
      ->required();
  grid_cmd->add_option("--nphi", grid_nphi, "phi cell count")
      ->check(CLI::Range(2, 1 << 20))
      ->required();
  grid_cmd->add_option("--quantity", grid_quantity, "re, im or abs2")
      ->check(CLI::IsMember({"re", "im", "abs2"}));
  grid_cmd->add_option("--format", grid_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  grid_cmd->add_option("--out", grid_out, "output path (default stdout)");

  std::uint64_t verify_seed = 42;
  double verify_tol_algebra = 0.0, verify_tol_fd = 0.0, verify_tol_l2 = 0.0;
  std::string verify_json;
  CLI::App *verify_cmd =
      app.add_subcommand("verify", "run every identity suite");
  verify_cmd->add_option("--seed", verify_seed, "64-bit run seed");
  verify_cmd->add_option("--tol-algebra", verify_tol_algebra,
                         "tolerance for algebraic/quadrature identities");
  verify_cmd->add_option("--tol-fd", verify_tol_fd,
                         "tolerance for first-order operator residuals");
  verify_cmd->add_option("--tol-l2", verify_tol_l2,
                         "tolerance for squared-momentum residuals");
  verify_cmd->add_option("--json", verify_json, "write the JSON report here");

  HarmonicArgs sample_args;
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  CLI::App *sample_cmd =
      app.add_subcommand("sample", "draw points from a harmonic's density");
  add_harmonic_options(sample_cmd, sample_args);
  sample_cmd->add_option("--n", sample_n, "number of samples")
      ->check(CLI::PositiveNumber)
      ->required();
  sample_cmd->add_option("--seed", sample_seed, "64-bit sampler seed")
      ->required();
  sample_cmd->add_option("--out", sample_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (eval_cmd->parsed())
    return run_eval(eval_args, eval_point);
  if (grid_cmd->parsed())
    return run_grid(grid_args, grid_ntheta, grid_nphi, grid_quantity,
                    grid_format, grid_out);
  if (verify_cmd->parsed())
    return run_verify(verify_seed, verify_tol_algebra, verify_tol_fd,
                      verify_tol_l2, verify_json);
  return run_sample(sample_args, sample_n, sample_seed, sample_out);
}
