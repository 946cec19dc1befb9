#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qfed/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qfed::Error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw qfed::Error("cannot open output file: " + out_path);
  out << text;
}

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("QFED_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

qfed::RunConfig load_config(const std::string& path, double delta,
                            double quad_tol) {
  qfed::RunConfig cfg = qfed::parse_config(read_file(path));
  if (delta >= 0.0) cfg.numerics.delta = delta;
  if (quad_tol > 0.0) cfg.numerics.quad_tol = quad_tol;
  return cfg;
}

// The built-in cavity-with-emitter demonstration structure.
qfed::RunConfig builtin_fixture() {
  qfed::RunConfig cfg;
  auto layer = [](std::optional<double> d_um, double er, double ei, double mr,
                  double mi, double t) {
    qfed::LayerConfig lc;
    lc.thickness_um = d_um;
    lc.epsilon_re = er;
    lc.epsilon_im = ei;
    lc.mu_re = mr;
    lc.mu_im = mi;
    lc.temperature_K = t;
    return lc;
  };
  cfg.layers = {
      layer(std::nullopt, 1.0, 0.0, 1.0, 0.0, 0.0),
      layer(1.0, 10.0, 0.0, 1.0, 0.0, 0.0),
      layer(4.5, 1.0, 0.0, 1.0, 0.0, 0.0),
      layer(1.0, 1.1, 0.1, 1.0, 0.0, 300.0),
      layer(4.5, 1.0, 0.0, 1.0, 0.0, 0.0),
      layer(1.0, 10.0, 0.0, 1.0, 0.0, 0.0),
      layer(std::nullopt, 1.0, 0.0, 1.0, 0.0, 0.0),
  };
  cfg.frequency.min_ev = cfg.frequency.max_ev = 0.119;
  cfg.frequency.count = 1;
  cfg.positions.min_um = -2.0;
  cfg.positions.max_um = 14.0;
  cfg.positions.count = 161;
  cfg.quantity = qfed::Quantity::ldos;
  return cfg;
}

bool any_check_failed(const qfed::ResultTable& table) {
  for (const auto& row : table.rows) {
    for (const qfed::Cell& cell : row) {
      if (std::holds_alternative<std::string>(cell) &&
          std::get<std::string>(cell) == "fail") {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D layered-media thermal field solver"};
  app.require_subcommand(1);

  std::string config_path, format_name = "csv", out_path;
  int workers = 0;
  double delta = -1.0, quad_tol = 0.0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "config file (JSON)");
    if (needs_config) opt->required();
    sub->add_option("--format", format_name, "output format: csv|json");
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--workers", workers,
                    "worker threads (default: QFED_WORKERS or hardware)");
    sub->add_option("--delta", delta, "lead loss floor override");
    sub->add_option("--quad-tol", quad_tol, "quadrature tolerance override");
  };

  CLI::App* run = app.add_subcommand("run", "compute the configured quantity");
  add_common(run, true);
  CLI::App* verify =
      app.add_subcommand("verify", "run the identity check battery");
  add_common(verify, true);
  CLI::App* fixtures =
      app.add_subcommand("fixtures", "emit the built-in cavity config");
  fixtures->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures->parsed()) {
      write_output(qfed::serialize_config(builtin_fixture()), out_path);
      return 0;
    }

    qfed::RunConfig cfg = load_config(config_path, delta, quad_tol);
    if (verify->parsed()) cfg.quantity = qfed::Quantity::verify;

    const qfed::ResultTable table =
        qfed::run_sweep(cfg, resolve_workers(workers));
    write_output(qfed::emit(table, qfed::format_from_string(format_name)),
                 out_path);
    if (cfg.quantity == qfed::Quantity::verify && any_check_failed(table)) {
      std::cerr << "verification failed\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
