#include "qfed/sweep.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "qfed/fixtures.hpp"
#include "qfed/observables.hpp"

namespace qfed {

namespace {

constexpr double um = 1e-6;

double reduced_unit_factor(const NumericsConfig& num,
                           const PhysicalConstants& pc) {
  if (num.ldos_units == LdosUnits::si) return 1.0;
  // Values in units of 2/(pi*c*S).
  return 0.5 * M_PI * pc.c * pc.S;
}

const char* ldos_unit_name(const NumericsConfig& num) {
  return num.ldos_units == LdosUnits::si ? "s/m^2" : "2/(pi*c*S)";
}

const char* nldos_unit_name(const NumericsConfig& num) {
  return num.ldos_units == LdosUnits::si ? "s/m^3" : "2/(pi*c*S)/m";
}

struct SweepPlan {
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<double> energies_ev;
  std::vector<double> grid_m;  // positions or source positions
};

// Runs jobs 0..n_jobs over `workers` threads; results land at their job
// index so assembly order never depends on scheduling.
template <typename Job>
std::vector<std::vector<Cell>> run_jobs(int n_jobs, int workers,
                                        const Job& job) {
  std::vector<std::vector<Cell>> rows(static_cast<size_t>(n_jobs));
  std::vector<std::string> errors(static_cast<size_t>(n_jobs));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n_jobs) return;
      try {
        rows[static_cast<size_t>(i)] = job(i);
      } catch (const std::exception& e) {
        errors[static_cast<size_t>(i)] = e.what();
        if (errors[static_cast<size_t>(i)].empty())
          errors[static_cast<size_t>(i)] = "unknown error";
      }
    }
  };
  const int n_threads = std::max(1, std::min(workers, n_jobs));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw Error(e);
  }
  return rows;
}

}  // namespace

std::vector<CheckReport> verify_battery(const Stack& stack, double omega,
                                        double delta,
                                        const QuadratureSpec& quad,
                                        const PhysicalConstants& pc) {
  const Stack floored = with_lead_loss_floor(stack, delta);
  const FrequencySample freq_exact = make_frequency_sample(stack, omega, pc);
  const FrequencySample freq = make_frequency_sample(floored, omega, pc);

  double lo, hi;
  if (stack.num_interfaces() == 0) {
    lo = -1.0 * um;
    hi = 1.0 * um;
  } else {
    lo = stack.interfaces().front() - 1.0 * um;
    hi = stack.interfaces().back() + 1.0 * um;
  }
  const double span = hi - lo;
  const double xa = lo + 0.31 * span;
  const double xb = lo + 0.67 * span;
  const double xmid = lo + 0.5 * span;

  std::vector<std::future<CheckReport>> jobs;
  jobs.push_back(std::async(std::launch::async, [&]() {
    return check_green_identity(floored, freq, xa, xb, Family::e, quad, pc);
  }));
  jobs.push_back(std::async(std::launch::async, [&]() {
    return check_green_identity(floored, freq, xb, xa, Family::m, quad, pc);
  }));
  jobs.push_back(std::async(std::launch::async, [&]() {
    return check_reciprocity(stack, freq_exact, lo, hi, 20, 1234u, pc);
  }));
  jobs.push_back(std::async(std::launch::async, [&]() {
    return check_ifdos_zero(floored, freq, xmid, quad, pc);
  }));
  jobs.push_back(std::async(std::launch::async, [&]() {
    std::vector<double> grid;
    for (int i = 0; i < 5; ++i) grid.push_back(lo + span * (0.1 + 0.2 * i));
    return check_equilibrium(floored, freq, grid, quad, pc);
  }));
  jobs.push_back(std::async(std::launch::async, [&]() {
    return check_poynting_continuity(floored, freq, quad, pc);
  }));

  std::vector<CheckReport> reports;
  reports.reserve(jobs.size());
  for (auto& j : jobs) reports.push_back(j.get());
  return reports;
}

ResultTable run_sweep(const RunConfig& config, int workers,
                      const PhysicalConstants& pc) {
  const Stack stack = config.make_stack();
  const Stack floored = with_lead_loss_floor(stack, config.numerics.delta);
  QuadratureSpec quad;
  quad.rel_tol = config.numerics.quad_tol;

  ResultTable table;
  table.config_hash = config_hash(serialize_config(config));

  const std::vector<double> energies = config.energies_ev();
  const std::vector<double> grid = config.positions.grid_m();
  const double uf = reduced_unit_factor(config.numerics, pc);

  const Quantity q = config.quantity;

  if (q == Quantity::verify) {
    table.columns = {"energy_eV", "check", "residual",
                     "tolerance", "passed",  "context"};
    table.units = {"eV", "", "1", "1", "bool", ""};
    for (double ev : energies) {
      const double omega = omega_from_ev(ev, pc);
      for (const CheckReport& r :
           verify_battery(stack, omega, config.numerics.delta, quad, pc)) {
        std::string status = r.applicable ? (r.passed ? "pass" : "fail")
                                          : "not-run";
        table.add_row({ev, r.name, r.residual, r.tolerance, status, r.context});
      }
    }
    return table;
  }

  if (q == Quantity::steady_temperature) {
    table.columns = {"probe_layer", "temperature_K"};
    table.units = {"1", "K"};
    const double t = steady_state_temperature(
        floored, *config.probe_layer, omega_from_ev(*config.band_min_ev, pc),
        omega_from_ev(*config.band_max_ev, pc), quad, pc);
    table.add_row({static_cast<double>(*config.probe_layer), t});
    return table;
  }

  const bool kernel = (q == Quantity::nldos || q == Quantity::ifdos);
  const char* xcol = kernel ? "xp_um" : "x_um";
  switch (q) {
    case Quantity::ldos:
      table.columns = {"energy_eV", xcol, "rho_e", "rho_m", "rho_tot"};
      table.units = {"eV", "um", ldos_unit_name(config.numerics),
                     ldos_unit_name(config.numerics),
                     ldos_unit_name(config.numerics)};
      break;
    case Quantity::nldos:
      table.columns = {"energy_eV", xcol, "rho_nl_e", "rho_nl_m", "rho_nl_tot"};
      table.units = {"eV", "um", nldos_unit_name(config.numerics),
                     nldos_unit_name(config.numerics),
                     nldos_unit_name(config.numerics)};
      break;
    case Quantity::ifdos:
      table.columns = {"energy_eV", xcol, "rho_if"};
      table.units = {"eV", "um", nldos_unit_name(config.numerics)};
      break;
    case Quantity::photon_number:
      table.columns = {"energy_eV", xcol, "n_e", "n_m", "n_tot", "eta"};
      table.units = {"eV", "um", "1", "1", "1", "1"};
      break;
    case Quantity::fluctuations:
      table.columns = {"energy_eV", xcol, "e_sq", "h_sq", "u"};
      table.units = {"eV", "um", "V^2.s/(m^2.rad)", "A^2.s/(m^2.rad)",
                     "J.s/(m^3.rad)"};
      break;
    case Quantity::poynting:
      table.columns = {"energy_eV", xcol, "s"};
      table.units = {"eV", "um", "W.s/(m^2.rad)"};
      break;
    case Quantity::net_emission:
      table.columns = {"energy_eV", xcol, "q"};
      table.units = {"eV", "um", "W.s/(m^3.rad)"};
      break;
    default:
      throw ValidationError("unsupported quantity");
  }

  const int nw = static_cast<int>(energies.size());
  const int nx = static_cast<int>(grid.size());
  const int n_jobs = nw * nx;

  auto job = [&](int idx) -> std::vector<Cell> {
    const int iw = idx / std::max(nx, 1);
    const int ix = idx % std::max(nx, 1);
    const double ev = energies[static_cast<size_t>(iw)];
    const double x = grid[static_cast<size_t>(ix)];
    const double omega = omega_from_ev(ev, pc);
    try {
      switch (q) {
        case Quantity::ldos: {
          const FrequencySample freq = make_frequency_sample(stack, omega, pc);
          const LdosSample s = ldos(stack, freq, x, pc);
          return {ev, x / um, uf * s.rho_e, uf * s.rho_m, uf * s.rho_tot};
        }
        case Quantity::nldos: {
          const double xf = *config.field_position_um * um;
          const FrequencySample freq = make_frequency_sample(stack, omega, pc);
          const GreensSample g = greens_tensor(stack, freq, xf, x);
          const Layer& fld = stack.layer(stack.locate(xf));
          const Layer& src = stack.layer(stack.locate(x));
          const NldosSample nl = nldos(g, fld.epsilon, fld.mu, src.epsilon,
                                       src.mu, omega, pc);
          return {ev, x / um, uf * nl.e(), uf * nl.m(), uf * nl.tot()};
        }
        case Quantity::ifdos: {
          const double xf = *config.field_position_um * um;
          const FrequencySample freq = make_frequency_sample(stack, omega, pc);
          const GreensSample g = greens_tensor(stack, freq, xf, x);
          const Layer& src = stack.layer(stack.locate(x));
          const double n_r = freq.n[stack.locate(xf)].real();
          const IfdosSample s =
              ifdos(g, src.epsilon, src.mu, omega, n_r, pc);
          return {ev, x / um, uf * s.value};
        }
        default: {
          const FrequencySample freq =
              make_frequency_sample(floored, omega, pc);
          const SpectralPoint p = evaluate_point(floored, freq, x, quad, pc);
          switch (q) {
            case Quantity::photon_number:
              return {ev, x / um, p.n_e, p.n_m, p.n_tot, p.eta};
            case Quantity::fluctuations: {
              const double hw = pc.hbar * omega;
              return {ev, x / um, hw / pc.eps0 * p.rho_e * (p.n_e + 0.5),
                      hw / pc.mu0 * p.rho_m * (p.n_m + 0.5),
                      hw * p.rho_tot * (p.n_tot + 0.5)};
            }
            case Quantity::poynting:
              return {ev, x / um, p.s};
            default:
              return {ev, x / um, p.q};
          }
        }
      }
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << e.what() << " (at energy " << ev << " eV, position " << x / um
          << " um)";
      throw Error(msg.str());
    }
  };

  const std::vector<std::vector<Cell>> rows = run_jobs(n_jobs, workers, job);
  for (const auto& r : rows) table.add_row(r);
  return table;
}

}  // namespace qfed
