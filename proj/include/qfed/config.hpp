#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfed/stack.hpp"

namespace qfed {

enum class Quantity {
  ldos,
  nldos,
  ifdos,
  photon_number,
  fluctuations,
  poynting,
  net_emission,
  steady_temperature,
  verify,
};

const char* to_string(Quantity q);
Quantity quantity_from_string(const std::string& s);

// reduced: densities in units of 2/(pi*c*S); si: raw s/m^2 values.
enum class LdosUnits { reduced, si };

struct LayerConfig {
  std::optional<double> thickness_um;  // absent for the semi-infinite leads
  double epsilon_re = 1.0, epsilon_im = 0.0;
  double mu_re = 1.0, mu_im = 0.0;
  double temperature_K = 0.0;
};

struct FrequencyConfig {
  double min_ev = 0.0;
  double max_ev = 0.0;
  int count = 1;  // 1 with min == max for a single energy
};

struct PositionConfig {
  bool explicit_list = false;
  std::vector<double> list_um;
  double min_um = 0.0, max_um = 0.0;
  int count = 0;

  std::vector<double> grid_m() const;
};

struct NumericsConfig {
  double delta = 1e-9;
  double quad_tol = 1e-8;
  LdosUnits ldos_units = LdosUnits::reduced;
};

struct RunConfig {
  std::vector<LayerConfig> layers;
  FrequencyConfig frequency;
  PositionConfig positions;
  Quantity quantity = Quantity::ldos;
  NumericsConfig numerics;
  // Field point for the source-resolved kernels (nldos, ifdos).
  std::optional<double> field_position_um;
  // Steady-temperature options.
  std::optional<int> probe_layer;
  std::optional<double> band_min_ev;
  std::optional<double> band_max_ev;

  Stack make_stack() const;
  std::vector<double> energies_ev() const;
};

// Parses and fully validates a JSON config. Unknown keys are rejected;
// diagnostics name the offending field.
RunConfig parse_config(const std::string& text);

// Deterministic serialization; parse(serialize(parse(t))) == parse(t).
std::string serialize_config(const RunConfig& config);

}  // namespace qfed
