#include "qfed/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qfed {

using json = nlohmann::ordered_json;

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::ldos:
      return "ldos";
    case Quantity::nldos:
      return "nldos";
    case Quantity::ifdos:
      return "ifdos";
    case Quantity::photon_number:
      return "photon-number";
    case Quantity::fluctuations:
      return "fluctuations";
    case Quantity::poynting:
      return "poynting";
    case Quantity::net_emission:
      return "net-emission";
    case Quantity::steady_temperature:
      return "steady-temperature";
    default:
      return "verify";
  }
}

Quantity quantity_from_string(const std::string& s) {
  static const std::pair<const char*, Quantity> table[] = {
      {"ldos", Quantity::ldos},
      {"nldos", Quantity::nldos},
      {"ifdos", Quantity::ifdos},
      {"photon-number", Quantity::photon_number},
      {"fluctuations", Quantity::fluctuations},
      {"poynting", Quantity::poynting},
      {"net-emission", Quantity::net_emission},
      {"steady-temperature", Quantity::steady_temperature},
      {"verify", Quantity::verify},
  };
  for (const auto& [name, q] : table) {
    if (s == name) return q;
  }
  throw ValidationError("quantity: unknown value \"" + s + "\"");
}

namespace {

constexpr double um = 1e-6;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      fail(where.empty() ? item.key() : where + "." + item.key(),
           "unknown key");
    }
  }
}

double require_number(const json& obj, const std::string& where,
                      const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "missing");
  if (!obj[key].is_number()) fail(where + "." + key, "must be a number");
  return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& where, const char* key,
                 double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) fail(where + "." + key, "must be a number");
  return obj[key].get<double>();
}

int require_int(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "missing");
  if (!obj[key].is_number_integer()) fail(where + "." + key,
                                          "must be an integer");
  return obj[key].get<int>();
}

LayerConfig parse_layer(const json& obj, const std::string& where) {
  if (!obj.is_object()) fail(where, "must be an object");
  reject_unknown(obj, where,
                 {"thickness_um", "epsilon_re", "epsilon_im", "mu_re", "mu_im",
                  "temperature_K"});
  LayerConfig lc;
  if (obj.contains("thickness_um") && !obj["thickness_um"].is_null()) {
    if (!obj["thickness_um"].is_number())
      fail(where + ".thickness_um", "must be a number or null");
    lc.thickness_um = obj["thickness_um"].get<double>();
    if (*lc.thickness_um <= 0.0)
      fail(where + ".thickness_um", "must be positive");
  }
  lc.epsilon_re = number_or(obj, where, "epsilon_re", 1.0);
  lc.epsilon_im = number_or(obj, where, "epsilon_im", 0.0);
  lc.mu_re = number_or(obj, where, "mu_re", 1.0);
  lc.mu_im = number_or(obj, where, "mu_im", 0.0);
  lc.temperature_K = number_or(obj, where, "temperature_K", 0.0);
  if (lc.epsilon_im < 0.0) fail(where + ".epsilon_im", "must be >= 0");
  if (lc.mu_im < 0.0) fail(where + ".mu_im", "must be >= 0");
  if (lc.temperature_K < 0.0) fail(where + ".temperature_K", "must be >= 0");
  return lc;
}

FrequencyConfig parse_frequency(const json& obj) {
  const std::string where = "frequency";
  if (!obj.is_object()) fail(where, "must be an object");
  FrequencyConfig fc;
  if (obj.contains("energy_eV")) {
    reject_unknown(obj, where, {"energy_eV"});
    fc.min_ev = fc.max_ev = require_number(obj, where, "energy_eV");
    fc.count = 1;
  } else {
    reject_unknown(obj, where, {"energy_min_eV", "energy_max_eV", "count"});
    fc.min_ev = require_number(obj, where, "energy_min_eV");
    fc.max_ev = require_number(obj, where, "energy_max_eV");
    fc.count = require_int(obj, where, "count");
    if (fc.count < 2) fail(where + ".count", "sweep needs count >= 2");
    if (!(fc.max_ev > fc.min_ev))
      fail(where + ".energy_max_eV", "must exceed energy_min_eV");
  }
  if (!(fc.min_ev > 0.0)) fail(where, "photon energy must be positive");
  return fc;
}

PositionConfig parse_positions(const json& obj) {
  const std::string where = "positions";
  if (!obj.is_object()) fail(where, "must be an object");
  PositionConfig pcfg;
  if (obj.contains("list_um")) {
    reject_unknown(obj, where, {"list_um"});
    if (!obj["list_um"].is_array()) fail(where + ".list_um", "must be an array");
    pcfg.explicit_list = true;
    for (const auto& v : obj["list_um"]) {
      if (!v.is_number()) fail(where + ".list_um", "entries must be numbers");
      pcfg.list_um.push_back(v.get<double>());
    }
  } else {
    reject_unknown(obj, where, {"min_um", "max_um", "count"});
    pcfg.min_um = require_number(obj, where, "min_um");
    pcfg.max_um = require_number(obj, where, "max_um");
    pcfg.count = require_int(obj, where, "count");
    if (pcfg.count < 0) fail(where + ".count", "must be >= 0");
    if (pcfg.count > 1 && !(pcfg.max_um > pcfg.min_um))
      fail(where + ".max_um", "must exceed min_um");
  }
  return pcfg;
}

NumericsConfig parse_numerics(const json& obj) {
  const std::string where = "numerics";
  if (!obj.is_object()) fail(where, "must be an object");
  reject_unknown(obj, where, {"delta", "quad_tol", "ldos_units"});
  NumericsConfig nc;
  nc.delta = number_or(obj, where, "delta", 1e-9);
  nc.quad_tol = number_or(obj, where, "quad_tol", 1e-8);
  if (nc.delta < 0.0) fail(where + ".delta", "must be >= 0");
  if (!(nc.quad_tol > 0.0)) fail(where + ".quad_tol", "must be positive");
  if (obj.contains("ldos_units")) {
    if (!obj["ldos_units"].is_string())
      fail(where + ".ldos_units", "must be a string");
    const std::string s = obj["ldos_units"].get<std::string>();
    if (s == "reduced") {
      nc.ldos_units = LdosUnits::reduced;
    } else if (s == "si") {
      nc.ldos_units = LdosUnits::si;
    } else {
      fail(where + ".ldos_units", "must be \"reduced\" or \"si\"");
    }
  }
  return nc;
}

}  // namespace

std::vector<double> PositionConfig::grid_m() const {
  std::vector<double> out;
  if (explicit_list) {
    out.reserve(list_um.size());
    for (double v : list_um) out.push_back(v * um);
    return out;
  }
  out.reserve(static_cast<size_t>(count));
  if (count == 1) {
    out.push_back(min_um * um);
  } else {
    for (int i = 0; i < count; ++i) {
      out.push_back((min_um + (max_um - min_um) * i / (count - 1)) * um);
    }
  }
  return out;
}

Stack RunConfig::make_stack() const {
  std::vector<Layer> layers_out;
  layers_out.reserve(layers.size());
  for (size_t i = 0; i < layers.size(); ++i) {
    const LayerConfig& lc = layers[i];
    const bool lead = (i == 0 || i + 1 == layers.size());
    std::ostringstream where;
    where << "layers[" << i << "]";
    if (lead && lc.thickness_um.has_value()) {
      fail(where.str() + ".thickness_um",
           "semi-infinite lead must have null thickness");
    }
    if (!lead && !lc.thickness_um.has_value()) {
      fail(where.str() + ".thickness_um", "interior layer needs a thickness");
    }
    Layer lay;
    lay.thickness = lead ? 0.0 : *lc.thickness_um * um;
    lay.epsilon = {lc.epsilon_re, lc.epsilon_im};
    lay.mu = {lc.mu_re, lc.mu_im};
    lay.temperature = lc.temperature_K;
    layers_out.push_back(lay);
  }
  return Stack::from_layers(std::move(layers_out));
}

std::vector<double> RunConfig::energies_ev() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(frequency.count));
  if (frequency.count == 1) {
    out.push_back(frequency.min_ev);
  } else {
    for (int i = 0; i < frequency.count; ++i) {
      out.push_back(frequency.min_ev + (frequency.max_ev - frequency.min_ev) *
                                           i / (frequency.count - 1));
    }
  }
  return out;
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  if (!root.is_object()) fail("config", "top level must be an object");
  reject_unknown(root, "",
                 {"layers", "frequency", "positions", "quantity", "numerics",
                  "field_position_um", "probe_layer", "band_min_eV",
                  "band_max_eV"});

  RunConfig cfg;
  if (!root.contains("layers") || !root["layers"].is_array())
    fail("layers", "missing or not an array");
  if (root["layers"].size() < 1) fail("layers", "needs at least one layer");
  for (size_t i = 0; i < root["layers"].size(); ++i) {
    std::ostringstream where;
    where << "layers[" << i << "]";
    cfg.layers.push_back(parse_layer(root["layers"][i], where.str()));
  }

  if (!root.contains("frequency")) fail("frequency", "missing");
  cfg.frequency = parse_frequency(root["frequency"]);

  if (!root.contains("quantity") || !root["quantity"].is_string())
    fail("quantity", "missing or not a string");
  cfg.quantity = quantity_from_string(root["quantity"].get<std::string>());

  if (root.contains("positions")) {
    cfg.positions = parse_positions(root["positions"]);
  } else if (cfg.quantity != Quantity::steady_temperature &&
             cfg.quantity != Quantity::verify) {
    fail("positions", "missing");
  }

  if (root.contains("numerics")) cfg.numerics = parse_numerics(root["numerics"]);

  if (root.contains("field_position_um")) {
    if (!root["field_position_um"].is_number())
      fail("field_position_um", "must be a number");
    cfg.field_position_um = root["field_position_um"].get<double>();
  }
  if (root.contains("probe_layer")) {
    if (!root["probe_layer"].is_number_integer())
      fail("probe_layer", "must be an integer");
    cfg.probe_layer = root["probe_layer"].get<int>();
  }
  if (root.contains("band_min_eV"))
    cfg.band_min_ev = require_number(root, "config", "band_min_eV");
  if (root.contains("band_max_eV"))
    cfg.band_max_ev = require_number(root, "config", "band_max_eV");

  if (cfg.quantity == Quantity::nldos || cfg.quantity == Quantity::ifdos) {
    if (!cfg.field_position_um.has_value())
      fail("field_position_um",
           "required for the source-resolved kernels (nldos, ifdos)");
  }
  if (cfg.quantity == Quantity::steady_temperature) {
    if (!cfg.probe_layer.has_value()) fail("probe_layer", "required");
    if (!cfg.band_min_ev.has_value()) fail("band_min_eV", "required");
    if (!cfg.band_max_ev.has_value()) fail("band_max_eV", "required");
    if (!(*cfg.band_max_ev > *cfg.band_min_ev) || !(*cfg.band_min_ev > 0.0))
      fail("band_max_eV", "band must be positive and increasing");
    if (cfg.frequency.count != 1)
      fail("frequency", "steady-temperature takes a single energy entry");
  }

  // Surface structural problems (layer count, thickness signs) now rather
  // than at run time.
  cfg.make_stack();
  return cfg;
}

std::string serialize_config(const RunConfig& config) {
  json root;
  json layers = json::array();
  for (const LayerConfig& lc : config.layers) {
    json lay;
    if (lc.thickness_um.has_value()) {
      lay["thickness_um"] = *lc.thickness_um;
    } else {
      lay["thickness_um"] = nullptr;
    }
    lay["epsilon_re"] = lc.epsilon_re;
    lay["epsilon_im"] = lc.epsilon_im;
    lay["mu_re"] = lc.mu_re;
    lay["mu_im"] = lc.mu_im;
    lay["temperature_K"] = lc.temperature_K;
    layers.push_back(lay);
  }
  root["layers"] = layers;

  json freq;
  if (config.frequency.count == 1) {
    freq["energy_eV"] = config.frequency.min_ev;
  } else {
    freq["energy_min_eV"] = config.frequency.min_ev;
    freq["energy_max_eV"] = config.frequency.max_ev;
    freq["count"] = config.frequency.count;
  }
  root["frequency"] = freq;

  if (config.positions.explicit_list || config.positions.count > 0 ||
      (config.quantity != Quantity::steady_temperature &&
       config.quantity != Quantity::verify)) {
    json pos;
    if (config.positions.explicit_list) {
      pos["list_um"] = config.positions.list_um;
    } else {
      pos["min_um"] = config.positions.min_um;
      pos["max_um"] = config.positions.max_um;
      pos["count"] = config.positions.count;
    }
    root["positions"] = pos;
  }

  root["quantity"] = to_string(config.quantity);

  json num;
  num["delta"] = config.numerics.delta;
  num["quad_tol"] = config.numerics.quad_tol;
  num["ldos_units"] =
      config.numerics.ldos_units == LdosUnits::reduced ? "reduced" : "si";
  root["numerics"] = num;

  if (config.field_position_um.has_value())
    root["field_position_um"] = *config.field_position_um;
  if (config.probe_layer.has_value()) root["probe_layer"] = *config.probe_layer;
  if (config.band_min_ev.has_value()) root["band_min_eV"] = *config.band_min_ev;
  if (config.band_max_ev.has_value()) root["band_max_eV"] = *config.band_max_ev;

  return root.dump(2) + "\n";
}

}  // namespace qfed
