#include "qfed/fixtures.hpp"

#include <random>

namespace qfed {
namespace fixtures {

namespace {
constexpr double um = 1e-6;
}

Stack homogeneous_lossy() {
  Layer lay;
  lay.epsilon = {2.0, 0.3};
  lay.mu = {1.5, 0.2};
  lay.temperature = 300.0;
  return Stack({lay}, {});
}

Stack cavity() {
  Layer vac_lead;
  Layer wall;
  wall.thickness = 1.0 * um;
  wall.epsilon = {10.0, 0.0};
  Layer gap;
  gap.thickness = 10.0 * um;
  return Stack::from_layers({vac_lead, wall, gap, wall, vac_lead});
}

Stack cavity_with_emitter(EmitterKind kind) {
  Layer vac_lead;
  Layer wall;
  wall.thickness = 1.0 * um;
  wall.epsilon = {10.0, 0.0};
  Layer half_gap;
  half_gap.thickness = 4.5 * um;
  Layer emitter;
  emitter.thickness = 1.0 * um;
  emitter.temperature = 300.0;
  if (kind == EmitterKind::electric) {
    emitter.epsilon = {1.1, 0.1};
  } else {
    emitter.mu = {1.1, 0.1};
  }
  return Stack::from_layers(
      {vac_lead, wall, half_gap, emitter, half_gap, wall, vac_lead});
}

Stack random_lossy(unsigned seed, int interior) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto material = [&](Layer& lay) {
    lay.epsilon = {1.0 + 2.0 * u(rng), 0.05 + 0.3 * u(rng)};
    lay.mu = {1.0 + 1.0 * u(rng), 0.05 + 0.2 * u(rng)};
    lay.temperature = 200.0 + 200.0 * u(rng);
  };
  std::vector<Layer> layers(static_cast<size_t>(interior) + 2);
  for (Layer& lay : layers) material(lay);
  for (int i = 1; i <= interior; ++i) {
    layers[static_cast<size_t>(i)].thickness = (0.3 + 1.2 * u(rng)) * um;
  }
  return Stack::from_layers(std::move(layers));
}

}  // namespace fixtures
}  // namespace qfed
