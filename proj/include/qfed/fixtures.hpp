#pragma once

#include "qfed/stack.hpp"

namespace qfed {
namespace fixtures {

// Homogeneous lossy magnetodielectric medium at 300 K.
Stack homogeneous_lossy();

// Vacuum cavity between two lossless high-index walls (wall permittivity 10,
// wall thickness 1 um, 10 um gap); power reflectance of one wall is 0.64 at
// the second cavity resonance (photon energy 0.119 eV).
Stack cavity();

enum class EmitterKind { electric, magnetic };

// Same cavity with a 1 um emitter layer centered in the gap, emitter at
// 300 K and everything else at 0 K.
Stack cavity_with_emitter(EmitterKind kind);

// Reproducible lossy stack with `interior` interior layers drawn from a
// seeded generator; leads are lossy too.
Stack random_lossy(unsigned seed, int interior = 3);

// Photon energy of the second cavity resonance [eV].
inline constexpr double kCavityEnergyEv = 0.119;

}  // namespace fixtures
}  // namespace qfed
