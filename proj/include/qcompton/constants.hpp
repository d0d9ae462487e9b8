//---------------------------------------------------------------------------//
//! \file constants.hpp
//! Physical constants in natural units (hbar = c = eps0 = 1, energies in eV).
//---------------------------------------------------------------------------//
#pragma once

#include <numbers>

namespace qcompton::constants
{
//---------------------------------------------------------------------------//
// CODATA 2018. Every conversion in the library goes through this table.
inline constexpr double pi = std::numbers::pi;

//! Electron rest energy [eV]
inline constexpr double electron_mass = 510998.95;
//! Fine-structure constant
inline constexpr double fine_structure = 1.0 / 137.035999084;
//! Squared elementary charge with eps0 = 1: e^2 = 4 pi alpha
inline constexpr double charge_squared = 4.0 * pi * fine_structure;

//! Reduced Planck constant [eV s]
inline constexpr double hbar = 6.582119569e-16;
//! Speed of light [m/s]
inline constexpr double speed_of_light = 299792458.0;
//! Joules per electronvolt
inline constexpr double joule_per_ev = 1.602176634e-19;
//! hbar * c [eV m]
inline constexpr double hbar_c = hbar * speed_of_light;

//! Thomson cross section [m^2]
inline constexpr double thomson_cross_section = 6.6524587321e-29;

//---------------------------------------------------------------------------//
}  // namespace qcompton::constants
