//---------------------------------------------------------------------------//
//! \file units.cpp
//---------------------------------------------------------------------------//
#include "qcompton/units.hpp"

#include <stdexcept>

#include "qcompton/constants.hpp"

namespace qcompton
{
namespace
{
constexpr double w_cm2_to_w_m2 = 1e4;
constexpr double hbar_c_cubed = constants::hbar_c * constants::hbar_c
                                * constants::hbar_c;
}  // namespace

PhotonDensity
intensity_to_photon_density(double intensity_w_cm2, double photon_energy_ev)
{
    if (!(intensity_w_cm2 >= 0))
    {
        throw std::invalid_argument("intensity must be nonnegative");
    }
    if (!(photon_energy_ev > 0))
    {
        throw std::invalid_argument("photon energy must be positive");
    }
    double const energy_joule = photon_energy_ev * constants::joule_per_ev;
    PhotonDensity result;
    result.per_m3 = intensity_w_cm2 * w_cm2_to_w_m2
                    / (constants::speed_of_light * energy_joule);
    result.ev3 = result.per_m3 * hbar_c_cubed;
    return result;
}

double photon_density_to_intensity(double density_ev3, double photon_energy_ev)
{
    if (!(density_ev3 >= 0))
    {
        throw std::invalid_argument("photon density must be nonnegative");
    }
    if (!(photon_energy_ev > 0))
    {
        throw std::invalid_argument("photon energy must be positive");
    }
    double const per_m3 = density_ev3 / hbar_c_cubed;
    return per_m3 * constants::speed_of_light * photon_energy_ev
           * constants::joule_per_ev / w_cm2_to_w_m2;
}

PulseDuration pulse_duration(double bandwidth_ev)
{
    if (!(bandwidth_ev > 0))
    {
        throw std::invalid_argument("bandwidth must be positive");
    }
    double const t = 2 * constants::pi / bandwidth_ev;
    return {t * constants::hbar, t};
}

NaturalDrive to_natural(LabDriveSpec const& lab)
{
    if (!(lab.relative_bandwidth >= 0))
    {
        throw std::invalid_argument("relative bandwidth must be nonnegative");
    }
    NaturalDrive result;
    result.omega = lab.photon_energy;
    result.photon_density
        = intensity_to_photon_density(lab.intensity, lab.photon_energy).ev3;
    result.bandwidth = lab.relative_bandwidth * lab.photon_energy;
    return result;
}

}  // namespace qcompton
