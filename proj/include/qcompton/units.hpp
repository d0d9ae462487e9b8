//---------------------------------------------------------------------------//
//! \file units.hpp
//! Laboratory <-> natural unit conversions. Natural units are eV^n with
//! hbar = c = eps0 = 1.
//---------------------------------------------------------------------------//
#pragma once

namespace qcompton
{
//---------------------------------------------------------------------------//
struct PhotonDensity
{
    double per_m3{0};  //!< [m^-3]
    double ev3{0};  //!< [eV^3]
};

struct PulseDuration
{
    double seconds{0};
    double inverse_ev{0};  //!< [eV^-1]
};

//! Drive as specified in the lab. Intensity is cycle-averaged.
struct LabDriveSpec
{
    double intensity{0};  //!< [W/cm^2]
    double photon_energy{0};  //!< [eV]
    double relative_bandwidth{0};  //!< Delta omega / omega
};

//! Drive in natural units, consumed by the emission core.
struct NaturalDrive
{
    double omega{0};  //!< [eV]
    double photon_density{0};  //!< [eV^3]
    double bandwidth{0};  //!< Delta omega [eV]

    //! Bandwidth exceeds 10% of the carrier: narrowband assumption suspect
    bool is_broadband() const { return bandwidth > 0.1 * omega; }
};

//---------------------------------------------------------------------------//
PhotonDensity
intensity_to_photon_density(double intensity_w_cm2, double photon_energy_ev);

//! Inverse of intensity_to_photon_density; density in eV^3, result in W/cm^2
double photon_density_to_intensity(double density_ev3, double photon_energy_ev);

//! Fourier-limited duration T = 2 pi / bandwidth
PulseDuration pulse_duration(double bandwidth_ev);

NaturalDrive to_natural(LabDriveSpec const& lab);

//---------------------------------------------------------------------------//
}  // namespace qcompton
