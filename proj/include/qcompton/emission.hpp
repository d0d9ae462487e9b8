//---------------------------------------------------------------------------//
//! \file emission.hpp
//! Per-harmonic quantities and the emitted power spectral density of
//! nonlinear Compton scattering for a circularly polarized drive along +z.
//!
//! The spectral density (power per unit omega' per steradian, natural units)
//! is
//!
//!   dP/dw'dO = (w^2 w'^2 / 4 pi^2) (k.p / e^2 k.k') p'^t
//!              sum_s theta(s(p.k - k.k') - p.k') <|T_s|^2> R(E_s),
//!
//! where R is the phase-averaged Husimi functional of the drive (see
//! photon_statistics.hpp) evaluated at the effective field amplitude
//!
//!   E_s^2 = (4 w^2 k.p / e^2 k.k') (s(p.k - k.k') - p.k').
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "minkowski.hpp"
#include "photon_statistics.hpp"

namespace qcompton
{
//---------------------------------------------------------------------------//
/*!
 * Fixed (p, k, k') with the outgoing electron and the scalar products the
 * harmonic formulas reuse.
 */
struct ScatteringKinematics
{
    ScatteringKinematics(FourVector const& p,
                         FourVector const& k,
                         FourVector const& k_out);

    FourVector p;
    FourVector k;
    FourVector k_out;
    FourVector p_out;
    double k_p{0};
    double k_kout{0};
    double p_kout{0};
    double k_pout{0};  //!< k.p - k.k' by construction
};

struct HarmonicCoefficients
{
    double zeta{0};
    double xi{0};
};

//! Everything known about emission order s at one (p, k, k').
struct HarmonicTerm
{
    int order{0};
    double field{0};  //!< E_s [eV^2]
    double zeta{0};
    double xi{0};
    double t_squared{0};  //!< <|T_s|^2>
    bool allowed{false};
};

struct Peak
{
    int order{0};
    double frequency{0};  //!< omega'_s [eV]
    double weight{0};  //!< power per steradian integrated across the line
};

using PeakList = std::vector<Peak>;

//! Stopping rule for the harmonic sum of smooth drives.
struct TruncationPolicy
{
    double rel_tol{1e-10};
    int patience{5};
    int max_terms{100000};
};

//! Smooth-drive spectral density with truncation diagnostics.
struct SpectralDensity
{
    double value{0};
    double log_value{0};  //!< log(value); -inf when nothing is allowed
    int first_order{0};
    int last_order{0};
    int terms{0};
};

//---------------------------------------------------------------------------//
// E_s^2, negative or zero when order s is kinematically closed.
double effective_field_squared(int s, ScatteringKinematics const& kin);

// E_s, or nullopt when the theta-function argument is <= 0.
std::optional<double> effective_field(int s,
                                      FourVector const& p,
                                      FourVector const& k,
                                      FourVector const& k_out);

// Largest omega' with order s open along the given direction.
double kinematic_max_frequency(int s,
                               FourVector const& p,
                               FourVector const& k,
                               EmissionGeometry const& geometry);

// Absolute ceiling p.k = k.k' (limit of the above as s -> inf); +inf for
// exactly forward emission.
double kinematic_ceiling(FourVector const& p,
                         FourVector const& k,
                         EmissionGeometry const& geometry);

HarmonicCoefficients
harmonic_coefficients(int s, ScatteringKinematics const& kin, double field);

// <|T_s|^2> (dimensionless).
double t_squared(int s, ScatteringKinematics const& kin, double field);

// Prefactor times <|T_s|^2>, fused so that p'^t cancels identically.
double harmonic_power(int s, ScatteringKinematics const& kin, double field);

HarmonicTerm harmonic_term(int s, ScatteringKinematics const& kin);

//---------------------------------------------------------------------------//
// Pointwise density for a smooth drive; zero above the absolute ceiling.
SpectralDensity smooth_spectral_density(PhaseAveragedStatistics const& stats,
                                        FourVector const& p,
                                        EmissionGeometry const& geometry,
                                        double omega_out,
                                        TruncationPolicy const& policy = {});

// Discrete line of order s for a classical amplitude [eV^2].
std::optional<Peak> coherent_peak(int s,
                                  double amplitude,
                                  double omega,
                                  FourVector const& p,
                                  EmissionGeometry const& geometry);

// Lines s_first..s_last for an atomic drive.
PeakList coherent_peaks(PhaseAveragedStatistics const& stats,
                        FourVector const& p,
                        EmissionGeometry const& geometry,
                        int s_first,
                        int s_last);

//---------------------------------------------------------------------------//
}  // namespace qcompton
