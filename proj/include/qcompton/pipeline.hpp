//---------------------------------------------------------------------------//
//! \file pipeline.hpp
//! Observables built on the emission core: Gaussian-broadened energy spectra,
//! band integrals and angular distributions.
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emission.hpp"
#include "minkowski.hpp"
#include "photon_statistics.hpp"

namespace qcompton
{
//---------------------------------------------------------------------------//
/*!
 * How the drive bandwidth enters the energy spectrum.
 *
 * - literal: the monochromatic spectrum is convolved in omega' with a
 *   Gaussian of standard deviation Delta omega.
 * - drive_average: the spectrum is averaged over drive frequencies
 *   nu ~ N(omega, Delta omega^2), linearized about omega at fixed field
 *   amplitude, so the width of a line of order s is |d omega'_s/d nu| Delta
 *   omega.
 */
enum class Broadening
{
    literal,
    drive_average
};

std::string_view to_string(Broadening mode);
Broadening broadening_from_string(std::string_view name);

struct Scenario
{
    ElectronState electron;
    PhaseAveragedStatistics stats;
    double bandwidth{0};  //!< Delta omega [eV]
    Broadening broadening{Broadening::literal};
    TruncationPolicy truncation;
};

struct FrequencyGrid
{
    double min{0};
    double max{0};
    int count{0};
    bool logarithmic{false};

    std::vector<double> points() const;
};

struct Band
{
    double lo{0};
    double hi{0};
};

//! Broadened coherent line; area is energy per steradian.
struct GaussianLine
{
    int order{0};
    double center{0};
    double sigma{0};
    double area{0};

    double operator()(double omega_out) const;
    double integral(Band const& band) const;
};

struct CurveMetadata
{
    std::string state;
    EmissionGeometry geometry;
    Broadening broadening{Broadening::literal};
    double bandwidth{0};  //!< [eV]
    double pulse_duration{0};  //!< T = 2 pi / bandwidth [eV^-1]
    std::string units{"eV/(eV sr)"};
    int highest_order{0};  //!< largest harmonic order summed
};

/*!
 * Energy per unit omega' per steradian sampled on a grid.
 *
 * The continuum part comes from smooth drives; coherent drives contribute
 * analytic Gaussian lines, which are kept so band integrals stay exact.
 */
struct SpectralCurve
{
    std::vector<double> omega;
    std::vector<double> continuum;
    std::vector<GaussianLine> lines;
    CurveMetadata meta;

    //! Continuum plus lines at every grid point
    std::vector<double> values() const;
};

//---------------------------------------------------------------------------//
// Pulse duration T = 2 pi / bandwidth [eV^-1].
double pulse_time(Scenario const& scenario);

// Broadened coherent lines (area includes T), ordered by emission order.
std::vector<GaussianLine>
coherent_lines(Scenario const& scenario, EmissionGeometry const& geometry);

// Broadened energy density of a smooth drive at one omega' (includes T).
double broadened_continuum(Scenario const& scenario,
                           EmissionGeometry const& geometry,
                           double omega_out);

SpectralCurve energy_spectrum(Scenario const& scenario,
                              EmissionGeometry const& geometry,
                              FrequencyGrid const& grid);

// Energy per steradian emitted into the band, integrated from the model
// directly rather than from a sampled curve.
double band_energy(Scenario const& scenario,
                   EmissionGeometry const& geometry,
                   Band const& band);

// band_energy over a polar-angle scan at fixed azimuth; optionally weighted
// by sin(theta').
std::vector<double> angular_distribution(Scenario const& scenario,
                                         std::span<double const> thetas,
                                         double phi,
                                         Band const& band,
                                         bool sin_jacobian = false);

// Integral of a sampled curve over a band (continuum interpolated, lines
// exact).
double band_integrate(SpectralCurve const& curve, Band const& band);

// Largest omega' where the curve exceeds rel_threshold times its maximum.
double spectrum_cutoff(SpectralCurve const& curve, double rel_threshold = 1e-6);

// Worker threads used for grid evaluation (QCOMPTON_THREADS overrides).
unsigned worker_threads();

//---------------------------------------------------------------------------//
}  // namespace qcompton
