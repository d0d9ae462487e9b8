//---------------------------------------------------------------------------//
//! \file photon_statistics.hpp
//! Phase-averaged scaled Husimi functional R(E) of the drive.
//!
//! R(E) is the azimuthal integral of the scaled Husimi function at field
//! amplitude E [eV^2]. It is the only property of the drive's quantum state
//! that reaches the emission spectrum. Every provider satisfies
//!
//!   int_0^inf E R(E) dE = 1,   int_0^inf E^3 R(E) dE = 2 omega rho,
//!
//! so states built for the same (omega, rho) carry the same mean intensity.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qcompton
{
//---------------------------------------------------------------------------//
/*!
 * Classical amplitude: R(E) = delta(E - A) / E.
 *
 * Kept distinct from narrow smooth densities so the emission core can
 * resolve the delta analytically.
 */
struct AtomicPeak
{
    double amplitude{0};  //!< A [eV^2]
};

//---------------------------------------------------------------------------//
/*!
 * Smooth radial density exposed through log R, which stays finite far into
 * the tail where R itself underflows.
 */
class SmoothDensity
{
  public:
    using LogDensity = std::function<double(double)>;

    //! \param scale characteristic amplitude (sqrt of the second moment)
    //! \param support_max R is treated as zero beyond this amplitude
    //! \param nodes amplitudes where R is not smooth (quadrature breakpoints)
    SmoothDensity(LogDensity log_r,
                  double scale,
                  double support_max,
                  std::vector<double> nodes = {});

    //! log R(E); -inf outside the support
    double log_r(double field) const;
    double r(double field) const;

    //! log of the radial probability density E R(E)
    double log_radial(double field) const;

    double scale() const { return scale_; }
    double support_max() const { return support_max_; }
    std::span<double const> nodes() const { return nodes_; }

  private:
    LogDensity log_r_;
    double scale_;
    double support_max_;
    std::vector<double> nodes_;
};

//---------------------------------------------------------------------------//
struct PhaseAveragedStatistics
{
    std::string label;
    double omega{0};  //!< [eV]
    double photon_density{0};  //!< [eV^3]
    std::variant<AtomicPeak, SmoothDensity> shape;

    bool is_atomic() const
    {
        return std::holds_alternative<AtomicPeak>(shape);
    }
    AtomicPeak const& peak() const { return std::get<AtomicPeak>(shape); }
    SmoothDensity const& smooth() const
    {
        return std::get<SmoothDensity>(shape);
    }
};

struct Moments
{
    double normalization{0};  //!< int E R dE
    double second{0};  //!< int E^3 R dE [eV^4]
};

struct TableSample
{
    double field{0};  //!< E [eV^2]
    double value{0};  //!< R [eV^-4]
};

//---------------------------------------------------------------------------//
// Built-in states; all take the drive frequency [eV] and photon density
// [eV^3].
PhaseAveragedStatistics coherent_stats(double omega, double photon_density);
PhaseAveragedStatistics thermal_stats(double omega, double photon_density);
PhaseAveragedStatistics bsv_stats(double omega, double photon_density);
PhaseAveragedStatistics fock_limit_stats(double omega, double photon_density);
PhaseAveragedStatistics cat_limit_stats(double omega, double photon_density);
PhaseAveragedStatistics
mixed_diagonal_stats(double omega, double photon_density);

// Arbitrary tabulated state, moment-normalized to (1, 2 omega rho).
PhaseAveragedStatistics
custom_tabulated_stats(double omega,
                       double photon_density,
                       std::span<TableSample const> samples);

// Two-column text: E [eV^2], R [eV^-4]; '#' starts a comment.
std::vector<TableSample> read_table_samples(std::istream& is);
std::vector<TableSample> read_table_samples(std::string const& path);

// Normalization and second moment by adaptive quadrature.
Moments moments(PhaseAveragedStatistics const& stats);

//---------------------------------------------------------------------------//
}  // namespace qcompton
