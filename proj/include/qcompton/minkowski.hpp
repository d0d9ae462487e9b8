//---------------------------------------------------------------------------//
//! \file minkowski.hpp
//! Four-vector algebra with metric diag(1, -1, -1, -1) and Compton kinematics.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

namespace qcompton
{
//---------------------------------------------------------------------------//
struct Vec3
{
    double x{0};
    double y{0};
    double z{0};

    double norm() const;
};

//---------------------------------------------------------------------------//
/*!
 * Real contravariant four-vector (t, x, y, z), energy components in eV.
 */
struct FourVector
{
    double t{0};
    double x{0};
    double y{0};
    double z{0};

    Vec3 spatial() const { return {x, y, z}; }

    friend FourVector operator+(FourVector const& a, FourVector const& b)
    {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend FourVector operator-(FourVector const& a, FourVector const& b)
    {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend FourVector operator*(double s, FourVector const& a)
    {
        return {s * a.t, s * a.x, s * a.y, s * a.z};
    }
    friend bool operator==(FourVector const&, FourVector const&) = default;
};

//! Complex four-vector, used for polarization.
struct ComplexFourVector
{
    std::complex<double> t;
    std::complex<double> x;
    std::complex<double> y;
    std::complex<double> z;
};

ComplexFourVector conj(ComplexFourVector const& a);

//---------------------------------------------------------------------------//
// Minkowski product a.b = a^t b^t - a.b (spatial); never conjugates.
double mdot(FourVector const& a, FourVector const& b);
std::complex<double> mdot(ComplexFourVector const& a, FourVector const& b);
std::complex<double> mdot(FourVector const& a, ComplexFourVector const& b);
std::complex<double>
mdot(ComplexFourVector const& a, ComplexFourVector const& b);

//---------------------------------------------------------------------------//
//! Emission direction: polar angle from +z in [0, pi], azimuth in [0, 2 pi).
struct EmissionGeometry
{
    double theta{0};
    double phi{0};

    Vec3 direction() const;
};

//! Initial electron: four-momentum plus the quantities it was built from.
struct ElectronState
{
    FourVector p;
    double gamma{1};
    Vec3 direction{0, 0, 1};
};

//---------------------------------------------------------------------------//
// Null wavevector omega (1, sin th cos ph, sin th sin ph, cos th).
FourVector photon_wavevector(double omega, double theta, double phi);
FourVector photon_wavevector(double omega, EmissionGeometry const& geometry);

// Drive wavevector; the drive always propagates along +z.
FourVector drive_wavevector(double omega);

// Electron with Lorentz factor gamma moving along a unit direction.
ElectronState electron_momentum(double gamma, Vec3 const& direction);

// Outgoing electron momentum from energy-momentum conservation.
FourVector scattered_momentum(FourVector const& p,
                              FourVector const& k,
                              FourVector const& k_out);

// Circular drive polarization (0, 1, i, 0) / sqrt(2).
ComplexFourVector circular_polarization();

//---------------------------------------------------------------------------//
}  // namespace qcompton
