//---------------------------------------------------------------------------//
//! \file minkowski.cpp
//---------------------------------------------------------------------------//
#include "qcompton/minkowski.hpp"

#include <cmath>
#include <stdexcept>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"

namespace qcompton
{
double Vec3::norm() const
{
    return std::hypot(x, y, z);
}

ComplexFourVector conj(ComplexFourVector const& a)
{
    return {std::conj(a.t), std::conj(a.x), std::conj(a.y), std::conj(a.z)};
}

double mdot(FourVector const& a, FourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

std::complex<double> mdot(ComplexFourVector const& a, FourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

std::complex<double> mdot(FourVector const& a, ComplexFourVector const& b)
{
    return mdot(b, a);
}

std::complex<double>
mdot(ComplexFourVector const& a, ComplexFourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

Vec3 EmissionGeometry::direction() const
{
    double const st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

FourVector photon_wavevector(double omega, double theta, double phi)
{
    if (!(omega > 0))
    {
        throw std::invalid_argument("photon frequency must be positive");
    }
    Vec3 const n = EmissionGeometry{theta, phi}.direction();
    return {omega, omega * n.x, omega * n.y, omega * n.z};
}

FourVector photon_wavevector(double omega, EmissionGeometry const& geometry)
{
    return photon_wavevector(omega, geometry.theta, geometry.phi);
}

FourVector drive_wavevector(double omega)
{
    if (!(omega > 0))
    {
        throw std::invalid_argument("drive frequency must be positive");
    }
    return {omega, 0, 0, omega};
}

ElectronState electron_momentum(double gamma, Vec3 const& direction)
{
    if (!(gamma >= 1))
    {
        throw std::invalid_argument("Lorentz factor must be >= 1");
    }
    if (std::abs(direction.norm() - 1) > 1e-12)
    {
        throw std::invalid_argument("electron direction must be a unit vector");
    }
    constexpr double m = constants::electron_mass;
    // (gamma - 1)(gamma + 1) keeps precision near rest
    double const momentum = std::sqrt((gamma - 1) * (gamma + 1)) * m;
    ElectronState result;
    result.p = {gamma * m,
                momentum * direction.x,
                momentum * direction.y,
                momentum * direction.z};
    result.gamma = gamma;
    result.direction = direction;
    return result;
}

FourVector scattered_momentum(FourVector const& p,
                              FourVector const& k,
                              FourVector const& k_out)
{
    double const denom = mdot(p, k) - mdot(k, k_out);
    if (!(denom > 0))
    {
        throw KinematicallyForbidden(
            "outgoing photon above the absolute kinematic ceiling");
    }
    double const absorbed = mdot(p, k_out) / denom;
    return p + absorbed * k - k_out;
}

ComplexFourVector circular_polarization()
{
    double const h = 1 / std::numbers::sqrt2;
    return {0.0, h, std::complex<double>(0, h), 0.0};
}

}  // namespace qcompton
