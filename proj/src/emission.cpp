//---------------------------------------------------------------------------//
//! \file emission.cpp
//---------------------------------------------------------------------------//
#include "qcompton/emission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"
#include "qcompton/special_functions.hpp"

namespace qcompton
{
namespace
{
constexpr double e2 = constants::charge_squared;
constexpr double m = constants::electron_mass;
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Below this xi the Bessel bracket uses leading-order small-argument forms.
constexpr double small_xi = 1e-8;

// Null direction (1, n) of the outgoing photon.
FourVector null_direction(EmissionGeometry const& geometry)
{
    Vec3 const n = geometry.direction();
    return {1, n.x, n.y, n.z};
}

double leading_bessel(int n, double x)
{
    double v = 1;
    for (int k = 1; k <= n; ++k)
    {
        v *= x / (2.0 * k);
        if (v == 0)
            break;
    }
    return v;
}

double log_add(double a, double b)
{
    if (a == neg_inf)
        return b;
    if (b == neg_inf)
        return a;
    double const hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

//---------------------------------------------------------------------------//
ScatteringKinematics::ScatteringKinematics(FourVector const& p_in,
                                           FourVector const& k_in,
                                           FourVector const& k_out_in)
    : p(p_in)
    , k(k_in)
    , k_out(k_out_in)
    , p_out(scattered_momentum(p_in, k_in, k_out_in))
    , k_p(mdot(k_in, p_in))
    , k_kout(mdot(k_in, k_out_in))
    , p_kout(mdot(p_in, k_out_in))
    , k_pout(k_p - k_kout)
{
}

//---------------------------------------------------------------------------//
double effective_field_squared(int s, ScatteringKinematics const& kin)
{
    double const w = kin.k.t;
    return 4 * w * w * kin.k_p / (e2 * kin.k_kout)
           * (s * (kin.k_p - kin.k_kout) - kin.p_kout);
}

std::optional<double> effective_field(int s,
                                      FourVector const& p,
                                      FourVector const& k,
                                      FourVector const& k_out)
{
    if (!(k_out.t > 0))
        throw std::invalid_argument("emitted frequency must be positive");
    if (mdot(p, k) - mdot(k, k_out) <= 0)
        return std::nullopt;
    ScatteringKinematics const kin(p, k, k_out);
    double const sq = effective_field_squared(s, kin);
    if (!(sq > 0) || !std::isfinite(sq))
        return std::nullopt;
    return std::sqrt(sq);
}

double kinematic_max_frequency(int s,
                               FourVector const& p,
                               FourVector const& k,
                               EmissionGeometry const& geometry)
{
    if (s < 1)
        throw std::invalid_argument("emission order must be >= 1");
    FourVector const n = null_direction(geometry);
    // k.k' = kappa w', p.k' = pi w'
    double const kappa = mdot(k, n);
    double const pi_n = mdot(p, n);
    return s * mdot(p, k) / (s * kappa + pi_n);
}

double kinematic_ceiling(FourVector const& p,
                         FourVector const& k,
                         EmissionGeometry const& geometry)
{
    double const kappa = mdot(k, null_direction(geometry));
    if (!(kappa > 0))
        return std::numeric_limits<double>::infinity();
    return mdot(p, k) / kappa;
}

//---------------------------------------------------------------------------//
HarmonicCoefficients
harmonic_coefficients(int, ScatteringKinematics const& kin, double field)
{
    double const w = kin.k.t;
    // 1/k.p' - 1/k.p = k.k' / (k.p k.p')
    double const zeta = e2 * field * field / (4 * w * w) * kin.k_kout
                        / (kin.k_p * kin.k_pout);

    ComplexFourVector const eps = circular_polarization();
    auto const diff = mdot(kin.p, eps) / kin.k_p
                      - mdot(kin.p_out, eps) / kin.k_pout;
    double const xi = std::sqrt(e2) * field / w * std::abs(diff);
    return {zeta, xi};
}

namespace
{
// The square bracket of <|T_s|^2>, i.e. without e^2 m^2 / (p^t p'^t).
double t_squared_bracket(int s, ScatteringKinematics const& kin, double field)
{
    double const w = kin.k.t;
    auto const [zeta, xi] = harmonic_coefficients(s, kin, field);
    (void)zeta;

    // zeta * ((p'.k)^2 + (p.k)^2) / (2 m^2 k.k'), with k.k' cancelled
    double const zeta_x = e2 * field * field / (4 * w * w)
                          * (kin.k_pout * kin.k_pout + kin.k_p * kin.k_p)
                          / (2 * m * m * kin.k_p * kin.k_pout);

    double jm, j0, jp;
    if (xi < small_xi)
    {
        jm = leading_bessel(s - 1, xi);
        j0 = leading_bessel(s, xi);
        jp = leading_bessel(s + 1, xi);
    }
    else
    {
        auto const t = bessel_j_triplet(s, xi);
        jm = t.below;
        j0 = t.center;
        jp = t.above;
    }
    return zeta_x * (jm * jm + jp * jp - 2 * j0 * j0) - j0 * j0;
}
}  // namespace

double t_squared(int s, ScatteringKinematics const& kin, double field)
{
    return e2 * m * m / (kin.p.t * kin.p_out.t)
           * t_squared_bracket(s, kin, field);
}

double harmonic_power(int s, ScatteringKinematics const& kin, double field)
{
    double const w = kin.k.t;
    double const wo = kin.k_out.t;
    return w * w * wo * wo * kin.k_p * m * m
           / (4 * constants::pi * constants::pi * kin.k_kout * kin.p.t)
           * t_squared_bracket(s, kin, field);
}

HarmonicTerm harmonic_term(int s, ScatteringKinematics const& kin)
{
    HarmonicTerm term;
    term.order = s;
    double const sq = effective_field_squared(s, kin);
    term.allowed = sq > 0;
    if (!term.allowed)
        return term;
    term.field = std::sqrt(sq);
    auto const c = harmonic_coefficients(s, kin, term.field);
    term.zeta = c.zeta;
    term.xi = c.xi;
    term.t_squared = t_squared(s, kin, term.field);
    return term;
}

//---------------------------------------------------------------------------//
SpectralDensity smooth_spectral_density(PhaseAveragedStatistics const& stats,
                                        FourVector const& p,
                                        EmissionGeometry const& geometry,
                                        double omega_out,
                                        TruncationPolicy const& policy)
{
    if (stats.is_atomic())
    {
        throw std::invalid_argument(
            "smooth_spectral_density needs a smooth photon distribution");
    }
    auto const& density = stats.smooth();
    FourVector const k = drive_wavevector(stats.omega);
    FourVector const k_out = photon_wavevector(omega_out, geometry);

    SpectralDensity result;
    result.log_value = neg_inf;
    double const gap = mdot(p, k) - mdot(k, k_out);
    if (!(gap > 0))
        return result;
    ScatteringKinematics const kin(p, k, k_out);
    if (!(kin.k_kout > 0))
        return result;

    double const threshold = kin.p_kout / gap;
    if (threshold > 1e9)
    {
        throw TruncationNotConverged(
            "lowest open harmonic beyond representable range", 0);
    }
    int s = std::max(1, static_cast<int>(std::floor(threshold)) + 1);
    while (effective_field_squared(s, kin) <= 0)
        ++s;
    result.first_order = s;

    double const log_tol = std::log(policy.rel_tol);
    std::vector<double> log_terms;
    double running = neg_inf;
    int quiet = 0;
    bool converged = false;
    for (; result.terms < policy.max_terms; ++s)
    {
        double const field = std::sqrt(effective_field_squared(s, kin));
        if (field > density.support_max())
        {
            converged = true;
            break;
        }
        double const power = harmonic_power(s, kin, field);
        double const lt = power > 0 ? std::log(power) + density.log_r(field)
                                    : neg_inf;
        log_terms.push_back(lt);
        ++result.terms;
        result.last_order = s;

        running = log_add(running, lt);
        if (running != neg_inf && lt < running + log_tol)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= policy.patience)
        {
            converged = true;
            break;
        }
    }
    if (!converged)
    {
        throw TruncationNotConverged(
            "harmonic sum reached " + std::to_string(policy.max_terms)
                + " terms before the relative tolerance",
            result.last_order);
    }

    // Descending-magnitude accumulation with a max shift
    std::sort(log_terms.begin(), log_terms.end(), std::greater<>{});
    if (log_terms.empty() || log_terms.front() == neg_inf)
        return result;
    double const top = log_terms.front();
    double sum = 0;
    for (double lt : log_terms)
        sum += std::exp(lt - top);
    result.log_value = top + std::log(sum);
    result.value = std::exp(result.log_value);
    return result;
}

//---------------------------------------------------------------------------//
std::optional<Peak> coherent_peak(int s,
                                  double amplitude,
                                  double omega,
                                  FourVector const& p,
                                  EmissionGeometry const& geometry)
{
    if (s < 1)
        throw std::invalid_argument("emission order must be >= 1");
    if (!(amplitude > 0))
        return std::nullopt;
    FourVector const k = drive_wavevector(omega);
    FourVector const n = null_direction(geometry);
    double const k_p = mdot(k, p);
    double const kappa = mdot(k, n);
    double const pi_n = mdot(p, n);
    if (!(kappa > 0))
        return std::nullopt;

    // E_s^2(w') = C (s k.p / w' - (s kappa + pi)), C = 4 w^2 k.p / (e^2 kappa)
    double const c = 4 * omega * omega * k_p / (e2 * kappa);
    double const a2 = amplitude * amplitude;
    double const freq = s * k_p / (s * kappa + pi_n + a2 / c);
    if (!(freq > 0))
        return std::nullopt;

    ScatteringKinematics const kin(p, k, photon_wavevector(freq, geometry));
    double const slope = c * s * k_p / (freq * freq);  // |dE_s^2 / dw'|
    // R = delta(E - A)/E = 2 delta(E^2 - A^2)
    double const weight = harmonic_power(s, kin, amplitude) * 2 / slope;
    return Peak{s, freq, weight};
}

PeakList coherent_peaks(PhaseAveragedStatistics const& stats,
                        FourVector const& p,
                        EmissionGeometry const& geometry,
                        int s_first,
                        int s_last)
{
    if (!stats.is_atomic())
        throw std::invalid_argument("coherent_peaks needs an atomic drive");
    PeakList result;
    for (int s = std::max(1, s_first); s <= s_last; ++s)
    {
        if (auto peak = coherent_peak(
                s, stats.peak().amplitude, stats.omega, p, geometry))
        {
            result.push_back(*peak);
        }
    }
    return result;
}

}  // namespace qcompton
