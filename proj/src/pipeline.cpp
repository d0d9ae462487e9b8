//---------------------------------------------------------------------------//
//! \file pipeline.cpp
//---------------------------------------------------------------------------//
#include "qcompton/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/special_functions/fpclassify.hpp>  // needed by pchip in Boost 1.74
#include <boost/math/interpolators/pchip.hpp>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"
#include "qcompton/quadrature.hpp"

namespace qcompton
{
namespace
{
constexpr double e2 = constants::charge_squared;
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Gaussian kernels are cut at this many standard deviations.
constexpr double kernel_reach = 8;

// Amplitudes (in units of the drive's scale) used as quadrature breakpoints.
constexpr double scale_breaks[]
    = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0};

constexpr QuadratureOptions harmonic_quadrature{1e-10, 12};

double gaussian(double u, double sigma)
{
    return std::exp(-0.5 * (u / sigma) * (u / sigma))
           / (sigma * std::sqrt(2 * constants::pi));
}

// Mass of N(center, sigma^2) inside [lo, hi], accurate in both tails.
double gaussian_mass(double center, double sigma, double lo, double hi)
{
    double const zl = (lo - center) / (sigma * std::numbers::sqrt2);
    double const zh = (hi - center) / (sigma * std::numbers::sqrt2);
    if (zl > 0)
        return 0.5 * (std::erfc(zl) - std::erfc(zh));
    if (zh < 0)
        return 0.5 * (std::erfc(-zh) - std::erfc(-zl));
    return 0.5 * (std::erf(zh) - std::erf(zl));
}

//---------------------------------------------------------------------------//
/*!
 * Line kinematics along one emission direction.
 *
 * With k.k' = kappa w' and p.k' = pi w', the frequency of order s at field
 * amplitude E is w'_s(E) = s k.p / (s kappa + pi + E^2 / c) with
 * c = 4 w^2 k.p / (e^2 kappa); it decreases monotonically in E.
 */
class LineKinematics
{
  public:
    LineKinematics(Scenario const& scenario, EmissionGeometry const& geometry)
        : scenario_(scenario), geometry_(geometry)
    {
        FourVector const& p = scenario.electron.p;
        omega_ = scenario.stats.omega;
        Vec3 const n = geometry.direction();
        FourVector const dir{1, n.x, n.y, n.z};
        FourVector const k = drive_wavevector(omega_);
        k_p_ = mdot(k, p);
        kappa_ = mdot(k, dir);
        pi_ = mdot(p, dir);
        c_ = 4 * omega_ * omega_ * k_p_ / (e2 * kappa_);
        // For the drive-average width: k.p = nu a, kappa = nu b
        a_ = k_p_ / omega_;
        b_ = kappa_ / omega_;
    }

    bool emits() const { return kappa_ > 0; }

    double max_frequency(int s) const { return s * k_p_ / (s * kappa_ + pi_); }

    double frequency(int s, double field) const
    {
        return s * k_p_ / (s * kappa_ + pi_ + field * field / c_);
    }

    //! E_s at frequency w'; zero at and above the order-s edge
    double field(int s, double omega_out) const
    {
        double const sq = c_ * (s * k_p_ / omega_out - (s * kappa_ + pi_));
        return sq > 0 ? std::sqrt(sq) : 0.0;
    }

    //! Standard deviation of the order-s line at field amplitude E
    double sigma(int s, double field) const
    {
        double const dw = scenario_.bandwidth;
        if (scenario_.broadening == Broadening::literal)
            return dw;
        double const nu = omega_;
        double const f2 = e2 * field * field;
        double const d = s * nu * b_ + pi_ + f2 * b_ / (4 * nu * nu * a_);
        double const dd = s * b_ - f2 * b_ / (2 * nu * nu * nu * a_);
        double const slope = s * a_ / d - s * nu * a_ * dd / (d * d);
        return std::abs(slope) * dw;
    }

    //! Upper bound of sigma over the amplitudes that matter
    double sigma_bound(int s, double scale) const
    {
        double result = sigma(s, 0);
        for (double q : {1.0, 4.0, 16.0, 32.0})
            result = std::max(result, sigma(s, q * scale));
        return result;
    }

    //! Power spectral density of order s at w' for a smooth drive
    double smooth_term(int s, double omega_out, SmoothDensity const& d) const
    {
        double const e = field(s, omega_out);
        if (!(e > 0) || e > d.support_max())
            return 0;
        ScatteringKinematics const kin(
            scenario_.electron.p,
            drive_wavevector(omega_),
            photon_wavevector(omega_out, geometry_));
        double const power = harmonic_power(s, kin, e);
        if (!(power > 0))
            return 0;
        return std::exp(std::log(power) + d.log_r(e));
    }

  private:
    Scenario const& scenario_;
    EmissionGeometry geometry_;
    double omega_{0};
    double k_p_{0};
    double kappa_{0};
    double pi_{0};
    double c_{0};
    double a_{0};
    double b_{0};
};

//---------------------------------------------------------------------------//
// Relative-tolerance stopping rule shared by the harmonic loops.
class Patience
{
  public:
    explicit Patience(TruncationPolicy const& policy) : policy_(policy) {}

    //! Add a term; true once the sum has converged
    bool add(double term)
    {
        sum_ += term;
        ++terms_;
        if (sum_ > 0 && std::abs(term) < policy_.rel_tol * sum_)
            ++quiet_;
        else
            quiet_ = 0;
        return quiet_ >= policy_.patience;
    }

    bool exhausted() const { return terms_ >= policy_.max_terms; }
    double sum() const { return sum_; }

  private:
    TruncationPolicy policy_;
    double sum_{0};
    int terms_{0};
    int quiet_{0};
};

[[noreturn]] void throw_truncation(char const* what, int order)
{
    throw TruncationNotConverged(
        std::string(what) + " did not converge by order "
            + std::to_string(order),
        order);
}

void require_bandwidth(Scenario const& scenario)
{
    if (!(scenario.bandwidth > 0))
        throw std::invalid_argument("drive bandwidth must be positive");
}

//---------------------------------------------------------------------------//
// Static-schedule-free parallel loop; every index writes its own slot, so
// results do not depend on the thread count.
template<class F>
void parallel_for(std::size_t n, F&& fn)
{
    unsigned const nt = static_cast<unsigned>(
        std::min<std::size_t>(worker_threads(), n));
    if (nt <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
    {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto const& err : errors)
    {
        if (err)
            std::rethrow_exception(err);
    }
}

}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(Broadening mode)
{
    return mode == Broadening::literal ? "literal" : "drive_average";
}

Broadening broadening_from_string(std::string_view name)
{
    if (name == "literal")
        return Broadening::literal;
    if (name == "drive_average")
        return Broadening::drive_average;
    throw std::invalid_argument("unknown broadening mode '" + std::string(name)
                                + "'");
}

std::vector<double> FrequencyGrid::points() const
{
    if (count < 2 || !(max > min) || !(min > 0))
        throw std::invalid_argument(
            "frequency grid needs count >= 2 and 0 < min < max");
    std::vector<double> result(count);
    for (int i = 0; i < count; ++i)
    {
        double const t = static_cast<double>(i) / (count - 1);
        result[i] = logarithmic ? min * std::pow(max / min, t)
                                : min + t * (max - min);
    }
    result.back() = max;
    return result;
}

double GaussianLine::operator()(double omega_out) const
{
    return area * gaussian(omega_out - center, sigma);
}

double GaussianLine::integral(Band const& band) const
{
    return area * gaussian_mass(center, sigma, band.lo, band.hi);
}

std::vector<double> SpectralCurve::values() const
{
    std::vector<double> result = continuum;
    result.resize(omega.size(), 0.0);
    for (auto const& line : lines)
    {
        for (std::size_t i = 0; i < omega.size(); ++i)
            result[i] += line(omega[i]);
    }
    return result;
}

unsigned worker_threads()
{
    if (char const* env = std::getenv("QCOMPTON_THREADS"))
    {
        int const n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double pulse_time(Scenario const& scenario)
{
    require_bandwidth(scenario);
    return 2 * constants::pi / scenario.bandwidth;
}

//---------------------------------------------------------------------------//
std::vector<GaussianLine>
coherent_lines(Scenario const& scenario, EmissionGeometry const& geometry)
{
    double const t = pulse_time(scenario);
    auto const& stats = scenario.stats;
    double const amplitude = stats.peak().amplitude;
    std::vector<GaussianLine> result;
    LineKinematics const lk(scenario, geometry);
    if (!(amplitude > 0) || !lk.emits())
        return result;

    Patience patience(scenario.truncation);
    for (int s = 1;; ++s)
    {
        if (patience.exhausted())
            throw_truncation("coherent line series", s);
        auto peak = coherent_peak(
            s, amplitude, stats.omega, scenario.electron.p, geometry);
        if (!peak)
            break;
        double const weight = std::max(peak->weight, 0.0);
        if (weight > 0)
        {
            result.push_back(
                {s, peak->frequency, lk.sigma(s, amplitude), t * weight});
        }
        if (patience.add(weight))
            break;
    }
    return result;
}

//---------------------------------------------------------------------------//
namespace
{
struct ContinuumValue
{
    double value{0};
    int last_order{0};
};

ContinuumValue continuum_value(Scenario const& scenario,
                               EmissionGeometry const& geometry,
                               double omega_out)
{
    double const t = pulse_time(scenario);
    auto const& density = scenario.stats.smooth();
    LineKinematics const lk(scenario, geometry);
    if (!lk.emits())
        return {};
    double const scale = density.scale();

    Patience patience(scenario.truncation);
    int s = 1;
    for (;; ++s)
    {
        if (patience.exhausted())
            throw_truncation("broadened harmonic sum", s);
        double const sigma_max = lk.sigma_bound(s, scale);
        double const reach = kernel_reach * sigma_max;
        double const edge = lk.max_frequency(s);
        double const lo = std::max(omega_out - reach, 1e-12 * omega_out);
        double const hi = std::min(omega_out + reach, edge);
        if (edge <= lo)
            continue;  // order s closed across the whole window
        if (lk.field(s, omega_out + reach) > density.support_max())
            break;
        if (!(hi > lo))
            continue;

        auto integrand = [&](double x) {
            double const f = lk.smooth_term(s, x, density);
            if (f == 0)
                return 0.0;
            return f * gaussian(omega_out - x, lk.sigma(s, lk.field(s, x)));
        };
        std::vector<double> breaks{omega_out};
        for (double q : scale_breaks)
            breaks.push_back(lk.frequency(s, q * scale));
        double const term
            = integrate_pieces(integrand, lo, hi, breaks, harmonic_quadrature);
        if (patience.add(term))
            break;
    }
    return {t * patience.sum(), s};
}
}  // namespace

double broadened_continuum(Scenario const& scenario,
                           EmissionGeometry const& geometry,
                           double omega_out)
{
    return continuum_value(scenario, geometry, omega_out).value;
}

SpectralCurve energy_spectrum(Scenario const& scenario,
                              EmissionGeometry const& geometry,
                              FrequencyGrid const& grid)
{
    SpectralCurve curve;
    curve.omega = grid.points();
    curve.continuum.assign(curve.omega.size(), 0.0);
    curve.meta.state = scenario.stats.label;
    curve.meta.geometry = geometry;
    curve.meta.broadening = scenario.broadening;
    curve.meta.bandwidth = scenario.bandwidth;
    curve.meta.pulse_duration = pulse_time(scenario);

    if (scenario.stats.is_atomic())
    {
        curve.lines = coherent_lines(scenario, geometry);
        if (!curve.lines.empty())
            curve.meta.highest_order = curve.lines.back().order;
        return curve;
    }
    std::vector<int> orders(curve.omega.size(), 0);
    parallel_for(curve.omega.size(), [&](std::size_t i) {
        auto const cv = continuum_value(scenario, geometry, curve.omega[i]);
        curve.continuum[i] = cv.value;
        orders[i] = cv.last_order;
    });
    curve.meta.highest_order = *std::max_element(orders.begin(), orders.end());
    return curve;
}

//---------------------------------------------------------------------------//
double band_energy(Scenario const& scenario,
                   EmissionGeometry const& geometry,
                   Band const& band)
{
    if (!(band.hi > band.lo))
        throw std::invalid_argument("band must satisfy lo < hi");
    double const t = pulse_time(scenario);
    if (scenario.stats.is_atomic())
    {
        double total = 0;
        for (auto const& line : coherent_lines(scenario, geometry))
            total += line.integral(band);
        return total;
    }

    // Smooth drive as a superposition of classical amplitudes E with
    // probability density E R(E): integrate each order over E.
    auto const& stats = scenario.stats;
    auto const& density = stats.smooth();
    LineKinematics const lk(scenario, geometry);
    if (!lk.emits())
        return 0;
    double const scale = density.scale();
    double const support = density.support_max();

    Patience patience(scenario.truncation);
    for (int s = 1;; ++s)
    {
        if (patience.exhausted())
            throw_truncation("band harmonic sum", s);
        double const sigma_max = lk.sigma_bound(s, scale);
        double const reach = kernel_reach * sigma_max;
        double const lo = band.lo - reach;
        double const hi = band.hi + reach;
        if (lk.max_frequency(s) <= lo)
            continue;
        double const e_min = lk.field(s, hi);
        if (e_min >= support)
            break;
        double const e_max
            = lo > 0 ? std::min(lk.field(s, lo), support) : support;
        if (!(e_max > e_min))
        {
            if (patience.add(0))
                break;
            continue;
        }

        auto integrand = [&](double e) {
            double const lr = density.log_radial(e);
            if (lr == neg_inf)
                return 0.0;
            auto peak = coherent_peak(
                s, e, stats.omega, scenario.electron.p, geometry);
            if (!peak || !(peak->weight > 0))
                return 0.0;
            double const mass = gaussian_mass(
                peak->frequency, lk.sigma(s, e), band.lo, band.hi);
            if (mass == 0)
                return 0.0;
            return std::exp(lr + std::log(peak->weight * mass));
        };
        std::vector<double> breaks;
        for (double q : scale_breaks)
            breaks.push_back(q * scale);
        for (double edge : {band.lo, band.hi})
        {
            for (double k : {-2.0, 0.0, 2.0})
            {
                double const x = edge + k * lk.sigma(s, scale);
                if (x > 0)
                    breaks.push_back(lk.field(s, x));
            }
        }
        double const term = integrate_pieces(
            integrand, e_min, e_max, breaks, harmonic_quadrature);
        if (patience.add(term))
            break;
    }
    return t * patience.sum();
}

std::vector<double> angular_distribution(Scenario const& scenario,
                                         std::span<double const> thetas,
                                         double phi,
                                         Band const& band,
                                         bool sin_jacobian)
{
    if (!(band.hi > band.lo))
        throw std::invalid_argument("band must satisfy lo < hi");
    std::vector<double> result(thetas.size(), 0.0);
    parallel_for(thetas.size(), [&](std::size_t i) {
        double const th = thetas[i];
        double v = band_energy(scenario, {th, phi}, band);
        if (sin_jacobian)
            v *= std::sin(th);
        result[i] = v;
    });
    return result;
}

//---------------------------------------------------------------------------//
double band_integrate(SpectralCurve const& curve, Band const& band)
{
    if (!(band.hi > band.lo))
        throw std::invalid_argument("band must satisfy lo < hi");
    double total = 0;
    for (auto const& line : curve.lines)
        total += line.integral(band);

    auto const& x = curve.omega;
    auto const& y = curve.continuum;
    if (x.size() < 2 || y.size() != x.size())
        return total;
    double const a = std::max(band.lo, x.front());
    double const b = std::min(band.hi, x.back());
    if (!(b > a))
        return total;
    if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0; }))
        return total;

    if (x.size() >= 4)
    {
        using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
        Pchip const spline{std::vector<double>(x), std::vector<double>(y)};
        auto f = [&spline](double v) { return spline(v); };
        total += integrate_pieces(f, a, b, x, {1e-12, 8});
    }
    else
    {
        auto linear = [&](double v) {
            auto const hi = std::clamp<std::size_t>(
                std::upper_bound(x.begin(), x.end(), v) - x.begin(),
                1,
                x.size() - 1);
            double const u = (v - x[hi - 1]) / (x[hi] - x[hi - 1]);
            return y[hi - 1] + u * (y[hi] - y[hi - 1]);
        };
        total += integrate_pieces(linear, a, b, x, {1e-12, 8});
    }
    return total;
}

double spectrum_cutoff(SpectralCurve const& curve, double rel_threshold)
{
    auto const v = curve.values();
    if (v.empty())
        throw std::invalid_argument("empty spectral curve");
    // Lines may be narrower than the grid spacing: take their heights and
    // tails analytically.
    double peak = *std::max_element(v.begin(), v.end());
    for (auto const& line : curve.lines)
        peak = std::max(peak, line(line.center));
    if (!(peak > 0))
        return curve.omega.front();
    double const level = rel_threshold * peak;

    double result = curve.omega.front();
    for (std::size_t i = v.size(); i-- > 0;)
    {
        if (v[i] > level)
        {
            result = curve.omega[i];
            break;
        }
    }
    for (auto const& line : curve.lines)
    {
        double const height = line(line.center);
        if (height > level)
        {
            double const reach
                = line.sigma * std::sqrt(2 * std::log(height / level));
            result = std::max(result,
                              std::min(line.center + reach, curve.omega.back()));
        }
    }
    return result;
}

}  // namespace qcompton
