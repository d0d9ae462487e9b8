//---------------------------------------------------------------------------//
//! \file photon_statistics.cpp
//---------------------------------------------------------------------------//
#include "qcompton/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <boost/math/interpolators/cubic_hermite.hpp>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"
#include "qcompton/quadrature.hpp"
#include "qcompton/special_functions.hpp"

namespace qcompton
{
namespace
{
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Gaussian tails exp(-E^2 / w) are cut where the exponent reaches -800.
constexpr double tail_exponent = 800;

void require_drive(double omega, double photon_density, bool allow_zero)
{
    if (!(omega > 0))
        throw std::invalid_argument("drive frequency must be positive");
    if (allow_zero ? !(photon_density >= 0) : !(photon_density > 0))
    {
        throw std::invalid_argument(
            allow_zero ? "photon density must be nonnegative"
                       : "photon density must be positive for smooth states");
    }
}

PhaseAveragedStatistics
make_atomic(std::string label, double omega, double photon_density)
{
    require_drive(omega, photon_density, true);
    PhaseAveragedStatistics result{std::move(label), omega, photon_density,
                                   AtomicPeak{}};
    result.shape = AtomicPeak{std::sqrt(2 * omega * photon_density)};
    return result;
}

std::vector<double> moment_breaks(SmoothDensity const& density)
{
    std::vector<double> breaks;
    for (double f : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0})
        breaks.push_back(f * density.scale());
    auto const nodes = density.nodes();
    breaks.insert(breaks.end(), nodes.begin(), nodes.end());
    return breaks;
}

//---------------------------------------------------------------------------//
/*!
 * Interpolant for tabulated R(E).
 *
 * Strictly positive tables use cubic Hermite interpolation of log R with
 * three-point (parabolic) slopes, exact when log R is quadratic; two-point
 * tables are log-linear. Tables with interior zeros fall back to linear
 * interpolation of R itself. R vanishes outside [first, last] sample.
 */
class TableInterpolant
{
  public:
    explicit TableInterpolant(std::span<TableSample const> samples)
    {
        for (auto const& s : samples)
        {
            x_.push_back(s.field);
            y_.push_back(s.value);
        }
        positive_ = std::all_of(
            y_.begin(), y_.end(), [](double v) { return v > 0; });
        if (positive_)
        {
            std::vector<double> logs;
            for (double v : y_)
                logs.push_back(std::log(v));
            if (x_.size() >= 3)
            {
                auto xs = x_;
                auto ls = logs;
                auto ds = parabolic_slopes(x_, logs);
                hermite_ = std::make_shared<Hermite>(
                    std::move(xs), std::move(ls), std::move(ds));
            }
            log_y_ = std::move(logs);
        }
    }

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    std::span<double const> nodes() const { return x_; }

    double log_value(double e) const
    {
        if (!(e >= x_.front() && e <= x_.back()))
            return neg_inf;
        if (hermite_)
            return (*hermite_)(e);
        auto const hi = std::max<std::size_t>(
            1,
            std::min<std::size_t>(
                x_.size() - 1,
                std::upper_bound(x_.begin(), x_.end(), e) - x_.begin()));
        auto const lo = hi - 1;
        double const t = (e - x_[lo]) / (x_[hi] - x_[lo]);
        if (positive_)
            return log_y_[lo] + t * (log_y_[hi] - log_y_[lo]);
        double const v = y_[lo] + t * (y_[hi] - y_[lo]);
        return v > 0 ? std::log(v) : neg_inf;
    }

  private:
    using Hermite = boost::math::interpolators::cubic_hermite<std::vector<double>>;

    // Derivative of the parabola through each node and its neighbours
    static std::vector<double>
    parabolic_slopes(std::vector<double> const& x, std::vector<double> const& y)
    {
        auto const n = x.size();
        std::vector<double> d(n);
        auto three_point = [&](std::size_t a, std::size_t at) {
            // Parabola through a, a+1, a+2 differentiated at node `at`
            double const x0 = x[a], x1 = x[a + 1], x2 = x[a + 2];
            double const t = x[at];
            return y[a] * (2 * t - x1 - x2) / ((x0 - x1) * (x0 - x2))
                   + y[a + 1] * (2 * t - x0 - x2) / ((x1 - x0) * (x1 - x2))
                   + y[a + 2] * (2 * t - x0 - x1) / ((x2 - x0) * (x2 - x1));
        };
        d[0] = three_point(0, 0);
        for (std::size_t k = 1; k + 1 < n; ++k)
            d[k] = three_point(k - 1, k);
        d[n - 1] = three_point(n - 3, n - 1);
        return d;
    }

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> log_y_;
    bool positive_{false};
    std::shared_ptr<Hermite> hermite_;
};

}  // namespace

//---------------------------------------------------------------------------//
SmoothDensity::SmoothDensity(LogDensity log_r,
                             double scale,
                             double support_max,
                             std::vector<double> nodes)
    : log_r_(std::move(log_r))
    , scale_(scale)
    , support_max_(support_max)
    , nodes_(std::move(nodes))
{
    if (!(scale > 0) || !(support_max > 0))
        throw std::invalid_argument("smooth density needs positive scales");
}

double SmoothDensity::log_r(double field) const
{
    if (!(field > 0) || field > support_max_)
        return neg_inf;
    return log_r_(field);
}

double SmoothDensity::r(double field) const
{
    return std::exp(log_r(field));
}

double SmoothDensity::log_radial(double field) const
{
    if (!(field > 0))
        return neg_inf;
    return std::log(field) + log_r(field);
}

//---------------------------------------------------------------------------//
PhaseAveragedStatistics coherent_stats(double omega, double photon_density)
{
    return make_atomic("coherent", omega, photon_density);
}

PhaseAveragedStatistics fock_limit_stats(double omega, double photon_density)
{
    return make_atomic("fock-limit", omega, photon_density);
}

PhaseAveragedStatistics cat_limit_stats(double omega, double photon_density)
{
    return make_atomic("cat-limit", omega, photon_density);
}

PhaseAveragedStatistics thermal_stats(double omega, double photon_density)
{
    require_drive(omega, photon_density, false);
    double const width = 2 * omega * photon_density;  // <E^2>
    double const log_norm = -std::log(omega * photon_density);
    SmoothDensity density(
        [=](double e) { return log_norm - e * e / width; },
        std::sqrt(width),
        std::sqrt(tail_exponent * width));
    return {"thermal", omega, photon_density, std::move(density)};
}

PhaseAveragedStatistics bsv_stats(double omega, double photon_density)
{
    require_drive(omega, photon_density, false);
    double const wr = omega * photon_density;
    double const width = 4 * wr;
    double const log_norm = -0.5 * std::log(constants::pi * wr);
    SmoothDensity density(
        [=](double e) { return log_norm - e * e / width - std::log(e); },
        std::sqrt(2 * wr),
        std::sqrt(tail_exponent * width));
    return {"bsv", omega, photon_density, std::move(density)};
}

PhaseAveragedStatistics
mixed_diagonal_stats(double omega, double photon_density)
{
    require_drive(omega, photon_density, false);
    // Finite-volume Husimi function of the diagonal mixture, scaled to field
    // units and evaluated at a mean photon number large enough that every
    // finite-volume correction (O(1/<n>)) is below double precision.
    constexpr double mean_photons = 1e24;
    double const volume = mean_photons / photon_density;  // [eV^-3]
    double const two_n1 = 2 * mean_photons + 1;
    double const log_prefactor = std::log(2 * constants::pi)
                                 + std::log(volume / (2 * omega))
                                 - std::log(constants::pi)
                                 - 0.5 * std::log(two_n1);
    auto log_r = [=](double e) {
        double const alpha_sq = volume * e * e / (2 * omega);  // |alpha|^2
        double const arg = mean_photons * alpha_sq / two_n1;
        // -(n+1)/(2n+1)|a|^2 + log I0(arg) = -|a|^2/(2n+1) + log(I0 e^-arg)
        return log_prefactor - alpha_sq / two_n1 + bessel_i0e_log(arg);
    };
    double const wr = omega * photon_density;
    SmoothDensity density(
        log_r, std::sqrt(2 * wr), std::sqrt(tail_exponent * 4 * wr));
    return {"mixed-diagonal", omega, photon_density, std::move(density)};
}

//---------------------------------------------------------------------------//
PhaseAveragedStatistics
custom_tabulated_stats(double omega,
                       double photon_density,
                       std::span<TableSample const> samples)
{
    require_drive(omega, photon_density, false);
    if (samples.empty())
        throw NonNormalizable("tabulated state has no samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        auto const& s = samples[i];
        if (!(s.field >= 0) || !(s.value >= 0) || !std::isfinite(s.field)
            || !std::isfinite(s.value))
        {
            throw std::invalid_argument(
                "tabulated samples need finite E >= 0 and R >= 0");
        }
        if (i > 0 && !(s.field > samples[i - 1].field))
        {
            throw std::invalid_argument(
                "tabulated samples must be strictly increasing in E");
        }
    }

    // Trim zero runs at both ends; they only delimit the support.
    std::size_t first = 0;
    std::size_t last = samples.size();
    while (first < last && samples[first].value == 0)
        ++first;
    while (last > first && samples[last - 1].value == 0)
        --last;
    if (last - first < 2)
    {
        throw NonNormalizable(
            "tabulated state needs two or more nonzero samples");
    }

    auto table = std::make_shared<TableInterpolant const>(
        samples.subspan(first, last - first));
    auto raw_moment = [&table](int power) {
        auto f = [&](double e) {
            double const lr = table->log_value(e);
            return lr == neg_inf ? 0.0 : std::pow(e, power) * std::exp(lr);
        };
        return integrate_pieces(f,
                                table->front(),
                                table->back(),
                                table->nodes(),
                                {1e-12, 10});
    };
    double const m1 = raw_moment(1);
    double const m3 = raw_moment(3);
    if (!(m1 > 0) || !(m3 > 0))
        throw NonNormalizable("tabulated state has vanishing moments");

    // R_new(E) = c R(E / lambda) with lambda^2 = 2 w rho m1 / m3 and
    // c = 1 / (lambda^2 m1) restores both invariants.
    double const target = 2 * omega * photon_density;
    double const lambda = std::sqrt(target * m1 / m3);
    double const log_c = -std::log(lambda * lambda * m1);
    std::vector<double> nodes;
    for (double x : table->nodes())
        nodes.push_back(lambda * x);
    SmoothDensity density(
        [table, lambda, log_c](double e) {
            return log_c + table->log_value(e / lambda);
        },
        std::sqrt(target),
        lambda * table->back(),
        std::move(nodes));
    return {"custom", omega, photon_density, std::move(density)};
}

//---------------------------------------------------------------------------//
std::vector<TableSample> read_table_samples(std::istream& is)
{
    std::vector<TableSample> result;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream fields(line);
        fields.imbue(std::locale::classic());
        TableSample s;
        if (!(fields >> s.field))
            continue;
        std::string extra;
        if (!(fields >> s.value) || (fields >> extra))
        {
            throw std::invalid_argument("malformed table line "
                                        + std::to_string(lineno)
                                        + ": expected two columns");
        }
        result.push_back(s);
    }
    return result;
}

std::vector<TableSample> read_table_samples(std::string const& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open table file '" + path + "'");
    return read_table_samples(is);
}

//---------------------------------------------------------------------------//
Moments moments(PhaseAveragedStatistics const& stats)
{
    if (stats.is_atomic())
    {
        double const a = stats.peak().amplitude;
        return {1.0, a * a};
    }
    auto const& density = stats.smooth();
    auto const breaks = moment_breaks(density);
    auto moment = [&](int power) {
        auto f = [&](double e) {
            double const lr = density.log_radial(e);
            return lr == neg_inf ? 0.0
                                 : std::exp(lr + (power - 1) * std::log(e));
        };
        return integrate_pieces(
            f, 0.0, density.support_max(), breaks, {1e-13, 15});
    };
    return {moment(1), moment(3)};
}

}  // namespace qcompton
