//---------------------------------------------------------------------------//
//! \file test_pipeline.cpp
//---------------------------------------------------------------------------//
#include "qcompton/pipeline.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qcompton/constants.hpp"
#include "qcompton/units.hpp"

using namespace qcompton;

namespace
{
constexpr double omega = 2.25;

Scenario at_rest(PhaseAveragedStatistics stats,
                 Broadening mode = Broadening::literal)
{
    return {electron_momentum(1.0, {0, 0, 1}), std::move(stats), 8e-3 * omega, mode, {}};
}

double density(double intensity)
{
    return intensity_to_photon_density(intensity, omega).ev3;
}
}  // namespace

TEST_CASE("frequency grids")
{
    auto const lin = FrequencyGrid{1, 3, 5, false}.points();
    REQUIRE(lin.size() == 5);
    CHECK(lin[1] == doctest::Approx(1.5));
    CHECK(lin.back() == 3);

    auto const lg = FrequencyGrid{1, 100, 3, true}.points();
    CHECK(lg[1] == doctest::Approx(10));
    CHECK(lg.back() == 100);

    CHECK_THROWS_AS(FrequencyGrid({1, 1, 5, false}).points(), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyGrid({0, 1, 5, true}).points(), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyGrid({1, 2, 1, false}).points(), std::invalid_argument);
}

TEST_CASE("gaussian lines")
{
    GaussianLine const line{1, 2.0, 0.01, 3.0};
    CHECK(line(2.0) == doctest::Approx(3.0 / (0.01 * std::sqrt(2 * constants::pi))));
    CHECK(line.integral({0, 4}) == doctest::Approx(3.0));
    CHECK(line.integral({2.0, 4}) == doctest::Approx(1.5));
    // far tail keeps relative accuracy
    CHECK(line.integral({2.3, 2.4}) > 0);
    CHECK(line.integral({2.3, 2.4}) < 1e-190);
}

TEST_CASE("broadening modes")
{
    CHECK(broadening_from_string("literal") == Broadening::literal);
    CHECK(broadening_from_string("drive_average") == Broadening::drive_average);
    CHECK(to_string(Broadening::drive_average) == "drive_average");
    CHECK_THROWS_AS(broadening_from_string("gaussian"), std::invalid_argument);
}

TEST_CASE("coherent lines carry the pulse duration")
{
    auto const sc = at_rest(coherent_stats(omega, density(9e16)));
    EmissionGeometry const g{1.0, 0};
    auto const lines = coherent_lines(sc, g);
    REQUIRE(lines.size() > 3);
    double const t = pulse_time(sc);
    CHECK(t == doctest::Approx(2 * constants::pi / (8e-3 * omega)));
    auto const amplitude = sc.stats.peak().amplitude;
    for (auto const& line : lines)
    {
        auto const peak = coherent_peak(line.order, amplitude, omega, sc.electron.p, g);
        REQUIRE(peak);
        CHECK(line.center == peak->frequency);
        CHECK(line.area == doctest::Approx(t * peak->weight));
        CHECK(line.sigma == sc.bandwidth);
    }
    double total = 0;
    for (auto const& line : lines)
        total += line.area;
    CHECK(band_energy(sc, g, {1e-3, 1e3}) == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("drive-average widths grow with order")
{
    auto const sc = at_rest(coherent_stats(omega, density(9e16)), Broadening::drive_average);
    auto const lines = coherent_lines(sc, {1.0, 0});
    REQUIRE(lines.size() > 3);
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(lines[i].sigma > lines[i - 1].sigma);
    // First order at low intensity: d omega'/d nu is the Compton slope
    auto const weak = at_rest(coherent_stats(omega, density(1e8)), Broadening::drive_average);
    auto const first = coherent_lines(weak, {1.0, 0}).front();
    double const q = omega / constants::electron_mass * (1 - std::cos(1.0));
    CHECK(first.sigma == doctest::Approx(sc.bandwidth / ((1 + q) * (1 + q))).epsilon(1e-6));
}

TEST_CASE("sampled curve and direct band integral agree")
{
    auto const sc = at_rest(thermal_stats(omega, density(1e16)));
    EmissionGeometry const g{1.2, 0};
    auto const curve = energy_spectrum(sc, g, {0.5, 12, 2300, false});
    for (Band band : {Band{1.0, 3.0}, Band{3.0, 7.0}, Band{0.5, 12.0}})
    {
        CAPTURE(band.lo);
        double const direct = band_energy(sc, g, band);
        double const sampled = band_integrate(curve, band);
        CHECK(sampled == doctest::Approx(direct).epsilon(2e-4));
    }
}

TEST_CASE("fock and cat spectra are the coherent spectrum")
{
    double const rho = density(9e16);
    EmissionGeometry const g{1.0, 0};
    FrequencyGrid const grid{0.5, 20, 400, false};
    auto const coh = energy_spectrum(at_rest(coherent_stats(omega, rho)), g, grid).values();
    auto const fock = energy_spectrum(at_rest(fock_limit_stats(omega, rho)), g, grid).values();
    auto const cat = energy_spectrum(at_rest(cat_limit_stats(omega, rho)), g, grid).values();
    CHECK(coh == fock);
    CHECK(coh == cat);
}

TEST_CASE("thread count does not change results")
{
    auto const sc = at_rest(bsv_stats(omega, density(1e17)));
    FrequencyGrid const grid{0.5, 15, 60, false};
    setenv("QCOMPTON_THREADS", "1", 1);
    CHECK(worker_threads() == 1);
    auto const one = energy_spectrum(sc, {1.0, 0}, grid);
    setenv("QCOMPTON_THREADS", "4", 1);
    CHECK(worker_threads() == 4);
    auto const four = energy_spectrum(sc, {1.0, 0}, grid);
    unsetenv("QCOMPTON_THREADS");
    CHECK(one.continuum == four.continuum);
    CHECK(one.meta.highest_order == four.meta.highest_order);
}

TEST_CASE("cutoff of a sampled curve")
{
    SpectralCurve curve;
    curve.omega = {1, 2, 3, 4, 5};
    curve.continuum = {1, 1e-3, 1e-5, 1e-7, 0};
    CHECK(spectrum_cutoff(curve, 1e-6) == 3);
    CHECK(spectrum_cutoff(curve, 1e-8) == 4);

    // Lines narrower than the grid are resolved analytically
    SpectralCurve lines;
    lines.omega = {0.0, 10.0};
    lines.continuum = {0, 0};
    lines.lines = {{1, 2.0, 0.01, 1.0}, {2, 4.0, 0.01, 1e-3}};
    double const cut = spectrum_cutoff(lines, 1e-6);
    CHECK(cut == doctest::Approx(4.0 + 0.01 * std::sqrt(2 * std::log(1e3))));
}

TEST_CASE("invalid inputs")
{
    auto sc = at_rest(thermal_stats(omega, density(1e16)));
    CHECK_THROWS_AS(band_energy(sc, {1.0, 0}, {2, 1}), std::invalid_argument);
    sc.bandwidth = 0;
    CHECK_THROWS_AS(pulse_time(sc), std::invalid_argument);
}

TEST_CASE("weak coherent drive gives one dominant linear line")
{
    auto const sc = at_rest(coherent_stats(omega, density(9e14)));
    double const theta = 159.9 * constants::pi / 180;
    auto const lines = coherent_lines(sc, {theta, 0});
    REQUIRE(lines.size() >= 2);
    double const compton = omega / (1 + omega / constants::electron_mass * (1 - std::cos(theta)));
    CHECK(lines[0].center == doctest::Approx(compton).epsilon(1e-4));
    CHECK(lines[0].area > 1e3 * lines[1].area);
}

TEST_CASE("halving the bandwidth doubles T and halves widths")
{
    auto wide = at_rest(coherent_stats(omega, density(9e16)));
    auto narrow = wide;
    narrow.bandwidth = wide.bandwidth / 2;
    EmissionGeometry const g{1.0, 0};
    CHECK(pulse_time(narrow) == doctest::Approx(2 * pulse_time(wide)));
    auto const a = coherent_lines(wide, g);
    auto const b = coherent_lines(narrow, g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        CHECK(b[i].center == a[i].center);
        CHECK(b[i].sigma == doctest::Approx(a[i].sigma / 2));
        CHECK(b[i].area == doctest::Approx(2 * a[i].area));
    }
}

TEST_CASE("broadening preserves band-integrated energy")
{
    auto const sc = at_rest(bsv_stats(omega, density(1e16)));
    EmissionGeometry const g{1.2, 0};
    auto edge = [&](int s) {
        return kinematic_max_frequency(s, sc.electron.p, drive_wavevector(omega), g);
    };
    // The density is negligible beyond the order-60 edge at this intensity
    double const top = edge(60);
    REQUIRE(smooth_spectral_density(sc.stats, sc.electron.p, g, top).value
            < 1e-12 * smooth_spectral_density(sc.stats, sc.electron.p, g, 0.99999 * edge(1)).value);
    // Unbroadened density integrated over omega' with breakpoints at the
    // harmonic edges, where the density has kinks
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double w) { return smooth_spectral_density(sc.stats, sc.electron.p, g, w).value; };
    double direct = 0;
    double lo = 0;
    for (int s = 1; s <= 60; ++s)
    {
        double const hi = edge(s);
        direct += gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
        lo = hi;
    }
    double const broadened = band_energy(sc, g, {1e-6, top});
    CHECK(broadened == doctest::Approx(pulse_time(sc) * direct).epsilon(1e-8));
}
