//---------------------------------------------------------------------------//
//! \file test_units.cpp
//---------------------------------------------------------------------------//
#include "qcompton/units.hpp"

#include <stdexcept>

#include <doctest.h>

using namespace qcompton;

TEST_CASE("intensity to photon density")
{
    // rho = I / (c hbar omega)
    auto const d = intensity_to_photon_density(9e14, 2.25);
    CHECK(d.per_m3 == doctest::Approx(8.32777330837424e28).epsilon(1e-12));
    CHECK(d.ev3 == doctest::Approx(6.398649259604256e8).epsilon(1e-9));

    CHECK(intensity_to_photon_density(0, 2.25).ev3 == 0);
    CHECK_THROWS_AS(intensity_to_photon_density(-1, 2.25),
                    std::invalid_argument);
    CHECK_THROWS_AS(intensity_to_photon_density(1e10, 0),
                    std::invalid_argument);
}

TEST_CASE("round trip")
{
    for (double intensity : {1e10, 9e14, 3.3e17, 1e20})
    {
        auto const d = intensity_to_photon_density(intensity, 1.55);
        CHECK(photon_density_to_intensity(d.ev3, 1.55)
              == doctest::Approx(intensity).epsilon(1e-14));
    }
}

TEST_CASE("pulse duration")
{
    auto const t = pulse_duration(0.018);
    CHECK(t.seconds == doctest::Approx(2.297593164780002e-13).epsilon(1e-12));
    CHECK(t.inverse_ev == doctest::Approx(349.0658503988659));
    CHECK_THROWS_AS(pulse_duration(0), std::invalid_argument);
}

TEST_CASE("natural drive")
{
    auto const d = to_natural({9e17, 2.25, 8e-3});
    CHECK(d.omega == 2.25);
    CHECK(d.bandwidth == doctest::Approx(0.018));
    CHECK(d.photon_density == doctest::Approx(6.398649259604256e11).epsilon(1e-9));
    CHECK_FALSE(d.is_broadband());
    CHECK(to_natural({1e15, 2.25, 0.2}).is_broadband());
}
