//---------------------------------------------------------------------------//
//! \file special_functions.cpp
//---------------------------------------------------------------------------//
#include "qcompton/special_functions.hpp"

#include <cmath>
#include <string>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"

namespace qcompton
{
namespace
{
//---------------------------------------------------------------------------//
// Regime boundaries, fixed constants cross-validated against a 40-digit
// reference table in the tests.
constexpr int debye_min_order = 1000;
constexpr double debye_max_ratio = 0.6;
constexpr int direct_prefactor_max_order = 300;
constexpr double miller_rescale = 1e140;

enum class Regime
{
    zero,
    series,
    debye,
    miller
};

bool in_series_regime(int n, double x)
{
    return x * x < n + 1.0;
}

Regime select_regime(int n, double x)
{
    if (x == 0)
        return Regime::zero;
    if (in_series_regime(n, x))
        return Regime::series;
    if (n >= debye_min_order && x <= debye_max_ratio * n)
        return Regime::debye;
    return Regime::miller;
}

void check_contract(int n, double x)
{
    using C = BesselAccuracyContract;
    if (n < 0 || !(x >= 0) || !std::isfinite(x))
    {
        throw OutOfContract("bessel_j requires n >= 0 and finite x >= 0 (n="
                            + std::to_string(n)
                            + ", x=" + std::to_string(x) + ")");
    }
    if (x > C::max_argument
        || (n > C::max_order && !in_series_regime(n, x)))
    {
        throw OutOfContract("bessel_j input beyond accuracy contract (n="
                            + std::to_string(n)
                            + ", x=" + std::to_string(x) + ")");
    }
}

//---------------------------------------------------------------------------//
// Ascending series; successive term ratio is below 1/4 inside the regime.
double series(int n, double x)
{
    double const half = x / 2;
    double prefactor;
    if (n <= direct_prefactor_max_order)
    {
        prefactor = 1;
        for (int k = 1; k <= n; ++k)
            prefactor *= half / k;
    }
    else
    {
        prefactor = std::exp(n * std::log(half) - std::lgamma(n + 1.0));
    }
    if (prefactor == 0)
        return 0;

    double const q = half * half;
    double term = 1;
    double sum = 1;
    for (int k = 1; k < 500; ++k)
    {
        term *= -q / (k * (static_cast<double>(n) + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return prefactor * sum;
}

//---------------------------------------------------------------------------//
// Debye expansion for x = n sech(a) well below the turning point.
double debye(int n, double x)
{
    double const nu = n;
    double const r = x / nu;
    double const th = std::sqrt((1 - r) * (1 + r));  // tanh a
    double const a = std::log((1 + th) / r);
    double const t = 1 / th;  // coth a
    double const t2 = t * t;

    double const u1 = t * (3 - 5 * t2) / 24;
    double const u2 = t2 * (81 - 462 * t2 + 385 * t2 * t2) / 1152;
    double const u3 = t * t2
                      * (30375 - 369603 * t2 + 765765 * t2 * t2
                         - 425425 * t2 * t2 * t2)
                      / 414720;
    double const u4 = t2 * t2
                      * (4465125 - 94121676 * t2 + 349922430 * t2 * t2
                         - 446185740 * t2 * t2 * t2
                         + 185910725 * t2 * t2 * t2 * t2)
                      / 39813120;
    double const correction
        = 1 + (u1 + (u2 + (u3 + u4 / nu) / nu) / nu) / nu;
    return std::exp(nu * (th - a)) / std::sqrt(2 * constants::pi * nu * th)
           * correction;
}

//---------------------------------------------------------------------------//
// Miller backward recurrence normalized by J0^2 + 2 sum J_k^2 = 1; the sign
// comes from J0 + 2 sum J_2k = 1. Returns J_{n-1}, J_n, J_{n+1} (J_{-1} =
// -J_1).
BesselTriplet miller(int n, double x)
{
    double const reach = std::max(n + 1.0, x);
    int start = static_cast<int>(
        std::ceil(reach + 50 + 10 * std::cbrt(reach)));
    start += start % 2;

    double above = 0;  // J_{k+1}
    double current = 1e-30;  // J_k, k = start
    double squares = 0;
    double evens = 0;
    BesselTriplet stored;

    auto record = [&](int k, double value) {
        if (k == n - 1)
            stored.below = value;
        else if (k == n)
            stored.center = value;
        else if (k == n + 1)
            stored.above = value;
    };

    for (int k = start; k >= 1; --k)
    {
        record(k, current);
        squares += 2 * current * current;
        if (k % 2 == 0)
            evens += 2 * current;

        double const below = (2.0 * k / x) * current - above;
        above = current;
        current = below;

        if (std::abs(current) > miller_rescale)
        {
            double const s = 1 / miller_rescale;
            current *= s;
            above *= s;
            squares *= s * s;
            evens *= s;
            stored.below *= s;
            stored.center *= s;
            stored.above *= s;
        }
    }
    record(0, current);
    squares += current * current;
    evens += current;

    double norm = 1 / std::sqrt(squares);
    if (evens < 0)
        norm = -norm;
    if (n == 0)
        stored.below = -stored.above;
    return {stored.below * norm, stored.center * norm, stored.above * norm};
}

double evaluate(int n, double x)
{
    switch (select_regime(n, x))
    {
        case Regime::zero:
            return n == 0 ? 1.0 : 0.0;
        case Regime::series:
            return series(n, x);
        case Regime::debye:
            return debye(n, x);
        case Regime::miller:
            break;
    }
    return miller(n, x).center;
}

}  // namespace

//---------------------------------------------------------------------------//
double bessel_j(int n, double x)
{
    check_contract(n, x);
    return evaluate(n, x);
}

BesselTriplet bessel_j_triplet(int n, double x)
{
    if (n < 1)
        throw OutOfContract("bessel_j_triplet requires n >= 1");
    check_contract(n + 1, x);
    if (select_regime(n, x) == Regime::miller)
        return miller(n, x);
    return {evaluate(n - 1, x), evaluate(n, x), evaluate(n + 1, x)};
}

//---------------------------------------------------------------------------//
namespace
{
constexpr double i0_series_limit = 30;

// log of the asymptotic sum 1 + 1/(8x) + 9/(2 (8x)^2) + ...
double i0_asymptotic_log_correction(double x)
{
    double term = 1;
    double sum = 1;
    for (int k = 1; k < 200; ++k)
    {
        double const next = term * (2 * k - 1) * (2 * k - 1) / (8.0 * k * x);
        if (next > term)
            break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return std::log(sum);
}

double i0_series(double x)
{
    double const q = x * x / 4;
    double term = 1;
    double sum = 1;
    for (int k = 1; k < 500; ++k)
    {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}
}  // namespace

double bessel_i0_log(double x)
{
    if (!(x >= 0))
        throw OutOfContract("bessel_i0_log requires x >= 0");
    if (x <= i0_series_limit)
        return std::log(i0_series(x));
    return x - 0.5 * std::log(2 * constants::pi * x)
           + i0_asymptotic_log_correction(x);
}

double bessel_i0e_log(double x)
{
    if (!(x >= 0))
        throw OutOfContract("bessel_i0e_log requires x >= 0");
    if (x <= i0_series_limit)
        return std::log(i0_series(x)) - x;
    return -0.5 * std::log(2 * constants::pi * x)
           + i0_asymptotic_log_correction(x);
}

}  // namespace qcompton
