//---------------------------------------------------------------------------//
//! \file special_functions.hpp
//! Bessel J of integer order and log of modified Bessel I0.
//---------------------------------------------------------------------------//
#pragma once

namespace qcompton
{
//---------------------------------------------------------------------------//
/*!
 * Accuracy contract for bessel_j.
 *
 * Inside the contract the relative error is below 1e-12 away from zeros of
 * J_n (absolute error relative to the local envelope near zeros), and below
 * 1e-10 where the large-order expansion takes over.
 */
struct BesselAccuracyContract
{
    static constexpr int max_order = 10000;
    static constexpr double max_argument = 1e4;
    static constexpr double relative_error_budget = 1e-12;
    static constexpr double asymptotic_error_budget = 1e-10;
};

//! Three consecutive orders J_{n-1}, J_n, J_{n+1} at one argument.
struct BesselTriplet
{
    double below{0};
    double center{0};
    double above{0};
};

//---------------------------------------------------------------------------//
// J_n(x) for integer n >= 0, x >= 0.
double bessel_j(int n, double x);

// J_{n-1}, J_n, J_{n+1} for n >= 1, sharing one recurrence pass.
BesselTriplet bessel_j_triplet(int n, double x);

// log I0(x), x >= 0, without overflow.
double bessel_i0_log(double x);

// log(I0(x) exp(-x)), the exponentially scaled form, for x >= 0.
double bessel_i0e_log(double x);

//---------------------------------------------------------------------------//
}  // namespace qcompton
