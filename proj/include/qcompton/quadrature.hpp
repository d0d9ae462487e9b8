//---------------------------------------------------------------------------//
//! \file quadrature.hpp
//! Adaptive Gauss-Kronrod integration with explicit breakpoints.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qcompton
{
//---------------------------------------------------------------------------//
struct QuadratureOptions
{
    double rel_tol{1e-10};
    unsigned max_depth{15};
};

//! Adaptive 31-point Gauss-Kronrod over [a, b].
template<class F>
double integrate(F&& f, double a, double b, QuadratureOptions opts = {})
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    if (a == b)
        return 0;
    double error = 0;
    return GK::integrate(f, a, b, opts.max_depth, opts.rel_tol, &error);
}

/*!
 * Integrate over [a, b] split at every breakpoint strictly inside it.
 *
 * Breakpoints mark kinks or narrow features the adaptive rule would otherwise
 * have to discover on its own.
 */
template<class F>
double integrate_pieces(F&& f,
                        double a,
                        double b,
                        std::span<double const> breaks,
                        QuadratureOptions opts = {})
{
    std::vector<double> nodes{a};
    for (double x : breaks)
    {
        if (x > a && x < b)
            nodes.push_back(x);
    }
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    double total = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        total += integrate(f, nodes[i], nodes[i + 1], opts);
    return total;
}

//---------------------------------------------------------------------------//
}  // namespace qcompton
