#pragma once

// Bracketed scalar root finding shared by the zero finder, the radius solver
// and the threshold solver.

#include "bessel_radii/errors.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bessel_radii {

struct Bracket {
    double lo;
    double hi;
};

// Plain bisection on [lo, hi]; f(lo) and f(hi) must differ in sign.
// Stops when the bracket is narrower than xtol or after max_iter halvings.
template <typename F>
double bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200)
{
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw convergence_error("bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Newton iteration kept inside a shrinking sign-change bracket. fdf(x) returns
// {f(x), f'(x)}. A Newton step that leaves the bracket, or fails to halve it
// fast enough, is replaced by a bisection step.
template <typename FDF>
double safeguarded_newton(FDF&& fdf, double lo, double hi, int max_iter = 200)
{
    auto [flo, dlo] = fdf(lo);
    auto [fhi, dhi] = fdf(hi);
    (void)dlo;
    (void)dhi;
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw convergence_error("safeguarded_newton: no sign change on [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    // orient so that f(lo) < 0
    if (flo > 0.0)
        std::swap(lo, hi);

    const double eps = std::numeric_limits<double>::epsilon();
    double x = 0.5 * (lo + hi);
    double dx_old = std::abs(hi - lo);
    double dx = dx_old;
    auto [f, df] = fdf(x);
    for (int i = 0; i < max_iter; ++i) {
        const bool newton_leaves = ((x - hi) * df - f) * ((x - lo) * df - f) > 0.0;
        const bool newton_slow = std::abs(2.0 * f) > std::abs(dx_old * df);
        dx_old = dx;
        if (newton_leaves || newton_slow || df == 0.0 || !std::isfinite(df)) {
            dx = 0.5 * (hi - lo);
            x = lo + dx;
        } else {
            dx = f / df;
            x -= dx;
        }
        if (std::abs(dx) <= 2.0 * eps * std::abs(x) || f == 0.0)
            return x;
        std::tie(f, df) = fdf(x);
        if (f == 0.0)
            return x;
        if (f < 0.0)
            lo = x;
        else
            hi = x;
        if (std::abs(hi - lo) <= 4.0 * eps * std::abs(x))
            return 0.5 * (lo + hi);
    }
    throw convergence_error("safeguarded_newton: no convergence in " + std::to_string(max_iter) + " iterations");
}

// Sample f on a uniform grid over [lo, hi] and return every cell where the
// sign changes (exact zeros at grid points yield a degenerate cell).
template <typename F>
std::vector<Bracket> scan_sign_changes(F&& f, double lo, double hi, int cells)
{
    std::vector<Bracket> out;
    const double h = (hi - lo) / cells;
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= cells; ++i) {
        const double x1 = (i == cells) ? hi : lo + i * h;
        const double f1 = f(x1);
        if (f0 == 0.0)
            out.push_back({x0, x0});
        else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0))
            out.push_back({x0, x1});
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0)
        out.push_back({x0, x0});
    return out;
}

} // namespace bessel_radii
