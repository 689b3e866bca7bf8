#pragma once

#include <vector>

namespace bessel_radii {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;  // normalized: sum(weights) == 1
};

// n-point Gauss rule on [-1, 1] for the Gegenbauer weight (1-t^2)^(lambda-1/2),
// lambda > -1/2, built with the Golub-Welsch eigenvalue method. Weights are
// divided by the total mass of the weight function.
GaussRule gauss_gegenbauer(double lambda, int n);

} // namespace bessel_radii
