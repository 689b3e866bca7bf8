#include "bessel_radii/quadrature.hpp"

#include "bessel_radii/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace bessel_radii {

GaussRule gauss_gegenbauer(double lambda, int n)
{
    if (!(lambda > -0.5))
        throw domain_error("gauss_gegenbauer: requires lambda > -1/2");
    if (n < 1)
        throw domain_error("gauss_gegenbauer: requires at least one node");

    // Symmetric Jacobi matrix of the monic orthogonal polynomials: zero
    // diagonal, off-diagonal sqrt(b_k) with
    //   b_1 = 1/(2 lambda + 2),  b_k = k (k + 2 lambda - 1) / (4 (k + lambda)(k + lambda - 1)).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
        const double kk = k;
        const double b = k == 1 ? 1.0 / (2.0 * lambda + 2.0)
                                : kk * (kk + 2.0 * lambda - 1.0) / (4.0 * (kk + lambda) * (kk + lambda - 1.0));
        sub(k - 1) = std::sqrt(b);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw convergence_error("gauss_gegenbauer: eigenvalue iteration failed");

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;
    }
    return rule;
}

} // namespace bessel_radii
