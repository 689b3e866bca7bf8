#pragma once

// Positive real zeros of J_nu, J'_nu and the Dini function gamma*J_nu + x*J'_nu.
//
// Zeros are computed in tables of the first N and cached per family; a
// request for fewer zeros than a cached table holds reuses it.

#include <memory>
#include <vector>

namespace bessel_radii {

enum class ZeroKind { bessel_j, bessel_j_prime, dini };

struct ZeroFamily {
    ZeroKind kind = ZeroKind::bessel_j;
    double gamma = 0.0;  // DINI only
    double nu = 0.0;

    // Throws domain_error outside the admissible window:
    // J needs nu > -1, J' needs nu > 0, DINI needs nu > -1 and gamma+nu >= 0.
    void validate() const;

    double value(double x) const;
    double slope(double x) const;
};

ZeroFamily bessel_family(double nu);
ZeroFamily bessel_prime_family(double nu);
ZeroFamily dini_family(double gamma, double nu);

struct ZeroTable {
    ZeroFamily family;
    std::vector<double> zeros;      // zeros[n-1] is the n-th positive zero
    std::vector<double> residuals;  // |family(zero)|
    std::vector<double> slopes;     // |family'(zero)|

    std::size_t size() const { return zeros.size(); }
    double zero(int n) const;  // 1-based
};

// Table holding at least `count` zeros. Thread-safe; tables are immutable.
std::shared_ptr<const ZeroTable> zero_table(const ZeroFamily& family, int count);
void clear_zero_cache();

double bessel_zero(double nu, int n);
double bessel_derivative_zero(double nu, int n);
double dini_zero(double gamma, double nu, int n);

// Two-term McMahon asymptotics  beta - c1/beta  for the n-th zero.
struct McMahon {
    double beta;
    double c1;
    double value() const { return beta - c1 / beta; }
};
McMahon mcmahon(const ZeroFamily& family, int n);

} // namespace bessel_radii
