#include "bessel_radii/zero_finder.hpp"

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/errors.hpp"
#include "bessel_radii/root_bracket.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace bessel_radii {

namespace {

using std::numbers::pi;

constexpr double scan_step = pi / 8.0;

// zeros of -x J_{nu+1}(x) are those of J_{nu+1}
bool dini_degenerate(const ZeroFamily& f) { return f.kind == ZeroKind::dini && f.gamma + f.nu == 0.0; }

double refine(const ZeroFamily& fam, double lo, double hi)
{
    if (lo == hi)
        return lo;
    return safeguarded_newton([&](double x) { return std::pair{fam.value(x), fam.slope(x)}; }, lo, hi);
}

void record(ZeroTable& t, double x)
{
    t.zeros.push_back(x);
    t.residuals.push_back(std::abs(t.family.value(x)));
    t.slopes.push_back(std::abs(t.family.slope(x)));
}

ZeroTable build_j_table(const ZeroFamily& fam, int count)
{
    ZeroTable t{fam, {}, {}, {}};
    // J_nu > 0 on (0, j_{nu,1}) and j_{nu,1}^2 > 4(nu+1), so the scan can
    // start at sqrt(nu+1) without missing the first zero.
    double x0 = std::min(1.0, std::sqrt(fam.nu + 1.0));
    double f0 = fam.value(x0);
    const double budget = mcmahon(fam, count).beta + 2.0 * pi;
    while (static_cast<int>(t.zeros.size()) < count) {
        const double x1 = x0 + scan_step;
        if (x1 > budget)
            throw convergence_error("bessel_zero: bracket not found for nu=" + std::to_string(fam.nu) +
                                    " n=" + std::to_string(t.zeros.size() + 1));
        const double f1 = fam.value(x1);
        if (f0 == 0.0)
            record(t, x0);
        else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0))
            record(t, refine(fam, x0, x1));
        x0 = x1;
        f0 = f1;
    }
    return t;
}

// Zeros that interlace with those of J_nu: one in each (j_{n-1}, j_n).
ZeroTable build_interlaced_table(const ZeroFamily& fam, int count)
{
    ZeroTable t{fam, {}, {}, {}};
    const auto j = zero_table(bessel_family(fam.nu), count);
    for (int n = 1; n <= count; ++n) {
        const double hi = j->zero(n);
        double lo;
        if (n > 1) {
            lo = j->zero(n - 1);
        } else if (fam.kind == ZeroKind::bessel_j_prime) {
            lo = std::max(fam.nu, 1e-8);
        } else {
            // Dini function is positive near 0+; walk left until it is.
            lo = 0.5 * hi;
            int halvings = 0;
            while (fam.value(lo) <= 0.0) {
                lo *= 0.5;
                if (++halvings > 200)
                    throw convergence_error("dini_zero: left end of the first bracket not found");
            }
        }
        const double flo = fam.value(lo);
        const double fhi = fam.value(hi);
        if (flo != 0.0 && fhi != 0.0 && (flo > 0.0) == (fhi > 0.0))
            throw convergence_error("zero_finder: interlacing bracket has no sign change at n=" + std::to_string(n));
        record(t, refine(fam, lo, hi));
    }
    return t;
}

ZeroTable build_table(const ZeroFamily& fam, int count)
{
    if (fam.kind == ZeroKind::bessel_j)
        return build_j_table(fam, count);
    if (dini_degenerate(fam)) {
        const auto shifted = zero_table(bessel_family(fam.nu + 1.0), count);
        ZeroTable t{fam, {}, {}, {}};
        for (int n = 1; n <= count; ++n)
            record(t, shifted->zero(n));
        return t;
    }
    return build_interlaced_table(fam, count);
}

using CacheKey = std::tuple<int, long long, long long>;

CacheKey key_of(const ZeroFamily& f)
{
    const double g = f.kind == ZeroKind::dini ? f.gamma : 0.0;
    return {static_cast<int>(f.kind), std::llround(g * 1e12), std::llround(f.nu * 1e12)};
}

std::shared_mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const ZeroTable>> cache;

} // namespace

void ZeroFamily::validate() const
{
    if (!std::isfinite(nu) || !std::isfinite(gamma))
        throw domain_error("zero family parameters must be finite");
    switch (kind) {
    case ZeroKind::bessel_j:
        if (!(nu > -1.0))
            throw domain_error("zeros of J_nu require nu > -1, got nu=" + std::to_string(nu));
        break;
    case ZeroKind::bessel_j_prime:
        if (!(nu > 0.0))
            throw domain_error("zeros of J'_nu require nu > 0, got nu=" + std::to_string(nu));
        break;
    case ZeroKind::dini:
        if (!(nu > -1.0))
            throw domain_error("Dini zeros require nu > -1, got nu=" + std::to_string(nu));
        if (gamma + nu < 0.0)
            throw domain_error("Dini function with gamma+nu < 0 has imaginary zeros (gamma=" +
                               std::to_string(gamma) + ", nu=" + std::to_string(nu) + ")");
        break;
    }
}

double ZeroFamily::value(double x) const
{
    switch (kind) {
    case ZeroKind::bessel_j:
        return bessel_j_real(nu, x);
    case ZeroKind::bessel_j_prime:
        return bessel_j_derivative_real(nu, x);
    case ZeroKind::dini:
        return dini(gamma, nu, x);
    }
    return 0.0;
}

double ZeroFamily::slope(double x) const
{
    const double j = bessel_j_real(nu, x);
    const double jp = bessel_j_real(nu + 1.0, x);
    switch (kind) {
    case ZeroKind::bessel_j:
        return (nu / x) * j - jp;
    case ZeroKind::bessel_j_prime: {
        const double d = (nu / x) * j - jp;
        return -d / x - (1.0 - nu * nu / (x * x)) * j;
    }
    case ZeroKind::dini:
        return ((gamma + nu) * nu / x - x) * j - gamma * jp;
    }
    return 0.0;
}

ZeroFamily bessel_family(double nu) { return {ZeroKind::bessel_j, 0.0, nu}; }
ZeroFamily bessel_prime_family(double nu) { return {ZeroKind::bessel_j_prime, 0.0, nu}; }
ZeroFamily dini_family(double gamma, double nu) { return {ZeroKind::dini, gamma, nu}; }

double ZeroTable::zero(int n) const
{
    if (n < 1 || static_cast<std::size_t>(n) > zeros.size())
        throw domain_error("zero index " + std::to_string(n) + " outside table of size " +
                           std::to_string(zeros.size()));
    return zeros[static_cast<std::size_t>(n - 1)];
}

std::shared_ptr<const ZeroTable> zero_table(const ZeroFamily& family, int count)
{
    family.validate();
    if (count < 1)
        throw domain_error("zero count must be at least 1");
    const CacheKey key = key_of(family);
    {
        std::shared_lock lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end() && it->second->size() >= static_cast<std::size_t>(count))
            return it->second;
    }
    // Built outside the lock: concurrent builders of one key only duplicate work.
    auto table = std::make_shared<const ZeroTable>(build_table(family, count));
    std::unique_lock lock(cache_mutex);
    auto& slot = cache[key];
    if (!slot || slot->size() < table->size())
        slot = table;
    return slot;
}

void clear_zero_cache()
{
    std::unique_lock lock(cache_mutex);
    cache.clear();
}

double bessel_zero(double nu, int n) { return zero_table(bessel_family(nu), n)->zero(n); }

double bessel_derivative_zero(double nu, int n) { return zero_table(bessel_prime_family(nu), n)->zero(n); }

double dini_zero(double gamma, double nu, int n) { return zero_table(dini_family(gamma, nu), n)->zero(n); }

McMahon mcmahon(const ZeroFamily& family, int n)
{
    const double mu = 4.0 * family.nu * family.nu;
    const double k = static_cast<double>(n);
    if (family.kind == ZeroKind::bessel_j || dini_degenerate(family)) {
        const double nu = dini_degenerate(family) ? family.nu + 1.0 : family.nu;
        const double m = 4.0 * nu * nu;
        return {(k + nu / 2.0 - 0.25) * pi, (m - 1.0) / 8.0};
    }
    const double beta = (k + family.nu / 2.0 - 0.75) * pi;
    const double g = family.kind == ZeroKind::dini ? family.gamma : 0.0;
    return {beta, (mu + 3.0 - 8.0 * g) / 8.0};
}

} // namespace bessel_radii
