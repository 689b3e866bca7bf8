#pragma once

#include <cmath>
#include <complex>

namespace bessel_radii {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when an incoming term is larger in magnitude than the running sum, which
// happens in alternating series before the terms peak.
template <typename Real>
class compensated_sum {
public:
    void add(Real value)
    {
        const Real t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            comp_ += (sum_ - t) + value;
        else
            comp_ += (value - t) + sum_;
        sum_ = t;
    }

    compensated_sum& operator+=(Real value)
    {
        add(value);
        return *this;
    }

    Real value() const { return sum_ + comp_; }

private:
    Real sum_ = Real{0};
    Real comp_ = Real{0};
};

// Componentwise compensation for complex sums.
template <typename Real>
class compensated_sum<std::complex<Real>> {
public:
    void add(std::complex<Real> value)
    {
        re_.add(value.real());
        im_.add(value.imag());
    }

    compensated_sum& operator+=(std::complex<Real> value)
    {
        add(value);
        return *this;
    }

    std::complex<Real> value() const { return {re_.value(), im_.value()}; }

private:
    compensated_sum<Real> re_;
    compensated_sum<Real> im_;
};

} // namespace bessel_radii
