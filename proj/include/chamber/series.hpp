#pragma once

#include <vector>

#include "chamber/numbers.hpp"

namespace chamber {

// Truncated formal power series with exact rational coefficients,
// c_0 + c_1 x + ... + c_N x^N.  Products and reciprocals truncate at the
// common order.  Everything is exact; a non-integral value where an integer
// is expected signals an arithmetic bug upstream and throws.
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {}

    static PowerSeries constant(const Rat& value, int order);
    // e^{ax}, cos(ax), sin(ax), cosh(ax) for integer a
    static PowerSeries exp_x(int order, int scale = 1);
    static PowerSeries cos_x(int order, int scale = 1);
    static PowerSeries sin_x(int order, int scale = 1);
    static PowerSeries cosh_x(int order, int scale = 1);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    Rat& coeff(int k) { return c_.at(static_cast<size_t>(k)); }

    PowerSeries operator+(const PowerSeries& rhs) const;
    PowerSeries operator-(const PowerSeries& rhs) const;
    PowerSeries operator*(const PowerSeries& rhs) const;

    // Multiplicative inverse; requires a nonzero constant term.
    PowerSeries reciprocal() const;

    // The integers n! * c_n.  Throws std::runtime_error if any of them is
    // not an integer.
    std::vector<Int> egf_integer_coeffs() const;

private:
    std::vector<Rat> c_;
};

}  // namespace chamber
