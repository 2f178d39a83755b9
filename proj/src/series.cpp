#include "chamber/series.hpp"

#include <stdexcept>

namespace chamber {

PowerSeries PowerSeries::constant(const Rat& value, int order) {
    PowerSeries s(order);
    s.c_[0] = value;
    return s;
}

PowerSeries PowerSeries::exp_x(int order, int scale) {
    PowerSeries s(order);
    Rat term = 1;
    s.c_[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= scale;
        term /= k;
        s.c_[static_cast<size_t>(k)] = term;
    }
    return s;
}

PowerSeries PowerSeries::cos_x(int order, int scale) {
    PowerSeries s(order);
    Rat term = 1;
    s.c_[0] = term;
    for (int k = 2; k <= order; k += 2) {
        term *= scale;
        term *= scale;
        term /= (k - 1) * k;
        term = -term;
        s.c_[static_cast<size_t>(k)] = term;
    }
    return s;
}

PowerSeries PowerSeries::sin_x(int order, int scale) {
    PowerSeries s(order);
    if (order < 1) return s;
    Rat term = scale;
    s.c_[1] = term;
    for (int k = 3; k <= order; k += 2) {
        term *= scale;
        term *= scale;
        term /= (k - 1) * k;
        term = -term;
        s.c_[static_cast<size_t>(k)] = term;
    }
    return s;
}

PowerSeries PowerSeries::cosh_x(int order, int scale) {
    PowerSeries s(order);
    Rat term = 1;
    s.c_[0] = term;
    for (int k = 2; k <= order; k += 2) {
        term *= scale;
        term *= scale;
        term /= (k - 1) * k;
        s.c_[static_cast<size_t>(k)] = term;
    }
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    PowerSeries s(order());
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] + rhs.c_[k];
    return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    PowerSeries s(order());
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] - rhs.c_[k];
    return s;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
    if (order() != rhs.order()) throw std::invalid_argument("series order mismatch");
    PowerSeries s(order());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; i + j < c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            s.c_[i + j] += c_[i] * rhs.c_[j];
        }
    }
    return s;
}

PowerSeries PowerSeries::reciprocal() const {
    if (c_[0] == 0) throw std::invalid_argument("reciprocal of series with zero constant term");
    PowerSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (size_t n = 1; n < c_.size(); ++n) {
        Rat acc = 0;
        for (size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -acc / c_[0];
    }
    return r;
}

std::vector<Int> PowerSeries::egf_integer_coeffs() const {
    std::vector<Int> out;
    out.reserve(c_.size());
    Int fact = 1;
    for (size_t n = 0; n < c_.size(); ++n) {
        if (n > 0) fact *= static_cast<int>(n);
        Rat v = c_[n] * fact;
        if (denominator(v) != 1)
            throw std::runtime_error("EGF coefficient " + std::to_string(n) + " is not an integer");
        out.push_back(numerator(v));
    }
    return out;
}

}  // namespace chamber
