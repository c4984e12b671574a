#pragma once

#include <cmath>
#include <complex>

namespace xiforge::detail {

/// Neumaier (improved Kahan) accumulator.
template <class T>
class CompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    T value() const { return sum_ + carry_; }

private:
    T sum_{};
    T carry_{};
};

/// Component-wise compensated accumulation of complex terms; also tracks the
/// sum of term magnitudes, which bounds the rounding error of the result.
template <class T>
class ComplexCompensatedSum {
public:
    void add(std::complex<T> z) {
        re_.add(z.real());
        im_.add(z.imag());
        magnitude_ += std::abs(z);
    }

    std::complex<T> value() const { return {re_.value(), im_.value()}; }
    T magnitude() const { return magnitude_; }

private:
    CompensatedSum<T> re_;
    CompensatedSum<T> im_;
    T magnitude_{};
};

} // namespace xiforge::detail
