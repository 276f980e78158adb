#include "simonlab/kernels.hpp"

#include <cmath>

namespace simonlab::kern::detail {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

void hadamard_butterfly_scalar(std::complex<double>* amps, std::size_t count, int bit) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t base = 0; base < count; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            std::complex<double>& a = amps[base + off];
            std::complex<double>& b = amps[base + off + stride];
            const std::complex<double> sum = a + b;
            const std::complex<double> diff = a - b;
            a = sum * kInvSqrt2;
            b = diff * kInvSqrt2;
        }
    }
}

void accumulate_sq_magnitudes_scalar(const std::complex<double>* amps, std::size_t count,
                                     double* out) {
    for (std::size_t k = 0; k < count; ++k) {
        out[k] += amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
    }
}

double sum_sq_magnitudes_scalar(const std::complex<double>* amps, std::size_t count) {
    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        total += amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
    }
    return total;
}

MomentSums weighted_moments_scalar(const double* probs, const double* values, std::size_t count) {
    MomentSums sums;
    for (std::size_t k = 0; k < count; ++k) {
        const double pv = probs[k] * values[k];
        sums.weighted_value += pv;
        sums.weighted_value_sq += pv * values[k];
    }
    return sums;
}

} // namespace simonlab::kern::detail
