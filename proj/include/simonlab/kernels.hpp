#pragma once

#include <complex>
#include <cstddef>
#include <optional>

namespace simonlab::kern {

// Data-parallel inner loops of the simulator. Scalar implementations are
// the reference; an AVX2 variant of each is selected at runtime on CPUs
// that support it (other ISAs fall back to scalar). The pairs are
// equivalence-tested against each other in tests/test_kernels.cpp.

enum class SimdLevel { Scalar, Avx2 };

// Level in use after CPU probing and the SIMONLAB_SIMD env override
// (values: "scalar", "avx2", "auto").
SimdLevel active_level();

// Test hook: pin a level, or nullopt to return to auto detection.
// Throws ContractError if the CPU cannot run the requested level.
void force_level(std::optional<SimdLevel> level);

bool cpu_supports_avx2();

// In-place Hadamard butterfly on the given qubit bit: for every index pair
// (i, j = i | 1<<bit), (a_i, a_j) <- ((a_i + a_j), (a_i - a_j)) / sqrt(2).
// count is the total number of amplitudes (a power of two > 1<<bit).
void hadamard_butterfly(std::complex<double>* amps, std::size_t count, int bit);

// out[k] += |amps[k]|^2
void accumulate_sq_magnitudes(const std::complex<double>* amps, std::size_t count, double* out);

double sum_sq_magnitudes(const std::complex<double>* amps, std::size_t count);

struct MomentSums {
    double weighted_value = 0.0;    // sum_k probs[k] * values[k]
    double weighted_value_sq = 0.0; // sum_k probs[k] * values[k]^2
};

MomentSums weighted_moments(const double* probs, const double* values, std::size_t count);

namespace detail {

// Reference kernels, directly callable by the equivalence tests.
void hadamard_butterfly_scalar(std::complex<double>* amps, std::size_t count, int bit);
void accumulate_sq_magnitudes_scalar(const std::complex<double>* amps, std::size_t count,
                                     double* out);
double sum_sq_magnitudes_scalar(const std::complex<double>* amps, std::size_t count);
MomentSums weighted_moments_scalar(const double* probs, const double* values, std::size_t count);

#if defined(SIMONLAB_HAVE_AVX2)
void hadamard_butterfly_avx2(std::complex<double>* amps, std::size_t count, int bit);
void accumulate_sq_magnitudes_avx2(const std::complex<double>* amps, std::size_t count,
                                   double* out);
double sum_sq_magnitudes_avx2(const std::complex<double>* amps, std::size_t count);
MomentSums weighted_moments_avx2(const double* probs, const double* values, std::size_t count);
#endif

} // namespace detail

} // namespace simonlab::kern
