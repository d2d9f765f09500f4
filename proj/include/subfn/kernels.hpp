#pragma once

#include <cstddef>
#include <functional>

#include "subfn/state.hpp"

// Data-parallel inner loops, each in two variants: an OpenMP kernel and a
// serial reference kept for testing. Both variants produce bit-identical
// results for any thread count: parallelism is over output elements (or
// fixed-size chunks reduced in index order), never over a floating-point
// reduction whose association depends on scheduling.

namespace subfn::kernels {

enum class Exec { serial, parallel };

/// Thread cap from SUBFN_THREADS (0 or unset = OpenMP default). Read once.
int thread_limit();

/// Default execution policy: parallel when OpenMP is compiled in and
/// SUBFN_THREADS != 1.
Exec default_exec();

/// out[i] = fn(i) for i in [0, n).
void map_index_serial(std::size_t n, const std::function<void(std::size_t)>& fn);
void map_index_parallel(std::size_t n, const std::function<void(std::size_t)>& fn);
void map_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec);

/// acc[j] = sum_i w[i] * values[i][j], i ascending. Plain sum up to
/// kahan_threshold atoms, fixed-chunk Kahan beyond it.
inline constexpr std::size_t kahan_threshold = 1000;
inline constexpr std::size_t kahan_chunk = 4096;
void weighted_sum_serial(std::span<const double> w,
                         const std::function<std::span<const double>(std::size_t)>& value,
                         std::span<double> acc);
void weighted_sum_parallel(std::span<const double> w,
                           const std::function<std::span<const double>(std::size_t)>& value,
                           std::span<double> acc);
void weighted_sum(std::span<const double> w,
                  const std::function<std::span<const double>(std::size_t)>& value,
                  std::span<double> acc, Exec exec);

/// 1d convolution with a symmetric kernel k[-K..K] stored as khalf[0..K]
/// (khalf[j] = k[j] = k[-j]), boundary handled by the extension policy.
void convolve_1d_serial(std::span<const double> in, std::span<double> out,
                        std::span<const double> khalf, Extension ext);
void convolve_1d_parallel(std::span<const double> in, std::span<double> out,
                          std::span<const double> khalf, Extension ext);
void convolve_1d(std::span<const double> in, std::span<double> out,
                 std::span<const double> khalf, Extension ext, Exec exec);

}  // namespace subfn::kernels
