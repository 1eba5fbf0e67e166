#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include <omp.h>

namespace qseries::kernels {

/// Below this output length the OpenMP kernel is not worth its fork/join.
inline constexpr std::size_t kParallelThreshold = 96;

namespace detail {

template <class R>
std::vector<std::size_t> nonzero_indices(std::span<const R> a) {
  std::vector<std::size_t> idx;
  idx.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i])) {
      idx.push_back(i);
    }
  }
  return idx;
}

}  // namespace detail

/// Reference kernel: out[k] = sum_{i+j=k} a[i]*b[j] for k < n.
template <class R>
std::vector<R> convolve_serial(std::span<const R> a, std::span<const R> b, std::size_t n) {
  std::vector<R> out(n, R{});
  for (std::size_t i : detail::nonzero_indices(a)) {
    if (i >= n) {
      break;
    }
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (!is_zero(b[j])) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

/// Same result as convolve_serial; each output coefficient is owned by one
/// thread, so no reduction is needed. Later coefficients cost more, hence
/// dynamic scheduling.
template <class R>
std::vector<R> convolve_omp(std::span<const R> a, std::span<const R> b, std::size_t n) {
  std::vector<R> out(n, R{});
  const auto idx = detail::nonzero_indices(a);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < count; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    R acc{};
    for (std::size_t i : idx) {
      if (i > uk) {
        break;
      }
      const std::size_t j = uk - i;
      if (j < b.size() && !is_zero(b[j])) {
        acc += a[i] * b[j];
      }
    }
    out[uk] = std::move(acc);
  }
  return out;
}

template <class R>
std::vector<R> convolve(std::span<const R> a, std::span<const R> b, std::size_t n) {
  if (n >= kParallelThreshold && omp_get_max_threads() > 1 && !omp_in_parallel()) {
    return convolve_omp(a, b, n);
  }
  return convolve_serial(a, b, n);
}

}  // namespace qseries::kernels
