#include <atomic>
#include <stdexcept>

#include "snr/errors.hpp"
#include "snr/kernels/subset_sums.hpp"

namespace snr::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(SNR_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

void require_shape(std::size_t values, std::size_t sums) {
  if (values >= 63 || sums != (std::size_t{1} << values)) {
    throw DomainError("subset_sums: output must hold 2^n entries");
  }
}

}  // namespace

std::string_view to_string(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend backend) { return backend == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) throw DomainError("kernel backend not supported on this CPU");
  current().store(backend, std::memory_order_relaxed);
}

void reset_backend() { current().store(detect(), std::memory_order_relaxed); }

void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums) {
  require_shape(values.size(), sums.size());
#if defined(SNR_WITH_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::subset_sums(values, sums);
#endif
  scalar::subset_sums(values, sums);
}

void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out) {
  if (out.size() != (sums.size() + 63) / 64) throw DomainError("nonnegative_bits: output size mismatch");
#if defined(SNR_WITH_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::nonnegative_bits(sums, out);
#endif
  scalar::nonnegative_bits(sums, out);
}

std::uint64_t count_nonnegative(std::span<const std::int64_t> sums) {
#if defined(SNR_WITH_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::count_nonnegative(sums);
#endif
  return scalar::count_nonnegative(sums);
}

}  // namespace snr::kernels
