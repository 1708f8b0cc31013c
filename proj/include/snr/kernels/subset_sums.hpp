#pragma once

// Data-parallel census kernels over the 2^n subsets of a weighted alphabet.
//
// Every kernel has a scalar reference version and, on x86-64 builds, an AVX2
// version. The dispatching entry points pick the widest backend the running
// CPU supports; the backends produce identical results.
//
// Callers must ensure sum(|values|) fits in int64_t.

#include <cstdint>
#include <span>
#include <string_view>

namespace snr::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);
bool backend_available(Backend backend);
Backend active_backend();
// Pins the backend (tests, benchmarking). Throws if the CPU lacks it.
void set_backend(Backend backend);
// Restores automatic selection.
void reset_backend();

// sums[mask] = sum of values[b] over the set bits b of mask.
// sums.size() must equal 2^values.size().
void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums);
// Bit i of out is set iff sums[i] >= 0. out.size() must be ceil(sums.size() / 64).
void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out);
std::uint64_t count_nonnegative(std::span<const std::int64_t> sums);

namespace scalar {
void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums);
void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out);
std::uint64_t count_nonnegative(std::span<const std::int64_t> sums);
}  // namespace scalar

#if defined(SNR_WITH_AVX2)
namespace avx2 {
void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums);
void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out);
std::uint64_t count_nonnegative(std::span<const std::int64_t> sums);
}  // namespace avx2
#endif

}  // namespace snr::kernels
