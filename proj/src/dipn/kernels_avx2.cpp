#include "upn/dipn/kernels.hpp"

#if defined(UPN_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// Compiled without a global -mavx2; each entry point opts in via the target
// attribute and is only reached after a cpuid check.
#define UPN_AVX2 __attribute__((target("avx2")))

namespace upn::dipn::kernels::avx2 {
namespace {

// Counts, needs and caps are all in [0, INT64_MAX], so the signed 64-bit
// compare is exact here.
UPN_AVX2 inline bool row_enabled(const std::int64_t* marking, const std::int64_t* need, const std::int64_t* cap,
                                 std::size_t lanes) {
  __m256i bad = _mm256_setzero_si256();
  for (std::size_t p = 0; p < lanes; p += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(marking + p));
    const __m256i n = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(need + p));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cap + p));
    bad = _mm256_or_si256(bad, _mm256_or_si256(_mm256_cmpgt_epi64(n, m), _mm256_cmpgt_epi64(m, c)));
  }
  return _mm256_testz_si256(bad, bad) != 0;
}

}  // namespace

UPN_AVX2 bool enabled(const DenseNet& net, const std::int64_t* marking, std::size_t t) {
  return row_enabled(marking, net.need_row(t), net.cap_row(t), net.lanes);
}

UPN_AVX2 std::ptrdiff_t first_enabled(const DenseNet& net, const std::int64_t* marking, std::size_t from) {
  const std::size_t lanes = net.lanes;
  if (lanes == 4) {
    // Small nets: keep the marking in a register across rows.
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(marking));
    for (std::size_t t = from; t < net.transitions; ++t) {
      const __m256i n = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(net.need_row(t)));
      const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(net.cap_row(t)));
      const __m256i bad = _mm256_or_si256(_mm256_cmpgt_epi64(n, m), _mm256_cmpgt_epi64(m, c));
      if (_mm256_testz_si256(bad, bad)) return static_cast<std::ptrdiff_t>(t);
    }
    return -1;
  }
  if (lanes == 16) {
    // UPN(14,29) size.
    __m256i m[4];
    for (int i = 0; i < 4; ++i) m[i] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(marking + 4 * i));
    for (std::size_t t = from; t < net.transitions; ++t) {
      const std::int64_t* need = net.need_row(t);
      const std::int64_t* cap = net.cap_row(t);
      __m256i bad = _mm256_setzero_si256();
      for (int i = 0; i < 4; ++i) {
        const __m256i n = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(need + 4 * i));
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cap + 4 * i));
        bad = _mm256_or_si256(bad, _mm256_or_si256(_mm256_cmpgt_epi64(n, m[i]), _mm256_cmpgt_epi64(m[i], c)));
      }
      if (_mm256_testz_si256(bad, bad)) return static_cast<std::ptrdiff_t>(t);
    }
    return -1;
  }
  for (std::size_t t = from; t < net.transitions; ++t)
    if (row_enabled(marking, net.need_row(t), net.cap_row(t), lanes)) return static_cast<std::ptrdiff_t>(t);
  return -1;
}

UPN_AVX2 bool apply(const DenseNet& net, std::int64_t* marking, std::size_t t) {
  const std::int64_t* delta = net.delta_row(t);
  const __m256i limit = _mm256_set1_epi64x(kLimit);
  __m256i over = _mm256_setzero_si256();
  for (std::size_t p = 0; p < net.lanes; p += 4) {
    auto* slot = reinterpret_cast<__m256i*>(marking + p);
    const __m256i m = _mm256_add_epi64(_mm256_loadu_si256(slot),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(delta + p)));
    _mm256_storeu_si256(slot, m);
    over = _mm256_or_si256(over, _mm256_cmpgt_epi64(m, limit));
  }
  return _mm256_testz_si256(over, over) != 0;
}

}  // namespace upn::dipn::kernels::avx2

#endif
