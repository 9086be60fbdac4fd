// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>

#include "mrd/simd/rank_gf2.hpp"

namespace mrd::simd::detail {

void rank_gf2_batch_avx2(const std::uint32_t* rows, std::size_t count, std::size_t rows_per_matrix,
                         std::uint32_t cols, std::uint8_t* ranks) {
    const std::size_t R = rows_per_matrix;
    const __m256i stride = _mm256_mullo_epi32(_mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7),
                                              _mm256_set1_epi32(static_cast<int>(R)));
    __m256i reg[kMaxPackedRows];
    alignas(32) std::array<std::int32_t, 8> out;

    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        const std::uint32_t* base = rows + i * R;
        for (std::size_t r = 0; r < R; ++r)
            reg[r] = _mm256_i32gather_epi32(reinterpret_cast<const int*>(base + r), stride, 4);

        __m256i rank = _mm256_setzero_si256();
        for (std::uint32_t c = 0; c < cols; ++c) {
            const __m256i bit = _mm256_set1_epi32(static_cast<int>(1u << c));
            __m256i found = _mm256_setzero_si256();
            __m256i pivot = _mm256_setzero_si256();
            // The first row holding the bit becomes the pivot and is cleared (pivot ^ pivot); every later
            // row holding the bit is reduced by it. Earlier rows cannot hold the bit.
            for (std::size_t r = 0; r < R; ++r) {
                const __m256i has = _mm256_cmpeq_epi32(_mm256_and_si256(reg[r], bit), bit);
                const __m256i take = _mm256_andnot_si256(found, has);
                pivot = _mm256_or_si256(pivot, _mm256_and_si256(reg[r], take));
                found = _mm256_or_si256(found, take);
                reg[r] = _mm256_xor_si256(reg[r], _mm256_and_si256(pivot, has));
            }
            rank = _mm256_sub_epi32(rank, found);
        }
        _mm256_store_si256(reinterpret_cast<__m256i*>(out.data()), rank);
        for (std::size_t k = 0; k < 8; ++k) ranks[i + k] = static_cast<std::uint8_t>(out[k]);
    }
    if (i < count) rank_gf2_batch_scalar(rows + i * R, count - i, R, ranks + i);
}

} // namespace mrd::simd::detail
