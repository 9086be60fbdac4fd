#include <array>
#include <cstdlib>
#include <cstring>

#include "mrd/error.hpp"
#include "mrd/simd/rank_gf2.hpp"

namespace mrd::simd {

std::uint32_t rank_gf2(std::span<const std::uint32_t> rows) {
    // Basis kept sorted by decreasing leading bit, so min(x, x ^ b) clears b's leading bit from x.
    std::array<std::uint32_t, 32> basis{};
    std::uint32_t size = 0;
    for (std::uint32_t x : rows) {
        for (std::uint32_t i = 0; i < size && x; ++i) {
            const std::uint32_t y = x ^ basis[i];
            if (y < x) x = y;
        }
        if (!x) continue;
        std::uint32_t pos = size;
        while (pos > 0 && basis[pos - 1] < x) {
            basis[pos] = basis[pos - 1];
            --pos;
        }
        basis[pos] = x;
        if (++size == 32) break;
    }
    return size;
}

namespace detail {

void rank_gf2_batch_scalar(const std::uint32_t* rows, std::size_t count, std::size_t rows_per_matrix,
                           std::uint8_t* ranks) {
    for (std::size_t i = 0; i < count; ++i)
        ranks[i] = static_cast<std::uint8_t>(rank_gf2({rows + i * rows_per_matrix, rows_per_matrix}));
}

} // namespace detail

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(MRD_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* env = std::getenv("MRD_ISA");
        if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
        return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

void rank_gf2_batch(std::span<const std::uint32_t> rows, std::size_t rows_per_matrix, std::uint32_t cols,
                    std::span<std::uint8_t> ranks, Isa isa) {
    require(rows_per_matrix >= 1 && rows_per_matrix <= kMaxPackedRows && cols <= kMaxPackedCols,
            ErrorCode::ShapeMismatch, "packed GF(2) matrix too large");
    require(rows.size() == ranks.size() * rows_per_matrix, ErrorCode::ShapeMismatch, "batch size mismatch");
    if (isa == Isa::avx2 && isa_supported(Isa::avx2)) {
#if defined(MRD_HAVE_AVX2_KERNEL)
        detail::rank_gf2_batch_avx2(rows.data(), ranks.size(), rows_per_matrix, cols, ranks.data());
        return;
#endif
    }
    detail::rank_gf2_batch_scalar(rows.data(), ranks.size(), rows_per_matrix, ranks.data());
}

void rank_gf2_batch(std::span<const std::uint32_t> rows, std::size_t rows_per_matrix, std::uint32_t cols,
                    std::span<std::uint8_t> ranks) {
    rank_gf2_batch(rows, rows_per_matrix, cols, ranks, active_isa());
}

} // namespace mrd::simd
