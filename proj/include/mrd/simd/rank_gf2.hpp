#pragma once

// Rank of small bit-packed GF(2) matrices, in batches.
//
// A matrix is stored as `rows_per_matrix` consecutive 32-bit words, one per row, with column j in bit j.
// Batches are laid out matrix after matrix. The scalar kernel is the reference; the AVX2 kernel runs eight
// matrices per register with a branch-free column sweep and must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mrd::simd {

enum class Isa { scalar, avx2 };

inline constexpr std::size_t kMaxPackedRows = 32;
inline constexpr std::uint32_t kMaxPackedCols = 32;

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Best supported ISA; the environment variable MRD_ISA=scalar forces the reference path.
Isa active_isa();

/// Rank of one packed matrix (reference elimination).
std::uint32_t rank_gf2(std::span<const std::uint32_t> rows);

/// ranks[i] = rank of matrix i. rows.size() must equal ranks.size() * rows_per_matrix; cols bounds the
/// bits that may be set.
void rank_gf2_batch(std::span<const std::uint32_t> rows, std::size_t rows_per_matrix, std::uint32_t cols,
                    std::span<std::uint8_t> ranks, Isa isa);
void rank_gf2_batch(std::span<const std::uint32_t> rows, std::size_t rows_per_matrix, std::uint32_t cols,
                    std::span<std::uint8_t> ranks);

namespace detail {
void rank_gf2_batch_scalar(const std::uint32_t* rows, std::size_t count, std::size_t rows_per_matrix,
                           std::uint8_t* ranks);
void rank_gf2_batch_avx2(const std::uint32_t* rows, std::size_t count, std::size_t rows_per_matrix,
                         std::uint32_t cols, std::uint8_t* ranks);
} // namespace detail

} // namespace mrd::simd
