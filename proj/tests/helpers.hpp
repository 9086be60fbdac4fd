#pragma once

// Small conversions between oracle data (bit masks) and library objects.

#include <vector>

#include "mrd/code.hpp"
#include "mrd/field.hpp"
#include "mrd/matrix.hpp"
#include "oracles.hpp"

namespace helpers {

inline mrd::FieldPtr gf2() { return mrd::Field::make(2, 1); }

/// Row-major bit k of `bits` is entry k.
inline mrd::Matrix from_mask(const mrd::FieldPtr& f, std::size_t rows, std::size_t cols, unsigned long long bits) {
    mrd::Matrix x(f, rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) x(k / cols, k % cols) = (bits >> k) & 1;
    return x;
}

inline unsigned long long to_mask(const mrd::Matrix& x) {
    unsigned long long bits = 0;
    for (std::size_t k = 0; k < x.rows() * x.cols(); ++k)
        if (x.entries()[k]) bits |= 1ull << k;
    return bits;
}

/// All 16 matrices of B_2(2,2).
inline std::vector<mrd::Matrix> all_b222(const mrd::FieldPtr& f) {
    std::vector<mrd::Matrix> out;
    for (unsigned b = 0; b < 16; ++b) out.push_back(from_mask(f, 2, 2, b));
    return out;
}

/// The brute-force list of MRD codes in B_2(2,2), d = 2, as explicit codes.
inline std::vector<mrd::RankCode> oracle_mrd_b222(const mrd::FieldPtr& f) {
    std::vector<mrd::RankCode> out;
    for (const auto& c : oracle::all_mrd_b2_2_2()) {
        std::vector<mrd::Matrix> words;
        for (unsigned b : c) words.push_back(from_mask(f, 2, 2, b));
        out.push_back(mrd::RankCode::explicit_set(f, 2, 2, 2, std::move(words)));
    }
    return out;
}

} // namespace helpers
