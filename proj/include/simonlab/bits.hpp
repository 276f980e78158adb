#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "simonlab/errors.hpp"

namespace simonlab {

inline constexpr int kMaxWidth = 16;

// An n-bit string packed into a word, bit 0 = least significant.
struct BitString {
    int width = 0;
    std::uint32_t value = 0;

    BitString() = default;
    BitString(int w, std::uint32_t v) : width(w), value(v) {
        if (w < 1 || w > kMaxWidth) {
            throw ContractError("BitString width out of range: " + std::to_string(w));
        }
        if (v >> w) {
            throw ContractError("BitString value does not fit in width");
        }
    }

    bool bit(int i) const { return (value >> i) & 1u; }
    bool is_zero() const { return value == 0; }

    BitString operator^(const BitString& other) const {
        require_same_width(other);
        return BitString(width, value ^ other.value);
    }

    // Inner product mod 2.
    int dot(const BitString& other) const {
        require_same_width(other);
        return std::popcount(value & other.value) & 1;
    }

    bool operator==(const BitString& other) const = default;

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(width), '0');
        for (int i = 0; i < width; ++i) {
            if (bit(i)) {
                s[static_cast<std::size_t>(width - 1 - i)] = '1';
            }
        }
        return s;
    }

    void require_same_width(const BitString& other) const {
        if (width != other.width) {
            throw ContractError("BitString width mismatch");
        }
    }
};

inline int parity(std::uint32_t v) { return std::popcount(v) & 1; }

// Square matrix over GF(2). rows[i] is the bitmask of columns with a 1 in
// row i, so (M x)_i = parity(rows[i] & x).
struct GF2Matrix {
    int n = 0;
    std::vector<std::uint32_t> rows;

    GF2Matrix() = default;
    GF2Matrix(int dim, std::vector<std::uint32_t> r) : n(dim), rows(std::move(r)) {
        if (dim < 1 || dim > kMaxWidth) {
            throw ContractError("GF2Matrix dimension out of range");
        }
        if (rows.size() != static_cast<std::size_t>(dim)) {
            throw ContractError("GF2Matrix row count != dimension");
        }
        for (std::uint32_t row : rows) {
            if (row >> dim) {
                throw ContractError("GF2Matrix row has bits beyond dimension");
            }
        }
    }

    static GF2Matrix identity(int dim) {
        std::vector<std::uint32_t> r(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            r[static_cast<std::size_t>(i)] = 1u << i;
        }
        return GF2Matrix(dim, std::move(r));
    }

    static GF2Matrix zero(int dim) {
        return GF2Matrix(dim, std::vector<std::uint32_t>(static_cast<std::size_t>(dim), 0u));
    }

    bool get(int row, int col) const { return (rows[static_cast<std::size_t>(row)] >> col) & 1u; }

    bool operator==(const GF2Matrix& other) const = default;
};

struct RankNullspace {
    int rank = 0;
    std::vector<BitString> nullspace_basis;
};

// Gaussian elimination over GF(2). The nullspace basis vectors v satisfy
// M v = 0 and are linearly independent; rank + basis size = n.
RankNullspace gf2_rank_nullspace(const GF2Matrix& m);

int gf2_rank(const GF2Matrix& m);

BitString gf2_apply(const GF2Matrix& m, const BitString& x);

// Raw-word variant for hot loops; caller guarantees x fits.
inline std::uint32_t gf2_apply_raw(const GF2Matrix& m, std::uint32_t x) {
    std::uint32_t out = 0;
    for (int i = 0; i < m.n; ++i) {
        out |= static_cast<std::uint32_t>(parity(m.rows[static_cast<std::size_t>(i)] & x)) << i;
    }
    return out;
}

} // namespace simonlab
