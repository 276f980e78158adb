#include "simonlab/bits.hpp"

namespace simonlab {

namespace {

struct Rref {
    std::vector<std::uint32_t> rows; // each pivot column is 1 in its own row only
    std::vector<int> pivot_cols;
};

Rref reduce(const std::vector<std::uint32_t>& input) {
    Rref r;
    for (std::uint32_t row : input) {
        for (std::size_t k = 0; k < r.rows.size(); ++k) {
            if ((row >> r.pivot_cols[k]) & 1u) {
                row ^= r.rows[k];
            }
        }
        if (row == 0) {
            continue;
        }
        int pivot = std::countr_zero(row);
        for (std::size_t k = 0; k < r.rows.size(); ++k) {
            if ((r.rows[k] >> pivot) & 1u) {
                r.rows[k] ^= row;
            }
        }
        r.rows.push_back(row);
        r.pivot_cols.push_back(pivot);
    }
    return r;
}

} // namespace

RankNullspace gf2_rank_nullspace(const GF2Matrix& m) {
    const int n = m.n;
    Rref rref = reduce(m.rows);

    RankNullspace result;
    result.rank = static_cast<int>(rref.rows.size());

    std::uint32_t pivot_mask = 0;
    for (int col : rref.pivot_cols) {
        pivot_mask |= 1u << col;
    }
    // One basis vector per free column: v_free = 1, v_pivot(k) = row_k[free].
    for (int free_col = 0; free_col < n; ++free_col) {
        if ((pivot_mask >> free_col) & 1u) {
            continue;
        }
        std::uint32_t v = 1u << free_col;
        for (std::size_t k = 0; k < rref.rows.size(); ++k) {
            if ((rref.rows[k] >> free_col) & 1u) {
                v |= 1u << rref.pivot_cols[k];
            }
        }
        result.nullspace_basis.emplace_back(n, v);
    }
    return result;
}

int gf2_rank(const GF2Matrix& m) {
    return static_cast<int>(reduce(m.rows).rows.size());
}

BitString gf2_apply(const GF2Matrix& m, const BitString& x) {
    if (x.width != m.n) {
        throw ContractError("gf2_apply: width mismatch");
    }
    return BitString(m.n, gf2_apply_raw(m, x.value));
}

} // namespace simonlab
