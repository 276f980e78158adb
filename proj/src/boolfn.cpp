#include "simonlab/boolfn.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace simonlab {

BooleanFunction BooleanFunction::linear(GF2Matrix m) {
    BooleanFunction f;
    f.n_ = m.n;
    f.matrix_ = std::move(m);
    return f;
}

BooleanFunction BooleanFunction::table(int n, std::vector<std::uint32_t> entries) {
    if (n < 1 || n > kMaxWidth) {
        throw ContractError("BooleanFunction width out of range");
    }
    if (entries.size() != (std::size_t{1} << n)) {
        throw ContractError("truth table must have exactly 2^n entries");
    }
    for (std::uint32_t v : entries) {
        if (v >> n) {
            throw ContractError("truth table entry exceeds width");
        }
    }
    BooleanFunction f;
    f.n_ = n;
    f.table_ = std::move(entries);
    return f;
}

const GF2Matrix& BooleanFunction::matrix() const {
    if (!matrix_) {
        throw ContractError("function has no linear representation");
    }
    return *matrix_;
}

const std::vector<std::uint32_t>& BooleanFunction::table_entries() const {
    if (matrix_) {
        throw ContractError("function has no table representation");
    }
    return table_;
}

BitString BooleanFunction::evaluate(const BitString& x) const {
    if (x.width != n_) {
        throw ContractError("evaluate: width mismatch");
    }
    return BitString(n_, evaluate_raw(x.value));
}

std::vector<std::uint32_t> BooleanFunction::truth_table() const {
    if (!matrix_) {
        return table_;
    }
    std::vector<std::uint32_t> out(std::size_t{1} << n_);
    for (std::uint32_t x = 0; x < out.size(); ++x) {
        out[x] = gf2_apply_raw(*matrix_, x);
    }
    return out;
}

namespace {

GF2Matrix random_matrix(int n, Rng& rng) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (auto& row : rows) {
        row = static_cast<std::uint32_t>(rng.next_u64()) & mask;
    }
    return GF2Matrix(n, std::move(rows));
}

} // namespace

BooleanFunction gen_one_to_one(int n, Rng& rng) {
    if (n < 1 || n > kMaxWidth) {
        throw ContractError("gen_one_to_one: width out of range");
    }
    for (;;) {
        GF2Matrix m = random_matrix(n, rng);
        if (gf2_rank(m) == n) {
            return BooleanFunction::linear(std::move(m));
        }
    }
}

BooleanFunction gen_two_to_one(int n, Rng& rng, GeneratorMode mode) {
    if (n < 1 || n > kMaxWidth) {
        throw ContractError("gen_two_to_one: width out of range");
    }
    if (mode == GeneratorMode::Linear) {
        for (;;) {
            GF2Matrix m = random_matrix(n, rng);
            if (gf2_rank(m) == n - 1) {
                return BooleanFunction::linear(std::move(m));
            }
        }
    }

    // Table mode: hidden string first, then a random injection from the
    // 2^(n-1) pairs {x, x^s} into the 2^n outputs.
    const std::uint32_t size = 1u << n;
    const std::uint32_t s = 1u + static_cast<std::uint32_t>(rng.next_below(size - 1));
    std::vector<std::uint32_t> outputs(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        outputs[i] = i;
    }
    shuffle(outputs, rng);

    std::vector<std::uint32_t> table(size);
    std::size_t next_output = 0;
    std::vector<bool> seen(size, false);
    for (std::uint32_t x = 0; x < size; ++x) {
        if (seen[x]) {
            continue;
        }
        seen[x] = true;
        seen[x ^ s] = true;
        table[x] = outputs[next_output];
        table[x ^ s] = outputs[next_output];
        ++next_output;
    }
    return BooleanFunction::table(n, std::move(table));
}

FunctionClass classify_exact(const BooleanFunction& f) {
    const int n = f.n();
    const std::uint32_t size = 1u << n;
    std::vector<std::uint32_t> table = f.truth_table();
    std::vector<int> preimages(size, 0);
    for (std::uint32_t x = 0; x < size; ++x) {
        ++preimages[table[x]];
    }

    bool all_one = true;
    bool all_zero_or_two = true;
    for (std::uint32_t y = 0; y < size; ++y) {
        all_one = all_one && preimages[y] == 1;
        all_zero_or_two = all_zero_or_two && (preimages[y] == 0 || preimages[y] == 2);
    }
    if (all_one) {
        return FunctionClass{FunctionKind::OneToOne, BitString(n, 0)};
    }
    if (!all_zero_or_two) {
        throw DataError("unsupported class: function is neither 1:1 nor 2:1");
    }

    // Extract s from the first collision, then confirm it is a global period.
    std::vector<std::uint32_t> first_preimage(size, size);
    std::uint32_t s = 0;
    for (std::uint32_t x = 0; x < size && s == 0; ++x) {
        std::uint32_t y = table[x];
        if (first_preimage[y] == size) {
            first_preimage[y] = x;
        } else {
            s = first_preimage[y] ^ x;
        }
    }
    for (std::uint32_t x = 0; x < size; ++x) {
        if (table[x] != table[x ^ s]) {
            throw DataError("unsupported class: 2:1 collisions lack a single period");
        }
    }
    return FunctionClass{FunctionKind::TwoToOne, BitString(n, s)};
}

Dataset gen_dataset(int n, int m, std::uint64_t seed, GeneratorMode mode) {
    if (m <= 0 || m % 2 != 0) {
        throw DataError("gen_dataset: m must be positive and even");
    }
    constexpr int kMaxRetries = 1000;

    Dataset ds;
    ds.n = n;
    ds.seed = seed;
    ds.mode = mode;
    std::set<std::vector<std::uint32_t>> used_tables;

    for (int id = 0; id < m; ++id) {
        const bool one_to_one = id < m / 2;
        bool placed = false;
        for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
            Rng rng(Rng::derive(seed, (static_cast<std::uint64_t>(id) << 16) | static_cast<std::uint64_t>(attempt)));
            BooleanFunction f = one_to_one ? gen_one_to_one(n, rng) : gen_two_to_one(n, rng, mode);
            std::vector<std::uint32_t> table = f.truth_table();
            if (!used_tables.insert(std::move(table)).second) {
                continue;
            }
            FunctionClass label = classify_exact(f);
            ds.entries.push_back(DatasetEntry{id, std::move(f), std::move(label)});
            placed = true;
        }
        if (!placed) {
            throw DataError("gen_dataset: could not find a distinct function for id " + std::to_string(id));
        }
    }
    return ds;
}

} // namespace simonlab
