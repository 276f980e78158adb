#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simonlab/bits.hpp"
#include "simonlab/rng.hpp"

namespace simonlab {

enum class FunctionKind { OneToOne, TwoToOne };

// Ground-truth class of a function: 2:1 carries the nonzero hidden string s
// with f(x) = f(x ^ s) for all x; 1:1 carries s = 0.
struct FunctionClass {
    FunctionKind kind = FunctionKind::OneToOne;
    BitString hidden;

    bool operator==(const FunctionClass&) const = default;
};

enum class GeneratorMode { Linear, Table };

// An n-bit -> n-bit function, either a GF(2)-linear map (the CNOT-built
// oracles) or an explicit truth table.
class BooleanFunction {
  public:
    static BooleanFunction linear(GF2Matrix m);
    static BooleanFunction table(int n, std::vector<std::uint32_t> entries);

    int n() const { return n_; }
    bool is_linear() const { return matrix_.has_value(); }
    const GF2Matrix& matrix() const;
    const std::vector<std::uint32_t>& table_entries() const;

    BitString evaluate(const BitString& x) const;
    std::uint32_t evaluate_raw(std::uint32_t x) const {
        return matrix_ ? gf2_apply_raw(*matrix_, x) : table_[x];
    }

    // Materialized truth table, valid for both representations.
    std::vector<std::uint32_t> truth_table() const;

  private:
    BooleanFunction() = default;
    int n_ = 0;
    std::optional<GF2Matrix> matrix_;
    std::vector<std::uint32_t> table_;
};

// Uniform over invertible matrices (rejection sampling); truth table is a
// permutation and the hidden string is zero.
BooleanFunction gen_one_to_one(int n, Rng& rng);

// mode == Linear: uniform over rank n-1 matrices, hidden string = the unique
// nonzero nullspace vector. mode == Table: uniform nonzero s, inputs paired
// as {x, x ^ s}, each pair assigned a distinct output without replacement.
BooleanFunction gen_two_to_one(int n, Rng& rng, GeneratorMode mode = GeneratorMode::Linear);

// Brute-force preimage counting; the ground-truth oracle for every test.
// Throws DataError for functions that are neither 1:1 nor Simon-type 2:1.
FunctionClass classify_exact(const BooleanFunction& f);

struct DatasetEntry {
    int id = 0;
    BooleanFunction function;
    FunctionClass label;
};

struct Dataset {
    int n = 0;
    std::uint64_t seed = 0;
    GeneratorMode mode = GeneratorMode::Linear;
    std::vector<DatasetEntry> entries;

    std::vector<const DatasetEntry*> of_kind(FunctionKind kind) const {
        std::vector<const DatasetEntry*> out;
        for (const auto& e : entries) {
            if (e.label.kind == kind) {
                out.push_back(&e);
            }
        }
        return out;
    }
};

// m/2 one-to-one entries followed by m/2 two-to-one entries, all truth
// tables pairwise distinct, reproducible from the seed alone.
Dataset gen_dataset(int n, int m, std::uint64_t seed, GeneratorMode mode = GeneratorMode::Linear);

} // namespace simonlab
