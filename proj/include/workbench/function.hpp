#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "workbench/circuit.hpp"

namespace wb {

/// Explicit value table. Row x holds the output for input value x.
/// Kept below 2^20 rows so tables stay desk-sized.
struct TruthTable {
    int input_width = 0;
    int output_width = 0;
    std::vector<uint64_t> rows;
};

inline constexpr int kMaxTableInputWidth = 20;

/// Opaque glue body. The callable must be pure and deterministic.
struct Wrapper {
    std::function<BitVec(const BitVec&)> fn;
};

/// A total boolean function with declared input/output widths. The body is a
/// circuit, an explicit table, or wrapper glue produced by composition.
class Function {
public:
    Function() = default;

    Function(Circuit c)
        : in_w_(c.input_width()), out_w_(c.output_width()), body_(std::move(c)) {}

    Function(TruthTable t);

    Function(int input_width, int output_width, Wrapper w)
        : in_w_(input_width), out_w_(output_width), body_(std::move(w)) {}

    int input_width() const { return in_w_; }
    int output_width() const { return out_w_; }

    bool is_circuit() const { return std::holds_alternative<Circuit>(body_); }
    bool is_table() const { return std::holds_alternative<TruthTable>(body_); }
    bool is_wrapper() const { return std::holds_alternative<Wrapper>(body_); }
    const Circuit& circuit() const { return std::get<Circuit>(body_); }
    const TruthTable& table() const { return std::get<TruthTable>(body_); }

    BitVec eval(const BitVec& x) const;

    /// Convenience for widths <= 64.
    uint64_t eval_u64(uint64_t x) const {
        return eval(BitVec(in_w_, x)).to_u64();
    }

private:
    int in_w_ = 0;
    int out_w_ = 0;
    std::variant<Circuit, TruthTable, Wrapper> body_;
};

/// Builds a table-backed Function from explicit rows.
/// rows.size() must equal 2^input_width and every row must fit output_width.
Function from_truth_table(int input_width, int output_width,
                          std::vector<uint64_t> rows);

/// outer ∘ inner; requires inner.output_width == outer.input_width.
Function compose(const Function& outer, const Function& inner);

Function constant_function(int input_width, int output_width, uint64_t value);
Function identity_function(int width);

/// Packs (prefix..., x), each element `width` bits, prefix[0] least significant.
BitVec pack_args(std::span<const uint64_t> prefix, uint64_t x, int width);

/// Unpacks `count` consecutive width-bit fields starting at field 0.
std::vector<uint64_t> unpack_args(const BitVec& v, int count, int width);

}  // namespace wb
