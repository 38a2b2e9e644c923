#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "workbench/bitvec.hpp"

namespace wb {

enum class GateKind { Const, Input, Not, And, Or, Xor };

struct Gate {
    GateKind kind;
    uint64_t a = 0;  // Const: the bit value; Input: input bit index; else: gate ref
    uint64_t b = 0;  // second gate ref for And/Or/Xor
};

/// Thrown by Circuit::parse with a 1-based line number and offending token.
struct CircuitParseError : std::runtime_error {
    int line;
    CircuitParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

/// Gate DAG in topological order: gate i may only reference gates < i.
class Circuit {
public:
    Circuit() = default;
    Circuit(int input_width, int output_width)
        : input_width_(input_width), output_width_(output_width) {}

    int input_width() const { return input_width_; }
    int output_width() const { return output_width_; }
    size_t gate_count() const { return gates_.size(); }

    /// Appends a gate, returns its index. References must point at earlier gates.
    size_t add_gate(const Gate& g);

    /// Declares the output bits, least significant first.
    void set_outputs(std::vector<uint64_t> refs);

    BitVec eval(const BitVec& input) const;

    /// Canonical text form, byte-stable: header, gate lines, output line.
    std::string serialize() const;
    static Circuit parse(const std::string& text);

private:
    int input_width_ = 0;
    int output_width_ = 0;
    std::vector<Gate> gates_;
    std::vector<uint64_t> outputs_;
};

}  // namespace wb
