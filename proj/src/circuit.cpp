#include "workbench/circuit.hpp"

#include <charconv>
#include <sstream>

namespace wb {

size_t Circuit::add_gate(const Gate& g) {
    size_t idx = gates_.size();
    switch (g.kind) {
        case GateKind::Const:
            if (g.a > 1) throw std::invalid_argument("CONST gate value must be 0 or 1");
            break;
        case GateKind::Input:
            if (g.a >= (uint64_t)input_width_)
                throw std::invalid_argument("INPUT gate index out of range");
            break;
        case GateKind::Not:
            if (g.a >= idx) throw std::invalid_argument("NOT gate forward reference");
            break;
        case GateKind::And:
        case GateKind::Or:
        case GateKind::Xor:
            if (g.a >= idx || g.b >= idx)
                throw std::invalid_argument("binary gate forward reference");
            break;
    }
    gates_.push_back(g);
    return idx;
}

void Circuit::set_outputs(std::vector<uint64_t> refs) {
    if ((int)refs.size() != output_width_)
        throw std::invalid_argument("output ref count must equal output width");
    for (uint64_t r : refs)
        if (r >= gates_.size()) throw std::invalid_argument("output ref out of range");
    outputs_ = std::move(refs);
}

BitVec Circuit::eval(const BitVec& input) const {
    if (input.width() != input_width_)
        throw std::invalid_argument("Circuit::eval: input width mismatch");
    if (outputs_.empty() && output_width_ != 0)
        throw std::logic_error("Circuit::eval: outputs not set");
    std::vector<char> val(gates_.size());
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
            case GateKind::Const: val[i] = (char)g.a; break;
            case GateKind::Input: val[i] = input.bit((int)g.a); break;
            case GateKind::Not: val[i] = !val[g.a]; break;
            case GateKind::And: val[i] = val[g.a] && val[g.b]; break;
            case GateKind::Or: val[i] = val[g.a] || val[g.b]; break;
            case GateKind::Xor: val[i] = val[g.a] != val[g.b]; break;
        }
    }
    BitVec out(output_width_, 0);
    for (int i = 0; i < output_width_; ++i) out.set_bit(i, val[outputs_[i]]);
    return out;
}

std::string Circuit::serialize() const {
    std::ostringstream os;
    os << "circuit " << input_width_ << " " << output_width_ << "\n";
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        os << "g" << i << " = ";
        switch (g.kind) {
            case GateKind::Const: os << "CONST " << g.a; break;
            case GateKind::Input: os << "INPUT " << g.a; break;
            case GateKind::Not: os << "NOT g" << g.a; break;
            case GateKind::And: os << "AND g" << g.a << " g" << g.b; break;
            case GateKind::Or: os << "OR g" << g.a << " g" << g.b; break;
            case GateKind::Xor: os << "XOR g" << g.a << " g" << g.b; break;
        }
        os << "\n";
    }
    os << "out";
    for (uint64_t r : outputs_) os << " g" << r;
    os << "\n";
    return os.str();
}

namespace {

uint64_t parse_u64(const std::string& tok, int line) {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw CircuitParseError(line, "expected a decimal number, got '" + tok + "'");
    return v;
}

uint64_t parse_gate_ref(const std::string& tok, int line, size_t next_index) {
    if (tok.size() < 2 || tok[0] != 'g')
        throw CircuitParseError(line, "expected a gate reference, got '" + tok + "'");
    uint64_t v = parse_u64(tok.substr(1), line);
    if (v >= next_index)
        throw CircuitParseError(line, "forward reference '" + tok + "'");
    return v;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Circuit Circuit::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(is, line)) throw CircuitParseError(1, "empty input");
    ++lineno;
    auto head = split_tokens(line);
    if (head.size() != 3 || head[0] != "circuit")
        throw CircuitParseError(lineno, "expected 'circuit <in> <out>' header");
    uint64_t in_w = parse_u64(head[1], lineno);
    uint64_t out_w = parse_u64(head[2], lineno);
    if (in_w > 4096 || out_w > 4096)
        throw CircuitParseError(lineno, "width too large");
    Circuit c((int)in_w, (int)out_w);

    bool saw_out = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        if (saw_out) throw CircuitParseError(lineno, "content after 'out' line");
        if (toks[0] == "out") {
            std::vector<uint64_t> refs;
            for (size_t i = 1; i < toks.size(); ++i)
                refs.push_back(parse_gate_ref(toks[i], lineno, c.gates_.size()));
            if ((int)refs.size() != c.output_width_)
                throw CircuitParseError(lineno, "output count does not match header");
            c.set_outputs(std::move(refs));
            saw_out = true;
            continue;
        }
        size_t idx = c.gates_.size();
        std::string expect = "g" + std::to_string(idx);
        if (toks[0] != expect)
            throw CircuitParseError(lineno, "expected '" + expect + "', got '" + toks[0] + "'");
        if (toks.size() < 3 || toks[1] != "=")
            throw CircuitParseError(lineno, "expected '=' after gate name");
        const std::string& op = toks[2];
        Gate g{};
        try {
            if (op == "CONST" && toks.size() == 4) {
                g.kind = GateKind::Const;
                g.a = parse_u64(toks[3], lineno);
            } else if (op == "INPUT" && toks.size() == 4) {
                g.kind = GateKind::Input;
                g.a = parse_u64(toks[3], lineno);
            } else if (op == "NOT" && toks.size() == 4) {
                g.kind = GateKind::Not;
                g.a = parse_gate_ref(toks[3], lineno, idx);
            } else if ((op == "AND" || op == "OR" || op == "XOR") && toks.size() == 5) {
                g.kind = op == "AND" ? GateKind::And : op == "OR" ? GateKind::Or : GateKind::Xor;
                g.a = parse_gate_ref(toks[3], lineno, idx);
                g.b = parse_gate_ref(toks[4], lineno, idx);
            } else {
                throw CircuitParseError(lineno, "malformed gate line");
            }
            c.add_gate(g);
        } catch (const std::invalid_argument& e) {
            throw CircuitParseError(lineno, e.what());
        }
    }
    if (!saw_out) throw CircuitParseError(lineno, "missing 'out' line");
    return c;
}

}  // namespace wb
