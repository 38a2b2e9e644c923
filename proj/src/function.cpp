#include "workbench/function.hpp"

namespace wb {

Function::Function(TruthTable t)
    : in_w_(t.input_width), out_w_(t.output_width) {
    if (t.input_width > kMaxTableInputWidth)
        throw std::invalid_argument("TruthTable input width exceeds " +
                                    std::to_string(kMaxTableInputWidth));
    if (t.input_width < 0 || t.output_width < 0 || t.output_width > 64)
        throw std::invalid_argument("TruthTable widths out of range");
    if (t.rows.size() != (uint64_t{1} << t.input_width))
        throw std::invalid_argument("TruthTable row count must be 2^input_width");
    for (uint64_t r : t.rows)
        if (t.output_width < 64 && (r >> t.output_width) != 0)
            throw std::invalid_argument("TruthTable row does not fit output width");
    body_ = std::move(t);
}

BitVec Function::eval(const BitVec& x) const {
    if (x.width() != in_w_)
        throw std::invalid_argument("Function::eval: input width mismatch (got " +
                                    std::to_string(x.width()) + ", want " +
                                    std::to_string(in_w_) + ")");
    if (const Circuit* c = std::get_if<Circuit>(&body_)) return c->eval(x);
    if (const TruthTable* t = std::get_if<TruthTable>(&body_))
        return BitVec(out_w_, t->rows[x.to_u64()]);
    const Wrapper& w = std::get<Wrapper>(body_);
    BitVec out = w.fn(x);
    if (out.width() != out_w_)
        throw std::logic_error("Function::eval: wrapper produced wrong output width");
    return out;
}

Function from_truth_table(int input_width, int output_width,
                          std::vector<uint64_t> rows) {
    return Function(TruthTable{input_width, output_width, std::move(rows)});
}

Function compose(const Function& outer, const Function& inner) {
    if (inner.output_width() != outer.input_width())
        throw std::invalid_argument("compose: width mismatch (inner out " +
                                    std::to_string(inner.output_width()) +
                                    ", outer in " +
                                    std::to_string(outer.input_width()) + ")");
    auto o = std::make_shared<Function>(outer);
    auto i = std::make_shared<Function>(inner);
    return Function(inner.input_width(), outer.output_width(),
                    Wrapper{[o, i](const BitVec& x) { return o->eval(i->eval(x)); }});
}

Function constant_function(int input_width, int output_width, uint64_t value) {
    BitVec v(output_width, value);
    return Function(input_width, output_width,
                    Wrapper{[v](const BitVec&) { return v; }});
}

Function identity_function(int width) {
    return Function(width, width, Wrapper{[](const BitVec& x) { return x; }});
}

BitVec pack_args(std::span<const uint64_t> prefix, uint64_t x, int width) {
    std::vector<BitVec> parts;
    parts.reserve(prefix.size() + 1);
    for (uint64_t a : prefix) parts.emplace_back(width, a);
    parts.emplace_back(width, x);
    return BitVec::concat(parts);
}

std::vector<uint64_t> unpack_args(const BitVec& v, int count, int width) {
    std::vector<uint64_t> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(v.slice(i * width, width).to_u64());
    return out;
}

}  // namespace wb
