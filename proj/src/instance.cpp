#include "workbench/instance.hpp"

namespace wb {

namespace {

struct KindName {
    std::string operator()(const CollisionInstance&) { return "collision"; }
    std::string operator()(const WeakCollisionInstance&) { return "weak_collision"; }
    std::string operator()(const LongChoiceInstance&) { return "long_choice"; }
    std::string operator()(const ShortChoiceInstance&) { return "short_choice"; }
    std::string operator()(const Ramsey2Instance&) { return "ramsey2"; }
    std::string operator()(const RamseyRInstance&) { return "ramsey_r"; }
    std::string operator()(const SunflowerInstance&) { return "sunflower"; }
    std::string operator()(const KonigInstance&) { return "konig"; }
    std::string operator()(const EKRInstance&) { return "ekr"; }
    std::string operator()(const BadColoringInstance&) { return "bad_coloring"; }
    std::string operator()(const TuranInstance&) { return "turan"; }
    std::string operator()(const BadKSetInstance&) { return "bad_k_set"; }
    std::string operator()(const EmptyInstance&) { return "empty"; }
    std::string operator()(const WeakSchurInstance&) { return "weak_schur"; }
};

void want(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("instance check failed: " + what);
}

void want_widths(const Function& f, int in_w, int out_w, const std::string& name) {
    want(f.input_width() == in_w,
         name + " input width is " + std::to_string(f.input_width()) + ", want " +
             std::to_string(in_w));
    want(f.output_width() == out_w,
         name + " output width is " + std::to_string(f.output_width()) + ", want " +
             std::to_string(out_w));
}

void check_predicates(const std::vector<Function>& preds, int n) {
    want((int)preds.size() == n - 1,
         "predicate count " + std::to_string(preds.size()) + ", want n-1");
    for (size_t i = 0; i < preds.size(); ++i)
        want_widths(preds[i], (int)(i + 2) * n, 1, "P_" + std::to_string(i));
}

struct Checker {
    void operator()(const CollisionInstance& s) {
        want(s.n >= 1 && s.n <= 63, "n out of range");
        want_widths(s.f, s.n, s.n, "f");
    }
    void operator()(const WeakCollisionInstance& s) {
        want(s.m >= 1 && s.m < s.n, "need 1 <= m < n");
        want_widths(s.f, s.n, s.m, "f");
    }
    void operator()(const LongChoiceInstance& s) {
        want(s.n >= 1 && s.n <= 63, "n out of range");
        check_predicates(s.predicates, s.n);
        if (s.variant == LcVariant::Binary) {
            want(s.binary_deps.size() == s.predicates.size(),
                 "binary dependence index count");
            for (size_t i = 0; i < s.binary_deps.size(); ++i)
                want(s.binary_deps[i] >= 0 && s.binary_deps[i] <= (int)i,
                     "binary dependence index k_" + std::to_string(i));
        }
        if (s.variant == LcVariant::Constrained)
            want(s.a0 < (uint64_t{1} << s.n), "a0 out of universe");
    }
    void operator()(const ShortChoiceInstance& s) {
        want(s.n >= 2 && s.n <= 63, "n out of range");
        check_predicates(s.predicates, s.n);
    }
    void operator()(const Ramsey2Instance& s) {
        want(s.n >= 1, "n out of range");
        want_widths(s.edge, 4 * s.n, 1, "edge");
    }
    void operator()(const RamseyRInstance& s) {
        want(s.r >= 2 && (s.r & (s.r - 1)) == 0, "r must be a power of two >= 2");
        want(s.n >= 1 && s.node_width >= 1, "sizes out of range");
        int def = s.r * s.n * ceil_log2((uint64_t)s.r);
        want(s.node_width <= def, "node_width above the default r*n*log2(r)");
        want(s.node_width == def || s.weak_guarantee,
             "capped node_width requires the weak_guarantee flag");
        want_widths(s.color, 2 * s.node_width, s.color_width(), "color");
    }
    void operator()(const SunflowerInstance& s) {
        want(s.k >= 2, "k must be >= 2");
        want(s.index_width >= 1 && s.element_width >= 1, "widths out of range");
        want_widths(s.F, s.index_width, s.k * s.element_width, "F");
    }
    void operator()(const KonigInstance& s) {
        want(s.n >= 1 && s.n <= 63, "n out of range");
        want(s.root < (uint64_t{1} << s.n), "root out of range");
        want_widths(s.parent, s.n, s.n + 1, "parent");
    }
    void operator()(const EKRInstance& s) {
        want(s.n >= 1 && s.n <= 63, "n out of range");
        want_widths(s.F, s.n, 2 * s.n, "F");
    }
    void operator()(const BadColoringInstance& s) {
        want(s.k >= 2 && s.n >= 1, "sizes out of range");
        want_widths(s.E, s.edge_index_width(), 2 * s.node_enc_width(), "E");
        want_widths(s.color, s.node_enc_width(), s.color_width(), "C");
    }
    void operator()(const TuranInstance& s) {
        want(s.k >= 2 && s.n >= 1, "sizes out of range");
        want_widths(s.E, s.edge_index_width(), 2 * s.node_enc_width(), "E");
    }
    void operator()(const BadKSetInstance& s) {
        want(s.k >= 1 && s.n >= 1, "sizes out of range");
        want_widths(s.F, s.index_width(), s.k * s.node_enc_width(), "F");
        want_widths(s.color, s.node_enc_width(), s.color_width(), "C");
    }
    void operator()(const EmptyInstance& s) {
        want(s.n >= 2 && s.n <= 63, "n out of range");
        want_widths(s.f, s.n, s.n, "f");
    }
    void operator()(const WeakSchurInstance& s) {
        want(s.r >= 1 && s.width >= 1, "sizes out of range");
        want_widths(s.color, s.width, s.color_width(), "C");
    }
};

}  // namespace

std::string instance_kind(const Instance& inst) {
    return std::visit(KindName{}, inst);
}

void check_instance(const Instance& inst) {
    std::visit(Checker{}, inst);
}

}  // namespace wb
