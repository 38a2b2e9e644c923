#include "workbench/verify.hpp"

#include <algorithm>
#include <set>

namespace wb {

namespace {

std::string u2s(uint64_t v) { return std::to_string(v); }

bool all_distinct(const std::vector<uint64_t>& v) {
    std::set<uint64_t> s(v.begin(), v.end());
    return s.size() == v.size();
}

VerifyReport kind_mismatch(const Instance& inst, const Certificate& cert) {
    return VerifyReport::reject("KIND_MISMATCH",
                                "certificate kind '" + certificate_kind(cert) +
                                    "' is not admissible for instance kind '" +
                                    instance_kind(inst) + "'");
}

bool eval_pred(const Function& p, std::span<const uint64_t> prefix, uint64_t x,
               int n) {
    return p.eval(pack_args(prefix, x, n)).to_u64() == 1;
}

/// Shared sequence checks for Long/Short Choice prefixes; empty reason on pass.
VerifyReport check_choice_prefix(const std::vector<Function>& preds, int n,
                                 const std::vector<uint64_t>& seq,
                                 uint64_t universe_size, int upto) {
    for (uint64_t a : seq)
        if (a >= universe_size)
            return VerifyReport::reject("OUT_OF_RANGE",
                                        "element " + u2s(a) + " outside universe");
    if (!all_distinct(seq))
        return VerifyReport::reject("NOT_DISTINCT", "sequence repeats an element");
    for (int i = 0; i < upto; ++i) {
        std::span<const uint64_t> prefix(seq.data(), (size_t)i + 1);
        bool want = eval_pred(preds[i], prefix, seq[i + 1], n);
        for (size_t j = i + 2; j < seq.size(); ++j)
            if (eval_pred(preds[i], prefix, seq[j], n) != want)
                return VerifyReport::reject(
                    "PREDICATE_MISMATCH",
                    "P_" + std::to_string(i) + " differs between positions " +
                        std::to_string(i + 1) + " and " + std::to_string(j));
    }
    return VerifyReport::accept();
}

std::pair<uint64_t, uint64_t> decode_pair(const BitVec& v, int field_width) {
    return {v.slice(0, field_width).to_u64(),
            v.slice(field_width, field_width).to_u64()};
}

bool same_unordered_pair(std::pair<uint64_t, uint64_t> p,
                         std::pair<uint64_t, uint64_t> q) {
    return (p.first == q.first && p.second == q.second) ||
           (p.first == q.second && p.second == q.first);
}

std::vector<uint64_t> sorted(std::vector<uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

struct Dispatch {
    const Instance& inst;
    const Certificate& cert;

    VerifyReport operator()(const CollisionInstance& s) {
        uint64_t dom = uint64_t{1} << s.n;
        if (const ZeroCert* c = std::get_if<ZeroCert>(&cert)) {
            if (c->x >= dom)
                return VerifyReport::reject("OUT_OF_RANGE", "x=" + u2s(c->x));
            if (s.f.eval_u64(c->x) != 0)
                return VerifyReport::reject("NOT_ZERO",
                                            "f(" + u2s(c->x) + ") is nonzero");
            return VerifyReport::accept();
        }
        if (const CollisionCert* c = std::get_if<CollisionCert>(&cert))
            return check_collision(s.f, dom, *c);
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const WeakCollisionInstance& s) {
        if (const CollisionCert* c = std::get_if<CollisionCert>(&cert))
            return check_collision(s.f, uint64_t{1} << s.n, *c);
        return kind_mismatch(inst, cert);
    }

    static VerifyReport check_collision(const Function& f, uint64_t dom,
                                        const CollisionCert& c) {
        if (c.x >= dom || c.y >= dom)
            return VerifyReport::reject("OUT_OF_RANGE",
                                        "(" + u2s(c.x) + "," + u2s(c.y) + ")");
        if (c.x == c.y)
            return VerifyReport::reject("NOT_DISTINCT", "x equals y");
        if (f.eval_u64(c.x) != f.eval_u64(c.y))
            return VerifyReport::reject("NO_COLLISION",
                                        "f(" + u2s(c.x) + ") != f(" + u2s(c.y) + ")");
        return VerifyReport::accept();
    }

    VerifyReport operator()(const LongChoiceInstance& s) {
        if (const ChoiceSeqCert* c = std::get_if<ChoiceSeqCert>(&cert))
            return verify_long_choice(s, *c);
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const ShortChoiceInstance& s) {
        if (const ShortCert* c = std::get_if<ShortCert>(&cert))
            return verify_short_choice(s, *c);
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const Ramsey2Instance& s) {
        const CliqueCert* c = std::get_if<CliqueCert>(&cert);
        if (!c) return kind_mismatch(inst, cert);
        if (c->color > 1)
            return VerifyReport::reject("OUT_OF_RANGE", "color " + u2s(c->color));
        uint64_t nodes = uint64_t{1} << (2 * s.n);
        if ((int)c->nodes.size() < s.n)
            return VerifyReport::reject("WRONG_LENGTH",
                                        "need at least " + std::to_string(s.n) +
                                            " nodes");
        for (uint64_t v : c->nodes)
            if (v >= nodes)
                return VerifyReport::reject("OUT_OF_RANGE", "node " + u2s(v));
        if (!all_distinct(c->nodes))
            return VerifyReport::reject("NOT_DISTINCT", "repeated node");
        for (size_t i = 0; i < c->nodes.size(); ++i)
            for (size_t j = i + 1; j < c->nodes.size(); ++j)
                if ((uint64_t)edge_color2(s, c->nodes[i], c->nodes[j]) != c->color)
                    return VerifyReport::reject(
                        "WRONG_COLOR", "edge (" + u2s(c->nodes[i]) + "," +
                                           u2s(c->nodes[j]) + ") disagrees");
        return VerifyReport::accept();
    }

    VerifyReport operator()(const RamseyRInstance& s) {
        const CliqueCert* c = std::get_if<CliqueCert>(&cert);
        if (!c) return kind_mismatch(inst, cert);
        if (c->color >= (uint64_t)s.r)
            return VerifyReport::reject("OUT_OF_RANGE", "color " + u2s(c->color));
        uint64_t nodes = uint64_t{1} << s.node_width;
        if ((int)c->nodes.size() < s.n)
            return VerifyReport::reject("WRONG_LENGTH",
                                        "need at least " + std::to_string(s.n) +
                                            " nodes");
        for (uint64_t v : c->nodes)
            if (v >= nodes)
                return VerifyReport::reject("OUT_OF_RANGE", "node " + u2s(v));
        if (!all_distinct(c->nodes))
            return VerifyReport::reject("NOT_DISTINCT", "repeated node");
        for (size_t i = 0; i < c->nodes.size(); ++i)
            for (size_t j = i + 1; j < c->nodes.size(); ++j)
                if (edge_color_r(s, c->nodes[i], c->nodes[j]) != c->color)
                    return VerifyReport::reject(
                        "WRONG_COLOR", "edge (" + u2s(c->nodes[i]) + "," +
                                           u2s(c->nodes[j]) + ") disagrees");
        return VerifyReport::accept();
    }

    VerifyReport operator()(const SunflowerInstance& s) {
        uint64_t idx_count = uint64_t{1} << s.index_width;
        auto set_of = [&](uint64_t i) {
            return decode_set(s.F.eval(BitVec(s.index_width, i)), s.k,
                              s.element_width);
        };
        if (const SunflowerErrorCert* c = std::get_if<SunflowerErrorCert>(&cert)) {
            if (c->i >= idx_count)
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(c->i));
            if (all_distinct(set_of(c->i)))
                return VerifyReport::reject("NOT_INVALID",
                                            "F(" + u2s(c->i) + ") is a valid k-set");
            return VerifyReport::accept();
        }
        if (const SunflowerDupCert* c = std::get_if<SunflowerDupCert>(&cert)) {
            if (c->i >= idx_count || c->j >= idx_count)
                return VerifyReport::reject("OUT_OF_RANGE", "index pair");
            if (c->i == c->j)
                return VerifyReport::reject("NOT_DISTINCT", "i equals j");
            if (sorted(set_of(c->i)) != sorted(set_of(c->j)))
                return VerifyReport::reject("NOT_EQUAL", "sets differ");
            return VerifyReport::accept();
        }
        const SunflowerCert* c = std::get_if<SunflowerCert>(&cert);
        if (!c) return kind_mismatch(inst, cert);
        if ((int)c->indices.size() < s.target())
            return VerifyReport::reject("WRONG_LENGTH",
                                        "need " + std::to_string(s.target()) +
                                            " indices");
        for (uint64_t i : c->indices)
            if (i >= idx_count)
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(i));
        if (!all_distinct(c->indices))
            return VerifyReport::reject("NOT_DISTINCT", "repeated index");
        std::vector<std::vector<uint64_t>> sets;
        for (uint64_t i : c->indices) {
            auto st = set_of(i);
            if (!all_distinct(st))
                return VerifyReport::reject("INVALID_SET",
                                            "F(" + u2s(i) + ") repeats an element");
            sets.push_back(sorted(st));
        }
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j)
                if (sets[i] == sets[j])
                    return VerifyReport::reject("DUPLICATE_SET",
                                                "two indices carry the same set");
        // Pairwise intersections must all equal one core; checked literally.
        auto intersect = [](const std::vector<uint64_t>& a,
                            const std::vector<uint64_t>& b) {
            std::vector<uint64_t> out;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
            return out;
        };
        std::vector<uint64_t> core = intersect(sets[0], sets[1]);
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j)
                if (intersect(sets[i], sets[j]) != core)
                    return VerifyReport::reject(
                        "NOT_A_SUNFLOWER",
                        "pairwise intersections are not all equal");
        return VerifyReport::accept();
    }

    VerifyReport operator()(const KonigInstance& s) {
        if (const KonigCert* c = std::get_if<KonigCert>(&cert))
            return verify_konig(s, *c);
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const EKRInstance& s) {
        uint64_t dom = uint64_t{1} << s.n;
        auto set_of = [&](uint64_t i) {
            return decode_pair(s.F.eval(BitVec(s.n, i)), s.n);
        };
        if (const EKRErrorCert* c = std::get_if<EKRErrorCert>(&cert)) {
            if (c->i >= dom)
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(c->i));
            auto [a, b] = set_of(c->i);
            if (a != b)
                return VerifyReport::reject("NOT_INVALID",
                                            "F(" + u2s(c->i) + ") is a valid 2-set");
            return VerifyReport::accept();
        }
        if (const EKRDupCert* c = std::get_if<EKRDupCert>(&cert)) {
            if (c->i >= dom || c->j >= dom)
                return VerifyReport::reject("OUT_OF_RANGE", "index pair");
            if (c->i == c->j)
                return VerifyReport::reject("NOT_DISTINCT", "i equals j");
            if (!same_unordered_pair(set_of(c->i), set_of(c->j)))
                return VerifyReport::reject("NOT_EQUAL", "sets differ");
            return VerifyReport::accept();
        }
        if (const EKRDisjointCert* c = std::get_if<EKRDisjointCert>(&cert)) {
            if (c->i >= dom || c->j >= dom)
                return VerifyReport::reject("OUT_OF_RANGE", "index pair");
            if (c->i == c->j)
                return VerifyReport::reject("NOT_DISTINCT", "i equals j");
            auto [a, b] = set_of(c->i);
            auto [x, y] = set_of(c->j);
            if (a == x || a == y || b == x || b == y)
                return VerifyReport::reject("NOT_DISJOINT", "sets share an element");
            return VerifyReport::accept();
        }
        return kind_mismatch(inst, cert);
    }

    template <class G>
    VerifyReport check_edge_cert(uint64_t idx_count, uint64_t node_count,
                                 int enc_w, const G& edge_of) {
        if (const EdgeErrorCert* c = std::get_if<EdgeErrorCert>(&cert)) {
            if (c->i >= idx_count)
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(c->i));
            auto [a, b] = edge_of(c->i);
            if (a != b && a < node_count && b < node_count)
                return VerifyReport::reject("NOT_INVALID",
                                            "E(" + u2s(c->i) + ") is a valid edge");
            return VerifyReport::accept();
        }
        if (const EdgeDupCert* c = std::get_if<EdgeDupCert>(&cert)) {
            if (c->i >= idx_count || c->j >= idx_count)
                return VerifyReport::reject("OUT_OF_RANGE", "index pair");
            if (c->i == c->j)
                return VerifyReport::reject("NOT_DISTINCT", "i equals j");
            if (!same_unordered_pair(edge_of(c->i), edge_of(c->j)))
                return VerifyReport::reject("NOT_EQUAL", "edges differ");
            return VerifyReport::accept();
        }
        (void)enc_w;
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const BadColoringInstance& s) {
        auto edge_of = [&](uint64_t i) {
            return decode_pair(s.E.eval(BitVec(s.edge_index_width(), i)),
                               s.node_enc_width());
        };
        if (const BadEdgeCert* c = std::get_if<BadEdgeCert>(&cert)) {
            if (c->i >= s.edge_index_count())
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(c->i));
            auto [a, b] = edge_of(c->i);
            if (a == b || a >= s.node_count() || b >= s.node_count())
                return VerifyReport::reject("NOT_AN_EDGE",
                                            "E(" + u2s(c->i) + ") is not a valid edge");
            int w = s.node_enc_width();
            if (s.color.eval(BitVec(w, a)) != s.color.eval(BitVec(w, b)))
                return VerifyReport::reject("COLORS_DIFFER",
                                            "endpoint colors differ");
            return VerifyReport::accept();
        }
        return check_edge_cert(s.edge_index_count(), s.node_count(),
                               s.node_enc_width(), edge_of);
    }

    VerifyReport operator()(const TuranInstance& s) {
        auto edge_of = [&](uint64_t i) {
            return decode_pair(s.E.eval(BitVec(s.edge_index_width(), i)),
                               s.node_enc_width());
        };
        if (const CliqueEdgesCert* c = std::get_if<CliqueEdgesCert>(&cert)) {
            uint64_t want = (uint64_t)(s.k + 1) * s.k / 2;
            if (c->indices.size() != want)
                return VerifyReport::reject("WRONG_LENGTH",
                                            "need exactly " + u2s(want) + " edges");
            for (uint64_t i : c->indices)
                if (i >= s.edge_index_count())
                    return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(i));
            if (!all_distinct(c->indices))
                return VerifyReport::reject("NOT_DISTINCT", "repeated edge index");
            std::set<uint64_t> nodes;
            std::set<std::pair<uint64_t, uint64_t>> pairs;
            for (uint64_t i : c->indices) {
                auto [a, b] = edge_of(i);
                if (a == b || a >= s.node_count() || b >= s.node_count())
                    return VerifyReport::reject("NOT_AN_EDGE",
                                                "E(" + u2s(i) + ") is not valid");
                nodes.insert(a);
                nodes.insert(b);
                pairs.insert({std::min(a, b), std::max(a, b)});
            }
            if (nodes.size() != (size_t)s.k + 1 || pairs.size() != want)
                return VerifyReport::reject("NOT_A_CLIQUE",
                                            "edges do not cover a (k+1)-clique");
            return VerifyReport::accept();
        }
        return check_edge_cert(s.edge_index_count(), s.node_count(),
                               s.node_enc_width(), edge_of);
    }

    VerifyReport operator()(const BadKSetInstance& s) {
        int w = s.node_enc_width();
        auto set_of = [&](uint64_t i) {
            return decode_set(s.F.eval(BitVec(s.index_width(), i)), s.k, w);
        };
        if (const BadSetCert* c = std::get_if<BadSetCert>(&cert)) {
            if (c->i >= s.index_count())
                return VerifyReport::reject("OUT_OF_RANGE", "index " + u2s(c->i));
            auto st = set_of(c->i);
            for (uint64_t v : st)
                if (v >= s.node_count())
                    return VerifyReport::reject("OUT_OF_RANGE",
                                                "set member " + u2s(v));
            for (size_t p = 0; p < st.size(); ++p)
                for (size_t q = p + 1; q < st.size(); ++q)
                    if (s.color.eval(BitVec(w, st[p])) ==
                        s.color.eval(BitVec(w, st[q])))
                        return VerifyReport::accept();
            return VerifyReport::reject("NOT_BAD", "all member colors distinct");
        }
        if (const SetDupCert* c = std::get_if<SetDupCert>(&cert)) {
            if (c->i >= s.index_count() || c->j >= s.index_count())
                return VerifyReport::reject("OUT_OF_RANGE", "index pair");
            if (c->i == c->j)
                return VerifyReport::reject("NOT_DISTINCT", "i equals j");
            if (sorted(set_of(c->i)) != sorted(set_of(c->j)))
                return VerifyReport::reject("NOT_EQUAL", "sets differ");
            return VerifyReport::accept();
        }
        return kind_mismatch(inst, cert);
    }

    VerifyReport operator()(const EmptyInstance& s) {
        const EmptyHoleCert* c = std::get_if<EmptyHoleCert>(&cert);
        if (!c) return kind_mismatch(inst, cert);
        if (s.n > 24)
            throw DeskScaleExceeded("empty-hole verification refuses n > 24");
        if (c->e >= s.range_size())
            return VerifyReport::reject("OUT_OF_RANGE", "hole " + u2s(c->e));
        for (uint64_t x = 0; x < s.domain_size(); ++x)
            if (s.f.eval_u64(x) == c->e)
                return VerifyReport::reject("HOLE_OCCUPIED",
                                            "f(" + u2s(x) + ") = " + u2s(c->e));
        return VerifyReport::accept();
    }

    VerifyReport operator()(const WeakSchurInstance& s) {
        const SchurTripleCert* c = std::get_if<SchurTripleCert>(&cert);
        if (!c) return kind_mismatch(inst, cert);
        uint64_t top = uint64_t{1} << s.width;
        if (c->a < 1 || c->b < 1 || c->a + c->b > top)
            return VerifyReport::reject("OUT_OF_RANGE",
                                        "(" + u2s(c->a) + "," + u2s(c->b) + ")");
        BitVec ca = s.color.eval(BitVec(s.width, c->a - 1));
        BitVec cb = s.color.eval(BitVec(s.width, c->b - 1));
        BitVec cab = s.color.eval(BitVec(s.width, c->a + c->b - 1));
        if (ca != cb || cb != cab)
            return VerifyReport::reject("NOT_MONOCHROMATIC",
                                        "triple colors differ");
        return VerifyReport::accept();
    }
};

}  // namespace

VerifyReport verify(const Instance& inst, const Certificate& cert) {
    return std::visit([&](const auto& s) { return Dispatch{inst, cert}(s); },
                      inst);
}

VerifyReport verify_long_choice(const LongChoiceInstance& inst,
                                const ChoiceSeqCert& cert) {
    if (cert.seq.size() != (size_t)inst.n + 1)
        return VerifyReport::reject("WRONG_LENGTH",
                                    "need n+1 = " + std::to_string(inst.n + 1) +
                                        " elements, got " +
                                        std::to_string(cert.seq.size()));
    if (inst.variant == LcVariant::Constrained && cert.seq[0] != inst.a0)
        return VerifyReport::reject("WRONG_START",
                                    "sequence must start at " +
                                        std::to_string(inst.a0));
    return check_choice_prefix(inst.predicates, inst.n, cert.seq,
                               uint64_t{1} << inst.n, inst.n - 1);
}

VerifyReport verify_short_choice(const ShortChoiceInstance& inst,
                                 const ShortCert& cert) {
    if (inst.n > 24)
        throw DeskScaleExceeded("short-choice verification refuses n > 24");
    if (cert.c != 0 && cert.c != 1)
        return VerifyReport::reject("OUT_OF_RANGE", "bit c must be 0 or 1");
    if (cert.seq.empty() || cert.seq.size() > (size_t)inst.n - 1)
        return VerifyReport::reject("WRONG_LENGTH",
                                    "subcertificate length must be in [1, n-1]");
    uint64_t universe = (uint64_t{1} << inst.n) - 2;
    int k = (int)cert.seq.size() - 1;
    VerifyReport pre =
        check_choice_prefix(inst.predicates, inst.n, cert.seq, universe, k);
    if (!pre.accepted) return pre;
    // The beyond-NP part: no universe element may extend the subcertificate
    // with P_k value c. Theta(2^n) predicate evaluations by design.
    for (uint64_t x = 0; x < universe; ++x) {
        bool used = false;
        for (uint64_t a : cert.seq) used |= (a == x);
        if (used) continue;
        bool extends = true;
        for (int i = 0; i < k && extends; ++i) {
            std::span<const uint64_t> prefix(cert.seq.data(), (size_t)i + 1);
            extends = eval_pred(inst.predicates[i], prefix, x, inst.n) ==
                      eval_pred(inst.predicates[i], prefix, cert.seq[i + 1], inst.n);
        }
        if (!extends) continue;
        std::span<const uint64_t> prefix(cert.seq.data(), cert.seq.size());
        if ((int)eval_pred(inst.predicates[k], prefix, x, inst.n) == cert.c)
            return VerifyReport::reject("EXTENSION_EXISTS",
                                        "element " + u2s(x) + " extends with P_" +
                                            std::to_string(k) + " = " +
                                            std::to_string(cert.c));
    }
    return VerifyReport::accept();
}

VerifyReport verify_konig(const KonigInstance& inst, const KonigCert& cert) {
    uint64_t nodes = uint64_t{1} << inst.n;
    auto parent_of = [&](uint64_t v) {
        BitVec out = inst.parent.eval(BitVec(inst.n, v));
        return std::pair<uint64_t, int>{out.slice(0, inst.n).to_u64(),
                                        out.bit(inst.n)};
    };
    auto node_ok = [&](uint64_t v) { return v < nodes; };
    switch (cert.kind) {
        case KonigCert::IdenticalChildren: {
            if (!node_ok(cert.a) || !node_ok(cert.b))
                return VerifyReport::reject("OUT_OF_RANGE", "node pair");
            if (cert.a == cert.b)
                return VerifyReport::reject("NOT_DISTINCT", "a equals b");
            if (parent_of(cert.a) != parent_of(cert.b))
                return VerifyReport::reject("PARENTS_DIFFER",
                                            "parent-and-side outputs differ");
            return VerifyReport::accept();
        }
        case KonigCert::InvalidRoot: {
            if (parent_of(inst.root).first == inst.root)
                return VerifyReport::reject("ROOT_VALID",
                                            "the declared root is its own parent");
            return VerifyReport::accept();
        }
        case KonigCert::NonUniqueRoot: {
            if (!node_ok(cert.a))
                return VerifyReport::reject("OUT_OF_RANGE", "node " + u2s(cert.a));
            if (cert.a == inst.root)
                return VerifyReport::reject("NOT_DISTINCT",
                                            "node equals the declared root");
            if (parent_of(cert.a).first != cert.a)
                return VerifyReport::reject("NOT_A_ROOT",
                                            "node is not its own parent");
            return VerifyReport::accept();
        }
        case KonigCert::FarAway: {
            if (!node_ok(cert.a))
                return VerifyReport::reject("OUT_OF_RANGE", "node " + u2s(cert.a));
            uint64_t v = cert.a;
            if (v == inst.root)
                return VerifyReport::reject("ROOT_REACHED", "node is the root");
            for (int t = 0; t < inst.n; ++t) {
                v = parent_of(v).first;
                if (v == inst.root)
                    return VerifyReport::reject("ROOT_REACHED",
                                                "root reached after " +
                                                    std::to_string(t + 1) +
                                                    " steps");
            }
            return VerifyReport::accept();
        }
        case KonigCert::LongPath: {
            if (!node_ok(cert.a))
                return VerifyReport::reject("OUT_OF_RANGE", "node " + u2s(cert.a));
            std::vector<uint64_t> path{cert.a};
            uint64_t v = cert.a;
            for (int t = 0; t < inst.n; ++t) {
                if (v == inst.root)
                    return VerifyReport::reject("PATH_TOO_SHORT",
                                                "root reached after " +
                                                    std::to_string(t) + " steps");
                v = parent_of(v).first;
                path.push_back(v);
            }
            if (v != inst.root)
                return VerifyReport::reject("ROOT_NOT_REACHED",
                                            "walk of n steps does not end at root");
            if (!all_distinct(path))
                return VerifyReport::reject("NOT_DISTINCT", "walk revisits a node");
            return VerifyReport::accept();
        }
    }
    return VerifyReport::reject("KIND_MISMATCH", "unknown clause");
}

int edge_color2(const Ramsey2Instance& inst, uint64_t a, uint64_t b) {
    if (a == b) throw std::invalid_argument("edge_color2: a == b");
    int w = inst.node_width();
    uint64_t ab[1] = {a};
    uint64_t ba[1] = {b};
    bool fwd = inst.edge.eval(pack_args(ab, b, w)).to_u64() == 1;
    bool rev = inst.edge.eval(pack_args(ba, a, w)).to_u64() == 1;
    return (fwd && rev) ? 1 : 0;
}

uint64_t edge_color_r(const RamseyRInstance& inst, uint64_t a, uint64_t b) {
    if (a == b) throw std::invalid_argument("edge_color_r: a == b");
    uint64_t lo = std::min(a, b), hi = std::max(a, b);
    uint64_t pre[1] = {lo};
    return inst.color.eval(pack_args(pre, hi, inst.node_width)).to_u64();
}

int set_distance(const std::vector<uint64_t>& A, const std::vector<uint64_t>& B) {
    if (A.size() != B.size())
        throw std::invalid_argument("set_distance: sizes differ");
    std::set<uint64_t> sa(A.begin(), A.end()), sb(B.begin(), B.end());
    if (sa.size() != A.size() || sb.size() != B.size())
        throw std::invalid_argument("set_distance: repeated element");
    std::vector<uint64_t> sym;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(sym));
    return (int)(sym.size() / 2);
}

std::vector<uint64_t> decode_set(const BitVec& packed, int k, int element_width) {
    return unpack_args(packed, k, element_width);
}

}  // namespace wb
