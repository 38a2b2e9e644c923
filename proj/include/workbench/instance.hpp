#pragma once

#include <optional>
#include <string>
#include <variant>

#include "workbench/function.hpp"

namespace wb {

/// Raised when a verifier or solver would have to scan a domain too large
/// for interactive use (the exponential scans refuse n > 24).
struct DeskScaleExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a "cannot happen by construction" branch is reached; in tests
/// this means a construction bug, never an input problem.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline int ceil_log2(uint64_t v) {
    int w = 0;
    while ((uint64_t{1} << w) < v) ++w;
    return w;
}

/// f: n -> n. Sought: x with f(x)=0, or a colliding pair.
struct CollisionInstance {
    int n = 0;
    Function f;
};

/// f: n -> m with m < n. Sought: a colliding pair (zero is not a certificate).
struct WeakCollisionInstance {
    int n = 0;
    int m = 0;
    Function f;
};

enum class LcVariant { General, Unary, Binary, Constrained };

/// Universe {0,1}^n with predicates P_0..P_{n-2}; P_i takes (a_0..a_i, x)
/// packed as (i+2) consecutive n-bit fields, a_0 least significant.
/// Sought: n+1 distinct elements, each P_i constant on all later elements.
struct LongChoiceInstance {
    int n = 0;
    LcVariant variant = LcVariant::General;
    std::vector<int> binary_deps;  // Binary only: k_i <= i per predicate
    uint64_t a0 = 0;               // Constrained only: forced first element
    std::vector<Function> predicates;
};

/// Universe [0, 2^n-3] (size 2^n-2), same predicate layout as Long Choice.
/// Sought: a subcertificate a_0..a_k (k <= n-2) plus a bit c such that no
/// universe element extends it with P_k value c.
struct ShortChoiceInstance {
    int n = 0;
    std::vector<Function> predicates;
};

/// 2^{2n} nodes, edge: 4n -> 1. Blue iff edge(a,b)=1 and edge(b,a)=1.
/// Sought: a monochromatic clique of n nodes.
struct Ramsey2Instance {
    int n = 0;  // clique target; node_width = 2n
    Function edge;
    int node_width() const { return 2 * n; }
};

/// r-coloring (r a power of two) of the complete graph on 2^node_width nodes.
/// Edge (a,b) with a<b has color color(a,b). Sought: monochromatic n-clique.
struct RamseyRInstance {
    int r = 0;
    int n = 0;
    int node_width = 0;  // default r*n*log2(r); generators may cap it lower
    Function color;      // 2*node_width -> log2(r)
    bool weak_guarantee = false;  // set when node_width was capped below default
    int color_width() const { return ceil_log2((uint64_t)r); }
};

/// F maps indices to k-sets over {0,1}^element_width (k fields, element 0
/// least significant). Sought: k^2 indices of distinct valid k-sets forming a
/// sunflower, or an index whose image is not a valid k-set, or a duplicate.
struct SunflowerInstance {
    int k = 0;
    int index_width = 0;
    int element_width = 0;
    Function F;  // index_width -> k*element_width
    int target() const { return k * k; }
};

/// parent: n -> n+1; low n bits parent node, bit n the left/right side.
/// root is the claimed root. Sought: any of the five tree violations.
struct KonigInstance {
    int n = 0;
    Function parent;
    uint64_t root = 0;
};

/// F: n -> 2n encodes one 2-set per index (two n-bit elements).
/// Sought: an invalid, duplicated, or disjoint pair of sets.
struct EKRInstance {
    int n = 0;
    Function F;
};

/// Graph on k*2^n nodes given by an edge list E over indices
/// [0, C(k,2)*(2^n)^2], plus a k-coloring C of the nodes.
/// Sought: invalid edge, duplicate edge, or same-colored endpoints.
struct BadColoringInstance {
    int k = 0;
    int n = 0;
    Function E;      // edge_index_width -> 2*node_enc_width
    Function color;  // node_enc_width -> color_width, colors 0..k-1
    uint64_t node_count() const { return (uint64_t)k << n; }
    uint64_t edge_index_count() const {
        uint64_t kk = (uint64_t)k * (k - 1) / 2;
        return kk * ((uint64_t{1} << n) * (uint64_t{1} << n)) + 1;
    }
    int node_enc_width() const { return n + ceil_log2((uint64_t)k); }
    int edge_index_width() const { return ceil_log2(edge_index_count()); }
    int color_width() const { return ceil_log2((uint64_t)k); }
};

/// Same edge list shape as BadColoringInstance, no coloring.
/// Sought: invalid edge, duplicate edge, or the edges of a (k+1)-clique.
struct TuranInstance {
    int k = 0;
    int n = 0;
    Function E;
    uint64_t node_count() const { return (uint64_t)k << n; }
    uint64_t edge_index_count() const {
        uint64_t kk = (uint64_t)k * (k - 1) / 2;
        return kk * ((uint64_t{1} << n) * (uint64_t{1} << n)) + 1;
    }
    int node_enc_width() const { return n + ceil_log2((uint64_t)k); }
    int edge_index_width() const { return ceil_log2(edge_index_count()); }
};

/// F maps 2^{kn}+1 indices to k-sets over the k*2^n node universe; C colors
/// the nodes with k colors. Sought: a set with two same-colored members, or
/// two indices carrying the same set.
struct BadKSetInstance {
    int k = 0;
    int n = 0;
    Function F;      // index_width -> k*node_enc_width
    Function color;  // node_enc_width -> color_width
    uint64_t node_count() const { return (uint64_t)k << n; }
    uint64_t index_count() const { return (uint64_t{1} << ((uint64_t)k * n)) + 1; }
    int index_width() const { return (int)((uint64_t)k * n) + 1; }
    int node_enc_width() const { return n + ceil_log2((uint64_t)k); }
    int color_width() const { return ceil_log2((uint64_t)k); }
};

/// f maps a domain of 2^n-2 pigeons [0, 2^n-3] into 2^n-1 holes [0, 2^n-2]
/// (both carried in n bits). Sought: a hole with no pigeon.
struct EmptyInstance {
    int n = 0;
    Function f;  // n -> n, only domain values < 2^n-2 are meaningful
    uint64_t domain_size() const { return (uint64_t{1} << n) - 2; }
    uint64_t range_size() const { return (uint64_t{1} << n) - 1; }
};

/// C colors the integers 1..2^width with r colors; the circuit input for
/// integer i is i-1 (value-1 encoding). Sought: a+b=c all one color.
struct WeakSchurInstance {
    int r = 0;
    int width = 0;
    Function color;  // width -> ceil(log2 r)
    int color_width() const { return ceil_log2((uint64_t)r); }
};

using Instance =
    std::variant<CollisionInstance, WeakCollisionInstance, LongChoiceInstance,
                 ShortChoiceInstance, Ramsey2Instance, RamseyRInstance,
                 SunflowerInstance, KonigInstance, EKRInstance,
                 BadColoringInstance, TuranInstance, BadKSetInstance,
                 EmptyInstance, WeakSchurInstance>;

std::string instance_kind(const Instance& inst);

/// Checks the declared widths of every Function against the instance
/// parameters; throws std::invalid_argument on mismatch.
void check_instance(const Instance& inst);

}  // namespace wb
