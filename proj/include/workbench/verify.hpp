#pragma once

#include "workbench/certificate.hpp"
#include "workbench/instance.hpp"

namespace wb {

struct VerifyReport {
    bool accepted = false;
    std::string reason;  // machine-readable code, empty when accepted
    std::string detail;  // human text locating the first violated clause

    static VerifyReport accept() { return {true, "", ""}; }
    static VerifyReport reject(std::string code, std::string d) {
        return {false, std::move(code), std::move(d)};
    }
};

/// Dispatches on (instance kind, certificate kind). An inadmissible pairing
/// rejects with KIND_MISMATCH. Pure; exponential only for ShortChoice/Empty,
/// which refuse n > 24 by throwing DeskScaleExceeded.
VerifyReport verify(const Instance& inst, const Certificate& cert);

VerifyReport verify_long_choice(const LongChoiceInstance& inst,
                                const ChoiceSeqCert& cert);
VerifyReport verify_short_choice(const ShortChoiceInstance& inst,
                                 const ShortCert& cert);
VerifyReport verify_konig(const KonigInstance& inst, const KonigCert& cert);

/// Symmetric 2-coloring: 1 ("blue") iff edge(a,b)=1 and edge(b,a)=1.
/// Requires a != b.
int edge_color2(const Ramsey2Instance& inst, uint64_t a, uint64_t b);

/// Color of edge {a,b} in an r-colored instance: color(min, max).
uint64_t edge_color_r(const RamseyRInstance& inst, uint64_t a, uint64_t b);

/// |A Δ B| / 2 for two k-sets with distinct elements each.
int set_distance(const std::vector<uint64_t>& A, const std::vector<uint64_t>& B);

/// Decodes the k packed fields of a set image.
std::vector<uint64_t> decode_set(const BitVec& packed, int k, int element_width);

}  // namespace wb
