#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace wb {

struct ZeroCert { uint64_t x = 0; };
struct CollisionCert { uint64_t x = 0, y = 0; };

/// Long Choice witness: a_0..a_n.
struct ChoiceSeqCert { std::vector<uint64_t> seq; };

/// Short Choice witness: subcertificate a_0..a_k plus the blocked bit c.
struct ShortCert { std::vector<uint64_t> seq; int c = 0; };

struct CliqueCert { std::vector<uint64_t> nodes; uint64_t color = 0; };

struct SunflowerCert { std::vector<uint64_t> indices; };
struct SunflowerErrorCert { uint64_t i = 0; };
struct SunflowerDupCert { uint64_t i = 0, j = 0; };

struct KonigCert {
    enum Kind { IdenticalChildren, InvalidRoot, NonUniqueRoot, FarAway, LongPath };
    Kind kind = InvalidRoot;
    uint64_t a = 0;  // unused for InvalidRoot
    uint64_t b = 0;  // IdenticalChildren only
};

struct EKRErrorCert { uint64_t i = 0; };
struct EKRDupCert { uint64_t i = 0, j = 0; };
struct EKRDisjointCert { uint64_t i = 0, j = 0; };

struct EdgeErrorCert { uint64_t i = 0; };
struct EdgeDupCert { uint64_t i = 0, j = 0; };
struct BadEdgeCert { uint64_t i = 0; };
struct CliqueEdgesCert { std::vector<uint64_t> indices; };

struct BadSetCert { uint64_t i = 0; };
struct SetDupCert { uint64_t i = 0, j = 0; };

struct EmptyHoleCert { uint64_t e = 0; };
struct SchurTripleCert { uint64_t a = 0, b = 0; };

using Certificate =
    std::variant<ZeroCert, CollisionCert, ChoiceSeqCert, ShortCert, CliqueCert,
                 SunflowerCert, SunflowerErrorCert, SunflowerDupCert, KonigCert,
                 EKRErrorCert, EKRDupCert, EKRDisjointCert, EdgeErrorCert,
                 EdgeDupCert, BadEdgeCert, CliqueEdgesCert, BadSetCert,
                 SetDupCert, EmptyHoleCert, SchurTripleCert>;

std::string certificate_kind(const Certificate& cert);

}  // namespace wb
