#include "workbench/certificate.hpp"

namespace wb {

namespace {

struct KindName {
    std::string operator()(const ZeroCert&) { return "zero"; }
    std::string operator()(const CollisionCert&) { return "collision"; }
    std::string operator()(const ChoiceSeqCert&) { return "choice_seq"; }
    std::string operator()(const ShortCert&) { return "short_cert"; }
    std::string operator()(const CliqueCert&) { return "clique"; }
    std::string operator()(const SunflowerCert&) { return "sunflower"; }
    std::string operator()(const SunflowerErrorCert&) { return "sunflower_error"; }
    std::string operator()(const SunflowerDupCert&) { return "sunflower_dup"; }
    std::string operator()(const KonigCert& c) {
        switch (c.kind) {
            case KonigCert::IdenticalChildren: return "konig_identical_children";
            case KonigCert::InvalidRoot: return "konig_invalid_root";
            case KonigCert::NonUniqueRoot: return "konig_non_unique_root";
            case KonigCert::FarAway: return "konig_far_away";
            case KonigCert::LongPath: return "konig_long_path";
        }
        return "konig";
    }
    std::string operator()(const EKRErrorCert&) { return "ekr_error"; }
    std::string operator()(const EKRDupCert&) { return "ekr_dup"; }
    std::string operator()(const EKRDisjointCert&) { return "ekr_disjoint"; }
    std::string operator()(const EdgeErrorCert&) { return "edge_error"; }
    std::string operator()(const EdgeDupCert&) { return "edge_dup"; }
    std::string operator()(const BadEdgeCert&) { return "bad_edge"; }
    std::string operator()(const CliqueEdgesCert&) { return "clique_edges"; }
    std::string operator()(const BadSetCert&) { return "bad_set"; }
    std::string operator()(const SetDupCert&) { return "set_dup"; }
    std::string operator()(const EmptyHoleCert&) { return "empty_hole"; }
    std::string operator()(const SchurTripleCert&) { return "schur_triple"; }
};

}  // namespace

std::string certificate_kind(const Certificate& cert) {
    return std::visit(KindName{}, cert);
}

}  // namespace wb
