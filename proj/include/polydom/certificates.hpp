#pragma once

#include <optional>
#include <span>
#include <string>

#include "polydom/labeling.hpp"

namespace polydom {

/// An explicit labeling witnessing an upper bound on the domination number.
struct Certificate {
    LabelFunction labeling;
    Variant variant;
    /// Weight stated by the case formula of the theorem, computed independently of the labeling.
    int claimed_weight;
    std::string theorem;   // "Thm1" .. "Thm7"
    std::string case_tag;  // "all", "n=3k+1", ...

    std::string source() const { return theorem + "/" + case_tag; }
};

Certificate cert_an_srd(int n);
Certificate cert_rn_srd(int n);
Certificate cert_sn_strd(int n);
Certificate cert_tn_strd(int n);
Certificate cert_tn_srd(int n);
Certificate cert_qn_srd(int n);
Certificate cert_tn2p_srd(int n);

struct CertificateDomain {
    FamilyKind family;
    Variant variant;
    int min_n;
    const char* theorem;
};

/// (family, variant) pairs that have a certificate constructor.
std::span<const CertificateDomain> covered_combinations();

/// Certificate for the combination, or nullopt if none is known.
/// Throws DomainError when the combination is covered but n is below its minimum.
std::optional<Certificate> certificate_for(FamilyKind family, Variant variant, int n);

/// h(n) = ceil(2n/3) for n = 3k, ceil(2n/3) + 1 otherwise.
int tn2p_upper(int n);

}  // namespace polydom
