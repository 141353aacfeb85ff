#pragma once

// Witness verification and entangleability certificates: builds the
// entangled tensor omega and the separating functional phi from a pair of
// strong-incompatibility witnesses, checks the product identity
// phi(omega) = 4 (f0(x+) - f+(x0)) (g0(y+) - g+(y0)) by independent
// expansion, and certifies omega in max \ min.

#include "gptcones/cone.hpp"
#include "gptcones/report.hpp"
#include "gptcones/tensor.hpp"
#include "gptcones/witness.hpp"

#include <optional>
#include <string>

namespace gptcones {

// Exact check of the three witness conditions plus cone/dual membership of
// all eight objects; also reports that f0+f1 is strictly positive (a
// consequence of the conditions).
CheckReport verify_witness(const IncompatibilityWitness& w, const GptSystem& sys);

// omega = x0 (x) y+ - x+ (x) y+ + x+ (x) y0 + x1 (x) y1
TensorElement build_omega(const IncompatibilityWitness& wa, const IncompatibilityWitness& wb);

// phi = 2(f0+f1)(x)(g0+g1) - (f0-f1)(x)(g0-g1) - (f0-f1)(x)(g+-g-)
//       - (f+-f-)(x)(g0-g1) + (f+-f-)(x)(g+-g-)
TensorElement build_phi(const IncompatibilityWitness& wa, const IncompatibilityWitness& wb);

// 4 (f0(x+) - f+(x0)) (g0(y+) - g+(y0)); the term-by-term expansion of
// phi(omega) is recomputed independently and must agree exactly.
Rat eval_magical(const IncompatibilityWitness& wa, const IncompatibilityWitness& wb);

enum class MinExclusionKind { lp_certificate, by_phi };
enum class MaxInclusionKind { dual_ray_scan, by_witness };

struct EntanglementCertificate {
    TensorElement omega;
    TensorElement phi;  // functional coordinates
    bool swapped_a = false;
    Rat magical_value;  // phi(omega) after any swap
    Rat unit_pairing;   // (u1 (x) u2)(omega) > 0
    MinExclusionKind min_exclusion_kind = MinExclusionKind::by_phi;
    std::optional<MinMembershipCertificate> min_certificate;
    MaxInclusionKind max_inclusion_kind = MaxInclusionKind::by_witness;
    int dual_ray_pairs_checked = 0;
    int product_generators_checked = 0;
    CheckReport clauses;
};

// Verifies both witnesses, swaps the A-side roles if the magical value is
// positive, and certifies omega in max tensor \ min tensor. Throws
// certification_error naming the failed clause.
EntanglementCertificate certify(const GptSystem& a, const IncompatibilityWitness& wa,
                                const GptSystem& b, const IncompatibilityWitness& wb);

}  // namespace gptcones
