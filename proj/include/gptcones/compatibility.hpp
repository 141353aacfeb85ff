#pragma once

// Compatibility of two families of cone elements: existence of a joint
// decomposition z_ij in C with prescribed row sums xs and column sums ys.
// Polyhedral cones are decided by exact LP. Lorentz cones are supported for
// families of up to 2+2 vectors via an exact one-parameter reduction; cases
// outside its reach report `unknown` rather than guessing.

#include "gptcones/cone.hpp"

#include <optional>
#include <string>

namespace gptcones {

struct CompatibilityDecomposition {
    // z[i][j] in C with sum_j z[i][j] = xs[i] and sum_i z[i][j] = ys[j].
    std::vector<std::vector<Vec>> z;
};

enum class CompatStatus { compatible, incompatible, unknown };

struct CompatibilityResult {
    CompatStatus status = CompatStatus::unknown;
    std::optional<CompatibilityDecomposition> decomposition;
    std::string note;
};

CompatibilityResult check_compatibility(const std::vector<Vec>& xs,
                                        const std::vector<Vec>& ys,
                                        const ConeRep& cone);

}  // namespace gptcones
