#pragma once

// The eight objects of a strong-incompatibility witness: two pairs of cone
// elements with equal sums and two pairs of dual functionals with equal
// sums, zero cross-pairings within matched labels, and strictly positive
// mixed sums. Verification lives in certify.hpp.

#include "gptcones/linalg.hpp"

namespace gptcones {

struct IncompatibilityWitness {
    Vec x0, x1, xp, xm;  // elements of C
    Vec f0, f1, fp, fm;  // functionals in C*
};

// Exchanges the roles of the (0,1) and (+,-) pairs on both the element and
// the functional side.
inline IncompatibilityWitness swapped_roles(const IncompatibilityWitness& w) {
    return IncompatibilityWitness{w.xp, w.xm, w.x0, w.x1, w.fp, w.fm, w.f0, w.f1};
}

}  // namespace gptcones
