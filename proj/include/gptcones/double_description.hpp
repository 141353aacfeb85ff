#pragma once

// Exact double description: converts between generator and facet
// representations of proper polyhedral cones, and reduces generator sets to
// extreme rays.

#include "gptcones/cone.hpp"

namespace gptcones {

// Extreme rays of {x : rows.x >= 0}. Requires rank(rows) == dim (a pointed
// cone); throws dim_mismatch_error otherwise. Rows are preordered by
// decreasing absolute coordinate sum before incremental insertion.
std::vector<Vec> dd_extreme_rays(const Mat& rows, int dim);

// Conversions return minimal, canonically scaled representations.
PolyV to_vrep(const ConeRep& c);
PolyH to_hrep(const ConeRep& c);

// Canonical generators of exactly the extreme rays (duplicates and interior
// generators removed). Polyhedral only.
std::vector<Vec> enumerate_extreme_rays(const ConeRep& c);

}  // namespace gptcones
