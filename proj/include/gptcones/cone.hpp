#pragma once

// Proper convex cones over Q and the primitive geometry every other module
// builds on: membership, duality, properness, classicality, strict
// positivity, cones over convex bodies, canonical ray scaling.
//
// A cone is represented exactly in one of three forms:
//   PolyV    - generators (conic hull)
//   PolyH    - facet inequalities f.x >= 0
//   Lorentz  - x_d >= 0 and x_d^2 >= sum of squares of the other coordinates
//              (the height is the last coordinate)

#include "gptcones/errors.hpp"
#include "gptcones/linalg.hpp"

#include <variant>
#include <vector>

namespace gptcones {

struct PolyV {
    int dim = 0;
    std::vector<Vec> generators;
    bool operator==(const PolyV&) const = default;
};

struct PolyH {
    int dim = 0;
    std::vector<Vec> facets;
    bool operator==(const PolyH&) const = default;
};

struct LorentzCone {
    int dim = 0;  // ambient dimension, >= 2
    bool operator==(const LorentzCone&) const = default;
};

using ConeRep = std::variant<PolyV, PolyH, LorentzCone>;

int cone_dim(const ConeRep& c);
bool is_polyhedral(const ConeRep& c);

// Positive primitive scaling: clear denominators, divide by the gcd. The
// ray direction is preserved (a sign flip would change the cone), so the
// leading coordinate keeps its sign.
Vec canonical_ray(const Vec& v);

// Sorted canonical rays, for exact set comparison.
std::vector<Vec> canonical_ray_set(std::vector<Vec> rays);

bool membership(const ConeRep& c, const Vec& x);

ConeRep dual(const ConeRep& c);

bool is_proper(const ConeRep& c);

// Simplicial test: extreme-ray count equals the dimension (and the rays are
// independent). Lorentz cones are classical only up to dimension 2.
bool is_classical(const ConeRep& c);

bool is_strictly_positive(const Vec& f, const ConeRep& c);

// Cone over a convex body K x {1}: appends a unit height coordinate.
PolyV cone_over(const std::vector<Vec>& points);

// A GPT is a proper cone together with a strictly positive order unit.
struct GptSystem {
    ConeRep cone;
    Vec unit;
};

// Validating constructor; throws on a non-proper cone or a unit that is not
// strictly positive.
GptSystem make_system(ConeRep cone, Vec unit);

// Interior point of the dual cone (sum of its canonical extreme rays, or
// the height functional for Lorentz): a ready-made order unit.
Vec default_unit(const ConeRep& c);

}  // namespace gptcones
