#include "gptcones/cone.hpp"
#include "gptcones/double_description.hpp"
#include "gptcones/philox.hpp"

#include <doctest.h>

using namespace gptcones;

namespace {

Vec v3(int a, int b, int c) { return {Rat(a), Rat(b), Rat(c)}; }

PolyV square_cone() {
    return PolyV{3, {v3(1, 1, 1), v3(-1, 1, 1), v3(-1, -1, 1), v3(1, -1, 1)}};
}

ConeRep random_proper_cone(std::uint64_t seed, std::uint64_t trial, int dim, int max_extra) {
    PhiloxStream rng(seed, trial);
    for (;;) {
        const int npoints = dim + static_cast<int>(rng.next_below(max_extra + 1));
        std::vector<Vec> pts;
        for (int k = 0; k < npoints; ++k) {
            Vec p(dim - 1);
            for (int i = 0; i < dim - 1; ++i)
                p[i] = Rat(static_cast<long>(rng.next_below(7)) - 3);
            pts.push_back(std::move(p));
        }
        const PolyV cone = cone_over(pts);
        Mat rows = cone.generators;
        if (rank(rows) == dim) return ConeRep{cone};
    }
}

}  // namespace

TEST_SUITE("double_description") {

TEST_CASE("orthant H-rep converts to the standard basis rays") {
    PolyH h{3, {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}};
    const PolyV v = to_vrep(ConeRep{h});
    CHECK(canonical_ray_set(v.generators) ==
          canonical_ray_set({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}));
}

TEST_CASE("square cone facets are the diamond rays") {
    const PolyH h = to_hrep(ConeRep{square_cone()});
    // z >= |x| and z >= |y|: facets (+-1, 0, 1), (0, +-1, 1).
    CHECK(canonical_ray_set(h.facets) ==
          canonical_ray_set({v3(1, 0, 1), v3(-1, 0, 1), v3(0, 1, 1), v3(0, -1, 1)}));
}

TEST_CASE("redundant generator is removed") {
    PolyV with_interior = square_cone();
    with_interior.generators.push_back(v3(0, 0, 1));
    const auto rays = enumerate_extreme_rays(ConeRep{with_interior});
    CHECK(rays.size() == 4);
    CHECK(canonical_ray_set(rays) == canonical_ray_set(square_cone().generators));

    PolyV with_duplicate = square_cone();
    with_duplicate.generators.push_back(v3(2, 2, 2));
    CHECK(enumerate_extreme_rays(ConeRep{with_duplicate}).size() == 4);
}

TEST_CASE("lorentz input raises the typed error") {
    CHECK_THROWS_AS(to_vrep(ConeRep{LorentzCone{3}}), unsupported_rep_error);
    CHECK_THROWS_AS(to_hrep(ConeRep{LorentzCone{3}}), unsupported_rep_error);
    CHECK_THROWS_AS(enumerate_extreme_rays(ConeRep{LorentzCone{3}}), unsupported_rep_error);
}

TEST_CASE("non-pointed input is rejected") {
    // Two facets in R^3 leave a lineality space.
    CHECK_THROWS_AS(dd_extreme_rays({v3(1, 0, 0), v3(0, 1, 0)}, 3), dim_mismatch_error);
}

TEST_CASE("round-trip: to_vrep(to_hrep(C)) reproduces the canonical rays") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const int dim = 3 + static_cast<int>(trial % 4);
        const ConeRep c = random_proper_cone(23, trial, dim, 6);
        const auto direct = canonical_ray_set(enumerate_extreme_rays(c));
        const auto round = canonical_ray_set(to_vrep(ConeRep{to_hrep(c)}).generators);
        CHECK(direct == round);
    }
}

TEST_CASE("facet count of a hexagon cone") {
    const PolyV hexagon = cone_over({{Rat(1), Rat(0)},
                                     {Rat(1, 2), Rat(1)},
                                     {Rat(-1, 2), Rat(1)},
                                     {Rat(-1), Rat(0)},
                                     {Rat(-1, 2), Rat(-1)},
                                     {Rat(1, 2), Rat(-1)}});
    CHECK(to_hrep(ConeRep{hexagon}).facets.size() == 6);
}

}  // TEST_SUITE
