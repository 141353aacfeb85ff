#include "gptcones/compatibility.hpp"
#include "gptcones/philox.hpp"
#include "gptcones/sandwich.hpp"

#include <doctest.h>

using namespace gptcones;

namespace {

Vec v2(int a, int b) { return {Rat(a), Rat(b)}; }

ConeRep orthant2() { return ConeRep{PolyV{2, {v2(1, 0), v2(0, 1)}}}; }

void check_decomposition(const CompatibilityResult& r, const std::vector<Vec>& xs,
                         const std::vector<Vec>& ys, const ConeRep& cone) {
    REQUIRE(r.status == CompatStatus::compatible);
    REQUIRE(r.decomposition.has_value());
    const auto& z = r.decomposition->z;
    const int d = cone_dim(cone);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Vec row(d, Rat(0));
        for (std::size_t j = 0; j < ys.size(); ++j) {
            CHECK(membership(cone, z[i][j]));
            row = add(row, z[i][j]);
        }
        CHECK(row == xs[i]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
        Vec col(d, Rat(0));
        for (std::size_t i = 0; i < xs.size(); ++i) col = add(col, z[i][j]);
        CHECK(col == ys[j]);
    }
}

}  // namespace

TEST_SUITE("compatibility") {

TEST_CASE("single family decomposes as itself") {
    const Vec x = v2(2, 3);
    const auto r = check_compatibility({x}, {x}, orthant2());
    check_decomposition(r, {x}, {x}, orthant2());
    CHECK(r.decomposition->z[0][0] == x);
}

TEST_CASE("unequal sums are trivially incompatible") {
    const auto r = check_compatibility({v2(1, 0)}, {v2(0, 1)}, orthant2());
    CHECK(r.status == CompatStatus::incompatible);
    CHECK(!r.decomposition.has_value());
}

TEST_CASE("inputs outside the cone are rejected") {
    CHECK_THROWS_AS(check_compatibility({v2(-1, 0)}, {v2(-1, 0)}, orthant2()),
                    std::invalid_argument);
}

TEST_CASE("classical cone: random equal-sum families are always compatible") {
    PhiloxStream rng(31, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int nx = 1 + static_cast<int>(rng.next_below(3));
        const int ny = 1 + static_cast<int>(rng.next_below(3));
        std::vector<Vec> xs(nx, Vec(2, Rat(0)));
        for (auto& x : xs)
            for (auto& c : x) c = Rat(static_cast<long>(rng.next_below(7)), 1 + rng.next_below(3));
        Vec total(2, Rat(0));
        for (const auto& x : xs) total = add(total, x);
        // Random split of the total across the second family, coordinatewise.
        std::vector<Vec> ys(ny, Vec(2, Rat(0)));
        for (int c = 0; c < 2; ++c) {
            Rat remaining = total[c];
            for (int j = 0; j + 1 < ny; ++j) {
                const Rat share = remaining * Rat(static_cast<long>(rng.next_below(5)), 4);
                const Rat take = share <= remaining ? share : remaining;
                ys[j][c] = take;
                remaining -= take;
            }
            ys[ny - 1][c] = remaining;
        }
        const auto r = check_compatibility(xs, ys, orthant2());
        check_decomposition(r, xs, ys, orthant2());
    }
}

TEST_CASE("square witness families are incompatible") {
    const auto entry = catalog("square");
    const auto& w = *entry.witness;
    const auto r = check_compatibility({w.x0, w.x1}, {w.xp, w.xm}, entry.system.cone);
    CHECK(r.status == CompatStatus::incompatible);
}

TEST_CASE("qubit witness families are incompatible via the exact Lorentz reduction") {
    const auto entry = catalog("qubit-lorentz");
    const auto& w = *entry.witness;
    const auto r = check_compatibility({w.x0, w.x1}, {w.xp, w.xm}, entry.system.cone);
    CHECK(r.status == CompatStatus::incompatible);
}

TEST_CASE("lorentz: compatible 2+2 family with a boundary member") {
    const ConeRep lor{LorentzCone{3}};
    // x0 on the boundary; the split z = {x0/2, x0/2; y-halves} exists.
    const Vec x0{Rat(1), Rat(0), Rat(1)};
    const Vec x1{Rat(-1), Rat(0), Rat(1)};
    const Vec y0{Rat(0), Rat(0), Rat(1)};
    const Vec y1{Rat(0), Rat(0), Rat(1)};
    const auto r = check_compatibility({x0, x1}, {y0, y1}, lor);
    check_decomposition(r, {x0, x1}, {y0, y1}, lor);
}

TEST_CASE("lorentz: interior 2+2 family lands on a rational guess") {
    const ConeRep lor{LorentzCone{3}};
    const Vec a{Rat(0), Rat(0), Rat(2)};
    const auto r = check_compatibility({a, a}, {a, a}, lor);
    check_decomposition(r, {a, a}, {a, a}, lor);
}

TEST_CASE("lorentz: oversized families report unknown") {
    const ConeRep lor{LorentzCone{3}};
    const Vec a{Rat(0), Rat(0), Rat(1)};
    const auto r = check_compatibility({a, a, a}, {a, a, a}, lor);
    CHECK(r.status == CompatStatus::unknown);
}

}  // TEST_SUITE
