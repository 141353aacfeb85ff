#include "gptcones/certify.hpp"
#include "gptcones/compatibility.hpp"
#include "gptcones/double_description.hpp"
#include "gptcones/philox.hpp"
#include "gptcones/sandwich.hpp"

#include <doctest.h>

using namespace gptcones;

namespace {

// Kite (0,0,0,1/2) sits inside the hexagon, giving a valid witness with an
// asymmetric magical factor f0(x+) - f+(x0) = -1/8.
struct AsymFixture {
    GptSystem system;
    IncompatibilityWitness witness;
};

AsymFixture asymmetric_hexagon_witness() {
    const auto entry = catalog("hexagon");
    const KiteSandwich s{identity_mat(3), identity_mat(3),
                         Kite{{Rat(0), Rat(0), Rat(0), Rat(1, 2)}}};
    return AsymFixture{entry.system, derive_witness(s, entry.system.cone)};
}

Vec random_cone_element(const std::vector<Vec>& gens, PhiloxStream& rng) {
    Vec x(gens[0].size(), Rat(0));
    for (const Vec& g : gens)
        x = add(x, scaled(g, Rat(static_cast<long>(rng.next_below(5)), 1 + rng.next_below(2))));
    return x;
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("all catalog witnesses verify") {
    for (const std::string name :
         {"square", "diamond", "hexagon", "pentagon-rational", "qubit-lorentz"}) {
        const auto e = catalog(name);
        const auto report = verify_witness(*e.witness, e.system);
        CHECK(report.ok());
    }
}

TEST_CASE("corrupting the pairing structure fails at condition (ii)") {
    const auto e = catalog("square");
    IncompatibilityWitness bad = *e.witness;
    std::swap(bad.x0, bad.x1);  // keeps the sums, breaks the zero pairings
    const auto report = verify_witness(bad, e.system);
    CHECK(!report.ok());
    CHECK(report.first_failure()->name == "(ii)-zero-pairings");
}

TEST_CASE("build_omega on the square pair") {
    const auto e = catalog("square");
    const TensorElement omega = build_omega(*e.witness, *e.witness);
    const Rat h(1, 2);
    const TensorElement expected = [] {
        TensorElement t(3, 3);
        t.at(0, 0) = Rat(-1, 2);
        t.at(0, 1) = Rat(-1, 2);
        t.at(1, 0) = Rat(-1, 2);
        t.at(1, 1) = Rat(1, 2);
        t.at(2, 2) = Rat(1, 2);
        return t;
    }();
    CHECK(omega == expected);
    CHECK(pairing(outer(e.system.unit, e.system.unit), omega) == h);

    // Bilinearity in the first factor.
    IncompatibilityWitness doubled = *e.witness;
    for (Vec* v : {&doubled.x0, &doubled.x1, &doubled.xp, &doubled.xm}) *v = scaled(*v, Rat(2));
    CHECK(build_omega(doubled, *e.witness) == tensor_scaled(omega, Rat(2)));
}

TEST_CASE("build_phi on the square pair and positivity on product generators") {
    const auto e = catalog("square");
    const TensorElement phi = build_phi(*e.witness, *e.witness);
    TensorElement expected(3, 3);
    expected.at(0, 0) = 2;
    expected.at(0, 1) = 2;
    expected.at(1, 0) = 2;
    expected.at(1, 1) = -2;
    expected.at(2, 2) = 8;
    CHECK(phi == expected);

    const PolyV mt = min_tensor(e.system, e.system);
    CHECK(mt.generators.size() == 16);
    for (const Vec& g : mt.generators) CHECK(dot(phi.entries, g) > 0);

    CHECK(pairing(phi, outer(e.witness->x0, e.witness->x0)) > 0);
}

TEST_CASE("property: phi evaluates on products through the c,d,e form") {
    const auto ea = catalog("square"), eb = catalog("hexagon");
    const auto &wa = *ea.witness, &wb = *eb.witness;
    const TensorElement phi = build_phi(wa, wb);
    const auto& ga = std::get<PolyV>(ea.system.cone).generators;
    const auto& gb = std::get<PolyV>(eb.system.cone).generators;
    PhiloxStream rng(101, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec w1 = random_cone_element(ga, rng);
        const Vec w2 = random_cone_element(gb, rng);
        const Rat c1 = dot(add(wa.f0, wa.f1), w1), c2 = dot(add(wb.f0, wb.f1), w2);
        const Rat d1 = dot(sub(wa.f0, wa.f1), w1), d2 = dot(sub(wb.f0, wb.f1), w2);
        const Rat e1 = dot(sub(wa.fp, wa.fm), w1), e2 = dot(sub(wb.fp, wb.fm), w2);
        const Rat direct = pairing(phi, outer(w1, w2));
        CHECK(direct == 2 * c1 * c2 - d1 * d2 - d1 * e2 - e1 * d2 + e1 * e2);
        if (!is_zero_vec(w1) && !is_zero_vec(w2)) CHECK(direct > 0);
    }
}

TEST_CASE("eval_magical: symmetric catalogs give zero, asymmetry does not") {
    const auto sq = catalog("square");
    const auto qb = catalog("qubit-lorentz");
    CHECK(eval_magical(*sq.witness, *sq.witness) == 0);
    CHECK(eval_magical(*qb.witness, *qb.witness) == 0);

    const auto asym = asymmetric_hexagon_witness();
    CHECK(dot(asym.witness.f0, asym.witness.xp) - dot(asym.witness.fp, asym.witness.x0) ==
          Rat(-1, 8));
    CHECK(eval_magical(asym.witness, asym.witness) == Rat(1, 16));
    // A symmetric partner keeps the product zero.
    CHECK(eval_magical(asym.witness, *sq.witness) == 0);
}

TEST_CASE("eval_magical flips sign under the role swap") {
    const auto asym = asymmetric_hexagon_witness();
    const auto sq = catalog("square");
    const auto qb = catalog("qubit-lorentz");
    for (const IncompatibilityWitness& w : {asym.witness, *sq.witness, *qb.witness}) {
        const Rat m = eval_magical(w, asym.witness);
        CHECK(eval_magical(swapped_roles(w), asym.witness) == -m);
    }
}

TEST_CASE("certify on square x square") {
    const auto e = catalog("square");
    const auto cert = certify(e.system, *e.witness, e.system, *e.witness);
    CHECK(!cert.swapped_a);
    CHECK(cert.magical_value == 0);
    CHECK(cert.unit_pairing == Rat(1, 2));
    CHECK(cert.min_exclusion_kind == MinExclusionKind::lp_certificate);
    REQUIRE(cert.min_certificate.has_value());
    CHECK(!cert.min_certificate->inside);
    CHECK(cert.max_inclusion_kind == MaxInclusionKind::dual_ray_scan);
    CHECK(cert.dual_ray_pairs_checked == 16);
    CHECK(cert.product_generators_checked == 16);
    CHECK(cert.clauses.ok());
}

TEST_CASE("certify swaps the A side when the magical value is positive") {
    const auto asym = asymmetric_hexagon_witness();
    const auto cert = certify(asym.system, asym.witness, asym.system, asym.witness);
    CHECK(cert.swapped_a);
    CHECK(cert.magical_value == Rat(-1, 16));
    CHECK(cert.clauses.ok());

    // Pre-swapped input needs no swap and lands on the same value.
    const auto cert2 =
        certify(asym.system, swapped_roles(asym.witness), asym.system, asym.witness);
    CHECK(!cert2.swapped_a);
    CHECK(cert2.magical_value == Rat(-1, 16));
}

TEST_CASE("certify refuses invalid witnesses") {
    const auto sq = catalog("square");
    const auto tri = catalog("triangle");
    // No witness exists for a classical cone; a degenerate attempt fails.
    IncompatibilityWitness fake = *sq.witness;
    fake.xp = fake.x0;
    fake.xm = fake.x1;
    CHECK_THROWS_AS(certify(tri.system, fake, sq.system, *sq.witness), certification_error);
    CHECK_THROWS_AS(certify(sq.system, fake, sq.system, *sq.witness), certification_error);
}

TEST_CASE("certify qubit x square via the analytic path") {
    const auto qb = catalog("qubit-lorentz");
    const auto sq = catalog("square");
    const auto cert = certify(qb.system, *qb.witness, sq.system, *sq.witness);
    CHECK(cert.min_exclusion_kind == MinExclusionKind::by_phi);
    CHECK(cert.max_inclusion_kind == MaxInclusionKind::by_witness);
    CHECK(cert.magical_value == 0);
    CHECK(cert.unit_pairing > 0);
    CHECK(cert.clauses.ok());
}

TEST_CASE("property: max inclusion inequality over random dual elements") {
    const auto ea = catalog("diamond"), eb = catalog("pentagon-rational");
    const auto &wa = *ea.witness, &wb = *eb.witness;
    const TensorElement omega = build_omega(wa, wb);
    const auto da = enumerate_extreme_rays(dual(ea.system.cone));
    const auto db = enumerate_extreme_rays(dual(eb.system.cone));
    PhiloxStream rng(103, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const Vec phi1 = random_cone_element(da, rng);
        const Vec phi2 = random_cone_element(db, rng);
        const Rat a0 = dot(phi1, wa.x0), a1 = dot(phi1, wa.x1), ap = dot(phi1, wa.xp);
        const Rat b0 = dot(phi2, wb.x0), b1 = dot(phi2, wb.x1), bp = dot(phi2, wb.xp);
        const Rat value = pairing(outer(phi1, phi2), omega);
        CHECK(value == a0 * b0 + a1 * b1 - (ap - a0) * (bp - b0));
        CHECK(value >= 0);
    }
}

TEST_CASE("witness families are incompatible for every catalog entry") {
    for (const std::string name :
         {"square", "diamond", "hexagon", "pentagon-rational", "qubit-lorentz"}) {
        const auto e = catalog(name);
        const auto& w = *e.witness;
        const auto r = check_compatibility({w.x0, w.x1}, {w.xp, w.xm}, e.system.cone);
        CHECK(r.status == CompatStatus::incompatible);
    }
}

}  // TEST_SUITE
