#pragma once

// Kite/blunt-square geometry: verification of kite-square sandwichings of a
// cone, derivation of strong-incompatibility witnesses from them, a
// heuristic sandwich search, and a catalog of exactly constructed example
// systems.
//
// A sandwich consists of linear maps Psi: R^3 -> V and Phi: V -> R^3 with
// Phi o Psi = Id, Psi mapping the cone over a kite into C and Phi mapping C
// into the cone over the blunt square (the unit square minus its corners).

#include "gptcones/cone.hpp"
#include "gptcones/report.hpp"
#include "gptcones/witness.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace gptcones {

struct Kite {
    // (alpha_0, alpha_1, alpha_minus, alpha_plus), each in (-1, 1).
    std::array<Rat, 4> alpha;

    // Vertices (-1,a0), (1,a1), (a-,-1), (a+,1) of the planar kite.
    std::array<Vec, 4> vertices() const;
    // The same vertices lifted to height 1: extreme rays of the kite cone.
    std::array<Vec, 4> lifted_vertices() const;
};

struct KiteSandwich {
    Mat psi;  // dim x 3
    Mat phi;  // 3 x dim
    Kite kite;
};

// Membership in the cone over the blunt square: v = 0, or v3 > 0 with
// |v1| <= v3, |v2| <= v3 and not both equalities.
bool blunt_cone_member(const Vec& v);

// Positive coefficients with l0 u0 + l1 u1 = l- u- + l+ u+ over the lifted
// kite vertices, normalised so l0 + l1 = 1 (hence l- + l+ = 1).
std::array<Rat, 4> solve_lambda(const Kite& k);

CheckReport verify_sandwich(const KiteSandwich& s, const ConeRep& cone);

// The raw witness construction: x_i = lambda_i Psi(u_i) and f_i = T_i o Phi
// with T_0 = z-x, T_1 = z+x, T_- = z-y, T_+ = z+y. The sum and zero-pairing
// identities hold for any maps with Phi o Psi = Id; cone membership does
// not, which is why derive_witness verifies first.
IncompatibilityWitness witness_from_sandwich(const KiteSandwich& s);

// Verifies the sandwich, then derives the witness. Throws witness_error on
// verification failure.
IncompatibilityWitness derive_witness(const KiteSandwich& s, const ConeRep& cone);

enum class SearchStatus { found, classical, exhausted };

struct SandwichSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<KiteSandwich> sandwich;
    int attempts = 0;
};

// Heuristic search over ordered 4-tuples of extreme rays whose unique linear
// relation has a strictly positive crossing pattern. Exhaustion is not a
// classicality proof.
SandwichSearchResult search_sandwich(const ConeRep& cone, int budget, std::uint64_t seed);

struct CatalogEntry {
    GptSystem system;
    std::optional<KiteSandwich> sandwich;
    std::optional<IncompatibilityWitness> witness;
    bool classical = false;
};

// Names: triangle, square, diamond, hexagon, pentagon-rational,
// qubit-lorentz. Non-classical entries carry a verified witness.
CatalogEntry catalog(const std::string& name);

}  // namespace gptcones
