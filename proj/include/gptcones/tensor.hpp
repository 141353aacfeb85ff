#pragma once

// Minimal and maximal tensor products of cones, with exact membership
// oracles and an equality test. Coordinates are row-major over the product
// basis: entry (i,j) multiplies e_i (x) e_j, and a functional pairs with a
// tensor by the entrywise sum.

#include "gptcones/cone.hpp"

#include <cstdint>
#include <optional>

namespace gptcones {

struct TensorElement {
    int dim1 = 0, dim2 = 0;
    std::vector<Rat> entries;  // row-major, dim1*dim2

    TensorElement() = default;
    TensorElement(int d1, int d2) : dim1(d1), dim2(d2), entries(d1 * d2, Rat(0)) {}

    Rat& at(int i, int j) { return entries[i * dim2 + j]; }
    const Rat& at(int i, int j) const { return entries[i * dim2 + j]; }

    bool operator==(const TensorElement&) const = default;
};

TensorElement outer(const Vec& a, const Vec& b);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b);
TensorElement tensor_scaled(const TensorElement& a, const Rat& s);
// Entrywise pairing sum f_ij w_ij; the evaluation of a product functional.
Rat pairing(const TensorElement& f, const TensorElement& w);
bool tensor_is_zero(const TensorElement& w);

// Generators are all pairwise products of the factors' extreme rays;
// redundancies are not removed here.
PolyV min_tensor(const GptSystem& a, const GptSystem& b);

// V-representation of the maximal tensor product, computed by double
// description on the dual of the minimal tensor of the duals. Polyhedral
// factors only; guarded by the product-dimension cap.
PolyV max_tensor_vrep(const GptSystem& a, const GptSystem& b, int dim_cap = 16);

enum class MaxMembership { member, not_member, inconclusive };

// Polyhedral factors decide exactly by scanning products of dual extreme
// rays. With a Lorentz factor, seeded dual sampling can only falsify;
// absence of a violation is reported as inconclusive.
MaxMembership max_membership(const GptSystem& a, const GptSystem& b, const TensorElement& w,
                             int sample_count = 10000, std::uint64_t seed = 1);

struct MinMembershipCertificate {
    bool inside = false;
    std::vector<Rat> coefficients;  // over min_tensor generators when inside
    TensorElement separating;       // >= 0 on all product generators, < 0 on w
    Rat separation_value;
};

std::pair<bool, MinMembershipCertificate> min_membership(const GptSystem& a, const GptSystem& b,
                                                         const TensorElement& w);

// True iff every extreme ray of the maximal tensor lies in the minimal one.
bool tensor_equal(const GptSystem& a, const GptSystem& b, int dim_cap = 16);

}  // namespace gptcones
