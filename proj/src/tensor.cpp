#include "gptcones/tensor.hpp"

#include "gptcones/double_description.hpp"
#include "gptcones/lp.hpp"
#include "gptcones/philox.hpp"

#include <cmath>

namespace gptcones {

TensorElement outer(const Vec& a, const Vec& b) {
    TensorElement t(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < t.dim1; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < t.dim2; ++j) t.at(i, j) = a[i] * b[j];
    }
    return t;
}

namespace {

void check_same_shape(const TensorElement& a, const TensorElement& b, const char* who) {
    if (a.dim1 != b.dim1 || a.dim2 != b.dim2)
        throw dim_mismatch_error(std::string(who) + ": tensor shape mismatch");
}

}  // namespace

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    check_same_shape(a, b, "tensor_add");
    TensorElement r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
    check_same_shape(a, b, "tensor_sub");
    TensorElement r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
    return r;
}

TensorElement tensor_scaled(const TensorElement& a, const Rat& s) {
    TensorElement r = a;
    for (auto& e : r.entries) e *= s;
    return r;
}

Rat pairing(const TensorElement& f, const TensorElement& w) {
    check_same_shape(f, w, "pairing");
    Rat s = 0;
    for (std::size_t i = 0; i < f.entries.size(); ++i) s += f.entries[i] * w.entries[i];
    return s;
}

bool tensor_is_zero(const TensorElement& w) {
    return std::all_of(w.entries.begin(), w.entries.end(), [](const Rat& x) { return x == 0; });
}

namespace {

void require_polyhedral(const GptSystem& s, const char* who) {
    if (!is_polyhedral(s.cone))
        throw unsupported_rep_error(std::string(who) + ": Lorentz factor unsupported for explicit construction");
}

void check_factor_dims(const GptSystem& a, const GptSystem& b, const TensorElement& w,
                       const char* who) {
    if (w.dim1 != cone_dim(a.cone) || w.dim2 != cone_dim(b.cone))
        throw dim_mismatch_error(std::string(who) + ": tensor/factor dimension mismatch");
}

std::vector<Vec> product_generators(const std::vector<Vec>& ra, const std::vector<Vec>& rb) {
    std::vector<Vec> out;
    out.reserve(ra.size() * rb.size());
    for (const Vec& g : ra)
        for (const Vec& h : rb) out.push_back(outer(g, h).entries);
    return out;
}

}  // namespace

PolyV min_tensor(const GptSystem& a, const GptSystem& b) {
    require_polyhedral(a, "min_tensor");
    require_polyhedral(b, "min_tensor");
    const auto ra = enumerate_extreme_rays(a.cone);
    const auto rb = enumerate_extreme_rays(b.cone);
    return PolyV{cone_dim(a.cone) * cone_dim(b.cone), product_generators(ra, rb)};
}

PolyV max_tensor_vrep(const GptSystem& a, const GptSystem& b, int dim_cap) {
    require_polyhedral(a, "max_tensor_vrep");
    require_polyhedral(b, "max_tensor_vrep");
    const int d = cone_dim(a.cone) * cone_dim(b.cone);
    if (d > dim_cap) throw budget_error("max_tensor_vrep: product dimension exceeds cap");
    // Facets of the max tensor are the products of the factors' dual rays.
    const auto fa = enumerate_extreme_rays(dual(a.cone));
    const auto fb = enumerate_extreme_rays(dual(b.cone));
    return PolyV{d, dd_extreme_rays(product_generators(fa, fb), d)};
}

namespace {

// A rational point of the dual Lorentz cone close to its boundary, from a
// seeded direction draw. Exact membership is re-established by rounding the
// height up.
Vec sampled_dual_lorentz(int dim, PhiloxStream& rng) {
    Vec v(dim, Rat(0));
    Rat sq = 0;
    constexpr std::int64_t kGrid = 1 << 16;
    for (int i = 0; i + 1 < dim; ++i) {
        const std::int64_t raw =
            static_cast<std::int64_t>(rng.next_below(2 * kGrid + 1)) - kGrid;
        v[i] = Rat(raw, kGrid);
        sq += v[i] * v[i];
    }
    // Smallest k/kGrid with (k/kGrid)^2 >= sq, found by doubling then binary
    // search: keeps the sample exactly inside the self-dual cone.
    Int lo = 0, hi = 1;
    const auto ge = [&](const Int& k) { return Rat(k, kGrid) * Rat(k, kGrid) >= sq; };
    while (!ge(hi)) hi <<= 1;
    while (lo + 1 < hi) {
        const Int mid = (lo + hi) / 2;
        if (ge(mid)) hi = mid;
        else lo = mid;
    }
    v[dim - 1] = Rat(hi, kGrid);
    return v;
}

std::vector<Vec> dual_sample_set(const GptSystem& s, int count, PhiloxStream& rng) {
    std::vector<Vec> out;
    out.push_back(s.unit);
    if (is_polyhedral(s.cone)) {
        auto rays = enumerate_extreme_rays(dual(s.cone));
        out.insert(out.end(), rays.begin(), rays.end());
        return out;
    }
    const int d = cone_dim(s.cone);
    for (int i = 0; i < count; ++i) out.push_back(sampled_dual_lorentz(d, rng));
    return out;
}

}  // namespace

MaxMembership max_membership(const GptSystem& a, const GptSystem& b, const TensorElement& w,
                             int sample_count, std::uint64_t seed) {
    check_factor_dims(a, b, w, "max_membership");
    if (is_polyhedral(a.cone) && is_polyhedral(b.cone)) {
        const auto fa = enumerate_extreme_rays(dual(a.cone));
        const auto fb = enumerate_extreme_rays(dual(b.cone));
        for (const Vec& f : fa)
            for (const Vec& g : fb)
                if (pairing(outer(f, g), w) < 0) return MaxMembership::not_member;
        return MaxMembership::member;
    }
    // Falsification-only sampling path.
    PhiloxStream rng(seed, 0);
    const int per_side = static_cast<int>(std::sqrt(static_cast<double>(sample_count))) + 1;
    const auto fa = dual_sample_set(a, per_side, rng);
    const auto fb = dual_sample_set(b, per_side, rng);
    for (const Vec& f : fa)
        for (const Vec& g : fb)
            if (pairing(outer(f, g), w) < 0) return MaxMembership::not_member;
    return MaxMembership::inconclusive;
}

std::pair<bool, MinMembershipCertificate> min_membership(const GptSystem& a, const GptSystem& b,
                                                         const TensorElement& w) {
    check_factor_dims(a, b, w, "min_membership");
    require_polyhedral(a, "min_membership");
    require_polyhedral(b, "min_membership");
    const PolyV mt = min_tensor(a, b);
    const int d = mt.dim;
    Mat cols(d, Vec(mt.generators.size(), Rat(0)));
    for (std::size_t k = 0; k < mt.generators.size(); ++k)
        for (int i = 0; i < d; ++i) cols[i][k] = mt.generators[k][i];

    const auto fr = lp_feasible(cols, w.entries);
    MinMembershipCertificate cert;
    if (fr.feasible) {
        cert.inside = true;
        cert.coefficients = fr.x;
        // c >= 0 and sum c_k g_k = w, exactly.
        Vec recon(d, Rat(0));
        for (std::size_t k = 0; k < mt.generators.size(); ++k) {
            if (fr.x[k] < 0) throw internal_invariant_error("min_membership: negative coefficient");
            recon = add(recon, scaled(mt.generators[k], fr.x[k]));
        }
        if (recon != w.entries) throw internal_invariant_error("min_membership: reconstruction mismatch");
        return {true, std::move(cert)};
    }
    cert.inside = false;
    cert.separating.dim1 = w.dim1;
    cert.separating.dim2 = w.dim2;
    cert.separating.entries.resize(w.entries.size());
    for (std::size_t i = 0; i < w.entries.size(); ++i) cert.separating.entries[i] = -fr.farkas[i];
    for (const Vec& g : mt.generators)
        if (dot(cert.separating.entries, g) < 0)
            throw internal_invariant_error("min_membership: separating functional negative on a generator");
    cert.separation_value = pairing(cert.separating, w);
    if (cert.separation_value >= 0)
        throw internal_invariant_error("min_membership: separating functional fails to separate");
    return {false, std::move(cert)};
}

bool tensor_equal(const GptSystem& a, const GptSystem& b, int dim_cap) {
    require_polyhedral(a, "tensor_equal");
    require_polyhedral(b, "tensor_equal");
    const PolyV max_rep = max_tensor_vrep(a, b, dim_cap);
    for (const Vec& ray : max_rep.generators) {
        TensorElement w;
        w.dim1 = cone_dim(a.cone);
        w.dim2 = cone_dim(b.cone);
        w.entries = ray;
        if (!min_membership(a, b, w).first) return false;
    }
    return true;
}

}  // namespace gptcones
