#include "gptcones/double_description.hpp"

#include "gptcones/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace gptcones {

namespace {

constexpr int kMaxRows = 512;

// Incidence set of tight constraints per ray, packed into 64-bit words.
struct TightSet {
    std::vector<std::uint64_t> w;

    explicit TightSet(int bits = 0) : w((bits + 63) / 64, 0) {}

    void set(int i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1; }

    static TightSet intersect(const TightSet& a, const TightSet& b) {
        TightSet r;
        r.w.resize(a.w.size());
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }

    bool contains(const TightSet& sub) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((sub.w[i] & ~w[i]) != 0) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += static_cast<int>(std::popcount(x));
        return c;
    }
};

struct Ray {
    Vec v;
    TightSet tight;
};

Rat abs_coord_sum(const Vec& v) {
    Rat s = 0;
    for (const Rat& x : v) s += abs(x);
    return s;
}

}  // namespace

std::vector<Vec> dd_extreme_rays(const Mat& input_rows, int dim) {
    if (static_cast<int>(input_rows.size()) > kMaxRows)
        throw budget_error("dd_extreme_rays: row count exceeds desk-scale cap");
    Mat rows = input_rows;
    std::stable_sort(rows.begin(), rows.end(), [](const Vec& a, const Vec& b) {
        const Rat sa = abs_coord_sum(a), sb = abs_coord_sum(b);
        if (sa != sb) return sa > sb;
        return vec_less(a, b);
    });
    const int m = static_cast<int>(rows.size());

    // Initial simplicial cone from a maximal independent subset of rows.
    std::vector<int> basis_rows;
    {
        Mat acc;
        for (int i = 0; i < m && static_cast<int>(basis_rows.size()) < dim; ++i) {
            acc.push_back(rows[i]);
            if (rank(acc) == static_cast<int>(acc.size()))
                basis_rows.push_back(i);
            else
                acc.pop_back();
        }
    }
    if (static_cast<int>(basis_rows.size()) != dim)
        throw dim_mismatch_error("dd_extreme_rays: constraint matrix rank below dimension (cone not pointed)");

    Mat b(dim, Vec(dim));
    for (int i = 0; i < dim; ++i) b[i] = rows[basis_rows[i]];
    const auto binv = invert(b);
    if (!binv) throw internal_invariant_error("dd_extreme_rays: basis not invertible");

    std::vector<bool> in_basis(m, false);
    for (int i : basis_rows) in_basis[i] = true;

    std::vector<Ray> rays;
    for (int j = 0; j < dim; ++j) {
        Ray r;
        r.v.resize(dim);
        for (int i = 0; i < dim; ++i) r.v[i] = (*binv)[i][j];
        r.v = canonical_ray(r.v);
        r.tight = TightSet(m);
        for (int i = 0; i < dim; ++i)
            if (i != j) r.tight.set(basis_rows[i]);
        rays.push_back(std::move(r));
    }

    for (int k = 0; k < m; ++k) {
        if (in_basis[k]) continue;
        const Vec& a = rows[k];
        std::vector<Rat> sigma(rays.size());
        std::vector<int> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            sigma[i] = dot(a, rays[i].v);
            if (sigma[i] > 0) pos.push_back(static_cast<int>(i));
            else if (sigma[i] < 0) neg.push_back(static_cast<int>(i));
            else rays[i].tight.set(k);
        }
        if (neg.empty()) continue;

        std::vector<Ray> created;
        for (int ip : pos) {
            for (int im : neg) {
                TightSet common = TightSet::intersect(rays[ip].tight, rays[im].tight);
                // Necessary rank condition for adjacency, then the
                // combinatorial test: no third ray's tight set contains the
                // intersection.
                if (common.count() < dim - 2) continue;
                bool adjacent = true;
                for (std::size_t j = 0; j < rays.size(); ++j) {
                    if (static_cast<int>(j) == ip || static_cast<int>(j) == im) continue;
                    if (rays[j].tight.contains(common)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Ray nr;
                nr.v = sub(scaled(rays[im].v, sigma[ip]), scaled(rays[ip].v, sigma[im]));
                nr.v = canonical_ray(nr.v);
                nr.tight = common;
                nr.tight.set(k);
                created.push_back(std::move(nr));
            }
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + rays.size() - neg.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (sigma[i] >= 0) next.push_back(std::move(rays[i]));
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return canonical_ray_set(std::move(out));
}

namespace {

// Removes duplicates and generators lying in the conic hull of the rest.
// For a pointed cone this leaves exactly the extreme rays.
std::vector<Vec> reduce_to_extreme(const std::vector<Vec>& gens, int dim) {
    std::vector<Vec> unique = canonical_ray_set(gens);
    std::vector<bool> keep(unique.size(), true);
    for (std::size_t k = 0; k < unique.size(); ++k) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != k && keep[j]) others.push_back(unique[j]);
        if (others.empty()) continue;
        Mat a(dim, Vec(others.size(), Rat(0)));
        for (std::size_t j = 0; j < others.size(); ++j)
            for (int i = 0; i < dim; ++i) a[i][j] = others[j][i];
        if (lp_feasible(a, unique[k]).feasible) keep[k] = false;
    }
    std::vector<Vec> out;
    for (std::size_t k = 0; k < unique.size(); ++k)
        if (keep[k]) out.push_back(unique[k]);
    return out;
}

}  // namespace

PolyV to_vrep(const ConeRep& c) {
    if (const auto* v = std::get_if<PolyV>(&c))
        return PolyV{v->dim, reduce_to_extreme(v->generators, v->dim)};
    if (const auto* h = std::get_if<PolyH>(&c))
        return PolyV{h->dim, dd_extreme_rays(h->facets, h->dim)};
    throw unsupported_rep_error("to_vrep: Lorentz cone is not polyhedral");
}

PolyH to_hrep(const ConeRep& c) {
    if (const auto* v = std::get_if<PolyV>(&c))
        return PolyH{v->dim, dd_extreme_rays(v->generators, v->dim)};
    if (const auto* h = std::get_if<PolyH>(&c))
        return PolyH{h->dim, reduce_to_extreme(h->facets, h->dim)};
    throw unsupported_rep_error("to_hrep: Lorentz cone is not polyhedral");
}

std::vector<Vec> enumerate_extreme_rays(const ConeRep& c) {
    if (std::holds_alternative<LorentzCone>(c))
        throw unsupported_rep_error("enumerate_extreme_rays: Lorentz cone has a continuum of extreme rays");
    return to_vrep(c).generators;
}

}  // namespace gptcones
