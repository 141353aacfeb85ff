#include "gptcones/cone.hpp"

#include "gptcones/double_description.hpp"
#include "gptcones/lp.hpp"

#include <algorithm>

namespace gptcones {

int cone_dim(const ConeRep& c) {
    return std::visit([](const auto& r) { return r.dim; }, c);
}

bool is_polyhedral(const ConeRep& c) {
    return !std::holds_alternative<LorentzCone>(c);
}

Vec canonical_ray(const Vec& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("canonical_ray: zero vector");
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = lcm(den_lcm, denominator(x));
    std::vector<Int> ints(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (den_lcm / denominator(v[i]));
        g = gcd(g, abs(ints[i]));
    }
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

std::vector<Vec> canonical_ray_set(std::vector<Vec> rays) {
    for (auto& r : rays) r = canonical_ray(r);
    std::sort(rays.begin(), rays.end(), vec_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

namespace {

void check_dim(const ConeRep& c, const Vec& x, const char* who) {
    if (static_cast<int>(x.size()) != cone_dim(c))
        throw dim_mismatch_error(std::string(who) + ": vector/cone dimension mismatch");
}

// x_d^2 - sum_{i<d} x_i^2
Rat lorentz_slack(const Vec& x) {
    Rat s = x.back() * x.back();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s -= x[i] * x[i];
    return s;
}

// Columns are the generators; membership of x is feasibility of G^T c = x,
// c >= 0.
Mat generator_columns(const std::vector<Vec>& gens, int dim) {
    Mat a(dim, Vec(gens.size(), Rat(0)));
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (int i = 0; i < dim; ++i) a[i][k] = gens[k][i];
    return a;
}

}  // namespace

bool membership(const ConeRep& c, const Vec& x) {
    check_dim(c, x, "membership");
    if (const auto* h = std::get_if<PolyH>(&c)) {
        for (const Vec& f : h->facets)
            if (dot(f, x) < 0) return false;
        return true;
    }
    if (const auto* v = std::get_if<PolyV>(&c)) {
        return lp_feasible(generator_columns(v->generators, v->dim), x).feasible;
    }
    const Vec& xx = x;
    return xx.back() >= 0 && lorentz_slack(xx) >= 0;
}

ConeRep dual(const ConeRep& c) {
    if (const auto* v = std::get_if<PolyV>(&c)) return PolyH{v->dim, v->generators};
    if (const auto* h = std::get_if<PolyH>(&c)) return PolyV{h->dim, h->facets};
    return c;  // Lorentz is self-dual
}

bool is_proper(const ConeRep& c) {
    if (const auto* l = std::get_if<LorentzCone>(&c)) return l->dim >= 2;
    if (const auto* v = std::get_if<PolyV>(&c)) {
        if (v->generators.empty()) return false;
        for (const Vec& g : v->generators)
            if (is_zero_vec(g)) return false;
        Mat rows = v->generators;
        if (rank(rows) != v->dim) return false;  // not generating
        // Salient iff no nontrivial nonnegative combination hits zero:
        // feasibility of sum c_k g_k = 0, sum c_k = 1, c >= 0.
        Mat a = generator_columns(v->generators, v->dim);
        a.push_back(Vec(v->generators.size(), Rat(1)));
        Vec b(v->dim + 1, Rat(0));
        b.back() = 1;
        return !lp_feasible(a, b).feasible;
    }
    const auto& h = std::get<PolyH>(c);
    if (h.facets.empty()) return false;
    for (const Vec& f : h.facets)
        if (is_zero_vec(f)) return false;
    Mat rows = h.facets;
    if (rank(rows) != h.dim) return false;  // contains a line
    // Generating iff the cone has interior: F x >= 1 feasible.
    GeneralLp lp;
    lp.a = h.facets;
    lp.b = Vec(h.facets.size(), Rat(1));
    lp.rel.assign(h.facets.size(), '>');
    lp.objective = Vec(h.dim, Rat(0));
    lp.free_var.assign(h.dim, true);
    return solve_general_lp(lp).status == LpStatus::optimal;
}

bool is_classical(const ConeRep& c) {
    if (!is_proper(c)) throw std::invalid_argument("is_classical: cone is not proper");
    if (const auto* l = std::get_if<LorentzCone>(&c)) return l->dim <= 2;
    const auto rays = enumerate_extreme_rays(c);
    if (static_cast<int>(rays.size()) != cone_dim(c)) return false;
    Mat m = rays;
    return rank(m) == cone_dim(c);
}

bool is_strictly_positive(const Vec& f, const ConeRep& c) {
    check_dim(c, f, "is_strictly_positive");
    if (const auto* l = std::get_if<LorentzCone>(&c)) {
        (void)l;
        return f.back() > 0 && lorentz_slack(f) > 0;
    }
    // Positive on every generator implies positive on the whole cone minus 0.
    const std::vector<Vec> gens = std::holds_alternative<PolyV>(c)
                                      ? std::get<PolyV>(c).generators
                                      : to_vrep(c).generators;
    for (const Vec& g : gens)
        if (dot(f, g) <= 0) return false;
    return true;
}

PolyV cone_over(const std::vector<Vec>& points) {
    if (points.empty()) throw std::invalid_argument("cone_over: empty point list");
    const int dim = static_cast<int>(points[0].size());
    PolyV out{dim + 1, {}};
    for (const Vec& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw dim_mismatch_error("cone_over: inconsistent point dimensions");
        Vec g = p;
        g.push_back(Rat(1));
        out.generators.push_back(std::move(g));
    }
    return out;
}

GptSystem make_system(ConeRep cone, Vec unit) {
    if (static_cast<int>(unit.size()) != cone_dim(cone))
        throw dim_mismatch_error("make_system: unit dimension mismatch");
    if (!is_proper(cone)) throw std::invalid_argument("make_system: cone is not proper");
    if (!is_strictly_positive(unit, cone))
        throw std::invalid_argument("make_system: unit is not strictly positive");
    return GptSystem{std::move(cone), std::move(unit)};
}

Vec default_unit(const ConeRep& c) {
    if (const auto* l = std::get_if<LorentzCone>(&c)) {
        Vec u(l->dim, Rat(0));
        u.back() = 1;
        return u;
    }
    const auto dual_rays = enumerate_extreme_rays(dual(c));
    Vec u(cone_dim(c), Rat(0));
    for (const Vec& r : dual_rays) u = add(u, r);
    return u;
}

}  // namespace gptcones
