#include "gptcones/compatibility.hpp"

#include "gptcones/double_description.hpp"
#include "gptcones/lp.hpp"

#include <algorithm>
#include <cmath>

namespace gptcones {

namespace {

Vec family_sum(const std::vector<Vec>& fam, int dim) {
    Vec s(dim, Rat(0));
    for (const Vec& v : fam) s = add(s, v);
    return s;
}

void validate_family(const std::vector<Vec>& fam, const ConeRep& cone, const char* name) {
    for (const Vec& v : fam) {
        if (static_cast<int>(v.size()) != cone_dim(cone))
            throw dim_mismatch_error(std::string("check_compatibility: dimension mismatch in ") + name);
        if (!membership(cone, v))
            throw std::invalid_argument(std::string("check_compatibility: ") + name +
                                        " contains a vector outside the cone");
    }
}

CompatibilityResult compatible_with(std::vector<std::vector<Vec>> z) {
    CompatibilityResult r;
    r.status = CompatStatus::compatible;
    r.decomposition = CompatibilityDecomposition{std::move(z)};
    return r;
}

CompatibilityResult polyhedral_check(const std::vector<Vec>& xs, const std::vector<Vec>& ys,
                                     const ConeRep& cone) {
    const int d = cone_dim(cone);
    const std::vector<Vec> gens = std::holds_alternative<PolyV>(cone)
                                      ? std::get<PolyV>(cone).generators
                                      : to_vrep(cone).generators;
    const int nx = static_cast<int>(xs.size());
    const int ny = static_cast<int>(ys.size());
    const int k = static_cast<int>(gens.size());
    // Variables c[i][j][t] >= 0 with z_ij = sum_t c[i][j][t] g_t.
    const int cols = nx * ny * k;
    const auto col = [&](int i, int j, int t) { return (i * ny + j) * k + t; };

    Mat a((nx + ny) * d, Vec(cols, Rat(0)));
    Vec b((nx + ny) * d, Rat(0));
    for (int i = 0; i < nx; ++i)
        for (int c0 = 0; c0 < d; ++c0) {
            const int row = i * d + c0;
            b[row] = xs[i][c0];
            for (int j = 0; j < ny; ++j)
                for (int t = 0; t < k; ++t) a[row][col(i, j, t)] = gens[t][c0];
        }
    for (int j = 0; j < ny; ++j)
        for (int c0 = 0; c0 < d; ++c0) {
            const int row = (nx + j) * d + c0;
            b[row] = ys[j][c0];
            for (int i = 0; i < nx; ++i)
                for (int t = 0; t < k; ++t) a[row][col(i, j, t)] = gens[t][c0];
        }

    const auto fr = lp_feasible(a, b);
    if (!fr.feasible) {
        CompatibilityResult r;
        r.status = CompatStatus::incompatible;
        return r;
    }
    std::vector<std::vector<Vec>> z(nx, std::vector<Vec>(ny, Vec(d, Rat(0))));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            for (int t = 0; t < k; ++t) {
                const Rat& c0 = fr.x[col(i, j, t)];
                if (c0 == 0) continue;
                z[i][j] = add(z[i][j], scaled(gens[t], c0));
            }
    return compatible_with(std::move(z));
}

// ---- Lorentz support -------------------------------------------------

Rat lorentz_q(const Vec& v) {
    Rat s = v.back() * v.back();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s -= v[i] * v[i];
    return s;
}

bool on_boundary_ray(const Vec& v) { return lorentz_q(v) == 0; }

// Value a + b*sqrt(disc), disc >= 0 rational. Enough arithmetic to evaluate
// quadratics at quadratic surds and read off signs exactly.
struct Surd {
    Rat a, b, disc;

    int sign() const {
        if (b == 0 || disc == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
        if (a == 0) return b > 0 ? 1 : -1;
        if (a > 0 && b > 0) return 1;
        if (a < 0 && b < 0) return -1;
        const Rat lhs = a * a, rhs = b * b * disc;
        if (lhs == rhs) return 0;
        if (a > 0) return lhs > rhs ? 1 : -1;  // b < 0
        return rhs > lhs ? 1 : -1;             // a < 0, b > 0
    }
};

// q(s) = qa s^2 + qb s + qc evaluated at s = x + y*sqrt(disc).
Surd eval_quadratic_at(const Rat& qa, const Rat& qb, const Rat& qc, const Rat& x, const Rat& y,
                       const Rat& disc) {
    Surd r;
    r.disc = disc;
    r.a = qa * (x * x + y * y * disc) + qb * x + qc;
    r.b = qa * 2 * x * y + qb * y;
    return r;
}

std::optional<Rat> rational_sqrt(const Rat& v) {
    if (v < 0) return std::nullopt;
    const Int n = numerator(v), d = denominator(v);
    const Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn) / Rat(sd);
}

struct Quadratic {
    Rat a, b, c;  // a s^2 + b s + c >= 0
    Rat at(const Rat& s) const { return a * s * s + b * s + c; }
};

struct Interval {
    Rat lo, hi;
    bool empty = false;

    void clamp_lo(const Rat& v) { if (v > lo) lo = v; if (lo > hi) empty = true; }
    void clamp_hi(const Rat& v) { if (v < hi) hi = v; if (lo > hi) empty = true; }
    bool contains(const Rat& s) const { return !empty && s >= lo && s <= hi; }
};

struct OneParamSystem {
    Interval box{Rat(0), Rat(1)};
    std::vector<Quadratic> quads;
    bool inconsistent = false;

    // Constraint: base + s*dir lies in the Lorentz cone.
    void add_cone_constraint(const Vec& base, const Vec& dir) {
        const Rat h0 = base.back(), h1 = dir.back();
        if (h1 > 0) box.clamp_lo(-h0 / h1);
        else if (h1 < 0) box.clamp_hi(-h0 / h1);
        else if (h0 < 0) { inconsistent = true; return; }
        Quadratic q;
        q.a = h1 * h1;
        q.b = 2 * h0 * h1;
        q.c = h0 * h0;
        for (std::size_t i = 0; i + 1 < base.size(); ++i) {
            q.a -= dir[i] * dir[i];
            q.b -= 2 * base[i] * dir[i];
            q.c -= base[i] * base[i];
        }
        if (q.a == 0 && q.b == 0) {
            if (q.c < 0) inconsistent = true;
            return;
        }
        if (q.a == 0) {
            if (q.b > 0) box.clamp_lo(-q.c / q.b);
            else box.clamp_hi(-q.c / q.b);
            return;
        }
        quads.push_back(q);
    }

    bool feasible_at(const Rat& s) const {
        if (!box.contains(s)) return false;
        return std::all_of(quads.begin(), quads.end(),
                           [&](const Quadratic& q) { return q.at(s) >= 0; });
    }

    // Sound emptiness decision: the minimum of the feasible set, when
    // nonempty, is either box.lo or a root of an active quadratic.
    // Returns: 1 feasible at a rational point (stored in s_out),
    //          0 certainly empty, -1 feasible only at irrational points.
    int decide(Rat& s_out) const {
        if (inconsistent || box.empty) return 0;
        if (feasible_at(box.lo)) { s_out = box.lo; return 1; }
        if (feasible_at(box.hi)) { s_out = box.hi; return 1; }
        bool irrational_hit = false;
        for (const auto& q : quads) {
            const Rat disc = q.b * q.b - 4 * q.a * q.c;
            if (disc < 0) {
                if (q.a < 0) return 0;  // everywhere negative
                continue;
            }
            if (const auto root = rational_sqrt(disc)) {
                const Rat r1 = (-q.b + *root) / (2 * q.a);
                const Rat r2 = (-q.b - *root) / (2 * q.a);
                if (feasible_at(r1)) { s_out = r1; return 1; }
                if (feasible_at(r2)) { s_out = r2; return 1; }
                continue;
            }
            // Irrational roots s = x + y*sqrt(disc).
            for (int sgn : {+1, -1}) {
                const Rat x = -q.b / (2 * q.a);
                const Rat y = Rat(sgn) / (2 * q.a);
                // In box?
                Surd lo_gap{x - box.lo, y, disc};
                Surd hi_gap{box.hi - x, -y, disc};
                if (lo_gap.sign() < 0 || hi_gap.sign() < 0) continue;
                bool ok = true;
                for (const auto& q2 : quads) {
                    if (eval_quadratic_at(q2.a, q2.b, q2.c, x, y, disc).sign() < 0) { ok = false; break; }
                }
                if (ok) {
                    // Try to land on a nearby rational feasible point.
                    const double approx =
                        (-rat_double(q.b) + sgn * std::sqrt(rat_double(disc))) / (2 * rat_double(q.a));
                    for (int k = 8; k <= 48; k += 8) {
                        const double scale = std::ldexp(1.0, k);
                        const Rat cand = Rat(Int(static_cast<long long>(std::llround(approx * scale)))) /
                                         Rat(Int(1) << k);
                        if (feasible_at(cand)) { s_out = cand; return 1; }
                    }
                    irrational_hit = true;
                }
            }
        }
        return irrational_hit ? -1 : 0;
    }
};

CompatibilityResult lorentz_check(const std::vector<Vec>& xs, const std::vector<Vec>& ys,
                                  const ConeRep& cone) {
    const int d = cone_dim(cone);
    CompatibilityResult unknown;
    unknown.status = CompatStatus::unknown;

    const auto nx = xs.size(), ny = ys.size();
    if (nx > 2 || ny > 2) {
        unknown.note = "lorentz compatibility supported for families of at most 2+2";
        return unknown;
    }
    // Single-element families decompose trivially.
    if (nx == 1) {
        std::vector<std::vector<Vec>> z(1);
        z[0] = ys;
        return compatible_with(std::move(z));
    }
    if (ny == 1) {
        std::vector<std::vector<Vec>> z(2);
        z[0] = {xs[0]};
        z[1] = {xs[1]};
        return compatible_with(std::move(z));
    }

    const Vec zero(d, Rat(0));
    const auto decomposition_from = [&](const Vec& t) {
        // z00 = t, z01 = x0 - t, z10 = y0 - t, z11 = x1 - y0 + t.
        std::vector<std::vector<Vec>> z(2, std::vector<Vec>(2));
        z[0][0] = t;
        z[0][1] = sub(xs[0], t);
        z[1][0] = sub(ys[0], t);
        z[1][1] = add(sub(xs[1], ys[0]), t);
        return z;
    };

    // Quick rational guesses for t = z00.
    for (const Vec& guess : {zero, xs[0], ys[0], scaled(add(xs[0], sub(ys[0], xs[1])), Rat(1, 2))}) {
        const auto z = decomposition_from(guess);
        if (membership(cone, z[0][0]) && membership(cone, z[0][1]) && membership(cone, z[1][0]) &&
            membership(cone, z[1][1]))
            return compatible_with(decomposition_from(guess));
    }

    // A boundary-ray family member pins t to a line segment; the remaining
    // cone constraints become univariate quadratics solved exactly.
    // For w on a boundary ray, 0 <= v <= w forces v = s*w with s in [0,1].
    Vec base(d, Rat(0)), dir(d, Rat(0));
    bool collapsed = false;
    if (on_boundary_ray(xs[0])) {          // t in [0, x0]
        dir = xs[0];
        collapsed = true;
    } else if (on_boundary_ray(ys[0])) {   // y0 - t = s*y0  =>  t = (1-s) y0; reparametrise s->1-s
        dir = ys[0];
        collapsed = true;
    } else if (on_boundary_ray(xs[1])) {   // x1 - y0 + t = s*x1  =>  t = y0 - x1 + s*x1
        base = sub(ys[0], xs[1]);
        dir = xs[1];
        collapsed = true;
    } else if (on_boundary_ray(ys[1])) {   // x0 - t = s*y1  =>  t = x0 - s*y1
        base = xs[0];
        dir = scaled(ys[1], Rat(-1));
        collapsed = true;
    }
    if (!collapsed) {
        unknown.note = "no family member on a boundary ray; exact reduction unavailable";
        return unknown;
    }

    OneParamSystem sys;
    sys.add_cone_constraint(base, dir);                                   // t in C
    sys.add_cone_constraint(sub(xs[0], base), scaled(dir, Rat(-1)));      // x0 - t in C
    sys.add_cone_constraint(sub(ys[0], base), scaled(dir, Rat(-1)));      // y0 - t in C
    sys.add_cone_constraint(add(sub(xs[1], ys[0]), base), dir);           // x1 - y0 + t in C

    Rat s;
    const int verdict = sys.decide(s);
    if (verdict == 1) {
        const Vec t = add(base, scaled(dir, s));
        return compatible_with(decomposition_from(t));
    }
    if (verdict == 0) {
        CompatibilityResult r;
        r.status = CompatStatus::incompatible;
        return r;
    }
    unknown.note = "feasible only at irrational parameters; no rational decomposition found";
    return unknown;
}

}  // namespace

CompatibilityResult check_compatibility(const std::vector<Vec>& xs, const std::vector<Vec>& ys,
                                        const ConeRep& cone) {
    if (xs.empty() || ys.empty())
        throw std::invalid_argument("check_compatibility: empty family");
    validate_family(xs, cone, "xs");
    validate_family(ys, cone, "ys");
    const int d = cone_dim(cone);
    if (family_sum(xs, d) != family_sum(ys, d)) {
        CompatibilityResult r;
        r.status = CompatStatus::incompatible;
        r.note = "family sums differ";
        return r;
    }
    CompatibilityResult result = is_polyhedral(cone) ? polyhedral_check(xs, ys, cone)
                                                     : lorentz_check(xs, ys, cone);
    if (result.decomposition) {
        // Exact invariant check on the exhibit before handing it out.
        const auto& z = result.decomposition->z;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Vec row(d, Rat(0));
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (!membership(cone, z[i][j]))
                    throw internal_invariant_error("check_compatibility: z entry outside cone");
                row = add(row, z[i][j]);
            }
            if (row != xs[i]) throw internal_invariant_error("check_compatibility: row sum mismatch");
        }
        for (std::size_t j = 0; j < ys.size(); ++j) {
            Vec col(d, Rat(0));
            for (std::size_t i = 0; i < xs.size(); ++i) col = add(col, z[i][j]);
            if (col != ys[j]) throw internal_invariant_error("check_compatibility: column sum mismatch");
        }
    }
    return result;
}

}  // namespace gptcones
