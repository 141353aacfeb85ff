#include "gptcones/sandwich.hpp"

#include "gptcones/double_description.hpp"
#include "gptcones/lp.hpp"
#include "gptcones/philox.hpp"

#include <algorithm>
#include <numeric>

namespace gptcones {

std::array<Vec, 4> Kite::vertices() const {
    return {Vec{Rat(-1), alpha[0]}, Vec{Rat(1), alpha[1]}, Vec{alpha[2], Rat(-1)},
            Vec{alpha[3], Rat(1)}};
}

std::array<Vec, 4> Kite::lifted_vertices() const {
    auto v = vertices();
    std::array<Vec, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[i] = v[i];
        out[i].push_back(Rat(1));
    }
    return out;
}

bool blunt_cone_member(const Vec& v) {
    if (v.size() != 3) throw dim_mismatch_error("blunt_cone_member: expects a 3-vector");
    if (is_zero_vec(v)) return true;
    const Rat &x = v[0], &y = v[1], &z = v[2];
    if (z <= 0) return false;
    const Rat ax = abs(x), ay = abs(y);
    if (ax > z || ay > z) return false;
    return !(ax == z && ay == z);
}

std::array<Rat, 4> solve_lambda(const Kite& k) {
    for (const Rat& a : k.alpha)
        if (abs(a) >= 1) throw std::invalid_argument("solve_lambda: kite parameter outside (-1,1)");
    const Rat &a0 = k.alpha[0], &a1 = k.alpha[1], &am = k.alpha[2], &ap = k.alpha[3];
    // Unknowns (l1, l-, l+) with l0 = 1 - l1:
    //   2 l1 - a- l- - a+ l+ = 1          (x coordinate)
    //   (a1 - a0) l1 + l- - l+ = -a0      (y coordinate)
    //   l- + l+ = 1                       (height)
    const Mat m{{Rat(2), -am, -ap}, {a1 - a0, Rat(1), Rat(-1)}, {Rat(0), Rat(1), Rat(1)}};
    const Vec rhs{Rat(1), -a0, Rat(1)};
    const auto sol = solve_square(m, rhs);
    if (!sol) throw internal_invariant_error("solve_lambda: singular kite system");
    std::array<Rat, 4> lambda{Rat(1) - (*sol)[0], (*sol)[0], (*sol)[1], (*sol)[2]};
    for (const Rat& l : lambda)
        if (l <= 0) throw internal_invariant_error("solve_lambda: nonpositive coefficient");
    const auto u = k.lifted_vertices();
    Vec residual = sub(add(scaled(u[0], lambda[0]), scaled(u[1], lambda[1])),
                       add(scaled(u[2], lambda[2]), scaled(u[3], lambda[3])));
    if (!is_zero_vec(residual)) throw internal_invariant_error("solve_lambda: nonzero residual");
    return lambda;
}

CheckReport verify_sandwich(const KiteSandwich& s, const ConeRep& cone) {
    if (!is_polyhedral(cone))
        throw unsupported_rep_error("verify_sandwich: Lorentz cones unsupported");
    const int d = cone_dim(cone);
    if (static_cast<int>(s.psi.size()) != d || (d > 0 && static_cast<int>(s.psi[0].size()) != 3) ||
        s.phi.size() != 3 || static_cast<int>(s.phi[0].size()) != d)
        throw dim_mismatch_error("verify_sandwich: map shapes do not match the cone dimension");

    CheckReport report;
    bool kite_ok = true;
    for (const Rat& a : s.kite.alpha) kite_ok = kite_ok && abs(a) < 1;
    report.add("kite-parameters-in-range", kite_ok);

    report.add("phi-psi-identity", mat_mul(s.phi, s.psi) == identity_mat(3));

    bool vertices_inside = true;
    for (const Vec& u : s.kite.lifted_vertices())
        vertices_inside = vertices_inside && membership(cone, mat_vec(s.psi, u));
    report.add("kite-vertices-map-into-cone", vertices_inside);

    bool rays_blunt = true;
    for (const Vec& g : enumerate_extreme_rays(cone)) {
        const Vec img = mat_vec(s.phi, g);
        if (is_zero_vec(img) || !blunt_cone_member(img)) {
            rays_blunt = false;
            break;
        }
    }
    report.add("cone-rays-map-into-blunt-square", rays_blunt);
    return report;
}

IncompatibilityWitness witness_from_sandwich(const KiteSandwich& s) {
    const auto lambda = solve_lambda(s.kite);
    const auto u = s.kite.lifted_vertices();
    IncompatibilityWitness w;
    w.x0 = scaled(mat_vec(s.psi, u[0]), lambda[0]);
    w.x1 = scaled(mat_vec(s.psi, u[1]), lambda[1]);
    w.xm = scaled(mat_vec(s.psi, u[2]), lambda[2]);
    w.xp = scaled(mat_vec(s.psi, u[3]), lambda[3]);
    const Vec &r1 = s.phi[0], &r2 = s.phi[1], &r3 = s.phi[2];
    w.f0 = sub(r3, r1);
    w.f1 = add(r3, r1);
    w.fm = sub(r3, r2);
    w.fp = add(r3, r2);
    return w;
}

IncompatibilityWitness derive_witness(const KiteSandwich& s, const ConeRep& cone) {
    const CheckReport report = verify_sandwich(s, cone);
    if (!report.ok())
        throw witness_error("derive_witness: sandwich verification failed at clause '" +
                            report.first_failure()->name + "'");
    return witness_from_sandwich(s);
}

namespace {

// Left inverse of psi extended to the whole space by an LP that maximises
// the smallest blunt-square slack over the non-tuple extreme rays.
std::optional<Mat> extend_left_inverse(const Mat& psi, const std::vector<Vec>& rays,
                                       const std::vector<Vec>& tuple_rays, int d) {
    const int nvar = 3 * d + 1;  // phi entries + slack t
    const int tcol = 3 * d;
    GeneralLp lp;
    lp.free_var.assign(nvar, true);
    lp.objective.assign(nvar, Rat(0));
    lp.objective[tcol] = 1;
    lp.maximize = true;

    const auto phi_col = [&](int k, int l) { return k * d + l; };
    // Phi . Psi = Id
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec row(nvar, Rat(0));
            for (int l = 0; l < d; ++l) row[phi_col(i, l)] = psi[l][j];
            lp.a.push_back(std::move(row));
            lp.b.push_back(i == j ? Rat(1) : Rat(0));
            lp.rel.push_back('=');
        }
    // Blunt slacks for rays outside the tuple: z +- x >= t, z +- y >= t.
    for (const Vec& g : rays) {
        if (std::find(tuple_rays.begin(), tuple_rays.end(), g) != tuple_rays.end()) continue;
        for (int coord = 0; coord < 2; ++coord)
            for (int sign : {+1, -1}) {
                Vec row(nvar, Rat(0));
                for (int l = 0; l < d; ++l) {
                    row[phi_col(2, l)] = g[l];
                    row[phi_col(coord, l)] += Rat(sign) * g[l];
                }
                row[tcol] = -1;
                lp.a.push_back(std::move(row));
                lp.b.push_back(Rat(0));
                lp.rel.push_back('>');
            }
    }
    // Box on the entries keeps the LP bounded.
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < d; ++l) {
            Vec row(nvar, Rat(0));
            row[phi_col(k, l)] = 1;
            lp.a.push_back(row);
            lp.b.push_back(Rat(16));
            lp.rel.push_back('<');
            row[phi_col(k, l)] = 1;
            lp.a.push_back(std::move(row));
            lp.b.push_back(Rat(-16));
            lp.rel.push_back('>');
        }

    const auto sol = solve_general_lp(lp);
    if (sol.status != LpStatus::optimal || sol.objective <= 0) return std::nullopt;
    Mat phi(3, Vec(d));
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < d; ++l) phi[k][l] = sol.x[phi_col(k, l)];
    return phi;
}

}  // namespace

SandwichSearchResult search_sandwich(const ConeRep& cone, int budget, std::uint64_t seed) {
    SandwichSearchResult result;
    if (!is_polyhedral(cone))
        throw unsupported_rep_error("search_sandwich: Lorentz cones unsupported");
    if (is_classical(cone)) {
        result.status = SearchStatus::classical;
        return result;
    }
    const int d = cone_dim(cone);
    const auto rays = enumerate_extreme_rays(cone);
    const int n = static_cast<int>(rays.size());

    // Candidate 4-subsets in a seed-determined order, fixed up front.
    std::vector<std::array<int, 4>> subsets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) subsets.push_back({a, b, c, e});
    PhiloxStream rng(seed, 0);
    for (std::size_t i = subsets.size(); i > 1; --i)
        std::swap(subsets[i - 1], subsets[rng.next_below(i)]);

    for (const auto& subset : subsets) {
        if (result.attempts >= budget) break;
        // Unique linear relation among the four rays, if the span is 3-dim.
        Mat cols(d, Vec(4));
        for (int t = 0; t < 4; ++t)
            for (int r = 0; r < d; ++r) cols[r][t] = rays[subset[t]][r];
        const auto ns = nullspace(cols);
        if (ns.size() != 1) continue;
        Vec rel = ns[0];
        std::vector<int> pos_idx, neg_idx;
        for (int t = 0; t < 4; ++t) {
            if (rel[t] > 0) pos_idx.push_back(t);
            else if (rel[t] < 0) neg_idx.push_back(t);
        }
        if (pos_idx.size() != 2 || neg_idx.size() != 2) continue;

        for (int family_swap = 0; family_swap < 2 && result.attempts < budget; ++family_swap) {
            const auto& first = family_swap == 0 ? pos_idx : neg_idx;
            const auto& second = family_swap == 0 ? neg_idx : pos_idx;
            for (int o1 = 0; o1 < 2 && result.attempts < budget; ++o1)
                for (int o2 = 0; o2 < 2 && result.attempts < budget; ++o2) {
                    ++result.attempts;
                    const int i0 = first[o1], i1 = first[1 - o1];
                    const int im = second[o2], ip = second[1 - o2];
                    const Rat c0 = abs(rel[i0]), c1 = abs(rel[i1]);
                    const Rat cm = abs(rel[im]), cp = abs(rel[ip]);
                    // Normalise the first family to weight one, fold the
                    // second family's total weight into its ray scaling.
                    const Rat s1 = c0 + c1;
                    const Rat l0 = c0 / s1, l1 = c1 / s1;
                    const Rat s2 = (cm + cp) / s1;
                    const Rat lm = cm / s1 / s2, lp = cp / s1 / s2;
                    const Vec a0 = rays[subset[i0]], a1 = rays[subset[i1]];
                    const Vec am = scaled(rays[subset[im]], s2);
                    const Vec ap = scaled(rays[subset[ip]], s2);

                    const Rat d1 = l1 - l0, d2 = lp - lm;
                    Kite kite{{d2, d2, d1, d1}};
                    // Psi maps the lifted kite vertices onto (a0,a1,am,ap).
                    const auto u = kite.lifted_vertices();
                    Mat umat(3, Vec(3));
                    for (int r = 0; r < 3; ++r) {
                        umat[r][0] = u[0][r];
                        umat[r][1] = u[1][r];
                        umat[r][2] = u[2][r];
                    }
                    const auto uinv = invert(umat);
                    if (!uinv) continue;
                    Mat amat(d, Vec(3));
                    for (int r = 0; r < d; ++r) {
                        amat[r][0] = a0[r];
                        amat[r][1] = a1[r];
                        amat[r][2] = am[r];
                    }
                    const Mat psi = mat_mul(amat, *uinv);
                    if (mat_vec(psi, u[3]) != ap) continue;

                    Mat phi;
                    if (d == 3) {
                        const auto inv = invert(psi);
                        if (!inv) continue;
                        phi = *inv;
                    } else {
                        const auto ext = extend_left_inverse(
                            psi, rays, {rays[subset[0]], rays[subset[1]], rays[subset[2]], rays[subset[3]]}, d);
                        if (!ext) continue;
                        phi = *ext;
                    }
                    KiteSandwich candidate{psi, phi, kite};
                    if (verify_sandwich(candidate, cone).ok()) {
                        result.status = SearchStatus::found;
                        result.sandwich = std::move(candidate);
                        return result;
                    }
                }
        }
    }
    result.status = SearchStatus::exhausted;
    return result;
}

namespace {

Vec rv(std::initializer_list<Rat> xs) { return Vec(xs); }

GptSystem planar_system(const std::vector<Vec>& points) {
    return make_system(cone_over(points), rv({Rat(0), Rat(0), Rat(1)}));
}

KiteSandwich identity_sandwich(const Kite& kite) {
    return KiteSandwich{identity_mat(3), identity_mat(3), kite};
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    const Rat half(1, 2);
    if (name == "triangle") {
        CatalogEntry e{planar_system({rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)}),
                                      rv({Rat(-1), Rat(-1)})}),
                       std::nullopt, std::nullopt, true};
        return e;
    }
    if (name == "square") {
        GptSystem sys = planar_system(
            {rv({Rat(1), Rat(1)}), rv({Rat(-1), Rat(1)}), rv({Rat(-1), Rat(-1)}), rv({Rat(1), Rat(-1)})});
        // Psi rotates the kite plane onto the square's diagonals; Phi is its
        // inverse, so the square's corners land on the blunt square's edge
        // midpoints.
        const Mat psi{{Rat(1), Rat(1), Rat(0)}, {Rat(-1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
        const Mat phi{{half, -half, Rat(0)}, {half, half, Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
        KiteSandwich s{psi, phi, Kite{{Rat(0), Rat(0), Rat(0), Rat(0)}}};
        IncompatibilityWitness w = derive_witness(s, sys.cone);
        return CatalogEntry{std::move(sys), std::move(s), std::move(w), false};
    }
    if (name == "diamond") {
        GptSystem sys = planar_system(
            {rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)}), rv({Rat(-1), Rat(0)}), rv({Rat(0), Rat(-1)})});
        KiteSandwich s = identity_sandwich(Kite{{Rat(0), Rat(0), Rat(0), Rat(0)}});
        IncompatibilityWitness w = derive_witness(s, sys.cone);
        return CatalogEntry{std::move(sys), std::move(s), std::move(w), false};
    }
    if (name == "hexagon") {
        GptSystem sys = planar_system({rv({Rat(1), Rat(0)}), rv({half, Rat(1)}), rv({-half, Rat(1)}),
                                       rv({Rat(-1), Rat(0)}), rv({-half, Rat(-1)}), rv({half, Rat(-1)})});
        KiteSandwich s = identity_sandwich(Kite{{Rat(0), Rat(0), half, half}});
        IncompatibilityWitness w = derive_witness(s, sys.cone);
        return CatalogEntry{std::move(sys), std::move(s), std::move(w), false};
    }
    if (name == "pentagon-rational") {
        GptSystem sys = planar_system({rv({Rat(1), Rat(0)}), rv({Rat(3, 4), Rat(3, 4)}),
                                       rv({Rat(0), Rat(1)}), rv({Rat(-1), Rat(0)}), rv({Rat(0), Rat(-1)})});
        KiteSandwich s = identity_sandwich(Kite{{Rat(0), Rat(0), Rat(0), Rat(0)}});
        IncompatibilityWitness w = derive_witness(s, sys.cone);
        return CatalogEntry{std::move(sys), std::move(s), std::move(w), false};
    }
    if (name == "qubit-lorentz") {
        GptSystem sys = make_system(LorentzCone{4}, rv({Rat(0), Rat(0), Rat(0), Rat(1)}));
        IncompatibilityWitness w;
        w.x0 = rv({Rat(0), Rat(0), half, half});
        w.x1 = rv({Rat(0), Rat(0), -half, half});
        w.xp = rv({half, Rat(0), Rat(0), half});
        w.xm = rv({-half, Rat(0), Rat(0), half});
        // Self-dual pairing: the effects are the same four vectors.
        w.f0 = w.x0;
        w.f1 = w.x1;
        w.fp = w.xp;
        w.fm = w.xm;
        return CatalogEntry{std::move(sys), std::nullopt, std::move(w), false};
    }
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

}  // namespace gptcones
