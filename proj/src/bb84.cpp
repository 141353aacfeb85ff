#include "gptcones/bb84.hpp"

#include "gptcones/double_description.hpp"
#include "gptcones/errors.hpp"
#include "gptcones/philox.hpp"

#include <cmath>
#include <optional>

namespace gptcones {

namespace {

std::optional<Rat> rational_sqrt(const Rat& v) {
    if (v < 0) return std::nullopt;
    const Int n = numerator(v), d = denominator(v);
    const Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn) / Rat(sd);
}

// max over the state space of f, used to pick the largest s with s*f <= u.
Rat max_over_states(const Vec& f, const GptSystem& sys) {
    if (is_polyhedral(sys.cone)) {
        Rat best;
        bool first = true;
        for (const Vec& g : enumerate_extreme_rays(sys.cone)) {
            const Rat scale = dot(sys.unit, g);
            const Rat value = dot(f, g) / scale;  // f on the state g / u(g)
            if (first || value > best) {
                best = value;
                first = false;
            }
        }
        return best;
    }
    // Lorentz with the height unit: states are (v, 1) with |v| <= 1, so the
    // maximum of f = (a, b) is b + |a|. Exactness requires |a| rational.
    const int d = cone_dim(sys.cone);
    Vec height(d, Rat(0));
    height.back() = 1;
    if (sys.unit != height)
        throw unsupported_rep_error("normalize_witness: Lorentz systems need the height order unit");
    Rat a2 = 0;
    for (int i = 0; i + 1 < d; ++i) a2 += f[i] * f[i];
    const auto norm = rational_sqrt(a2);
    if (!norm)
        throw unsupported_rep_error(
            "normalize_witness: effect maximum over the ball slice is irrational");
    return f.back() + *norm;
}

}  // namespace

PreparedEnsembles normalize_witness(const IncompatibilityWitness& w, const GptSystem& sys) {
    const Rat total = dot(sys.unit, add(w.x0, w.x1));
    if (total <= 0) throw witness_error("normalize_witness: u(x0+x1) must be positive");

    PreparedEnsembles e;
    e.unit = sys.unit;
    const Vec x0 = scaled(w.x0, Rat(1) / total);
    const Vec x1 = scaled(w.x1, Rat(1) / total);
    const Vec xp = scaled(w.xp, Rat(1) / total);
    const Vec xm = scaled(w.xm, Rat(1) / total);
    e.p0 = dot(sys.unit, x0);
    e.p1 = dot(sys.unit, x1);
    e.qp = dot(sys.unit, xp);
    e.qm = dot(sys.unit, xm);
    if (e.p0 <= 0 || e.p1 <= 0 || e.qp <= 0 || e.qm <= 0)
        throw witness_error("normalize_witness: vanishing preparation probability");
    e.rho0 = scaled(x0, Rat(1) / e.p0);
    e.rho1 = scaled(x1, Rat(1) / e.p1);
    e.sigp = scaled(xp, Rat(1) / e.qp);
    e.sigm = scaled(xm, Rat(1) / e.qm);

    const Vec fsum = add(w.f0, w.f1);
    const Rat peak = max_over_states(fsum, sys);
    if (peak <= 0) throw witness_error("normalize_witness: f0+f1 not positive on states");
    const Rat s = Rat(1) / peak;
    e.ell = scaled(fsum, s);
    e.meas_z = {scaled(w.f0, s), scaled(w.f1, s), sub(sys.unit, e.ell)};
    e.meas_x = {scaled(w.fp, s), scaled(w.fm, s), sub(sys.unit, e.ell)};

    const Vec omega_bar = add(x0, x1);
    e.eta = dot(e.ell, omega_bar);

    // Exact invariant certification.
    if (e.p0 + e.p1 != 1 || e.qp + e.qm != 1)
        throw internal_invariant_error("normalize_witness: probabilities do not sum to one");
    if (add(scaled(e.rho0, e.p0), scaled(e.rho1, e.p1)) !=
        add(scaled(e.sigp, e.qp), scaled(e.sigm, e.qm)))
        throw internal_invariant_error("normalize_witness: eve-view ensembles differ");
    if (!membership(dual(sys.cone), e.meas_z[2]))
        throw internal_invariant_error("normalize_witness: u - l is not an effect");
    if (e.eta <= 0) throw internal_invariant_error("normalize_witness: eta not positive");
    if (add(e.meas_z[0], e.meas_z[1]) != e.ell || add(e.meas_x[0], e.meas_x[1]) != e.ell)
        throw internal_invariant_error("normalize_witness: effect sums differ from l");
    return e;
}

namespace {

// Exact comparison of a 64-bit dyadic uniform draw against rational
// cumulative weights: returns the sampled index.
int sample_index(PhiloxStream& rng, const std::vector<Rat>& weights) {
    const std::uint64_t raw = rng.next_u64();
    const Rat draw = Rat(Int(raw)) / Rat(Int(1) << 64);
    Rat cum = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        cum += weights[i];
        if (draw < cum) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

}  // namespace

ProtocolTranscript simulate(const PreparedEnsembles& e, std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("simulate: need at least one round");
    ProtocolTranscript t;
    t.seed = seed;
    t.n_rounds = n;
    t.rounds.reserve(n);

    const std::vector<Rat> pz{e.p0, e.p1};
    const std::vector<Rat> px{e.qp, e.qm};
    const std::array<const Vec*, 4> states{&e.rho0, &e.rho1, &e.sigp, &e.sigm};

    for (std::int64_t k = 0; k < n; ++k) {
        PhiloxStream rng(seed, static_cast<std::uint64_t>(k));
        Round r;
        r.alice_coin = rng.next_bit();
        r.alice_bit = sample_index(rng, r.alice_coin ? px : pz) == 1;
        r.bob_coin = rng.next_bit();

        const Vec& state = *states[(r.alice_coin ? 2 : 0) + (r.alice_bit ? 1 : 0)];
        const auto& meas = r.bob_coin ? e.meas_x : e.meas_z;
        std::vector<Rat> probs{dot(meas[0], state), dot(meas[1], state), dot(meas[2], state)};
        if (probs[0] + probs[1] + probs[2] != 1 || probs[0] < 0 || probs[1] < 0 || probs[2] < 0)
            throw internal_invariant_error("simulate: outcome probabilities are not a distribution");
        r.bob_outcome = static_cast<BobOutcome>(sample_index(rng, probs));

        r.kept = (r.alice_coin == r.bob_coin) && r.bob_outcome != BobOutcome::discard;
        if (r.kept) {
            t.sifted_alice.push_back(r.alice_bit);
            t.sifted_bob.push_back(r.bob_outcome == BobOutcome::second);
        }
        t.rounds.push_back(r);
    }
    return t;
}

EveProbabilities eve_probabilities(const PreparedEnsembles& e) {
    const Vec omega_bar = add(scaled(e.rho0, e.p0), scaled(e.rho1, e.p1));
    const Rat lw = dot(e.ell, omega_bar);
    EveProbabilities p;
    p.p0_prime = e.p0 * dot(e.ell, e.rho0) / lw;
    p.p1_prime = e.p1 * dot(e.ell, e.rho1) / lw;
    p.qp_prime = e.qp * dot(e.ell, e.sigp) / lw;
    p.qm_prime = e.qm * dot(e.ell, e.sigm) / lw;
    if (p.p0_prime <= 0 || p.p1_prime <= 0 || p.qp_prime <= 0 || p.qm_prime <= 0)
        throw internal_invariant_error("eve_probabilities: sifted distribution not strictly positive");
    if (p.p0_prime + p.p1_prime != 1 || p.qp_prime + p.qm_prime != 1)
        throw internal_invariant_error("eve_probabilities: sifted distributions do not sum to one");
    return p;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double key_rate(const PreparedEnsembles& e) {
    const auto p = eve_probabilities(e);
    return 0.5 * (binary_entropy(rat_double(p.p0_prime)) + binary_entropy(rat_double(p.qp_prime)));
}

KeyStats validate_stats(const ProtocolTranscript& t, const PreparedEnsembles& e) {
    KeyStats s;
    const auto p = eve_probabilities(e);
    s.p0_prime = p.p0_prime;
    s.qp_prime = p.qp_prime;
    s.formula_rate = key_rate(e);

    const std::size_t kept = t.sifted_alice.size();
    s.retained_fraction = t.n_rounds > 0 ? static_cast<double>(kept) / t.n_rounds : 0.0;
    for (std::size_t i = 0; i < kept; ++i)
        if (t.sifted_alice[i] != t.sifted_bob[i]) ++s.error_count;

    if (kept == 0) {
        s.insufficient_data = true;
        return s;
    }
    // Plug-in H(X|Z) from the kept rounds, Z the basis flag, X Alice's bit.
    std::int64_t nz[2] = {0, 0}, zeros[2] = {0, 0};
    std::size_t sifted_pos = 0;
    for (const Round& r : t.rounds) {
        if (!r.kept) continue;
        const int z = r.alice_coin ? 1 : 0;
        ++nz[z];
        if (!t.sifted_alice[sifted_pos]) ++zeros[z];
        ++sifted_pos;
    }
    double h = 0.0;
    for (int z = 0; z < 2; ++z) {
        if (nz[z] == 0) continue;
        const double share = static_cast<double>(nz[z]) / kept;
        h += share * binary_entropy(static_cast<double>(zeros[z]) / nz[z]);
    }
    s.empirical_H = h;
    s.empirical_p0 = nz[0] > 0 ? static_cast<double>(zeros[0]) / nz[0] : 0.0;
    s.empirical_qp = nz[1] > 0 ? static_cast<double>(zeros[1]) / nz[1] : 0.0;
    return s;
}

}  // namespace gptcones
