#pragma once

// Key distribution from a strong-incompatibility witness: normalisation of
// the witness into preparation ensembles and unambiguous-discrimination
// measurements, a seeded round-by-round protocol simulation, the
// eavesdropper-view distributions and the achievable key rate.

#include "gptcones/cone.hpp"
#include "gptcones/witness.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace gptcones {

struct PreparedEnsembles {
    Rat p0, p1, qp, qm;            // preparation probabilities per basis
    Vec rho0, rho1, sigp, sigm;    // normalised states
    Vec ell;                        // l = s (f0 + f1), scaled so u - l stays an effect
    Vec unit;
    Rat eta;                        // l(omega_bar) > 0
    std::array<Vec, 3> meas_z;      // (f0, f1, u - l), rescaled
    std::array<Vec, 3> meas_x;      // (f+, f-, u - l)
};

// Scales the elements so u(x0+x1) = 1 and the effects by the largest s with
// s (f0 + f1) <= u. All invariants are certified exactly before returning.
PreparedEnsembles normalize_witness(const IncompatibilityWitness& w, const GptSystem& sys);

enum class BobOutcome : std::uint8_t { first = 0, second = 1, discard = 2 };

struct Round {
    bool alice_coin;   // false = Z basis (rho), true = X basis (sigma)
    bool alice_bit;
    bool bob_coin;
    BobOutcome bob_outcome;
    bool kept;
};

struct ProtocolTranscript {
    std::vector<Round> rounds;
    std::vector<bool> sifted_alice;
    std::vector<bool> sifted_bob;
    std::uint64_t seed = 0;
    std::int64_t n_rounds = 0;
};

// Deterministic for a fixed seed; round k draws from the (seed, k) Philox
// substream, and outcome sampling compares the dyadic uniform draw against
// exact cumulative probabilities, so exact-zero outcomes never occur.
ProtocolTranscript simulate(const PreparedEnsembles& e, std::int64_t n, std::uint64_t seed);

struct EveProbabilities {
    Rat p0_prime, p1_prime, qp_prime, qm_prime;
};

EveProbabilities eve_probabilities(const PreparedEnsembles& e);

// Binary entropy, h2(0) = h2(1) = 0.
double binary_entropy(double p);

// S = (h2(p'_0) + h2(q'_+)) / 2, strictly positive for valid ensembles.
double key_rate(const PreparedEnsembles& e);

struct KeyStats {
    double retained_fraction = 0.0;
    std::int64_t error_count = 0;
    Rat p0_prime, qp_prime;
    double empirical_H = 0.0;   // plug-in conditional entropy H(X|Z) over kept rounds
    double formula_rate = 0.0;
    double empirical_p0 = 0.0;  // bit-0 frequency among kept Z-basis rounds
    double empirical_qp = 0.0;  // bit-0 frequency among kept X-basis rounds
    bool insufficient_data = false;
};

KeyStats validate_stats(const ProtocolTranscript& t, const PreparedEnsembles& e);

}  // namespace gptcones
