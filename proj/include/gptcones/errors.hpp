#pragma once

#include <stdexcept>
#include <string>

namespace gptcones {

// Dimension of an argument does not match the cone / system it is used with.
struct dim_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation requires a polyhedral representation (e.g. extreme-ray
// enumeration on a Lorentz cone).
struct unsupported_rep_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Desk-scale budget exceeded (dimension cap, row cap, iteration budget).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certification step failed; the message names the failed clause.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A witness or sandwich failed its precondition check.
struct witness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal exact identity that must hold by construction did not.
struct internal_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gptcones
