#pragma once

#include <string>

#include <dcolour/rule.hpp>

namespace dcolour {

struct VerifyResult {
    bool ok;
    std::string log;    // one line per check, "PASS ..." / "FAIL ..."
};

// Bit-reversal-key monotonicity and the one-red-direction-per-pair law,
// exhaustively over [1..n], key widths up to bit_width(n).
VerifyResult verify_density_zero(Vertex n);

// Class laws, longest red path length, greedy per-class coverage and exact
// class density for the extremal colourings r in {2..5}.
VerifyResult verify_extremal(Vertex n);

// Product laws for moduli (2,3) and agreement of the one-modulus product
// colouring with the two-colour extremal one.
VerifyResult verify_product(Vertex n);

// The per-level red-indegree bound on seeded random views, with levels from
// the subset DP.
VerifyResult verify_claims(Vertex n);

VerifyResult verify_all(Vertex n);

VerifyResult verify_suite(const std::string & suite, Vertex n);

}
