#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p0cert/bcdigraph.hpp"
#include "p0cert/matrix.hpp"

namespace p0cert {

enum class Verdict { class_is_P0, counterexample, undecided };

// Witness package attached to a counterexample verdict. Both minors are
// re-verified through exact minor computation before emission.
struct Counterexample {
    Cycle ecycle;
    IndexSet alpha0;
    std::vector<RationalMatrix> restricted_list;
    Rational restricted_minor;   // < 0
    std::vector<RationalMatrix> witness_list;   // strictly in the classes
    Rational witness_minor;      // < 0
    Rational epsilon;
};

struct Certificate {
    Verdict verdict = Verdict::undecided;
    std::vector<Cycle> cycle_inventory;
    bool enumeration_truncated = false;
    std::uint64_t cycle_count = 0;
    std::optional<Counterexample> counterexample;
    std::uint64_t samples_run = 0;
    std::uint64_t samples_passed = 0;
};

// Decides class-wide P0-ness of products over the factors' qualitative
// classes. e-cycle-free graph -> class_is_P0 (optionally reinforced by
// `sample_count` randomized product checks); an e-cycle -> a full
// counterexample package; truncated enumeration without an e-cycle ->
// undecided.
Certificate certify(const std::vector<SignPattern>& patterns, std::uint64_t sample_count,
                    std::uint64_t seed, std::uint64_t cycle_cap = kDefaultCycleCap);

// Factor matrices with entries +-1 on the edges of `c` (matching signs)
// and 0 elsewhere; the induced graph consists solely of the cycle `c`.
std::vector<RationalMatrix> restrict_to_ecycle(const std::vector<SignPattern>& patterns,
                                               const Cycle& c);

// alpha^(0) = layer-0 vertices of `c`; returns (alpha^(0), A[alpha^(0)])
// for the restricted product, which is provably negative. A nonnegative
// value signals a bug and throws consistency_error.
std::pair<IndexSet, Rational> negative_minor_of_restriction(
    const std::vector<RationalMatrix>& restricted, const Cycle& c);

// Perturbs the restriction back into the open qualitative classes: every
// entry zeroed by the restriction is restored with magnitude epsilon,
// halving epsilon from 1 until the product minor at alpha0 stays negative.
std::pair<std::vector<RationalMatrix>, Rational> lift_to_strict_witness(
    const std::vector<SignPattern>& patterns, const std::vector<RationalMatrix>& restricted,
    const IndexSet& alpha0);

// Rotated factor list [A^(r), ..., A^(k-1), A^(0), ..., A^(r-1)].
std::vector<SignPattern> cyclic_shift(const std::vector<SignPattern>& patterns, int r);

}  // namespace p0cert
