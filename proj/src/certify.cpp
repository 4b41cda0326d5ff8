#include "p0cert/certify.hpp"

#include <algorithm>
#include <random>

#include "p0cert/terms.hpp"

namespace p0cert {

std::vector<SignPattern> cyclic_shift(const std::vector<SignPattern>& patterns, int r) {
    const int k = static_cast<int>(patterns.size());
    if (r < 0 || r >= k) {
        throw dimension_error("shift must satisfy 0 <= r < k");
    }
    std::vector<SignPattern> shifted;
    shifted.reserve(patterns.size());
    for (int j = 0; j < k; ++j) {
        shifted.push_back(patterns[static_cast<std::size_t>((j + r) % k)]);
    }
    return shifted;
}

std::vector<RationalMatrix> restrict_to_ecycle(const std::vector<SignPattern>& patterns,
                                               const Cycle& c) {
    const int k = static_cast<int>(patterns.size());
    std::vector<RationalMatrix> restricted;
    restricted.reserve(patterns.size());
    for (const auto& p : patterns) {
        restricted.emplace_back(p.rows(), p.cols());
    }
    for (const auto& e : c.edges) {
        const auto& p = patterns[static_cast<std::size_t>(e.from.layer)];
        if (e.from.layer < 0 || e.from.layer >= k || e.from.index > p.rows() ||
            e.to.index > p.cols() || p.at(e.from.index - 1, e.to.index - 1) != e.sign) {
            throw dimension_error("cycle is not a cycle of the pattern graph");
        }
        restricted[static_cast<std::size_t>(e.from.layer)].at(e.from.index - 1, e.to.index - 1) =
            Rational(e.sign);
    }
    return restricted;
}

std::pair<IndexSet, Rational> negative_minor_of_restriction(
    const std::vector<RationalMatrix>& restricted, const Cycle& c) {
    std::vector<int> layer0;
    for (const auto& e : c.edges) {
        if (e.from.layer == 0) {
            layer0.push_back(e.from.index);
        }
    }
    std::sort(layer0.begin(), layer0.end());
    IndexSet alpha0(std::move(layer0));

    const RationalMatrix product = product_chain(restricted);
    Rational value = minor_det(product, alpha0, alpha0);
    if (value != cauchy_binet_minor(restricted, alpha0)) {
        throw consistency_error("restricted minor disagrees between direct and Cauchy-Binet routes");
    }
    if (sign_of(value) >= 0) {
        throw consistency_error("restriction of an e-cycle produced a nonnegative minor");
    }
    return {std::move(alpha0), std::move(value)};
}

std::pair<std::vector<RationalMatrix>, Rational> lift_to_strict_witness(
    const std::vector<SignPattern>& patterns, const std::vector<RationalMatrix>& restricted,
    const IndexSet& alpha0) {
    Rational epsilon(1);
    for (int iteration = 0; iteration < 64; ++iteration) {
        std::vector<RationalMatrix> witness = restricted;
        for (std::size_t j = 0; j < patterns.size(); ++j) {
            const auto& p = patterns[j];
            for (int r = 0; r < p.rows(); ++r) {
                for (int s = 0; s < p.cols(); ++s) {
                    if (p.at(r, s) != 0 && witness[j].at(r, s).is_zero()) {
                        witness[j].at(r, s) = Rational(p.at(r, s)) * epsilon;
                    }
                }
            }
        }
        Rational value = minor_det(product_chain(witness), alpha0, alpha0);
        if (sign_of(value) < 0) {
            return {std::move(witness), epsilon};
        }
        epsilon /= 2;
    }
    throw consistency_error("witness perturbation failed to converge within 64 halvings");
}

Certificate certify(const std::vector<SignPattern>& patterns, std::uint64_t sample_count,
                    std::uint64_t seed, std::uint64_t cycle_cap) {
    const BCDigraph graph = build_graph(patterns);
    if (patterns.front().rows() != patterns.back().cols()) {
        throw dimension_error("chain product is not square");
    }

    Certificate cert;
    CycleEnumeration enumeration = enumerate_simple_cycles(graph, cycle_cap);
    cert.cycle_inventory = enumeration.cycles;
    cert.enumeration_truncated = enumeration.truncated;
    cert.cycle_count = enumeration.cycles.size();

    const Cycle* first_ecycle = nullptr;
    for (const auto& c : cert.cycle_inventory) {
        if (c.parity == Parity::e) {
            first_ecycle = &c;
            break;
        }
    }

    if (first_ecycle != nullptr) {
        cert.verdict = Verdict::counterexample;
        Counterexample cx{*first_ecycle,
                          full_index_set(1),   // placeholder, set below
                          {},
                          Rational(0),
                          {},
                          Rational(0),
                          Rational(0)};
        cx.restricted_list = restrict_to_ecycle(patterns, cx.ecycle);
        auto [alpha0, restricted_minor] = negative_minor_of_restriction(cx.restricted_list, cx.ecycle);
        cx.alpha0 = std::move(alpha0);
        cx.restricted_minor = std::move(restricted_minor);
        auto [witness, epsilon] = lift_to_strict_witness(patterns, cx.restricted_list, cx.alpha0);
        cx.witness_list = std::move(witness);
        cx.epsilon = std::move(epsilon);

        // Re-verify the witness package before emission.
        for (std::size_t j = 0; j < patterns.size(); ++j) {
            if (sign_pattern(cx.witness_list[j]) != patterns[j]) {
                throw consistency_error("witness factor left its qualitative class");
            }
        }
        cx.witness_minor = minor_det(product_chain(cx.witness_list), cx.alpha0, cx.alpha0);
        if (sign_of(cx.witness_minor) >= 0 || sign_of(cx.restricted_minor) >= 0) {
            throw consistency_error("counterexample minors failed re-verification");
        }
        cert.counterexample = std::move(cx);
        return cert;
    }

    if (enumeration.truncated) {
        cert.verdict = Verdict::undecided;
        return cert;
    }

    cert.verdict = Verdict::class_is_P0;
    std::mt19937_64 seeder(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        std::vector<RationalMatrix> sample;
        sample.reserve(patterns.size());
        for (const auto& p : patterns) {
            sample.push_back(sample_qualitative(p, Rational(1), seeder()));
        }
        ++cert.samples_run;
        if (is_P0(product_chain(sample)).holds) {
            ++cert.samples_passed;
        } else {
            // cannot happen for an e-cycle-free graph; treat it as a bug
            throw consistency_error("sampled product violated a class_is_P0 certificate");
        }
    }
    return cert;
}

}  // namespace p0cert
