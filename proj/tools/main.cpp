#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p0cert/certify.hpp"
#include "p0cert/json_io.hpp"
#include "p0cert/terms.hpp"

namespace {

using namespace p0cert;

constexpr int kExitP0 = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternalError = 4;

void print_matrix(std::ostream& os, const RationalMatrix& m, const std::string& indent) {
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            os << (j > 0 ? " " : "") << rational_to_string(m.at(i, j));
        }
        os << "]\n";
    }
}

void print_cycle_line(std::ostream& os, const Cycle& c) {
    os << "  (length=" << c.length() << ", r1=" << c.r1 << ", r2=" << c.r2
       << ", parity=" << (c.parity == Parity::e ? "e" : "o") << ") ";
    bool first = true;
    for (const auto& v : c.vertices()) {
        os << (first ? "" : " -> ") << vertex_name(v);
        first = false;
    }
    os << "\n";
}

int run_check(const std::string& input_path, std::uint64_t samples, std::uint64_t seed,
              std::uint64_t cycle_cap, const std::string& json_out) {
    const InputDocument input = load_input_document(input_path);
    const auto patterns = input.patterns();
    const Certificate cert = certify(patterns, samples, seed, cycle_cap);

    std::cout << "factors: " << input.k << ", layer sizes:";
    for (const auto& p : patterns) {
        std::cout << " " << p.rows();
    }
    std::cout << "\n";
    std::cout << "simple cycles: " << cert.cycle_count
              << (cert.enumeration_truncated ? " (enumeration truncated at cap)" : "") << "\n";
    for (const auto& c : cert.cycle_inventory) {
        print_cycle_line(std::cout, c);
    }

    const RationalMatrix product = product_chain(input.matrices);
    std::cout << "concrete product (from the document's magnitudes):\n";
    print_matrix(std::cout, product, "  ");

    int exit_code = kExitUndecided;
    switch (cert.verdict) {
        case Verdict::class_is_P0:
            std::cout << "verdict: class_is_P0 (every product over the qualitative classes is P0)\n";
            if (cert.samples_run > 0) {
                std::cout << "sampling: " << cert.samples_passed << "/" << cert.samples_run
                          << " randomized products passed the P0 check\n";
            }
            exit_code = kExitP0;
            break;
        case Verdict::counterexample: {
            const auto& cx = *cert.counterexample;
            std::cout << "verdict: counterexample (an e-cycle exists)\n";
            std::cout << "e-cycle:\n";
            print_cycle_line(std::cout, cx.ecycle);
            std::cout << "alpha0 = {";
            for (std::size_t i = 0; i < cx.alpha0.elements().size(); ++i) {
                std::cout << (i > 0 ? "," : "") << cx.alpha0.elements()[i];
            }
            std::cout << "}\n";
            std::cout << "restricted minor = " << rational_to_string(cx.restricted_minor) << "\n";
            std::cout << "witness factors (strictly in the classes, epsilon = "
                      << rational_to_string(cx.epsilon) << "):\n";
            for (std::size_t j = 0; j < cx.witness_list.size(); ++j) {
                std::cout << "  B(" << j << "):\n";
                print_matrix(std::cout, cx.witness_list[j], "    ");
            }
            std::cout << "witness minor = " << rational_to_string(cx.witness_minor) << "\n";
            exit_code = kExitCounterexample;
            break;
        }
        case Verdict::undecided:
            std::cout << "verdict: undecided (cycle cap reached before any e-cycle was found)\n";
            exit_code = kExitUndecided;
            break;
    }

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            throw input_error("cannot write certificate to '" + json_out + "'");
        }
        out << certificate_to_json(cert);
    }
    return exit_code;
}

int run_cycles(const std::string& input_path, std::uint64_t cycle_cap,
               const std::string& dot_out) {
    const InputDocument input = load_input_document(input_path);
    const auto patterns = input.patterns();
    const BCDigraph graph = build_graph(patterns);
    const CycleEnumeration enumeration = enumerate_simple_cycles(graph, cycle_cap);

    std::cout << enumeration.cycles.size() << " cycles"
              << (enumeration.truncated ? " (truncated at cap)" : "") << "\n";
    for (const auto& c : enumeration.cycles) {
        print_cycle_line(std::cout, c);
    }
    if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        if (!out) {
            throw input_error("cannot write DOT to '" + dot_out + "'");
        }
        out << dot_export(graph);
    }
    return 0;
}

int run_verify(const std::string& input_path, std::uint64_t samples, std::uint64_t seed) {
    const InputDocument input = load_input_document(input_path);
    const auto patterns = input.patterns();
    build_graph(patterns);   // validates the chain shape

    std::mt19937_64 seeder(seed);
    std::uint64_t p0_passes = 0;
    const int n0 = patterns.front().rows();
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<RationalMatrix> sample;
        sample.reserve(patterns.size());
        for (const auto& p : patterns) {
            sample.push_back(sample_qualitative(p, Rational(1), seeder()));
        }
        const RationalMatrix product = product_chain(sample);
        if (is_P0(product).holds) {
            ++p0_passes;
        }
        bool consistent = true;
        for_each_nonempty_subset(n0, [&](const IndexSet& alpha) {
            if (cauchy_binet_minor(sample, alpha) != minor_det(product, alpha, alpha)) {
                consistent = false;
                return false;
            }
            return true;
        });
        if (!consistent) {
            std::cout << "Cauchy-Binet cross-check FAILED on sample " << i << "\n";
            return kExitInternalError;
        }
    }
    std::cout << "P0 pass: " << p0_passes << "/" << samples << "\n";
    std::cout << "Cauchy-Binet cross-checks: " << samples << "/" << samples << " consistent\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P0-certification of qualitative-class matrix products via signed "
                 "block-circulant digraphs"};
    app.set_version_flag("--version", std::string("p0cert ") + p0cert::kToolVersion);
    app.require_subcommand(1);

    std::string input_path;
    std::string json_out;
    std::string dot_out;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t cycle_cap = p0cert::kDefaultCycleCap;

    auto* check = app.add_subcommand("check", "Certify class-wide P0-ness or emit a counterexample");
    check->add_option("input", input_path, "Input JSON document")->required();
    check->add_option("--samples", samples, "Randomized product confirmations");
    check->add_option("--seed", seed, "Sampling seed (default 0)");
    check->add_option("--cycle-cap", cycle_cap, "Cycle enumeration cap");
    check->add_option("--json", json_out, "Write the JSON certificate to this file");

    auto* cycles = app.add_subcommand("cycles", "List simple cycles with their parities");
    cycles->add_option("input", input_path, "Input JSON document")->required();
    cycles->add_option("--cycle-cap", cycle_cap, "Cycle enumeration cap");
    cycles->add_option("--dot", dot_out, "Write a Graphviz DOT export to this file");

    auto* verify = app.add_subcommand("verify", "Randomized P0 checks of class samples");
    verify->add_option("input", input_path, "Input JSON document")->required();
    verify->add_option("--samples", samples, "Number of sample lists to draw");
    verify->add_option("--seed", seed, "Sampling seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (app.got_subcommand(check)) {
            return run_check(input_path, samples, seed, cycle_cap, json_out);
        }
        if (app.got_subcommand(cycles)) {
            return run_cycles(input_path, cycle_cap, dot_out);
        }
        return run_verify(input_path, samples, seed);
    } catch (const p0cert::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const p0cert::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
