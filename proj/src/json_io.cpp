#include "p0cert/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace p0cert {

using nlohmann::json;

std::vector<SignPattern> InputDocument::patterns() const {
    std::vector<SignPattern> ps;
    ps.reserve(matrices.size());
    for (const auto& m : matrices) {
        ps.push_back(sign_pattern(m));
    }
    return ps;
}

static Rational entry_from_json(const json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    throw input_error(where + ": entries must be integers or \"p/q\" strings");
}

static RationalMatrix matrix_from_json(const json& block, const std::string& where) {
    if (!block.is_object() || !block.contains("rows") || !block.contains("cols") ||
        !block.contains("entries")) {
        throw input_error(where + ": matrix block needs rows, cols and entries");
    }
    if (!block["rows"].is_number_integer() || !block["cols"].is_number_integer() ||
        !block["entries"].is_array()) {
        throw input_error(where + ": rows/cols must be integers and entries an array");
    }
    const int rows = block["rows"].get<int>();
    const int cols = block["cols"].get<int>();
    if (rows < 1 || cols < 1) {
        throw input_error(where + ": dimensions must be positive");
    }
    const auto& entries = block["entries"];
    if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw input_error(where + ": expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries.size()));
    }
    std::vector<Rational> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        values.push_back(entry_from_json(entries[i], where + ".entries[" + std::to_string(i) + "]"));
    }
    return RationalMatrix(rows, cols, std::move(values));
}

InputDocument parse_input_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("matrices")) {
        throw input_error("document must be an object with fields 'k' and 'matrices'");
    }
    if (!doc["k"].is_number_integer() || !doc["matrices"].is_array()) {
        throw input_error("'k' must be an integer and 'matrices' an array");
    }
    InputDocument input;
    input.k = doc["k"].get<int>();
    const auto& blocks = doc["matrices"];
    if (input.k < 1 || blocks.size() != static_cast<std::size_t>(input.k)) {
        throw input_error("'k' must be positive and equal the number of matrix blocks");
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        input.matrices.push_back(matrix_from_json(blocks[j], "matrices[" + std::to_string(j) + "]"));
    }
    for (int j = 0; j < input.k; ++j) {
        const auto& a = input.matrices[static_cast<std::size_t>(j)];
        const auto& b = input.matrices[static_cast<std::size_t>((j + 1) % input.k)];
        if (a.cols() != b.rows()) {
            throw input_error("matrices[" + std::to_string(j) + "] has " +
                              std::to_string(a.cols()) + " columns but matrices[" +
                              std::to_string((j + 1) % input.k) + "] has " +
                              std::to_string(b.rows()) + " rows");
        }
    }
    return input;
}

InputDocument load_input_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input_document(buffer.str());
}

static json matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            entries.push_back(rational_to_string(m.at(i, j)));
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

static json cycle_to_json(const Cycle& c) {
    json vertices = json::array();
    for (const auto& v : c.vertices()) {
        vertices.push_back(vertex_name(v));
    }
    return json{{"vertices", std::move(vertices)},
                {"r1", c.r1},
                {"r2", c.r2},
                {"parity", c.parity == Parity::e ? "e" : "o"}};
}

static const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::class_is_P0:
            return "class_is_P0";
        case Verdict::counterexample:
            return "counterexample";
        default:
            return "undecided";
    }
}

std::string certificate_to_json(const Certificate& cert) {
    json doc;
    doc["tool_version"] = kToolVersion;
    doc["verdict"] = verdict_name(cert.verdict);
    doc["stats"] = json{{"cycle_count", cert.cycle_count},
                        {"truncated", cert.enumeration_truncated},
                        {"samples_run", cert.samples_run},
                        {"samples_passed", cert.samples_passed}};
    json cycles = json::array();
    for (const auto& c : cert.cycle_inventory) {
        cycles.push_back(cycle_to_json(c));
    }
    doc["cycles"] = std::move(cycles);
    if (cert.counterexample) {
        const auto& cx = *cert.counterexample;
        json restricted = json::array();
        for (const auto& m : cx.restricted_list) {
            restricted.push_back(matrix_to_json(m));
        }
        json witness = json::array();
        for (const auto& m : cx.witness_list) {
            witness.push_back(matrix_to_json(m));
        }
        doc["counterexample"] = json{{"ecycle", cycle_to_json(cx.ecycle)},
                                     {"alpha0", cx.alpha0.elements()},
                                     {"restricted", std::move(restricted)},
                                     {"restricted_minor", rational_to_string(cx.restricted_minor)},
                                     {"witness", std::move(witness)},
                                     {"witness_minor", rational_to_string(cx.witness_minor)},
                                     {"epsilon", rational_to_string(cx.epsilon)}};
    }
    return doc.dump(2) + "\n";
}

static LayeredVertex vertex_from_name(const std::string& name) {
    if (name.size() < 4 || name[0] != 'V') {
        throw input_error("malformed vertex name '" + name + "'");
    }
    const auto sep = name.find('_');
    if (sep == std::string::npos) {
        throw input_error("malformed vertex name '" + name + "'");
    }
    return LayeredVertex{std::stoi(name.substr(1, sep - 1)), std::stoi(name.substr(sep + 1))};
}

static RationalMatrix matrix_from_cert_json(const json& block) {
    return matrix_from_json(block, "certificate matrix");
}

static Cycle cycle_from_json(const json& block, int k) {
    std::vector<LayeredVertex> vs;
    for (const auto& name : block.at("vertices")) {
        vs.push_back(vertex_from_name(name.get<std::string>()));
    }
    // The document stores vertex lists plus (r1, r2, parity); individual
    // edge signs are summarized by r2, so the counters stay authoritative
    // on re-read.
    Cycle c;
    c.r1 = block.at("r1").get<int>();
    c.r2 = block.at("r2").get<int>();
    c.parity = block.at("parity").get<std::string>() == "e" ? Parity::e : Parity::o;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        c.edges.push_back(SignedEdge{vs[i], vs[(i + 1) % vs.size()], +1});
    }
    (void)k;
    return c;
}

Certificate certificate_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    Certificate cert;
    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == "class_is_P0") {
        cert.verdict = Verdict::class_is_P0;
    } else if (verdict == "counterexample") {
        cert.verdict = Verdict::counterexample;
    } else {
        cert.verdict = Verdict::undecided;
    }
    cert.cycle_count = doc.at("stats").at("cycle_count").get<std::uint64_t>();
    cert.enumeration_truncated = doc.at("stats").at("truncated").get<bool>();
    cert.samples_run = doc.at("stats").at("samples_run").get<std::uint64_t>();
    cert.samples_passed = doc.at("stats").at("samples_passed").get<std::uint64_t>();
    for (const auto& c : doc.at("cycles")) {
        cert.cycle_inventory.push_back(cycle_from_json(c, 0));
    }
    if (doc.contains("counterexample")) {
        const auto& cx_json = doc["counterexample"];
        Counterexample cx{cycle_from_json(cx_json.at("ecycle"), 0),
                          IndexSet(cx_json.at("alpha0").get<std::vector<int>>()),
                          {},
                          parse_rational(cx_json.at("restricted_minor").get<std::string>()),
                          {},
                          parse_rational(cx_json.at("witness_minor").get<std::string>()),
                          parse_rational(cx_json.at("epsilon").get<std::string>())};
        for (const auto& m : cx_json.at("restricted")) {
            cx.restricted_list.push_back(matrix_from_cert_json(m));
        }
        for (const auto& m : cx_json.at("witness")) {
            cx.witness_list.push_back(matrix_from_cert_json(m));
        }
        cert.counterexample = std::move(cx);
    }
    return cert;
}

}  // namespace p0cert
