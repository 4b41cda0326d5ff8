#pragma once

#include <string>
#include <vector>

#include "p0cert/certify.hpp"
#include "p0cert/matrix.hpp"

namespace p0cert {

inline constexpr const char* kToolVersion = "0.1.0";

// Parsed input: k factor matrices with exact rational entries. The sign
// patterns drive certification; the magnitudes feed the concrete report.
struct InputDocument {
    int k = 0;
    std::vector<RationalMatrix> matrices;

    std::vector<SignPattern> patterns() const;
};

// Throws input_error with a field diagnostic on malformed documents.
InputDocument parse_input_document(const std::string& json_text);
InputDocument load_input_document(const std::string& path);

// Machine-readable certificate. Rationals are serialized as canonical
// "p/q" strings (integers as "p").
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& json_text);

}  // namespace p0cert
