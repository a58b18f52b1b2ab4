#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "holant/classify.hpp"
#include "holant/cyc8.hpp"
#include "holant/grid.hpp"
#include "holant/signature.hpp"

namespace holant {

/// Canonical rendering "c0 + c1*a + c2*a^2 + c3*a^3" with rationals as
/// "p/q"; it parses back to the same value.
std::string cyc8_to_string(const Cyc8& c);
/// Canonical rendering followed by a decimal approximation.
std::string cyc8_with_approx(const Cyc8& c);

/// Parses an expression over { rationals, i, a, +, -, *, /, ^integer }.
/// Unknown names raise ValueOutsideRing; malformed input raises ParseError.
Cyc8 parse_cyc8(const std::string& text);

/// Signature file format: a header "sig NAME arity N" followed by one
/// line "BITSTRING : VALUE" per support entry.  Lines starting with '#'
/// and blank lines are ignored.  Duplicate bitstrings are an error.
Signature parse_signature_text(const std::string& text);
Signature load_signature_file(const std::string& path);
std::string signature_to_text(const Signature& f);
void save_signature_file(const Signature& f, const std::string& path);

/// Grid file format:
///   use NAME FILE        import a signature (path relative to the grid file)
///   vertex V = NAME      V is any label; vertices are numbered in order
///   edge V1.P1 V2.P2
///   dangle V.P
/// Port indices are 0-based; dangle lines are in output-variable order.
struct GridDocument {
    SignatureGrid grid;
    std::vector<std::string> vertex_labels;         // per vertex
    std::vector<std::string> vertex_names;          // per vertex
    std::vector<std::pair<std::string, std::string>> uses;  // (name, file)
};

GridDocument parse_grid_text(const std::string& text, const std::string& base_dir = "");
GridDocument load_grid_file(const std::string& path);
std::string grid_to_text(const GridDocument& doc);

/// "VERDICT <label>" followed by one certificate line per signature.
std::string verdict_to_text(const ClassVerdict& v);

}  // namespace holant
