#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "barcount/core.hpp"
#include "barcount/juggling.hpp"
#include "barcount/kostant.hpp"

namespace barcount {

/// Input text that does not match the expected syntax or schema.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::json;

/// "2,3,2" -> (2,3,2). The empty string is the empty curve.
BettiCurve parse_curve(std::string_view text);
/// Comma-separated signed integers.
std::vector<std::int64_t> parse_integers(std::string_view text);

// Barcode: [[birth, death, multiplicity], ...] in canonical order.
Json to_json(const Barcode& bc);
Barcode barcode_from_json(const Json& j);

// BettiCurve: [b1, ..., bn].
Json to_json(const BettiCurve& beta);
BettiCurve curve_from_json(const Json& j);

// Weight: {"basis": "simple"|"standard", "coords": [...]}; written in simple basis.
Json to_json(const Weight& mu);
Weight weight_from_json(const Json& j);

// JugglingSequence: [[s^0...], [s^1...], ...] with trimmed states.
Json to_json(const JugglingSequence& seq);
JugglingSequence sequence_from_json(const Json& j);

// Root partitions are written like barcodes: [[i, j, multiplicity], ...].
Json to_json(const RootPartition& partition);

/// Parses JSON text, turning syntax errors into ParseError.
Json parse_json(std::string_view text);

}  // namespace barcount
