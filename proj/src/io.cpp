#include "barcount/io.hpp"

#include <charconv>
#include <limits>

namespace barcount {

namespace {

std::int64_t parse_one(std::string_view token, std::string_view whole) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError("malformed integer list '" + std::string(whole) + "'");
    }
    return value;
}

std::int64_t integer_at(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array, got " + j.dump());
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(integer_at(v, what));
    return out;
}

Json triples(const auto& bars) {
    Json out = Json::array();
    for (const auto& [key, mult] : bars) {
        if constexpr (requires { key.birth; }) {
            out.push_back({key.birth, key.death, mult});
        } else {
            out.push_back({key.i, key.j, mult});
        }
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> parse_integers(std::string_view text) {
    std::vector<std::int64_t> out;
    if (text.find_first_not_of(' ') == std::string_view::npos) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_one(text.substr(start, comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

BettiCurve parse_curve(std::string_view text) {
    auto values = parse_integers(text);
    for (auto v : values) {
        if (v < 0) throw ParseError("Betti curve entries must be nonnegative: '" + std::string(text) + "'");
    }
    return BettiCurve(std::move(values));
}

Json to_json(const Barcode& bc) { return triples(bc.bars()); }

Barcode barcode_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("barcode must be an array of [birth, death, multiplicity]");
    Barcode out;
    for (const auto& triple : j) {
        const auto t = integer_array(triple, "barcode entry");
        if (t.size() != 3) throw ParseError("barcode entry must be [birth, death, multiplicity]: " + triple.dump());
        if (t[2] < 1) throw ParseError("bar multiplicity must be positive: " + triple.dump());
        if (t[0] < 1 || t[1] <= t[0] || t[1] > std::numeric_limits<int>::max()) {
            throw ParseError("not an interval [birth, death): " + triple.dump());
        }
        out.add(Interval(static_cast<int>(t[0]), static_cast<int>(t[1])), t[2]);
    }
    return out;
}

Json to_json(const BettiCurve& beta) { return Json(beta.values()); }

BettiCurve curve_from_json(const Json& j) {
    auto values = integer_array(j, "Betti curve");
    for (auto v : values) {
        if (v < 0) throw ParseError("Betti curve entries must be nonnegative: " + j.dump());
    }
    return BettiCurve(std::move(values));
}

Json to_json(const Weight& mu) { return Json{{"basis", "simple"}, {"coords", mu.simple()}}; }

Weight weight_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("coords")) {
        throw ParseError("weight must look like {\"basis\": \"simple\"|\"standard\", \"coords\": [...]}");
    }
    const auto& basis = j.at("basis");
    auto coords = integer_array(j.at("coords"), "weight coordinates");
    if (basis == "simple") return Weight::from_simple(std::move(coords));
    if (basis == "standard") {
        try {
            return Weight::from_standard(coords);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("weight basis must be \"simple\" or \"standard\", got " + basis.dump());
}

Json to_json(const JugglingSequence& seq) {
    Json out = Json::array();
    for (const auto& s : seq.states) {
        // The empty state is written <0>, not [].
        out.push_back(s.is_zero() ? std::vector<Entry>{0} : s.entries());
    }
    return out;
}

JugglingSequence sequence_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("juggling sequence must be a nonempty array of states");
    JugglingSequence seq;
    for (const auto& state : j) {
        try {
            seq.states.emplace_back(integer_array(state, "juggling state"));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return seq;
}

Json to_json(const RootPartition& partition) { return triples(partition); }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace barcount
