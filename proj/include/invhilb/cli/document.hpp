#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invhilb/series/factored_series.hpp"
#include "invhilb/series/truncated_series.hpp"

namespace invhilb::cli {

using Json = nlohmann::json;

/// One document per invocation. Keys serialize sorted; integers that can
/// outgrow 64 bits are stored as decimal strings.
struct OutputDocument {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    /// "pass" or "fail", for commands that check something.
    std::optional<std::string> status;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

std::string serialize(const OutputDocument& doc);
/// Throws std::invalid_argument on malformed input.
OutputDocument parse_document(const std::string& text);

Json rational_list(const std::vector<BigRational>& values);
/// {"numerator": [...], "denominator": {"i": "e", ...}}
Json series_json(const FactoredSeries& f);
Json expansion_json(const TruncatedSeries& s);

} // namespace invhilb::cli
