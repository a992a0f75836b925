#include "invhilb/cli/document.hpp"

#include <stdexcept>

namespace invhilb::cli {

std::string serialize(const OutputDocument& doc)
{
    Json j = Json::object();
    j["command"] = doc.command;
    j["inputs"] = doc.inputs;
    j["result"] = doc.result;
    if (doc.status) {
        j["status"] = *doc.status;
    }
    return j.dump(2) + "\n";
}

OutputDocument parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
        throw std::invalid_argument("document needs a string \"command\"");
    }
    OutputDocument doc;
    doc.command = j["command"].get<std::string>();
    if (j.contains("inputs")) {
        doc.inputs = j["inputs"];
    }
    if (j.contains("result")) {
        doc.result = j["result"];
    }
    if (j.contains("status")) {
        if (!j["status"].is_string()) {
            throw std::invalid_argument("\"status\" must be a string");
        }
        doc.status = j["status"].get<std::string>();
    }
    return doc;
}

Json rational_list(const std::vector<BigRational>& values)
{
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

Json series_json(const FactoredSeries& f)
{
    Json den = Json::object();
    for (const auto& [i, e] : f.denominator()) {
        den[std::to_string(i)] = std::to_string(e);
    }
    return Json{{"numerator", rational_list(f.numerator().coeffs())}, {"denominator", den}};
}

Json expansion_json(const TruncatedSeries& s) { return rational_list(s.coeffs()); }

} // namespace invhilb::cli
