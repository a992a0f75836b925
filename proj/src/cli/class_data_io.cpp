#include "invhilb/cli/class_data_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invhilb::cli {

namespace {

using Json = nlohmann::json;

BigInt integer_field(const Json& j, const std::string& what)
{
    try {
        if (j.is_number_integer()) {
            return BigInt(std::to_string(j.get<long long>()));
        }
        if (j.is_string()) {
            return parse_integer(j.get<std::string>());
        }
    } catch (const std::invalid_argument&) {
    }
    throw ClassDataParseError(what + " must be an integer");
}

BigRational rational_field(const Json& j, const std::string& what)
{
    try {
        if (j.is_number_integer()) {
            return BigRational(BigInt(std::to_string(j.get<long long>())));
        }
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
    } catch (const std::invalid_argument&) {
    }
    throw ClassDataParseError(what + " must be an exact rational");
}

int small_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) {
        throw ClassDataParseError(what + " must be an integer");
    }
    return j.get<int>();
}

const Json& member(const Json& j, const char* key)
{
    if (!j.contains(key)) {
        throw ClassDataParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace

GroupClassData parse_class_data(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text, nullptr, true, true);
    } catch (const Json::parse_error& e) {
        throw ClassDataParseError(std::string("class data is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ClassDataParseError("class data must be an object");
    }
    GroupClassData data;
    data.order = integer_field(member(j, "order"), "order");

    const Json& classes = member(j, "classes");
    if (!classes.is_array()) {
        throw ClassDataParseError("\"classes\" must be a list");
    }
    for (const auto& c : classes) {
        if (!c.is_object()) {
            throw ClassDataParseError("each class must be an object");
        }
        ClassRecord rec;
        rec.size = integer_field(member(c, "size"), "class size");
        const Json& det = member(c, "det_factors");
        if (!det.is_array()) {
            throw ClassDataParseError("\"det_factors\" must be a list of [i, multiplicity] pairs");
        }
        for (const auto& pair : det) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ClassDataParseError("\"det_factors\" must be a list of [i, multiplicity] pairs");
            }
            rec.det_factors[small_int(pair[0], "det factor index")] += small_int(pair[1], "det factor multiplicity");
        }
        std::erase_if(rec.det_factors, [](const auto& kv) { return kv.second == 0; });
        data.classes.push_back(std::move(rec));
    }

    const Json& chars = member(j, "characters");
    if (!chars.is_array()) {
        throw ClassDataParseError("\"characters\" must be a list of rows");
    }
    for (const auto& row : chars) {
        if (!row.is_array()) {
            throw ClassDataParseError("\"characters\" must be a list of rows");
        }
        std::vector<BigRational> values;
        for (const auto& v : row) {
            values.push_back(rational_field(v, "character value"));
        }
        data.characters.push_back(std::move(values));
    }
    return data;
}

GroupClassData load_class_data(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ClassDataParseError("cannot read class data file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_class_data(buf.str());
}

} // namespace invhilb::cli
