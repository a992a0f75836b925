#pragma once

#include <stdexcept>
#include <string>

#include "invhilb/molien/class_data.hpp"

namespace invhilb::cli {

class ClassDataParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON with // comments:
///   {"order": 6,
///    "classes": [{"size": 1, "det_factors": [[1, 3]]}, ...],
///    "characters": [["1", "1", "1"], ...]}
/// Integers may be given as numbers or decimal strings, character values as
/// numbers or "p/q" strings. Structure only; call validate() afterwards.
GroupClassData parse_class_data(const std::string& text);
GroupClassData load_class_data(const std::string& path);

} // namespace invhilb::cli
