#include "invhilb/limits.hpp"

#include <cstdlib>
#include <string>

namespace invhilb {

std::optional<std::uint64_t> enumeration_override()
{
    const char* raw = std::getenv("INVHILB_MAX_ENUM");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used != std::string(raw).size() || v == 0) {
            return std::nullopt;
        }
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::uint64_t monomial_limit() { return enumeration_override().value_or(kDefaultMonomialLimit); }

std::uint64_t permutation_limit(bool allow_large)
{
    if (const auto v = enumeration_override()) {
        return *v;
    }
    return allow_large ? kLargePermutationLimit : kDefaultPermutationLimit;
}

} // namespace invhilb
