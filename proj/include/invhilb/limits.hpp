#pragma once

#include <cstdint>
#include <optional>

namespace invhilb {

inline constexpr std::uint64_t kDefaultMonomialLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultPermutationLimit = 3'628'800; // 10!
inline constexpr std::uint64_t kLargePermutationLimit = 479'001'600; // 12!

/// Value of INVHILB_MAX_ENUM when set to a positive integer. When present it
/// replaces both the monomial and the permutation enumeration guards.
std::optional<std::uint64_t> enumeration_override();

std::uint64_t monomial_limit();
std::uint64_t permutation_limit(bool allow_large);

} // namespace invhilb
