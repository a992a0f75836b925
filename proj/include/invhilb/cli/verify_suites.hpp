#pragma once

#include <string>
#include <vector>

namespace invhilb::cli {

struct CheckResult {
    std::string name;
    bool pass;
};

inline constexpr int kMaxIdentitiesN = 8;
inline constexpr int kMaxOrbitN = 4;
inline constexpr int kMaxCharactersN = 10;

/// Route equality, f_n statistics, the Carlitz product and Cauchy identity.
std::vector<CheckResult> identities_suite(int n_max);
/// Ring-level checks on specs (n) for 2 <= n <= n_max, plus (2,2).
std::vector<CheckResult> orbit_suite(int n_max);
/// Orthogonality, hook lengths, conjugation and the two Schur routes.
std::vector<CheckResult> characters_suite(int n_max);

/// "identities" | "orbit" | "characters" | "all". Throws std::invalid_argument
/// on an unknown suite or an n_max outside the suite's range.
std::vector<CheckResult> run_suite(const std::string& suite, int n_max);

} // namespace invhilb::cli
