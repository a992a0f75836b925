#include "invhilb/series/rational.hpp"

#include <stdexcept>

namespace invhilb {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt parse_integer(std::string_view text)
{
    if (!is_integer_literal(text)) {
        throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text));
    }
    const auto num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return make_rational(num, parse_integer(den_text));
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace invhilb
