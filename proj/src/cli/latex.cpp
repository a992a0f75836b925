#include "invhilb/cli/latex.hpp"

#include <sstream>

namespace invhilb::cli {

namespace {

std::string exponent(int e)
{
    const auto s = std::to_string(e);
    return s.size() > 1 ? "{" + s + "}" : s;
}

std::string t_power(int e)
{
    if (e == 0) {
        return "";
    }
    return e == 1 ? "t" : "t^" + exponent(e);
}

std::string magnitude(const BigRational& c, bool bare_one)
{
    const BigRational a = abs(c);
    if (a == 1 && bare_one) {
        return "";
    }
    if (a.get_den() == 1) {
        return a.get_num().get_str();
    }
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

} // namespace

std::string latex_poly(const DensePoly& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) {
            continue;
        }
        if (c[d] < 0) {
            out << "-";
        } else if (!first) {
            out << "+";
        }
        out << magnitude(c[d], d > 0) << t_power(static_cast<int>(d));
        first = false;
    }
    return out.str();
}

std::string latex_denominator(const DenominatorExponents& e)
{
    if (e.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [i, k] : e) {
        out += "(1-" + t_power(i) + ")";
        if (k > 1) {
            out += "^" + exponent(k);
        }
    }
    return out;
}

std::string latex_fraction(const FactoredSeries& f)
{
    return "\\dfrac{" + latex_poly(f.numerator()) + "}{" + latex_denominator(f.denominator()) + "}";
}

std::string latex_hilbert(const GammaSpec& spec, const FactoredSeries& f)
{
    if (spec.components() == 1) {
        return "H(K[V\\oplus V]^{S_" + exponent(spec.n(0)) + "},t)=" + latex_fraction(f);
    }
    return "H(K[V_\\Gamma\\oplus V_\\Gamma]^{S_\\Gamma},t)=" + latex_fraction(f);
}

std::string latex_schur(const Partition& lambda, const FactoredSeries& f)
{
    return "\\{" + to_string(lambda) + ":t\\}=" + latex_fraction(f);
}

} // namespace invhilb::cli
