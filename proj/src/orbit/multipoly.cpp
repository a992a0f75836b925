#include "invhilb/orbit/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invhilb {

namespace {

int component_offset(const GammaSpec& spec, int i, int l)
{
    if (i < 1 || i > spec.components() || l < 1 || l > spec.n(i - 1)) {
        throw std::out_of_range("variable index out of range");
    }
    int offset = 0;
    for (int c = 0; c < i - 1; ++c) {
        offset += spec.n(c);
    }
    return offset + l - 1;
}

} // namespace

int x_index(const GammaSpec& spec, int i, int l) { return component_offset(spec, i, l); }

int y_index(const GammaSpec& spec, int i, int l) { return spec.total() + component_offset(spec, i, l); }

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

MultiPoly::MultiPoly(GammaSpec spec) : spec_(std::move(spec)) {}

MultiPoly MultiPoly::constant(const GammaSpec& spec, const BigRational& c)
{
    MultiPoly p(spec);
    p.add_term(Monomial(static_cast<std::size_t>(2 * spec.total()), 0), c);
    return p;
}

MultiPoly MultiPoly::x(const GammaSpec& spec, int i, int l)
{
    Monomial m(static_cast<std::size_t>(2 * spec.total()), 0);
    m[static_cast<std::size_t>(x_index(spec, i, l))] = 1;
    return monomial(spec, m);
}

MultiPoly MultiPoly::y(const GammaSpec& spec, int i, int l)
{
    Monomial m(static_cast<std::size_t>(2 * spec.total()), 0);
    m[static_cast<std::size_t>(y_index(spec, i, l))] = 1;
    return monomial(spec, m);
}

MultiPoly MultiPoly::monomial(const GammaSpec& spec, const Monomial& m, const BigRational& c)
{
    MultiPoly p(spec);
    p.add_term(m, c);
    return p;
}

BigRational MultiPoly::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, total_degree(m));
    }
    return d;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c)
{
    if (static_cast<int>(m.size()) != nvars()) {
        throw std::invalid_argument("monomial has the wrong number of variables");
    }
    for (int e : m) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent");
        }
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::require_same_spec(const MultiPoly& other) const
{
    if (!(spec_ == other.spec_)) {
        throw std::invalid_argument("polynomials live in different rings");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    require_same_spec(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    require_same_spec(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.require_same_spec(b);
    MultiPoly out(a.spec_);
    Monomial m(static_cast<std::size_t>(a.nvars()));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t v = 0; v < m.size(); ++v) {
                m[v] = ma[v] + mb[v];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::derivative(int var) const
{
    if (var < 0 || var >= nvars()) {
        throw std::out_of_range("variable index out of range");
    }
    MultiPoly out(spec_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) {
            continue;
        }
        Monomial d = m;
        --d[v];
        out.add_term(d, c * m[v]);
    }
    return out;
}

BigRational MultiPoly::evaluate(const std::vector<BigRational>& point) const
{
    if (static_cast<int>(point.size()) != nvars()) {
        throw std::invalid_argument("point has the wrong number of coordinates");
    }
    BigRational total = 0;
    for (const auto& [m, c] : terms_) {
        BigRational term = c;
        for (std::size_t v = 0; v < m.size(); ++v) {
            for (int e = 0; e < m[v]; ++e) {
                term *= point[v];
            }
        }
        total += term;
    }
    return total;
}

} // namespace invhilb
