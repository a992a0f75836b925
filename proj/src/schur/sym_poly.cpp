#include "invhilb/schur/sym_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace invhilb {

FiniteSymPoly::FiniteSymPoly(int nvars) : nvars_(nvars)
{
    if (nvars < 0) {
        throw std::invalid_argument("negative variable count");
    }
}

FiniteSymPoly FiniteSymPoly::constant(int nvars, const BigRational& c)
{
    FiniteSymPoly p(nvars);
    p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

FiniteSymPoly FiniteSymPoly::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    FiniteSymPoly p(nvars);
    ExponentVector e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

BigRational FiniteSymPoly::coefficient(const ExponentVector& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void FiniteSymPoly::add_term(const ExponentVector& e, const BigRational& c)
{
    if (static_cast<int>(e.size()) != nvars_) {
        throw std::invalid_argument("exponent vector length differs from variable count");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

FiniteSymPoly& FiniteSymPoly::operator+=(const FiniteSymPoly& rhs)
{
    if (rhs.nvars_ != nvars_) {
        throw std::invalid_argument("variable count mismatch");
    }
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

FiniteSymPoly& FiniteSymPoly::operator-=(const FiniteSymPoly& rhs)
{
    if (rhs.nvars_ != nvars_) {
        throw std::invalid_argument("variable count mismatch");
    }
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

FiniteSymPoly& FiniteSymPoly::operator*=(const BigRational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

FiniteSymPoly operator*(const FiniteSymPoly& a, const FiniteSymPoly& b)
{
    if (a.nvars_ != b.nvars_) {
        throw std::invalid_argument("variable count mismatch");
    }
    FiniteSymPoly out(a.nvars_);
    ExponentVector e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

FiniteSymPoly FiniteSymPoly::permuted(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != nvars_) {
        throw std::invalid_argument("permutation size differs from variable count");
    }
    FiniteSymPoly out(nvars_);
    ExponentVector moved(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            moved[static_cast<std::size_t>(perm[i])] = e[i];
        }
        out.add_term(moved, c);
    }
    return out;
}

FiniteSymPoly FiniteSymPoly::embedded(int total_vars, int offset) const
{
    if (offset < 0 || offset + nvars_ > total_vars) {
        throw std::out_of_range("embedding does not fit");
    }
    FiniteSymPoly out(total_vars);
    ExponentVector wide(static_cast<std::size_t>(total_vars), 0);
    for (const auto& [e, c] : terms_) {
        std::copy(e.begin(), e.end(), wide.begin() + offset);
        out.add_term(wide, c);
    }
    return out;
}

DensePoly FiniteSymPoly::specialize_geometric() const
{
    std::vector<BigRational> coeffs;
    for (const auto& [e, c] : terms_) {
        std::size_t degree = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            degree += i * static_cast<std::size_t>(e[i]);
        }
        if (coeffs.size() <= degree) {
            coeffs.resize(degree + 1);
        }
        coeffs[degree] += c;
    }
    return DensePoly(std::move(coeffs));
}

FiniteSymPoly power_sum(int i, int m)
{
    if (i < 0 || m < 1) {
        throw std::invalid_argument("power_sum needs i >= 0 and m >= 1");
    }
    FiniteSymPoly p(m);
    for (int j = 0; j < m; ++j) {
        ExponentVector e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(j)] = i;
        p.add_term(e, 1);
    }
    return p;
}

namespace {

// Every exponent vector with entries in [0, cap] summing to total.
template <typename F>
void for_each_composition(int m, int total, int cap, F&& f)
{
    ExponentVector e(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 1) {
            if (left <= cap) {
                e[static_cast<std::size_t>(pos)] = left;
                f(e);
            }
            return;
        }
        for (int v = 0; v <= std::min(left, cap); ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

} // namespace

FiniteSymPoly elementary(int i, int m)
{
    if (i < 0 || m < 1) {
        throw std::invalid_argument("elementary needs i >= 0 and m >= 1");
    }
    FiniteSymPoly p(m);
    for_each_composition(m, i, 1, [&](const ExponentVector& e) { p.add_term(e, 1); });
    return p;
}

FiniteSymPoly homogeneous(int r, int m)
{
    if (r < 0 || m < 1) {
        throw std::invalid_argument("homogeneous needs r >= 0 and m >= 1");
    }
    FiniteSymPoly p(m);
    for_each_composition(m, r, r, [&](const ExponentVector& e) { p.add_term(e, 1); });
    return p;
}

FiniteSymPoly power_sum_product(const std::vector<int>& parts, int m)
{
    FiniteSymPoly p = FiniteSymPoly::constant(m, 1);
    for (int part : parts) {
        p = p * power_sum(part, m);
    }
    return p;
}

} // namespace invhilb
