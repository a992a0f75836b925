#pragma once

#include <map>
#include <vector>

#include "invhilb/molien/molien.hpp"
#include "invhilb/series/rational.hpp"

namespace invhilb {

/// Exponents of x_{il} (= x_{il} (x) 1) followed by y_{il} (= 1 (x) x_{il}),
/// each block ordered by component i, then index l.
using Monomial = std::vector<int>;

/// 0-based variable positions for 1-based (i, l).
int x_index(const GammaSpec& spec, int i, int l);
int y_index(const GammaSpec& spec, int i, int l);

int total_degree(const Monomial& m);

/// Element of K[V_Gamma] (x) K[V_Gamma] = K[x_{il}, y_{il}].
class MultiPoly {
public:
    explicit MultiPoly(GammaSpec spec);

    static MultiPoly constant(const GammaSpec& spec, const BigRational& c);
    static MultiPoly x(const GammaSpec& spec, int i, int l);
    static MultiPoly y(const GammaSpec& spec, int i, int l);
    static MultiPoly monomial(const GammaSpec& spec, const Monomial& m, const BigRational& c = 1);

    const GammaSpec& spec() const { return spec_; }
    int nvars() const { return 2 * spec_.total(); }
    const std::map<Monomial, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRational coefficient(const Monomial& m) const;
    /// Highest total degree; -1 for zero.
    int degree() const;

    void add_term(const Monomial& m, const BigRational& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const BigRational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    MultiPoly derivative(int var) const;
    BigRational evaluate(const std::vector<BigRational>& point) const;

private:
    void require_same_spec(const MultiPoly& other) const;

    GammaSpec spec_;
    std::map<Monomial, BigRational> terms_;
};

} // namespace invhilb
