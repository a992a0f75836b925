#include "invhilb/orbit/orbit_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "invhilb/limits.hpp"
#include "invhilb/orbit/echelon.hpp"

namespace invhilb {

namespace {

using Pair = std::pair<int, int>;

std::vector<int> offsets(const GammaSpec& spec)
{
    std::vector<int> out;
    int o = 0;
    for (int n : spec.ns()) {
        out.push_back(o);
        o += n;
    }
    return out;
}

void require_conforming(const GammaSpec& spec, const Monomial& m)
{
    if (static_cast<int>(m.size()) != 2 * spec.total()) {
        throw std::invalid_argument("monomial has the wrong number of variables");
    }
}

// (x, y) exponent pairs of one component.
std::vector<Pair> component_pairs(const GammaSpec& spec, const Monomial& m, int c, int offset)
{
    const int total = spec.total();
    std::vector<Pair> pairs;
    for (int l = 0; l < spec.n(c); ++l) {
        pairs.emplace_back(m[static_cast<std::size_t>(offset + l)], m[static_cast<std::size_t>(total + offset + l)]);
    }
    return pairs;
}

void write_pairs(const GammaSpec& spec, Monomial& m, int offset, const std::vector<Pair>& pairs)
{
    const int total = spec.total();
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        m[static_cast<std::size_t>(offset) + l] = pairs[l].first;
        m[static_cast<std::size_t>(total + offset) + l] = pairs[l].second;
    }
}

std::vector<int> first_primes(std::size_t count)
{
    std::vector<int> primes;
    for (int c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (int p : primes) {
            if (p * p > c) {
                break;
            }
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            primes.push_back(c);
        }
    }
    return primes;
}

} // namespace

GammaPerm::GammaPerm(const GammaSpec& spec, std::vector<Permutation> components) : spec_(spec), components_(std::move(components))
{
    if (static_cast<int>(components_.size()) != spec_.components()) {
        throw std::invalid_argument("one permutation per component is required");
    }
    for (int c = 0; c < spec_.components(); ++c) {
        if (components_[static_cast<std::size_t>(c)].size() != spec_.n(c)) {
            throw std::invalid_argument("component permutation has the wrong size");
        }
    }
}

GammaPerm GammaPerm::identity(const GammaSpec& spec)
{
    std::vector<Permutation> comps;
    for (int n : spec.ns()) {
        comps.push_back(Permutation::identity(n));
    }
    return GammaPerm(spec, std::move(comps));
}

GammaPerm GammaPerm::random(const GammaSpec& spec, std::mt19937_64& rng)
{
    std::vector<Permutation> comps;
    for (int n : spec.ns()) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            images[static_cast<std::size_t>(i)] = i + 1;
        }
        std::shuffle(images.begin(), images.end(), rng);
        comps.emplace_back(std::move(images));
    }
    return GammaPerm(spec, std::move(comps));
}

GammaPerm operator*(const GammaPerm& a, const GammaPerm& b)
{
    if (!(a.spec_ == b.spec_)) {
        throw std::invalid_argument("permutations of different groups");
    }
    std::vector<Permutation> comps;
    for (std::size_t c = 0; c < a.components_.size(); ++c) {
        comps.push_back(a.components_[c] * b.components_[c]);
    }
    return GammaPerm(a.spec_, std::move(comps));
}

MultiPoly apply_perm(const GammaPerm& sigma, const MultiPoly& f)
{
    const GammaSpec& spec = f.spec();
    if (!(sigma.spec() == spec)) {
        throw std::invalid_argument("permutation and polynomial have different specs");
    }
    const auto offs = offsets(spec);
    const int total = spec.total();
    // target[v] = image of variable v
    std::vector<int> target(static_cast<std::size_t>(2 * total));
    for (int c = 0; c < spec.components(); ++c) {
        const auto& p = sigma.components()[static_cast<std::size_t>(c)];
        for (int l = 1; l <= spec.n(c); ++l) {
            const int from = offs[static_cast<std::size_t>(c)] + l - 1;
            const int to = offs[static_cast<std::size_t>(c)] + p(l) - 1;
            target[static_cast<std::size_t>(from)] = to;
            target[static_cast<std::size_t>(total + from)] = total + to;
        }
    }
    MultiPoly out(spec);
    Monomial image(target.size());
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t v = 0; v < m.size(); ++v) {
            image[static_cast<std::size_t>(target[v])] = m[v];
        }
        out.add_term(image, c);
    }
    return out;
}

Monomial canonical_monomial(const GammaSpec& spec, const Monomial& m)
{
    require_conforming(spec, m);
    const auto offs = offsets(spec);
    Monomial out = m;
    for (int c = 0; c < spec.components(); ++c) {
        auto pairs = component_pairs(spec, m, c, offs[static_cast<std::size_t>(c)]);
        std::sort(pairs.begin(), pairs.end());
        write_pairs(spec, out, offs[static_cast<std::size_t>(c)], pairs);
    }
    return out;
}

std::vector<Monomial> monomial_orbit(const GammaSpec& spec, const Monomial& m)
{
    require_conforming(spec, m);
    const auto offs = offsets(spec);
    std::vector<Monomial> orbit{canonical_monomial(spec, m)};
    for (int c = 0; c < spec.components(); ++c) {
        const int offset = offs[static_cast<std::size_t>(c)];
        std::vector<Monomial> next;
        for (const auto& base : orbit) {
            auto pairs = component_pairs(spec, base, c, offset);
            do {
                Monomial e = base;
                write_pairs(spec, e, offset, pairs);
                next.push_back(std::move(e));
            } while (std::next_permutation(pairs.begin(), pairs.end()));
        }
        orbit = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

BigInt orbit_size(const GammaSpec& spec, const Monomial& m)
{
    require_conforming(spec, m);
    const auto offs = offsets(spec);
    BigInt size = 1;
    for (int c = 0; c < spec.components(); ++c) {
        std::map<Pair, unsigned> counts;
        for (const auto& p : component_pairs(spec, m, c, offs[static_cast<std::size_t>(c)])) {
            ++counts[p];
        }
        size *= factorial(static_cast<unsigned>(spec.n(c)));
        for (const auto& [p, k] : counts) {
            size /= factorial(k);
        }
    }
    return size;
}

MultiPoly orbit_sum(const MultiPoly& f)
{
    MultiPoly out(f.spec());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& e : monomial_orbit(f.spec(), m)) {
            out.add_term(e, c);
        }
    }
    return out;
}

MultiPoly power_invariant(int i, int r, int s, const GammaSpec& spec)
{
    if (r < 0 || s < 0 || r + s < 1) {
        throw std::invalid_argument("power invariant needs r, s >= 0 and r + s >= 1");
    }
    if (i < 1 || i > spec.components()) {
        throw std::out_of_range("component index out of range");
    }
    MultiPoly out(spec);
    for (int l = 1; l <= spec.n(i - 1); ++l) {
        Monomial m(static_cast<std::size_t>(2 * spec.total()), 0);
        m[static_cast<std::size_t>(x_index(spec, i, l))] = r;
        m[static_cast<std::size_t>(y_index(spec, i, l))] = s;
        out.add_term(m, 1);
    }
    return out;
}

MultiPoly left_power(int i, int m, const GammaSpec& spec) { return power_invariant(i, m, 0, spec); }

MultiPoly right_power(int i, int m, const GammaSpec& spec) { return power_invariant(i, 0, m, spec); }

std::vector<Generator> fundamental_generators(const GammaSpec& spec)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= spec.components(); ++i) {
        for (int d = 1; d <= spec.n(i - 1); ++d) {
            for (int r = d; r >= 0; --r) {
                gens.push_back({i, r, d - r, power_invariant(i, r, d - r, spec)});
            }
        }
    }
    return gens;
}

BigInt monomial_count(const GammaSpec& spec, int d)
{
    if (d < 0) {
        return 0;
    }
    const unsigned long vars = static_cast<unsigned long>(2 * spec.total());
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d) + vars - 1, vars - 1);
    return out;
}

std::vector<Monomial> degree_monomials(const GammaSpec& spec, int d)
{
    if (d < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const BigInt count = monomial_count(spec, d);
    if (count > BigInt(std::to_string(monomial_limit()))) {
        throw std::out_of_range("degree-" + std::to_string(d) + " monomial count " + count.get_str() +
                                " exceeds the enumeration guard");
    }
    const auto vars = static_cast<std::size_t>(2 * spec.total());
    std::vector<Monomial> out;
    out.reserve(count.get_ui());
    Monomial m(vars, 0);
    // Lexicographic order, largest first exponent last.
    std::function<void(std::size_t, int)> fill = [&](std::size_t v, int remaining) {
        if (v + 1 == vars) {
            m[v] = remaining;
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m[v] = e;
            fill(v + 1, remaining - e);
        }
    };
    fill(0, d);
    return out;
}

std::vector<Monomial> orbit_representatives(const GammaSpec& spec, int d)
{
    std::vector<Monomial> reps;
    for (const auto& m : degree_monomials(spec, d)) {
        if (canonical_monomial(spec, m) == m) {
            reps.push_back(m);
        }
    }
    return reps;
}

std::uint64_t invariant_dimension(const GammaSpec& spec, int d) { return orbit_representatives(spec, d).size(); }

GenerationReport verify_generation(const GammaSpec& spec, int d_max) { return verify_generation(spec, d_max, fundamental_generators(spec)); }

GenerationReport verify_generation(const GammaSpec& spec, int d_max, const std::vector<Generator>& generators)
{
    if (d_max < 0) {
        throw std::invalid_argument("dMax must be nonnegative");
    }
    std::vector<Generator> gens;
    for (const auto& g : generators) {
        if (!(g.poly.spec() == spec)) {
            throw std::invalid_argument("generator belongs to a different spec");
        }
        if (g.degree() >= 1 && g.degree() <= d_max) {
            gens.push_back(g);
        }
    }
    const auto n_deg = static_cast<std::size_t>(d_max) + 1;
    std::vector<std::map<Monomial, std::size_t>> columns(n_deg);
    GenerationReport report;
    report.invariant_dimension.resize(n_deg);
    for (int d = 0; d <= d_max; ++d) {
        const auto reps = orbit_representatives(spec, d);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            columns[static_cast<std::size_t>(d)].emplace(reps[k], k);
        }
        report.invariant_dimension[static_cast<std::size_t>(d)] = reps.size();
    }

    std::vector<EchelonBasis> bases(n_deg);
    bases[0].insert(SparseRow{{0, BigInt(1)}});
    const auto add_row = [&](const MultiPoly& p, int d) {
        const auto& cols = columns[static_cast<std::size_t>(d)];
        SparseRationalRow row;
        for (const auto& [m, c] : p.terms()) {
            const auto it = cols.find(m);
            if (it != cols.end()) {
                row.emplace_back(it->second, c);
            }
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        bases[static_cast<std::size_t>(d)].insert(row);
    };
    std::function<void(std::size_t, const MultiPoly&, int)> extend = [&](std::size_t start, const MultiPoly& p, int d) {
        for (std::size_t j = start; j < gens.size(); ++j) {
            const int nd = d + gens[j].degree();
            if (nd > d_max) {
                continue;
            }
            // A full slice gains nothing from more rows.
            const bool full = bases[static_cast<std::size_t>(nd)].rank() == report.invariant_dimension[static_cast<std::size_t>(nd)];
            if (full && nd == d_max) {
                continue;
            }
            const MultiPoly q = p * gens[j].poly;
            if (!full) {
                add_row(q, nd);
            }
            extend(j, q, nd);
        }
    };
    extend(0, MultiPoly::constant(spec, 1), 0);

    report.span_dimension.resize(n_deg);
    for (std::size_t d = 0; d < n_deg; ++d) {
        report.span_dimension[d] = bases[d].rank();
        if (report.generates && report.span_dimension[d] != report.invariant_dimension[d]) {
            report.generates = false;
            report.failing_degree = static_cast<int>(d);
        }
    }
    return report;
}

IndependenceReport verify_algebraic_independence(const GammaSpec& spec, const std::optional<std::vector<BigRational>>& first_point)
{
    constexpr int kRetries = 3;
    std::vector<MultiPoly> functions;
    for (int i = 1; i <= spec.components(); ++i) {
        for (int m = 1; m <= spec.n(i - 1); ++m) {
            functions.push_back(left_power(i, m, spec));
            functions.push_back(right_power(i, m, spec));
        }
    }
    const int vars = 2 * spec.total();
    if (first_point && static_cast<int>(first_point->size()) != vars) {
        throw std::invalid_argument("evaluation point has the wrong number of coordinates");
    }
    std::vector<std::vector<MultiPoly>> jacobian;
    for (const auto& f : functions) {
        std::vector<MultiPoly> row;
        for (int v = 0; v < vars; ++v) {
            row.push_back(f.derivative(v));
        }
        jacobian.push_back(std::move(row));
    }
    const int prime_points = first_point ? kRetries : kRetries + 1;
    const auto primes = first_primes(static_cast<std::size_t>(vars * prime_points));

    IndependenceReport report;
    report.expected = functions.size();
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        std::vector<BigRational> point;
        if (first_point && attempt == 0) {
            point = *first_point;
        } else {
            const int k = first_point ? attempt - 1 : attempt;
            for (int v = 0; v < vars; ++v) {
                point.emplace_back(primes[static_cast<std::size_t>(k * vars + v)]);
            }
        }
        std::vector<std::vector<BigRational>> values;
        for (const auto& row : jacobian) {
            std::vector<BigRational> r;
            for (const auto& entry : row) {
                r.push_back(entry.evaluate(point));
            }
            values.push_back(std::move(r));
        }
        report.attempts = attempt + 1;
        report.rank = exact_rank(values);
        if (report.rank == report.expected) {
            report.independent = true;
            break;
        }
    }
    return report;
}

SecondaryReport verify_secondary_independence(const GammaSpec& spec)
{
    if (spec.components() != 1) {
        throw std::invalid_argument("secondary independence is checked for a single component only");
    }
    const int n = spec.n(0);
    if (n > kMaxSecondaryN) {
        throw std::out_of_range("secondary independence check is limited to n <= " + std::to_string(kMaxSecondaryN));
    }
    SecondaryReport report;
    report.ideal_rank.assign(static_cast<std::size_t>(n) + 1, 0);
    report.combined_rank.assign(static_cast<std::size_t>(n) + 1, 0);

    const auto row_of = [](const MultiPoly& p, const std::map<Monomial, std::size_t>& cols) {
        SparseRationalRow row;
        for (const auto& [m, c] : p.terms()) {
            row.emplace_back(cols.at(m), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return row;
    };

    for (int d = 1; d <= n; ++d) {
        const auto basis = degree_monomials(spec, d);
        std::map<Monomial, std::size_t> cols;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            cols.emplace(basis[k], k);
        }
        EchelonBasis ideal;
        for (int m = 1; m <= d; ++m) {
            for (const auto& g : {left_power(1, m, spec), right_power(1, m, spec)}) {
                for (const auto& mono : degree_monomials(spec, d - m)) {
                    ideal.insert(row_of(g * MultiPoly::monomial(spec, mono), cols));
                }
            }
        }
        report.ideal_rank[static_cast<std::size_t>(d)] = ideal.rank();
        std::size_t mixed = 0;
        for (int r = d - 1; r >= 1; --r) {
            ideal.insert(row_of(power_invariant(1, r, d - r, spec), cols));
            ++mixed;
        }
        report.combined_rank[static_cast<std::size_t>(d)] = ideal.rank();
        if (report.independent && report.combined_rank[static_cast<std::size_t>(d)] != report.ideal_rank[static_cast<std::size_t>(d)] + mixed) {
            report.independent = false;
            report.failing_degree = d;
        }
    }
    return report;
}

} // namespace invhilb
