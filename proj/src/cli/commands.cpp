#include "invhilb/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invhilb/cli/class_data_io.hpp"
#include "invhilb/cli/document.hpp"
#include "invhilb/cli/latex.hpp"
#include "invhilb/cli/verify_suites.hpp"
#include "invhilb/molien/class_data.hpp"
#include "invhilb/molien/major_index.hpp"
#include "invhilb/molien/molien.hpp"
#include "invhilb/schur/schur.hpp"

namespace invhilb::cli {

namespace {

struct Common {
    std::string format = "text";
};

// A finished command: its document, its text lines and the exit code.
struct Outcome {
    OutputDocument doc;
    std::vector<std::string> text;
    int code = kExitOk;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) || tok.size() > 6) {
            throw std::invalid_argument(what + " must be a comma-separated list of positive integers");
        }
        const int v = std::stoi(tok);
        if (v <= 0) {
            throw std::invalid_argument(what + " entries must be positive");
        }
        out.push_back(v);
    }
    if (out.empty() || text.empty() || text.back() == ',') {
        throw std::invalid_argument(what + " must be a comma-separated list of positive integers");
    }
    return out;
}

std::string join(const std::vector<BigRational>& values)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? ", " : "") + to_string(values[k]);
    }
    return out;
}

Json int_list(const std::vector<int>& v)
{
    Json out = Json::array();
    for (int x : v) {
        out.push_back(x);
    }
    return out;
}

FactoredSeries one() { return FactoredSeries(DensePoly::constant(1), {}); }

FactoredSeries route_series(char route, const GammaSpec& spec, const FMajOptions& opts)
{
    if (route == 'c') {
        return hilbert_gamma(spec, opts);
    }
    FactoredSeries out = one();
    for (int n : spec.ns()) {
        out = out * (route == 'a' ? hilbert_double_classsum(n) : hilbert_double_schur(n));
    }
    return out;
}

Outcome cmd_hilbert(const std::string& gamma_text, std::optional<int> order_opt, const std::string& route, int jobs, bool latex,
                    bool allow_large)
{
    const GammaSpec spec(parse_int_list(gamma_text, "--gamma"));
    if (route != "a" && route != "b" && route != "c" && route != "all") {
        throw std::invalid_argument("--route must be a, b, c or all");
    }
    int default_order = 10;
    for (int n : spec.ns()) {
        default_order += n * (n - 1);
    }
    const int order = order_opt.value_or(default_order);
    if (order < 0) {
        throw std::invalid_argument("--order must be nonnegative");
    }
    const FMajOptions opts{jobs, allow_large};

    Outcome o;
    o.doc.command = "hilbert";
    o.doc.inputs = {{"gamma", int_list(spec.ns())}, {"order", order}, {"route", route}, {"latex", latex}};

    FactoredSeries series = one();
    if (route == "all") {
        const auto a = route_series('a', spec, opts);
        const auto b = route_series('b', spec, opts);
        const auto c = route_series('c', spec, opts);
        const bool agree = factored_equal(a, b) && factored_equal(b, c);
        o.doc.result["routes_agree"] = agree;
        o.doc.status = agree ? "pass" : "fail";
        o.code = agree ? kExitOk : kExitFailed;
        series = c;
    } else {
        series = route_series(route[0], spec, opts);
    }
    const auto expansion = expand(series, order);
    o.doc.result["series"] = series_json(series);
    o.doc.result["expansion"] = expansion_json(expansion);
    if (latex) {
        o.doc.result["latex"] = latex_hilbert(spec, series);
        o.text.push_back(latex_hilbert(spec, series));
        return o;
    }
    o.text.push_back("H(t) = " + to_string(series));
    o.text.push_back("expansion through t^" + std::to_string(order) + ": " + join(expansion.coeffs()));
    if (o.doc.status) {
        o.text.push_back(std::string("routes a, b, c agree: ") + (o.code == kExitOk ? "yes" : "no"));
    }
    return o;
}

Partition parse_partition(const std::string& text, std::ostream& err)
{
    auto parts = parse_int_list(text, "--partition");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        err << "warning: partition parts reordered to " << to_string(Partition(parts)) << "\n";
    }
    return Partition(parts);
}

Outcome cmd_schur(const std::string& partition_text, std::optional<int> order_opt, bool latex, std::ostream& err)
{
    const Partition lambda = parse_partition(partition_text, err);
    const int n = lambda.size();
    const int order = order_opt.value_or(n * (n - 1) + 10);
    if (order < 0) {
        throw std::invalid_argument("--order must be nonnegative");
    }
    const auto series = schur_q(lambda);
    const auto expansion = expand(series, order);

    Outcome o;
    o.doc.command = "schur";
    o.doc.inputs = {{"partition", int_list(lambda.parts())}, {"order", order}, {"latex", latex}};
    o.doc.result = {{"n_lambda", n_lambda(lambda)}, {"series", series_json(series)}, {"expansion", expansion_json(expansion)}};
    if (latex) {
        o.doc.result["latex"] = latex_schur(lambda, series);
        o.text.push_back(latex_schur(lambda, series));
        return o;
    }
    o.text.push_back("{" + to_string(lambda) + ":t} = " + to_string(series));
    o.text.push_back("expansion through t^" + std::to_string(order) + ": " + join(expansion.coeffs()));
    return o;
}

Outcome cmd_fmaj(int n, int jobs, bool allow_large)
{
    const DensePoly f = f_maj(n, FMajOptions{jobs, allow_large});
    Outcome o;
    o.doc.command = "fmaj";
    o.doc.inputs = {{"n", n}, {"allow_large", allow_large}};
    o.doc.result = {{"coefficients", rational_list(f.coeffs())},
                    {"degree", f.degree()},
                    {"value_at_1", to_string(f.evaluate(1))},
                    {"palindromic", f.is_palindromic()}};
    o.text.push_back("f_" + std::to_string(n) + " coefficients: " + join(f.coeffs()));
    o.text.push_back("degree: " + std::to_string(f.degree()));
    o.text.push_back("f_" + std::to_string(n) + "(1) = " + to_string(f.evaluate(1)));
    return o;
}

Outcome cmd_verify(const std::string& suite, int n_max)
{
    const auto checks = run_suite(suite, n_max);
    Outcome o;
    o.doc.command = "verify";
    o.doc.inputs = {{"suite", suite}, {"n_max", n_max}};
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"pass", c.pass}});
        o.text.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name);
        failed += c.pass ? 0 : 1;
    }
    o.doc.result = {{"checks", list}, {"passed", std::to_string(checks.size() - failed)}, {"failed", std::to_string(failed)}};
    o.doc.status = failed == 0 ? "pass" : "fail";
    o.code = failed == 0 ? kExitOk : kExitFailed;
    o.text.push_back(std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed");
    return o;
}

Outcome cmd_general(const std::string& path, int order)
{
    if (order < 0) {
        throw std::invalid_argument("--order must be nonnegative");
    }
    const GroupClassData data = load_class_data(path);
    Outcome o;
    o.doc.command = "general";
    o.doc.inputs = {{"class_data", path}, {"order", order}};
    try {
        validate(data);
    } catch (const ClassDataError& e) {
        o.doc.status = "fail";
        o.doc.result = {{"error", e.what()}};
        o.text.push_back(std::string("class data invalid: ") + e.what());
        o.code = kExitFailed;
        return o;
    }
    Json chars = Json::array();
    for (std::size_t c = 0; c < data.characters.size(); ++c) {
        const auto s = schur_analogue_general(data, c, order);
        chars.push_back(expansion_json(s));
        o.text.push_back("S_chi" + std::to_string(c + 1) + ": " + join(s.coeffs()));
    }
    const auto h = hilbert_double_general(data, order);
    o.doc.result = {{"dimension", representation_dimension(data)}, {"characters", chars}, {"hilbert", expansion_json(h)}};
    o.doc.status = "pass";
    o.text.push_back("H(t) through t^" + std::to_string(order) + ": " + join(h.coeffs()));
    return o;
}

Outcome cmd_stats(int n, int jobs, bool allow_large)
{
    const auto stats = hironaka_stats(n, FMajOptions{jobs, allow_large});
    Json hist = Json::array();
    std::string line;
    for (std::size_t d = 0; d < stats.degree_histogram.size(); ++d) {
        hist.push_back(stats.degree_histogram[d].get_str());
        line += (d ? ", " : "") + stats.degree_histogram[d].get_str();
    }
    Outcome o;
    o.doc.command = "stats";
    o.doc.inputs = {{"n", n}};
    o.doc.result = {{"secondary_count", stats.secondary_count.get_str()},
                    {"max_secondary_degree", stats.max_secondary_degree},
                    {"degree_histogram", hist}};
    o.text.push_back("secondary invariants: " + stats.secondary_count.get_str());
    o.text.push_back("top degree: " + std::to_string(stats.max_secondary_degree));
    o.text.push_back("by degree: " + line);
    return o;
}

void add_format(CLI::App* sub, Common& common)
{
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hilbert series of diagonal invariants of products of symmetric groups"};
    app.require_subcommand(1);
    Common common;

    std::string gamma;
    std::string partition;
    std::string route = "c";
    std::string suite = "all";
    std::string class_data;
    std::optional<int> order;
    int general_order = 20;
    int n = 0;
    int n_max = 4;
    int jobs = 1;
    bool latex = false;
    bool allow_large = false;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of K[V_Gamma + V_Gamma]^{S_Gamma}");
    hilbert->add_option("--gamma", gamma, "Composition n_1,...,n_k")->required();
    hilbert->add_option("--order", order, "Truncation order of the expansion");
    hilbert->add_option("--route", route, "a: class sum, b: Schur squares, c: major index, all: compare");
    hilbert->add_option("--jobs", jobs, "Worker threads for the major-index route")->check(CLI::PositiveNumber);
    hilbert->add_flag("--latex", latex, "Print the closed form as LaTeX");
    hilbert->add_flag("--allow-large", allow_large, "Allow permutation enumeration up to 12!");
    add_format(hilbert, common);

    auto* schur = app.add_subcommand("schur", "Principal specialization {lambda:t}");
    schur->add_option("--partition", partition, "Parts, comma separated")->required();
    schur->add_option("--order", order, "Truncation order of the expansion");
    schur->add_flag("--latex", latex, "Print the closed form as LaTeX");
    add_format(schur, common);

    auto* fmaj = app.add_subcommand("fmaj", "f_n(t) = sum t^{maj(s) + maj(s^-1)}");
    fmaj->add_option("--n", n, "Degree of the symmetric group")->required();
    fmaj->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    fmaj->add_flag("--allow-large", allow_large, "Allow n = 11, 12");
    add_format(fmaj, common);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "identities, orbit, characters or all");
    verify->add_option("--n-max", n_max, "Largest n to check");
    add_format(verify, common);

    auto* general = app.add_subcommand("general", "sum_chi S_chi(t)^2 from a class-data file");
    general->add_option("--class-data", class_data, "Class-data file (JSON with comments)")->required();
    general->add_option("--order", general_order, "Truncation order");
    add_format(general, common);

    auto* stats = app.add_subcommand("stats", "Degree statistics of the secondary invariants");
    stats->add_option("--n", n, "Degree of the symmetric group")->required();
    stats->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    stats->add_flag("--allow-large", allow_large, "Allow n = 11, 12");
    add_format(stats, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    Outcome o;
    try {
        if (*hilbert) {
            o = cmd_hilbert(gamma, order, route, jobs, latex, allow_large);
        } else if (*schur) {
            o = cmd_schur(partition, order, latex, err);
        } else if (*fmaj) {
            o = cmd_fmaj(n, jobs, allow_large);
        } else if (*verify) {
            o = cmd_verify(suite, n_max);
        } else if (*general) {
            o = cmd_general(class_data, general_order);
        } else {
            o = cmd_stats(n, jobs, allow_large);
        }
    } catch (const ClassDataParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (common.format == "structured") {
        out << serialize(o.doc);
    } else {
        for (const auto& line : o.text) {
            out << line << "\n";
        }
    }
    return o.code;
}

} // namespace invhilb::cli
