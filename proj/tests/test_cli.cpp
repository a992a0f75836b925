#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "invhilb/cli/commands.hpp"
#include "invhilb/cli/document.hpp"
#include "invhilb/molien/molien.hpp"

using namespace invhilb;
using invhilb::cli::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "invhilb");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json structured(std::vector<std::string> args)
{
    args.emplace_back("--format");
    args.emplace_back("structured");
    const auto r = run(args);
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = cli::parse_document(r.out);
    // Serializing the parsed document gives back the same bytes.
    CHECK(cli::serialize(doc) == r.out);
    return Json{{"command", doc.command}, {"inputs", doc.inputs}, {"result", doc.result}};
}

std::string strip(std::string s)
{
    std::erase_if(s, [](unsigned char c) { return std::isspace(c) != 0; });
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> strings(std::initializer_list<const char*> v) { return {v.begin(), v.end()}; }

std::vector<std::string> coefficient_strings(const DensePoly& p)
{
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

} // namespace

TEST_CASE("exit codes")
{
    CHECK(run({"hilbert", "--gamma", "3"}).code == cli::kExitOk);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({}).code == cli::kExitInvalid);
    CHECK(run({"hilbert"}).code == cli::kExitInvalid);
    CHECK(run({"hilbert", "--gamma", "0"}).code == cli::kExitInvalid);
    CHECK(run({"hilbert", "--gamma", "2,x"}).code == cli::kExitInvalid);
    CHECK(run({"hilbert", "--gamma", "11", "--route", "a"}).code == cli::kExitInvalid);
    CHECK(run({"hilbert", "--gamma", "3", "--route", "z"}).code == cli::kExitInvalid);
    CHECK(run({"fmaj", "--n", "11"}).code == cli::kExitInvalid);
    CHECK(run({"schur", "--partition", "2,0"}).code == cli::kExitInvalid);
    CHECK(run({"verify", "--suite", "orbit", "--n-max", "9"}).code == cli::kExitInvalid);
    CHECK(run({"general", "--class-data", "/nonexistent.json"}).code == cli::kExitInvalid);
    const auto bad = run({"general", "--class-data", std::string(INVHILB_SOURCE_DIR) + "/tests/data/bad_class_sizes.json"});
    CHECK(bad.code == cli::kExitFailed);
    CHECK(bad.out.find("class data invalid: class sizes must sum to |G|") != std::string::npos);
    const auto invalid = run({"hilbert", "--gamma", "0"});
    CHECK(invalid.err.rfind("error: ", 0) == 0);
}

TEST_CASE("hilbert output")
{
    const auto s2 = structured({"hilbert", "--gamma", "2"});
    CHECK(s2["command"] == "hilbert");
    CHECK(s2["result"]["series"]["numerator"] == Json(strings({"1", "0", "1"})));
    CHECK(s2["result"]["series"]["denominator"] == Json{{"1", "2"}, {"2", "2"}});
    CHECK(s2["result"]["expansion"][2] == "6");

    const auto s23 = structured({"hilbert", "--gamma", "2,3"});
    const auto expected = DensePoly(std::vector<BigRational>{1, 0, 1}) * f_maj(3);
    CHECK(s23["result"]["series"]["numerator"] == Json(coefficient_strings(expected)));
    CHECK(s23["inputs"]["gamma"] == Json{2, 3});

    for (const char* route : {"a", "b", "c"}) {
        CHECK(structured({"hilbert", "--gamma", "4", "--route", route})["result"] ==
              structured({"hilbert", "--gamma", "4"})["result"]);
    }
    const auto all = run({"hilbert", "--gamma", "2,3", "--route", "all", "--format", "structured"});
    CHECK(all.code == cli::kExitOk);
    CHECK(cli::parse_document(all.out).status == "pass");
}

TEST_CASE("LaTeX output for n = 2, 3, 4")
{
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const auto golden = read_file(std::string(INVHILB_SOURCE_DIR) + "/tests/golden/hilbert_s" + std::to_string(n) + ".tex");
        REQUIRE(!golden.empty());
        const auto r = run({"hilbert", "--gamma", std::to_string(n), "--latex"});
        CHECK(r.code == cli::kExitOk);
        CHECK(strip(r.out) == strip(golden));
    }
}

TEST_CASE("schur output")
{
    const auto s = structured({"schur", "--partition", "2,1", "--order", "5"});
    CHECK(s["result"]["n_lambda"] == 1);
    CHECK(s["result"]["series"]["numerator"] == Json(strings({"0", "1"})));
    CHECK(s["result"]["series"]["denominator"] == Json{{"1", "2"}, {"3", "1"}});
    CHECK(s["result"]["expansion"] == Json(strings({"0", "1", "2", "3", "5", "7"})));

    const auto reordered = run({"schur", "--partition", "1,2", "--order", "5"});
    CHECK(reordered.code == cli::kExitOk);
    CHECK(reordered.err.find("reordered to (2,1)") != std::string::npos);
    CHECK(reordered.out == run({"schur", "--partition", "2,1", "--order", "5"}).out);
    CHECK(strip(run({"schur", "--partition", "1,1", "--latex"}).out) == strip("\\{(1,1):t\\}=\\dfrac{t}{(1-t)(1-t^2)}"));
}

TEST_CASE("fmaj output")
{
    const auto f3 = structured({"fmaj", "--n", "3"});
    CHECK(f3["result"]["coefficients"] == Json(strings({"1", "0", "1", "2", "1", "0", "1"})));
    CHECK(f3["result"]["value_at_1"] == "6");
    CHECK(f3["result"]["palindromic"] == true);
    CHECK(structured({"fmaj", "--n", "1"})["result"]["coefficients"] == Json(strings({"1"})));
    for (int n = 1; n <= 7; ++n) {
        const auto one = run({"fmaj", "--n", std::to_string(n), "--jobs", "1"});
        const auto four = run({"fmaj", "--n", std::to_string(n), "--jobs", "4"});
        CHECK(one.out == four.out);
    }
}

TEST_CASE("verify output")
{
    for (const char* suite : {"identities", "orbit", "characters"}) {
        const auto r = run({"verify", "--suite", suite, "--n-max", "3", "--format", "structured"});
        CHECK(r.code == cli::kExitOk);
        const auto doc = cli::parse_document(r.out);
        CHECK(doc.status == "pass");
        CHECK(doc.result["failed"] == "0");
    }
    const auto text = run({"verify", "--suite", "identities", "--n-max", "2"});
    CHECK(text.out.find("PASS three routes agree n=2") != std::string::npos);
    CHECK(text.out.find("14/14 checks passed") != std::string::npos);
}

TEST_CASE("general matches hilbert for S_3")
{
    const auto file = std::string(INVHILB_SOURCE_DIR) + "/data/s3_class_data.json";
    const auto g = structured({"general", "--class-data", file, "--order", "12"});
    const auto h = structured({"hilbert", "--gamma", "3", "--order", "12"});
    CHECK(g["result"]["hilbert"] == h["result"]["expansion"]);
    CHECK(g["result"]["dimension"] == 3);
}

TEST_CASE("stats output")
{
    const auto s = structured({"stats", "--n", "5"});
    CHECK(s["result"]["secondary_count"] == "120");
    CHECK(s["result"]["max_secondary_degree"] == 20);
}

TEST_CASE("repeated runs are byte identical")
{
    const std::vector<std::vector<std::string>> commands = {
        {"hilbert", "--gamma", "3,2", "--format", "structured"},
        {"hilbert", "--gamma", "5", "--route", "all"},
        {"schur", "--partition", "3,1", "--format", "structured"},
        {"fmaj", "--n", "6", "--jobs", "3"},
        {"stats", "--n", "4", "--format", "structured"},
        {"verify", "--suite", "characters", "--n-max", "4"},
    };
    for (const auto& c : commands) {
        const auto a = run(c);
        const auto b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
