#include <doctest.h>

#include "invhilb/cli/class_data_io.hpp"
#include "invhilb/molien/class_data.hpp"
#include "invhilb/molien/molien.hpp"

using namespace invhilb;

namespace {

GroupClassData c2_sign()
{
    GroupClassData d;
    d.order = 2;
    d.classes = {{1, {{1, 1}}}, {1, {{2, 1}, {1, -1}}}};
    d.characters = {{1, 1}, {1, -1}};
    return d;
}

std::string data_file(const std::string& name) { return std::string(INVHILB_SOURCE_DIR) + "/data/" + name; }

} // namespace

TEST_CASE("symmetric group class data")
{
    for (int n = 1; n <= 5; ++n) {
        const auto data = symmetric_group_class_data(n);
        CHECK_NOTHROW(validate(data));
        CHECK(representation_dimension(data) == n);
        // The trivial character gives the Molien average for one copy.
        CHECK(schur_analogue_general(data, 0, 15) == expand(hilbert_single(n), 15));
        CHECK(hilbert_double_general(data, 15) == expand(hilbert_double_classsum(n), 15));
    }
}

TEST_CASE("C_2 acting by sign")
{
    const auto h = hilbert_double_general(c2_sign(), 12);
    for (int d = 0; d <= 12; ++d) {
        // Monomials x^a y^b with a + b = d survive exactly when d is even.
        CHECK(h[static_cast<std::size_t>(d)] == (d % 2 == 0 ? d + 1 : 0));
    }
}

TEST_CASE("validation names the broken invariant")
{
    auto d = c2_sign();
    d.classes[0].size = 2;
    CHECK_THROWS_WITH_AS(validate(d), "class sizes must sum to |G|", ClassDataError);

    d = c2_sign();
    d.order = 0;
    CHECK_THROWS_WITH_AS(validate(d), "group order must be positive", ClassDataError);

    d = c2_sign();
    d.characters[1][1] = 1;
    CHECK_THROWS_AS(validate(d), ClassDataError);

    d = c2_sign();
    d.characters.pop_back();
    CHECK_THROWS_WITH_AS(validate(d), "number of characters must equal number of classes", ClassDataError);

    d = c2_sign();
    d.classes[1].det_factors = {{1, 2}};
    CHECK_THROWS_WITH_AS(validate(d), "det degrees must equal dim W in every class", ClassDataError);

    d = c2_sign();
    d.classes[1].det_factors = {{1, 1}, {3, -1}, {2, 1}};
    CHECK_THROWS_WITH_AS(validate(d), "det factors must multiply to a polynomial", ClassDataError);
}

TEST_CASE("class data files")
{
    const auto s3 = cli::load_class_data(data_file("s3_class_data.json"));
    CHECK_NOTHROW(validate(s3));
    CHECK(hilbert_double_general(s3, 20) == expand(hilbert_double_classsum(3), 20));

    const auto c2 = cli::load_class_data(data_file("c2_sign.json"));
    CHECK(hilbert_double_general(c2, 8) == hilbert_double_general(c2_sign(), 8));

    CHECK_THROWS_AS(cli::load_class_data(data_file("missing.json")), cli::ClassDataParseError);
    CHECK_THROWS_AS(cli::parse_class_data("{"), cli::ClassDataParseError);
    CHECK_THROWS_AS(cli::parse_class_data(R"({"order": 2, "classes": []})"), cli::ClassDataParseError);
    CHECK_THROWS_AS(cli::parse_class_data(R"({"order": "x", "classes": [], "characters": []})"), cli::ClassDataParseError);
    const auto parsed = cli::parse_class_data(R"({"order": "2",
        // comments are allowed
        "classes": [{"size": 1, "det_factors": [[1, 1]]}, {"size": "1", "det_factors": [[2, 1], [1, -1]]}],
        "characters": [[1, "1"], ["2/2", "-1"]]})");
    CHECK(parsed.order == 2);
    CHECK(parsed.characters[1][0] == 1);
    CHECK_NOTHROW(validate(parsed));
}
