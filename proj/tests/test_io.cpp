#include "spinc/io.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <clocale>

using namespace spinc;

TEST_CASE("presentation files round-trip byte for byte")
{
    const std::string text = "{\n  \"name\": \"lens 5/2\",\n  \"matrix\": [[3, -1], [-1, 2]],\n  \"chern\": [1, 0]\n}\n";
    const auto f = io::parse_presentation(text);
    CHECK(f.name == std::optional<std::string>("lens 5/2"));
    CHECK(f.presentation.matrix == IntMatrix{{3, -1}, {-1, 2}});
    CHECK(io::serialize_presentation(f) == text);
    CHECK(io::parse_presentation(io::serialize_presentation(f)) == f);

    for (const auto& [name, p] : fixtures::corpus()) {
        const io::PresentationFile g{name, p};
        CHECK(io::parse_presentation(io::serialize_presentation(g)) == g);
        const io::PresentationFile anon{std::nullopt, p};
        CHECK(io::parse_presentation(io::serialize_presentation(anon)) == anon);
    }

    // Entries beyond 64 bits travel as strings.
    io::PresentationFile big{std::nullopt, {IntMatrix{{0}}, {Integer("-123456789012345678901234567890")}}};
    const auto s = io::serialize_presentation(big);
    CHECK(s.find("\"-123456789012345678901234567890\"") != std::string::npos);
    CHECK(io::parse_presentation(s) == big);
}

TEST_CASE("malformed files name the offending field")
{
    auto field_of = [](const std::string& text) {
        try {
            io::parse_presentation(text);
        } catch (const io::FormatError& e) {
            return e.field();
        }
        return std::string("<accepted>");
    };
    CHECK(field_of("[1, 2]") == "$");
    CHECK(field_of("{\"matrix\": [[2]], \"chern\": [0]") == "$");
    CHECK(field_of("{\"chern\": [0]}") == "matrix");
    CHECK(field_of("{\"matrix\": [[2]]}") == "chern");
    CHECK(field_of("{\"matrix\": [[2, 1]], \"chern\": [0]}") == "matrix[0]");
    CHECK(field_of("{\"matrix\": [[2.5]], \"chern\": [0]}") == "matrix[0][0]");
    CHECK(field_of("{\"matrix\": [[2]], \"chern\": [\"x\"]}") == "chern[0]");
    CHECK(field_of("{\"matrix\": [[2]], \"chern\": [0], \"extra\": 1}") == "extra");
    CHECK_THROWS_AS(io::parse_presentation("{\"matrix\": [[2]], \"chern\": [1]}"), PresentationError);
    CHECK(io::parse_presentation("{\"matrix\": [[3]]}", false).presentation.chern == int_vector({3}));
}

TEST_CASE("decimal formatting")
{
    CHECK(io::format_decimal(1.0) == "1.00000000000");
    CHECK(io::format_decimal(-0.0) == "0.00000000000");
    CHECK(io::format_decimal(0.0) == "0.00000000000");
    CHECK(io::format_decimal(1.4142135623730951) == "1.41421356237");
    CHECK(io::format_decimal(-2.5) == "-2.50000000000");
    CHECK(io::format_decimal(0.001) == "0.00100000000000");

    // The C locale setting must not leak into the output.
    const char* old = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) CHECK(io::format_decimal(0.5) == "0.500000000000");
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("report and verdict documents")
{
    const auto report = invariants_report(fixtures::pres(IntMatrix{{2}}, {0}));
    const auto j = io::to_json(report);
    CHECK(j["torsion_factors"] == io::Json::array({2}));
    CHECK(j["gauss"]["modulus"] == 4);
    CHECK(j["gauss"]["coeffs"] == io::Json::array({1, 1, 0, 0}));
    CHECK(j["gauss"]["exact"] == "1+ζ₄");
    CHECK(j["gauss"]["approx"]["display_only"] == true);
    CHECK(j["gauss"]["approx"]["re"] == "1.00000000000");
    CHECK(j["value_multiset"] == io::Json::array({"0", "1/4"}));

    // Field order is fixed.
    auto it = j.begin();
    CHECK(it.key() == "free_rank");
    CHECK(io::report_text(report).find("1+ζ₄") != std::string::npos);

    const auto a = analyse(fixtures::pres(IntMatrix{{0}}, {2})), b = analyse(fixtures::pres(IntMatrix{{0}}, {-2}));
    const auto v = yc_equivalent(a, b);
    const auto vj = io::to_json(v, a, b);
    CHECK(vj["verdict"] == "Equivalent");
    CHECK(vj["witness"]["verified"] == true);
    CHECK(vj["witness"]["free_map"] == io::Json::parse("[[-1]]"));
    CHECK(io::verdict_text(v, a, b).find("sign flip") != std::string::npos);

    const auto x = analyse(fixtures::pres(IntMatrix{{2}}, {0})), y = analyse(fixtures::pres(IntMatrix{{2}}, {2}));
    const auto n = io::to_json(yc_equivalent(x, y), x, y);
    CHECK(n["verdict"] == "Inequivalent");
    CHECK(n["reason"] == "gauss_sum");
}
