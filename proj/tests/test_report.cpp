#include <doctest.h>

#include "delpezzo/report.hpp"

using namespace delpezzo;

TEST_CASE("class rendering uses multiplicity notation") {
    Surface s1(1);
    CHECK(render_class(DivisorClass(s1, 4, {2, 2, 2, 1, 1, 1, 1, 1})) ==
          "4H - 2Ei - 2Ej - 2Ek - El - Em - En - Ep - Eq");
    Surface s5(5);
    CHECK(render_class(DivisorClass(s5, 0, {0, 0, 0, -1})) == "Ei");
    CHECK(render_class(DivisorClass::hyperplane(s5)) == "H");
    CHECK(render_class(DivisorClass::zero(s5)) == "0");
    CHECK(render_class(canonical_class(s5)) == "-3H + Ei + Ej + Ek + El");
    CHECK(render_class_indexed(DivisorClass(s5, 1, {1, -1, 0, 0})) == "H - E1 + E2");
}

TEST_CASE("rational rendering is exact") {
    CHECK(render_rational(Rat(1, 2)) == "1/2");
    CHECK(render_rational(Rat(-3, 4)) == "-3/4");
    CHECK(render_rational(Rat(7)) == "7");
    CHECK(render_rational(Rat(0)) == "0");
}

TEST_CASE("report rows are ordered and complete") {
    auto doc = build_report({3});
    CHECK(doc.tool_version == kToolVersion);
    // degree 3: m = 1..6 with 1,1,2,2,3,5 feasible n values
    CHECK(doc.rows.size() == 14);
    for (size_t i = 1; i < doc.rows.size(); ++i) {
        const auto& prev = doc.rows[i - 1];
        const auto& cur = doc.rows[i];
        CHECK((prev.m < cur.m || (prev.m == cur.m && prev.n < cur.n)));
    }
    for (const auto& row : doc.rows) {
        CHECK((row.forms.empty()) == (row.tag.kind == TagKind::NoCurve));
        CHECK(row.family_count == Int(row.forms.size()));
    }
}

TEST_CASE("degree 5 report flags exactly the two documented notes") {
    auto doc = build_report({5});
    REQUIRE(doc.discrepancy_notes.size() == 2);
    CHECK(doc.discrepancy_notes[0].find("m=10 n=16") != std::string::npos);
    CHECK(doc.discrepancy_notes[1].find("m=10 n=18") != std::string::npos);
    auto doc13 = build_report({1, 3});
    CHECK(doc13.discrepancy_notes.empty());
}

TEST_CASE("json round trip") {
    auto doc = build_report({4});
    auto text = render_json(doc);
    auto parsed = parse_json(text);
    CHECK(parsed == doc);
    CHECK(render_json(parsed) == text);
}

TEST_CASE("deterministic output") {
    auto a = build_report({2, 3});
    auto b = build_report({3, 2});
    CHECK(render_json(a) == render_json(b));
    CHECK(render_csv(a) == render_csv(b));
    CHECK(render_markdown(a) == render_markdown(b));
}

TEST_CASE("csv has a header and one line per row") {
    auto doc = build_report({1});
    auto csv = render_csv(doc);
    size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == doc.rows.size() + 1);
    CHECK(csv.rfind("degree,m,n,family_count,tag,", 0) == 0);
}

TEST_CASE("report covers only degrees 1..5") {
    CHECK_THROWS_AS(build_report({6}), std::domain_error);
    CHECK_THROWS_AS(build_report({0}), std::domain_error);
}

TEST_CASE("empty cell renders without forms") {
    auto doc = build_report({5});
    bool seen = false;
    for (const auto& row : doc.rows) {
        if (row.m == 10 && row.n == 10) {
            seen = true;
            CHECK(row.tag.kind == TagKind::NoCurve);
            CHECK(row.forms.empty());
            CHECK(!row.verdict.has_value());
        }
    }
    CHECK(seen);
}
