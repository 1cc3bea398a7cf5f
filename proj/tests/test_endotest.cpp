#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "endoscope/endotest.hpp"

using namespace endoscope;

namespace {
std::string fixture(const std::string& name) { return std::string(ENDOSCOPE_FIXTURE_DIR) + "/" + name; }
}  // namespace

TEST_CASE("table ingestion") {
    CharacterTableData s3 = ingest_table_file(fixture("s3.json"));
    CHECK(s3.group_name == "S3");
    CHECK(s3.group_order == 6);
    REQUIRE(s3.classes.size() == 3);
    REQUIRE(s3.characters.size() == 3);

    CHECK_THROWS_AS(ingest_table_file(fixture("bad_sum.json")), std::invalid_argument);
    CHECK_THROWS_AS(ingest_table_file(fixture("missing.json")), std::invalid_argument);

    SECTION("degree must match the identity value") {
        std::istringstream in(R"({"group":"x","order":"2",
            "classes":[{"name":"1A","element_order":1,"size":"1"},
                       {"name":"2A","element_order":2,"size":"1"}],
            "characters":[{"name":"a","degree":"2","values":[1,1]}]})");
        CHECK_THROWS_AS(ingest_table(in), std::invalid_argument);
    }
    SECTION("parse errors carry the origin") {
        std::istringstream in("{nonsense");
        try {
            ingest_table(in, "inline");
            FAIL("expected a parse error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("inline") != std::string::npos);
        }
    }
}

TEST_CASE("trivial source criterion on S_3") {
    CharacterTableData s3 = ingest_table_file(fixture("s3.json"));

    TorcharResult sign = torchar_check(s3, "1b", 3);
    CHECK(sign.verdict == TorcharVerdict::Endotrivial);

    TorcharResult std2 = torchar_check(s3, "2a", 3);
    CHECK(std2.verdict == TorcharVerdict::NotEndotrivial);
    CHECK(std2.witness_class == "3A");

    // at ell = 2 the sign character takes value -1 on 2A
    TorcharResult sign2 = torchar_check(s3, "1b", 2);
    CHECK(sign2.verdict == TorcharVerdict::NotEndotrivial);

    CHECK_THROWS_AS(torchar_check(s3, "1b", 5), std::invalid_argument);
    CHECK_THROWS_AS(torchar_check(s3, "zz", 3), std::invalid_argument);
}

TEST_CASE("landrock-scott constraints") {
    CharacterTableData s3 = ingest_table_file(fixture("s3.json"));
    CHECK(landrock_scott_check(s3, "1b", 3).empty());
    auto violations = landrock_scott_check(s3, "2a", 3);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].class_name == "3A");
    CHECK(violations[0].value == -1);
}

TEST_CASE("degree congruences") {
    CHECK(selfdual_congruence(1, 1000, 5));
    CHECK(selfdual_congruence(28, 378000, 3));  // |U_3(5)| has 3-part 27
    CHECK_FALSE(selfdual_congruence(84, Bigint(84) * 300 * 625, 5));

    CHECK(degree_pm1_check(26, 378000, 3));  // 26 = -1 mod 27
    CHECK(degree_pm1_check(28, 378000, 3));
    CHECK_FALSE(degree_pm1_check(84, Bigint(84) * 300 * 625, 5));
}

TEST_CASE("loewy length 4 necessary condition") {
    CharacterTableData s3 = ingest_table_file(fixture("s3.json"));
    // the 2-dimensional character: value -1 on 3A, degree 2 = -1 (mod 3)
    Loewy4Result pass = loewy4_check(s3, "2a", 3);
    CHECK(pass.passes);
    Loewy4Result triv = loewy4_check(s3, "1a", 3);
    CHECK_FALSE(triv.passes);
    CHECK(triv.witness_class == "3A");
    // degree 1 != -1 (mod 3), and the value on 3A is +1 anyway
    Loewy4Result sgn = loewy4_check(s3, "1b", 3);
    CHECK_FALSE(sgn.passes);
}

TEST_CASE("endotrivial verdicts force degree = 1 (mod ell)") {
    CharacterTableData s3 = ingest_table_file(fixture("s3.json"));
    for (const auto& chi : s3.characters) {
        if (torchar_check(s3, chi.name, 3).verdict != TorcharVerdict::Endotrivial) continue;
        CHECK(chi.degree % 3 == 1);
        CHECK(degree_pm1_check(chi.degree, s3.group_order, 3));
    }
}

TEST_CASE("torchar is monotone in the table") {
    // adding a class of order coprime to ell never changes the verdict
    std::istringstream small(R"({"group":"c6","order":"6",
        "classes":[{"name":"1A","element_order":1,"size":"1"},
                   {"name":"3A","element_order":3,"size":"2"},
                   {"name":"2A","element_order":2,"size":"3"}],
        "characters":[{"name":"chi","degree":"5","values":[5,1,null]}]})");
    std::istringstream larger(R"({"group":"c6x","order":"12",
        "classes":[{"name":"1A","element_order":1,"size":"1"},
                   {"name":"3A","element_order":3,"size":"2"},
                   {"name":"2A","element_order":2,"size":"3"},
                   {"name":"6A","element_order":6,"size":"6"}],
        "characters":[{"name":"chi","degree":"5","values":[5,1,null,null]}]})");
    CharacterTableData a = ingest_table(small);
    CharacterTableData b = ingest_table(larger);
    CHECK(torchar_check(a, "chi", 3).verdict == torchar_check(b, "chi", 3).verdict);
}

TEST_CASE("tautology: all-ones ell-classes are endotrivial") {
    std::istringstream in(R"({"group":"toy","order":"12",
        "classes":[{"name":"1A","element_order":1,"size":"1"},
                   {"name":"2A","element_order":2,"size":"3"},
                   {"name":"3A","element_order":3,"size":"2"},
                   {"name":"6A","element_order":6,"size":"6"}],
        "characters":[{"name":"chi","degree":"7","values":[7,null,1,null]}]})");
    CharacterTableData toy = ingest_table(in);
    CHECK(torchar_check(toy, "chi", 3).verdict == TorcharVerdict::Endotrivial);
    // missing value on an ell-class is an error, not a violation
    CHECK_THROWS_AS(torchar_check(toy, "chi", 2), std::invalid_argument);
}
