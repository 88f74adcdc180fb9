#include <doctest.h>

#include "magnetite/document.hpp"
#include "magnetite/errors.hpp"

using namespace magnetite;
using cli::MonoidDocument;
using cli::parse_document;
using cli::serialize_document;

TEST_SUITE("document") {

TEST_CASE("parses the worked examples") {
    MonoidDocument ex4 = parse_document(
        R"({"ambient":{"rank":1,"torsion":[2]},"generators":[[0,1],[2,0],[3,1]]})");
    CHECK(ex4.group == AmbientGroup(1, {2}));
    REQUIRE(ex4.generators.size() == 3);
    CHECK(ex4.generators[1] == GroupElement::from_flat(ex4.group, {2, 0}));

    MonoidDocument n = parse_document(
        R"({"ambient":{"rank":1,"torsion":[]},"generators":[[1]]})");
    CHECK(n.group == AmbientGroup(1, {}));
    CHECK(n.generators.size() == 1);

    MonoidDocument zero = parse_document(
        R"({"ambient":{"rank":0,"torsion":[]},"generators":[]})");
    CHECK(zero.group.is_zero());
    CHECK(zero.generators.empty());
    CHECK(zero.to_monoid().gens().empty());
}

TEST_CASE("torsion residues reduce on load") {
    MonoidDocument doc = parse_document(
        R"({"ambient":{"rank":0,"torsion":[3]},"generators":[[5]]})");
    CHECK(doc.generators[0] == GroupElement::from_flat(doc.group, {2}));
}

TEST_CASE("schema diagnostics") {
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"ambient":{"rank":1,"torsion":[]},"generators":[[1,2]]})"),
        doctest::Contains("generators[0]"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"ambient":{"rank":1,"torsion":[1]},"generators":[]})"),
        doctest::Contains("torsion"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"ambient":{"rank":-1,"torsion":[]},"generators":[]})"),
        doctest::Contains("rank"), ParseError);
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"ambient":{"rank":0},"extra":1,"generators":[]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_document(R"({"ambient":{"rank":0,"torsion":[]},"generators":[[0.5]]})"),
        ParseError);
}

TEST_CASE("round trip is identity and byte-stable") {
    const std::string original =
        R"({"name":"ex4","generators":[[0,1],[2,0],[3,1]],"ambient":{"torsion":[2],"rank":1}})";
    MonoidDocument doc = parse_document(original);
    std::string canonical = serialize_document(doc);
    MonoidDocument again = parse_document(canonical);
    CHECK(again.group == doc.group);
    CHECK(again.generators == doc.generators);
    CHECK(again.name == doc.name);
    CHECK(serialize_document(again) == canonical);
    CHECK(canonical.back() == '\n');
    CHECK(canonical.find('\r') == std::string::npos);
    CHECK(canonical.find(" \n") == std::string::npos);
}

TEST_CASE("document_from a monoid") {
    AmbientGroup g(1, {2});
    FgMonoid m(g, {GroupElement::from_flat(g, {0, 1}),
                   GroupElement::from_flat(g, {2, 0})});
    MonoidDocument doc = cli::document_from(m, "demo");
    std::string bytes = serialize_document(doc);
    MonoidDocument back = parse_document(bytes);
    CHECK(back.to_monoid() == m);
    CHECK(back.name == "demo");
}

}  // TEST_SUITE
