#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hopfstab/catalog.hpp"
#include "hopfstab/io.hpp"

using namespace hopfstab;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string subspace_doc(const std::string& entries) {
    return "{\"schema\":1,\"field\":{\"kind\":\"Q\"},\"kind\":\"subspace\","
           "\"ambient\":2,\"rows\":1,\"basis\":[" +
           entries + "]}";
}

}  // namespace

TEST_CASE("content hash matches known FNV-1a values") {
    CHECK(content_hash("") == "cbf29ce484222325");
    CHECK(content_hash("a") == "af63dc4c8601ec8c");
    CHECK(content_hash("foobar") == "85944171f73967e8");
}

TEST_CASE("emitted documents are stable against the committed golden files") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(emit_hopf(group_algebra(q, GroupTable::cyclic(2))) == slurp("kz2.hopf.json"));
    CHECK(emit_hopf(sweedler()) == slurp("sweedler.hopf.json"));
    const StabCase c = catalog_stab_cases()[1];
    CHECK(emit_comodalg(c.k) == slurp("sweedler-coideal.comodalg.json"));
    CHECK(emit_module(c.k.alg.field, c.k.alg.dim, c.w) ==
          slurp("sweedler-coideal-trivial.module.json"));
    CHECK(emit_modalg(catalog_smash_cases()[1].r) == slurp("dual-over-kz2.modalg.json"));
}

TEST_CASE("parse then emit is the identity on every catalog Hopf algebra") {
    for (const auto& nh : catalog_hopfs()) {
        std::string doc = emit_hopf(nh.hopf);
        CHECK(emit_hopf(parse_hopf(doc)) == doc);
        CHECK(document_kind(doc) == "hopf");
    }
}

TEST_CASE("non-canonical scalars are rejected with the entry position") {
    std::string doc = subspace_doc("[0,0,\"3/6\"]");
    CHECK_THROWS_WITH_AS(parse_subspace(doc),
                         doctest::Contains("basis entry 0"), ParseError);
    CHECK_THROWS_AS(parse_subspace(subspace_doc("[0,0,\"1/1\"]")), ParseError);
    CHECK_THROWS_AS(parse_subspace(subspace_doc("[0,0,\"-0\"]")), ParseError);
}

TEST_CASE("truncated entries name the missing component") {
    CHECK_THROWS_WITH_AS(parse_subspace(subspace_doc("[0,0]")),
                         doctest::Contains("missing component 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_subspace(subspace_doc("[0]")),
                         doctest::Contains("missing component 1"), ParseError);
}

TEST_CASE("strict validation rejects malformed documents") {
    CHECK_THROWS_AS(parse_subspace(subspace_doc("[0,5,\"1\"]")), ParseError);  // out of range
    CHECK_THROWS_AS(parse_subspace(subspace_doc("[0,0,\"1\"],[0,0,\"1\"]")),
                    ParseError);  // duplicate index
    CHECK_THROWS_AS(parse_subspace(subspace_doc("[0,0,\"0\"]")), ParseError);  // explicit zero
    CHECK_THROWS_AS(parse_subspace("{\"schema\":2,\"field\":{\"kind\":\"Q\"},"
                                   "\"kind\":\"subspace\",\"ambient\":2,\"rows\":0,\"basis\":[]}"),
                    ParseError);  // unknown schema version
    CHECK_THROWS_AS(parse_subspace("{\"schema\":1,\"field\":{\"kind\":\"Q\"},"
                                   "\"kind\":\"subspace\",\"ambient\":2,\"rows\":0,\"basis\":[],"
                                   "\"extra\":0}"),
                    ParseError);  // unknown key
    CHECK_THROWS_AS(parse_subspace(slurp("kz2.hopf.json")), ParseError);  // wrong kind
    CHECK_THROWS_AS(parse_hopf("{"), ParseError);  // not JSON
}

TEST_CASE("dependent rows are rejected, independent ones round trip") {
    FieldSpec q = FieldSpec::rationals();
    std::string doc = slurp("sweedler-x.subspace.json");
    Subspace s = parse_subspace(doc);
    CHECK(s.dim() == 2);
    CHECK(emit_subspace(s) == doc);
    CHECK_THROWS_AS(
        parse_subspace("{\"schema\":1,\"field\":{\"kind\":\"Q\"},\"kind\":\"subspace\","
                       "\"ambient\":2,\"rows\":2,\"basis\":[[0,0,\"1\"],[1,0,\"2\"]]}"),
        ParseError);
}

TEST_CASE("stabilizer documents carry verifiable provenance") {
    const StabCase c = catalog_stab_cases()[1];
    StabSpace st = stab_space(c.k, c.u, c.w);
    std::map<std::string, std::string> prov{{"comodalg", content_hash(emit_comodalg(c.k))}};
    std::string doc = emit_stabilizer(st, prov);

    std::map<std::string, std::string> back;
    StabSpace rt = parse_stabilizer(doc, &back);
    CHECK(rt.basis == st.basis);
    CHECK(rt.chirality == st.chirality);
    CHECK(back == prov);
    CHECK(emit_stabilizer(rt, back) == doc);

    CHECK_NOTHROW(check_stab_provenance(back, prov));
    std::map<std::string, std::string> actual{{"comodalg", "0000000000000000"}};
    CHECK_THROWS_AS(check_stab_provenance(back, actual), ParseError);
}

TEST_CASE("reports round trip with every verdict") {
    Report r{"sample"};
    r.add_verdict("a", Verdict::Pass);
    r.add_verdict("b", Verdict::Fail, "at (1,2)");
    r.add_verdict("c", Verdict::Undecided);
    r.add_verdict("d", Verdict::HypothesisUnmet, "no certificate");
    std::string doc = emit_report(r);
    Report rt = parse_report(doc);
    CHECK(emit_report(rt) == doc);
    CHECK(rt.items[1].verdict == Verdict::Fail);
    CHECK(rt.items[3].witness == "no certificate");
    CHECK(document_kind(doc) == "report");
}

TEST_CASE("prime field documents keep their modulus") {
    FieldSpec f7 = FieldSpec::prime(7);
    HopfData t9 = taft(3, f7, Scalar(f7, 2));
    std::string doc = emit_hopf(t9);
    HopfData back = parse_hopf(doc);
    CHECK(back.field() == f7);
    CHECK(back.alg.mult == t9.alg.mult);
    CHECK(emit_hopf(back) == doc);
}
