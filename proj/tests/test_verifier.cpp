#include <doctest.h>

#include <stdexcept>

#include "psq/verifier.hpp"
#include "test_util.hpp"

using namespace psq;

TEST_CASE("budget morphism certificates")
{
    for (const std::string& name : budget_morphism_names()) {
        const VerificationReport r = verify_morphism_claim(name);
        CHECK_MESSAGE(r.passed, r.json());
    }
    const VerificationReport r = verify_morphism_claim("h_5_5");
    CHECK(r.evidence["squares"] == nlohmann::ordered_json({"00", "11", "0000", "0101", "1010"}));
    CHECK(r.evidence["antisquares"] == nlohmann::ordered_json({"01", "10", "0011", "0110", "1100"}));
}

TEST_CASE("a damaged morphism fails its certificate with a counterexample")
{
    CatalogEntry e = catalog_lookup("h_5_5");
    std::vector<Word> images = e.morphism.images();
    std::vector<Symbol> bits = images[1].symbols();
    bits[17] ^= 1;
    images[1] = Word(bits, 2);
    e.morphism = Morphism(images, 2);
    const VerificationReport r = verify_morphism_claim(e);
    CHECK_FALSE(r.passed);
    REQUIRE(r.evidence.contains("failures"));
    CHECK(r.evidence["failures"].size() >= 1);
    CHECK(r.evidence["failures"][0].contains("counterexample"));
}

TEST_CASE("square and antisquare columns")
{
    const VerificationReport r = verify_proposition1(10);
    CHECK(r.passed);
    CHECK(r.parameters["a_max"] == 10);
}

TEST_CASE("corollaries")
{
    const VerificationReport r = verify_corollaries();
    CHECK_MESSAGE(r.passed, r.json());
    CHECK(r.evidence["combined9_search"]["max_length_found"] == 45);
    CHECK(r.evidence["combined10_exponent5_search"]["max_length_found"] == 57);
}

TEST_CASE("coded fixed points")
{
    CHECK(verify_automatic_word("thm4", 4000).passed);
    CHECK(verify_automatic_word("thm7", 4000).passed);
    CHECK_THROWS_AS(verify_automatic_word("h_5_5", 100), std::invalid_argument);
}

TEST_CASE("x h(x) avoidance for |x| >= 4 is finite")
{
    const VerificationReport d = verify_theorem9(Theorem9Mode::direct);
    CHECK(d.passed);
    CHECK(d.evidence["search"]["exhausted"] == true);
    const VerificationReport red = verify_theorem9(Theorem9Mode::reduction);
    CHECK(red.passed);
    CHECK(red.evidence["search"]["exhausted"] == true);
}

TEST_CASE("246-uniform morphism, fast stages")
{
    CHECK(verify_theorem10(Theorem10Stage::props).passed);
    CHECK(verify_theorem10(Theorem10Stage::antisquare_scan).passed);
    CHECK(parse_theorem10_stage("ochem44") == Theorem10Stage::ochem44);
    CHECK_THROWS_AS(parse_theorem10_stage("x"), std::invalid_argument);
}

TEST_CASE("claim dispatch and report shape")
{
    const VerificationReport r = verify_claim("thm2:h_9_2");
    CHECK(r.passed);
    CHECK(r.claim_id == "thm2:h_9_2");
    const auto j = nlohmann::ordered_json::parse(r.json());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"claim_id", "passed", "parameters", "evidence"});
    CHECK(r.json() == verify_claim("thm2:h_9_2").json());
    CHECK_THROWS_AS(verify_claim("thm99"), std::invalid_argument);
    CHECK_THROWS_AS(verify_claim("thm2:nope"), std::invalid_argument);
}
