#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fqsim/io.hpp"

using namespace fqsim;

namespace {

const char* kShiftMap =
    R"({"q":2,"n":3,"domain_basis":[[1,0,0],[0,1,0]],"images":[[0,1,0],[0,0,1]]})";

}  // namespace

TEST_CASE("map documents parse and canonicalize") {
    MapDocument doc = map_from_json_text(kShiftMap);
    CHECK(doc.field.q() == 2);
    CHECK(doc.map.ambient == 3);
    CHECK(doc.map.domain.dim() == 2);

    // a non-canonical basis arrives at the same canonical map
    MapDocument doc2 = map_from_json_text(
        R"({"q":2,"n":3,"domain_basis":[[1,1,0],[0,1,0]],"images":[[0,1,1],[0,0,1]]})");
    CHECK(doc.map == doc2.map);

    // round trip through the wire form
    nlohmann::json wire = map_to_json(doc.field, doc.map);
    CHECK(map_from_json(wire).map == doc.map);
}

TEST_CASE("map document rejection paths") {
    CHECK_THROWS_AS(map_from_json_text("not json"), ParseFailure);
    CHECK_THROWS_AS(map_from_json_text(R"({"n":3})"), ParseFailure);
    CHECK_THROWS_AS(map_from_json_text(R"({"q":2,"n":3,"domain_basis":[[1,0]],"images":[[1,0]]})"),
                    ParseFailure);  // rows of wrong length
    CHECK_THROWS_AS(
        map_from_json_text(R"({"q":2,"n":2,"domain_basis":[[1,0]],"images":[[1,0],[0,1]]})"),
        ParseFailure);  // row count mismatch
    CHECK_THROWS_AS(
        map_from_json_text(R"({"q":2,"n":2,"domain_basis":[[5,0]],"images":[[1,0]]})"),
        ParseFailure);  // entry out of range
    CHECK_THROWS_AS(map_from_json_text(R"({"q":6,"n":2,"domain_basis":[],"images":[]})"),
                    NotAPrimePower);
    CHECK_THROWS_AS(
        map_from_json_text(R"({"q":2,"n":2,"domain_basis":[[1,0],[1,0]],"images":[[1,0],[0,1]]})"),
        InvalidMap);  // dependent domain rows
}

TEST_CASE("invariants render in all three formats") {
    MapDocument doc = map_from_json_text(kShiftMap);
    nlohmann::json j = invariants_to_json(doc.field, doc.map);
    CHECK(j["lambda"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["invariant_factors"].empty());
    CHECK(j["ell"] == 3);
    CHECK(j["dims"] == nlohmann::json::array({3, 2, 1, 0}));
    CHECK(j["max_invariant_subspace"].empty());

    std::string text = invariants_to_text(doc.field, doc.map);
    CHECK(text.find("lambda: (1,1,1)") != std::string::npos);
    CHECK(text.find("ell: 3") != std::string::npos);

    std::string csv = invariants_to_csv(doc.field, doc.map);
    CHECK(csv.find("lambda,inv_factors,ell,dims") == 0);
    CHECK(csv.find("\"1,1,1\"") != std::string::npos);
}

TEST_CASE("operator part appears in the invariants document") {
    MapDocument doc = map_from_json_text(
        R"({"q":2,"n":2,"domain_basis":[[1,0]],"images":[[1,0]]})");
    nlohmann::json j = invariants_to_json(doc.field, doc.map);
    CHECK(j["lambda"] == nlohmann::json::array({1}));
    CHECK(j["invariant_factors"] == nlohmann::json::array({"x+1"}));
    CHECK(j["max_invariant_subspace"] == nlohmann::json::array({{1, 0}}));
}

TEST_CASE("label rows cover the space") {
    Field F = Field::make(2);
    auto rows = label_rows(F, 2);
    CHECK(rows.size() == 10);
    BigInt total = 0;
    for (const LabelRow& row : rows) {
        CHECK(row.k == 2 - partition_part(row.label.lambda, 1));
        CHECK(row.d == chain_degree(row.label.factors));
        total += row.predicted;
    }
    CHECK(total == 29);

    std::string csv = labels_to_csv(F, 2);
    CHECK(csv.find("lambda,inv_factors,k,d,predicted_size") == 0);
    // one header plus ten rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);

    nlohmann::json j = labels_to_json(F, 2);
    CHECK(j["classes"] == 10);
    CHECK(j["total_maps"] == "29");
}

TEST_CASE("census renderers") {
    Field F = Field::make(2);
    CensusReport rep = run_census(F, 2);
    std::string csv = census_to_csv(rep);
    CHECK(csv.find("lambda,inv_factors,k,d,predicted,observed,match") == 0);
    CHECK(csv.find(",no") == std::string::npos);  // no mismatches

    nlohmann::json j = census_to_json(rep);
    CHECK(j["clean"] == true);
    CHECK(j["total_enumerated"] == "29");
    CHECK(j["rows"].size() == 10);
    for (const auto& row : j["rows"]) CHECK(row["match"] == true);

    std::string text = census_to_text(rep);
    CHECK(text.find("all classes match") != std::string::npos);
    CHECK(text.find("MISMATCH") == std::string::npos);
}
