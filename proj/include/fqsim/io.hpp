#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fqsim/census.hpp"

namespace fqsim {

// A map plus the field it lives over, as read from the JSON wire form:
//   {"q": 2, "n": 3, "domain_basis": [[...], ...], "images": [[...], ...]}
// The domain basis is re-canonicalized to RREF on input and the images
// are transformed consistently.
struct MapDocument {
    Field field;
    PartialLinearMap map;
};

MapDocument map_from_json(const nlohmann::json& j);
MapDocument map_from_json_text(std::string_view text);
nlohmann::json map_to_json(const Field& F, const PartialLinearMap& T);

// {"lambda": [...], "invariant_factors": ["..."],
//  "max_invariant_subspace": [[...]], "ell": ..., "dims": [...]}
nlohmann::json invariants_to_json(const Field& F, const PartialLinearMap& T);
std::string invariants_to_text(const Field& F, const PartialLinearMap& T);
std::string invariants_to_csv(const Field& F, const PartialLinearMap& T);

struct LabelRow {
    SimilarityLabel label;
    int k = 0;  // domain dimension, n - lambda_1
    int d = 0;  // deg I
    BigInt predicted;
};

std::vector<LabelRow> label_rows(const Field& F, int n);

std::string labels_to_csv(const Field& F, int n);
nlohmann::json labels_to_json(const Field& F, int n);
std::string labels_to_text(const Field& F, int n);

std::string census_to_csv(const CensusReport& rep);
nlohmann::json census_to_json(const CensusReport& rep);
std::string census_to_text(const CensusReport& rep);

}  // namespace fqsim
