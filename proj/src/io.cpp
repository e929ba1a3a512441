#include "fqsim/io.hpp"

#include <sstream>

#include "fqsim/counting.hpp"
#include "fqsim/errors.hpp"

namespace fqsim {

namespace {

// j.at() throws nlohmann exceptions with library-speak messages; translate
// into ParseFailure naming the offending key.
const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseFailure(std::string("missing field \"") + key + "\"");
    }
    return j[key];
}

int require_int(const nlohmann::json& j, const char* key) {
    const auto& v = require(j, key);
    if (!v.is_number_integer()) {
        throw ParseFailure(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

std::vector<std::vector<Fe>> require_matrix(const nlohmann::json& j, const char* key,
                                            int expect_cols) {
    const auto& v = require(j, key);
    if (!v.is_array()) {
        throw ParseFailure(std::string("field \"") + key + "\" must be an array of rows");
    }
    std::vector<std::vector<Fe>> rows;
    for (const auto& r : v) {
        if (!r.is_array() || static_cast<int>(r.size()) != expect_cols) {
            throw ParseFailure(std::string("field \"") + key + "\" rows must have length " +
                               std::to_string(expect_cols));
        }
        std::vector<Fe> row;
        for (const auto& entry : r) {
            if (!entry.is_number_integer() || entry.get<long long>() < 0) {
                throw ParseFailure(std::string("field \"") + key +
                                   "\" entries must be nonnegative integers");
            }
            row.push_back(static_cast<Fe>(entry.get<long long>()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json matrix_to_json(const Matrix& M) {
    auto out = nlohmann::json::array();
    for (int i = 0; i < M.rows; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

std::string quote_csv(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

MapDocument map_from_json(const nlohmann::json& j) {
    const int q = require_int(j, "q");
    if (q < 2) throw ParseFailure("field \"q\" must be at least 2");
    Field F = Field::make(static_cast<std::uint64_t>(q));
    const int n = require_int(j, "n");
    if (n < 0) throw ParseFailure("field \"n\" must be nonnegative");
    auto basis = require_matrix(j, "domain_basis", n);
    auto images = require_matrix(j, "images", n);
    if (images.size() != basis.size()) {
        throw ParseFailure("\"images\" must have one row per \"domain_basis\" row");
    }
    for (const auto& rows : {basis, images}) {
        for (const auto& r : rows) {
            for (Fe x : r) {
                if (x >= F.q()) throw ParseFailure("entries must be field elements below q");
            }
        }
    }
    Matrix B = Matrix::from_rows(n, basis);
    Matrix M = Matrix::from_rows(n, images);
    PartialLinearMap T = make_partial_map(F, n, B, M);
    return MapDocument{F, T};
}

MapDocument map_from_json_text(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseFailure("input is not valid JSON");
    return map_from_json(j);
}

nlohmann::json map_to_json(const Field& F, const PartialLinearMap& T) {
    nlohmann::json j;
    j["q"] = F.q();
    j["n"] = T.ambient;
    j["domain_basis"] = matrix_to_json(T.domain.basis());
    j["images"] = matrix_to_json(T.action);
    return j;
}

nlohmann::json invariants_to_json(const Field& F, const PartialLinearMap& T) {
    ChainReport chain = subspace_chain(F, T);
    const Subspace& U = chain.subspaces.back();
    InvariantFactors factors = invariant_factors(F, operator_part(F, T));
    Partition lambda = defect_dimensions(F, T);

    nlohmann::json j;
    auto lam = nlohmann::json::array();
    for (int part : lambda) lam.push_back(part);
    j["lambda"] = std::move(lam);
    auto facs = nlohmann::json::array();
    for (const Poly& f : factors) facs.push_back(poly_to_string(f));
    j["invariant_factors"] = std::move(facs);
    j["max_invariant_subspace"] = matrix_to_json(U.basis());
    j["ell"] = chain.ell;
    auto dims = nlohmann::json::array();
    for (int d : chain.dims) dims.push_back(d);
    j["dims"] = std::move(dims);
    return j;
}

std::string invariants_to_text(const Field& F, const PartialLinearMap& T) {
    nlohmann::json j = invariants_to_json(F, T);
    std::ostringstream out;
    out << "lambda: (";
    const auto& lam = j["lambda"];
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) out << ",";
        out << lam[i].get<int>();
    }
    out << ")\n";
    out << "invariant factors:";
    if (j["invariant_factors"].empty()) {
        out << " (none)";
    } else {
        for (const auto& f : j["invariant_factors"]) out << " " << f.get<std::string>();
    }
    out << "\n";
    out << "ell: " << j["ell"].get<int>() << "\n";
    out << "chain dims:";
    for (const auto& d : j["dims"]) out << " " << d.get<int>();
    out << "\n";
    out << "max invariant subspace rows:";
    if (j["max_invariant_subspace"].empty()) out << " (zero space)";
    out << "\n";
    for (const auto& row : j["max_invariant_subspace"]) {
        out << " ";
        for (const auto& x : row) out << " " << x.get<int>();
        out << "\n";
    }
    return out.str();
}

std::string invariants_to_csv(const Field& F, const PartialLinearMap& T) {
    ChainReport chain = subspace_chain(F, T);
    InvariantFactors factors = invariant_factors(F, operator_part(F, T));
    Partition lambda = defect_dimensions(F, T);

    std::ostringstream out;
    out << "lambda,inv_factors,ell,dims\n";
    out << quote_csv(partition_to_string(lambda)) << ","
        << quote_csv(factors_to_string(factors)) << "," << chain.ell << ",";
    std::string dims;
    for (std::size_t i = 0; i < chain.dims.size(); ++i) {
        if (i) dims += ";";
        dims += std::to_string(chain.dims[i]);
    }
    out << quote_csv(dims) << "\n";
    return out.str();
}

std::vector<LabelRow> label_rows(const Field& F, int n) {
    std::vector<LabelRow> rows;
    for (SimilarityLabel& label : enumerate_labels(F, n)) {
        LabelRow row;
        row.k = n - partition_part(label.lambda, 1);
        row.d = chain_degree(label.factors);
        row.predicted = count_class(F, label.lambda, label.factors, n);
        row.label = std::move(label);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string labels_to_csv(const Field& F, int n) {
    std::ostringstream out;
    out << "lambda,inv_factors,k,d,predicted_size\n";
    for (const LabelRow& row : label_rows(F, n)) {
        out << quote_csv(partition_to_string(row.label.lambda)) << ","
            << quote_csv(factors_to_string(row.label.factors)) << "," << row.k << "," << row.d
            << "," << row.predicted.str() << "\n";
    }
    return out.str();
}

nlohmann::json labels_to_json(const Field& F, int n) {
    nlohmann::json j;
    j["q"] = F.q();
    j["n"] = n;
    auto rows = nlohmann::json::array();
    BigInt total = 0;
    for (const LabelRow& row : label_rows(F, n)) {
        nlohmann::json r;
        auto lam = nlohmann::json::array();
        for (int part : row.label.lambda) lam.push_back(part);
        r["lambda"] = std::move(lam);
        auto facs = nlohmann::json::array();
        for (const Poly& f : row.label.factors) facs.push_back(poly_to_string(f));
        r["inv_factors"] = std::move(facs);
        r["k"] = row.k;
        r["d"] = row.d;
        r["class_size"] = row.predicted.str();
        total += row.predicted;
        rows.push_back(std::move(r));
    }
    j["classes"] = rows.size();
    j["rows"] = std::move(rows);
    j["total_maps"] = total.str();
    return j;
}

std::string labels_to_text(const Field& F, int n) {
    std::ostringstream out;
    auto rows = label_rows(F, n);
    out << "similarity classes over F_" << F.q() << " ambient dim " << n << ": " << rows.size()
        << "\n";
    BigInt total = 0;
    for (const LabelRow& row : rows) {
        out << "  lambda=(" << partition_to_string(row.label.lambda) << ")";
        out << " factors=[" << factors_to_string(row.label.factors) << "]";
        out << " size=" << row.predicted.str() << "\n";
        total += row.predicted;
    }
    out << "total maps: " << total.str() << "\n";
    return out.str();
}

std::string census_to_csv(const CensusReport& rep) {
    std::ostringstream out;
    out << "lambda,inv_factors,k,d,predicted,observed,match\n";
    for (const CensusRow& row : rep.rows) {
        out << quote_csv(partition_to_string(row.label.lambda)) << ","
            << quote_csv(factors_to_string(row.label.factors)) << ","
            << rep.n - partition_part(row.label.lambda, 1) << ","
            << chain_degree(row.label.factors) << "," << row.predicted.str() << ","
            << row.observed.str() << "," << (row.predicted == row.observed ? "yes" : "no")
            << "\n";
    }
    return out.str();
}

nlohmann::json census_to_json(const CensusReport& rep) {
    nlohmann::json j;
    j["q"] = rep.q;
    j["n"] = rep.n;
    auto rows = nlohmann::json::array();
    for (const CensusRow& row : rep.rows) {
        nlohmann::json r;
        auto lam = nlohmann::json::array();
        for (int part : row.label.lambda) lam.push_back(part);
        r["lambda"] = std::move(lam);
        auto facs = nlohmann::json::array();
        for (const Poly& f : row.label.factors) facs.push_back(poly_to_string(f));
        r["inv_factors"] = std::move(facs);
        r["k"] = rep.n - partition_part(row.label.lambda, 1);
        r["d"] = chain_degree(row.label.factors);
        r["predicted"] = row.predicted.str();
        r["observed"] = row.observed.str();
        r["match"] = (row.predicted == row.observed);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["total_enumerated"] = rep.total_observed.str();
    j["total_predicted"] = rep.total_predicted.str();
    j["clean"] = rep.clean();
    return j;
}

std::string census_to_text(const CensusReport& rep) {
    std::ostringstream out;
    out << "census over F_" << rep.q << " ambient dim " << rep.n << "\n";
    for (const CensusRow& row : rep.rows) {
        out << "  lambda=(" << partition_to_string(row.label.lambda) << ") factors=["
            << factors_to_string(row.label.factors) << "] predicted=" << row.predicted.str()
            << " observed=" << row.observed.str()
            << (row.predicted == row.observed ? "" : "  MISMATCH") << "\n";
    }
    out << "enumerated " << rep.total_observed.str() << " maps, formulas give "
        << rep.total_predicted.str() << "\n";
    out << (rep.clean() ? "all classes match\n" : "MISMATCHES PRESENT\n");
    return out.str();
}

}  // namespace fqsim
