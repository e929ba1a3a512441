// fqsim: similarity invariants and exact class counts for linear maps
// defined on subspaces of F_q^n.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fqsim/io.hpp"

using namespace fqsim;

namespace {

// Re-tag library errors with the flag that carried the bad value, so the
// one-line diagnostic names something the user typed.
template <typename Fn>
auto with_flag(const char* flag, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw ParseFailure(std::string(flag) + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const char* flag, const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseFailure(std::string(flag) + ": \"" + token + "\" is not an integer");
        }
    }
    return out;
}

InvariantFactors parse_factor_list(const Field& F, const char* flag, const std::string& text) {
    InvariantFactors out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ';')) {
        if (token.empty()) continue;
        out.push_back(with_flag(flag, [&] { return poly_parse(F, token); }));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseFailure("--map: cannot open \"" + path + "\"");
        buf << in.rdbuf();
    }
    return buf.str();
}

std::uint64_t census_budget(const CLI::App* sub, std::uint64_t flag_value) {
    std::uint64_t budget = kDefaultBudget;
    if (const char* env = std::getenv("FQSIM_BUDGET")) {
        try {
            size_t used = 0;
            budget = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw ParseFailure(std::string("FQSIM_BUDGET: \"") + env + "\" is not an integer");
        }
    }
    if (sub->count("--budget")) budget = flag_value;
    return budget;
}

void emit_scalar(const std::string& format, const std::string& name, const QPoly* poly,
                 const BigInt* value) {
    if (format == "json") {
        nlohmann::json j;
        if (poly) j[name] = poly->to_string();
        if (value) j["value"] = value->str();
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << name << "\n\"" << (value ? value->str() : poly->to_string()) << "\"\n";
    } else {
        std::cout << (value ? value->str() : poly->to_string()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact similarity invariants and class counts over finite fields"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    };

    // invariants
    auto* inv_cmd = app.add_subcommand(
        "invariants", "defect partition and invariant factors of a map given as JSON");
    std::string map_path;
    inv_cmd->add_option("--map", map_path, "map JSON file, or - for stdin")->required();
    add_format(inv_cmd);

    // class-size
    auto* size_cmd =
        app.add_subcommand("class-size", "closed-form size of one similarity class");
    int cs_n = 0;
    std::uint64_t cs_q = 0;
    std::string cs_lambda, cs_factors;
    size_cmd->add_option("--n", cs_n, "ambient dimension")->required();
    size_cmd->add_option("--q", cs_q, "field order")->required();
    size_cmd->add_option("--lambda", cs_lambda, "defect partition, comma-joined; empty = ()");
    size_cmd->add_option("--inv-factors", cs_factors,
                         "invariant factors, semicolon-joined polynomials; empty = none");
    add_format(size_cmd);

    // labels
    auto* labels_cmd =
        app.add_subcommand("labels", "all similarity labels with predicted class sizes");
    int lb_n = 0;
    std::uint64_t lb_q = 0;
    labels_cmd->add_option("--n", lb_n, "ambient dimension")->required();
    labels_cmd->add_option("--q", lb_q, "field order")->required();
    add_format(labels_cmd);

    // census
    auto* census_cmd = app.add_subcommand(
        "census", "enumerate every map and compare bucket sizes to the formulas");
    int ce_n = 0;
    std::uint64_t ce_q = 0, ce_budget = kDefaultBudget;
    int ce_threads = 0;
    census_cmd->add_option("--n", ce_n, "ambient dimension")->required();
    census_cmd->add_option("--q", ce_q, "field order")->required();
    census_cmd->add_option("--budget", ce_budget, "max maps to enumerate");
    census_cmd->add_option("--threads", ce_threads, "worker count, 0 = hardware");
    add_format(census_cmd);

    // orbit-check
    auto* orbit_cmd = app.add_subcommand(
        "orbit-check", "verify conjugation orbits coincide with label buckets");
    int oc_n = 0;
    std::uint64_t oc_q = 0, oc_budget = kDefaultBudget;
    orbit_cmd->add_option("--n", oc_n, "ambient dimension")->required();
    orbit_cmd->add_option("--q", oc_q, "field order")->required();
    orbit_cmd->add_option("--budget", oc_budget, "max orbit work");
    add_format(orbit_cmd);

    // qbinom
    auto* qb_cmd = app.add_subcommand("qbinom", "Gaussian binomial [n,k]_q as a polynomial");
    int qb_n = 0, qb_k = 0;
    std::uint64_t qb_at = 0;
    qb_cmd->add_option("--n", qb_n)->required();
    qb_cmd->add_option("--k", qb_k)->required();
    auto* qb_at_opt = qb_cmd->add_option("--at", qb_at, "evaluate at this q");
    add_format(qb_cmd);

    // qmultinom
    auto* qm_cmd = app.add_subcommand("qmultinom", "Gaussian multinomial as a polynomial");
    int qm_n = 0;
    std::string qm_parts;
    std::uint64_t qm_at = 0;
    qm_cmd->add_option("--n", qm_n)->required();
    qm_cmd->add_option("--parts", qm_parts, "comma-joined parts summing to n")->required();
    auto* qm_at_opt = qm_cmd->add_option("--at", qm_at, "evaluate at this q");
    add_format(qm_cmd);

    // gamma
    auto* ga_cmd = app.add_subcommand("gamma", "|GL_k| as a polynomial in q");
    int ga_k = 0;
    std::uint64_t ga_at = 0;
    ga_cmd->add_option("--k", ga_k)->required();
    auto* ga_at_opt = ga_cmd->add_option("--at", ga_at, "evaluate at this q");
    add_format(ga_cmd);

    // verify-identities
    auto* ver_cmd = app.add_subcommand(
        "verify-identities", "exact polynomial identities for Durfee and box counts");
    int ver_max_n = 12, ver_max_box = 8;
    ver_cmd->add_option("--max-n", ver_max_n, "largest n for the Durfee identity")
        ->capture_default_str();
    ver_cmd->add_option("--max-box", ver_max_box, "largest box side")->capture_default_str();
    add_format(ver_cmd);

    // simple-count
    auto* sc_cmd = app.add_subcommand(
        "simple-count", "number of maps with a given defect partition and no invariant part");
    std::uint64_t sc_q = 0;
    std::string sc_lambda;
    int sc_n = -1, sc_k = -1;
    sc_cmd->add_option("--q", sc_q, "field order")->required();
    sc_cmd->add_option("--lambda", sc_lambda, "defect partition; ambient = its weight");
    sc_cmd->add_option("--n", sc_n, "ambient dimension (with --k: sum over all labels)");
    sc_cmd->add_option("--k", sc_k, "domain dimension (with --n)");
    add_format(sc_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*inv_cmd) {
            MapDocument doc = map_from_json_text(slurp(map_path));
            if (format == "json") {
                std::cout << invariants_to_json(doc.field, doc.map).dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << invariants_to_csv(doc.field, doc.map);
            } else {
                std::cout << invariants_to_text(doc.field, doc.map);
            }
            return 0;
        }

        if (*size_cmd) {
            Field F = with_flag("--q", [&] { return Field::make(cs_q); });
            Partition lambda = with_flag("--lambda", [&] { return partition_parse(cs_lambda); });
            InvariantFactors I = parse_factor_list(F, "--inv-factors", cs_factors);
            BigInt size = with_flag("--lambda/--inv-factors",
                                    [&] { return count_class(F, lambda, I, cs_n); });
            if (format == "json") {
                nlohmann::json j;
                j["q"] = cs_q;
                j["n"] = cs_n;
                j["lambda"] = cs_lambda;
                j["inv_factors"] = cs_factors;
                j["class_size"] = size.str();
                std::cout << j.dump() << "\n";
            } else if (format == "csv") {
                std::cout << "lambda,inv_factors,n,class_size\n\"" << cs_lambda << "\",\""
                          << cs_factors << "\"," << cs_n << "," << size.str() << "\n";
            } else {
                std::cout << size.str() << "\n";
            }
            return 0;
        }

        if (*labels_cmd) {
            Field F = with_flag("--q", [&] { return Field::make(lb_q); });
            if (lb_n < 0) throw ParseFailure("--n: must be nonnegative");
            if (format == "json") {
                std::cout << labels_to_json(F, lb_n).dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << labels_to_csv(F, lb_n);
            } else {
                std::cout << labels_to_text(F, lb_n);
            }
            return 0;
        }

        if (*census_cmd) {
            Field F = with_flag("--q", [&] { return Field::make(ce_q); });
            std::uint64_t budget = census_budget(census_cmd, ce_budget);
            CensusReport rep =
                with_flag("--n/--q", [&] { return run_census(F, ce_n, budget, ce_threads); });
            if (format == "json") {
                std::cout << census_to_json(rep).dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << census_to_csv(rep);
            } else {
                std::cout << census_to_text(rep);
            }
            return rep.clean() ? 0 : 1;
        }

        if (*orbit_cmd) {
            Field F = with_flag("--q", [&] { return Field::make(oc_q); });
            std::uint64_t budget = census_budget(orbit_cmd, oc_budget);
            bool ok = with_flag("--n/--q", [&] { return orbit_check(F, oc_n, budget); });
            BigInt maps = total_partial_maps(oc_n, oc_q);
            if (format == "json") {
                nlohmann::json j;
                j["q"] = oc_q;
                j["n"] = oc_n;
                j["maps"] = maps.str();
                j["passed"] = ok;
                std::cout << j.dump() << "\n";
            } else if (format == "csv") {
                std::cout << "n,q,maps,passed\n"
                          << oc_n << "," << oc_q << "," << maps.str() << ","
                          << (ok ? "yes" : "no") << "\n";
            } else {
                std::cout << "orbit check over F_" << oc_q << " ambient dim " << oc_n << ": "
                          << (ok ? "OK" : "FAIL") << " (" << maps.str() << " maps)\n";
            }
            return ok ? 0 : 1;
        }

        if (*qb_cmd) {
            QPoly poly = with_flag("--n/--k", [&] { return q_binomial(qb_n, qb_k); });
            if (qb_at_opt->count()) {
                BigInt v = poly.evaluate(BigInt(qb_at));
                emit_scalar(format, "qbinom", nullptr, &v);
            } else {
                emit_scalar(format, "qbinom", &poly, nullptr);
            }
            return 0;
        }

        if (*qm_cmd) {
            std::vector<int> parts = parse_int_list("--parts", qm_parts);
            QPoly poly =
                with_flag("--n/--parts", [&] { return q_multinomial(qm_n, parts); });
            if (qm_at_opt->count()) {
                BigInt v = poly.evaluate(BigInt(qm_at));
                emit_scalar(format, "qmultinom", nullptr, &v);
            } else {
                emit_scalar(format, "qmultinom", &poly, nullptr);
            }
            return 0;
        }

        if (*ga_cmd) {
            QPoly poly = with_flag("--k", [&] { return gamma_q(ga_k); });
            if (ga_at_opt->count()) {
                BigInt v = poly.evaluate(BigInt(ga_at));
                emit_scalar(format, "gamma", nullptr, &v);
            } else {
                emit_scalar(format, "gamma", &poly, nullptr);
            }
            return 0;
        }

        if (*ver_cmd) {
            if (ver_max_n < 1) throw ParseFailure("--max-n: must be at least 1");
            if (ver_max_box < 0) throw ParseFailure("--max-box: must be nonnegative");
            int durfee_cases = 0, durfee_fail = 0;
            for (int n = 1; n <= ver_max_n; ++n) {
                for (int m = 1; m <= n; ++m) {
                    ++durfee_cases;
                    if (!verify_durfee_identity(m, n)) ++durfee_fail;
                }
            }
            int box_cases = 0, box_fail = 0;
            for (int r = 0; r <= ver_max_box; ++r) {
                for (int s = 0; s <= ver_max_box; ++s) {
                    ++box_cases;
                    if (!verify_box_identity(r, s)) ++box_fail;
                }
            }
            bool ok = (durfee_fail == 0 && box_fail == 0);
            if (format == "json") {
                nlohmann::json j;
                j["durfee"] = {{"ok", durfee_fail == 0}, {"cases", durfee_cases}};
                j["box"] = {{"ok", box_fail == 0}, {"cases", box_cases}};
                std::cout << j.dump() << "\n";
            } else if (format == "csv") {
                std::cout << "identity,cases,failures\n"
                          << "durfee," << durfee_cases << "," << durfee_fail << "\n"
                          << "box," << box_cases << "," << box_fail << "\n";
            } else {
                std::cout << "durfee: " << (durfee_fail ? "FAIL" : "OK") << " (" << durfee_cases
                          << " cases), box: " << (box_fail ? "FAIL" : "OK") << " (" << box_cases
                          << " cases)\n";
            }
            return ok ? 0 : 1;
        }

        if (*sc_cmd) {
            with_flag("--q", [&] { return Field::make(sc_q); });
            BigInt v;
            if (sc_cmd->count("--lambda")) {
                if (sc_n >= 0 || sc_k >= 0)
                    throw ParseFailure("--lambda: give either --lambda or --n with --k");
                Partition lambda =
                    with_flag("--lambda", [&] { return partition_parse(sc_lambda); });
                v = with_flag("--lambda", [&] { return count_simple_class(lambda, sc_q); });
            } else {
                if (sc_n < 0 || sc_k < 0)
                    throw ParseFailure("--n: give either --lambda or --n with --k");
                v = with_flag("--n/--k",
                              [&] { return count_simple_fixed_domain(sc_n, sc_k, sc_q); });
            }
            emit_scalar(format, "simple_count", nullptr, &v);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: no subcommand\n";
    return 2;
}
