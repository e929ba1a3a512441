#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fqsim/census.hpp"
#include "oracle_helpers.hpp"

using namespace fqsim;
using namespace fqsim::testing;

TEST_CASE("map enumeration visits everything exactly once") {
    Field F = Field::make(2);
    std::set<std::string> keys;
    BigInt count = 0;
    for_each_partial_map(F, 2, [&](const PartialLinearMap& T) {
        keys.insert(map_key(T));
        count += 1;
        CHECK(T.ambient == 2);
    });
    CHECK(count == 29);
    CHECK(keys.size() == 29);
    CHECK_THROWS_AS(for_each_partial_map(F, 9, [](const PartialLinearMap&) {}), TooLarge);
    // explicit budget
    CHECK_THROWS_AS(for_each_partial_map(F, 3, [](const PartialLinearMap&) {}, 100), TooLarge);
}

TEST_CASE("census of the plane over F_2, full frozen table") {
    Field F = Field::make(2);
    CensusReport rep = run_census(F, 2);
    CHECK(rep.clean());
    CHECK(rep.mismatches().empty());
    CHECK(rep.total_observed == 29);
    CHECK(rep.total_predicted == 29);
    REQUIRE(rep.rows.size() == 10);

    std::map<std::string, BigInt> table;
    for (const CensusRow& row : rep.rows) {
        table[label_key(row.label)] = row.observed;
        CHECK(row.observed == row.predicted);
    }
    CHECK(table.at("2|") == 1);
    CHECK(table.at("1,1|") == 6);
    CHECK(table.at("1|x") == 3);
    CHECK(table.at("1|x+1") == 3);
    CHECK(table.at("|x;x") == 1);
    CHECK(table.at("|x+1;x+1") == 1);
    CHECK(table.at("|x^2") == 3);
    CHECK(table.at("|x^2+1") == 3);
    CHECK(table.at("|x^2+x") == 6);
    CHECK(table.at("|x^2+x+1") == 2);
}

TEST_CASE("census agreement at larger sizes") {
    Field f2 = Field::make(2);
    CensusReport r32 = run_census(f2, 3);
    CHECK(r32.clean());
    CHECK(r32.total_observed == 1017);
    CHECK(r32.rows.size() == 27);

    Field f3 = Field::make(3);
    CensusReport r23 = run_census(f3, 2);
    CHECK(r23.clean());
    CHECK(r23.total_observed == 118);

    // extension field: same machinery over F_4
    Field f4 = Field::make(4);
    CensusReport r24 = run_census(f4, 2);
    CHECK(r24.clean());
    CHECK(r24.total_observed == 337);  // 1 + 5*16 + 256
    CHECK(r24.total_predicted == total_partial_maps(2, 4));
}

TEST_CASE("census is schedule independent") {
    Field F = Field::make(2);
    CensusReport a = run_census(F, 3, kDefaultBudget, 1);
    CensusReport b = run_census(F, 3, kDefaultBudget, 4);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].label == b.rows[i].label);
        CHECK(a.rows[i].observed == b.rows[i].observed);
        CHECK(a.rows[i].predicted == b.rows[i].predicted);
    }
    CHECK_THROWS_AS(run_census(F, 3, 100), TooLarge);
}

TEST_CASE("census rows are sorted and complete") {
    Field F = Field::make(3);
    CensusReport rep = run_census(F, 2);
    std::vector<std::string> keys;
    for (const CensusRow& row : rep.rows) keys.push_back(label_key(row.label));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    // every enumerated label appears even if its bucket were empty
    CHECK(rep.rows.size() == enumerate_labels(F, 2).size());
}

TEST_CASE("general linear group enumeration") {
    Field f2 = Field::make(2);
    CHECK(general_linear_group(f2, 0).size() == 1);  // the empty matrix
    CHECK(general_linear_group(f2, 1).size() == 1);
    CHECK(general_linear_group(f2, 2).size() == 6);
    CHECK(general_linear_group(f2, 3).size() == 168);
    Field f3 = Field::make(3);
    CHECK(general_linear_group(f3, 2).size() == 48);

    // generators generate: closure reproduces the group
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        Field F = Field::make(q);
        auto gens = gl_generators(F, n);
        std::set<std::string> seen = {matrix_key(Matrix::identity(n))};
        std::vector<Matrix> frontier = {Matrix::identity(n)};
        while (!frontier.empty()) {
            std::vector<Matrix> next;
            for (const Matrix& M : frontier) {
                for (const Matrix& g : gens) {
                    Matrix prod = mat_mul(F, M, g);
                    if (seen.insert(matrix_key(prod)).second) next.push_back(prod);
                }
            }
            frontier = std::move(next);
        }
        CAPTURE(q);
        CAPTURE(n);
        CHECK(seen.size() == general_linear_group(F, n).size());
    }
}

TEST_CASE("orbit growth by generators matches the full-group pass") {
    Field F = Field::make(2);
    for_each_partial_map(F, 2, [&](const PartialLinearMap& T) {
        CHECK(map_orbit(F, T, true) == map_orbit(F, T, false));
    });

    Matrix J(3, 3);
    J.at(0, 1) = 1;
    J.at(1, 2) = 1;
    CHECK(matrix_orbit(F, J, true) == matrix_orbit(F, J, false));
}

TEST_CASE("orbit check validates the invariant at small sizes") {
    Field f2 = Field::make(2);
    CHECK(orbit_check(f2, 1));
    CHECK(orbit_check(f2, 2));
    Field f3 = Field::make(3);
    CHECK(orbit_check(f3, 1));
    CHECK_THROWS_AS(orbit_check(f2, 5), TooLarge);
}

TEST_CASE("brute conjugacy class size in generator mode") {
    // gamma_2(4) = 20160 exceeds the full-enumeration threshold, so the
    // 4x4 nilpotent Jordan block exercises the closure path; its class
    // size is known exactly.
    Field F = Field::make(2);
    Matrix J(4, 4);
    J.at(0, 1) = 1;
    J.at(1, 2) = 1;
    J.at(2, 3) = 1;
    CHECK(brute_conjugacy_class_size(F, J) == 2520);
    CHECK(hall_class_size(F, {poly_parse(F, "x^4")}) == 2520);
}

TEST_CASE("brute subspace counters agree with library primitives") {
    Field F = Field::make(2);
    CHECK(brute_intersection_count(F, 4, 2, 1) == 6);
    CHECK(brute_flag_count(F, 3, {1, 1, 1}) == 21);
    CHECK(brute_flag_count(F, 4, {2, 2}) ==
          q_binomial(4, 2).evaluate(BigInt(2)));
}
