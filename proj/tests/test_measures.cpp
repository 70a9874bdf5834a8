#include "tanpick/errors.h"
#include "tanpick/measures.h"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tanpick;

TEST_CASE("atom_location") {
    CHECK(atom_location(1) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(atom_location(2) == doctest::Approx(2.0 / (3.0 * std::numbers::pi)).epsilon(1e-15));
    for (std::int64_t k : {1, 7, 1000, 123456}) CHECK(atom_location(-k) == -atom_location(k));
    CHECK_THROWS_AS(atom_location(0), DomainError);
}

TEST_CASE("build_m with one term") {
    const DiscreteMeasure m = build_m({1, false});
    REQUIRE(m.size() == 2);
    CHECK(m.symmetric());
    const double c = 2.0 / std::numbers::pi;
    CHECK(m.atoms()[0].location == doctest::Approx(-c));
    CHECK(m.atoms()[1].location == doctest::Approx(c));
    CHECK(m.atoms()[0].mass == doctest::Approx(c * c / (1.0 + c * c)));
    CHECK(m.atoms()[1].mass == doctest::Approx(0.2884).epsilon(1e-4));
}

TEST_CASE("build_m total mass approaches tanh(1)") {
    const double target = std::tanh(1.0);
    const DiscreteMeasure corrected = build_m({10'000, true});
    CHECK(std::abs(corrected.total_mass() - target) < 1e-8);

    double previous_error = INFINITY;
    for (std::int64_t n : {1000, 10'000, 100'000}) {
        const double err = target - build_m({n, false}).total_mass();
        CAPTURE(n);
        CHECK(err > 0.0);
        // Leading term of the tail is 2 / (pi^2 N).
        CHECK(err == doctest::Approx(2.0 / (std::numbers::pi * std::numbers::pi * n)).epsilon(1e-2));
        CHECK(previous_error / err > 9.0);
        previous_error = err;
    }
}

TEST_CASE("property: total mass increases with N and stays below tanh(1)") {
    double previous = 0.0;
    for (std::int64_t n = 1; n <= 4096; n *= 2) {
        const double mass = build_m({n, false}).total_mass();
        CHECK(mass > previous);
        CHECK(mass < std::tanh(1.0));
        previous = mass;
    }
}

TEST_CASE("build_M has unit masses and integrates min(1, x^2) to 1") {
    const DiscreteMeasure big_m = build_M({50, false});
    CHECK(big_m.size() == 100);
    for (const Atom& atom : big_m.atoms()) CHECK(atom.mass == 1.0);
    // 2 \sum_k c_k^2 = (8 / pi^2) \sum_k 1/(2k-1)^2 = 1; every |c_k| < 1.
    CHECK(levy_integrability_check(build_M({10'000, true})) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(levy_integrability_check(build_M({10'000, false})) < 1.0);
    CHECK_THROWS_AS(levy_integrability_check(DiscreteMeasure({{0.0, 1.0}})), DomainError);
}

TEST_CASE("tail correction toggle keeps the atoms") {
    const DiscreteMeasure m = build_m({100, true});
    const DiscreteMeasure raw = m.with_tail_correction(false);
    CHECK(m.tail_corrected());
    CHECK_FALSE(raw.tail_corrected());
    CHECK(raw.size() == m.size());
    CHECK(raw.total_mass() < m.total_mass());
    CHECK(raw.first_omitted_location() == doctest::Approx(atom_location(101)));
}

TEST_CASE("DiscreteMeasure validation") {
    CHECK_THROWS_AS(DiscreteMeasure({{1.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(DiscreteMeasure({{1.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(DiscreteMeasure({{NAN, 1.0}}), DomainError);
    CHECK_THROWS_AS(DiscreteMeasure({{1.0, 1.0}, {1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(DiscreteMeasure({{1.0, 1.0}, {-1.0, 2.0}}, true), DomainError);
    CHECK_NOTHROW(DiscreteMeasure({{1.0, 1.0}, {-1.0, 1.0}}, true));
    CHECK_THROWS_AS(build_m({0, true}), DomainError);

    const DiscreteMeasure sorted({{3.0, 1.0}, {-2.0, 1.0}, {0.5, 1.0}});
    CHECK(sorted.atoms()[0].location == -2.0);
    CHECK(sorted.atoms()[2].location == 3.0);
    CHECK(sorted.distance_to_atoms(0.4, 0.0) == doctest::Approx(0.1));
    CHECK(DiscreteMeasure().distance_to_atoms(0.0, 0.0) == INFINITY);
}

TEST_CASE("CSV and JSON output") {
    const DiscreteMeasure m = build_m({2, false});
    const std::string csv = to_csv(m);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "location,mass");
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stod(line.substr(0, comma)) == m.atoms()[rows].location);
        CHECK(std::stod(line.substr(comma + 1)) == m.atoms()[rows].mass);
        ++rows;
    }
    CHECK(rows == 4);

    const auto json = nlohmann::json::parse(to_json(m));
    REQUIRE(json.size() == 4);
    CHECK(json[3]["location"].get<double>() == m.atoms()[3].location);
    CHECK(json[3]["mass"].get<double>() == m.atoms()[3].mass);
}
