#include <doctest.h>

#include "ellidh/error.hpp"
#include "ellidh/jobs.hpp"

using namespace ellidh;

namespace {

Json fixture_job(const std::string& task, int k) {
    return {{"field", {{"p", 5}}}, {"curve", {{"s", 1}, {"t", 1}}}, {"eval_set", "all_but_O"}, {"k", k},
            {"task", task}};
}

ErrorCode parse_error(const Json& j) {
    try {
        parse_config(j);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("config validation") {
    Json j = fixture_job("covering-radius", 2);
    j.erase("task");
    CHECK(parse_error(j) == ErrorCode::InvalidConfig);
    CHECK(parse_error(fixture_job("plot", 2)) == ErrorCode::InvalidConfig);
    j = fixture_job("distance", 2);
    j["budget"] = 0;
    CHECK(parse_error(j) == ErrorCode::InvalidConfig);
    j = fixture_job("distance", 2);
    j["curve"] = {{"s", 0}, {"t", 0}};
    CHECK(parse_error(j) == ErrorCode::CurveSingular);
    CHECK(error_code_name(ErrorCode::CurveSingular) == "CURVE_SINGULAR");
    CHECK(exit_status(ErrorCode::CurveSingular) == 2);
    CHECK(exit_status(ErrorCode::BudgetExceeded) == 3);
    CHECK(exit_status(ErrorCode::HypothesisViolation) == 4);
    CHECK(exit_status(ErrorCode::InternalInvariant) == 5);
    j = fixture_job("distance", 2);
    j["field"] = {{"p", 9}};
    CHECK(parse_error(j) == ErrorCode::FieldInvalid);
}

TEST_CASE("covering radius carries theorem and bfs labels") {
    const Json r = run_job(parse_config(fixture_job("covering-radius", 2)));
    CHECK(r["covering_radius"] == 5);
    CHECK(r["guarantee"] == "bfs+theorem");
    const Json r6 = run_job(parse_config(fixture_job("covering-radius", 6)));
    CHECK(r6["covering_radius"] == 2);
    CHECK(r6["guarantee"] == "bfs");
}

TEST_CASE("reports are deterministic apart from timing") {
    for (const char* task : {"distance", "deep-holes", "conjecture-check", "syndrome-verify", "geometry"}) {
        const JobConfig cfg = parse_config(fixture_job(task, 3));
        CHECK(make_report(cfg, run_job(cfg), 0.0).dump() == make_report(cfg, run_job(cfg), 0.0).dump());
    }
    const JobConfig cfg = parse_config(fixture_job("distance", 3));
    const Json rep = make_report(cfg, run_job(cfg), 1.5);
    CHECK(rep["schema"] == "ellidh/1");
    CHECK(rep["config"] == cfg.raw);
}

TEST_CASE("conjecture check job reports the verdict as a finding") {
    const Json r = run_job(parse_config(fixture_job("conjecture-check", 5)));
    CHECK(r["constructed"] == 4);
    CHECK(r["deep_hole_cosets"] == 92);
    CHECK(r["verdict"] == "FAILS");
    CHECK(r["guarantee"] == "finding");
    CHECK(r["counterexample"].is_array());
}

TEST_CASE("deep-holes job verifies each family") {
    const Json r = run_job(parse_config(fixture_job("deep-holes", 3)));
    REQUIRE(r["families"].size() == 1);
    CHECK(r["families"][0]["verified_deep"] == true);
    CHECK(r["families"][0]["guarantee"] == "theorem");
    CHECK(r["total_word_count"] == 500);
    CHECK(r["pairwise_distinct"] == true);
}

TEST_CASE("sweep rows and per-row errors") {
    Json j = fixture_job("covering-radius", 2);
    j.erase("k");
    j["k_range"] = {2, 5};
    const auto rows = sweep(parse_config(j));
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.min_distance == 8 - row.k);
        CHECK(row.covering_radius == 7 - row.k);
        CHECK_FALSE(row.error.has_value());
    }
    CHECK(sweep_csv(rows).rfind("k,d,rho,deep_hole_cosets,error\n2,6,5,2880,\n", 0) == 0);

    j["k_range"] = {5, 4};
    CHECK(sweep(parse_config(j)).empty());

    j["k_range"] = {2, 3};
    j["budget"] = 3125;  // 5^5: too small for the k = 2 table only
    const auto limited = sweep(parse_config(j));
    CHECK(limited[0].error == std::optional<std::string>("BUDGET_EXCEEDED"));
    CHECK_FALSE(limited[1].error.has_value());
    CHECK(limited[1].covering_radius == 4);
}

TEST_CASE("rs-sanity job") {
    Json j{{"field", {{"p", 5}}}, {"task", "rs-sanity"}, {"rs", {{"D", {1, 2, 3, 4}}, {"k", 2}}}};
    const Json r = run_job(parse_config(j));
    REQUIRE(r["classes"].size() == 2);
    for (const auto& cls : r["classes"]) CHECK(cls["deep"] == true);
}

TEST_CASE("extension-field elements round-trip through JSON") {
    auto f = Field::make(3, 2);
    for (Elem e = 0; e < 9; ++e) CHECK(element_from_json(*f, element_to_json(*f, e)) == e);
    CHECK(element_to_json(*f, 3) == Json::array({0, 1}));
    CHECK(point_from_json(*f, "O").infinity);
    CHECK_THROWS_AS(element_from_json(*f, Json::array({1, 2, 0})), Error);
}
