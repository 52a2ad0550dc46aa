#include <fatcantor.h>

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>

namespace {

using Json = nlohmann::json;

struct ParamsHandle {
    fc_params* p = nullptr;
    explicit ParamsHandle(int depth) { REQUIRE(fc_params_create(depth, &p) == FC_OK); }
    ~ParamsHandle() { fc_params_free(p); }
    ParamsHandle(const ParamsHandle&) = delete;
    ParamsHandle& operator=(const ParamsHandle&) = delete;
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    fc_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("create, inspect, and free a sequence") {
    ParamsHandle h(8);
    CHECK(fc_params_depth(h.p) == 8);

    char* w = nullptr;
    char* eps = nullptr;
    REQUIRE(fc_params_entry(h.p, 3, &w, &eps) == FC_OK);
    CHECK(take(w) == "13/96");
    CHECK(take(eps) == "1/256");

    // either output may be omitted
    w = nullptr;
    REQUIRE(fc_params_entry(h.p, 1, &w, nullptr) == FC_OK);
    CHECK(take(w) == "1");
}

TEST_CASE("argument errors set a readable message") {
    fc_params* p = nullptr;
    CHECK(fc_params_create(0, &p) != FC_OK);
    CHECK(p == nullptr);
    CHECK(std::strlen(fc_last_error()) > 0);

    ParamsHandle h(4);
    char* out = nullptr;
    CHECK(fc_params_entry(h.p, 5, &out, nullptr) != FC_OK);
    CHECK(out == nullptr);
    CHECK(fc_intervals_json(h.p, 0, &out) != FC_OK);
    CHECK(fc_params_entry(nullptr, 1, &out, nullptr) == FC_ERROR_ARGUMENT);
}

TEST_CASE("depth errors are distinguished from argument errors") {
    ParamsHandle h(4);
    char* out = nullptr;
    CHECK(fc_intervals_json(h.p, 5, &out) == FC_ERROR_DEPTH);
    CHECK(fc_plf_json(h.p, 3, &out) == FC_ERROR_DEPTH);
    CHECK(fc_plf_json(h.p, 2, &out) == FC_OK);
    take(out);
}

TEST_CASE("interval and gap documents") {
    ParamsHandle h(8);
    char* out = nullptr;
    REQUIRE(fc_intervals_json(h.p, 3, &out) == FC_OK);
    Json j = Json::parse(take(out));
    CHECK(j["level"] == 3);
    CHECK(j["members"].size() == 4);
    CHECK(j["measure"] == "13/24");

    REQUIRE(fc_gaps_json(h.p, 2, &out) == FC_OK);
    Json g = Json::parse(take(out));
    CHECK(g["gaps"].size() == 1);

    REQUIRE(fc_intervals_csv(h.p, 2, &out) == FC_OK);
    CHECK(take(out) == "lo,hi\n0,1/3\n2/3,1\n");
}

TEST_CASE("measure and eval documents") {
    ParamsHandle h(8);
    char* out = nullptr;
    REQUIRE(fc_measure_json(h.p, 6, &out) == FC_OK);
    Json m = Json::parse(take(out));
    CHECK(m["rows"].size() == 5);
    CHECK(m["rows"][0]["upper"] == "2/3");

    REQUIRE(fc_eval_json(h.p, "1/2", "1/64", 'f', &out) == FC_OK);
    Json e = Json::parse(take(out));
    CHECK(e["value"] == "1/6");
    CHECK(e["exact"] == true);

    REQUIRE(fc_eval_json(h.p, "0", nullptr, 'g', &out) == FC_OK);
    Json ge = Json::parse(take(out));
    CHECK(ge["value"] == "2/3");

    CHECK(fc_eval_json(h.p, "0.5", "1/64", 'f', &out) == FC_ERROR_ARGUMENT);
    CHECK(fc_eval_json(h.p, "1/2", "1/64", 'h', &out) == FC_ERROR_ARGUMENT);
    CHECK(fc_eval_json(h.p, "3/2", "1/64", 'f', &out) == FC_ERROR_ARGUMENT);
}

TEST_CASE("plot csv through the boundary") {
    ParamsHandle h(8);
    char* out = nullptr;
    REQUIRE(fc_plot_csv(h.p, 2, 16, &out) == FC_OK);
    std::string csv = take(out);
    CHECK(csv.find("x,f_1,f_2") != std::string::npos);
}

TEST_CASE("similitude document without a params handle") {
    char* out = nullptr;
    REQUIRE(fc_similitude_json("1/3,0;1/3,2/3", 5, &out) == FC_OK);
    Json j = Json::parse(take(out));
    CHECK(j["validation"]["ok"] == true);
    CHECK(j["measures"][4]["measure"] == "16/81");
    CHECK(fc_similitude_json("garbage", 5, &out) == FC_ERROR_ARGUMENT);
}

TEST_CASE("verification entry point and fail count") {
    ParamsHandle h(8);
    char* out = nullptr;
    int fails = -1;
    REQUIRE(fc_verify_json(h.p, 5, &fails, &out) == FC_OK);
    CHECK(fails == 0);
    Json j = Json::parse(take(out));
    CHECK(j["claims"].size() >= 25);

    REQUIRE(fc_verify_junit(h.p, 4, nullptr, &out) == FC_OK);
    std::string xml = take(out);
    CHECK(xml.find("<testsuite") != std::string::npos);
    CHECK(fc_verify_json(h.p, 7, &fails, &out) == FC_ERROR_DEPTH);
}
