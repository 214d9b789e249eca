// Exercises the shared library strictly through its C header.

#include <cstring>
#include <string>

#include "doctest.h"
#include "mcsep/mcsep.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    mcsep_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("graph handles") {
    mcsep_graph* g = nullptr;
    REQUIRE(mcsep_graph_from_graph6("Dhc", &g) == MCSEP_OK);
    CHECK(mcsep_graph_order(g) == 5);
    CHECK(mcsep_graph_neighbors(g, 0) == ((1U << 1) | (1U << 4)));
    char* text = nullptr;
    REQUIRE(mcsep_graph_to_graph6(g, &text) == MCSEP_OK);
    CHECK(take(text) == "Dhc");
    mcsep_graph_free(g);

    mcsep_graph* bad = nullptr;
    CHECK(mcsep_graph_from_graph6("D", &bad) == MCSEP_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::strlen(mcsep_last_error()) > 0);
    CHECK(mcsep_graph_from_graph6(nullptr, &bad) == MCSEP_ERR_INVALID_ARGUMENT);

    const int edges[] = {0, 1, 1, 2};
    REQUIRE(mcsep_graph_from_edges(3, edges, 2, &g) == MCSEP_OK);
    CHECK(mcsep_graph_neighbors(g, 1) == 5U);
    mcsep_graph_free(g);
    CHECK(mcsep_graph_from_edges(3, edges, 2, nullptr) == MCSEP_ERR_INVALID_ARGUMENT);
    const int loop[] = {1, 1};
    CHECK(mcsep_graph_from_edges(3, loop, 1, &g) == MCSEP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("separators and cuts") {
    mcsep_graph* s = nullptr;
    int u = -1, v = -1;
    REQUIRE(mcsep_construct_seymour(3, &s, &u, &v) == MCSEP_OK);
    CHECK(u == 0);
    CHECK(v == 1);
    uint64_t count = 0;
    REQUIRE(mcsep_count_separators(s, u, v, &count) == MCSEP_OK);
    CHECK(count == 27);
    mcsep_family* family = nullptr;
    REQUIRE(mcsep_enumerate_separators(s, u, v, &family) == MCSEP_OK);
    CHECK(mcsep_family_size(family) == 27);
    for (size_t i = 1; i < 27; ++i) CHECK(mcsep_family_member(family, i - 1) < mcsep_family_member(family, i));
    int minimal = 0;
    REQUIRE(mcsep_is_minimal_separator(s, u, v, mcsep_family_member(family, 0), &minimal) == MCSEP_OK);
    CHECK(minimal == 1);
    mcsep_family_free(family);
    CHECK(mcsep_count_separators(s, 0, 0, &count) == MCSEP_ERR_INVALID_ARGUMENT);
    CHECK(mcsep_count_separators(s, 0, 99, &count) == MCSEP_ERR_RANGE);
    CHECK(mcsep_is_minimal_separator(s, 0, 1, 1U, &minimal) == MCSEP_ERR_INVALID_ARGUMENT);
    mcsep_graph_free(s);

    mcsep_graph* path = nullptr;
    REQUIRE(mcsep_construct_named("path", 3, &path) == MCSEP_OK);
    REQUIRE(mcsep_enumerate_vertex_cuts(path, &family) == MCSEP_OK);
    CHECK(mcsep_family_size(family) == 1);
    CHECK(mcsep_family_member(family, 0) == 2U);
    mcsep_family_free(family);
    mcsep_graph_free(path);
    CHECK(mcsep_construct_named("nope", 3, &path) == MCSEP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("glue through the C boundary") {
    mcsep_graph* a = nullptr;
    mcsep_graph* b = nullptr;
    REQUIRE(mcsep_construct_seymour(1, &a, nullptr, nullptr) == MCSEP_OK);
    REQUIRE(mcsep_construct_seymour(2, &b, nullptr, nullptr) == MCSEP_OK);
    mcsep_graph* joined = nullptr;
    int u = -1, v = -1;
    REQUIRE(mcsep_construct_glue(a, 0, 1, b, 0, 1, &joined, &u, &v) == MCSEP_OK);
    uint64_t count = 0;
    REQUIRE(mcsep_count_separators(joined, u, v, &count) == MCSEP_OK);
    CHECK(count == 27);
    CHECK(mcsep_graph_order(joined) == 11);
    mcsep_graph_free(joined);
    CHECK(mcsep_construct_glue(a, 0, 0, b, 0, 1, &joined, &u, &v) == MCSEP_ERR_INVALID_ARGUMENT);
    mcsep_graph_free(a);
    mcsep_graph_free(b);
}

TEST_CASE("bounds tables") {
    char* csv = nullptr;
    REQUIRE(mcsep_bounds_table(10, "csv", nullptr, &csv) == MCSEP_OK);
    const std::string table = take(csv);
    CHECK(table.rfind("n,lower,upper_sum,upper_weak,exact_g,root_lower,root_upper\n", 0) == 0);
    CHECK(table.find("\n3,3,") != std::string::npos);
    char* out = nullptr;
    CHECK(mcsep_bounds_table(0, "csv", nullptr, &out) == MCSEP_ERR_RANGE);
    CHECK(mcsep_bounds_table(5, "xml", nullptr, &out) == MCSEP_ERR_INVALID_ARGUMENT);
    CHECK(mcsep_bounds_table(5, "csv", "/nonexistent/census.jsonl", &out) == MCSEP_ERR_IO);
    CHECK(mcsep_binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(mcsep_binary_entropy(0.0) == 0.0);
}

TEST_CASE("census and conjecture") {
    mcsep_census_config config{};
    config.kind = "g";
    config.size_min = 3;
    config.size_max = 4;
    config.workers = 2;
    char* records = nullptr;
    REQUIRE(mcsep_census_run(&config, &records) == MCSEP_OK);
    const std::string lines = take(records);
    CHECK(lines.find("\"size\":3") != std::string::npos);
    CHECK(lines.find("\"value\":4") != std::string::npos);

    config.kind = "x";
    CHECK(mcsep_census_run(&config, &records) == MCSEP_ERR_INVALID_ARGUMENT);
    config.kind = "g";
    config.size_max = 10;
    CHECK(mcsep_census_run(&config, &records) == MCSEP_ERR_RANGE);

    char* report = nullptr;
    int violated = -1;
    REQUIRE(mcsep_verify_conjecture(4, 1, &report, &violated) == MCSEP_OK);
    CHECK(violated == 0);
    CHECK(take(report).find("no size exceeds") != std::string::npos);
    CHECK(std::string(mcsep_status_name(MCSEP_ERR_CHECKPOINT)) == "checkpoint error");
}
