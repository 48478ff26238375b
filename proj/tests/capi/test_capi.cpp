// Exercises the shared library through its public header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "finlang/finlang.h"

namespace {

struct Group {
  flc_group* g = nullptr;
  ~Group() { flc_group_free(g); }
};

struct Report {
  flc_report* r = nullptr;
  ~Report() { flc_report_free(r); }
  std::string json() const {
    const char* s = nullptr;
    REQUIRE(flc_report_json(r, &s) == FLC_OK);
    return s;
  }
  int64_t total() const {
    int64_t t = -1;
    REQUIRE(flc_report_total(r, &t) == FLC_OK);
    return t;
  }
  int match() const {
    int m = 7;
    REQUIRE(flc_report_match(r, &m) == FLC_OK);
    return m;
  }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  flc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("count and compare a named group") {
  Group g;
  REQUIRE(flc_group_named("sl2", 3, &g.g) == FLC_OK);
  int connected = 0;
  CHECK(flc_group_is_connected(g.g, &connected) == FLC_OK);
  CHECK(connected == 1);

  Report count;
  REQUIRE(flc_count(g.g, FLC_PIPELINE_AUTO, nullptr, &count.r) == FLC_OK);
  CHECK(count.total() == 7);
  CHECK(count.match() == -1);
  CHECK(count.json().find("\"total\": 7") != std::string::npos);

  Report cmp;
  REQUIRE(flc_compare(g.g, FLC_PIPELINE_BOTH, nullptr, &cmp.r) == FLC_OK);
  CHECK(cmp.match() == 1);
  CHECK(cmp.json().find("\"oracle_total\": 7") != std::string::npos);
}

TEST_CASE("seeded runs give identical reports") {
  Group g;
  REQUIRE(flc_group_named("gl2", 3, &g.g) == FLC_OK);
  Report base;
  REQUIRE(flc_count(g.g, FLC_PIPELINE_BOTH, nullptr, &base.r) == FLC_OK);
  for (uint64_t seed = 1; seed < 6; ++seed) {
    Report r;
    REQUIRE(flc_count(g.g, FLC_PIPELINE_BOTH, &seed, &r.r) == FLC_OK);
    CHECK(r.json() == base.json());
  }
}

TEST_CASE("disconnected groups") {
  Group g;
  REQUIRE(flc_group_named("o2", 3, &g.g) == FLC_OK);
  int connected = 1;
  CHECK(flc_group_is_connected(g.g, &connected) == FLC_OK);
  CHECK(connected == 0);
  Report bad;
  CHECK(flc_count(g.g, FLC_PIPELINE_SPECTRAL, nullptr, &bad.r) == FLC_ERR_UNSUPPORTED);
  CHECK(bad.r == nullptr);
  CHECK(std::strlen(flc_last_error()) > 0);
  Report ok;
  REQUIRE(flc_compare(g.g, FLC_PIPELINE_AUTO, nullptr, &ok.r) == FLC_OK);
  CHECK(ok.total() == 4);
  CHECK(ok.match() == 1);
}

TEST_CASE("a wrong oracle is reported as a mismatch") {
  Group g;
  REQUIRE(flc_group_parse("type = A1\nisogeny = sc\noracle = gl2\n", 3, &g.g) == FLC_OK);
  Report r;
  CHECK(flc_compare(g.g, FLC_PIPELINE_AUTO, nullptr, &r.r) == FLC_ERR_MISMATCH);
  REQUIRE(r.r != nullptr);
  CHECK(r.total() == 7);
  CHECK(r.match() == 0);
  CHECK(r.json().find("\"oracle_total\": 8") != std::string::npos);
}

TEST_CASE("no oracle for G2") {
  Group g;
  REQUIRE(flc_group_named("g2", 5, &g.g) == FLC_OK);
  Report r;
  CHECK(flc_compare(g.g, FLC_PIPELINE_AUTO, nullptr, &r.r) == FLC_ERR_UNSUPPORTED);
  Report c;
  REQUIRE(flc_count(g.g, FLC_PIPELINE_AUTO, nullptr, &c.r) == FLC_OK);
  CHECK(c.total() == 44);
}

TEST_CASE("error codes") {
  flc_group* g = nullptr;
  CHECK(flc_group_parse("type = A1\nq = 6\n", 0, &g) == FLC_ERR_CONFIG);
  CHECK(g == nullptr);
  CHECK(std::string(flc_last_error()).find("q") != std::string::npos);
  CHECK(flc_group_parse("type = A3\nq = 3\n", 0, &g) == FLC_ERR_UNSUPPORTED);
  CHECK(flc_group_named("e8", 3, &g) != FLC_OK);
  CHECK(flc_group_parse(nullptr, 0, &g) == FLC_ERR_ARGUMENT);
  CHECK(flc_group_named("sl2", 3, nullptr) == FLC_ERR_ARGUMENT);
  CHECK(flc_count(nullptr, FLC_PIPELINE_AUTO, nullptr, nullptr) == FLC_ERR_ARGUMENT);

  Group ok;
  REQUIRE(flc_group_named("sl2", 3, &ok.g) == FLC_OK);
  flc_report* r = nullptr;
  CHECK(flc_count(ok.g, static_cast<flc_pipeline>(9), nullptr, &r) == FLC_ERR_ARGUMENT);
  CHECK(r == nullptr);
  flc_group_free(nullptr);
  flc_report_free(nullptr);
  flc_string_free(nullptr);
}

TEST_CASE("Whittaker torsor sizes") {
  struct Row {
    const char* name;
    int64_t q;
    int64_t size;
  };
  for (auto const& row : {Row{"gl2", 3, 1}, Row{"sl2", 3, 2}, Row{"sl2", 4, 1}, Row{"sl3", 4, 3}, Row{"torus1", 5, 1}}) {
    CAPTURE(row.name);
    Group g;
    REQUIRE(flc_group_named(row.name, row.q, &g.g) == FLC_OK);
    int64_t size = 0;
    CHECK(flc_whittaker_torsor_size(g.g, &size) == FLC_OK);
    CHECK(size == row.size);
  }
}

TEST_CASE("dump reports") {
  char* s = nullptr;
  REQUIRE(flc_cells_report("B2", &s) == FLC_OK);
  CHECK(take(s).find("\"weyl_order\": 8") != std::string::npos);
  REQUIRE(flc_tables_report("G2", &s) == FLC_OK);
  CHECK(take(s).find("G2(a1)") != std::string::npos);
  REQUIRE(flc_oracle_report("pgl2", 3, &s) == FLC_OK);
  CHECK(take(s).find("\"class_count\": 5") != std::string::npos);
  CHECK(flc_cells_report("E6", &s) != FLC_OK);
  CHECK(flc_oracle_report("nonsense", 3, &s) != FLC_OK);
}
