#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <charconv>
#include <cmath>

#include "hypl/output.hpp"
#include "json.hpp"

using namespace hypl;

TEST_CASE("format_double: shortest round-trip rendering") {
    for (double v : {0.1, -0.0625, 1.0 / 3.0, 1e-9, 12345.6789, 2.0}) {
        const std::string s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK(format_double(0.0625) == "0.0625");
}

TEST_CASE("parse_grid: inclusive endpoints and snapping") {
    const auto g = parse_grid("0.25:1:0.25");
    REQUIRE(g.size() == 4);
    CHECK(g[0] == 0.25);
    CHECK(g[3] == 1.0);  // snapped exactly

    const auto s = parse_grid("0.1:1:0.1");
    REQUIRE(s.size() == 10);
    CHECK(s[9] == 1.0);

    const auto lam = parse_grid("-2:4:0.25");
    REQUIRE(lam.size() == 25);
    CHECK(lam[0] == -2.0);
    CHECK(lam[24] == 4.0);

    const auto single = parse_grid("0.5:0.5:1");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 0.5);

    // non-integral span: stop below b
    const auto ragged = parse_grid("0:1:0.3");
    REQUIRE(ragged.size() == 4);  // 0, 0.3, 0.6, 0.9
    CHECK(ragged.back() < 1.0);

    CHECK_THROWS_AS(parse_grid("1:0:0.1"), ConfigInvalid);
    CHECK_THROWS_AS(parse_grid("0:1:-1"), ConfigInvalid);
    CHECK_THROWS_AS(parse_grid("nonsense"), ConfigInvalid);
    CHECK_THROWS_AS(parse_grid("0:1"), ConfigInvalid);
}

TEST_CASE("to_json / to_csv: structure and numeric agreement") {
    OutputRecord rec;
    rec.command = "bound";
    rec.params = {{"functional", "fs"}, {"s", "0.5"}};
    rec.seed = 42;
    rec.columns = {"s", "value", "regime", "sharp", "note"};
    rec.rows.push_back({OutputRecord::Cell(0.5), OutputRecord::Cell(0.25),
                        OutputRecord::Cell(std::string("middle")), OutputRecord::Cell(true),
                        OutputRecord::Cell(std::monostate{})});
    rec.rows.push_back({OutputRecord::Cell(0.5), OutputRecord::Cell(1.0 / 3.0),
                        OutputRecord::Cell(std::string("a,b \"quoted\"")),
                        OutputRecord::Cell(false), OutputRecord::Cell(std::monostate{})});

    const std::string js = to_json(rec);
    const auto j = nlohmann::json::parse(js);
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == "bound");
    CHECK(j["params"]["functional"] == "fs");
    CHECK(j["seed"] == 42);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["value"] == 0.25);
    CHECK(j["rows"][0]["sharp"] == true);
    CHECK(j["rows"][0]["note"].is_null());

    const std::string csv = to_csv(rec);
    CHECK(csv.find("s,value,regime,sharp,note\n") == 0);
    CHECK(csv.find("\"a,b \"\"quoted\"\"\"") != std::string::npos);
    CHECK(csv.find("\r") == std::string::npos);

    // same numeric content in both formats
    std::size_t pos = csv.find('\n') + 1;
    const std::string first_line = csv.substr(pos, csv.find('\n', pos) - pos);
    const std::string second_field = first_line.substr(first_line.find(',') + 1);
    double csv_value = 0.0;
    std::from_chars(second_field.data(), second_field.data() + second_field.size(), csv_value);
    CHECK(std::abs(csv_value - j["rows"][0]["value"].get<double>()) <= 1e-15);
}

TEST_CASE("make_verify_record: columns per campaign type") {
    CampaignConfig cfg;
    cfg.functional = Functional::hankel22;
    cfg.kind = Kind::starlike;
    cfg.s_grid = {0.5};
    cfg.samples = 10;
    cfg.seed = 1;
    const OutputRecord rec = make_verify_record(run_campaign(cfg));
    REQUIRE(rec.rows.size() == 1);
    CHECK(rec.columns.front() == "s");
    CHECK(rec.seed);
    bool has_w1 = false;
    for (const auto& c : rec.columns) has_w1 |= c == "w1_re";
    CHECK(has_w1);

    CampaignConfig coeff;
    coeff.functional = Functional::coeff;
    coeff.kind = Kind::convex;
    coeff.s_grid = {0.5};
    coeff.n_max = 4;
    coeff.samples = 10;
    const OutputRecord rec2 = make_verify_record(run_campaign(coeff));
    REQUIRE(rec2.rows.size() == 3);
    bool has_n = false, has_c = false;
    for (const auto& c : rec2.columns) {
        has_n |= c == "n";
        has_c |= c == "c_re";
    }
    CHECK(has_n);
    CHECK(has_c);
    // every row has exactly one cell per column
    for (const auto& row : rec2.rows) CHECK(row.size() == rec2.columns.size());
}
