#include <doctest.h>

#include <sstream>

#include "tecs/report.hpp"

using namespace tecs;

namespace {

RunRecord record(std::string instance, int n, int m, int dim, std::string model, std::string sep, double seconds,
                 bool finished) {
    RunRecord r;
    r.instance = std::move(instance);
    r.n = n;
    r.m = m;
    r.dim = dim;
    r.model = std::move(model);
    r.separation = std::move(sep);
    r.objective = 7;
    r.bound = finished ? 7.0 : 9.5;
    r.status = finished ? "optimal" : "time_limit";
    r.seconds = seconds;
    r.nodes = 3;
    return r;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

std::string as_csv(const std::vector<RunRecord>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << to_csv_row(r) << '\n';
    return out.str();
}

}  // namespace

TEST_CASE("median") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK_THROWS(median({}));
}

TEST_CASE("csv round trip") {
    const std::vector<RunRecord> rows{record("a", 10, 20, 15, "basic", "integer", 1.25, true),
                                      record("b", 12, 30, 22, "strengthened", "fractional", 600.0, false)};
    std::istringstream in(as_csv(rows));
    const auto back = read_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[0].instance == "a");
    CHECK(back[0].seconds == doctest::Approx(1.25));
    CHECK(back[1].variant() == "strengthened-fractional");
    CHECK_FALSE(back[1].finished());
    CHECK(back[1].bound == doctest::Approx(9.5));
}

TEST_CASE("csv errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), ReportError);
    std::istringstream header("instance,n\n");
    CHECK_THROWS_AS(read_csv(header), ReportError);
    std::istringstream short_row(std::string(kCsvHeader) + "\na,1,2\n");
    CHECK_THROWS_AS(read_csv(short_row), ReportError);
    std::istringstream bad_number(std::string(kCsvHeader) + "\na,x,2,3,basic,integer,1,1,optimal,1,1,0,0,0,0\n");
    CHECK_THROWS_AS(read_csv(bad_number), ReportError);
}

TEST_CASE("aggregation by dimension bucket") {
    std::vector<RunRecord> rows;
    const double times[] = {1.0, 5.0, 3.0};
    for (int i = 0; i < 3; ++i) rows.push_back(record("x" + std::to_string(i), 30, 40, 15 + i, "basic", "integer", times[i], true));
    rows.push_back(record("y", 30, 45, 27, "basic", "integer", 8.0, true));
    const auto agg = aggregate(rows);
    REQUIRE(agg.size() == 2);
    CHECK(agg[0].axis == "dim/10");
    CHECK(agg[0].group == 1);
    CHECK(agg[0].total == 3);
    CHECK(agg[0].median_seconds == doctest::Approx(3.0));
    CHECK(agg[0].plotted);
    CHECK(agg[1].group == 2);

    std::ostringstream out;
    write_aggregate_csv(out, agg);
    CHECK(out.str().find("dim/10,1,basic-integer,3,3,3.0000,1") != std::string::npos);

    const std::string svg = render_svg(agg);
    CHECK(count(svg, "class=\"series\"") == 1);
    CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
}

TEST_CASE("complete graphs group by vertex count") {
    const std::vector<RunRecord> rows{record("k", 15, 105, 105, "basic", "integer", 2.0, true),
                                      record("k2", 16, 120, 120, "basic", "integer", 3.0, true)};
    const auto agg = aggregate(rows);
    CHECK(agg[0].axis == "n");
    CHECK(agg[0].group == 15);
    CHECK(aggregate(rows, GroupBy::Dimension)[0].axis == "dim/10");
}

TEST_CASE("groups with half or fewer finished runs are not plotted") {
    std::vector<RunRecord> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(record("a" + std::to_string(i), 20, 30, 12, "basic", "integer", 1.0 + i, i < 2));
    for (int i = 0; i < 5; ++i) rows.push_back(record("a" + std::to_string(i), 20, 30, 12, "strengthened", "integer", 1.0 + i, i < 3));
    const auto agg = aggregate(rows);
    REQUIRE(agg.size() == 2);
    CHECK(agg[0].variant == "basic-integer");
    CHECK(agg[0].finished == 2);
    CHECK_FALSE(agg[0].plotted);
    CHECK(agg[1].plotted);
    const std::string svg = render_svg(agg);
    CHECK(count(svg, "class=\"series\"") == 2);
    const auto basic = svg.find("data-variant=\"basic-integer\"");
    const auto strong = svg.find("data-variant=\"strengthened-integer\"");
    REQUIRE(basic != std::string::npos);
    REQUIRE(strong != std::string::npos);
    // The suppressed series has no markers before the next group opens.
    const std::string basic_body = svg.substr(basic, strong - basic);
    CHECK(count(basic_body, "<circle") == 0);
    CHECK(count(svg.substr(strong), "<circle") >= 1);
}

TEST_CASE("all four variants produce four series") {
    std::vector<RunRecord> rows;
    for (const char* model : {"basic", "strengthened"})
        for (const char* sep : {"integer", "fractional"})
            for (int d : {5, 15, 25}) rows.push_back(record("i" + std::to_string(d), 20, 30, d, model, sep, d / 10.0, true));
    const std::string svg = render_svg(aggregate(rows));
    CHECK(count(svg, "class=\"series\"") == 4);
    CHECK(count(svg, "<polyline") == 4);
    for (const char* v : {"basic-integer", "strengthened-integer", "basic-fractional", "strengthened-fractional"})
        CHECK(svg.find(std::string("data-variant=\"") + v + "\"") != std::string::npos);
}
