#include <cmath>
#include <cstring>

#include "doctest.h"

#include "rumor/csv.hpp"
#include "rumor/errors.hpp"
#include "rumor/rng.hpp"

using namespace rumor;

namespace {

double parse_one(const std::string& s) {
    return std::strtod(s.c_str(), nullptr);
}

} // namespace

TEST_CASE("both double formats round-trip bitwise") {
    Rng rng(8086);
    for (int it = 0; it < 2000; ++it) {
        // span many magnitudes, including subnormal-ish and huge values
        const double mag = std::pow(10.0, -300.0 + 600.0 * rng.uniform());
        const double v = (rng.below(2) ? 1.0 : -1.0) * rng.uniform() * mag;
        CHECK(parse_one(csv::format(v)) == v);
        CHECK(parse_one(csv::format17(v)) == v);
    }
    CHECK(csv::format(0.1) == "0.1");
    CHECK(csv::format(0.0) == "0");
    CHECK(parse_one(csv::format17(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv parser skips comments and validates the header") {
    const std::string text = "# a comment\n# another\nx,y\n1,2\n3.5,4.5\n";
    const auto rows = csv::parse_csv(text, "x,y");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][0] == 3.5);
    CHECK_THROWS_AS(csv::parse_csv(text, "x,z"), ConfigError);
    CHECK_THROWS_AS(csv::parse_csv("x,y\n1,oops\n", "x,y"), ConfigError);
    CHECK_THROWS_AS(csv::parse_csv("# only comments\n", "x,y"), ConfigError);
}
