#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "doctest.h"

#include "rumor/csv.hpp"
#include "rumor/errors.hpp"
#include "rumor/experiments.hpp"
#include "test_util.hpp"

using namespace rumor;
using test::baseline_params;
using test::threshold_params;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rumor_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_CASE("two-seed state is normalized") {
    const StateVector s = two_seed_state(100000);
    CHECK(s.s1 == doctest::Approx(1e-5).epsilon(1e-15));
    CHECK(s.s2 == s.s1);
    CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(two_seed_state(2), ParamError);
}

TEST_CASE("m sweep: stronger discernibility shrinks the rumor") {
    SweepSpec spec;
    spec.base = baseline_params();
    spec.swept = SweptParam::m;
    spec.values = {0.1, 0.5, 0.9};
    const SweepResult res = run_sweep(spec);
    REQUIRE(res.rows.size() == 3);
    for (const auto& r : res.rows) CHECK(r.converged);
    CHECK(res.rows[0].final_r1 > res.rows[1].final_r1);
    CHECK(res.rows[1].final_r1 > res.rows[2].final_r1);
    CHECK(res.rows[0].peak_s1 > res.rows[1].peak_s1);
}

TEST_CASE("sweep keeps non-converged rows and flags them") {
    SweepSpec spec;
    spec.base = baseline_params();
    spec.swept = SweptParam::alpha;
    spec.values = {0.1, 0.9};
    spec.opts.t_max = 2.0;
    const SweepResult res = run_sweep(spec);
    REQUIRE(res.rows.size() == 2);
    for (const auto& r : res.rows) CHECK(!r.converged);
}

TEST_CASE("sweep rejects out-of-range values") {
    SweepSpec spec;
    spec.base = baseline_params();
    spec.swept = SweptParam::m;
    spec.values = {1.5};
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);

    spec.values = {};
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}

TEST_CASE("sweep CSV round-trips bit-exactly") {
    SweepSpec spec;
    spec.base = baseline_params();
    spec.swept = SweptParam::m;
    spec.values = {0.1, 0.5};
    const SweepResult res = run_sweep(spec);
    const std::string text = sweep_csv(res);
    const auto rows =
        csv::parse_csv(text, "m,final_r1,final_r2,final_r,peak_s1,t_peak_s1,converged");
    REQUIRE(rows.size() == res.rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        CHECK(rows[j][0] == res.rows[j].value);
        CHECK(rows[j][1] == res.rows[j].final_r1);
        CHECK(rows[j][2] == res.rows[j].final_r2);
        CHECK(rows[j][3] == res.rows[j].final_r);
        CHECK(rows[j][4] == res.rows[j].peak_s1);
        CHECK(rows[j][5] == res.rows[j].t_peak_s1);
    }
}

TEST_CASE("heatmap cells are pure: grid order does not matter") {
    const std::vector<double> g1 = {0.0, 0.25, 0.5};
    const std::vector<double> g1r = {0.5, 0.25, 0.0};
    const std::vector<double> g2 = {0.0, 0.2};
    const ModelParams base = threshold_params();
    const HeatmapResult a = heatmap(g1, g2, base);
    const HeatmapResult b = heatmap(g1r, g2, base);
    for (std::size_t i1 = 0; i1 < g1.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < g2.size(); ++i2) {
            CHECK(a.at(i1, i2) == b.at(g1.size() - 1 - i1, i2));
        }
    }
}

TEST_CASE("heatmap: no transmission means no spread") {
    const HeatmapResult hm = heatmap({0.0}, {0.0}, threshold_params());
    CHECK(hm.at(0, 0) < 1e-3);
    CHECK(!hm.analytic_spreads[0]);
}

TEST_CASE("heatmap analytic flags match the closed form") {
    const std::vector<double> g = {0.0, 0.2, 0.6};
    const HeatmapResult hm = heatmap(g, g, threshold_params());
    for (std::size_t i1 = 0; i1 < g.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < g.size(); ++i2) {
            ModelParams p = threshold_params();
            p.lambda1 = g[i1];
            p.lambda2 = g[i2];
            CHECK(hm.analytic_spreads[i1 * g.size() + i2] ==
                  spreading_condition(p).spreads);
        }
    }
}

TEST_CASE("figure 2 data round-trips bit-exactly") {
    TempDir tmp;
    const ModelParams p = baseline_params();
    const IntegrationOptions opts;
    const auto paths = reproduce_figure(2, p, opts, tmp.path.string());
    REQUIRE(paths.size() == 1);
    const std::string text = read_file(paths[0]);
    CHECK(text.find("# lambda1 = 0.7\n") != std::string::npos);

    const auto rows = csv::parse_csv(text, "t,I,S1,S2,H,R1,R2");
    const Trajectory traj = integrate(p, two_seed_state(p.n), opts);
    REQUIRE(rows.size() == traj.samples.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        CHECK(rows[j][0] == traj.samples[j].t);
        CHECK(rows[j][1] == traj.samples[j].state.i);
        CHECK(rows[j][2] == traj.samples[j].state.s1);
        CHECK(rows[j][3] == traj.samples[j].state.s2);
        CHECK(rows[j][4] == traj.samples[j].state.h);
        CHECK(rows[j][5] == traj.samples[j].state.r1);
        CHECK(rows[j][6] == traj.samples[j].state.r2);
    }

    // the trajectory shows one rise-and-fall for each spreader type
    double peak_s1 = 0.0;
    double peak_s2 = 0.0;
    for (const auto& r : rows) {
        peak_s1 = std::max(peak_s1, r[2]);
        peak_s2 = std::max(peak_s2, r[3]);
    }
    CHECK(peak_s1 > 100.0 * rows.front()[2]);
    CHECK(peak_s2 > 100.0 * rows.front()[3]);
    CHECK(rows.back()[2] < 1e-9);
    CHECK(rows.back()[3] < 1e-9);
}

TEST_CASE("figure 10: stifler drift empties stifler1") {
    TempDir tmp;
    const auto paths =
        reproduce_figure(10, baseline_params(), {}, tmp.path.string());
    const auto rows = csv::parse_csv(read_file(paths[0]), "omega,R1,R2,converged");
    REQUIRE(rows.size() == 3); // omega in {0, 0.05, 0.1}
    CHECK(rows[0][0] == 0.0);
    CHECK(rows[2][0] == 0.1);
    // with drift on, essentially only stifler2 remains
    CHECK(rows[2][1] <= 0.02 * (rows[2][1] + rows[2][2]));
    CHECK(rows[2][1] < 1e-6);
    // without drift stifler1 persists
    CHECK(rows[0][1] > 0.01);
}

TEST_CASE("figure 5 reports steady-state stiflers against f") {
    TempDir tmp;
    const auto paths = reproduce_figure(5, baseline_params(), {}, tmp.path.string());
    const auto rows = csv::parse_csv(read_file(paths[0]), "m,f,R1,R2,converged");
    REQUIRE(rows.size() == 5);
    // final stifler1 decreases, stifler2 increases with m
    for (std::size_t j = 1; j < rows.size(); ++j) {
        CHECK(rows[j][2] < rows[j - 1][2]);
        CHECK(rows[j][3] > rows[j - 1][3]);
    }
}

TEST_CASE("figure 9 emits long-format spreader1 curves per degree") {
    TempDir tmp;
    const auto paths = reproduce_figure(9, baseline_params(), {}, tmp.path.string());
    const auto rows = csv::parse_csv(read_file(paths[0]), "k_avg,t,S1");
    REQUIRE(!rows.empty());
    std::set<double> degrees;
    for (const auto& r : rows) degrees.insert(r[0]);
    CHECK(degrees == std::set<double>{4.0, 6.0, 8.0, 10.0, 12.0});
    // times restart for each swept value and every block covers the decay
    for (const auto& r : rows) CHECK(r[2] >= 0.0);
}

TEST_CASE("figure id range is checked") {
    TempDir tmp;
    CHECK_THROWS_AS(reproduce_figure(1, baseline_params(), {}, tmp.path.string()),
                    ConfigError);
    CHECK_THROWS_AS(reproduce_figure(13, baseline_params(), {}, tmp.path.string()),
                    ConfigError);
}
