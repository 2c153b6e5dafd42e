// End-to-end checks of the command-line tool: exit codes, output files and
// byte-level determinism. The binary path comes from the build system.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "doctest.h"

#ifndef RUMORSIM_BIN
#error "RUMORSIM_BIN must be defined by the build"
#endif

namespace {

namespace fs = std::filesystem;

struct Workspace {
    fs::path dir;
    Workspace() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("rumor_cli_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = dir / name;
        std::ofstream out(p);
        out << text;
        return p;
    }
};

std::string baseline_config(const std::string& out_dir,
                            const std::string& extra = "",
                            long long n = 100000) {
    std::ostringstream os;
    os << "lambda1 = 0.7\nlambda2 = 0.7\neta = 0.8\ntheta1 = 0.5\n"
          "theta2 = 0.3\nbeta1 = 0.3\nbeta2 = 0.3\ngamma1 = 0.1\n"
          "gamma2 = 0.1\nomega = 0\nalpha = 0.5\nm = 0.3\nf_mode = linear\n"
          "f_coeff = 0.7\nk_avg = 8\nn = "
       << n << "\n";
    os << "out_dir = " << out_dir << "\n";
    os << extra;
    return os.str();
}

std::string threshold_config(const std::string& out_dir) {
    std::ostringstream os;
    os << "lambda1 = 0.7\nlambda2 = 0.7\neta = 0.1\ntheta1 = 0.5\n"
          "theta2 = 0.3\nbeta1 = 0.3\nbeta2 = 0.3\ngamma1 = 0.8\n"
          "gamma2 = 0.8\nomega = 0\nalpha = 0.5\nm = 0.3\nf_mode = constant\n"
          "f_value = 0.5\nk_avg = 8\nn = 100000\n";
    os << "out_dir = " << out_dir << "\n";
    return os.str();
}

int run_cli(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = std::string(RUMORSIM_BIN) + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file.string();
    cmd += " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("analyze prints the report and exits cleanly") {
    Workspace ws;
    const fs::path cfg = ws.write("run.conf", threshold_config(ws.dir.string()));
    const fs::path out = ws.dir / "stdout.txt";
    const int rc = run_cli("analyze --config " + cfg.string(), out);
    CHECK(rc == 0);
    const std::string text = slurp(out);
    CHECK(text.find("lambda1_c = 0.1\n") != std::string::npos);
    CHECK(text.find("lambda2_c = 0.1\n") != std::string::npos);
    CHECK(fs::exists(ws.dir / "report.csv"));
}

TEST_CASE("figure 2 writes the six-column trajectory file") {
    Workspace ws;
    const fs::path cfg = ws.write("run.conf", baseline_config(ws.dir.string()));
    const int rc = run_cli("figure --config " + cfg.string() + " 2");
    CHECK(rc == 0);
    const std::string text = slurp(ws.dir / "figure2.csv");
    CHECK(text.find("t,I,S1,S2,H,R1,R2\n") != std::string::npos);
    CHECK(text.rfind("# rumorsim", 0) == 0);
}

TEST_CASE("integrate that cannot converge exits with code 2") {
    Workspace ws;
    const fs::path cfg =
        ws.write("run.conf", baseline_config(ws.dir.string(), "t_max = 1\n"));
    const int rc = run_cli("integrate --config " + cfg.string());
    CHECK(rc == 2);
}

TEST_CASE("config errors exit with code 1") {
    Workspace ws;
    std::string bad = baseline_config(ws.dir.string());
    bad.replace(bad.find("lambda1 = 0.7"), 13, "lambda1 = 1.5");
    const fs::path cfg = ws.write("bad.conf", bad);
    CHECK(run_cli("integrate --config " + cfg.string()) == 1);
    CHECK(run_cli("analyze --config missing_file.conf") == 1);
}

TEST_CASE("environment supplies the default output directory") {
    Workspace ws;
    std::ostringstream cfg_text; // no out_dir key
    cfg_text << "lambda1 = 0.7\nlambda2 = 0.7\neta = 0.8\ntheta1 = 0.5\n"
                "theta2 = 0.3\nbeta1 = 0.3\nbeta2 = 0.3\ngamma1 = 0.1\n"
                "gamma2 = 0.1\nomega = 0\nalpha = 0.5\nm = 0.3\nf_mode = linear\n"
                "f_coeff = 0.7\nk_avg = 8\nn = 100000\n";
    const fs::path cfg = ws.write("run.conf", cfg_text.str());
    const fs::path envdir = ws.dir / "from_env";
    const std::string cmd = "RUMORSIM_OUT_DIR=" + envdir.string() + " " +
                            RUMORSIM_BIN + " analyze --config " + cfg.string() +
                            " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(envdir / "report.csv"));
}

TEST_CASE("usage errors exit with code 1, help with 0") {
    CHECK(run_cli("") == 1);                    // missing subcommand
    CHECK(run_cli("integrate") == 1);           // missing --config
    CHECK(run_cli("no_such_command --x") == 1); // unknown subcommand
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("--version") == 0);
}

TEST_CASE("same config and seed give byte-identical outputs") {
    Workspace ws;
    const fs::path cfg = ws.write(
        "run.conf",
        baseline_config((ws.dir / "a").string(), "seed = 9\nabm_t_max = 20\n", 400));
    REQUIRE(run_cli("abm --config " + cfg.string()) == 0);
    const std::string first = slurp(ws.dir / "a" / "abm.csv");

    const fs::path cfg2 = ws.write(
        "run2.conf",
        baseline_config((ws.dir / "b").string(), "seed = 9\nabm_t_max = 20\n", 400));
    REQUIRE(run_cli("abm --config " + cfg2.string()) == 0);
    std::string second = slurp(ws.dir / "b" / "abm.csv");

    // out_dir is part of the resolved-config header; normalize it
    const std::string a_dir = "out_dir = " + (ws.dir / "a").string();
    const std::string b_dir = "out_dir = " + (ws.dir / "b").string();
    const std::size_t pos = second.find(b_dir);
    REQUIRE(pos != std::string::npos);
    second.replace(pos, b_dir.size(), a_dir);
    CHECK(first == second);
}

TEST_CASE("sweep subcommand emits the requested study") {
    Workspace ws;
    const fs::path cfg = ws.write("run.conf", baseline_config(ws.dir.string()));
    const int rc = run_cli("sweep --config " + cfg.string() +
                           " --param omega --values 0,0.1");
    CHECK(rc == 0);
    const std::string text = slurp(ws.dir / "sweep_omega.csv");
    CHECK(text.find("omega,final_r1,final_r2,final_r,peak_s1,t_peak_s1,converged") !=
          std::string::npos);

    CHECK(run_cli("sweep --config " + cfg.string() +
                  " --param bogus --values 0.1") == 1);
}

TEST_CASE("heatmap subcommand writes the four-column matrix") {
    Workspace ws;
    const fs::path cfg = ws.write("run.conf", threshold_config(ws.dir.string()));
    const int rc = run_cli("heatmap --config " + cfg.string() + " --grid 4");
    CHECK(rc == 0);
    const std::string text = slurp(ws.dir / "heatmap.csv");
    CHECK(text.find("lambda1,lambda2,R,analytic_spreads\n") != std::string::npos);
    CHECK(text.find("# non_converged_cells = 0\n") != std::string::npos);
    // 16 cells plus comments and header
    int data_lines = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#' && line[0] != 'l') ++data_lines;
    }
    CHECK(data_lines == 16);
}

TEST_CASE("abm ensemble output carries means, deviations and the run count") {
    Workspace ws;
    const fs::path cfg = ws.write(
        "run.conf",
        baseline_config(ws.dir.string(), "seed = 4\nruns = 3\nabm_t_max = 10\n", 300));
    REQUIRE(run_cli("abm --config " + cfg.string()) == 0);
    const std::string text = slurp(ws.dir / "ensemble.csv");
    CHECK(text.find("t,I_mean,S1_mean,S2_mean,H_mean,R1_mean,R2_mean,"
                    "I_std,S1_std,S2_std,H_std,R1_std,R2_std,n_runs") !=
          std::string::npos);
}
