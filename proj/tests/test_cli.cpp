#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(IONREP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("ionrep_cli_" + std::to_string(std::rand()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("simulate writes a dataset and exits 0") {
    TempDir dir;
    const fs::path out = dir.path / "sim.csv";
    REQUIRE(run("simulate --t_max 2 --n_steps 20 -o " + out.string()) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("t,C14,P14,C58,P58,C18_psi,P18_psi,C18_psiprime,P18_psiprime\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
}

TEST_CASE("config file with flag override") {
    TempDir dir;
    const fs::path cfg = dir.path / "run.cfg";
    std::ofstream(cfg) << "# test\nt_max = 2\nn_steps = 1000\n";
    const fs::path out = dir.path / "sim.csv";
    REQUIRE(run("simulate -c " + cfg.string() + " --n_steps 10 -o " + out.string()) == 0);
    const std::string csv = slurp(out);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

TEST_CASE("sweep writes one file per value") {
    TempDir dir;
    const std::string stem = (dir.path / "fig").string();
    REQUIRE(run("sweep --t_max 1 --n_steps 5 --sweep_field E_P --sweep_values 0.5,5 -o " + stem) == 0);
    CHECK(fs::exists(dir.path / "fig_E_P=0.5.csv"));
    CHECK(fs::exists(dir.path / "fig_E_P=5.csv"));
}

TEST_CASE("other subcommands succeed") {
    CHECK(run("effham --t 1") == 0);
    CHECK(run("prep-bell --g 1 --delta 4 --n_steps 10") == 0);
    CHECK(run("oracle-compare --horizon 0.5 --samples 2") == 0);
}

TEST_CASE("configuration errors exit 2") {
    TempDir dir;
    const fs::path bad = dir.path / "bad.cfg";
    std::ofstream(bad) << "t_max = 1\nmystery = 3\n";
    CHECK(run("simulate -c " + bad.string()) == 2);
    CHECK(run("simulate -c " + (dir.path / "missing.cfg").string()) == 2);
    CHECK(run("simulate --n_steps 1") == 2);
    CHECK(run("simulate --omega_P 9") == 2);
    CHECK(run("simulate --no_such_flag 1") == 2);
    CHECK(run("oracle-compare --d_a 40 --d_b 40") == 2);
}

} // TEST_SUITE
