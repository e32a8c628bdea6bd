#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string &args) {
    static int counter = 0;
    fs::path out = fs::temp_directory_path() / ("skewpbw_cli_out_" + std::to_string(counter++));
    std::string cmd = std::string(SKEWPBW_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    int code = -1;
#ifdef WIFEXITED
    if (WIFEXITED(status))
        code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, ss.str()};
}

fs::path write_alg(const std::string &name, const std::string &text) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

const char *kWeyl = "field Q\nvars t x\nrel x*t = t*x + 1\n";

} // namespace

TEST_CASE("normalize and commutator commands", "[cli]") {
    fs::path alg = write_alg("cli_weyl.alg", kWeyl);
    auto r = run_cli("normalize " + alg.string() + " \"x*t\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 + t*x") != std::string::npos);

    auto c = run_cli("commutator " + alg.string() + " \"x\" \"t\"");
    CHECK(c.exit_code == 0);
    CHECK(c.output.substr(0, 1) == "1");
}

TEST_CASE("central command exit codes", "[cli]") {
    fs::path alg = write_alg("cli_usl2.alg",
                             "field Q\nvars x y z\nrel y*x = x*y - z\n"
                             "rel z*x = x*z + 2*x\nrel z*y = y*z - 2*y\n");
    auto good = run_cli("central " + alg.string() + " \"4*x*y + z^2 - 2*z\"");
    CHECK(good.exit_code == 0);
    auto bad = run_cli("central " + alg.string() + " \"z\"");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("center command via file and via catalog", "[cli]") {
    fs::path alg = write_alg("cli_weyl2.alg", kWeyl);
    auto r = run_cli("center " + alg.string() + " --max-degree 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("1\n", 0) == 0);

    auto c = run_cli("center --algebra quantum_plane --field \"Cyclo(2)\" --max-degree 2");
    CHECK(c.exit_code == 0);
    CHECK(c.output.rfind("1\nx^2\ny^2\n", 0) == 0);

    auto d = run_cli("center --algebra weyl --param n=2 --max-degree 3");
    CHECK(d.exit_code == 0);
    CHECK(d.output.rfind("1\n", 0) == 0);
    CHECK(d.output.find("x") == std::string::npos);
}

TEST_CASE("graded and list commands", "[cli]") {
    // Jordan plane with a lower-degree term added: the full-weight tail x^2
    // survives in the associated graded ring, the constant does not
    fs::path alg = write_alg("cli_jordan.alg", "field Q\nvars x y\nrel y*x = x*y - x^2 + 1\n");
    auto g = run_cli("graded " + alg.string());
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("x^2") != std::string::npos);
    CHECK(g.output.find("+ 1") == std::string::npos);

    auto l = run_cli("list");
    CHECK(l.exit_code == 0);
    CHECK(l.output.find("weyl") != std::string::npos);
    CHECK(l.output.find("woronowicz") != std::string::npos);
}

TEST_CASE("error exit codes", "[cli]") {
    // 2: parse error
    fs::path bad = write_alg("cli_bad.alg", "field Q\nvars t x\nrel x*t = t*x +\n");
    CHECK(run_cli("normalize " + bad.string() + " \"x\"").exit_code == 2);
    fs::path ok = write_alg("cli_ok.alg", kWeyl);
    CHECK(run_cli("normalize " + ok.string() + " \"x + w\"").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);

    // 3: inadmissible presentation (relation lhs is not a descent)
    fs::path inadm = write_alg("cli_inadm.alg", "field Q\nvars t x\nrel t*x = x*t + 1\n");
    CHECK(run_cli("normalize " + inadm.string() + " \"x\"").exit_code == 3);

    // 4: resource limit
    auto r = run_cli("center --algebra weyl --param n=2 --max-degree 50");
    CHECK(r.exit_code == 4);
}

TEST_CASE("json reports are structured and deterministic", "[cli]") {
    auto r = run_cli("--json verify --algebra usl2");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "verify");
    CHECK(j["algebra"] == "usl2");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["checks"].is_array());
    CHECK(!j["checks"].empty());
    for (const auto &c : j["checks"])
        CHECK(c["status"] == "pass");

    auto a = run_cli("--json verify --all --oracle-max 2");
    auto b = run_cli("--json verify --all --oracle-max 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    nlohmann::json ja = nlohmann::json::parse(a.output);
    CHECK(ja["summary"]["failed"] == 0);
}

TEST_CASE("verify single algebra text report", "[cli]") {
    auto r = run_cli("verify --algebra dispin");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("summary:") != std::string::npos);
}
