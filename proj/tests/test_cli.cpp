#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HETNET_CLI_PATH
#error "HETNET_CLI_PATH must point at the built CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "hetnet-cli-tests";

int run(const std::string& args) {
    const std::string cmd =
        std::string(HETNET_CLI_PATH) + " " + args + " >" + (kWork / "stdout.txt").string() +
        " 2>" + (kWork / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path write_spec(const std::string& name, const std::string& body) {
    fs::create_directories(kWork);
    const fs::path p = kWork / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("validate: realizable specs exit 0, defective ones exit 1") {
    const auto good = write_spec("good.hns", "hetnet-spec v1\npreset bowtie\n");
    CHECK(run("validate " + good.string()) == 0);

    const auto bad = write_spec("bad.hns", "hetnet-spec v1\nnodes 2\nedge 1 2\nedge 2 1\n");
    CHECK(run("validate " + bad.string()) == 1);
    CHECK(slurp(kWork / "stdout.txt").find("two-cycle") != std::string::npos);
}

TEST_CASE("validate: malformed rational reports the line and fails") {
    const auto p = write_spec("mal.hns", "hetnet-spec v1\nnodes 2\noverride 1 2 3/0\n");
    CHECK(run("validate " + p.string()) == 1);
    CHECK(slurp(kWork / "stderr.txt").find("line 3") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate x") == 2);
    CHECK(run("validate") == 2);  // missing spec argument
}

TEST_CASE("build writes the coefficient matrix and spectra") {
    const auto p = write_spec("b.hns", "hetnet-spec v1\npreset bowtie\n");
    const fs::path out = kWork / "build-out";
    REQUIRE(run("build " + p.string() + " -o " + out.string()) == 0);
    const std::string rep = slurp(out / "field.txt");
    CHECK(rep.find("coefficients") != std::string::npos);
    CHECK(rep.find("xi_5") != std::string::npos);
    CHECK(rep.find("preset bowtie") != std::string::npos);  // resolved config embedded
}

TEST_CASE("analyze common-connection on kirk-silber: one missing path") {
    const auto p =
        write_spec("ks.hns", "hetnet-spec v1\npreset kirk-silber\nanalysis common-connection\n");
    const fs::path out = kWork / "ks-out";
    REQUIRE(run("analyze " + p.string() + " -o " + out.string()) == 0);
    const std::string csv = slurp(out / "paths.csv");
    int realized = 0, missing = 0;
    std::istringstream is(csv);
    for (std::string line; std::getline(is, line);) {
        if (line.find(",realized") != std::string::npos) ++realized;
        if (line.find(",not-realized") != std::string::npos) ++missing;
    }
    CHECK(realized == 3);
    CHECK(missing == 1);
}

TEST_CASE("analyze house: four witnesses") {
    const auto p = write_spec("h.hns", "hetnet-spec v1\npreset house\nanalysis house\n");
    const fs::path out = kWork / "house-out";
    REQUIRE(run("analyze " + p.string() + " -o " + out.string()) == 0);
    const std::string csv = slurp(out / "house_witnesses.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
}

TEST_CASE("analyze bowtie: parameters, turn exponents, witnesses") {
    const auto p = write_spec("bt.hns", "hetnet-spec v1\npreset bowtie\nanalysis bowtie\n");
    const fs::path out = kWork / "bt-out";
    REQUIRE(run("analyze " + p.string() + " -o " + out.string()) == 0);
    CHECK(slurp(out / "parameters.csv").find("delta~,-8/5") != std::string::npos);
    CHECK(!slurp(out / "turn_exponents.csv").empty());
    CHECK(slurp(out / "witnesses.csv").find("RLR,") != std::string::npos);
    CHECK(std::count_if(fs::directory_iterator(out), fs::directory_iterator{},
                        [](const auto& e) { return e.path().extension() == ".csv"; }) >= 3);
}

TEST_CASE("analyze rejects mismatched wiring with expected-vs-found edges") {
    const auto p = write_spec(
        "mis.hns", "hetnet-spec v1\nnodes 3\nedge 1 2\nedge 2 3\nedge 3 1\nanalysis house\n");
    CHECK(run("analyze " + p.string() + " -o " + (kWork / "mis-out").string()) == 1);
    const std::string err = slurp(kWork / "stderr.txt");
    CHECK(err.find("expects edges") != std::string::npos);
    CHECK(err.find("spec has") != std::string::npos);
}

TEST_CASE("simulate: deterministic reports, count 0 succeeds, bad eps is a usage error") {
    const auto p = write_spec("sim.hns", "hetnet-spec v1\npreset bowtie\n");
    const fs::path o1 = kWork / "sim1", o2 = kWork / "sim2";
    REQUIRE(run("simulate " + p.string() + " --count 4 --seed 7 -o " + o1.string()) == 0);
    REQUIRE(run("simulate " + p.string() + " --count 4 --seed 7 -o " + o2.string()) == 0);
    CHECK(slurp(o1 / "runs.csv") == slurp(o2 / "runs.csv"));  // byte-identical
    CHECK(slurp(o1 / "summary.txt") == slurp(o2 / "summary.txt"));

    CHECK(run("simulate " + p.string() + " --count 0 -o " + (kWork / "sim0").string()) == 0);
    CHECK(slurp(kWork / "sim0" / "runs.csv").find("run,") == 0);

    CHECK(run("simulate " + p.string() + " --eps 0.9 -o " + (kWork / "simE").string()) == 2);
}

TEST_CASE("shadow: witness found exits 0, empty grid exits 1") {
    const auto p = write_spec("sh.hns", "hetnet-spec v1\npreset house\n");
    CHECK(run("shadow " + p.string() + " --path 5,1,2,4 --per-axis 16 -o " +
              (kWork / "sh1").string()) == 0);
    CHECK(slurp(kWork / "sh1" / "shadow.txt").find("witness") != std::string::npos);

    // kirk-silber missing path (ratio comparison): alpha12b for the preset
    const auto ks = write_spec("ks2.hns", "hetnet-spec v1\npreset kirk-silber\n");
    CHECK(run("shadow " + ks.string() + " --path 3,1,2,4 --per-axis 16 -o " +
              (kWork / "sh2").string()) == 1);
}
