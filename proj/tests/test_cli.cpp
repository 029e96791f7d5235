#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EDEN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

} // namespace

TEST_CASE("shift info reports counts and version") {
    RunResult r = run_cli("shift info golden-mean");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("version") == 1);
    CHECK(j.at("kind") == "shift_info");
    CHECK(j.at("word_counts")[0] == 2);
    CHECK(j.at("word_counts")[4] == 13);
    CHECK(j.at("shift_kind") == "sft");
}

TEST_CASE("invalid input exits 2") {
    CHECK(run_cli("shift info definitely-not-a-shift").status == 2);
    CHECK(run_cli("entropy definitely-not-a-shift").status == 2);
    CHECK(run_cli("principal check \"f = @ 0\"").status == 2);
}

TEST_CASE("classify emits verdicts and witnesses") {
    RunResult r = run_cli("ca classify eca:110");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("surjective") == "no");
    CHECK(j.at("pre_injective") == "no");
    CHECK(j.at("injective") == "no");
    CHECK(j.contains("goe_witness"));
    CHECK(j.contains("erasable_pair"));
    CHECK(j.at("flags").empty());
}

TEST_CASE("classify honors --out") {
    std::string path = std::string(EDEN_SOURCE_DIR) + "/build_cli_test_report.json";
    RunResult r = run_cli("--out " + path + " ca classify eca:90");
    REQUIRE(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j.at("surjective") == "yes");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("survey writes a TSV with one row per rule") {
    std::string path = std::string(EDEN_SOURCE_DIR) + "/build_cli_test_survey.tsv";
    RunResult r = run_cli("ca survey --shift full-2 --radius 1 --out " + path);
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("rows") == 256);
    CHECK(j.at("moore_violations") == 0);
    CHECK(j.at("myhill_violations") == 0);
    CHECK(j.at("theorem_violated") == false);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "rule-id\tsurjective\tpre_injective\tinjective\tflags\twitness");
    long rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 256);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("spec gap and wspec") {
    auto j = nlohmann::json::parse(run_cli("spec gap golden-mean --max-gap 4").out);
    CHECK(j.at("gap") == 1);
    auto j2 = nlohmann::json::parse(run_cli("spec gap odd --max-gap 6").out);
    CHECK(j2.at("gap").is_null());
    CHECK(!j2.at("failures").empty());
    auto j3 = nlohmann::json::parse(run_cli("spec wspec even --eps 1 --gap 2").out);
    CHECK(j3.at("holds") == true);
    auto j4 = nlohmann::json::parse(run_cli("spec wspec even --eps 1 --gap 1").out);
    CHECK(j4.at("holds") == false);
}

TEST_CASE("entropy exact and estimate") {
    auto j = nlohmann::json::parse(run_cli("entropy even").out);
    CHECK(std::abs(j.at("value").get<double>() - 0.4812118250596) < 1e-9);
    auto j2 = nlohmann::json::parse(run_cli("entropy even --estimate 20 --eps 0.25").out);
    CHECK(j2.at("method") == "sep_estimate");
    CHECK(std::abs(j2.at("value").get<double>() - 0.4812118250596) <
          j2.at("error_bound").get<double>() + 1e-12);
}

TEST_CASE("principal subcommands") {
    auto j = nlohmann::json::parse(run_cli("principal check \"f = -1,3,-1 @ -1\"").out);
    CHECK(j.at("invertible") == true);
    auto j2 = nlohmann::json::parse(run_cli("principal check \"f = -1,1 @ 0\"").out);
    CHECK(j2.at("invertible") == false);
    auto j3 = nlohmann::json::parse(
        run_cli("principal homoclinic \"f = -1,3,-1 @ -1\" --tol 1e-9").out);
    CHECK(std::abs(j3.at("w0").get<double>() - 0.4472135955) < 1e-9);

    std::string tpath = std::string(EDEN_SOURCE_DIR) + "/build_cli_test_targets.json";
    {
        std::ofstream t(tpath);
        t << R"([{"window": [0, 2], "values": [0.4472135955, 0.170820393, 0.0652475842]},)"
          << R"( {"window": [40, 41], "values": [0.4472135955, 0.170820393]}])";
    }
    auto j4 = nlohmann::json::parse(
        run_cli("principal glue \"f = -1,3,-1 @ -1\" " + tpath + " --eps 0.015625").out);
    CHECK(j4.at("kind") == "principal_glue");
    CHECK(j4.at("residual").get<double>() < 1e-5);
    std::remove(tpath.c_str());
}

TEST_CASE("rule files, 1D and 2D") {
    std::string rpath = std::string(EDEN_SOURCE_DIR) + "/build_cli_test_rule.txt";
    {
        std::ofstream rf(rpath);
        rf << "N=(-1),(0),(1)\n";
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    rf << a << b << c << "->" << (a ^ c) << "\n";   // rule 90
    }
    auto j = nlohmann::json::parse(run_cli("ca classify " + rpath).out);
    CHECK(j.at("surjective") == "yes");
    CHECK(j.at("pre_injective") == "yes");
    std::remove(rpath.c_str());

    std::string r2path = std::string(EDEN_SOURCE_DIR) + "/build_cli_test_rule2d.txt";
    {
        std::ofstream rf(r2path);
        rf << "N=(0,0),(0,1)\n00->0\n01->1\n10->1\n11->0\n";       // vertical xor
    }
    CHECK(run_cli("ca classify " + r2path).status == 4);
    RunResult rb = run_cli("ca classify " + r2path + " --bounded");
    CHECK(rb.status == 0);
    auto jb = nlohmann::json::parse(rb.out);
    CHECK(jb.at("surjective") == "inconclusive");   // xor is balanced: no orphan box
    std::remove(r2path.c_str());
}

TEST_CASE("independence subcommand") {
    auto j = nlohmann::json::parse(run_cli("spec independence golden-mean --n 2").out);
    CHECK(j.at("density").get<double>() >= 1.0 / 3.0 - 1e-12);
    CHECK(j.at("tuple_size") == 2);
}
