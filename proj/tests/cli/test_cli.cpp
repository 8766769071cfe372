// Integration tests driving the installed CLI binary end to end. The build
// injects the binary path as ECC_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ecctree/bounds.hpp"
#include "ecctree/constructors.hpp"
#include "ecctree/metrics.hpp"
#include "ecctree/tree.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

RunResult run(const std::string& args) {
    std::string command = std::string(ECC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_file(const std::string& contents) {
    static int counter = 0;
    std::string path = "cli_test_input_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path);
    out << contents;
    return path;
}

long long count_lines(const std::string& text) {
    long long lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

} // namespace

TEST_CASE("compute reports the profile of a star") {
    std::string file = temp_file(ecc::format_tree(ecc::star(5)));
    RunResult result = run("compute " + file + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"total\":9") != std::string::npos);
    CHECK(result.output.find("\"center\":[0]") != std::string::npos);
    CHECK(result.output.find("\"total_over_center\":{\"frac\":\"9/1\"") != std::string::npos);
    std::remove(file.c_str());
}

TEST_CASE("compute accepts the json tree form") {
    std::string file = temp_file(R"({"n": 4, "edges": [[0,1],[1,2],[2,3]]})");
    RunResult result = run("compute " + file + " --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"total\":10") != std::string::npos);
    CHECK(result.output.find("\"center\":[1,2]") != std::string::npos);
    std::remove(file.c_str());
}

TEST_CASE("malformed input names the offending line and exits 2") {
    std::string file = temp_file("n 3\n0 1\nnot an edge here\n");
    RunResult result = run("compute " + file);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 3") != std::string::npos);
    std::remove(file.c_str());

    RunResult missing = run("compute no_such_file.txt");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("construct families and pipe back through compute") {
    RunResult star = run("construct greedy-caterpillar --ds 4,1,1,1,1");
    CHECK(star.exit_code == 0);
    CHECK(star.output == run("construct star --n 5").output);

    // round trip: constructed trees recompute to the documented values
    struct Case {
        std::string args;
        std::string expect;
    };
    const Case cases[] = {
        {"construct greedy-tree --ds 3,3,2,1,1,1,1", "\"total\":23"},
        {"construct extremal-T2.2 --n 9", "\"total\":36"},
        {"construct extremal-T2.3 --n 8", "\"total\":37"},
        {"construct extremal-T2.4 --n 6", "\"total\":19"},
        {"construct path --n 12", "\"total\":102"}, // Obs. 2 with y=11
    };
    for (const Case& c : cases) {
        RunResult tree = run(c.args);
        REQUIRE(tree.exit_code == 0);
        std::string file = temp_file(tree.output);
        RunResult computed = run("compute " + file + " --format json");
        CHECK(computed.exit_code == 0);
        CHECK(computed.output.find(c.expect) != std::string::npos);
        std::remove(file.c_str());
    }

    RunResult roles = run("construct extremal-T2.5 --n 6 --variant 2 --attach 2 --format json");
    CHECK(roles.exit_code == 0);
    CHECK(roles.output.find("\"roles\"") != std::string::npos);

    SUBCASE("n-parameterized families round-trip for every n up to 12") {
        auto total_of = [&](const std::string& args, const ecc::Tree& expected) {
            RunResult tree = run(args);
            REQUIRE(tree.exit_code == 0);
            std::string file = temp_file(tree.output);
            RunResult computed = run("compute " + file + " --format json");
            std::remove(file.c_str());
            REQUIRE(computed.exit_code == 0);
            std::string needle =
                "\"total\":" + std::to_string(ecc::ecc_profile(expected).total);
            CHECK(computed.output.find(needle) != std::string::npos);
        };
        for (int n = 2; n <= 12; ++n) {
            total_of("construct star --n " + std::to_string(n), ecc::star(n));
            total_of("construct path --n " + std::to_string(n), ecc::path(n));
        }
        for (int n = 4; n <= 12; ++n) {
            std::string ns = std::to_string(n);
            total_of("construct extremal-T2.2 --n " + ns,
                     ecc::extremal_min_total_over_center(
                         n, static_cast<int>(ecc::min_total_over_center(n).optimal_x))
                         .tree);
            if (n >= 8)
                total_of("construct extremal-T2.3 --n " + ns,
                         ecc::extremal_max_total_over_leaf(
                             n, static_cast<int>(ecc::max_total_over_leaf(n).optimal_x))
                             .tree);
            if (n >= 5) {
                total_of("construct extremal-T2.4 --n " + ns,
                         ecc::extremal_min_total_over_leaf(
                             n, static_cast<int>(ecc::min_total_over_leaf(n).optimal_x))
                             .tree);
                total_of("construct extremal-T2.5 --n " + ns,
                         ecc::extremal_min_leaf_over_center(n, 1).tree);
            }
            if (n % 2 == 0)
                total_of("construct extremal-T2.6 --n " + ns,
                         ecc::extremal_max_leaf_over_leaf(n).tree);
            else
                total_of("construct extremal-T2.6 --n " + ns + " --attach 2",
                         ecc::extremal_max_leaf_over_leaf(n, 2).tree);
        }
    }

    RunResult bad = run("construct extremal-T2.4 --n 6 --x 3");
    CHECK(bad.exit_code == 2); // odd path length rejected

    RunResult unknown = run("construct banana --n 5");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("bound values match the closed forms") {
    RunResult t23 = run("bound T2.3 --n 8 --format json");
    CHECK(t23.exit_code == 0);
    CHECK(t23.output.find("\"frac\":\"37/4\"") != std::string::npos);
    CHECK(t23.output.find("\"optimal_x\":4") != std::string::npos);

    RunResult t25 = run("bound T2.5 --n 9 --format json");
    CHECK(t25.exit_code == 0);
    CHECK(t25.output.find("\"max\":{\"frac\":\"2/1\"") != std::string::npos);
    CHECK(t25.output.find("\"min\":{\"frac\":\"5/4\"") != std::string::npos);

    RunResult below_range = run("bound T2.3 --n 7");
    CHECK(below_range.exit_code == 2);
}

TEST_CASE("verify streams one record per instance and a summary") {
    RunResult result = run("verify T2.1 --n-max 9 --jobs 2 --format json");
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.output) == 8); // 7 instances + summary
    CHECK(result.output.find("\"instance\":\"n=9\"") != std::string::npos);
    CHECK(result.output.find("\"pass\":true") != std::string::npos);

    RunResult unknown = run("verify T9.9");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.output.find("unknown theorem") != std::string::npos);

    RunResult capped = run("verify P3.1 --n 9 --cap 5");
    CHECK(capped.exit_code == 2);
    CHECK(capped.output.find("cap") != std::string::npos);

    SUBCASE("ECC_CAP environment variable caps enumeration too") {
        setenv("ECC_CAP", "5", 1);
        RunResult env_capped = run("verify P3.1 --n 9");
        unsetenv("ECC_CAP");
        CHECK(env_capped.exit_code == 2);
        CHECK(env_capped.output.find("cap") != std::string::npos);
    }
}

TEST_CASE("sweep emits csv over the valid range") {
    RunResult result = run("sweep T2.4 --n-max 12");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("theorem,n,value,approx,optimal_x,tight_for_both", 0) == 0);
    CHECK(count_lines(result.output) == 9); // header + n = 5..12
    CHECK(result.output.find("T2.4,6,19/4,4.75,4,false") != std::string::npos);
    CHECK(result.output.find("T2.4,7,11/2,5.5,4,true") != std::string::npos);
}

TEST_CASE("construct output is byte-identical across runs") {
    std::string first = run("construct greedy-tree --ds 4,3,3,2,1,1,1,1,1,1").output;
    std::string second = run("construct greedy-tree --ds 4,3,3,2,1,1,1,1,1,1").output;
    CHECK(first == second);
    CHECK(!first.empty());
}
