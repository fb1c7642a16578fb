// CLI contract checks: exit codes per error class, one-line stderr
// diagnostics, and output shapes. Pass the CLI binary path as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

int failures = 0;
std::string cli;
fs::path dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";
    const std::string cmd =
        "\"" + cli + "\" " + args + " > " + out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        ++failures;
        std::cout << "FAILED: " << what << "\n";
    }
}

void check_exit(const std::string& args, int expected, const char* what) {
    const RunResult r = run(args);
    if (r.exit_code != expected) {
        ++failures;
        std::cout << "FAILED: " << what << ": exit " << r.exit_code << ", expected "
                  << expected << "\n"
                  << "  stderr: " << r.err;
        return;
    }
    std::cout << "ok: " << what << "\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];
    dir = fs::temp_directory_path() / ("actiongraph-cli-checks-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    // Success paths exit zero.
    {
        const RunResult r = run("analyze --sequence catalan --n 6");
        check(r.exit_code == 0, "analyze exits 0");
        check(r.out.find("z: 1 1 2 5 14 42") != std::string::npos, "analyze prints z values");
        check(r.out.find("verdict: admissible") != std::string::npos,
              "analyze prints the verdict");
    }
    {
        // A rejected sequence is still a successful analysis.
        const RunResult r = run("analyze --sequence custom:1,1,1 --n 2");
        check(r.exit_code == 0, "analyze of a rejected sequence exits 0");
        check(r.out.find("rejected at index 2 (value 0") != std::string::npos,
              "analyze names the rejection");
    }
    {
        const RunResult r = run("analyze --sequence catalan --n 4 --json");
        check(r.exit_code == 0, "analyze --json exits 0");
        const auto doc = nlohmann::json::parse(r.out, nullptr, false);
        check(!doc.is_discarded() && doc.at("verdict") == "admissible",
              "analyze --json emits valid JSON");
    }
    check_exit("verify --rule catalan --n 4", 0, "verify of a valid family exits 0");
    check_exit("compare --rule super --n 4", 0, "compare of a matching rule exits 0");
    {
        const RunResult r = run("compare --rule super --n 4");
        check(r.out.find("all: isomorphic") != std::string::npos, "compare prints a summary");
    }
    check_exit("--help", 0, "--help exits 0");

    // The build -> export pipeline round-trips.
    {
        const fs::path json = dir / "g.json";
        const fs::path dot = dir / "g.dot";
        const fs::path dot2 = dir / "g2.dot";
        check(run("build --rule fuss:2 --n 3 --out " + json.string() + " --dot " +
                  dot.string())
                      .exit_code == 0,
              "build writes JSON and DOT");
        check(run("export --in " + json.string() + " --out " + dot2.string()).exit_code == 0,
              "export accepts build output");
        check(!slurp(dot).empty() && slurp(dot) == slurp(dot2),
              "export DOT matches build --dot");
    }

    // Failure classes map to distinct nonzero exits.
    check_exit("verify --sequence custom:1,1,1 --n 2", 1, "failed verification exits 1");
    {
        const RunResult r = run("verify --sequence custom:1,1,1 --n 2");
        check(r.out.find("overall: FAIL") != std::string::npos, "verify prints overall: FAIL");
    }
    check_exit("bogus", 2, "unknown subcommand exits 2");
    check_exit("build --n 2", 2, "build without a source exits 2");
    check_exit("build --rule catalan --sequence catalan --n 2", 2,
               "build with two sources exits 2");
    check_exit("analyze --sequence motzkin --n 3", 3, "unknown sequence spec exits 3");
    check_exit("analyze --sequence custom:1,x --n 1", 4, "malformed custom list exits 4");
    check_exit("analyze --sequence custom:1,1 --n 5", 4, "short custom list exits 4");
    check_exit("build --rule catalan --n 12 --budget 500", 5, "budget overflow exits 5");
    check_exit("build --sequence custom:1,1,1 --n 2", 7, "inadmissible build exits 7");
    check_exit("export --in " + (dir / "missing.json").string(), 8, "missing input exits 8");
    {
        const fs::path broken = dir / "broken.json";
        std::ofstream(broken) << "{oops";
        check_exit("export --in " + broken.string(), 8, "unparsable JSON exits 8");
        std::ofstream(broken) << R"({"vertices": [{"id":0,"label":0}], "edges": [[0,0]]})";
        check_exit("export --in " + broken.string(), 8, "malformed graph exits 8");
    }

    // Every error prints exactly one machine-parsable stderr line.
    for (const char* args :
         {"analyze --sequence motzkin --n 3", "build --sequence custom:1,1,1 --n 2",
          "build --rule catalan --n 12 --budget 500"}) {
        const RunResult r = run(args);
        const bool one_line = !r.err.empty() &&
                              r.err.rfind("error: ", 0) == 0 &&
                              r.err.find('\n') == r.err.size() - 1;
        check(one_line, std::string("single stderr line for: ") + args);
    }

    fs::remove_all(dir);
    if (failures == 0) {
        std::cout << "all CLI checks passed\n";
        return 0;
    }
    std::cout << failures << " CLI checks failed\n";
    return 1;
}
