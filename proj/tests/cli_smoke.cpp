// Smoke test for the command-line front end. argv[1] is the binary path;
// each case runs a real subprocess and checks the exit code and output.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;
int g_failures = 0;

struct Result {
    int exit_code = -1;
    std::string output;
};

Result run(const std::string& args) {
    Result r;
    std::string cmd = "'" + g_cli + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(const std::string& args, int want_exit, const std::string& want_substr) {
    Result r = run(args);
    bool ok = r.exit_code == want_exit &&
              (want_substr.empty() || r.output.find(want_substr) != std::string::npos);
    std::printf("%s  fatcantor %s\n", ok ? "PASS" : "FAIL", args.c_str());
    if (!ok) {
        ++g_failures;
        std::printf("  exit %d (wanted %d); output:\n%s\n", r.exit_code, want_exit,
                    r.output.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke_driver <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    expect("params --depth 6", 0, "1/6");
    expect("params --depth 6 --json", 0, "\"eps\": \"1/32\"");
    expect("intervals --depth 8 --level 3", 0, "[19/96, 1/3]");
    expect("intervals --depth 8 --level 3 --json", 0, "\"measure\": \"13/24\"");
    expect("intervals --depth 8 --level 2 --csv", 0, "0,1/3");
    expect("measure --depth 8", 0, "2/3");
    expect("eval --depth 8 --x 1/2 --tol 1/64", 0, "f(1/2) = 1/6");
    expect("eval --depth 8 --x 0 --map g", 0, "g(0) = 2/3");
    expect("plot --depth 8 --level 2 --points 8", 0, "x,f_1,f_2");
    expect("plot --depth 8 --level 1 --json", 0, "\"monotonicity\": \"strict\"");
    expect("similitude --maps '1/3,0;1/3,2/3' --depth 5", 0, "16/81");
    expect("verify --depth 8 --max-level 5", 0, "verification passed");
    expect("verify --depth 8 --max-level 5 --junit", 0, "<testsuite");
    expect("verify --depth 8 --max-level 5 --json", 0, "\"claims\"");

    // usage and precondition failures exit with 2
    expect("", 2, "");
    expect("params", 2, "");
    expect("params --depth 0", 2, "");
    expect("intervals --depth 4 --level 9", 2, "");
    expect("eval --depth 8 --x 0.5", 2, "");
    expect("eval --depth 8 --x 1/2 --map h", 2, "");
    expect("verify --depth 4 --max-level 9", 2, "");
    // an invalid similitude system is a domain result, not a usage error
    expect("similitude --maps '1/2,0;1/2,1/2' --depth 3", 1, "FAIL");

    std::printf("%d failures\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
