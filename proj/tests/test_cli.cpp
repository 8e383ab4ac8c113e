// End-to-end checks of the command line binary. argv[1] is its path.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* tmp = "cli_test_stdout.txt";
    std::string cmd = cli + " " + args + " > " + tmp + " 2>cli_test_stderr.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    std::ifstream f(tmp, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

int run_shell(const std::string& pipeline) {
    int rc = std::system(pipeline.c_str());
    return (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
}

void check(bool cond, const std::string& what) {
    if (!cond) {
        ++failures;
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    }
}

void check_contains(const std::string& text, const std::string& needle, const std::string& what) {
    check(text.find(needle) != std::string::npos, what + " (missing '" + needle + "')");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <cli binary>\n", argv[0]);
        return 2;
    }
    cli = argv[1];

    // gen writes the edge list to stdout and the report to stderr.
    RunResult gen = run("gen petersen");
    check(gen.code == 0, "gen petersen exits 0");
    check(gen.out.substr(0, 4) == "0 1\n", "edge list starts at the first edge");
    check(gen.out.find("predicted") == std::string::npos, "report stays out of the edge list stream");

    // gen --out moves the report to stdout.
    RunResult gen_out = run("gen petersen --out cli_test_petersen.txt");
    check(gen_out.code == 0, "gen --out exits 0");
    check_contains(gen_out.out, "predicted: order=10 max_degree=3 diameter=2", "gen report predicts");
    check_contains(gen_out.out, "measured: order=10", "gen report measures");
    {
        std::ifstream f("cli_test_petersen.txt", std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        check(ss.str() == gen.out, "file output matches stream output");
    }

    // analyze, human form.
    RunResult an = run("analyze cli_test_petersen.txt");
    check(an.code == 0, "analyze exits 0");
    check_contains(an.out, "order: 10", "analyze order");
    check_contains(an.out, "aspl: 5/3 (1.66667)", "analyze aspl");
    check_contains(an.out, "moore_bound: 10", "analyze bound");
    check_contains(an.out, "moore_ratio: 100.00%", "analyze ratio");
    check_contains(an.out, "aspl_lower_bound: 5/3", "analyze floor");
    check_contains(an.out, "aspl_gap: 0/1 (0)", "analyze gap");

    // analyze, CSV form: fixed header and one row.
    RunResult csv = run("analyze cli_test_petersen.txt --csv --name petersen");
    check(csv.code == 0, "analyze --csv exits 0");
    check(csv.out ==
              "name,order,min_degree,max_degree,regular,connected,diameter,girth,aspl_num,aspl_den,aspl,"
              "moore_bound,moore_ratio_pct,aspl_lower_num,aspl_lower_den\n"
              "petersen,10,3,3,true,true,2,5,150,90,1.66667,10,100.00,15,9\n",
          "CSV output is exactly the documented header plus the row");

    // analyze a disconnected graph: absent fields stay empty/dashed.
    {
        std::ofstream f("cli_test_disc.txt");
        f << "0 1\n2 3\n";
    }
    RunResult disc = run("analyze cli_test_disc.txt");
    check(disc.code == 0, "analyze tolerates disconnected graphs");
    check_contains(disc.out, "connected: no", "disconnected flag");
    check_contains(disc.out, "diameter: -", "no diameter");
    RunResult disc_csv = run("analyze cli_test_disc.txt --csv --name d");
    check_contains(disc_csv.out, "d,4,1,1,true,false,,,,,,,,", "empty CSV cells when disconnected");

    // analyze respects an explicit order.
    RunResult tail = run("analyze cli_test_petersen.txt --order 12");
    check_contains(tail.out, "order: 12", "explicit order");
    check_contains(tail.out, "connected: no", "padded graph is disconnected");

    // verify: pass and fail paths.
    check(run("verify cli_test_petersen.txt --order 10 --degree 3 --diameter 2 --regular").code == 0,
          "verify passes a correct description");
    RunResult vf = run("verify cli_test_petersen.txt --diameter 1");
    check(vf.code == 1, "verify exits 1 on a wrong diameter");
    check_contains(vf.out, "FAIL", "verify prints the failing check");
    check_contains(vf.out, "verify: fail", "verify verdict");

    // verify via stdin.
    check(run_shell(cli + " gen petersen 2>/dev/null | " + cli + " verify --order 10 --regular >/dev/null 2>&1") ==
              0,
          "verify reads stdin");
    check(run_shell(cli + " gen dup brown-f 9 --delta 9 2>/dev/null | " + cli +
                    " verify --order 100 --degree 19 --diameter 2 >/dev/null 2>&1") == 0,
          "duplicated construction verifies at order 100");

    // Parse errors exit 2 with a line number on stderr.
    {
        std::ofstream f("cli_test_bad.txt");
        f << "0 1\nnot an edge\n";
    }
    RunResult bad = run("analyze cli_test_bad.txt");
    check(bad.code == 2, "analyze exits 2 on a parse error");
    {
        std::ifstream f("cli_test_stderr.txt", std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        check_contains(ss.str(), "line 2", "parse diagnostics name the line");
    }

    // bounds.
    RunResult bd = run("bounds --degree 8 --diameter 8");
    check(bd.code == 0, "bounds exits 0");
    check_contains(bd.out, "moore_bound: 7686401", "bounds value");
    check_contains(bd.out, "de_bruijn_bound: 65536", "shift-graph floor");
    check_contains(bd.out, "power_of_two_bound: -", "no power-of-two entry at diameter 8");
    check_contains(bd.out, "brown_bound: -", "no projective entry at diameter 8");
    RunResult bd2 = run("bounds --degree 8 --diameter 2");
    check_contains(bd2.out, "brown_bound: 57", "orthogonality floor");
    check_contains(bd2.out, "power_of_two_bound: 58", "power-of-two floor");
    RunResult bd57 = run("bounds --degree 57 --diameter 2");
    check_contains(bd57.out, "known_optimum: open (at most 3250)", "open case");

    // search shows ranked plans; --realize emits and certifies.
    RunResult se = run("search --order 256 --degree 22");
    check(se.code == 0, "search exits 0");
    check_contains(se.out, "kkg8", "search finds the product plan");
    check_contains(se.out, "a=4 b=8", "search ranks the tight parameters first");
    check(se.out.find("a=4 b=8") < se.out.find("a=2 b=16"), "tie-break prefers the smaller inner graph");
    check(run("search --order 10 --degree 3").code == 0, "empty search exits 0");
    check(run("search --order 10 --degree 3 --realize").code == 1, "empty search with --realize exits 1");
    RunResult re = run("search --order 100 --degree 20 --realize --out cli_test_plan.txt");
    check(re.code == 0, "realize certifies the top plan");
    check(run("verify cli_test_plan.txt --order 100 --diameter 2").code == 0, "realized edge list verifies");

    // table.
    RunResult tb = run("table --max-degree 6");
    check(tb.code == 0, "table exits 0");
    check_contains(tb.out, "degree,order,family,params,moore_bound,moore_ratio_pct", "table header");
    check_contains(tb.out, "6,32,kg8,n=4,37,86.49", "degree-6 row");
    check(run("table --max-degree 6 --diameter 3").code == 2, "unsupported diameter exits 2");

    // Usage errors exit 2.
    check(run("nosuchcommand").code == 2, "unknown subcommand exits 2");
    check(run("search --order 10").code == 2, "missing required option exits 2");
    check(run("gen nosuchfamily").code == 2, "unknown family exits 2");
    check(run("gen torus 4").code == 2, "missing parameter exits 2");

    std::remove("cli_test_stdout.txt");
    std::remove("cli_test_stderr.txt");
    std::remove("cli_test_petersen.txt");
    std::remove("cli_test_disc.txt");
    std::remove("cli_test_bad.txt");
    std::remove("cli_test_plan.txt");
    if (failures) {
        std::fprintf(stderr, "%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
