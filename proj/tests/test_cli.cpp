// End-to-end checks of the command-line tool: spawns the real binary, parses
// its reports, and verifies exit codes and reproducibility.

#include "holo/sequence_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

#define CLI_CHECK(cond)                                                                  \
    do {                                                                                 \
        if (!(cond)) {                                                                   \
            ++g_failures;                                                                \
            std::cerr << "FAILED: " << #cond << " at " << __FILE__ << ':' << __LINE__   \
                      << '\n';                                                           \
        }                                                                                \
    } while (0)

struct RunResult {
    int exit_code;
    json report;
};

RunResult run(const std::string& args, const std::string& out_file) {
    const std::string cmd = g_binary + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r{-1, json()};
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    if (in) {
        try {
            in >> r.report;
        } catch (...) {
            r.report = json();
        }
    }
    return r;
}

json results_of(const json& report) {
    json j = report;
    j.erase("timing_ms"); // everything else must reproduce bit for bit
    return j;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <holo-binary>\n";
        return 1;
    }
    g_binary = argv[1];

    // gen + holonomy round trip, reproducible reports
    {
        auto gen = run("gen --kind random --n 4 --k 2 --m 4 --seed 7 --out /tmp/holo_seq.json",
                       "/tmp/holo_gen.json");
        CLI_CHECK(gen.exit_code == 0);
        CLI_CHECK(gen.report["results"]["frames"] == 4);

        auto h1 = run("holonomy --input /tmp/holo_seq.json --mode both", "/tmp/holo_h1.json");
        auto h2 = run("holonomy --input /tmp/holo_seq.json --mode both", "/tmp/holo_h2.json");
        CLI_CHECK(h1.exit_code == 0);
        CLI_CHECK(h1.report["results"]["direct"]["kind"] == "full_unitary");
        CLI_CHECK(h1.report["results"]["iterative"]["kind"] == "full_unitary");
        CLI_CHECK(results_of(h1.report) == results_of(h2.report));
        CLI_CHECK(h1.report["results"].contains("frobenius_distance"));
    }

    // open-path variant runs and differs from the closed product in links
    {
        auto h = run("holonomy --input /tmp/holo_seq.json --open", "/tmp/holo_open.json");
        CLI_CHECK(h.exit_code == 0);
        CLI_CHECK(h.report["config"]["closure"] == "open");
        CLI_CHECK(h.report["results"]["direct"]["links"].size() == 3);
    }

    // orthogonal pair: structured undefined, exit code 3
    {
        auto gen = run("gen --kind partial-pair --n 3 --k 1 --seed 3 --out /tmp/holo_orth.json",
                       "/tmp/holo_gen2.json");
        CLI_CHECK(gen.exit_code == 0);
        auto h = run("holonomy --input /tmp/holo_orth.json", "/tmp/holo_h3.json");
        CLI_CHECK(h.exit_code == 3);
        CLI_CHECK(h.report["results"]["direct"]["kind"] == "undefined");
        CLI_CHECK(h.report["results"]["direct"].contains("vanishing_link"));
    }

    // partial pair with k = 2: defined partial isometry, exit code 0
    {
        run("gen --kind partial-pair --n 4 --k 2 --seed 5 --out /tmp/holo_part.json",
            "/tmp/holo_gen3.json");
        auto h = run("holonomy --input /tmp/holo_part.json", "/tmp/holo_h4.json");
        CLI_CHECK(h.exit_code == 0);
        CLI_CHECK(h.report["results"]["direct"]["kind"] == "partial_isometry");
        CLI_CHECK(h.report["results"]["direct"]["rank"] == 1);
    }

    // malformed input file: exit code 2
    {
        std::ofstream bad("/tmp/holo_bad_seq.json");
        bad << "{\"ambient_dim\": 2}";
        bad.close();
        auto h = run("holonomy --input /tmp/holo_bad_seq.json", "/tmp/holo_h5.json");
        CLI_CHECK(h.exit_code == 2);
        auto missing = run("holonomy --input /tmp/holo_nonexistent.json", "/tmp/holo_h6.json");
        CLI_CHECK(missing.exit_code == 2);
        auto badflag = run("holonomy --input /tmp/holo_seq.json --mode sideways",
                           "/tmp/holo_h7.json");
        CLI_CHECK(badflag.exit_code == 2);
    }

    // pancharatnam on the z/x/y triangle: phase -pi/4, scan matches
    {
        const double s = 1.0 / std::sqrt(2.0);
        json tri{{"ambient_dim", 2},
                 {"rank", 1},
                 {"frames",
                  json::array({json::array({json::array({json::array({1.0, 0.0}),
                                                         json::array({0.0, 0.0})})}),
                               json::array({json::array({json::array({s, 0.0}),
                                                         json::array({s, 0.0})})}),
                               json::array({json::array({json::array({s, 0.0}),
                                                         json::array({0.0, s})})})})}};
        std::ofstream f("/tmp/holo_tri.json");
        f << tri.dump();
        f.close();
        auto p = run("pancharatnam --input /tmp/holo_tri.json --grid 10000 --csv /tmp/holo_tri.csv",
                     "/tmp/holo_p1.json");
        CLI_CHECK(p.exit_code == 0);
        const double arg = p.report["results"]["gamma_direct_arg"].get<double>();
        CLI_CHECK(std::abs(arg + 0.25 * 3.14159265358979323846) <= 1e-12);
        CLI_CHECK(p.report["results"]["direct_vs_iterative"].get<double>() <= 1e-12);
        CLI_CHECK(p.report["results"]["argmax_vs_arg_gamma"].get<double>() <=
                  2.0 * 3.14159265358979323846 / 10000.0 + 1e-12);
        std::ifstream csv("/tmp/holo_tri.csv");
        std::string header;
        std::getline(csv, header);
        CLI_CHECK(header == "kappa,intensity");

        // K = 2 input is rejected for the abelian command
        auto wrong = run("pancharatnam --input /tmp/holo_seq.json", "/tmp/holo_p2.json");
        CLI_CHECK(wrong.exit_code == 2);
    }

    // coherent single point: defined; q_i = 0 configuration: exit 3
    {
        auto c = run("coherent --j 1 --theta0 0.8 --theta1 2.3707963267948966 --phi0 0 --phi1 1.2",
                     "/tmp/holo_c1.json");
        CLI_CHECK(c.exit_code == 0);
        CLI_CHECK(c.report["results"]["deviations"]["iterative"].get<double>() <= 1e-10);

        // chi1 = pi/2: cos(theta1) tan(dphi/2) = 1 at theta1 = 2pi/3, dphi = 2 atan(1/cos)
        auto z = run("coherent --j 1 --theta0 0.5235987755982988 --theta1 2.0943951023931953 "
                     "--phi0 0 --phi1 -2.214297435588181",
                     "/tmp/holo_c2.json");
        CLI_CHECK(z.exit_code == 3);
        CLI_CHECK(!z.report["results"]["closed_form"].contains("u_i"));

        auto small = run("coherent --j 1 --grid 3 --csv /tmp/holo_grid.csv", "/tmp/holo_c3.json");
        CLI_CHECK(small.exit_code == 0);
        CLI_CHECK(small.report["results"]["match_u_iterative"].get<int>() > 0);
    }

    // converge: rows and csv
    {
        auto c = run("converge --path qubit-open-arc --m-list 8,16,32 --steps 512 "
                     "--csv /tmp/holo_conv.csv",
                     "/tmp/holo_c4.json");
        CLI_CHECK(c.exit_code == 0);
        CLI_CHECK(c.report["results"]["rows"].size() == 3);
        const double d0 = c.report["results"]["rows"][0]["dev_direct"].get<double>();
        const double d2 = c.report["results"]["rows"][2]["dev_direct"].get<double>();
        CLI_CHECK(d2 < d0);
        auto badpath = run("converge --path no-such-path", "/tmp/holo_c5.json");
        CLI_CHECK(badpath.exit_code == 2);
    }

    // maximality monte carlo through the CLI
    {
        auto m = run("maximality --input /tmp/holo_seq.json --trials 200 --seed 4",
                     "/tmp/holo_m1.json");
        CLI_CHECK(m.exit_code == 0);
        CLI_CHECK(m.report["results"]["violations"] == 0);
        CLI_CHECK(m.report["results"]["worst_step_gap"].get<double>() <= 1e-10);
        // a partial sequence violates the full-overlap precondition
        auto bad = run("maximality --input /tmp/holo_part.json", "/tmp/holo_m2.json");
        CLI_CHECK(bad.exit_code == 2);
    }

    // uhlmann identity through the CLI
    {
        auto u = run("uhlmann --input /tmp/holo_seq.json", "/tmp/holo_u1.json");
        CLI_CHECK(u.exit_code == 0);
        CLI_CHECK(u.report["results"]["compare_iterative"].get<double>() <= 1e-10);

        // partial pair is inadmissible: exit 3
        auto bad = run("uhlmann --input /tmp/holo_part.json", "/tmp/holo_u2.json");
        CLI_CHECK(bad.exit_code == 3);
        CLI_CHECK(bad.report["results"].contains("undefined"));
    }

    // --output writes the report to a file instead of stdout
    {
        auto r = run("holonomy --input /tmp/holo_seq.json --output /tmp/holo_rep.json",
                     "/tmp/holo_stdout.json");
        CLI_CHECK(r.exit_code == 0);
        std::ifstream rep("/tmp/holo_rep.json");
        json j;
        rep >> j;
        CLI_CHECK(j["results"]["direct"]["kind"] == "full_unitary");
    }

    // seed flows through the environment as well as the flag
    {
        auto a = run("gen --kind random --n 3 --k 1 --m 2 --seed 11 --out /tmp/holo_sa.json",
                     "/tmp/holo_g4.json");
        const int status = std::system((("HOLO_SEED=11 " + g_binary) +
                                        " gen --kind random --n 3 --k 1 --m 2 --out /tmp/holo_sb.json"
                                        " > /dev/null 2>&1")
                                           .c_str());
        CLI_CHECK(WIFEXITED(status) && WEXITSTATUS(status) == 0);
        std::ifstream fa("/tmp/holo_sa.json"), fb("/tmp/holo_sb.json");
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        CLI_CHECK(sa.str() == sb.str());
        (void)a;
    }

    if (g_failures == 0) {
        std::puts("test_cli: all checks passed");
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " checks failed\n";
    return 1;
}
