// Command-line front end: sequence generation, holonomy and interferometry
// experiments, convergence studies, machine-readable JSON reports and CSV
// tables. Exit codes: 0 success, 2 input/parse error, 3 undefined holonomy or
// phase, 4 internal numerical failure.

#include "holo/coherent.hpp"
#include "holo/continuum.hpp"
#include "holo/errors.hpp"
#include "holo/interferometer.hpp"
#include "holo/kernels.hpp"
#include "holo/sequence_io.hpp"
#include "holo/uhlmann.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace holo;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitNumerical = 4;

struct Global {
    double tol_rank = 1e-10;
    std::uint64_t seed = 1;
    std::string output; // report destination; empty = stdout

    Tol tol() const {
        Tol t;
        t.rank_rel = tol_rank;
        return t;
    }
    json config() const {
        return {{"tol", {{"rank_rel", tol_rank}, {"abs_floor", Tol{}.abs_floor}}},
                {"seed", seed},
                {"kernels", std::string(kernels::backend_name(kernels::active_backend()))}};
    }
};

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* kind_name(HolonomyKind k) {
    switch (k) {
    case HolonomyKind::FullUnitary: return "full_unitary";
    case HolonomyKind::PartialIsometry: return "partial_isometry";
    case HolonomyKind::Undefined: return "undefined";
    }
    return "?";
}

const char* tag_name(OverlapTag t) {
    switch (t) {
    case OverlapTag::Full: return "full";
    case OverlapTag::Partial: return "partial";
    case OverlapTag::Orthogonal: return "orthogonal";
    }
    return "?";
}

json holonomy_to_json(const HolonomyResult& h) {
    json j;
    j["kind"] = kind_name(h.kind);
    j["rank"] = h.rank;
    if (h.matrix) j["matrix"] = json_from_matrix(*h.matrix);
    j["positive_spectrum"] = h.positive_spectrum;
    json links = json::array();
    for (const OverlapClass& oc : h.links)
        links.push_back({{"tag", tag_name(oc.tag)},
                         {"rank", oc.rank},
                         {"singular_values", oc.singular_values}});
    j["links"] = std::move(links);
    if (h.vanishing_link) j["vanishing_link"] = *h.vanishing_link;
    return j;
}

void emit_report(const Global& g, json& report,
                 std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
    if (g.output.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream out(g.output);
        if (!out) throw input_error("cannot open report file '" + g.output + "'");
        out << report.dump(2) << '\n';
    }
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open csv file '" + path + "'");
    return out;
}

std::vector<std::size_t> parse_m_list(const std::string& items) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < items.size()) {
        std::size_t next = items.find(',', pos);
        if (next == std::string::npos) next = items.size();
        const std::string tok = items.substr(pos, next - pos);
        try {
            const long v = std::stol(tok);
            if (v < 2) throw input_error("--m-list entries must be >= 2");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::invalid_argument&) {
            throw input_error("--m-list: cannot parse '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw input_error("--m-list: value out of range in '" + tok + "'");
        }
        pos = next + 1;
    }
    if (out.empty()) throw input_error("--m-list: empty");
    return out;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const Global& g, const std::string& kind, std::size_t n, std::size_t k,
            std::size_t m, const std::string& path_name, const std::string& out_file,
            std::chrono::steady_clock::time_point start) {
    std::optional<SubspaceSequence> seq;
    if (kind == "random") {
        seq = random_sequence(n, k, m, g.seed);
    } else if (kind == "path-sample") {
        const SmoothFramePath path = builtin_path(path_name);
        seq = discretize(path, m);
        n = path.ambient_dim();
        k = path.rank();
    } else if (kind == "partial-pair") {
        if (k + 1 > n) throw input_error("partial-pair: need k < n");
        const Frame f1 = random_frame(n, k, g.seed);
        // share all but the last direction; replace it by a complement vector
        detail::NormalSampler rng(g.seed + 0xabcdefULL);
        std::vector<cplx> v(n);
        for (auto& z : v) z = cplx(rng.next(), rng.next());
        for (std::size_t c = 0; c < k; ++c) {
            const auto col = f1.column(c);
            cplx proj = 0.0;
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(col[i]) * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * col[i];
        }
        double nrm = 0.0;
        for (const cplx& z : v) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        ComplexMatrix f2(n, k);
        for (std::size_t c = 0; c + 1 < k; ++c) f2.set_column(c, f1.column(c));
        for (std::size_t i = 0; i < n; ++i) f2(i, k - 1) = v[i] / nrm;
        seq = SubspaceSequence({f1, Frame(std::move(f2))});
    } else {
        throw input_error("gen: unknown kind '" + kind + "'");
    }

    SequenceFile sf = SequenceFile::from_sequence(
        *seq, json{{"kind", kind}, {"seed", g.seed}, {"path", path_name}});
    write_sequence_file(out_file, sf);

    json report;
    report["command"] = "gen";
    report["config"] = g.config();
    report["config"]["kind"] = kind;
    report["config"]["path"] = path_name;
    report["results"] = {{"output", out_file},
                         {"ambient_dim", sf.ambient_dim},
                         {"rank", sf.rank},
                         {"frames", sf.frames.size()}};
    emit_report(g, report, start);
    return kExitOk;
}

// ------------------------------------------------------------ holonomy

int cmd_holonomy(const Global& g, const std::string& input, const std::string& mode,
                 bool open, std::chrono::steady_clock::time_point start) {
    if (mode != "direct" && mode != "iterative" && mode != "both")
        throw input_error("holonomy: --mode must be direct, iterative or both");
    const SubspaceSequence seq = read_sequence_file(input).to_sequence(g.tol());
    const Closure closure = open ? Closure::Open : Closure::Closed;

    json results;
    int exit_code = kExitOk;
    std::optional<HolonomyResult> hd, hi;
    if (mode == "direct" || mode == "both") {
        hd = direct_holonomy(seq, g.tol(), closure);
        results["direct"] = holonomy_to_json(*hd);
        if (hd->kind == HolonomyKind::Undefined) exit_code = kExitUndefined;
    }
    if (mode == "iterative" || mode == "both") {
        hi = iterative_holonomy(seq, g.tol(), closure);
        results["iterative"] = holonomy_to_json(*hi);
        if (hi->kind == HolonomyKind::Undefined) exit_code = kExitUndefined;
    }
    if (hd && hi && hd->matrix && hi->matrix)
        results["frobenius_distance"] = frobenius_distance(*hd->matrix, *hi->matrix);

    json report;
    report["command"] = "holonomy";
    report["config"] = g.config();
    report["config"]["input"] = input;
    report["config"]["mode"] = mode;
    report["config"]["closure"] = open ? "open" : "closed";
    report["results"] = std::move(results);
    emit_report(g, report, start);
    return exit_code;
}

// -------------------------------------------------------- pancharatnam

int cmd_pancharatnam(const Global& g, const std::string& input, std::size_t grid,
                     const std::string& csv, std::chrono::steady_clock::time_point start) {
    const SubspaceSequence seq = read_sequence_file(input).to_sequence(g.tol());
    if (seq.rank() != 1) throw input_error("pancharatnam: K = 1 sequence required");

    json report;
    report["command"] = "pancharatnam";
    report["config"] = g.config();
    report["config"]["input"] = input;
    report["config"]["grid"] = grid;

    int exit_code = kExitOk;
    try {
        const cplx gd = pancharatnam_direct(seq, g.tol());
        const PancharatnamChain chain = pancharatnam_iterative(seq, g.tol());

        double best = -1.0, best_kappa = 0.0;
        std::ofstream csv_out;
        if (!csv.empty()) {
            csv_out = open_csv(csv);
            csv_out << "kappa,intensity\n";
        }
        for (std::size_t i = 0; i < grid; ++i) {
            const double kappa = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(grid);
            const double intensity = abelian_direct_intensity(seq, kappa);
            if (!csv.empty()) csv_out << fmt17(kappa) << ',' << fmt17(intensity) << '\n';
            if (intensity > best) {
                best = intensity;
                best_kappa = kappa;
            }
        }

        report["results"] = {
            {"gamma_direct", {gd.real(), gd.imag()}},
            {"gamma_direct_arg", std::arg(gd)},
            {"gamma_iterative", {chain.phase.real(), chain.phase.imag()}},
            {"accumulated_phases", chain.accumulated},
            {"direct_vs_iterative", std::abs(gd - chain.phase)},
            {"argmax_kappa", best_kappa},
            {"argmax_intensity", best},
            {"argmax_vs_arg_gamma",
             std::abs(std::remainder(best_kappa - std::arg(gd), 2.0 * kPi))},
        };
        if (!csv.empty()) report["results"]["csv"] = csv;
    } catch (const undefined_error& e) {
        report["results"] = {{"undefined", e.what()}};
        exit_code = kExitUndefined;
    }
    emit_report(g, report, start);
    return exit_code;
}

// ------------------------------------------------------------ coherent

json four_point_to_json(const FourPointResult& r) {
    json j;
    j["closed_form"] = {{"chi0", r.closed.chi0},
                        {"chi1", r.closed.chi1},
                        {"eta0", r.closed.eta0},
                        {"eta0_arg", r.closed.eta0_arg},
                        {"q_d", r.closed.q_d},
                        {"q_i", r.closed.q_i},
                        {"s_gt_r_32", r.closed.s_gt_r_32},
                        {"s_gt_r_14", r.closed.s_gt_r_14}};
    if (r.closed.u_d) j["closed_form"]["u_d"] = json_from_matrix(*r.closed.u_d);
    if (r.closed.u_i) j["closed_form"]["u_i"] = json_from_matrix(*r.closed.u_i);
    j["oracle"] = {{"direct", holonomy_to_json(r.oracle_direct)},
                   {"iterative", holonomy_to_json(r.oracle_iterative)},
                   {"direct_vs_iterative", r.oracle_d_vs_i}};
    json dev = {{"link21", r.dev_link21},
                {"link32", r.dev_link32},
                {"link43", r.dev_link43},
                {"link14", r.dev_link14}};
    if (r.dev_direct) dev["direct"] = *r.dev_direct;
    if (r.dev_direct_arg) dev["direct_arg"] = *r.dev_direct_arg;
    if (r.dev_iterative) dev["iterative"] = *r.dev_iterative;
    j["deviations"] = std::move(dev);
    return j;
}

int cmd_coherent(const Global& g, double jj, double theta0, double theta1, double phi0,
                 double phi1, std::size_t grid, const std::string& csv,
                 std::chrono::steady_clock::time_point start) {
    const int twice_j = static_cast<int>(std::lround(2.0 * jj));
    if (std::abs(2.0 * jj - twice_j) > 1e-9 || twice_j < 1)
        throw input_error("coherent: --j must be a positive half-integer");
    const SpinSystem sys(twice_j);

    json report;
    report["command"] = "coherent";
    report["config"] = g.config();
    report["config"]["j"] = jj;

    int exit_code = kExitOk;
    if (grid == 0) {
        const FourPointResult r = four_point_example(sys, theta0, theta1, phi0, phi1, g.tol());
        report["config"]["theta0"] = theta0;
        report["config"]["theta1"] = theta1;
        report["config"]["phi0"] = phi0;
        report["config"]["phi1"] = phi1;
        report["results"] = four_point_to_json(r);
        const bool closed_undefined = !r.closed.u_d || !r.closed.u_i;
        const bool oracle_undefined =
            r.oracle_direct.kind == HolonomyKind::Undefined ||
            r.oracle_iterative.kind == HolonomyKind::Undefined;
        if (closed_undefined || oracle_undefined) exit_code = kExitUndefined;
    } else {
        if (csv.empty()) throw input_error("coherent: grid mode requires --csv");
        std::ofstream out = open_csv(csv);
        out << "j,theta0,theta1,dphi,chi0,chi1,eta0,eta0_arg,q_d,q_i,"
               "s_gt_r_32,s_gt_r_14,dev_link21,dev_link32,dev_link43,dev_link14,"
               "dev_direct,dev_direct_arg,dev_iterative,oracle_d_vs_i,"
               "oracle_direct_kind,oracle_iterative_kind\n";

        const double th_lo = 0.05, th_hi = kPi / 2.0 - 0.05;
        std::size_t cells = 0, match_link32 = 0, match_link14 = 0, match_ui = 0,
                    match_ud = 0, match_ud_arg = 0, regime_ui = 0;
        for (std::size_t a = 0; a < grid; ++a) {
            const double th0 =
                th_lo + (th_hi - th_lo) * (static_cast<double>(a) + 0.5) / static_cast<double>(grid);
            for (std::size_t b = 0; b < 2 * grid; ++b) {
                const double dphi = -kPi + 0.1 +
                                    (2.0 * kPi - 0.2) * (static_cast<double>(b) + 0.5) /
                                        (2.0 * static_cast<double>(grid));
                if (std::abs(dphi) < 0.05) continue;
                const FourPointResult r =
                    four_point_example(sys, th0, th0 + kPi / 2.0, 0.0, dphi, g.tol());
                ++cells;
                const bool m32 = r.dev_link32 <= 1e-9;
                const bool m14 = r.dev_link14 <= 1e-9;
                const bool mui = r.dev_iterative && *r.dev_iterative <= 1e-9;
                const bool mud = r.dev_direct && *r.dev_direct <= 1e-9;
                const bool muda = r.dev_direct_arg && *r.dev_direct_arg <= 1e-9;
                match_link32 += m32;
                match_link14 += m14;
                match_ui += mui;
                match_ud += mud;
                match_ud_arg += muda;
                regime_ui += (!r.closed.s_gt_r_32 && !r.closed.s_gt_r_14 && mui) ? 1 : 0;

                out << fmt17(jj) << ',' << fmt17(th0) << ',' << fmt17(th0 + kPi / 2.0) << ','
                    << fmt17(dphi) << ',' << fmt17(r.closed.chi0) << ',' << fmt17(r.closed.chi1)
                    << ',' << fmt17(r.closed.eta0) << ',' << fmt17(r.closed.eta0_arg) << ','
                    << fmt17(r.closed.q_d) << ',' << fmt17(r.closed.q_i) << ','
                    << (r.closed.s_gt_r_32 ? 1 : 0) << ',' << (r.closed.s_gt_r_14 ? 1 : 0) << ','
                    << fmt17(r.dev_link21) << ',' << fmt17(r.dev_link32) << ','
                    << fmt17(r.dev_link43) << ',' << fmt17(r.dev_link14) << ','
                    << (r.dev_direct ? fmt17(*r.dev_direct) : "") << ','
                    << (r.dev_direct_arg ? fmt17(*r.dev_direct_arg) : "") << ','
                    << (r.dev_iterative ? fmt17(*r.dev_iterative) : "") << ','
                    << fmt17(r.oracle_d_vs_i) << ',' << kind_name(r.oracle_direct.kind) << ','
                    << kind_name(r.oracle_iterative.kind) << '\n';
            }
        }
        report["results"] = {
            {"csv", csv},
            {"cells", cells},
            {"match_link32", match_link32},
            {"match_link14", match_link14},
            {"match_u_iterative", match_ui},
            {"match_u_direct", match_ud},
            {"match_u_direct_arg", match_ud_arg},
            {"match_u_iterative_in_diag_regime", regime_ui},
            {"regime_statement",
             "The diagonal closed forms for the second and fourth relative phases hold "
             "exactly where |R| >= |S| on the corresponding link (the opposite of the "
             "stated |S| > |R| condition), and the closed-form iterative holonomy is "
             "reproduced on the intersection of those regions. The closed-form direct "
             "holonomy requires eta0 taken as the full argument "
             "atan2(r0 sin(j chi0), r0 cos(j chi0) + s0) (opposite sign, full branch); "
             "with the principal-value arctan expression it matches only where that "
             "argument vanishes."},
        };
    }
    emit_report(g, report, start);
    return exit_code;
}

// ------------------------------------------------------------ converge

int cmd_converge(const Global& g, const std::string& path_name, const std::string& m_list,
                 std::size_t steps, const std::string& csv,
                 std::chrono::steady_clock::time_point start) {
    const SmoothFramePath path = builtin_path(path_name);
    const ConvergenceTable table = convergence_study(path, parse_m_list(m_list), steps, g.tol());

    json rows = json::array();
    for (const ConvergenceRow& row : table.rows) {
        json r{{"m", row.m}};
        r["dev_direct"] = row.dev_direct ? json(*row.dev_direct) : json();
        r["dev_iterative"] = row.dev_iterative ? json(*row.dev_iterative) : json();
        rows.push_back(std::move(r));
    }
    if (!csv.empty()) {
        std::ofstream out = open_csv(csv);
        out << "m,dev_direct,dev_iterative\n";
        for (const ConvergenceRow& row : table.rows)
            out << row.m << ',' << (row.dev_direct ? fmt17(*row.dev_direct) : "") << ','
                << (row.dev_iterative ? fmt17(*row.dev_iterative) : "") << '\n';
    }

    json report;
    report["command"] = "converge";
    report["config"] = g.config();
    report["config"]["path"] = path_name;
    report["config"]["steps"] = steps;
    report["results"] = {{"rows", std::move(rows)},
                         {"reference", json_from_matrix(table.reference)},
                         {"endpoint_phase", json_from_matrix(table.endpoint_phase)}};
    if (!csv.empty()) report["results"]["csv"] = csv;
    emit_report(g, report, start);
    return kExitOk;
}

// ---------------------------------------------------------- maximality

int cmd_maximality(const Global& g, const std::string& input, std::size_t trials,
                   std::chrono::steady_clock::time_point start) {
    const SubspaceSequence seq = read_sequence_file(input).to_sequence(g.tol());
    const MaximalityReport rep = verify_maximality(seq, trials, g.seed, g.tol());

    json report;
    report["command"] = "maximality";
    report["config"] = g.config();
    report["config"]["input"] = input;
    report["config"]["trials"] = trials;
    double worst_step = 0.0;
    for (double s : rep.step_gaps) worst_step = std::max(worst_step, s);
    report["results"] = {{"trials", rep.trials},
                         {"violations", rep.violations},
                         {"max_excess", rep.max_excess},
                         {"saturation_gap", rep.saturation_gap},
                         {"step_gaps", rep.step_gaps},
                         {"worst_step_gap", worst_step}};
    emit_report(g, report, start);
    return rep.violations == 0 ? kExitOk : kExitNumerical;
}

// ------------------------------------------------------------- uhlmann

int cmd_uhlmann(const Global& g, const std::string& input,
                std::chrono::steady_clock::time_point start) {
    const SubspaceSequence seq = read_sequence_file(input).to_sequence(g.tol());

    json report;
    report["command"] = "uhlmann";
    report["config"] = g.config();
    report["config"]["input"] = input;

    int exit_code = kExitOk;
    try {
        const ComplexMatrix uhl = uhlmann_holonomy(seq, g.tol());
        report["results"] = {{"uhlmann_matrix", json_from_matrix(uhl)},
                             {"compare_iterative", compare_iterative(seq, g.tol())}};
    } catch (const undefined_error& e) {
        report["results"] = {{"undefined", e.what()}};
        exit_code = kExitUndefined;
    }
    emit_report(g, report, start);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete quantum holonomies of subspace sequences"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--tol", g.tol_rank, "relative rank tolerance")
        ->envname("HOLO_TOL")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for all randomized operations")
        ->envname("HOLO_SEED")
        ->capture_default_str();
    app.add_option("--output", g.output, "report file (default: stdout)")->envname("HOLO_OUTPUT");

    const auto start = std::chrono::steady_clock::now();
    int exit_code = kExitOk;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a sequence file");
    gen->fallthrough();
    std::string gen_kind = "random", gen_path = "qubit-open-arc", gen_out;
    std::size_t gen_n = 4, gen_k = 2, gen_m = 4;
    gen->add_option("--kind", gen_kind, "random | path-sample | partial-pair")
        ->capture_default_str();
    gen->add_option("--n", gen_n, "ambient dimension")->capture_default_str();
    gen->add_option("--k", gen_k, "subspace rank")->capture_default_str();
    gen->add_option("--m", gen_m, "number of frames")->capture_default_str();
    gen->add_option("--path", gen_path, "built-in path for path-sample")->capture_default_str();
    gen->add_option("--out", gen_out, "sequence file to write")->required();
    gen->callback(
        [&] { exit_code = cmd_gen(g, gen_kind, gen_n, gen_k, gen_m, gen_path, gen_out, start); });

    // holonomy
    auto* hol = app.add_subcommand("holonomy", "direct/iterative holonomy of a sequence file");
    hol->fallthrough();
    std::string hol_input, hol_mode = "both";
    bool hol_open = false;
    hol->add_option("--input", hol_input, "sequence file")->required();
    hol->add_option("--mode", hol_mode, "direct | iterative | both")->capture_default_str();
    hol->add_flag("--open", hol_open, "omit the closing leg back to the first subspace");
    hol->callback([&] { exit_code = cmd_holonomy(g, hol_input, hol_mode, hol_open, start); });

    // pancharatnam
    auto* pan = app.add_subcommand("pancharatnam", "K = 1 phases and fringe scan");
    pan->fallthrough();
    std::string pan_input, pan_csv;
    std::size_t pan_grid = 10000;
    pan->add_option("--input", pan_input, "sequence file (rank 1)")->required();
    pan->add_option("--grid", pan_grid, "kappa scan resolution")->capture_default_str();
    pan->add_option("--csv", pan_csv, "write the fringe scan to this CSV");
    pan->callback([&] { exit_code = cmd_pancharatnam(g, pan_input, pan_grid, pan_csv, start); });

    // coherent
    auto* coh = app.add_subcommand("coherent", "angular-momentum four-point example");
    coh->fallthrough();
    double coh_j = 1.0, coh_t0 = 0.8, coh_t1 = 0.8 + kPi / 2.0, coh_p0 = 0.0, coh_p1 = 2.0;
    std::size_t coh_grid = 0;
    std::string coh_csv;
    coh->add_option("--j", coh_j, "spin quantum number (integer for the four-point example)")
        ->capture_default_str();
    coh->add_option("--theta0", coh_t0, "first polar angle")->capture_default_str();
    coh->add_option("--theta1", coh_t1, "second polar angle (theta0 +- pi/2)")
        ->capture_default_str();
    coh->add_option("--phi0", coh_p0, "first azimuth")->capture_default_str();
    coh->add_option("--phi1", coh_p1, "second azimuth")->capture_default_str();
    coh->add_option("--grid", coh_grid, "grid mode: points per theta axis (0 = single point)")
        ->capture_default_str();
    coh->add_option("--csv", coh_csv, "grid CSV output");
    coh->callback([&] {
        exit_code =
            cmd_coherent(g, coh_j, coh_t0, coh_t1, coh_p0, coh_p1, coh_grid, coh_csv, start);
    });

    // converge
    auto* con = app.add_subcommand("converge", "discrete-to-continuum convergence study");
    con->fallthrough();
    std::string con_path = "coherent-j1-arc",
                con_mlist = "8,16,32,64,128,256,512,1024,2048,4096", con_csv;
    std::size_t con_steps = 8192;
    con->add_option("--path", con_path, "built-in path name")->capture_default_str();
    con->add_option("--m-list", con_mlist, "comma-separated sequence lengths")
        ->capture_default_str();
    con->add_option("--steps", con_steps, "reference integrator steps")->capture_default_str();
    con->add_option("--csv", con_csv, "table CSV output");
    con->callback(
        [&] { exit_code = cmd_converge(g, con_path, con_mlist, con_steps, con_csv, start); });

    // maximality
    auto* mx = app.add_subcommand("maximality", "monte-carlo check of the intensity maxima");
    mx->fallthrough();
    std::string mx_input;
    std::size_t mx_trials = 1000;
    mx->add_option("--input", mx_input, "sequence file (full overlaps)")->required();
    mx->add_option("--trials", mx_trials, "random arm unitaries to test")->capture_default_str();
    mx->callback([&] { exit_code = cmd_maximality(g, mx_input, mx_trials, start); });

    // uhlmann
    auto* uhl = app.add_subcommand("uhlmann", "Uhlmann holonomy and the iterative identity");
    uhl->fallthrough();
    std::string uhl_input;
    uhl->add_option("--input", uhl_input, "sequence file")->required();
    uhl->callback([&] { exit_code = cmd_uhlmann(g, uhl_input, start); });

    // paths listing helper
    auto* paths = app.add_subcommand("paths", "list built-in smooth paths");
    paths->callback([&] {
        for (const std::string& name : builtin_path_names()) std::cout << name << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const undefined_error& e) {
        std::cerr << "undefined: " << e.what() << '\n';
        return kExitUndefined;
    } catch (const error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return exit_code;
}
