// Command line front end: solve an instance, self-verify against brute
// force, or turn a saved frontier into plot-ready columns.

#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <moqc/moqc.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTimeout = 4;
constexpr int kExitMismatch = 5;

struct SolveOpts {
    std::string path;
    std::string format = "auto";
    std::string strategy = "three-phase";
    std::string out_json;
    std::string out_report;
    double time_limit = 3600.0;
    int precision = 6;
    bool quiet = false;
};

void print_mos(const moqc::Graph& g, const moqc::MosResult& res, int precision) {
    const moqc::LabeledFrontier& f =
        res.report.timed_out ? res.prefilter : res.frontier;
    std::cout << "strategy " << res.report.strategy << ": " << f.size()
              << " subgraph points";
    if (!res.report.timed_out)
        std::cout << " (omega = " << res.report.omega_hat << "), " << res.moqc.size()
                  << " density points";
    std::cout << std::fixed << std::setprecision(3) << ", " << res.report.t_total << "s";
    if (res.report.timed_out) std::cout << " [TIME LIMIT, partial]";
    std::cout << "\n";
    std::cout << std::setprecision(precision);
    for (const auto& e : f.entries()) {
        std::cout << "  k=" << e.p.k << " m=" << e.p.m;
        if (e.p.k >= 2) {
            moqc::Rational d(2 * e.p.m, (long long)e.p.k * (e.p.k - 1));
            std::cout << " density=" << d.to_double() << " (" << d.to_string() << ")";
        }
        std::cout << " [" << to_string(e.prov) << "/" << to_string(e.cert) << "]\n";
    }
    if (!res.moqc.empty()) {
        std::cout << "densest subgraphs per cardinality:\n";
        for (const auto& e : res.moqc)
            std::cout << "  k=" << e.p.k << " density=" << e.p.density.to_double() << " ("
                      << e.p.density.to_string() << ")\n";
    }
}

void print_moqc(const moqc::MoqcResult& res, int precision) {
    std::cout << "strategy " << res.report.strategy << ": " << res.points.size()
              << " density points" << std::fixed << std::setprecision(3) << ", "
              << res.report.t_total << "s";
    if (res.report.timed_out) std::cout << " [TIME LIMIT, partial]";
    std::cout << "\n" << std::setprecision(precision);
    for (const auto& e : res.points)
        std::cout << "  k=" << e.p.k << " density=" << e.p.density.to_double() << " ("
                  << e.p.density.to_string() << ") m=" << e.m << "\n";
}

int run_solve(const SolveOpts& opt) {
    moqc::Graph g = moqc::load_graph(opt.path, moqc::parse_format(opt.format));
    if (!opt.quiet)
        std::cout << "instance " << opt.path << ": n=" << g.n << " m=" << g.m << "\n";

    moqc::Budget budget =
        opt.time_limit > 0 ? moqc::Budget::seconds(opt.time_limit) : moqc::Budget::unlimited();
    moqc::Strategy strat = moqc::parse_strategy(opt.strategy);

    bool timed_out = false;
    nlohmann::json doc;
    std::string csv;
    if (moqc::strategy_is_mos(strat)) {
        moqc::MosResult res = moqc::solve_mos(g, strat, &budget);
        timed_out = res.report.timed_out;
        doc = moqc::frontier_to_json(g, opt.path, res);
        csv = moqc::report_csv(res.report);
        if (!opt.quiet) print_mos(g, res, opt.precision);
    } else {
        moqc::MoqcResult res = moqc::solve_moqc(g, strat, &budget);
        timed_out = res.report.timed_out;
        doc = moqc::frontier_to_json(g, opt.path, res);
        csv = moqc::report_csv(res.report);
        if (!opt.quiet) print_moqc(res, opt.precision);
    }
    if (!opt.out_json.empty()) moqc::write_text_file(opt.out_json, doc.dump(2) + "\n");
    if (!opt.out_report.empty()) moqc::write_text_file(opt.out_report, csv);
    if (timed_out) {
        std::cerr << "time limit of " << opt.time_limit << "s exceeded; results are partial\n";
        return kExitTimeout;
    }
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& format, int max_n) {
    moqc::Graph g = moqc::load_graph(path, moqc::parse_format(format));
    auto checks = moqc::run_verification(g, max_n);
    bool all = true;
    for (const auto& c : checks) {
        if (c.pass) {
            std::cout << "PASS " << c.name << "\n";
        } else {
            all = false;
            std::cout << "FAIL " << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
    }
    return all ? kExitOk : kExitMismatch;
}

int run_plotdata(const std::string& path, const std::string& out, int precision) {
    nlohmann::json doc = moqc::load_json(path);
    std::string tsv = moqc::plotdata_tsv(doc, precision);
    if (out.empty())
        std::cout << tsv;
    else
        moqc::write_text_file(out, tsv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for the multiobjective quasi-clique problem"};
    app.require_subcommand(1);

    SolveOpts sopt;
    CLI::App* solve = app.add_subcommand("solve", "compute the full nondominated frontier");
    solve->add_option("graph", sopt.path, "input graph file")->required();
    solve->add_option("--format", sopt.format, "auto, edges, dimacs, or mtx");
    solve->add_option("--strategy", sopt.strategy,
                      "baseline, two-phase, three-phase, alg1, or alg2");
    solve->add_option("--out", sopt.out_json, "write the frontier as JSON");
    solve->add_option("--report", sopt.out_report, "write the run report as CSV");
    solve->add_option("--time-limit", sopt.time_limit, "seconds before giving up (0 = none)");
    solve->add_option("--precision", sopt.precision, "decimal digits for printed densities");
    solve->add_flag("--quiet", sopt.quiet, "suppress the text summary");

    std::string vpath, vformat = "auto";
    int vmaxn = 20;
    CLI::App* verify = app.add_subcommand("verify", "cross-check all solvers by enumeration");
    verify->add_option("graph", vpath, "input graph file")->required();
    verify->add_option("--format", vformat, "auto, edges, dimacs, or mtx");
    verify->add_option("--max-n", vmaxn, "refuse graphs with more vertices than this");

    std::string ppath, pout;
    int pprec = 6;
    CLI::App* plot = app.add_subcommand("plotdata", "frontier JSON to tab-separated columns");
    plot->add_option("frontier", ppath, "frontier JSON written by solve --out")->required();
    plot->add_option("--out", pout, "output file (default stdout)");
    plot->add_option("--precision", pprec, "decimal digits for densities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(sopt);
        if (verify->parsed()) return run_verify(vpath, vformat, vmaxn);
        if (plot->parsed()) return run_plotdata(ppath, pout, pprec);
    } catch (const moqc::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const moqc::timeout_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const moqc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const moqc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
