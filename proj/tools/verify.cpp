#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "padic/verify.hpp"

using namespace padic;
using namespace padic::verify;

namespace {

void print_report(std::ostream& os, const CheckReport& r) {
    os << status_name(r.status) << "  " << r.check_id << "  p=" << r.params.p << " d=" << r.params.d;
    if (!r.params.z.empty()) os << " z=" << r.params.z;
    if (r.params.c) os << " c=" << r.params.c;
    if (r.params.m) os << " m=" << r.params.m;
    if (r.params.n) os << " n=" << r.params.n;
    if (r.params.k) os << " k=" << r.params.k;
    if (!r.params.a.empty()) os << " a=" << r.params.a;
    if (!r.params.family.empty()) os << " family=" << r.params.family;
    os << "  agree mod p^" << r.agreement << " (requested p^" << r.requested << ")";
    if (r.wall_time_ms) os << "  " << *r.wall_time_ms << " ms";
    os << "\n";
    if (r.status != Status::pass || !r.note.empty()) {
        os << "    lhs: " << r.lhs << "\n    rhs: " << r.rhs << "\n";
        if (!r.note.empty()) os << "    note: " << r.note << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks p-adic reciprocity and polylogarithm identities numerically"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value config file");
    bool timings = false;
    app.add_flag("--timings", timings, "record wall times (reports are then not reproducible)");

    auto* run = app.add_subcommand("run", "run one check");
    std::string check_id;
    CheckParams P;
    std::string out_path;
    run->add_option("check_id", check_id, "check id")->required();
    run->add_option("--p", P.p, "odd prime")->default_val(3);
    run->add_option("--d", P.d, "degree of F over Q_p")->default_val(1);
    run->add_option("--z", P.z, "root of unity: 1, -1, integer residue, w or w^k");
    run->add_option("--c", P.c, "auxiliary integer c");
    run->add_option("--m", P.m, "weight m");
    run->add_option("--n", P.n, "level n");
    run->add_option("--k", P.k, "level k (eq-5-5)");
    run->add_option("--a", P.a, "Kummer input (prop-5-1): teich, norm:<family> or an integer");
    run->add_option("--family", P.family, "unit family, e.g. cyclotomic_c(4), kza(5), one_minus_zT, products with *");
    run->add_option("--precision", P.M, "working precision M");
    run->add_option("--guard", P.guard, "guard digits");
    run->add_option("--out", out_path, "write the JSON report here");

    auto* suite = app.add_subcommand("suite", "run a profile");
    std::string profile = "quick";
    int jobs = 1;
    std::string suite_out;
    bool list_only = false;
    suite->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    suite->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--out", suite_out, "write the JSON report here");
    suite->add_flag("--list", list_only, "only list the grid points");

    auto* list = app.add_subcommand("list", "list registry check ids");

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg = config_path.empty() ? Config{} : load_config(config_path);
        if (timings) cfg.timings = true;
        if (*list) {
            for (const auto& c : registry()) std::cout << c.id << "  " << c.citation << "\n";
            return 0;
        }
        if (*run) {
            std::vector<CheckReport> reports;
            for (const auto& id : expand_check_id(check_id)) reports.push_back(run_check(id, P, cfg));
            bool ok = true;
            for (const auto& r : reports) {
                print_report(std::cout, r);
                ok = ok && r.status != Status::fail;
            }
            if (!out_path.empty()) {
                std::ofstream(out_path) << suite_report(reports, "run", cfg).dump(2) << "\n";
            }
            return ok ? 0 : 1;
        }
        std::vector<GridPoint> grid = suite_grid(parse_profile(profile), cfg);
        if (list_only) {
            for (const auto& g : grid) std::cout << g.check_id << " " << nlohmann::json(g.params).dump() << "\n";
            return 0;
        }
        std::vector<CheckReport> reports = run_points(grid, cfg, jobs);
        int fail = 0;
        for (const auto& r : reports) {
            if (r.status == Status::fail) {
                ++fail;
                print_report(std::cout, r);
            }
        }
        nlohmann::json doc = suite_report(reports, profile, cfg);
        std::cout << "profile " << profile << ": " << doc["summary"].dump() << "\n";
        if (!suite_out.empty()) std::ofstream(suite_out) << doc.dump(2) << "\n";
        return fail ? 1 : 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
