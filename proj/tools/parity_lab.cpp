// parity-lab: corpus runs, q-series identity checks and local reduction data
// for 2- and 3-isogeny parity computations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "paritylab/corpus.hpp"
#include "paritylab/tatecurve.hpp"

namespace {

using namespace paritylab;

std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) throw CLI::ValidationError("range must be LO:HI");
    try {
        long lo = std::stol(s.substr(0, pos));
        long hi = std::stol(s.substr(pos + 1));
        if (lo > hi) throw CLI::ValidationError("range must have LO <= HI");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("range must be LO:HI with integer bounds");
    }
}

nlohmann::json load_json_arg(const std::string& arg) {
    std::ifstream f(arg);
    if (f) return nlohmann::json::parse(f);
    return nlohmann::json::parse(arg);
}

int cmd_run(const std::string& family, const std::string& a_range,
            const std::string& b_range, const std::vector<long>& twists,
            const std::string& out, const std::string& csv, bool fail_fast,
            unsigned long seed, int jobs) {
    CorpusSpec spec;
    spec.family = family;
    std::tie(spec.a_lo, spec.a_hi) = parse_range(a_range);
    std::tie(spec.b_lo, spec.b_hi) = parse_range(b_range);
    if (!twists.empty()) spec.twists = twists;
    spec.seed = seed;

    RunSummary sum = run_corpus(spec, out, csv, fail_fast, jobs);
    std::cout << "family=" << spec.family << " curves=" << sum.total
              << " passed=" << sum.passed << " failed=" << sum.failed
              << " errored=" << sum.errored
              << " hypothesis_limited=" << sum.hypothesis_limited
              << " skipped_degenerate=" << sum.skips.degenerate
              << " skipped_additive_at_3=" << sum.skips.additive_at_3 << "\n";
    return (sum.failed || sum.errored) ? 1 : 0;
}

int cmd_series_check(int order) {
    TateIsogenyCheck chk = isogenous_tate_check(order);
    QSeries a4 = a4_series(order), a6 = a6_series(order);
    std::cout << "order " << order << "\n";
    std::cout << "a4        = " << a4.str() << "\n";
    std::cout << "a6        = " << a6.str() << "\n";
    std::cout << "a4_dagger = " << chk.a4_dagger.str() << "\n";
    std::cout << "a6_dagger = " << chk.a6_dagger.str() << "\n";
    TateFamilyData fam = tate_family_model(TorsionCase::uSqrtQ, order);
    std::cout << "sqrt(q) torsion case: a = " << fam.a.str()
              << ", b = " << fam.b.str() << ", delta = " << fam.delta.str() << "\n";
    std::cout << "series identity holds through q^" << order << "\n";
    return 0;
}

int cmd_local(const std::string& curve_arg, long prime) {
    Model m;
    try {
        m = model_from_json(load_json_arg(curve_arg));
    } catch (const std::exception& e) {
        std::cerr << "bad curve input: " << e.what() << "\n";
        return 2;
    }
    LocalReduction red = tate_algorithm(m, prime);
    std::cout << reduction_json(red).dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local root numbers, Selmer parities and q-expansion checks "
                 "for curves with a rational 2- or 3-isogeny"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "verify the local-global parity identity "
                                          "over a curve corpus");
    std::string family = "two", a_range = "-10:10", b_range = "-10:10";
    std::vector<long> twists;
    std::string out, csv;
    bool fail_fast = false;
    unsigned long seed = 0;
    int jobs = 1;
    run->add_option("--family", family, "curve family")
        ->check(CLI::IsMember({"two", "three"}));
    run->add_option("--a-range", a_range, "first parameter range LO:HI");
    run->add_option("--b-range", b_range, "second parameter range LO:HI");
    run->add_option("--twists", twists, "quadratic twist list (three-family)");
    run->add_option("--out", out, "JSONL output file")->required();
    run->add_option("--csv", csv, "CSV summary file");
    run->add_flag("--fail-fast", fail_fast, "stop at the first failing curve");
    run->add_option("--seed", seed, "spot-check RNG seed");
    run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* series = app.add_subcommand("series-check",
                                      "uniformized 2-isogeny series identity");
    int order = 10;
    series->add_option("--order", order, "truncation order in q")
        ->check(CLI::PositiveNumber);

    auto* local = app.add_subcommand("local", "reduction data at one prime");
    std::string curve_arg;
    long prime = 0;
    local->add_option("--curve", curve_arg, "curve JSON (inline or a file path)")
        ->required();
    local->add_option("--prime", prime, "residue characteristic")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return cmd_run(family, a_range, b_range, twists, out, csv, fail_fast,
                           seed, jobs);
        if (series->parsed()) return cmd_series_check(order);
        if (local->parsed()) return cmd_local(curve_arg, prime);
    } catch (const IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
