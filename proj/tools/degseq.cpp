// degseq: decide forcible / potential graphicity of degree-sequence boxes.
//
//   degseq check --mode forcible [--witness] [--explain] [FILE...]
//   degseq realize [FILE...]
//   degseq cross-check --seed 42 --count 1000 --n-range 1:5 --bound-max 4
//   degseq bench --n 1000,2000,4000 --trials 3
//
// Input is read from the named files, or stdin when none (or "-") is given.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degseq/bench.hpp"
#include "degseq/document.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"

using namespace degseq;

namespace {

std::string read_inputs(const std::vector<std::string>& files) {
    std::ostringstream all;
    if (files.empty()) {
        all << std::cin.rdbuf();
        return all.str();
    }
    for (const auto& f : files) {
        if (f == "-") {
            all << std::cin.rdbuf();
        } else {
            std::ifstream in(f);
            if (!in)
                throw InputError("cannot open " + f);
            all << in.rdbuf();
        }
        all << '\n';
    }
    return all.str();
}

InputFormat parse_format(const std::string& s) {
    if (s == "obj")
        return InputFormat::obj;
    if (s == "lines")
        return InputFormat::lines;
    return InputFormat::automatic;
}

// Parses every record; on any bad record prints one line per failure and
// returns nothing so the caller can exit 64.
std::optional<std::vector<InstanceDocument>> load_documents(const std::vector<std::string>& files,
                                                            const std::string& format) {
    std::vector<InputRecord> records;
    try {
        records = parse_documents(read_inputs(files), parse_format(format));
    } catch (const InputError& e) {
        std::cerr << "degseq: " << e.what() << '\n';
        return std::nullopt;
    }
    std::vector<InstanceDocument> docs;
    bool bad = false;
    for (auto& r : records) {
        if (r.doc) {
            docs.push_back(std::move(*r.doc));
        } else {
            std::cerr << "degseq: record " << r.record << ": " << r.error << '\n';
            bad = true;
        }
    }
    if (bad)
        return std::nullopt;
    if (docs.empty()) {
        std::cerr << "degseq: no input records\n";
        return std::nullopt;
    }
    return docs;
}

std::uint64_t resolve_cap(std::uint64_t flag) { return flag > 0 ? flag : volume_cap_from_env(); }

struct CheckArgs {
    std::string mode = "forcible";
    bool witness = false;
    bool explain = false;
    bool timing = false;
    std::string format = "auto";
    std::uint64_t volume_cap = 0;
    std::vector<std::string> files;
};

int cmd_check(const CheckArgs& args) {
    const auto mode = mode_from_string(args.mode);
    if (!mode) {
        std::cerr << "degseq: unknown mode '" << args.mode << "'\n";
        return exit_input_error;
    }
    auto docs = load_documents(args.files, args.format);
    if (!docs)
        return exit_input_error;

    EvalOptions opts;
    opts.explain = args.explain;
    opts.witness = args.witness;
    opts.volume_cap = resolve_cap(args.volume_cap);

    std::vector<VerdictDocument> out;
    for (std::size_t k = 0; k < docs->size(); ++k) {
        const auto& doc = (*docs)[k];
        try {
            const auto start = std::chrono::steady_clock::now();
            const auto v = evaluate(*mode, doc.instance, opts);
            const auto stop = std::chrono::steady_clock::now();
            auto vd = make_verdict_document(doc, *mode, v, args.explain);
            if (args.timing)
                vd.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
            out.push_back(std::move(vd));
        } catch (const InputError& e) {
            std::cerr << "degseq: record " << k + 1 << ": " << e.what() << '\n';
            return exit_input_error;
        }
    }
    int code = 0;
    for (const auto& vd : out) {
        std::cout << to_json(vd).dump() << '\n';
        if (vd.decision == Decision::no)
            code = 1;
        else if (vd.decision == Decision::not_applicable && code == 0)
            code = 2;
    }
    return code;
}

int cmd_realize(const std::vector<std::string>& files, const std::string& format) {
    auto docs = load_documents(files, format);
    if (!docs)
        return exit_input_error;
    int code = 0;
    for (std::size_t k = 0; k < docs->size(); ++k) {
        const auto& doc = (*docs)[k];
        json j;
        j["name"] = doc.name ? json(*doc.name) : json(nullptr);
        if (!doc.instance.is_fixed()) {
            std::cerr << "degseq: record " << k + 1 << ": realize takes a single sequence (b must equal a)\n";
            return exit_input_error;
        }
        const DegreeSequence d(std::vector<degree_t>(doc.instance.lower().begin(), doc.instance.lower().end()));
        try {
            const auto g = realize(d);
            if (g.degrees() != d.vector())
                throw std::logic_error("realization degree check failed");
            j["n"] = g.vertex_count();
            json edges = json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            j["edges"] = std::move(edges);
        } catch (const NotGraphic& e) {
            j["decision"] = "no";
            j["failing_t"] = e.failing_t();
            j["reason"] = e.what();
            std::cerr << "degseq: record " << k + 1 << ": " << e.what() << '\n';
            code = 1;
        }
        std::cout << j.dump() << '\n';
    }
    return code;
}

struct CrossCheckArgs {
    std::uint64_t seed = 42;
    std::size_t count = 1000;
    std::string n_range = "1:5";
    degree_t bound_max = 4;
    std::uint64_t volume_cap = 0;
    std::uint64_t samples = 100000;
};

int cmd_crosscheck(const CrossCheckArgs& args) {
    InstanceGenConfig cfg;
    cfg.seed = args.seed;
    cfg.bound_max = args.bound_max;
    try {
        const auto colon = args.n_range.find(':');
        if (colon == std::string::npos)
            cfg.n_lo = cfg.n_hi = std::stoul(args.n_range);
        else {
            cfg.n_lo = std::stoul(args.n_range.substr(0, colon));
            cfg.n_hi = std::stoul(args.n_range.substr(colon + 1));
        }
        cfg.validate();
    } catch (const std::exception&) {
        std::cerr << "degseq: bad --n-range '" << args.n_range << "' (expected LO:HI with 1 <= LO <= HI)\n";
        return exit_input_error;
    }
    const auto cap = resolve_cap(args.volume_cap);

    std::size_t agreements = 0, sampled = 0;
    json disagreements = json::array();
    InstanceGenerator gen(cfg);
    for (std::size_t k = 0; k < args.count; ++k) {
        const auto inst = gen.next();
        const auto forcible = check_forcible(inst).accepted();
        const auto potential = check_potential(inst).accepted();
        bool agree = true;
        json entry;
        entry["index"] = k;
        entry["instance"] = to_json(InstanceDocument{std::nullopt, inst});
        if (inst.volume() <= cap) {
            const bool bf_forcible = brute_force_forcible(inst, cap);
            const bool bf_potential = brute_force_potential(inst, cap);
            if (forcible != bf_forcible)
                entry["forcible"] = {{"library", forcible}, {"oracle", bf_forcible}};
            if (potential != bf_potential)
                entry["potential"] = {{"library", potential}, {"oracle", bf_potential}};
            agree = forcible == bf_forcible && potential == bf_potential;
        } else {
            ++sampled;
            const auto r = sample_forcible(inst, args.samples, args.seed + k);
            if (forcible && r.counterexample) {
                entry["forcible"] = {{"library", forcible}, {"oracle", false}, {"exhaustive", false}};
                agree = false;
            }
        }
        if (agree)
            ++agreements;
        else
            disagreements.push_back(std::move(entry));
    }

    json report;
    report["seed"] = args.seed;
    report["n_range"] = {cfg.n_lo, cfg.n_hi};
    report["bound_max"] = args.bound_max;
    report["checked"] = args.count;
    report["agreements"] = agreements;
    report["sampled_non_exhaustive"] = sampled;
    report["disagreements"] = disagreements;
    std::cout << report.dump() << '\n';
    return disagreements.empty() ? 0 : 1;
}

int cmd_bench(const std::vector<std::size_t>& ns, std::size_t trials, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    json table = json::array();
    for (auto n : ns) {
        if (n == 0) {
            std::cerr << "degseq: n must be positive\n";
            return exit_input_error;
        }
        const auto row = bench_forcible(n, trials, seed);
        rows.push_back(row);
        table.push_back({{"n", row.n},
                         {"trials", row.trials},
                         {"median_ms", row.median_ms},
                         {"min_ms", row.min_ms},
                         {"max_ms", row.max_ms},
                         {"decision", std::string(to_string(row.decision))}});
    }
    json report;
    report["rows"] = table;
    const auto e = fit_exponent(rows);
    report["exponent"] = e ? json(*e) : json(nullptr);
    std::cout << report.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forcible and potential graphicity of degree-sequence intervals"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run a decider on each input instance");
    check_cmd->add_option("--mode", check.mode, "forcible|potential|orderB|gy-necessary|gy-sufficient|graphic")
        ->check(CLI::IsMember({"forcible", "potential", "orderB", "gy-necessary", "gy-sufficient", "graphic"}));
    check_cmd->add_flag("--witness", check.witness, "Attach a non-graphic member of the box to forcible 'no' verdicts");
    check_cmd->add_flag("--explain", check.explain, "Include the per-t slack table");
    check_cmd->add_flag("--timing", check.timing, "Include elapsed microseconds");
    check_cmd->add_option("--format", check.format, "Input format: obj|lines (default: detect)")
        ->check(CLI::IsMember({"auto", "obj", "lines"}));
    check_cmd->add_option("--volume-cap", check.volume_cap, "Box volume cap for exhaustive witness search");
    check_cmd->add_option("files", check.files, "Input files (default: stdin)");

    std::vector<std::string> realize_files;
    std::string realize_format = "auto";
    auto* realize_cmd = app.add_subcommand("realize", "Emit an edge list realizing each graphic sequence");
    realize_cmd->add_option("--format", realize_format, "Input format: obj|lines (default: detect)")
        ->check(CLI::IsMember({"auto", "obj", "lines"}));
    realize_cmd->add_option("files", realize_files, "Input files (default: stdin)");

    CrossCheckArgs cc;
    auto* cc_cmd = app.add_subcommand("cross-check", "Compare the deciders against brute-force enumeration");
    cc_cmd->add_option("--seed", cc.seed, "Generator seed");
    cc_cmd->add_option("--count", cc.count, "Number of instances");
    cc_cmd->add_option("--n-range", cc.n_range, "Instance length range LO:HI");
    cc_cmd->add_option("--bound-max", cc.bound_max, "Largest upper bound")->check(CLI::NonNegativeNumber);
    cc_cmd->add_option("--volume-cap", cc.volume_cap, "Largest box enumerated exhaustively");
    cc_cmd->add_option("--samples", cc.samples, "Draws per box in sampled mode");

    std::vector<std::size_t> bench_n{1000, 2000, 4000};
    std::size_t bench_trials = 3;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Time the forcible decider and fit a growth exponent");
    bench_cmd->add_option("--n", bench_n, "Comma-separated sizes")->delimiter(',');
    bench_cmd->add_option("--trials", bench_trials, "Trials per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "Instance seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }

    if (*check_cmd)
        return cmd_check(check);
    if (*realize_cmd)
        return cmd_realize(realize_files, realize_format);
    if (*cc_cmd)
        return cmd_crosscheck(cc);
    if (*bench_cmd)
        return cmd_bench(bench_n, bench_trials, bench_seed);
    return exit_input_error;
}
