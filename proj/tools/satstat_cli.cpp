// SPDX-License-Identifier: Apache-2.0
//
// satstat command-line front end. Parses flags, builds a config, and calls
// the C API of the shared library; every artifact written to disk comes back
// verbatim from the library, so identical invocations produce byte-identical
// files.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satstat.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

void check_status(int status) {
    if (status != SATSTAT_OK)
        die(2, std::string(satstat_status_name(status)) + ": " + satstat_last_error());
}

std::vector<std::uint32_t> parse_kappa(const std::string& text, int n) {
    std::vector<std::uint32_t> kappa;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(start, comma - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            die(2, "invalid kappa entry '" + tok + "'");
        kappa.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    if (kappa.size() != static_cast<std::size_t>(n - 1))
        die(2, "kappa must have n-1 = " + std::to_string(n - 1) + " entries");
    return kappa;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(start, comma - start);
        if (tok.empty()) die(2, "empty numeric list entry");
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            die(2, "invalid number '" + tok + "'");
        }
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::string output_dir() {
    const char* env = std::getenv("SATSTAT_OUT_DIR");
    return env && *env ? env : ".";
}

// "-" means stdout
void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die(2, "cannot open output file '" + path + "'");
    out << content;
    if (!out) die(2, "failed writing '" + path + "'");
}

std::string owned(char* s) {
    if (!s) return {};
    std::string out(s);
    satstat_string_free(s);
    return out;
}

struct MeasureOpts {
    std::string kind = "sato-tate";
    std::uint64_t prime = 0;

    int c_kind() const {
        if (kind == "plancherel") return SATSTAT_MEASURE_PLANCHEREL;
        return SATSTAT_MEASURE_SATO_TATE;
    }
    void require_prime() const {
        if (kind == "plancherel" && prime < 2) die(2, "plancherel measure needs --prime");
    }
};

void add_measure_flags(CLI::App* cmd, MeasureOpts& m) {
    cmd->add_option("--measure", m.kind, "sato-tate | plancherel")
        ->check(CLI::IsMember({"sato-tate", "plancherel"}));
    cmd->add_option("--prime", m.prime, "deformation prime for the plancherel measure");
}

int cmd_schur_eval(int n, const std::string& kappa_text, const std::string& angles_text,
                   bool determinant, const std::string& out_path) {
    const auto kappa = parse_kappa(kappa_text, n);
    const auto angles = parse_doubles(angles_text);
    if (angles.size() != static_cast<std::size_t>(n) &&
        angles.size() != static_cast<std::size_t>(n - 1))
        die(2, "need n-1 angles (constrained point) or n angles (free point)");
    double re = 0.0, im = 0.0;
    const int status =
        determinant ? satstat_schur_eval_determinant(n, kappa.data(), angles.data(),
                                                     static_cast<int>(angles.size()), &re, &im)
                    : satstat_schur_eval_tableaux(n, kappa.data(), angles.data(),
                                                  static_cast<int>(angles.size()), &re, &im);
    check_status(status);

    if (!out_path.empty()) {
        ordered_json j;
        j["command"] = "schur eval";
        j["n"] = n;
        j["kappa"] = kappa;
        j["angles"] = angles;
        j["evaluator"] = determinant ? "determinant" : "tableaux";
        j["value"] = {re, im};
        write_artifact(out_path, j.dump(2) + "\n");
    }
    std::printf("schur eval: S_[%s] = %.17g %+.17gi\n", kappa_text.c_str(), re, im);
    return 0;
}

int cmd_hecke_expand(int n, const std::string& kappa_text, const std::string& kappa2_text,
                     std::string out_path) {
    const auto kappa = parse_kappa(kappa_text, n);
    const auto kappa2 = kappa2_text.empty() ? kappa : parse_kappa(kappa2_text, n);
    satstat_expansion* e = nullptr;
    check_status(satstat_hecke_expand(n, kappa.data(), kappa2.data(), &e));
    char* csv_raw = nullptr;
    const int status = satstat_expansion_csv(e, &csv_raw);
    const std::size_t terms = satstat_expansion_size(e);
    satstat_expansion_free(e);
    check_status(status);
    const std::string csv = owned(csv_raw);

    if (out_path.empty()) {
        out_path = output_dir() + "/hecke_expand_n" + std::to_string(n) + "_k" + kappa_text;
        for (auto& ch : out_path)
            if (ch == ',') ch = '-';
        out_path += ".csv";
    }
    write_artifact(out_path, csv);
    std::printf("hecke expand: %zu terms -> %s\n", terms, out_path.c_str());
    return 0;
}

int cmd_sample(int n, const MeasureOpts& measure, std::uint64_t seed, std::uint64_t count,
               std::string out_path) {
    measure.require_prime();
    char* csv_raw = nullptr;
    check_status(satstat_sample_csv(n, measure.c_kind(), measure.prime, seed, count, &csv_raw));
    const std::string csv = owned(csv_raw);
    if (out_path.empty())
        out_path = output_dir() + "/samples_" + measure.kind + "_n" + std::to_string(n) +
                   "_seed" + std::to_string(seed) + ".csv";
    write_artifact(out_path, csv);
    std::printf("sample: %llu draws (%s, n=%d, seed=%llu) -> %s\n",
                static_cast<unsigned long long>(count), measure.kind.c_str(), n,
                static_cast<unsigned long long>(seed), out_path.c_str());
    return 0;
}

int run_experiment_config(const ordered_json& config, const std::string& experiment,
                          std::string out_path, const std::string& format) {
    char* report_raw = nullptr;
    char* csv_raw = nullptr;
    int pass = 0;
    const int status = satstat_experiment_run(config.dump().c_str(), &report_raw, &csv_raw, &pass);
    check_status(status);
    const std::string report = owned(report_raw);
    const std::string csv = owned(csv_raw);

    const std::string wanted = format.empty() ? "json" : format;
    std::string content;
    std::string suffix;
    if (wanted == "csv") {
        if (csv.empty()) die(2, "experiment '" + experiment + "' has no CSV artifact");
        content = csv;
        suffix = ".csv";
    } else {
        content = report;
        suffix = ".json";
    }
    if (out_path.empty()) out_path = output_dir() + "/experiment_" + experiment + suffix;
    write_artifact(out_path, content);

    std::printf("experiment %s: %s -> %s\n", experiment.c_str(), pass ? "pass" : "FAIL",
                out_path.c_str());
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"satstat: Satake-parameter statistics toolkit"};
    app.require_subcommand(1);

    auto* schur = app.add_subcommand("schur", "Schur polynomial operations");
    schur->require_subcommand(1);
    auto* eval = schur->add_subcommand("eval", "evaluate S_kappa at a point");
    int eval_n = 3;
    std::string eval_kappa, eval_angles, eval_out;
    bool eval_det = false;
    eval->add_option("--n", eval_n, "rank")->required()->check(CLI::Range(2, 8));
    eval->add_option("--kappa", eval_kappa, "comma-separated tuple of n-1 entries")->required();
    eval->add_option("--angles", eval_angles,
                     "n-1 angles (last recomputed) or n angles (free point), radians")
        ->required();
    eval->add_flag("--determinant", eval_det, "use the determinant-ratio evaluator");
    eval->add_option("--out", eval_out, "write a JSON record here ('-' for stdout)");

    auto* hecke = app.add_subcommand("hecke", "Hecke structure constants");
    hecke->require_subcommand(1);
    auto* expand = hecke->add_subcommand("expand", "expand S_kappa * S_kappa' in the Schur basis");
    int exp_n = 3;
    std::string exp_kappa, exp_kappa2, exp_out;
    expand->add_option("--n", exp_n, "rank")->required()->check(CLI::Range(2, 8));
    expand->add_option("--kappa", exp_kappa, "first index")->required();
    expand->add_option("--kappa2", exp_kappa2, "second index (defaults to --kappa)");
    expand->add_option("--out", exp_out, "CSV path ('-' for stdout)");

    auto* sample = app.add_subcommand("sample", "draw satake points from a measure");
    int smp_n = 3;
    MeasureOpts smp_measure;
    std::uint64_t smp_seed = kDefaultSeed, smp_count = 10;
    std::string smp_out;
    sample->add_option("--n", smp_n, "rank")->required()->check(CLI::Range(2, 8));
    add_measure_flags(sample, smp_measure);
    sample->add_option("--seed", smp_seed, "stream seed (default 1)");
    sample->add_option("--count", smp_count, "number of draws");
    sample->add_option("--out", smp_out, "CSV path ('-' for stdout)");

    auto* experiment = app.add_subcommand("experiment", "statistical experiments");
    experiment->require_subcommand(1);
    struct ExpOpts {
        int n = 3;
        std::string kappa;
        MeasureOpts measure;
        std::uint64_t seed = kDefaultSeed;
        std::uint64_t X = 100000;
        std::uint64_t samples = 1000000;
        std::string deltas = "0.1,0.01,0.001";
        int bins = 40;
        std::string forced_zeros = "none";
        std::string checkpoints;
        std::uint64_t chunk_samples = 65536;
        int workers = 1;
        std::string out, format;
    } eo;
    std::vector<CLI::App*> exp_cmds;
    for (const char* name :
         {"nonvanishing", "signs", "small-values", "orthonormality", "vertical"}) {
        auto* c = experiment->add_subcommand(name);
        c->add_option("--n", eo.n, "rank")->check(CLI::Range(2, 8));
        c->add_option("--kappa", eo.kappa, "coefficient index (n-1 entries)");
        add_measure_flags(c, eo.measure);
        c->add_option("--seed", eo.seed, "seed (default 1)");
        c->add_option("--X", eo.X, "range bound for nonvanishing/signs");
        c->add_option("--samples", eo.samples, "sample budget for measure experiments");
        c->add_option("--delta", eo.deltas, "comma-separated thresholds (small-values)");
        c->add_option("--bins", eo.bins, "histogram bins (vertical)");
        c->add_option("--forced-zeros", eo.forced_zeros,
                      "none | all | p1,p2,... | <r>mod<m> | gt<N>");
        c->add_option("--checkpoints", eo.checkpoints, "comma-separated curve checkpoints");
        c->add_option("--chunk-samples", eo.chunk_samples, "samples per scheduling chunk");
        c->add_option("--workers", eo.workers, "worker threads (default 1)")
            ->check(CLI::Range(1, 64));
        c->add_option("--out", eo.out, "artifact path ('-' for stdout)");
        c->add_option("--format", eo.format, "json (default) or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        exp_cmds.push_back(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed())
            return cmd_schur_eval(eval_n, eval_kappa, eval_angles, eval_det, eval_out);
        if (expand->parsed()) return cmd_hecke_expand(exp_n, exp_kappa, exp_kappa2, exp_out);
        if (sample->parsed()) return cmd_sample(smp_n, smp_measure, smp_seed, smp_count, smp_out);
        for (auto* c : exp_cmds) {
            if (!c->parsed()) continue;
            const std::string name = c->get_name();
            eo.measure.require_prime();
            ordered_json config;
            config["experiment"] = name;
            config["n"] = eo.n;
            if (name != "orthonormality") {
                if (eo.kappa.empty()) die(2, "--kappa is required for " + name);
                config["kappa"] = parse_kappa(eo.kappa, eo.n);
            }
            ordered_json measure;
            measure["kind"] = eo.measure.kind;
            if (eo.measure.kind == "plancherel") measure["p"] = eo.measure.prime;
            config["measure"] = measure;
            config["seed"] = eo.seed;
            if (name == "nonvanishing" || name == "signs") {
                config["X"] = eo.X;
                config["forced_zeros"] = eo.forced_zeros;
                if (!eo.checkpoints.empty()) {
                    std::vector<std::uint64_t> cps;
                    for (double v : parse_doubles(eo.checkpoints))
                        cps.push_back(static_cast<std::uint64_t>(v));
                    config["checkpoints"] = cps;
                }
            } else {
                config["samples"] = eo.samples;
                config["chunk_samples"] = eo.chunk_samples;
            }
            if (name == "small-values") config["deltas"] = parse_doubles(eo.deltas);
            if (name == "vertical") config["bins"] = eo.bins;
            config["workers"] = eo.workers;
            return run_experiment_config(config, name, eo.out, eo.format);
        }
        die(2, "no subcommand selected");
    } catch (const CliError& e) {
        std::fprintf(stderr, "satstat: %s\n", e.message.c_str());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "satstat: %s\n", e.what());
        return 2;
    }
}
