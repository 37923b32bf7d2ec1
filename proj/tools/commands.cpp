#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvfcm/dataset.hpp"
#include "mvfcm/ebmvfcm.hpp"
#include "mvfcm/emvfcm.hpp"
#include "mvfcm/errors.hpp"
#include "run_record.hpp"

namespace mvfcm::cli {

namespace {

std::uint64_t seed_or_env(const CLI::Option* flag, std::uint64_t value) {
    if (flag->count() > 0) return value;
    const char* env = std::getenv("MVFCM_SEED");
    if (env == nullptr || *env == '\0') return value;
    std::uint64_t seed = 0;
    std::istringstream in(env);
    if (!(in >> seed) || !in.eof()) {
        throw ValidationError(std::string("MVFCM_SEED: not an unsigned integer: '") + env + "'");
    }
    return seed;
}

void write_json(const nlohmann::json& json, const std::string& path, std::ostream& out) {
    const std::string text = json.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        nlohmann::json json;
        in >> json;
        return json;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

struct GenerateArgs {
    SyntheticSpec spec;
    std::string output;
    CLI::Option* seed_flag = nullptr;
};

struct FitArgs {
    std::string manifest;
    std::string algorithm = "emvfcm";
    BiLevelConfig config;
    bool normalize = false;
    bool header = false;
    bool no_timing = false;
    std::string output;
    CLI::Option* seed_flag = nullptr;
    CLI::Option* clusters_flag = nullptr;
};

struct EvaluateArgs {
    std::string run_record;
    std::string labels;
    std::string output;
};

int cmd_generate(GenerateArgs& args, std::ostream& err) {
    args.spec.seed = seed_or_env(args.seed_flag, args.spec.seed);
    const auto data = generate_synthetic(args.spec);
    const auto manifest = save_dataset(data.dataset, args.output, &data.labels);
    err << "wrote " << manifest.string() << " (" << data.dataset.samples() << " samples, "
        << data.dataset.view_count() << " views)\n";
    return exit_ok;
}

int cmd_fit(FitArgs& args, std::ostream& out) {
    args.config.seed = seed_or_env(args.seed_flag, args.config.seed);
    if (args.clusters_flag->count() == 0) throw ValidationError("clusters: --clusters is required");
    const auto algorithm = parse_algorithm(args.algorithm);
    if (algorithm == Algorithm::ebmvfcm) {
        args.config.validate();
    } else {
        static_cast<const SolverConfig&>(args.config).validate();
    }

    auto loaded = load_dataset(args.manifest, LoadOptions{args.header});
    const MultiViewDataset dataset = args.normalize ? normalize_minmax(loaded.dataset) : loaded.dataset;

    RunRecord record;
    record.algorithm = algorithm;
    record.manifest = args.manifest;
    record.normalize = args.normalize;
    record.header = args.header;
    record.config = args.config;
    record.samples = dataset.samples();
    record.view_dims = dataset.view_dims();

    const auto start = std::chrono::steady_clock::now();
    record.result = algorithm == Algorithm::ebmvfcm
                        ? fit_ebmvfcm(dataset, args.config)
                        : fit_emvfcm(dataset, static_cast<const SolverConfig&>(args.config));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (!args.no_timing) record.wall_clock_seconds = elapsed.count();

    if (loaded.labels) {
        record.metrics = evaluate(record.result.labels, &*loaded.labels, record.result.objective(),
                                  record.result.iterations);
    }
    write_json(to_json(record), args.output, out);
    return exit_ok;
}

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out) {
    const auto record = run_record_from_json(read_json(args.run_record));
    const auto truth = read_labels(args.labels);
    if (truth.size() != record.result.labels.size()) {
        throw ValidationError("labels: expected n = " + std::to_string(record.result.labels.size()) +
                              " entries, got " + std::to_string(truth.size()));
    }
    const auto report = evaluate(record.result.labels, &truth, record.result.objective(),
                                 record.result.iterations);
    write_json(to_json(report), args.output, out);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exponential multi-view fuzzy c-means (E-MVFCM / EB-MVFCM)", "mvfcm"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a seeded synthetic multi-view dataset");
    generate->add_option("--clusters", gen.spec.clusters, "Number of clusters")->capture_default_str();
    generate->add_option("--per-cluster", gen.spec.n_per_cluster, "Samples per cluster")->capture_default_str();
    generate->add_option("--view-dims", gen.spec.view_dims, "Comma-separated informative view dimensions")
        ->delimiter(',')
        ->capture_default_str();
    generate->add_option("--separation", gen.spec.separation, "Distance between adjacent cluster means")
        ->capture_default_str();
    generate->add_option("--noise-std", gen.spec.noise_std, "Within-cluster standard deviation")
        ->capture_default_str();
    generate->add_option("--noise-views", gen.spec.noise_views, "Appended pure-noise views")->capture_default_str();
    gen.seed_flag = generate->add_option("--seed", gen.spec.seed, "Random seed (fallback: MVFCM_SEED)");
    generate->add_option("-o,--output", gen.output, "Output directory")->required();

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Cluster a dataset described by a manifest");
    fit_cmd->add_option("manifest", fit.manifest, "Manifest JSON path")->required();
    fit_cmd->add_option("--algorithm", fit.algorithm, "emvfcm or ebmvfcm")->capture_default_str();
    fit.clusters_flag = fit_cmd->add_option("--clusters", fit.config.clusters, "Number of clusters c >= 2");
    fit_cmd->add_option("--m", fit.config.m, "Fuzzifier m > 1")->capture_default_str();
    fit_cmd->add_option("--alpha", fit.config.alpha, "View-weight exponent > 1")->capture_default_str();
    fit_cmd->add_option("--beta", fit.config.beta, "Feature-weight exponent > 1 (ebmvfcm)")->capture_default_str();
    fit_cmd->add_option("--epsilon", fit.config.epsilon, "Convergence tolerance on |dJ|")->capture_default_str();
    fit_cmd->add_option("--max-iter", fit.config.max_iterations, "Iterations per restart")->capture_default_str();
    fit_cmd->add_option("--n-init", fit.config.n_init, "Restarts")->capture_default_str();
    fit.seed_flag = fit_cmd->add_option("--seed", fit.config.seed, "Random seed (fallback: MVFCM_SEED)");
    fit.config.jobs = 0;
    fit_cmd->add_option("--jobs", fit.config.jobs, "Concurrent restarts, 0 = available parallelism")
        ->capture_default_str();
    fit_cmd->add_flag("--normalize", fit.normalize, "Min-max scale every feature to [0, 1] first");
    fit_cmd->add_flag("--header", fit.header, "View CSVs start with a header row");
    fit_cmd->add_flag("--no-timing", fit.no_timing, "Omit wall_clock_seconds from the run record");
    fit_cmd->add_option("-o,--output", fit.output, "Run record path (default: stdout)");

    EvaluateArgs eval;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a run record against truth labels");
    evaluate_cmd->add_option("run_record", eval.run_record, "Run record JSON from `fit`")->required();
    evaluate_cmd->add_option("--labels", eval.labels, "Truth labels, one integer per line")->required();
    evaluate_cmd->add_option("-o,--output", eval.output, "Report path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (app.got_subcommand(generate) ? generate->help()
                    : app.got_subcommand(fit_cmd) ? fit_cmd->help()
                    : app.got_subcommand(evaluate_cmd) ? evaluate_cmd->help()
                                                       : app.help());
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }

    try {
        if (app.got_subcommand(generate)) return cmd_generate(gen, err);
        if (app.got_subcommand(fit_cmd)) return cmd_fit(fit, out);
        return cmd_evaluate(eval, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}

}  // namespace mvfcm::cli
