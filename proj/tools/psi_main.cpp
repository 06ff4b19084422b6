// psi: across-scale self-modeling image interpolation.
//
//   psi interpolate in.png out.png --scale 2 --wavelet db2 --seed 7
//   psi model in.png --weights-out w.json
//   psi benchmark dataset/ --report results.csv --factors 2,4

#include "psi/bench.hpp"
#include "psi/image_io.hpp"
#include "psi/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string wavelet = "db2";
    std::uint64_t seed = 0;
    double stall_tol = 1e-6;
    int max_iters = 15;
    int threads = 0;
};

psi::PsoConfig pso_from(const CommonOptions& o) {
    psi::PsoConfig cfg;
    cfg.seed = o.seed;
    cfg.stall_tolerance = o.stall_tol;
    cfg.max_iters = o.max_iters;
    cfg.threads = o.threads;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--wavelet", o.wavelet, "Wavelet filter (db2|dmey)")
        ->check(CLI::IsMember({"db2", "dmey"}))
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Base RNG seed; all randomness flows from it")
        ->capture_default_str();
    cmd->add_option("--stall-tol", o.stall_tol, "PSO early-stop fitness delta (dB)")
        ->capture_default_str();
    cmd->add_option("--max-iters", o.max_iters, "PSO iteration cap")->capture_default_str();
    cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)")
        ->capture_default_str();
}

json model_to_json(const std::vector<psi::ModelResult>& models, std::uint64_t seed) {
    json channels = json::array();
    for (const auto& m : models) {
        json c;
        c["weights"] = std::vector<double>(m.weights.w.data(), m.weights.w.data() + 6);
        c["fitness_db"] = m.fitness_db;
        c["iterations"] = m.iterations;
        if (m.degenerate) c["degenerate"] = true;
        channels.push_back(std::move(c));
    }
    json out;
    out["wavelet"] = models.empty() ? "" : models.front().wavelet;
    out["channels"] = std::move(channels);
    out["seed"] = seed;
    return out;
}

std::vector<psi::FusionWeights> weights_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read weights file " + path);
    const json doc = json::parse(in);
    std::vector<psi::FusionWeights> out;
    for (const auto& c : doc.at("channels")) {
        const auto v = c.at("weights").get<std::vector<double>>();
        if (v.size() != 6) throw std::runtime_error(path + ": weights entry must hold 6 values");
        psi::FusionWeights w;
        for (int i = 0; i < 6; ++i) w[i] = v[static_cast<size_t>(i)];
        w.validate();
        out.push_back(w);
    }
    if (out.empty()) throw std::runtime_error(path + ": no channel entries");
    return out;
}

void print_models(const std::vector<psi::ModelResult>& models) {
    for (size_t c = 0; c < models.size(); ++c) {
        const auto& m = models[c];
        std::cout << "channel " << c << ": W = [";
        for (int i = 0; i < 6; ++i) std::cout << (i ? ", " : "") << m.weights[i];
        std::cout << "], fitness " << m.fitness_db << " dB, " << m.iterations << " iterations"
                  << (m.degenerate ? " (degenerate)" : "") << "\n";
    }
}

int run_interpolate(const std::string& input, const std::string& output, double scale,
                    const CommonOptions& common, const std::string& weights_in,
                    const std::string& weights_out) {
    const psi::Image img = psi::load_image(input);
    const auto filter = psi::make_filter(common.wavelet);
    const auto sf = psi::ScaleFactor::from_alpha(scale);

    const auto t0 = std::chrono::steady_clock::now();
    psi::Image result;
    std::vector<psi::ModelResult> models;
    if (!weights_in.empty()) {
        result = psi::interpolate_with_weights(img, sf, filter, weights_from_json(weights_in));
    } else {
        auto r = psi::interpolate(img, sf, filter, pso_from(common));
        result = std::move(r.image);
        models = std::move(r.channel_models);
    }
    const auto t1 = std::chrono::steady_clock::now();

    psi::save_image(output, result);
    print_models(models);
    std::cout << "wrote " << output << " (" << result.width() << "x" << result.height() << ") in "
              << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    if (!weights_out.empty() && !models.empty()) {
        std::ofstream out(weights_out);
        out << model_to_json(models, common.seed).dump(2) << "\n";
        if (!out) throw std::runtime_error("cannot write " + weights_out);
    }
    return 0;
}

int run_model(const std::string& input, const CommonOptions& common,
              const std::string& weights_out) {
    const psi::Image img = psi::load_image(input);
    const auto filter = psi::make_filter(common.wavelet);
    const auto cfg = pso_from(common);
    std::vector<psi::ModelResult> models;
    for (const auto& channel : psi::split_channels(img))
        models.push_back(psi::model_weights(psi::pad_to_even(channel), filter, cfg));
    const json doc = model_to_json(models, common.seed);
    if (!weights_out.empty()) {
        std::ofstream out(weights_out);
        out << doc.dump(2) << "\n";
        if (!out) throw std::runtime_error("cannot write " + weights_out);
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int run_benchmark(const std::string& dataset, const std::string& report,
                  const std::vector<std::string>& schemes, const std::vector<int>& factors,
                  const std::vector<std::string>& wavelets, int repeats,
                  const CommonOptions& common, int workers) {
    psi::BenchConfig cfg;
    cfg.dataset_dir = dataset;
    for (const auto& s : schemes) cfg.schemes.push_back(psi::decimation_scheme_from_string(s));
    cfg.factors = factors;
    cfg.wavelets = wavelets;
    cfg.repeats = repeats;
    cfg.seed_base = common.seed;
    cfg.workers = workers;
    cfg.pso = pso_from(common);
    cfg.pso.threads = 1;  // parallelism lives at the task level here

    const auto records = psi::run_benchmark(cfg);
    std::filesystem::path summary(report);
    summary.replace_extension();
    summary += "_summary.csv";
    psi::write_report(records, report, summary.string());
    std::cout << records.size() << " records -> " << report << ", " << summary.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Across-scale self-modeling image interpolation"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string input, output, weights_in, weights_out, dataset, report = "benchmark.csv";
    double scale = 2.0;
    std::vector<std::string> schemes = {"bicubic", "daubechies", "dmeyer", "gaussian",
                                        "subsample"};
    std::vector<int> factors = {2};
    std::vector<std::string> wavelets = {"db2"};
    int repeats = 5, workers = 0;

    auto* interp = app.add_subcommand("interpolate", "Upscale one image");
    interp->add_option("input", input, "Input image (PNG/PGM/PPM)")->required();
    interp->add_option("output", output, "Output image path")->required();
    interp->add_option("--scale", scale, "Magnification factor (> 1)")->capture_default_str();
    interp->add_option("--weights-in", weights_in, "Reuse weights from JSON, skip modeling");
    interp->add_option("--weights-out", weights_out, "Persist learned weights as JSON");
    add_common(interp, common);

    auto* model = app.add_subcommand("model", "Learn fusion weights only");
    model->add_option("input", input, "Input image")->required();
    model->add_option("--weights-out", weights_out, "Write JSON here instead of stdout");
    add_common(model, common);

    auto* bench = app.add_subcommand("benchmark", "Decimate/interpolate/score a dataset");
    bench->add_option("dataset", dataset, "Directory of images")->required();
    bench->add_option("--report", report, "Detail CSV path")->capture_default_str();
    bench->add_option("--schemes", schemes, "Decimation schemes")->delimiter(',');
    bench->add_option("--factors", factors, "Scale factors (2 and/or 4)")->delimiter(',');
    bench->add_option("--wavelets", wavelets, "Wavelets to bench")->delimiter(',');
    bench->add_option("--repeats", repeats, "Runs per image")->capture_default_str();
    bench->add_option("--workers", workers, "Parallel tasks (0 = hardware)")
        ->capture_default_str();
    add_common(bench, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(interp))
            return run_interpolate(input, output, scale, common, weights_in, weights_out);
        if (app.got_subcommand(model)) return run_model(input, common, weights_out);
        if (app.got_subcommand(bench))
            return run_benchmark(dataset, report, schemes, factors, wavelets, repeats, common,
                                 workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
