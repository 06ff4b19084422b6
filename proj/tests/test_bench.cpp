#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psi/bench.hpp"

#include "psi/image_io.hpp"
#include "psi/metrics.hpp"
#include "psi/pipeline.hpp"
#include "scenes.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

using psi::BenchConfig;
using psi::BenchRecord;
using psi::DecimationScheme;
using psi::Image;
using psi::Planed;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path make_dataset(const std::string& name, int images, Eigen::Index size) {
    const auto dir = fresh_dir(name);
    for (int i = 0; i < images; ++i)
        psi::save_image((dir / ("scene" + std::to_string(i) + ".pgm")).string(),
                        scenes::scene_image(i, size));
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

BenchConfig small_config(const fs::path& dataset) {
    BenchConfig cfg;
    cfg.dataset_dir = dataset.string();
    cfg.schemes = {DecimationScheme::DaubechiesApprox};
    cfg.factors = {2};
    cfg.wavelets = {"db2"};
    cfg.repeats = 2;
    cfg.seed_base = 42;
    return cfg;
}

}  // namespace

TEST_CASE("benchmark produces one record per task with sane fields") {
    const auto dir = make_dataset("psi_bench_basic", 2, 32);
    psi::save_image((dir / "color.ppm").string(),
                    Image(scenes::scene(0, 32), scenes::scene(1, 32), scenes::scene(2, 32)));
    const auto records = psi::run_benchmark(small_config(dir));
    REQUIRE(records.size() == 6);  // 3 images x 1 scheme x 1 factor x 1 wavelet x 2 repeats
    for (const auto& r : records) {
        CHECK(r.seconds > 0.0);
        CHECK(std::isfinite(r.psnr_db));
        CHECK(r.psnr_db > 10.0);
        CHECK(r.ssim <= 1.0);
        CHECK(r.scheme == "daubechies");
    }
    CHECK(records[0].image == "color.ppm");
    CHECK(records[0].repeat == 0);
    CHECK(records[1].repeat == 1);
    CHECK(records[2].image == "scene0.pgm");
}

TEST_CASE("constant images yield degenerate rows") {
    const auto dir = fresh_dir("psi_bench_const");
    psi::save_image((dir / "flat.pgm").string(),
                    Image(Planed(Planed::Constant(32, 32, 0.5))));
    auto cfg = small_config(dir);
    cfg.repeats = 1;
    const auto records = psi::run_benchmark(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].psnr_db > 250.0);  // indistinguishable up to arithmetic noise
    CHECK(records[0].ssim == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("summaries exclude infinite-PSNR rows and count them separately") {
    BenchRecord finite;
    finite.image = "a.pgm";
    finite.scheme = "bicubic";
    finite.wavelet = "db2";
    finite.psnr_db = 30.0;
    finite.ssim = 0.9;
    finite.seconds = 1.0;
    BenchRecord exact = finite;
    exact.image = "b.pgm";
    exact.psnr_db = std::numeric_limits<double>::infinity();
    exact.ssim = 1.0;

    const auto rows = psi::summarize({finite, exact});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].rows == 1);
    CHECK(rows[0].inf_rows == 1);
    CHECK(rows[0].psnr_mean == 30.0);
    CHECK(rows[0].psnr_std == 0.0);
    CHECK(rows[0].ssim_mean == doctest::Approx(0.95));  // ssim keeps every row
}

TEST_CASE("records match a hand-composed decimate/interpolate/psnr run") {
    const auto dir = make_dataset("psi_bench_oracle", 1, 64);
    auto cfg = small_config(dir);
    cfg.repeats = 1;
    const auto records = psi::run_benchmark(cfg);
    REQUIRE(records.size() == 1);

    const Image gt = psi::load_image((dir / "scene0.pgm").string());
    const Image input = psi::decimate(gt, DecimationScheme::DaubechiesApprox, 2);
    psi::PsoConfig pso = cfg.pso;
    pso.seed = cfg.seed_base ^ psi::fnv1a64("scene0.pgm:0");
    const auto out = psi::interpolate(input, psi::ScaleFactor::from_alpha(2.0),
                                      psi::make_filter("db2"), pso);
    CHECK(records[0].psnr_db == psi::psnr(gt, out.image, 1.0));
    CHECK(records[0].ssim == psi::ssim(gt, out.image));
}

TEST_CASE("report round-trip and aggregation oracle") {
    const auto dir = make_dataset("psi_bench_report", 2, 32);
    auto cfg = small_config(dir);
    const auto records = psi::run_benchmark(cfg);

    const auto detail = fs::temp_directory_path() / "psi_bench_report_detail.csv";
    const auto summary = fs::temp_directory_path() / "psi_bench_report_summary.csv";
    psi::write_report(records, detail.string(), summary.string());

    const auto parsed = psi::read_report(detail.string());
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].image == records[i].image);
        CHECK(parsed[i].scheme == records[i].scheme);
        CHECK(parsed[i].factor == records[i].factor);
        CHECK(parsed[i].wavelet == records[i].wavelet);
        CHECK(parsed[i].repeat == records[i].repeat);
        CHECK(parsed[i].psnr_db == records[i].psnr_db);  // %.17g round-trips exactly
        CHECK(parsed[i].ssim == records[i].ssim);
        CHECK(parsed[i].seconds == records[i].seconds);
    }

    // summary means equal the arithmetic mean of the parsed detail rows
    const auto rows = psi::summarize(parsed);
    REQUIRE(rows.size() == 1);
    double psum = 0, ssum = 0;
    for (const auto& r : parsed) {
        psum += r.psnr_db;
        ssum += r.ssim;
    }
    CHECK(std::abs(rows[0].psnr_mean - psum / double(parsed.size())) < 1e-9);
    CHECK(std::abs(rows[0].ssim_mean - ssum / double(parsed.size())) < 1e-9);
    CHECK(rows[0].rows == int(parsed.size()));
}

TEST_CASE("empty record sets still write headers") {
    const auto detail = fs::temp_directory_path() / "psi_bench_empty_detail.csv";
    const auto summary = fs::temp_directory_path() / "psi_bench_empty_summary.csv";
    psi::write_report({}, detail.string(), summary.string());
    CHECK(slurp(detail) == "image,scheme,factor,wavelet,repeat,psnr_db,ssim,seconds\n");
    CHECK(psi::read_report(detail.string()).empty());

    BenchRecord one;
    one.image = "x.pgm";
    one.scheme = "bicubic";
    one.wavelet = "db2";
    one.psnr_db = 31.5;
    one.ssim = 0.9;
    one.seconds = 0.25;
    psi::write_report({one}, detail.string(), summary.string());
    const auto text = slurp(detail);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("worker count does not change the written bytes") {
    const auto dir = make_dataset("psi_bench_workers", 3, 32);
    auto cfg = small_config(dir);

    const auto d1 = fs::temp_directory_path() / "psi_bench_w1.csv";
    const auto s1 = fs::temp_directory_path() / "psi_bench_w1_sum.csv";
    cfg.workers = 1;
    auto rec1 = psi::run_benchmark(cfg);
    for (auto& r : rec1) r.seconds = 0.0;  // timing may differ; values must not
    psi::write_report(rec1, d1.string(), s1.string());

    const auto d2 = fs::temp_directory_path() / "psi_bench_w2.csv";
    const auto s2 = fs::temp_directory_path() / "psi_bench_w2_sum.csv";
    cfg.workers = 3;
    auto rec2 = psi::run_benchmark(cfg);
    for (auto& r : rec2) r.seconds = 0.0;
    psi::write_report(rec2, d2.string(), s2.string());

    CHECK(slurp(d1) == slurp(d2));
    CHECK(slurp(s1) == slurp(s2));
}

TEST_CASE("unreadable files are skipped, empty datasets are an error") {
    const auto dir = make_dataset("psi_bench_skip", 1, 32);
    std::ofstream(dir / "broken.pgm") << "P5 but nothing else";
    const auto records = psi::run_benchmark(small_config(dir));
    CHECK(records.size() == 2);  // the good image only, 2 repeats

    // a 32x32 image cannot feed the factor-4 protocol; the combination is
    // skipped rather than failing the whole run
    auto cfg4 = small_config(dir);
    cfg4.factors = {2, 4};
    CHECK(psi::run_benchmark(cfg4).size() == 2);

    const auto empty = fresh_dir("psi_bench_none");
    CHECK_THROWS_WITH_AS(psi::run_benchmark(small_config(empty)),
                         doctest::Contains("no decodable images"), std::runtime_error);
}
