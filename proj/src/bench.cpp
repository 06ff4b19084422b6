#include "psi/bench.hpp"

#include "psi/image_io.hpp"
#include "psi/metrics.hpp"
#include "psi/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace psi {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

struct Task {
    size_t image_index;
    DecimationScheme scheme;
    int factor;
    std::string wavelet;
    int repeat;
};

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0;
    for (const double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v, double mean) {
    if (v.empty()) return 0.0;
    double s = 0;
    for (const double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
    require(!cfg.schemes.empty(), "benchmark: no decimation schemes requested");
    require(!cfg.factors.empty() && !cfg.wavelets.empty(),
            "benchmark: factors and wavelets must be non-empty");
    require(cfg.repeats >= 1, "benchmark: repeats must be >= 1");
    if (!fs::is_directory(cfg.dataset_dir))
        throw std::runtime_error("benchmark: not a directory: " + cfg.dataset_dir);

    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(cfg.dataset_dir))
        if (e.is_regular_file()) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());

    std::vector<std::string> ids;
    std::vector<Image> images;
    for (const auto& name : names) {
        try {
            Image img = load_image((fs::path(cfg.dataset_dir) / name).string());
            if (img.width() < 32 || img.height() < 32 || img.width() % 2 || img.height() % 2) {
                std::cerr << "benchmark: skipping " << name
                          << " (need even dimensions of at least 32)\n";
                continue;
            }
            ids.push_back(name);
            images.push_back(std::move(img));
        } catch (const std::exception& e) {
            std::cerr << "benchmark: skipping " << name << " (" << e.what() << ")\n";
        }
    }
    if (images.empty()) throw std::runtime_error("benchmark: no decodable images in dataset");

    std::vector<Task> tasks;
    for (size_t i = 0; i < images.size(); ++i)
        for (const auto scheme : cfg.schemes)
            for (const int factor : cfg.factors) {
                if (images[i].width() % factor || images[i].height() % factor) {
                    std::cerr << "benchmark: skipping " << ids[i] << " at factor " << factor
                              << " (dimensions not divisible)\n";
                    continue;
                }
                if (images[i].width() / factor < 16 || images[i].height() / factor < 16) {
                    std::cerr << "benchmark: skipping " << ids[i] << " at factor " << factor
                              << " (decimated input below 16x16)\n";
                    continue;
                }
                for (const auto& wavelet : cfg.wavelets)
                    for (int r = 0; r < cfg.repeats; ++r)
                        tasks.push_back(Task{i, scheme, factor, wavelet, r});
            }

    std::vector<BenchRecord> records(tasks.size());
    parallel_for_index(
        static_cast<int>(tasks.size()),
        [&](int t) {
            const Task& task = tasks[static_cast<size_t>(t)];
            const Image& gt = images[task.image_index];
            const Image input = decimate(gt, task.scheme, task.factor);
            const WaveletFilter filter = make_filter(task.wavelet);
            PsoConfig pso = cfg.pso;
            pso.seed = cfg.seed_base ^
                       fnv1a64(ids[task.image_index] + ":" + std::to_string(task.repeat));
            const ScaleFactor sf = ScaleFactor::from_alpha(static_cast<double>(task.factor));

            const auto t0 = std::chrono::steady_clock::now();
            const InterpolateResult out = interpolate(input, sf, filter, pso);
            const auto t1 = std::chrono::steady_clock::now();

            BenchRecord rec;
            rec.image = ids[task.image_index];
            rec.scheme = to_string(task.scheme);
            rec.factor = task.factor;
            rec.wavelet = task.wavelet;
            rec.repeat = task.repeat;
            rec.psnr_db = psnr(gt, out.image, 1.0);
            rec.ssim = ssim(gt, out.image);
            rec.seconds = std::chrono::duration<double>(t1 - t0).count();
            records[static_cast<size_t>(t)] = std::move(rec);
        },
        cfg.workers);
    return records;
}

std::vector<BenchSummaryRow> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::tuple<std::string, int, std::string>,
             std::pair<std::vector<double>, std::vector<std::pair<double, double>>>>
        groups;  // key -> (finite psnrs, all (ssim, seconds))
    std::map<std::tuple<std::string, int, std::string>, int> inf_counts;
    for (const auto& r : records) {
        const auto key = std::make_tuple(r.scheme, r.factor, r.wavelet);
        if (std::isinf(r.psnr_db))
            ++inf_counts[key];
        else
            groups[key].first.push_back(r.psnr_db);
        groups[key].second.emplace_back(r.ssim, r.seconds);
    }
    std::vector<BenchSummaryRow> rows;
    for (const auto& [key, data] : groups) {
        BenchSummaryRow row;
        row.scheme = std::get<0>(key);
        row.factor = std::get<1>(key);
        row.wavelet = std::get<2>(key);
        row.rows = static_cast<int>(data.first.size());
        row.inf_rows = inf_counts.count(key) ? inf_counts[key] : 0;
        row.psnr_mean = mean_of(data.first);
        row.psnr_std = std_of(data.first, row.psnr_mean);
        std::vector<double> ssims, secs;
        for (const auto& [s, t] : data.second) {
            ssims.push_back(s);
            secs.push_back(t);
        }
        row.ssim_mean = mean_of(ssims);
        row.ssim_std = std_of(ssims, row.ssim_mean);
        row.seconds_mean = mean_of(secs);
        row.seconds_std = std_of(secs, row.seconds_mean);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_report(const std::vector<BenchRecord>& records, const std::string& detail_path,
                  const std::string& summary_path) {
    {
        std::ofstream out(detail_path);
        if (!out) throw std::runtime_error("cannot write " + detail_path);
        out << "image,scheme,factor,wavelet,repeat,psnr_db,ssim,seconds\n";
        for (const auto& r : records)
            out << r.image << "," << r.scheme << "," << r.factor << "," << r.wavelet << ","
                << r.repeat << "," << format_double(r.psnr_db) << "," << format_double(r.ssim)
                << "," << format_double(r.seconds) << "\n";
        if (!out) throw std::runtime_error("write failed: " + detail_path);
    }
    std::ofstream out(summary_path);
    if (!out) throw std::runtime_error("cannot write " + summary_path);
    out << "scheme,factor,wavelet,rows,inf_rows,psnr_mean,psnr_std,ssim_mean,ssim_std,"
           "seconds_mean,seconds_std\n";
    for (const auto& s : summarize(records))
        out << s.scheme << "," << s.factor << "," << s.wavelet << "," << s.rows << ","
            << s.inf_rows << "," << format_double(s.psnr_mean) << "," << format_double(s.psnr_std)
            << "," << format_double(s.ssim_mean) << "," << format_double(s.ssim_std) << ","
            << format_double(s.seconds_mean) << "," << format_double(s.seconds_std) << "\n";
    if (!out) throw std::runtime_error("write failed: " + summary_path);
}

std::vector<BenchRecord> read_report(const std::string& detail_path) {
    std::ifstream in(detail_path);
    if (!in) throw std::runtime_error("cannot read " + detail_path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("image,scheme,", 0) != 0)
        throw std::runtime_error(detail_path + ": not a benchmark detail CSV");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        BenchRecord r;
        auto next = [&] {
            if (!std::getline(ls, field, ',')) throw std::runtime_error("short CSV row: " + line);
            return field;
        };
        r.image = next();
        r.scheme = next();
        r.factor = std::stoi(next());
        r.wavelet = next();
        r.repeat = std::stoi(next());
        const auto num = [&](const std::string& f) {
            if (f == "inf") return std::numeric_limits<double>::infinity();
            if (f == "-inf") return -std::numeric_limits<double>::infinity();
            return std::stod(f);
        };
        r.psnr_db = num(next());
        r.ssim = num(next());
        r.seconds = num(next());
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace psi
