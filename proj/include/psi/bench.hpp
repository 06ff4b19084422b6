#pragma once

#include "psi/decimation.hpp"
#include "psi/pso.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace psi {

struct BenchConfig {
    std::string dataset_dir;
    std::vector<DecimationScheme> schemes;
    std::vector<int> factors = {2};
    std::vector<std::string> wavelets = {"db2"};
    int repeats = 5;
    std::uint64_t seed_base = 0;
    int workers = 1;  // parallel tasks; never changes recorded values
    PsoConfig pso;    // seed overridden per task
};

struct BenchRecord {
    std::string image;
    std::string scheme;
    int factor = 2;
    std::string wavelet;
    int repeat = 0;
    double psnr_db = 0.0;
    double ssim = 0.0;
    double seconds = 0.0;
};

struct BenchSummaryRow {
    std::string scheme;
    int factor = 2;
    std::string wavelet;
    int rows = 0;      // finite-PSNR records aggregated
    int inf_rows = 0;  // infinite-PSNR records counted separately
    double psnr_mean = 0.0, psnr_std = 0.0;
    double ssim_mean = 0.0, ssim_std = 0.0;
    double seconds_mean = 0.0, seconds_std = 0.0;
};

// Per (image, scheme, factor, wavelet, repeat): decimates the original,
// interpolates the result back and scores it against the original. Timing
// covers the interpolate call only. The PSO seed for each task is
// seed_base ^ fnv1a("<image>:<repeat>") so reruns reproduce and repeats
// differ. Unreadable or non-conforming images are skipped with a warning on
// stderr; an empty dataset is an error.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

std::vector<BenchSummaryRow> summarize(const std::vector<BenchRecord>& records);

// Detail CSV (`image,scheme,factor,wavelet,repeat,psnr_db,ssim,seconds`) plus
// a summary CSV of per-(scheme,factor,wavelet) means and standard deviations.
// Numbers are written with round-trip precision.
void write_report(const std::vector<BenchRecord>& records, const std::string& detail_path,
                  const std::string& summary_path);

// Parses a detail CSV produced by write_report.
std::vector<BenchRecord> read_report(const std::string& detail_path);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace psi
