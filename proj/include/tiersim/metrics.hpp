#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiersim {

// Chip prices in integer cents so catalog totals come out exact.
struct PriceModel {
  std::int64_t slc_chip_cents = 300;
  std::int64_t mlc_chip_cents = 90;
};

std::int64_t price_cents(std::uint64_t num_slc_chips, std::uint64_t num_mlc_chips,
                         const PriceModel& model);
double price_usd(std::uint64_t num_slc_chips, std::uint64_t num_mlc_chips,
                 const PriceModel& model);

// 100 * (baseline - hybrid) / baseline: percent reduction in mean per-block
// writes, reported as lifespan increase.
double lifespan_gain(double baseline_mean_programs, double hybrid_mean_programs);

// Same convention for mean access time.
double access_time_gain(double baseline_mean_us, double hybrid_mean_us);

// 100 * (hybrid - baseline) / hybrid: price premium as a share of the hybrid
// price ($12 vs $9 reads as a 25% increase under this convention).
double price_increase_percent(double hybrid_price, double baseline_price);

struct TierReport {
  std::string kind;  // "slc" or "mlc"
  std::uint32_t num_blocks = 0;
  std::uint32_t pages_per_block = 0;
  std::uint64_t total_pages = 0;
  std::uint64_t live_pages = 0;
  std::uint64_t programs = 0;
  std::uint64_t erases = 0;
  std::uint64_t gc_relocations = 0;
  std::uint64_t reads = 0;
  double mean_programs_per_block = 0.0;
  std::uint64_t max_erase_cycles = 0;
  bool saturated = false;
  double live_fraction = 0.0;
};

// Every output metric of one simulation run.
struct SimReport {
  std::string mode;

  std::uint64_t total_requests = 0;
  std::uint64_t read_requests = 0;
  std::uint64_t write_requests = 0;
  std::uint64_t total_page_ops = 0;
  std::uint64_t read_page_ops = 0;
  std::uint64_t write_page_ops = 0;
  std::uint64_t unmapped_reads = 0;

  std::uint64_t cold_inserts = 0;
  std::uint64_t warm_refreshes = 0;
  std::uint64_t promotes = 0;
  std::uint64_t hot_hits = 0;

  // Share of write page-ops answered by the SLC (promotes + hot hits).
  double hot_fraction = 0.0;
  // Same numerator over all page-ops (the request-distribution view).
  double hot_fraction_all_ops = 0.0;

  std::uint64_t migration_count = 0;
  std::uint64_t migration_latency_us = 0;
  std::uint64_t demotions = 0;
  std::uint64_t pressure_demotions = 0;

  std::uint64_t total_latency_us = 0;
  double mean_access_time_us = 0.0;  // per request

  std::optional<TierReport> slc{};
  std::optional<TierReport> mlc{};

  // (request index, threshold) sampled at start and on every adapt call.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> threshold_trajectory{};

  std::uint64_t slc_chips = 0;
  std::uint64_t mlc_chips = 0;
  std::int64_t price_cents = 0;
  double price_usd = 0.0;
};

enum class ReportFormat { Json, Csv, PlotDat };

std::string emit_json(const SimReport& report);
std::string emit_csv(const SimReport& report);

// One file per figure analog: request distribution, writes per block,
// access time, threshold trajectory. Returns (file name, contents) pairs.
std::vector<std::pair<std::string, std::string>> emit_plot_dat(const SimReport& report);

// Dispatch by format; json and csv yield a single (name, contents) pair.
std::vector<std::pair<std::string, std::string>> emit_report(const SimReport& report,
                                                             ReportFormat format);

}  // namespace tiersim
