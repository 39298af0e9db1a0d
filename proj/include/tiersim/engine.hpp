#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tiersim/ahdm.hpp"
#include "tiersim/flash.hpp"
#include "tiersim/metrics.hpp"
#include "tiersim/trace.hpp"
#include "tiersim/types.hpp"

namespace tiersim {

enum class ModeKind : std::uint8_t { Hybrid, PureSLC, PureMLC };

const char* mode_name(ModeKind mode);

struct DeviceSpec {
  ModeKind mode = ModeKind::Hybrid;
  TierConfig slc = TierConfig::slc_defaults(0);
  TierConfig mlc = TierConfig::mlc_defaults(0);
  AhdmConfig ahdm{};
  std::uint32_t adapt_interval = 1000;  // requests between adapt() calls

  // Chip counts are used for pricing and reports only; tier geometry is
  // given directly by the TierConfigs.
  std::uint64_t slc_chips = 1;
  std::uint64_t mlc_chips = 10;
  PriceModel price{};

  // Fold trace lpns modulo the cold tier's sustainable capacity so traces
  // addressing more space than the device fit. Identity for in-range lpns.
  bool wrap_lpns = true;
  bool keep_decision_log = false;
  // Run the full invariant walk after every request (slow; tests only).
  bool validate_each_request = false;

  void validate() const;  // throws std::invalid_argument

  static DeviceSpec hybrid(TierConfig slc, TierConfig mlc, AhdmConfig ahdm);
  static DeviceSpec pure_slc(TierConfig slc);
  static DeviceSpec pure_mlc(TierConfig mlc);
};

struct RequestOutcome {
  std::uint64_t latency_us = 0;
  std::uint32_t pages_touched = 0;
  std::uint32_t cold_inserts = 0;
  std::uint32_t warm_refreshes = 0;
  std::uint32_t promotes = 0;
  std::uint32_t hot_hits = 0;
  std::uint32_t migrations = 0;
};

// Drives one simulation: splits requests into page ops, consults the
// classifier (hybrid mode), routes I/O to the tiers and accounts latency.
// Strictly serial; independent runs share nothing.
class Simulator {
 public:
  explicit Simulator(DeviceSpec spec);

  RequestOutcome process(const TraceRecord& request);

  SimReport report() const;

  const DeviceSpec& spec() const { return spec_; }
  const FlashArray& flash() const { return flash_; }
  const AhdmClassifier* classifier() const { return ahdm_ ? &*ahdm_ : nullptr; }
  const std::vector<WriteClass>& decision_log() const { return decision_log_; }

  // Checks page conservation, mapping consistency, hot residency,
  // write conservation and latency additivity; throws std::logic_error.
  void validate_invariants() const;

 private:
  std::uint64_t page_size() const;
  Lpn fold(Lpn lpn) const;
  void read_page_op(Lpn lpn, RequestOutcome& out);
  void write_page_op(Lpn lpn, RequestOutcome& out);
  std::uint64_t demote(Lpn lpn);  // SLC -> MLC migration of a hot page
  std::uint64_t ensure_slc_headroom(Lpn incoming);

  DeviceSpec spec_;
  FlashArray flash_;
  std::optional<AhdmClassifier> ahdm_;
  std::uint64_t logical_capacity_ = 0;
  std::uint64_t cold_read_us_ = 0;

  std::uint64_t requests_ = 0;
  std::uint64_t read_requests_ = 0;
  std::uint64_t write_requests_ = 0;
  std::uint64_t page_ops_ = 0;
  std::uint64_t read_page_ops_ = 0;
  std::uint64_t write_page_ops_ = 0;
  std::uint64_t unmapped_reads_ = 0;
  std::uint64_t cold_inserts_ = 0;
  std::uint64_t warm_refreshes_ = 0;
  std::uint64_t promotes_ = 0;
  std::uint64_t hot_hits_ = 0;
  std::uint64_t migrations_ = 0;
  std::uint64_t migration_latency_us_ = 0;
  std::uint64_t demotions_ = 0;
  std::uint64_t pressure_demotions_ = 0;
  std::uint64_t total_latency_us_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> threshold_trajectory_;
  std::vector<WriteClass> decision_log_;
};

SimReport run_simulation(std::span<const TraceRecord> trace, const DeviceSpec& spec);

// Runs the same input `runs` times; true iff all reports are byte-identical.
bool replay_deterministic(std::span<const TraceRecord> trace, const DeviceSpec& spec,
                          int runs = 2);

}  // namespace tiersim
