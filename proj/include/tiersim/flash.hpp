#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tiersim/types.hpp"

namespace tiersim {

enum class TierKind : std::uint8_t { SLC, MLC };

const char* tier_name(TierKind kind);

struct TierConfig {
  TierKind kind = TierKind::MLC;
  std::uint32_t page_size_bytes = 4096;
  std::uint32_t pages_per_block = 128;
  std::uint32_t num_blocks = 0;
  std::uint64_t read_us = 50;
  std::uint64_t program_us = 1000;
  std::uint64_t erase_us = 500;
  std::uint64_t endurance = 10000;  // max program/erase cycles per block
  std::uint32_t gc_free_block_threshold = 1;

  std::uint64_t total_pages() const {
    return std::uint64_t(num_blocks) * pages_per_block;
  }

  void validate() const;  // throws std::invalid_argument

  // 256 KB blocks of 4 KB pages; 45 us read, 240 us program, 500 us erase.
  static TierConfig slc_defaults(std::uint32_t num_blocks);
  // 512 KB blocks of 4 KB pages; 50 us read, 1 ms program, 500 us erase.
  static TierConfig mlc_defaults(std::uint32_t num_blocks);
};

enum class PageState : std::uint8_t { Free, Valid, Invalid };

struct Block {
  std::vector<PageState> state;  // page states; [next_free, P) are Free
  std::vector<Lpn> owner;        // reverse map, meaningful where Valid
  std::uint32_t valid = 0;
  std::uint32_t invalid = 0;
  std::uint32_t next_free = 0;  // append point within the block
  std::uint64_t erase_cycles = 0;
  std::uint64_t program_count = 0;  // page programs ever issued to this block

  std::uint32_t free_pages() const {
    return std::uint32_t(state.size()) - next_free;
  }
};

struct PhysAddr {
  TierKind tier = TierKind::MLC;
  std::uint32_t block = 0;
  std::uint32_t page = 0;

  bool operator==(const PhysAddr&) const = default;
};

struct TierStats {
  double mean_programs_per_block = 0.0;
  std::uint64_t max_erase_cycles = 0;
  bool saturated = false;
  double live_fraction = 0.0;
};

struct FlashError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnmappedError : FlashError {
  explicit UnmappedError(Lpn lpn)
      : FlashError("lpn " + std::to_string(lpn) + " is not mapped"), lpn(lpn) {}
  Lpn lpn;
};

struct TierFullError : FlashError {
  explicit TierFullError(TierKind kind)
      : FlashError(std::string(tier_name(kind)) + " tier has no reclaimable space"),
        kind(kind) {}
  TierKind kind;
};

struct NoReclaimableBlockError : FlashError {
  explicit NoReclaimableBlockError(TierKind kind)
      : FlashError(std::string(tier_name(kind)) + " tier has no block with invalid pages"),
        kind(kind) {}
  TierKind kind;
};

// One or two flash tiers with a shared page-mapped translation layer.
// Writes are out-of-place at a per-tier append point; garbage collection is
// greedy (victim = block with the most invalid pages) and runs whenever the
// tier's free-block count drops below its threshold. Erasing a block past its
// endurance sets the tier's sticky saturated flag instead of failing.
class FlashArray {
 public:
  explicit FlashArray(const TierConfig& only);
  FlashArray(const TierConfig& slc, const TierConfig& mlc);

  // Latency of reading lpn's page; throws UnmappedError if never written.
  std::uint64_t read_page(Lpn lpn);

  // Out-of-place program of lpn on the given tier, invalidating any previous
  // copy (either tier). Returns program latency plus any GC latency incurred.
  std::uint64_t write_page(Lpn lpn, TierKind tier);

  // Moves lpn's page to dst: source read + write_page on dst.
  std::uint64_t migrate_page(Lpn lpn, TierKind dst);

  // Collects until the tier's free-block count reaches its threshold.
  // Returns the summed relocation + erase latency (0 if nothing to do).
  std::uint64_t run_gc(TierKind tier);

  TierStats tier_stats(TierKind tier) const;

  bool has_tier(TierKind tier) const;
  const TierConfig& config(TierKind tier) const;
  std::optional<PhysAddr> lookup(Lpn lpn) const;

  std::uint64_t live_pages(TierKind tier) const;
  // Sustainable live ceiling: (num_blocks - gc_free_block_threshold - 1)
  // blocks worth of pages. Beyond it GC cannot keep up with rewrites.
  std::uint64_t max_live_pages(TierKind tier) const;

  struct TierCounters {
    std::uint64_t reads = 0;
    std::uint64_t programs = 0;
    std::uint64_t erases = 0;
    std::uint64_t gc_relocations = 0;

    bool operator==(const TierCounters&) const = default;
  };
  TierCounters counters(TierKind tier) const;

  std::uint32_t block_count(TierKind tier) const;
  const Block& block(TierKind tier, std::uint32_t index) const;
  const std::unordered_map<Lpn, PhysAddr>& forward_map() const { return map_; }

 private:
  struct Tier {
    TierConfig cfg;
    std::vector<Block> blocks;
    std::deque<std::uint32_t> free_list;  // fully erased blocks, FIFO
    std::optional<std::uint32_t> active;  // current append block
    std::uint64_t live = 0;
    TierCounters counts;
    bool saturated = false;
  };

  Tier& tier(TierKind kind);
  const Tier& tier(TierKind kind) const;

  std::uint64_t collect(Tier& t);              // GC loop
  PhysAddr program_page(Tier& t, Lpn lpn);     // allocation + bookkeeping
  void invalidate(const PhysAddr& addr);

  std::optional<Tier> slc_;
  std::optional<Tier> mlc_;
  std::unordered_map<Lpn, PhysAddr> map_;
};

}  // namespace tiersim
