#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tiersim/types.hpp"

namespace tiersim {

enum class AdaptPolicy : std::uint8_t { Off, Watermark };

// Watermark threshold adaptation: raise the migration threshold while the
// SLC runs hot (live fraction above high), lower it while it runs cold.
struct WatermarkConfig {
  double low = 0.3;
  double high = 0.9;
  std::uint64_t step = 1;
  std::uint64_t min_threshold = 1;
  std::uint64_t max_threshold = 16;
};

struct AhdmConfig {
  std::uint64_t warm_capacity = 0;  // max entries of list W
  std::uint64_t hot_capacity = 0;   // max entries of list H
  std::uint64_t threshold = 2;      // referral count that triggers promotion
  AdaptPolicy policy = AdaptPolicy::Off;
  WatermarkConfig watermark{};

  void validate() const;  // throws std::invalid_argument
};

enum class WriteClass : std::uint8_t { ColdInsert, WarmRefresh, Promote, HotHit };

struct WriteDecision {
  WriteClass cls = WriteClass::ColdInsert;
  std::optional<Lpn> demoted{};       // H tail evicted to make room (Promote only)
  std::optional<Lpn> warm_evicted{};  // W tail evicted to make room (ColdInsert only)

  bool operator==(const WriteDecision&) const = default;
};

struct WarmEntry {
  Lpn lpn = 0;
  std::uint64_t referrals = 0;

  bool operator==(const WarmEntry&) const = default;
};

// Hot-data classifier over two bounded LRU lists: W holds warm pages with
// referral counts, H holds hot pages. A write to a warm page whose referral
// count has reached the threshold promotes it to H. Reads never touch the
// lists. Both lists are doubly linked with a hash index by lpn, so every
// operation is O(1).
class AhdmClassifier {
 public:
  explicit AhdmClassifier(AhdmConfig cfg);

  AhdmClassifier(const AhdmClassifier& other);
  AhdmClassifier& operator=(const AhdmClassifier& other);
  AhdmClassifier(AhdmClassifier&&) noexcept = default;
  AhdmClassifier& operator=(AhdmClassifier&&) noexcept = default;

  WriteDecision on_write(Lpn lpn);

  // Reads are processed routinely; classifier state is untouched.
  void on_read(Lpn lpn) const noexcept;

  bool is_hot(Lpn lpn) const;

  // Watermark policy step; returns the (possibly updated) threshold.
  // Throws std::logic_error when the policy is Off.
  std::uint64_t adapt(double slc_live_fraction);

  // Removes and returns the least recently used hot page, if any.
  std::optional<Lpn> demote_lru();

  std::uint64_t threshold() const { return threshold_; }
  std::size_t warm_size() const { return warm_.size(); }
  std::size_t hot_size() const { return hot_.size(); }
  const AhdmConfig& config() const { return cfg_; }

  // Most recently used first.
  std::vector<WarmEntry> warm_snapshot() const;
  std::vector<Lpn> hot_snapshot() const;

  // Elementary structure operations performed so far (hash probes, list
  // relinks); grows by a constant per classifier operation.
  std::uint64_t step_count() const { return steps_; }

 private:
  using WarmList = std::list<WarmEntry>;
  using HotList = std::list<Lpn>;

  void rebuild_index();

  AhdmConfig cfg_;
  std::uint64_t threshold_;
  WarmList warm_;
  HotList hot_;
  std::unordered_map<Lpn, WarmList::iterator> warm_index_;
  std::unordered_map<Lpn, HotList::iterator> hot_index_;
  std::uint64_t steps_ = 0;
};

}  // namespace tiersim
