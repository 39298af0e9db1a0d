#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiersim/types.hpp"

namespace tiersim {

enum class Op : std::uint8_t { Read, Write };

// One block-I/O request. lba is in 512-byte sectors.
struct TraceRecord {
  std::uint64_t timestamp_us = 0;
  Op op = Op::Read;
  std::uint64_t lba = 0;
  std::uint64_t size_bytes = 0;

  bool operator==(const TraceRecord&) const = default;
};

struct MalformedLine {
  std::size_t line_no = 0;  // 1-based
  std::string reason;
};

struct ParseResult {
  std::vector<TraceRecord> records;
  std::vector<MalformedLine> malformed;
};

struct TraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyTraceError : TraceError {
  EmptyTraceError() : TraceError("trace contains no valid records") {}
};

struct OutOfOrderError : TraceError {
  explicit OutOfOrderError(std::size_t line)
      : TraceError("timestamp decreases at line " + std::to_string(line)),
        line_no(line) {}
  std::size_t line_no;
};

enum class TraceFormat { Msr, Csv };

// MSR-style lines: Timestamp,Hostname,DiskNumber,Type,Offset,Size,ResponseTime
// Timestamp is in 100 ns ticks (converted to us, rebased to the first record),
// Type is Read/Write case-insensitive, Offset and Size are bytes.
// Hostname, DiskNumber and ResponseTime are ignored.
ParseResult parse_msr(std::istream& in);

// Simple csv lines: timestamp_us,op,lba,size_bytes with op in {R,W}.
// An optional header line is detected by a non-numeric first field.
ParseResult parse_csv(std::istream& in);

ParseResult load_trace(const std::string& path, TraceFormat format);

// Serializes records in the simple csv format (no header).
void write_csv(const std::vector<TraceRecord>& records, std::ostream& out);

// Deterministic synthetic workload: single 4 KB page requests, addresses
// drawn Zipf(zipf_s) over address_space_pages, ops Bernoulli(write_ratio).
struct SyntheticSpec {
  std::uint64_t num_requests = 0;
  double write_ratio = 0.5;
  double zipf_s = 1.0;
  std::uint64_t address_space_pages = 1;
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

std::vector<TraceRecord> generate_synthetic(const SyntheticSpec& spec);

}  // namespace tiersim
