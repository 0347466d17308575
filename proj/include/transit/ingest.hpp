#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "transit/chain.hpp"
#include "transit/errors.hpp"
#include "transit/modes.hpp"

namespace transit {

inline constexpr std::string_view kChainsCsvHeader =
    "chain_id,leg_index,mode_id,board_stop_id,alight_stop_id,board_time,"
    "alight_time,distance_m";
inline constexpr std::string_view kZoneMapCsvHeader = "stop_id,zone_id";

/// Per-stream ingestion accounting. One contiguous block of rows sharing a
/// chain_id counts as one chain encounter; every encounter is either
/// accepted or rejected with a reason.
struct IngestReport {
  std::int64_t chains_accepted = 0;
  std::int64_t chains_rejected = 0;
  std::map<ChainReject, std::int64_t> rejection_reasons;

  std::int64_t chains_encountered() const {
    return chains_accepted + chains_rejected;
  }
  void merge(const IngestReport& other);

  bool operator==(const IngestReport&) const = default;
};

namespace detail {

// Flat open-addressing set of 64-bit id hashes; tracks which chain ids have
// already closed so reappearing ids can be rejected.
class IdSet {
 public:
  // Returns false if the hash was already present.
  bool insert(std::uint64_t hash);

 private:
  void grow();
  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace detail

/// Single-pass streaming parser for the chains CSV. Memory is bounded by one
/// chain's rows plus a hash per distinct chain id seen. Malformed or invalid
/// chains are skipped and tallied, never fatal; only a missing or wrong
/// header throws (IngestFormatError).
class ChainReader {
 public:
  ChainReader(std::istream& in, const ModeRegistry& registry);

  // Next accepted chain in file order; false at end of stream.
  bool next(TripChain& out);

  const IngestReport& report() const { return report_; }

  // FNV-1a over every byte consumed so far; stream digest once exhausted.
  std::uint64_t digest() const { return digest_; }

 private:
  bool next_line(std::string_view& line);
  void open_block(std::string_view id);
  void consume_row(std::string_view line);
  bool finalize_block(TripChain& out);

  std::istream& in_;
  const ModeRegistry& registry_;

  std::string buffer_;
  std::size_t scan_pos_ = 0;
  bool input_exhausted_ = false;
  bool done_ = false;

  bool block_open_ = false;
  std::string current_id_;
  std::vector<Leg> rows_;
  std::optional<ChainReject> poison_;

  detail::IdSet seen_ids_;
  IngestReport report_;
  std::uint64_t digest_ = 14695981039346656037ULL;
};

// Drains a stream into memory; convenience for small corpora and tests.
std::pair<std::vector<TripChain>, IngestReport> parse_chains(
    std::istream& in, const ModeRegistry& registry);

/// Parses the modes JSON document: an array of
/// {"id": int, "name": string, "walking": bool}. Throws RegistryError.
ModeRegistry parse_mode_registry(std::istream& in);

/// Parses the stop->zone CSV. A zero-byte stream yields an empty map;
/// otherwise the header is required. Conflicting duplicate stops throw.
std::unordered_map<std::string, std::int64_t> parse_zone_map(std::istream& in);

/// Streaming writer for the chains CSV format; emits the header on
/// construction and one row per leg thereafter.
class ChainCsvWriter {
 public:
  explicit ChainCsvWriter(std::ostream& out);
  void write(const TripChain& chain);
  void flush();

 private:
  std::ostream& out_;
  std::string buffer_;
};

void write_chains_csv(std::ostream& out, std::span<const TripChain> chains);

}  // namespace transit
