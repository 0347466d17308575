#pragma once

#include <stdexcept>
#include <string>

namespace transit {

// Reasons a chain (one contiguous block of rows) is dropped during
// validation or ingestion. Never fatal to a stream; tallied per chain.
enum class ChainReject {
  EmptyChain,
  WalkingLeg,
  NonMonotoneTime,
  NonPositiveDistance,
  UnknownMode,
  MalformedRow,
  NonContiguousChain,
  GapInLegIndex,
};

const char* to_string(ChainReject reason);

class ChainError : public std::runtime_error {
 public:
  ChainError(ChainReject reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  ChainReject reason() const { return reason_; }

 private:
  ChainReject reason_;
};

enum class RegistryFault {
  DuplicateId,
  NonContiguousIds,
  NoWalkingMode,
  MultipleWalkingModes,
  TooFewModes,
  Malformed,
};

const char* to_string(RegistryFault fault);

class RegistryError : public std::runtime_error {
 public:
  RegistryError(RegistryFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  RegistryFault fault() const { return fault_; }

 private:
  RegistryFault fault_;
};

enum class ZoneMapFault {
  ConflictingZone,
  MalformedRow,
};

class ZoneMapError : public std::runtime_error {
 public:
  ZoneMapError(ZoneMapFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  ZoneMapFault fault() const { return fault_; }

 private:
  ZoneMapFault fault_;
};

// Missing or wrong header line in a delimited input stream.
class IngestFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModeOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A stop without a zone assignment under the Error policy.
class UnknownStopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid synthetic-corpus specification.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace transit
