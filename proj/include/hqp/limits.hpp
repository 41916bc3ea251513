#pragma once

#include <cstdint>

namespace hqp {

// Hard ceiling on dense table cells; no Limits setting can raise it.
inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 27;

// Seed for the sampling fallback of lifted identity checks; fixed so
// non-exhaustive runs are reproducible.
inline constexpr std::uint64_t kLiftedSampleSeed = 0x68713173ULL;

// Capacity guards for operations that can blow up combinatorially.
// Functions that may build large intermediates accept a Limits value;
// callers can tighten the defaults (table_entries is also clamped to
// kMaxTableEntries).
struct Limits {
  // Largest dense table, in cells, that parsing or derived constructions
  // will produce.
  std::uint64_t table_entries = kMaxTableEntries;
  // Largest carrier for a materialized lifted groupoid.
  std::uint64_t lifted_carrier = 4096;
  // Largest candidate space a whole-space enumeration scan will walk.
  std::uint64_t enumeration_candidates = 1'000'000;
  // Largest assignment space an exhaustive identity check will walk.
  std::uint64_t identity_assignments = 10'000'000;
  // Largest order accepted by the isomorphism search.
  int isomorphism_order = 12;
  // Random assignments drawn when a lifted identity check falls back to
  // sampling.
  std::uint64_t lifted_samples = 100'000;
};

}  // namespace hqp
