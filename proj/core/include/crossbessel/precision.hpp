#pragma once

namespace crossbessel {

// Working precision plus the relative tightness requested for enclosures.
// Zero enclosures are refined to a relative width of 2^-target_radius_bits.
struct PrecisionConfig {
  int working_bits = 256;
  int target_radius_bits = 192;

  // target = 3/4 of the working precision
  static PrecisionConfig with_bits(int bits) { return {bits, bits - bits / 4}; }

  void validate() const;

  PrecisionConfig escalated() const { return {2 * working_bits, 2 * target_radius_bits}; }

  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;
};

}  // namespace crossbessel
