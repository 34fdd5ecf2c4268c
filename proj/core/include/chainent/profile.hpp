#pragma once

#include <string>
#include <vector>

#include "chainent/errors.hpp"

namespace chainent {

// One sample of an entanglement profile: a contiguous block of `block_size`
// spins whose reduced state has von Neumann entropy `entropy_bits`.
struct ProfilePoint {
  int block_size = 0;
  double entropy_bits = 0.0;
};

// Block entropy as a function of block size for one model.  Block sizes are
// strictly increasing but need not be contiguous.
struct EntropyProfile {
  std::string model;  // human-readable tag, not part of any numeric contract
  std::vector<ProfilePoint> points;

  // Throws invalid_argument unless block sizes are strictly increasing
  // positive integers and every entropy is finite and nonnegative.
  void validate() const;

  bool has_block(int block_size) const;

  // Entropy at an exact block size; throws invalid_argument if absent.
  double entropy_at(int block_size) const;
};

}  // namespace chainent
