#include "chainent/profile.hpp"

#include <cmath>

namespace chainent {

void EntropyProfile::validate() const {
  int previous = 0;
  for (const ProfilePoint& point : points) {
    if (point.block_size <= previous) {
      throw Error(ErrorKind::invalid_argument,
                  "profile block sizes must be strictly increasing positive "
                  "integers");
    }
    if (!std::isfinite(point.entropy_bits) || point.entropy_bits < 0.0) {
      throw Error(ErrorKind::invalid_argument,
                  "profile entropies must be finite and nonnegative");
    }
    previous = point.block_size;
  }
}

bool EntropyProfile::has_block(int block_size) const {
  for (const ProfilePoint& point : points) {
    if (point.block_size == block_size) return true;
  }
  return false;
}

double EntropyProfile::entropy_at(int block_size) const {
  for (const ProfilePoint& point : points) {
    if (point.block_size == block_size) return point.entropy_bits;
  }
  throw Error(ErrorKind::invalid_argument,
              "no profile point at block size " + std::to_string(block_size));
}

}  // namespace chainent
