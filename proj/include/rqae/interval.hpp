#pragma once

namespace rqae {

// Closed interval of signed amplitudes, always inside [-1, 1].
struct ConfidenceInterval {
  double low = 0.0;
  double high = 0.0;

  double center() const { return 0.5 * (low + high); }
  double half_width() const { return 0.5 * (high - low); }
  bool contains(double x) const { return low <= x && x <= high; }
};

}  // namespace rqae
