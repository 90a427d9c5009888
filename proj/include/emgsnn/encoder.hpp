#pragma once

#include <span>
#include <vector>

#include "emgsnn/raster.hpp"
#include "emgsnn/signal.hpp"

namespace emgsnn {

// Threshold-crossing spike encoder. Each channel gets K linearly spaced
// voltage levels; an ONSET neuron per level fires on an upward crossing, an
// OFFSET neuron on a downward crossing, and one Touch neuron fires while the
// signal sits at or above the top level without crossing it.
struct EncoderConfig {
  double v_min = -2.0;
  double v_max = 2.0;
  int levels_K = 4;
  bool touch_enabled = true;

  int neurons_per_channel() const {
    return 2 * levels_K + (touch_enabled ? 1 : 0);
  }
};

// K strictly increasing levels spanning [v_min, v_max] endpoint-inclusive;
// single level at the midpoint when K = 1.
std::vector<double> build_thresholds(const EncoderConfig& cfg);

// Row layout per channel: ONSET_1..K, OFFSET_1..K, Touch.
// Crossing convention is half-open on "at or above": ONSET_i fires at t >= 1
// iff s[t-1] < theta_i <= s[t]; OFFSET_i iff s[t-1] >= theta_i > s[t];
// Touch iff both samples are at/above theta_K. Column 0 never spikes.
SpikeRaster encode_channel(std::span<const float> signal,
                           const std::vector<double>& thresholds,
                           bool touch_enabled);

// Channel-major stacking: row (2K+touch)*c + r is row r of channel c.
SpikeRaster encode_multichannel(const EmgWindow& win, const EncoderConfig& cfg);

// Threshold comparisons performed for one window (used by the bench
// harness): one level test per sample per threshold per channel.
std::size_t encode_comparison_count(std::size_t channels, std::size_t timesteps,
                                    const EncoderConfig& cfg);

}  // namespace emgsnn
