#include "emgsnn/encoder.hpp"

#include <cmath>

namespace emgsnn {

std::vector<double> build_thresholds(const EncoderConfig& cfg) {
  const int k = cfg.levels_K;
  if (k == 1) return {0.5 * (cfg.v_min + cfg.v_max)};
  std::vector<double> levels(k);
  const double step = (cfg.v_max - cfg.v_min) / (k - 1);
  for (int i = 0; i < k; ++i) levels[i] = cfg.v_min + step * i;
  levels.back() = cfg.v_max;  // pin the endpoint exactly
  return levels;
}

SpikeRaster encode_channel(std::span<const float> signal,
                           const std::vector<double>& thresholds,
                           bool touch_enabled) {
  const std::size_t T = signal.size();
  const std::size_t K = thresholds.size();
  SpikeRaster r(2 * K + (touch_enabled ? 1 : 0), T);

  for (float v : signal)
    if (!std::isfinite(v)) throw NonFiniteValue("encode_channel: non-finite sample");

  for (std::size_t t = 1; t < T; ++t) {
    const double prev = signal[t - 1];
    const double cur = signal[t];
    for (std::size_t i = 0; i < K; ++i) {
      const double th = thresholds[i];
      const bool prev_at = prev >= th;
      const bool cur_at = cur >= th;
      if (!prev_at && cur_at) r.set(i, t, 1);            // ONSET_i
      else if (prev_at && !cur_at) r.set(K + i, t, 1);   // OFFSET_i
    }
    if (touch_enabled) {
      const double top = thresholds[K - 1];
      if (prev >= top && cur >= top) r.set(2 * K, t, 1);  // Touch
    }
  }
  return r;
}

SpikeRaster encode_multichannel(const EmgWindow& win, const EncoderConfig& cfg) {
  const auto thresholds = build_thresholds(cfg);
  const int per = cfg.neurons_per_channel();
  const int channels = win.rec->channels;
  SpikeRaster out(static_cast<std::size_t>(per) * channels, win.length);
  for (int c = 0; c < channels; ++c) {
    std::span<const float> sig(win.rec->samples[c].data() + win.start, win.length);
    SpikeRaster one = encode_channel(sig, thresholds, cfg.touch_enabled);
    for (int rrow = 0; rrow < per; ++rrow)
      std::copy(one.row(rrow), one.row(rrow) + win.length,
                out.row(static_cast<std::size_t>(per) * c + rrow));
  }
  return out;
}

std::size_t encode_comparison_count(std::size_t channels, std::size_t timesteps,
                                    const EncoderConfig& cfg) {
  return channels * timesteps * static_cast<std::size_t>(cfg.levels_K);
}

}  // namespace emgsnn
