#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emgsnn/errors.hpp"

namespace emgsnn {

inline constexpr int kNumClasses = 3;  // Rock=0, Paper=1, Scissors=2

// Multi-channel real-valued voltage time series with an optional gesture
// label. Samples are channel-major 32-bit floats, matching the rawbin
// on-disk layout.
struct EmgRecording {
  int channels = 8;
  double sample_rate_hz = 200.0;
  std::vector<std::vector<float>> samples;  // samples[channel][t]
  std::optional<int> label;                 // 0..2 when present
  std::string subject_id;

  std::size_t length() const { return samples.empty() ? 0 : samples[0].size(); }
};

// View into one recording. The label is copied so relabeling a window never
// touches the source recording.
struct EmgWindow {
  std::shared_ptr<const EmgRecording> rec;
  std::size_t start = 0;
  std::size_t length = 0;
  int label = -1;

  float sample(int channel, std::size_t t) const {
    return rec->samples[channel][start + t];
  }
};

struct Dataset {
  std::vector<EmgWindow> windows;
  std::array<std::size_t, kNumClasses> histogram{};

  void push(EmgWindow w) {
    histogram[w.label]++;
    windows.push_back(std::move(w));
  }
  std::size_t size() const { return windows.size(); }
};

enum class FileFormat { csv, rawbin };

EmgRecording load_recording(const std::string& path, FileFormat format);
void save_recording(const std::string& path, const EmgRecording& rec,
                    FileFormat format);

// Synthetic Roshambo stand-in. Each class has a distinct per-channel
// amplitude profile (documented here so separation margins are assertable
// from config alone); class 2 additionally holds saturation plateaus on its
// strongest channel to exercise the Touch encoding path.
struct SynthConfig {
  int channels = 8;
  std::size_t length = 400;
  double sample_rate_hz = 200.0;
  double noise_std = 0.05;
  // Carrier frequency for channel c is base_freq_hz + freq_step_hz * c.
  double base_freq_hz = 3.0;
  double freq_step_hz = 0.7;
  double envelope_hz = 1.0;
  // Per-class, per-channel carrier amplitude in volts.
  std::array<std::array<double, 8>, kNumClasses> amplitude = {{
      {1.8, 1.6, 1.4, 1.1, 0.5, 0.3, 0.25, 0.2},
      {0.3, 0.5, 1.0, 1.7, 1.7, 1.0, 0.5, 0.3},
      {0.2, 0.25, 0.4, 0.5, 1.0, 1.4, 1.7, 1.9},
  }};
  bool class2_plateaus = true;  // sustained +2.0 V presses on channel 7
  double clamp_volts = 2.0;

  // Smallest pairwise L-inf distance between class amplitude rows.
  double class_margin() const;
};

EmgRecording generate_synthetic(int class_id, std::uint64_t seed,
                                const SynthConfig& cfg = {});

std::vector<EmgWindow> window(std::shared_ptr<const EmgRecording> rec,
                              std::size_t length_T, std::size_t stride);

struct SplitResult {
  Dataset train;
  Dataset test;
};

// Stratified split at recording granularity: windows sharing a source
// recording always land on the same side.
SplitResult split_dataset(const Dataset& ds, double test_fraction,
                          std::uint64_t seed);

}  // namespace emgsnn
