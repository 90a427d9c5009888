#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "emgsnn/errors.hpp"

namespace emgsnn {

// Binary neuron x timestep matrix, neuron-major. Used both for encoder
// output (input spikes) and recorded hidden-layer activity.
struct SpikeRaster {
  std::size_t neurons = 0;
  std::size_t timesteps = 0;
  std::vector<std::uint8_t> bits;  // bits[n * timesteps + t]

  SpikeRaster() = default;
  SpikeRaster(std::size_t n, std::size_t t)
      : neurons(n), timesteps(t), bits(n * t, 0) {}

  std::uint8_t get(std::size_t n, std::size_t t) const {
    return bits[n * timesteps + t];
  }
  void set(std::size_t n, std::size_t t, std::uint8_t v) {
    bits[n * timesteps + t] = v;
  }
  const std::uint8_t* row(std::size_t n) const {
    return bits.data() + n * timesteps;
  }
  std::uint8_t* row(std::size_t n) { return bits.data() + n * timesteps; }

  std::size_t count_spikes() const {
    std::size_t c = 0;
    for (auto b : bits) c += b;
    return c;
  }

  bool operator==(const SpikeRaster& o) const {
    return neurons == o.neurons && timesteps == o.timesteps && bits == o.bits;
  }
};

// Text export: one line per neuron, characters '0'/'1'.
inline void write_raster(std::ostream& os, const SpikeRaster& r) {
  for (std::size_t n = 0; n < r.neurons; ++n) {
    for (std::size_t t = 0; t < r.timesteps; ++t)
      os.put(r.get(n, t) ? '1' : '0');
    os.put('\n');
  }
}

inline SpikeRaster read_raster(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw MalformedFile("raster: no rows");
  SpikeRaster r(lines.size(), lines[0].size());
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].size() != r.timesteps)
      throw MalformedFile("raster: ragged rows");
    for (std::size_t t = 0; t < r.timesteps; ++t) {
      char c = lines[n][t];
      if (c != '0' && c != '1') throw MalformedFile("raster: bad character");
      r.set(n, t, c == '1');
    }
  }
  return r;
}

}  // namespace emgsnn
