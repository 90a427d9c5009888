#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emgsnn/mat.hpp"
#include "emgsnn/neuron.hpp"
#include "emgsnn/raster.hpp"

namespace emgsnn {

// Input spikes -> recurrent hybrid hidden layer (m LIF then n DEXAT, LIF
// indices first) -> 3 leaky readout units. Recurrence has a one-step delay:
// z[t-1] feeds timestep t.
struct Topology {
  int n_in = 72;
  int m_lif = 50;
  int n_dexat = 100;
  int n_out = 3;
  bool self_recurrence_allowed = false;

  int hidden() const { return m_lif + n_dexat; }
  bool operator==(const Topology&) const = default;
};

enum class Precision : std::uint8_t { f64 = 0, quant8 = 1 };

struct Weights {
  Mat w_in;   // hidden x n_in
  Mat w_rec;  // hidden x hidden, zero diagonal unless self-recurrence allowed
  Mat w_out;  // n_out x hidden
  std::vector<double> b_out;
  Precision precision = Precision::f64;
};

struct NetworkState {
  std::vector<LifState> lif;
  std::vector<DexatState> dexat;
  std::vector<double> readout;
  std::size_t timestep = 0;
};

struct Network {
  Topology topo;
  Weights w;
  LifParams lif_params;
  DexatParams dexat_params;
  ReadoutParams readout_params;
  NetworkState state;
};

struct ForwardTrace {
  Mat readout;            // n_out x T
  SpikeRaster hidden;     // empty unless recorded
  std::vector<std::size_t> spike_counts;  // per hidden neuron
  std::size_t timesteps = 0;
};

// Weight entries ~ Normal(0, variance 1/fan_in), drawn deterministically
// from the seed; biases zero.
Network init_network(const Topology& topo, std::uint64_t seed);

ForwardTrace forward(Network& net, const SpikeRaster& input, bool record_hidden);

enum class ClassifyRule { mean_readout };

struct Classification {
  int class_id;
  std::vector<double> scores;
};

// Time-mean of each readout trajectory; ties break to the lowest index.
Classification classify(const ForwardTrace& trace,
                        ClassifyRule rule = ClassifyRule::mean_readout);

void reset_state(Network& net);

// Versioned little-endian container; round-trips weights bit-exactly.
void save_network(const std::string& path, const Network& net);
Network load_network(const std::string& path);

}  // namespace emgsnn
