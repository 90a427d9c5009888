#include "emgsnn/network.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "emgsnn/errors.hpp"
#include "emgsnn/rng.hpp"

namespace emgsnn {

namespace {

void fill_gaussian(Mat& m, Rng& rng, double stddev) {
  for (auto& v : m.d) v = rng.normal(0.0, stddev);
}

}  // namespace

Network init_network(const Topology& topo, std::uint64_t seed) {
  Network net;
  net.topo = topo;
  const int h = topo.hidden();
  net.w.w_in = Mat(h, topo.n_in);
  net.w.w_rec = Mat(h, h);
  net.w.w_out = Mat(topo.n_out, h);
  net.w.b_out.assign(topo.n_out, 0.0);

  Rng rng(seed);
  fill_gaussian(net.w.w_in, rng, 1.0 / std::sqrt(static_cast<double>(topo.n_in)));
  fill_gaussian(net.w.w_rec, rng, 1.0 / std::sqrt(static_cast<double>(h)));
  fill_gaussian(net.w.w_out, rng, 1.0 / std::sqrt(static_cast<double>(h)));
  if (!topo.self_recurrence_allowed)
    for (int i = 0; i < h; ++i) net.w.w_rec.at(i, i) = 0.0;

  reset_state(net);
  return net;
}

void reset_state(Network& net) {
  net.state.lif.assign(net.topo.m_lif, LifState{});
  net.state.dexat.assign(net.topo.n_dexat, DexatState{});
  net.state.readout.assign(net.topo.n_out, 0.0);
  net.state.timestep = 0;
}

ForwardTrace forward(Network& net, const SpikeRaster& input, bool record_hidden) {
  const int h = net.topo.hidden();
  const int m = net.topo.m_lif;
  if (input.neurons != static_cast<std::size_t>(net.topo.n_in))
    throw ShapeMismatch("forward: input raster has " +
                        std::to_string(input.neurons) + " rows, topology wants " +
                        std::to_string(net.topo.n_in));
  const std::size_t T = input.timesteps;

  ForwardTrace trace;
  trace.timesteps = T;
  trace.readout = Mat(net.topo.n_out, T);
  trace.spike_counts.assign(h, 0);
  if (record_hidden) trace.hidden = SpikeRaster(h, T);

  std::vector<double> current(h);
  std::vector<std::uint8_t> z_prev(h, 0), z(h, 0);

  for (std::size_t t = 0; t < T; ++t) {
    // Event-driven accumulation: only columns of active spikes contribute,
    // summed in ascending presynaptic index for reproducibility.
    std::fill(current.begin(), current.end(), 0.0);
    for (std::size_t i = 0; i < input.neurons; ++i)
      if (input.get(i, t))
        for (int j = 0; j < h; ++j) current[j] += net.w.w_in.at(j, i);
    for (int k = 0; k < h; ++k)
      if (z_prev[k])
        for (int j = 0; j < h; ++j) current[j] += net.w.w_rec.at(j, k);

    for (int j = 0; j < h; ++j) {
      int spike = j < m ? lif_step(net.state.lif[j], current[j], net.lif_params)
                        : dexat_step(net.state.dexat[j - m], current[j],
                                     net.dexat_params);
      z[j] = static_cast<std::uint8_t>(spike);
      trace.spike_counts[j] += spike;
      if (record_hidden) trace.hidden.set(j, t, z[j]);
    }

    for (int c = 0; c < net.topo.n_out; ++c) {
      double in = 0.0;
      for (int j = 0; j < h; ++j)
        if (z[j]) in += net.w.w_out.at(c, j);
      net.state.readout[c] = readout_step(net.state.readout[c], in,
                                          net.w.b_out[c], net.readout_params);
      trace.readout.at(c, t) = net.state.readout[c];
    }
    std::swap(z_prev, z);
    net.state.timestep++;
  }
  return trace;
}

Classification classify(const ForwardTrace& trace, ClassifyRule rule) {
  (void)rule;  // mean_readout is the only rule
  if (trace.timesteps == 0) throw EmptyDataset("classify: empty trace");
  Classification out;
  out.scores.assign(trace.readout.rows, 0.0);
  for (std::size_t c = 0; c < trace.readout.rows; ++c) {
    double sum = 0.0;
    for (std::size_t t = 0; t < trace.timesteps; ++t) sum += trace.readout.at(c, t);
    out.scores[c] = sum / static_cast<double>(trace.timesteps);
  }
  out.class_id = 0;
  for (std::size_t c = 1; c < out.scores.size(); ++c)
    if (out.scores[c] > out.scores[out.class_id]) out.class_id = static_cast<int>(c);
  return out;
}

// ---- serialization ----
// Layout (all little-endian):
//   magic "RSN1", u32 version
//   topology: i32 n_in, m_lif, n_dexat, n_out, u8 self_recurrence
//   neuron params: f64 tau_m, v_th, i32 refrac (LIF);
//                  f64 tau_m, tau_a1, tau_a2, beta1, beta2, b0, i32 refrac;
//                  f64 tau_out
//   u8 precision tag, then row-major f64 payload: w_in, w_rec, w_out, b_out

namespace {

constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
  char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  os.write(b, sizeof(T));
}

template <typename T>
T get(std::istream& is, const std::string& path) {
  char b[sizeof(T)];
  if (!is.read(b, sizeof(T))) throw MalformedFile(path + ": truncated network file");
  T v;
  std::memcpy(&v, b, sizeof(T));
  return v;
}

void put_mat(std::ostream& os, const Mat& m) {
  for (double v : m.d) put(os, v);
}

void get_mat(std::istream& is, Mat& m, const std::string& path) {
  for (auto& v : m.d) v = get<double>(is, path);
}

}  // namespace

void save_network(const std::string& path, const Network& net) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os.write("RSN1", 4);
  put<std::uint32_t>(os, kVersion);
  put<std::int32_t>(os, net.topo.n_in);
  put<std::int32_t>(os, net.topo.m_lif);
  put<std::int32_t>(os, net.topo.n_dexat);
  put<std::int32_t>(os, net.topo.n_out);
  put<std::uint8_t>(os, net.topo.self_recurrence_allowed ? 1 : 0);
  put(os, net.lif_params.tau_m);
  put(os, net.lif_params.v_th);
  put<std::int32_t>(os, net.lif_params.refractory_steps);
  put(os, net.dexat_params.tau_m);
  put(os, net.dexat_params.tau_a1);
  put(os, net.dexat_params.tau_a2);
  put(os, net.dexat_params.beta1);
  put(os, net.dexat_params.beta2);
  put(os, net.dexat_params.b0);
  put<std::int32_t>(os, net.dexat_params.refractory_steps);
  put(os, net.readout_params.tau_out);
  put<std::uint8_t>(os, static_cast<std::uint8_t>(net.w.precision));
  put_mat(os, net.w.w_in);
  put_mat(os, net.w.w_rec);
  put_mat(os, net.w.w_out);
  for (double v : net.w.b_out) put(os, v);
  if (!os) throw IoError("write failed: " + path);
}

Network load_network(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "RSN1", 4) != 0)
    throw MalformedFile(path + ": bad network magic");
  if (get<std::uint32_t>(is, path) != kVersion)
    throw MalformedFile(path + ": unsupported version");
  Network net;
  net.topo.n_in = get<std::int32_t>(is, path);
  net.topo.m_lif = get<std::int32_t>(is, path);
  net.topo.n_dexat = get<std::int32_t>(is, path);
  net.topo.n_out = get<std::int32_t>(is, path);
  net.topo.self_recurrence_allowed = get<std::uint8_t>(is, path) != 0;
  if (net.topo.n_in <= 0 || net.topo.m_lif < 0 || net.topo.n_dexat < 0 ||
      net.topo.hidden() <= 0 || net.topo.n_out <= 0)
    throw MalformedFile(path + ": bad topology");
  net.lif_params.tau_m = get<double>(is, path);
  net.lif_params.v_th = get<double>(is, path);
  net.lif_params.refractory_steps = get<std::int32_t>(is, path);
  net.dexat_params.tau_m = get<double>(is, path);
  net.dexat_params.tau_a1 = get<double>(is, path);
  net.dexat_params.tau_a2 = get<double>(is, path);
  net.dexat_params.beta1 = get<double>(is, path);
  net.dexat_params.beta2 = get<double>(is, path);
  net.dexat_params.b0 = get<double>(is, path);
  net.dexat_params.refractory_steps = get<std::int32_t>(is, path);
  net.readout_params.tau_out = get<double>(is, path);
  net.w.precision = static_cast<Precision>(get<std::uint8_t>(is, path));
  const int h = net.topo.hidden();
  net.w.w_in = Mat(h, net.topo.n_in);
  net.w.w_rec = Mat(h, h);
  net.w.w_out = Mat(net.topo.n_out, h);
  net.w.b_out.assign(net.topo.n_out, 0.0);
  get_mat(is, net.w.w_in, path);
  get_mat(is, net.w.w_rec, path);
  get_mat(is, net.w.w_out, path);
  for (auto& v : net.w.b_out) v = get<double>(is, path);
  reset_state(net);
  return net;
}

}  // namespace emgsnn
