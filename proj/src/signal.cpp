#include "emgsnn/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "emgsnn/rng.hpp"

namespace emgsnn {

namespace {

void check_finite(float v, const char* where) {
  if (!std::isfinite(v)) throw NonFiniteValue(std::string("non-finite value in ") + where);
}

void validate_label(int label) {
  if (label < 0 || label >= kNumClasses)
    throw UnknownLabel("label " + std::to_string(label) + " not in {0,1,2}");
}

// ---- CSV ----
// Header: "# channels=8 rate=200 label=<int|none> subject=<str>"
// Body: one row per timestep, one comma-separated column per channel.

EmgRecording load_csv(std::istream& is, const std::string& path) {
  std::string header;
  if (!std::getline(is, header) || header.empty() || header[0] != '#')
    throw MalformedFile(path + ": missing '#' header line");

  EmgRecording rec;
  rec.channels = 0;
  bool have_rate = false;
  std::istringstream hs(header.substr(1));
  std::string tok;
  while (hs >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw MalformedFile(path + ": bad header token '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    try {
      if (key == "channels") {
        rec.channels = std::stoi(val);
      } else if (key == "rate") {
        rec.sample_rate_hz = std::stod(val);
        have_rate = true;
      } else if (key == "label") {
        if (val != "none") {
          int lab = std::stoi(val);
          validate_label(lab);
          rec.label = lab;
        }
      } else if (key == "subject") {
        rec.subject_id = val;
      } else {
        throw MalformedFile(path + ": unknown header key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw MalformedFile(path + ": bad header value '" + val + "'");
    } catch (const std::out_of_range&) {
      throw MalformedFile(path + ": bad header value '" + val + "'");
    }
  }
  if (rec.channels <= 0 || !have_rate)
    throw MalformedFile(path + ": header must give channels and rate");

  rec.samples.assign(rec.channels, {});
  std::string line;
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col >= rec.channels) throw MalformedFile(path + ": too many columns");
      float v;
      try {
        std::size_t pos = 0;
        v = std::stof(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::invalid_argument&) {
        throw MalformedFile(path + ": bad cell '" + cell + "'");
      } catch (const std::out_of_range&) {
        throw NonFiniteValue(path + ": cell out of float range");
      }
      check_finite(v, path.c_str());
      rec.samples[col].push_back(v);
      ++col;
    }
    if (col != rec.channels)
      throw MalformedFile(path + ": row " + std::to_string(rows) + " has " +
                          std::to_string(col) + " columns, expected " +
                          std::to_string(rec.channels));
    ++rows;
  }
  if (rows == 0) throw MalformedFile(path + ": no sample rows");
  return rec;
}

void save_csv(std::ostream& os, const EmgRecording& rec) {
  os << "# channels=" << rec.channels << " rate=" << rec.sample_rate_hz
     << " label=" << (rec.label ? std::to_string(*rec.label) : "none");
  if (!rec.subject_id.empty()) os << " subject=" << rec.subject_id;
  os << '\n';
  char buf[48];
  for (std::size_t t = 0; t < rec.length(); ++t) {
    for (int c = 0; c < rec.channels; ++c) {
      // %.9g round-trips 32-bit floats exactly.
      std::snprintf(buf, sizeof buf, "%.9g", rec.samples[c][t]);
      if (c) os << ',';
      os << buf;
    }
    os << '\n';
  }
}

// ---- rawbin ----
// magic "EMG1", u32 channels, u32 rate, u32 length, i32 label (-1 = none),
// then channel-major 32-bit floats. Little-endian throughout.

template <typename T>
void put_le(std::ostream& os, T v) {
  unsigned char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  os.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <typename T>
T get_le(std::istream& is, const std::string& path) {
  unsigned char b[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(b), sizeof(T)))
    throw MalformedFile(path + ": truncated rawbin");
  T v;
  std::memcpy(&v, b, sizeof(T));
  return v;
}

EmgRecording load_rawbin(std::istream& is, const std::string& path) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "EMG1", 4) != 0)
    throw MalformedFile(path + ": bad rawbin magic");
  EmgRecording rec;
  rec.channels = static_cast<int>(get_le<std::uint32_t>(is, path));
  rec.sample_rate_hz = static_cast<double>(get_le<std::uint32_t>(is, path));
  const auto length = get_le<std::uint32_t>(is, path);
  const auto label = get_le<std::int32_t>(is, path);
  if (rec.channels <= 0 || length == 0)
    throw MalformedFile(path + ": empty rawbin recording");
  if (label != -1) {
    validate_label(label);
    rec.label = label;
  }
  rec.samples.assign(rec.channels, std::vector<float>(length));
  for (int c = 0; c < rec.channels; ++c)
    for (std::uint32_t t = 0; t < length; ++t) {
      float v = get_le<float>(is, path);
      check_finite(v, path.c_str());
      rec.samples[c][t] = v;
    }
  return rec;
}

void save_rawbin(std::ostream& os, const EmgRecording& rec) {
  os.write("EMG1", 4);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(rec.channels));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(std::llround(rec.sample_rate_hz)));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(rec.length()));
  put_le<std::int32_t>(os, rec.label ? *rec.label : -1);
  for (const auto& ch : rec.samples)
    for (float v : ch) put_le<float>(os, v);
}

}  // namespace

EmgRecording load_recording(const std::string& path, FileFormat format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  return format == FileFormat::csv ? load_csv(is, path) : load_rawbin(is, path);
}

void save_recording(const std::string& path, const EmgRecording& rec,
                    FileFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  if (format == FileFormat::csv)
    save_csv(os, rec);
  else
    save_rawbin(os, rec);
  if (!os) throw IoError("write failed: " + path);
}

double SynthConfig::class_margin() const {
  double margin = 1e300;
  for (int a = 0; a < kNumClasses; ++a)
    for (int b = a + 1; b < kNumClasses; ++b) {
      double d = 0.0;
      for (int c = 0; c < 8; ++c)
        d = std::max(d, std::fabs(amplitude[a][c] - amplitude[b][c]));
      margin = std::min(margin, d);
    }
  return margin;
}

EmgRecording generate_synthetic(int class_id, std::uint64_t seed,
                                const SynthConfig& cfg) {
  validate_label(class_id);
  EmgRecording rec;
  rec.channels = cfg.channels;
  rec.sample_rate_hz = cfg.sample_rate_hz;
  rec.label = class_id;
  rec.subject_id = "synth";
  rec.samples.assign(cfg.channels, std::vector<float>(cfg.length));

  Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(class_id)));
  const double dt = 1.0 / cfg.sample_rate_hz;

  std::vector<double> phase(cfg.channels);
  for (int c = 0; c < cfg.channels; ++c) phase[c] = rng.uniform(0.0, 2.0 * M_PI);
  const double env_phase = rng.uniform(0.0, 2.0 * M_PI);

  // Class-2 press schedule: roughly one sustained press per second.
  std::vector<std::pair<std::size_t, std::size_t>> presses;
  if (cfg.class2_plateaus && class_id == 2) {
    std::size_t t = 20 + rng.uniform_index(40);
    while (t + 12 < cfg.length) {
      std::size_t dur = 10 + rng.uniform_index(10);
      presses.emplace_back(t, std::min(t + dur, cfg.length));
      t += dur + 150 + rng.uniform_index(80);
    }
  }

  for (int c = 0; c < cfg.channels; ++c) {
    const double freq = cfg.base_freq_hz + cfg.freq_step_hz * c;
    const double amp = cfg.amplitude[class_id][std::min(c, 7)];
    for (std::size_t t = 0; t < cfg.length; ++t) {
      const double time = t * dt;
      const double env =
          0.55 + 0.45 * std::sin(2.0 * M_PI * cfg.envelope_hz * time + env_phase);
      double v = amp * env * std::sin(2.0 * M_PI * freq * time + phase[c]) +
                 rng.normal(0.0, cfg.noise_std);
      if (class_id == 2 && c == cfg.channels - 1) {
        for (const auto& [s, e] : presses)
          if (t >= s && t < e) v = cfg.clamp_volts + 1.0;
      }
      v = std::clamp(v, -cfg.clamp_volts, cfg.clamp_volts);
      rec.samples[c][t] = static_cast<float>(v);
    }
  }
  return rec;
}

std::vector<EmgWindow> window(std::shared_ptr<const EmgRecording> rec,
                              std::size_t length_T, std::size_t stride) {
  if (length_T < 2) throw DomainError("window length must be >= 2");
  if (stride < 1) throw DomainError("stride must be >= 1");
  if (length_T > rec->length())
    throw WindowTooLong("window length " + std::to_string(length_T) +
                        " exceeds recording length " +
                        std::to_string(rec->length()));
  std::vector<EmgWindow> out;
  for (std::size_t start = 0; start + length_T <= rec->length(); start += stride)
    out.push_back(EmgWindow{rec, start, length_T, rec->label.value_or(-1)});
  return out;
}

SplitResult split_dataset(const Dataset& ds, double test_fraction,
                          std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw DomainError("test_fraction must lie in (0, 1)");
  for (int c = 0; c < kNumClasses; ++c)
    if (ds.histogram[c] < 2)
      throw EmptyClass("class " + std::to_string(c) + " has " +
                       std::to_string(ds.histogram[c]) + " windows, need >= 2");

  // Group windows by source recording, in first-appearance order so the
  // result depends only on (ds, seed).
  std::map<const EmgRecording*, std::size_t> group_of;
  struct Group {
    int label;
    std::vector<std::size_t> window_idx;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < ds.windows.size(); ++i) {
    const auto* key = ds.windows[i].rec.get();
    auto it = group_of.find(key);
    if (it == group_of.end()) {
      group_of.emplace(key, groups.size());
      groups.push_back(Group{ds.windows[i].label, {i}});
    } else {
      groups[it->second].window_idx.push_back(i);
    }
  }

  SplitResult out;
  std::vector<char> to_test(groups.size(), 0);
  for (int c = 0; c < kNumClasses; ++c) {
    std::vector<std::size_t> class_groups;
    std::size_t class_windows = 0;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (groups[g].label == c) {
        class_groups.push_back(g);
        class_windows += groups[g].window_idx.size();
      }
    const auto target =
        static_cast<std::size_t>(std::llround(test_fraction * class_windows));
    Rng rng(Rng::mix(seed, 1000 + c));
    rng.shuffle(class_groups);
    std::size_t picked = 0;
    for (std::size_t g : class_groups) {
      if (picked >= target) break;
      to_test[g] = 1;
      picked += groups[g].window_idx.size();
    }
  }
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t i : groups[g].window_idx) {
      if (to_test[g])
        out.test.push(ds.windows[i]);
      else
        out.train.push(ds.windows[i]);
    }
  return out;
}

}  // namespace emgsnn
