#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stabsel/csv.hpp"
#include "stabsel/error.hpp"
#include "stabsel/matrix.hpp"
#include "stabsel/rng.hpp"

namespace stabsel {

enum class Task { classification, regression };

inline std::string to_string(Task t) {
  return t == Task::classification ? "classification" : "regression";
}

inline Task parse_task(const std::string& s) {
  if (s == "classification") return Task::classification;
  if (s == "regression") return Task::regression;
  throw ConfigError("unknown task '" + s + "'");
}

/// An n x m feature matrix with a target vector. Classification targets hold
/// only 0 and 1; regression targets are arbitrary reals.
struct LabeledDataset {
  Matrix features;
  std::vector<std::string> feature_names;
  std::vector<double> target;
  Task task = Task::classification;

  std::size_t n_rows() const { return features.rows(); }
  std::size_t n_features() const { return features.cols(); }

  void validate() const {
    if (features.rows() != target.size())
      throw DataError("dataset: feature rows do not match target length");
    if (features.cols() != feature_names.size())
      throw DataError("dataset: feature columns do not match name count");
    std::set<std::string> unique(feature_names.begin(), feature_names.end());
    if (unique.size() != feature_names.size())
      throw DataError("dataset: duplicate feature names");
    if (!features.all_finite()) throw DataError("dataset: non-finite feature value");
    for (double y : target) {
      if (!std::isfinite(y)) throw DataError("dataset: non-finite target value");
      if (task == Task::classification && y != 0.0 && y != 1.0)
        throw DataError("dataset: classification target not in {0, 1}");
    }
  }

  std::size_t feature_index(const std::string& name) const {
    for (std::size_t j = 0; j < feature_names.size(); ++j)
      if (feature_names[j] == name) return j;
    throw DataError("unknown feature '" + name + "'");
  }
};

enum class Provenance { informative, redundant, noise };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::informative: return "informative";
    case Provenance::redundant: return "redundant";
    default: return "noise";
  }
}

/// Per-feature origin tag; known only for synthetic datasets.
struct FeatureProvenance {
  std::vector<Provenance> tags;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> valid;
  std::vector<std::size_t> test;
};

/// Load a dataset from CSV; the label column is removed from the features and
/// row order is preserved.
inline LabeledDataset load_csv(const std::filesystem::path& path,
                               const std::string& label_column, Task task) {
  CsvTable table = read_csv(path);
  std::size_t label_idx = table.column_index(label_column);

  LabeledDataset ds;
  ds.task = task;
  for (std::size_t j = 0; j < table.header.size(); ++j)
    if (j != label_idx) ds.feature_names.push_back(table.header[j]);

  const std::size_t n = table.rows.size();
  const std::size_t m = ds.feature_names.size();
  ds.features = Matrix(n, m);
  ds.target.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t out_j = 0;
    for (std::size_t j = 0; j < table.header.size(); ++j) {
      double v = parse_double_cell(table.rows[i][j], i + 2, j + 1);
      if (j == label_idx) {
        ds.target[i] = v;
      } else {
        ds.features(i, out_j++) = v;
      }
    }
  }
  ds.validate();
  return ds;
}

/// Write a dataset (features + label column) as CSV for reproducibility snapshots.
inline void save_csv(const LabeledDataset& ds, const std::filesystem::path& path,
                     const std::string& label_column = "target") {
  std::vector<std::string> header = ds.feature_names;
  header.push_back(label_column);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(ds.n_rows());
  for (std::size_t i = 0; i < ds.n_rows(); ++i) {
    std::vector<std::string> cells;
    cells.reserve(ds.n_features() + 1);
    for (std::size_t j = 0; j < ds.n_features(); ++j)
      cells.push_back(fmt_double(ds.features(i, j)));
    cells.push_back(fmt_double(ds.target[i]));
    rows.push_back(std::move(cells));
  }
  write_csv(path, header, rows);
}

namespace detail {

inline void check_synth_args(std::size_t n, std::size_t n_informative) {
  if (n < 2) throw ConfigError("synthetic dataset needs n >= 2");
  if (n_informative < 1) throw ConfigError("synthetic dataset needs n_informative >= 1");
}

inline std::vector<std::string> synth_names(std::size_t n_informative,
                                            std::size_t n_redundant,
                                            std::size_t n_noise,
                                            FeatureProvenance& provenance) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n_informative; ++j) {
    names.push_back("I_" + std::to_string(j));
    provenance.tags.push_back(Provenance::informative);
  }
  for (std::size_t j = 0; j < n_redundant; ++j) {
    names.push_back("R_" + std::to_string(j));
    provenance.tags.push_back(Provenance::redundant);
  }
  for (std::size_t j = 0; j < n_noise; ++j) {
    names.push_back("N_" + std::to_string(j));
    provenance.tags.push_back(Provenance::noise);
  }
  return names;
}

/// Fill the redundant and noise blocks; redundant columns are exact linear
/// combinations of the informative block with Uniform[-1, 1] coefficients.
inline void fill_redundant_and_noise(Matrix& x, std::size_t n_informative,
                                     std::size_t n_redundant, std::size_t n_noise,
                                     std::uint64_t seed) {
  const std::size_t n = x.rows();
  RngStream coef_stream(derive_key(seed, StreamDomain::synth_redundant));
  for (std::size_t r = 0; r < n_redundant; ++r) {
    std::vector<double> coef(n_informative);
    for (double& c : coef) c = coef_stream.next_uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k < n_informative; ++k) v += coef[k] * x(i, k);
      x(i, n_informative + r) = v;
    }
  }
  for (std::size_t c = 0; c < n_noise; ++c) {
    RngStream noise_stream(derive_key(seed, StreamDomain::synth_noise, {c}));
    for (std::size_t i = 0; i < n; ++i)
      x(i, n_informative + n_redundant + c) = noise_stream.next_normal();
  }
}

}  // namespace detail

/// Two class-conditional Gaussians at the antipodal hypercube vertices
/// (-1,...,-1) and (+1,...,+1) of the informative subspace, unit covariance.
/// Redundant columns are linear combinations of the informative ones; noise
/// columns are independent standard normals.
inline std::pair<LabeledDataset, FeatureProvenance> synth_classification(
    std::size_t n, std::size_t n_informative, std::size_t n_redundant,
    std::size_t n_noise, std::uint64_t seed) {
  detail::check_synth_args(n, n_informative);
  const std::size_t m = n_informative + n_redundant + n_noise;

  LabeledDataset ds;
  ds.task = Task::classification;
  FeatureProvenance provenance;
  ds.feature_names = detail::synth_names(n_informative, n_redundant, n_noise, provenance);
  ds.features = Matrix(n, m);
  ds.target.resize(n);

  RngStream label_stream(derive_key(seed, StreamDomain::synth_labels));
  for (std::size_t i = 0; i < n; ++i)
    ds.target[i] = label_stream.next_double() < 0.5 ? 0.0 : 1.0;

  RngStream informative_stream(derive_key(seed, StreamDomain::synth_informative));
  for (std::size_t i = 0; i < n; ++i) {
    double center = ds.target[i] == 1.0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n_informative; ++j)
      ds.features(i, j) = center + informative_stream.next_normal();
  }

  detail::fill_redundant_and_noise(ds.features, n_informative, n_redundant, n_noise, seed);
  ds.validate();
  return {std::move(ds), std::move(provenance)};
}

/// Regression variant: y = (informative block) . w + eps, with per-feature
/// weights drawn once from Uniform[0, 100] and eps ~ N(0, noise_sd^2).
inline std::pair<LabeledDataset, FeatureProvenance> synth_regression(
    std::size_t n, std::size_t n_informative, std::size_t n_redundant,
    std::size_t n_noise, double noise_sd, std::uint64_t seed) {
  detail::check_synth_args(n, n_informative);
  if (noise_sd < 0.0) throw ConfigError("noise_sd must be >= 0");
  const std::size_t m = n_informative + n_redundant + n_noise;

  LabeledDataset ds;
  ds.task = Task::regression;
  FeatureProvenance provenance;
  ds.feature_names = detail::synth_names(n_informative, n_redundant, n_noise, provenance);
  ds.features = Matrix(n, m);
  ds.target.resize(n);

  RngStream informative_stream(derive_key(seed, StreamDomain::synth_informative));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n_informative; ++j)
      ds.features(i, j) = informative_stream.next_normal();

  RngStream weight_stream(derive_key(seed, StreamDomain::synth_weights));
  std::vector<double> w(n_informative);
  for (double& v : w) v = weight_stream.next_uniform(0.0, 100.0);

  RngStream eps_stream(derive_key(seed, StreamDomain::synth_label_noise));
  for (std::size_t i = 0; i < n; ++i) {
    double y = 0.0;
    for (std::size_t j = 0; j < n_informative; ++j) y += w[j] * ds.features(i, j);
    if (noise_sd > 0.0) y += noise_sd * eps_stream.next_normal();
    ds.target[i] = y;
  }

  detail::fill_redundant_and_noise(ds.features, n_informative, n_redundant, n_noise, seed);
  ds.validate();
  return {std::move(ds), std::move(provenance)};
}

/// Seeded uniform shuffle, then a contiguous 0.6/0.2/0.2 partition; the test
/// set absorbs the rounding remainder.
inline SplitIndices split(const LabeledDataset& ds, std::uint64_t seed) {
  const std::size_t n = ds.n_rows();
  if (n < 5) throw DataError("split: dataset too small (n < 5)");
  RngStream stream(derive_key(seed, StreamDomain::split_shuffle));
  std::vector<std::size_t> order = stream.permutation(n);
  const std::size_t n_train = static_cast<std::size_t>(0.6 * static_cast<double>(n));
  const std::size_t n_valid = static_cast<std::size_t>(0.2 * static_cast<double>(n));
  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + n_train);
  out.valid.assign(order.begin() + n_train, order.begin() + n_train + n_valid);
  out.test.assign(order.begin() + n_train + n_valid, order.end());
  return out;
}

/// Chronological split: rows at/after the boundary form the test set, rows
/// before it the train set, and the validation set is a configurable tail
/// fraction of the train period. No shuffling.
inline SplitIndices time_split(const std::vector<std::int64_t>& timestamps,
                               std::int64_t boundary, double valid_fraction = 0.0) {
  if (valid_fraction < 0.0 || valid_fraction >= 1.0)
    throw ConfigError("time_split: valid_fraction must be in [0, 1)");
  for (std::size_t i = 1; i < timestamps.size(); ++i)
    if (timestamps[i] < timestamps[i - 1])
      throw DataError("time_split: timestamps not non-decreasing");

  SplitIndices out;
  std::vector<std::size_t> before;
  for (std::size_t i = 0; i < timestamps.size(); ++i) {
    if (timestamps[i] >= boundary)
      out.test.push_back(i);
    else
      before.push_back(i);
  }
  if (before.empty()) throw DataError("time_split: boundary leaves the train set empty");
  if (out.test.empty()) throw DataError("time_split: boundary leaves the test set empty");

  const std::size_t n_valid =
      static_cast<std::size_t>(valid_fraction * static_cast<double>(before.size()));
  out.train.assign(before.begin(), before.end() - n_valid);
  out.valid.assign(before.end() - n_valid, before.end());
  return out;
}

/// Restrict a dataset to a row subset (optionally also to a column subset).
inline LabeledDataset subset_rows(const LabeledDataset& ds,
                                  const std::vector<std::size_t>& rows) {
  LabeledDataset out;
  out.task = ds.task;
  out.feature_names = ds.feature_names;
  out.features = ds.features.select_rows(rows);
  out.target.reserve(rows.size());
  for (std::size_t i : rows) out.target.push_back(ds.target[i]);
  return out;
}

inline LabeledDataset subset_columns(const LabeledDataset& ds,
                                     const std::vector<std::size_t>& cols) {
  LabeledDataset out;
  out.task = ds.task;
  out.features = ds.features.select_columns(cols);
  out.target = ds.target;
  for (std::size_t j : cols) out.feature_names.push_back(ds.feature_names[j]);
  return out;
}

}  // namespace stabsel
