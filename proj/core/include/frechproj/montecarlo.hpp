#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frechproj/geometry.hpp"
#include "frechproj/rng.hpp"

namespace frechproj {

enum class MetricKind { kFrechet, kDtw };
enum class Protocol { kWhole, kPrefix, kSubcurve };

const char* metric_name(MetricKind m);
const char* protocol_name(Protocol p);

// Distortion bound of the projection theorem: for c-packed curves with t
// vertices each, a uniformly random projection direction satisfies
// base / projected <= bound with probability at least 1 - gamma.
// bound = (12c + 16) t / gamma, times (1 + 2/pi) in dimensions 4 and 5.
double theorem_bound(std::size_t d, double c, double gamma, std::size_t t);

struct McConfig {
  MetricKind metric = MetricKind::kFrechet;
  Protocol protocol = Protocol::kWhole;
  std::vector<std::size_t> lengths;  // per-protocol lengths; ignored for whole
  std::size_t samples = 1000;        // random directions per length
  std::uint64_t seed = 0;            // master seed; all randomness derives from it
  std::size_t workers = 1;           // worker threads; results do not depend on it
};

// One retained sample: ratio = projected distance / base distance, in [0, 1].
struct SampleRow {
  std::size_t pair_id = 0;
  Protocol protocol = Protocol::kWhole;
  std::size_t complexity = 0;  // number of vertices per curve in this sample
  std::size_t sample_idx = 0;  // 0-based index within the length's samples
  double ratio = 0.0;
};

struct LengthResult {
  std::size_t complexity = 0;
  std::size_t undefined_samples = 0;  // base distance below 1e-12: excluded
  std::vector<SampleRow> rows;        // defined samples, ascending sample_idx
};

struct PairOutcome {
  std::size_t pair_id = 0;
  std::vector<LengthResult> lengths;
};

// Runs the distortion experiment for one curve pair.  Sampling is organized
// in blocks of 64 directions; the random stream of a block depends only on
// (seed, pair_id, length key, block index), and subcurve offsets come from a
// separate stream drawn before any direction, so results are identical for
// any worker count.  The whole protocol uses min(|P|, |Q|) as its length key,
// making it sample-for-sample identical to a prefix or subcurve run at that
// length when the curves already have that many vertices.
PairOutcome run_pair(const Curve& P, const Curve& Q, std::size_t pair_id,
                     const McConfig& cfg);

struct CorpusEntry {
  std::string id;
  Curve curve;
};

struct PairLogEntry {
  std::size_t pair_id = 0;
  std::size_t first_index = 0;   // into the corpus
  std::size_t second_index = 0;
};

struct ExperimentResult {
  std::vector<PairLogEntry> pairing;
  std::vector<PairOutcome> outcomes;  // one per pairing entry, same order
};

// Samples num_pairs curve pairs uniformly with replacement (a curve may be
// paired with itself; the base distance then comes out zero and the pair is
// reported as undefined) and runs the distortion experiment on each.
ExperimentResult run_experiment(const std::vector<CorpusEntry>& corpus,
                                std::size_t num_pairs, const McConfig& cfg);

// Fraction of values <= x (ties included).
double ecdf_at(const std::vector<double>& values, double x);

struct BucketStats {
  std::size_t complexity = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  std::size_t rows = 0;
};

// Pools every retained sample across pairs and groups by exact complexity.
std::vector<BucketStats> bucket_stats(const std::vector<PairOutcome>& outcomes);

}  // namespace frechproj
