#include "frechproj/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "frechproj/metrics.hpp"

namespace frechproj {

namespace {

constexpr std::size_t kBlockSize = 64;
// Key of the subcurve-offset stream; far outside the block-index range so it
// can never collide with a direction stream.
constexpr std::uint64_t kOffsetKey = 0xFFFFFFFF00000001ULL;
// Key of the pair-sampling stream.
constexpr std::uint64_t kPairingKey = 0x7061697273ULL;
constexpr double kUndefinedBase = 1e-12;

double metric_value(MetricKind m, const Curve& a, const Curve& b) {
  return m == MetricKind::kFrechet ? discrete_frechet(a, b) : dtw(a, b);
}

struct LengthPrep {
  std::size_t length = 0;  // vertices per curve in this configuration
  bool base_fixed = false; // whole/prefix: one base distance for all samples
  bool undefined = false;  // fixed base below the threshold
  double base = 0.0;
  Curve A, B;                             // fixed sample curves
  std::vector<std::size_t> off_p, off_q;  // subcurve offsets per sample
};

struct Slot {
  bool defined = false;
  double ratio = 0.0;
};

struct PairTask {
  std::size_t pair_id = 0;
  const Curve* P = nullptr;
  const Curve* Q = nullptr;
  std::vector<LengthPrep> preps;
  std::vector<std::vector<Slot>> slots;  // [length index][sample index]
};

void run_jobs(std::size_t njobs, std::size_t workers,
              const std::function<void(std::size_t)>& fn) {
  if (njobs == 0) return;
  const std::size_t w = std::min(std::max<std::size_t>(workers, 1), njobs);
  if (w == 1) {
    for (std::size_t i = 0; i < njobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= njobs) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t i = 0; i < w; ++i) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

std::vector<PairOutcome> run_tasks(std::vector<PairTask>& tasks,
                                   const McConfig& cfg) {
  if (cfg.samples < 1)
    throw std::invalid_argument("distortion run needs at least one sample");
  const bool needs_lengths = cfg.protocol != Protocol::kWhole;
  if (needs_lengths && cfg.lengths.empty())
    throw std::invalid_argument("prefix and subcurve protocols need lengths");
  for (std::size_t a = 0; a < cfg.lengths.size(); ++a) {
    if (cfg.lengths[a] < 1)
      throw std::invalid_argument("lengths must be >= 1");
    for (std::size_t b = a + 1; b < cfg.lengths.size(); ++b)
      if (cfg.lengths[a] == cfg.lengths[b])
        throw std::invalid_argument("lengths must be distinct");
  }

  for (PairTask& task : tasks) {
    validate_curve(*task.P);
    validate_curve(*task.Q);
    if (task.P->dim() != task.Q->dim())
      throw std::invalid_argument("paired curves must share a dimension");
    const std::size_t tmin = std::min(task.P->size(), task.Q->size());
    if (needs_lengths) {
      for (std::size_t len : cfg.lengths) {
        if (len > tmin)
          throw std::invalid_argument(
              "length " + std::to_string(len) + " exceeds pair " +
              std::to_string(task.pair_id) + "'s smaller curve (" +
              std::to_string(tmin) + " vertices)");
        task.preps.push_back({});
        task.preps.back().length = len;
      }
    } else {
      task.preps.push_back({});
      task.preps.back().length = tmin;
    }
    task.slots.assign(task.preps.size(), std::vector<Slot>(cfg.samples));
  }

  // Phase A: per (pair, length), fix the sample curves and base distance, or
  // draw every subcurve offset from the offset stream.
  struct JobA {
    std::size_t task_idx, len_idx;
  };
  std::vector<JobA> jobs_a;
  for (std::size_t ti = 0; ti < tasks.size(); ++ti)
    for (std::size_t li = 0; li < tasks[ti].preps.size(); ++li)
      jobs_a.push_back({ti, li});
  run_jobs(jobs_a.size(), cfg.workers, [&](std::size_t idx) {
    PairTask& task = tasks[jobs_a[idx].task_idx];
    LengthPrep& prep = task.preps[jobs_a[idx].len_idx];
    if (cfg.protocol == Protocol::kSubcurve) {
      Rng off = Rng::derive(cfg.seed, task.pair_id, prep.length, kOffsetKey);
      prep.off_p.resize(cfg.samples);
      prep.off_q.resize(cfg.samples);
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        prep.off_p[s] = 1 + off.uniform_below(task.P->size() - prep.length + 1);
        prep.off_q[s] = 1 + off.uniform_below(task.Q->size() - prep.length + 1);
      }
    } else {
      prep.base_fixed = true;
      prep.A = cfg.protocol == Protocol::kWhole ? *task.P
                                                : prefix(*task.P, prep.length);
      prep.B = cfg.protocol == Protocol::kWhole ? *task.Q
                                                : prefix(*task.Q, prep.length);
      prep.base = metric_value(cfg.metric, prep.A, prep.B);
      prep.undefined = prep.base < kUndefinedBase;
    }
  });

  // Phase B: per (pair, length, block of 64 samples), draw directions and
  // compute projected ratios.  The block stream depends only on the keys, so
  // any worker count and any scheduling produce identical slots.
  struct JobB {
    std::size_t task_idx, len_idx, block;
  };
  std::vector<JobB> jobs_b;
  for (std::size_t ti = 0; ti < tasks.size(); ++ti)
    for (std::size_t li = 0; li < tasks[ti].preps.size(); ++li) {
      if (tasks[ti].preps[li].base_fixed && tasks[ti].preps[li].undefined)
        continue;
      const std::size_t blocks = (cfg.samples + kBlockSize - 1) / kBlockSize;
      for (std::size_t b = 0; b < blocks; ++b) jobs_b.push_back({ti, li, b});
    }
  run_jobs(jobs_b.size(), cfg.workers, [&](std::size_t idx) {
    PairTask& task = tasks[jobs_b[idx].task_idx];
    const LengthPrep& prep = task.preps[jobs_b[idx].len_idx];
    std::vector<Slot>& slots = task.slots[jobs_b[idx].len_idx];
    const std::size_t d = task.P->dim();
    Rng rng = Rng::derive(cfg.seed, task.pair_id, prep.length, jobs_b[idx].block);
    const std::size_t s0 = jobs_b[idx].block * kBlockSize;
    const std::size_t s1 = std::min(s0 + kBlockSize, cfg.samples);
    for (std::size_t s = s0; s < s1; ++s) {
      // One direction per sample, drawn unconditionally to keep the stream
      // position independent of which samples turn out defined.
      const Point u = sample_unit_vector(d, rng);
      double base;
      Curve a, b;
      const Curve* ap;
      const Curve* bp;
      if (prep.base_fixed) {
        base = prep.base;
        ap = &prep.A;
        bp = &prep.B;
      } else {
        a = subcurve(*task.P, prep.off_p[s], prep.length);
        b = subcurve(*task.Q, prep.off_q[s], prep.length);
        base = metric_value(cfg.metric, a, b);
        if (base < kUndefinedBase) continue;
        ap = &a;
        bp = &b;
      }
      const double proj =
          metric_value(cfg.metric, project_curve(*ap, u), project_curve(*bp, u));
      slots[s].defined = true;
      // Projection is a contraction; clip the last-ulp noise.
      slots[s].ratio = std::min(proj / base, 1.0);
    }
  });

  std::vector<PairOutcome> outcomes;
  outcomes.reserve(tasks.size());
  for (PairTask& task : tasks) {
    PairOutcome out;
    out.pair_id = task.pair_id;
    for (std::size_t li = 0; li < task.preps.size(); ++li) {
      LengthResult lr;
      lr.complexity = task.preps[li].length;
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        const Slot& slot = task.slots[li][s];
        if (!slot.defined) {
          ++lr.undefined_samples;
          continue;
        }
        lr.rows.push_back(
            {task.pair_id, cfg.protocol, lr.complexity, s, slot.ratio});
      }
      out.lengths.push_back(std::move(lr));
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

}  // namespace

const char* metric_name(MetricKind m) {
  return m == MetricKind::kFrechet ? "frechet" : "dtw";
}

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::kWhole: return "whole";
    case Protocol::kPrefix: return "prefix";
    default: return "subcurve";
  }
}

double theorem_bound(std::size_t d, double c, double gamma, std::size_t t) {
  if (d < 2 || d > 5)
    throw std::invalid_argument("theorem_bound: supported dimensions are 2..5");
  if (!(c > 0.0))
    throw std::invalid_argument("theorem_bound: packedness must be positive");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("theorem_bound: gamma must lie in (0, 1)");
  if (t < 1) throw std::invalid_argument("theorem_bound: t must be >= 1");
  const double planar = (12.0 * c + 16.0) * static_cast<double>(t) / gamma;
  return d <= 3 ? planar : planar * (1.0 + 2.0 / std::numbers::pi);
}

PairOutcome run_pair(const Curve& P, const Curve& Q, std::size_t pair_id,
                     const McConfig& cfg) {
  std::vector<PairTask> tasks(1);
  tasks[0].pair_id = pair_id;
  tasks[0].P = &P;
  tasks[0].Q = &Q;
  return run_tasks(tasks, cfg).front();
}

ExperimentResult run_experiment(const std::vector<CorpusEntry>& corpus,
                                std::size_t num_pairs, const McConfig& cfg) {
  if (corpus.empty())
    throw std::invalid_argument("run_experiment: empty corpus");
  if (num_pairs < 1)
    throw std::invalid_argument("run_experiment: need at least one pair");
  Rng pairing = Rng::derive(cfg.seed, kPairingKey, 0, 0);
  ExperimentResult res;
  std::vector<PairTask> tasks(num_pairs);
  for (std::size_t p = 0; p < num_pairs; ++p) {
    const std::size_t a = pairing.uniform_below(corpus.size());
    const std::size_t b = pairing.uniform_below(corpus.size());
    res.pairing.push_back({p, a, b});
    tasks[p].pair_id = p;
    tasks[p].P = &corpus[a].curve;
    tasks[p].Q = &corpus[b].curve;
  }
  res.outcomes = run_tasks(tasks, cfg);
  return res;
}

double ecdf_at(const std::vector<double>& values, double x) {
  if (values.empty())
    throw std::invalid_argument("ecdf_at: empty sample");
  std::size_t count = 0;
  for (double v : values)
    if (v <= x) ++count;
  return static_cast<double>(count) / static_cast<double>(values.size());
}

std::vector<BucketStats> bucket_stats(const std::vector<PairOutcome>& outcomes) {
  std::map<std::size_t, std::vector<double>> pooled;
  for (const PairOutcome& out : outcomes)
    for (const LengthResult& lr : out.lengths)
      for (const SampleRow& row : lr.rows)
        pooled[lr.complexity].push_back(row.ratio);

  std::vector<BucketStats> stats;
  for (const auto& [complexity, ratios] : pooled) {
    BucketStats b;
    b.complexity = complexity;
    b.rows = ratios.size();
    b.min = *std::min_element(ratios.begin(), ratios.end());
    b.max = *std::max_element(ratios.begin(), ratios.end());
    double sum = 0.0;
    for (double r : ratios) sum += r;
    b.mean = sum / static_cast<double>(ratios.size());
    double ss = 0.0;
    for (double r : ratios) ss += (r - b.mean) * (r - b.mean);
    b.stddev = std::sqrt(ss / static_cast<double>(ratios.size()));
    stats.push_back(b);
  }
  return stats;
}

}  // namespace frechproj
