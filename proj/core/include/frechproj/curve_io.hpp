#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frechproj/geometry.hpp"
#include "frechproj/guarding.hpp"
#include "frechproj/metrics.hpp"
#include "frechproj/montecarlo.hpp"

namespace frechproj {

// Text formats.  Curve files: a header line `d t` followed by t lines of d
// space-separated coordinates.  Matrix files: `rows cols` followed by the
// rows.  Lines whose first non-blank character is '#' are comments; LF line
// endings; doubles are written with enough digits to round-trip exactly.
// Readers throw std::invalid_argument naming the file and line on bad input.

std::string format_double(double x);

Curve read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const Curve& c);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

// Guarding set as CSV (`i,j,delta_ij`, one member per row, ascending) plus a
// JSON sidecar carrying the scalar facts of the construction.
void write_guarding_csv(const std::string& path, const Matrix& delta,
                        const CellSet& B);
struct GuardingSidecar {
  double theta = 0.0;
  double delta = 0.0;
  std::size_t size = 0;
  std::size_t row_groups = 0;  // max extended group count over rows
  std::size_t col_groups = 0;
};
void write_guarding_sidecar(const std::string& path, const GuardingSidecar& s);

// Distortion report files.
// samples: pair_id,protocol,complexity,sample_idx,ratio
// probs:   pair_id,protocol,complexity,gamma,prob   (empirical Pr[ratio<=gamma])
// buckets: complexity,gamma,mean,stddev,min,max,rows
void write_samples_csv(const std::string& path,
                       const std::vector<PairOutcome>& outcomes);
void write_probs_csv(const std::string& path,
                     const std::vector<PairOutcome>& outcomes, double gamma);
void write_buckets_csv(const std::string& path,
                       const std::vector<BucketStats>& stats, double gamma);

// Corpus loading for the distortion experiment.  A manifest holds one
// `id path` pair per line ('#' comments allowed); relative paths resolve
// against the manifest's directory.  A corpus directory contributes every
// regular file in filename order, with the filename as the id.
std::vector<CorpusEntry> read_manifest(const std::string& path);
std::vector<CorpusEntry> read_corpus_dir(const std::string& dir);

}  // namespace frechproj
