#include "frechproj/curve_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frechproj {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + what);
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

double parse_double(const std::string& tok, const std::string& path,
                    std::size_t line) {
  double value = 0.0;
  const char* b = tok.data();
  const char* e = tok.data() + tok.size();
  const auto res = std::from_chars(b, e, value);
  if (res.ec != std::errc{} || res.ptr != e)
    fail(path, line, "expected a number, got '" + tok + "'");
  return value;
}

std::size_t parse_size(const std::string& tok, const std::string& path,
                       std::size_t line) {
  std::size_t value = 0;
  const char* b = tok.data();
  const char* e = tok.data() + tok.size();
  const auto res = std::from_chars(b, e, value);
  if (res.ec != std::errc{} || res.ptr != e)
    fail(path, line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

// Reads the non-comment rows of a numeric text file: one header line first,
// then data rows.
struct NumericReader {
  std::ifstream in;
  std::string path;
  std::size_t line_no = 0;

  explicit NumericReader(const std::string& p) : in(p), path(p) {
    if (!in) throw std::invalid_argument("cannot open '" + p + "' for reading");
  }

  // Next non-comment line's tokens; empty when the file is exhausted.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      return tokenize(line);
    }
    return {};
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Curve read_curve_file(const std::string& path) {
  NumericReader r(path);
  auto header = r.next();
  if (header.empty())
    throw std::invalid_argument(path + ": missing `d t` header line");
  if (header.size() != 2)
    fail(path, r.line_no, "header must be `d t`");
  const std::size_t d = parse_size(header[0], path, r.line_no);
  const std::size_t t = parse_size(header[1], path, r.line_no);
  if (d < 1) fail(path, r.line_no, "dimension must be >= 1");
  if (t < 1) fail(path, r.line_no, "vertex count must be >= 1");

  Curve c;
  c.vertices.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    auto row = r.next();
    if (row.empty())
      throw std::invalid_argument(path + ": expected " + std::to_string(t) +
                                  " vertices, found " + std::to_string(i));
    if (row.size() != d)
      fail(path, r.line_no,
           "expected " + std::to_string(d) + " coordinates, got " +
               std::to_string(row.size()));
    Point p(d);
    for (std::size_t k = 0; k < d; ++k)
      p[k] = parse_double(row[k], path, r.line_no);
    c.vertices.push_back(std::move(p));
  }
  if (!r.next().empty())
    fail(path, r.line_no, "trailing content after the last vertex");
  validate_curve(c);
  return c;
}

void write_curve_file(const std::string& path, const Curve& c) {
  validate_curve(c);
  auto out = open_out(path);
  out << c.dim() << ' ' << c.size() << '\n';
  for (const Point& p : c.vertices) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << format_double(p[k]);
    }
    out << '\n';
  }
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

Matrix read_matrix_file(const std::string& path) {
  NumericReader r(path);
  auto header = r.next();
  if (header.empty())
    throw std::invalid_argument(path + ": missing `rows cols` header line");
  if (header.size() != 2)
    fail(path, r.line_no, "header must be `rows cols`");
  const std::size_t rows = parse_size(header[0], path, r.line_no);
  const std::size_t cols = parse_size(header[1], path, r.line_no);
  if (rows < 1 || cols < 1) fail(path, r.line_no, "matrix must be non-empty");

  Matrix m(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    auto row = r.next();
    if (row.empty())
      throw std::invalid_argument(path + ": expected " + std::to_string(rows) +
                                  " rows, found " + std::to_string(i - 1));
    if (row.size() != cols)
      fail(path, r.line_no,
           "expected " + std::to_string(cols) + " values, got " +
               std::to_string(row.size()));
    for (std::size_t j = 1; j <= cols; ++j)
      m.at(i, j) = parse_double(row[j - 1], path, r.line_no);
  }
  if (!r.next().empty())
    fail(path, r.line_no, "trailing content after the last row");
  return m;
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("write_matrix_file: empty matrix");
  auto out = open_out(path);
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out << ' ';
      out << format_double(m.at(i, j));
    }
    out << '\n';
  }
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

void write_guarding_csv(const std::string& path, const Matrix& delta,
                        const CellSet& B) {
  auto out = open_out(path);
  out << "i,j,delta_ij\n";
  for (const GridPair& m : B) {
    if (m.i < 1 || m.i > delta.rows() || m.j < 1 || m.j > delta.cols())
      throw std::invalid_argument("write_guarding_csv: member outside the grid");
    out << m.i << ',' << m.j << ',' << format_double(delta.at(m.i, m.j)) << '\n';
  }
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

void write_guarding_sidecar(const std::string& path, const GuardingSidecar& s) {
  nlohmann::ordered_json j;
  j["theta"] = s.theta;
  j["delta"] = s.delta;
  j["size"] = s.size;
  j["row_groups"] = s.row_groups;
  j["col_groups"] = s.col_groups;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

void write_samples_csv(const std::string& path,
                       const std::vector<PairOutcome>& outcomes) {
  auto out = open_out(path);
  out << "pair_id,protocol,complexity,sample_idx,ratio\n";
  for (const PairOutcome& po : outcomes)
    for (const LengthResult& lr : po.lengths)
      for (const SampleRow& row : lr.rows)
        out << row.pair_id << ',' << protocol_name(row.protocol) << ','
            << row.complexity << ',' << row.sample_idx << ','
            << format_double(row.ratio) << '\n';
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

void write_probs_csv(const std::string& path,
                     const std::vector<PairOutcome>& outcomes, double gamma) {
  auto out = open_out(path);
  out << "pair_id,protocol,complexity,gamma,prob\n";
  for (const PairOutcome& po : outcomes)
    for (const LengthResult& lr : po.lengths) {
      if (lr.rows.empty()) continue;  // fully undefined configuration
      std::vector<double> ratios;
      ratios.reserve(lr.rows.size());
      for (const SampleRow& row : lr.rows) ratios.push_back(row.ratio);
      out << po.pair_id << ',' << protocol_name(lr.rows.front().protocol) << ','
          << lr.complexity << ',' << format_double(gamma) << ','
          << format_double(ecdf_at(ratios, gamma)) << '\n';
    }
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

void write_buckets_csv(const std::string& path,
                       const std::vector<BucketStats>& stats, double gamma) {
  auto out = open_out(path);
  out << "complexity,gamma,mean,stddev,min,max,rows\n";
  for (const BucketStats& b : stats)
    out << b.complexity << ',' << format_double(gamma) << ','
        << format_double(b.mean) << ',' << format_double(b.stddev) << ','
        << format_double(b.min) << ',' << format_double(b.max) << ',' << b.rows
        << '\n';
  if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

std::vector<CorpusEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
  const fs::path base = fs::path(path).parent_path();
  std::vector<CorpusEntry> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const auto tokens = tokenize(line);
    if (tokens.size() != 2)
      fail(path, line_no, "expected `id path`");
    fs::path curve_path(tokens[1]);
    if (curve_path.is_relative()) curve_path = base / curve_path;
    corpus.push_back({tokens[0], read_curve_file(curve_path.string())});
  }
  if (corpus.empty())
    throw std::invalid_argument(path + ": manifest lists no curves");
  return corpus;
}

std::vector<CorpusEntry> read_corpus_dir(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::invalid_argument("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  std::vector<CorpusEntry> corpus;
  for (const fs::path& f : files)
    corpus.push_back({f.filename().string(), read_curve_file(f.string())});
  if (corpus.empty())
    throw std::invalid_argument("'" + dir + "' holds no curve files");
  return corpus;
}

}  // namespace frechproj
