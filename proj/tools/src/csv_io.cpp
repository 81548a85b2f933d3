// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "csv_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "coembed/errors.hpp"

namespace coembed::cli {

namespace {

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token, const std::string& path,
                    std::size_t lineno) {
  const std::string t = strip(token);
  if (!t.empty()) {
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() + t.size()) return v;
  }
  throw input_error(path + ": line " + std::to_string(lineno) +
                    ": invalid number '" + token + "'");
}

std::vector<double> parse_row(const std::string& line, const std::string& path,
                              std::size_t lineno) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string token;
  while (std::getline(ss, token, ','))
    out.push_back(parse_number(token, path, lineno));
  if (out.empty())
    throw input_error(path + ": line " + std::to_string(lineno) + ": empty row");
  return out;
}

struct Line {
  std::string text;
  std::size_t number = 0;
};

std::vector<Line> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::vector<Line> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (strip(raw).empty()) continue;
    lines.push_back({raw, lineno});
  }
  if (lines.empty()) throw input_error(path + ": empty input");
  return lines;
}

}  // namespace

Matrix read_matrix_csv(const std::string& path) {
  const std::vector<Line> lines = read_lines(path);
  const std::size_t n = lines.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> row = parse_row(lines[i].text, path, lines[i].number);
    if (row.size() != n)
      throw input_error(path + ": line " + std::to_string(lines[i].number) +
                        ": expected " + std::to_string(n) + " fields, got " +
                        std::to_string(row.size()));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

PointCloud read_points_csv(const std::string& path) {
  const std::vector<Line> lines = read_lines(path);

  // Header "n dim" (also accepted comma-separated).
  std::string header = lines[0].text;
  for (char& c : header)
    if (c == ',') c = ' ';
  std::stringstream hs(header);
  long long n = 0, dim = 0;
  if (!(hs >> n >> dim) || n < 1 || dim < 1)
    throw input_error(path + ": line " + std::to_string(lines[0].number) +
                      ": expected header 'n dim' with positive integers");
  std::string rest;
  if (hs >> rest)
    throw input_error(path + ": line " + std::to_string(lines[0].number) +
                      ": expected header 'n dim' only");

  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw input_error(path + ": expected " + std::to_string(n) +
                      " coordinate rows after the header, got " +
                      std::to_string(lines.size() - 1));

  Matrix coords(static_cast<std::size_t>(n), static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const Line& line = lines[i + 1];
    const std::vector<double> row = parse_row(line.text, path, line.number);
    if (row.size() != static_cast<std::size_t>(dim))
      throw input_error(path + ": line " + std::to_string(line.number) +
                        ": expected " + std::to_string(dim) + " fields, got " +
                        std::to_string(row.size()));
    for (std::size_t k = 0; k < static_cast<std::size_t>(dim); ++k)
      coords(i, k) = row[k];
  }
  return make_point_cloud(std::move(coords));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_rows(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  return out;
}

}  // namespace

void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream out = open_out(path);
  write_rows(out, m);
}

void write_points_csv(const std::string& path, const Matrix& coords) {
  std::ofstream out = open_out(path);
  out << coords.rows() << ' ' << coords.cols() << '\n';
  write_rows(out, coords);
}

void write_moduli_csv(std::ostream& out, const ModuliReport& r) {
  for (std::size_t i = 0; i < r.achieved.size(); ++i)
    out << format_double(r.achieved[i]) << ',' << format_double(r.compression[i])
        << ',' << format_double(r.expansion[i]) << '\n';
}

MonotoneStepFunction read_breakpoints_csv(const std::string& path) {
  const std::vector<Line> lines = read_lines(path);
  std::vector<std::pair<double, double>> bp;
  bp.reserve(lines.size());
  for (const Line& line : lines) {
    const std::vector<double> row = parse_row(line.text, path, line.number);
    if (row.size() != 2)
      throw input_error(path + ": line " + std::to_string(line.number) +
                        ": expected 't,v' breakpoint rows");
    bp.emplace_back(row[0], row[1]);
  }
  return MonotoneStepFunction(std::move(bp));
}

}  // namespace coembed::cli
