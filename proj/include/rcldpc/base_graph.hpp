#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace rcldpc {

// Parse failure with the offending line number baked into the message.
// Line 0 means the error concerns the file as a whole.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct BaseEntry {
  int row = 0;
  int col = 0;
  int shift = 0;
};

struct RateBoundary {
  int rows_used = 0;
  int cols_used = 0;
  int transmitted_count = 0;  // lifted bits, written for the file's intended Z
};

// Protograph of a raptor-like code: a dense precode on the first
// `precode_rows` rows followed by extension rows that each introduce one
// degree-1 parity column.
struct BaseGraph {
  int rows = 0;
  int cols = 0;
  int info_cols = 0;
  int precode_rows = 0;
  std::vector<BaseEntry> entries;             // sorted by (row, col)
  std::vector<RateBoundary> rate_boundaries;  // highest rate first
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = (pos == std::string::npos) ? line : line.substr(0, pos);
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

inline bool parse_three_ints(const std::string& line, long out[3]) {
  std::istringstream iss(line);
  if (!(iss >> out[0] >> out[1] >> out[2])) return false;
  long extra;
  return !(iss >> extra);
}

// Validates structure; entry_line maps entry index -> source line (0 if unknown).
inline void validate_base_graph(const BaseGraph& bg, const std::vector<int>& entry_line) {
  auto line_of = [&](size_t i) { return i < entry_line.size() ? entry_line[i] : 0; };

  if (bg.rows <= 0 || bg.cols <= 0) throw parse_error(0, "empty base graph");
  if (bg.info_cols <= 0 || bg.info_cols >= bg.cols) throw parse_error(0, "info_cols out of range");
  if (bg.precode_rows <= 0 || bg.precode_rows > bg.rows)
    throw parse_error(0, "precode_rows out of range");
  if (bg.cols != bg.info_cols + bg.rows)
    throw parse_error(0, "raptor-like graph requires cols == info_cols + rows");

  std::map<std::pair<int, int>, size_t> seen;
  std::vector<int> col_degree(bg.cols, 0);
  for (size_t i = 0; i < bg.entries.size(); ++i) {
    const auto& e = bg.entries[i];
    if (e.row < 0 || e.row >= bg.rows || e.col < 0 || e.col >= bg.cols)
      throw parse_error(line_of(i), "entry (" + std::to_string(e.row) + "," +
                                        std::to_string(e.col) + ") outside base dimensions");
    auto ins = seen.insert({{e.row, e.col}, i});
    if (!ins.second)
      throw parse_error(line_of(i), "duplicate entry (" + std::to_string(e.row) + "," +
                                        std::to_string(e.col) + ")");
    col_degree[e.col]++;
  }

  // Each extension row carries exactly one degree-1 column among the columns
  // introduced at or after it; everything else it touches must come earlier.
  for (int r = bg.precode_rows; r < bg.rows; ++r) {
    int fresh = 0;
    int row_line = 0;
    for (size_t i = 0; i < bg.entries.size(); ++i) {
      const auto& e = bg.entries[i];
      if (e.row != r) continue;
      if (row_line == 0) row_line = line_of(i);
      if (e.col < bg.info_cols + r) continue;
      ++fresh;
      if (col_degree[e.col] != 1)
        throw parse_error(line_of(i), "extension row " + std::to_string(r) +
                                          ": column " + std::to_string(e.col) +
                                          " must have degree 1, has " +
                                          std::to_string(col_degree[e.col]));
    }
    if (fresh != 1)
      throw parse_error(row_line, "extension row " + std::to_string(r) + " introduces " +
                                      std::to_string(fresh) + " new columns, expected 1");
  }

  if (bg.rate_boundaries.empty()) throw parse_error(0, "rate ladder is empty");
  for (size_t i = 0; i < bg.rate_boundaries.size(); ++i) {
    const auto& b = bg.rate_boundaries[i];
    if (b.rows_used < bg.precode_rows || b.rows_used > bg.rows || b.cols_used > bg.cols)
      throw parse_error(0, "rate boundary " + std::to_string(i) + " exceeds base dimensions");
    if (b.cols_used != bg.info_cols + b.rows_used)
      throw parse_error(0, "rate boundary " + std::to_string(i) +
                               " is not aligned to the raptor-like structure");
    if (i > 0) {
      const auto& p = bg.rate_boundaries[i - 1];
      if (b.rows_used <= p.rows_used || b.cols_used <= p.cols_used)
        throw parse_error(0, "non-monotone rate boundaries");
    }
  }
  const auto& last = bg.rate_boundaries.back();
  if (last.rows_used != bg.rows || last.cols_used != bg.cols)
    throw parse_error(0, "rate ladder must end at the full base size");
}

}  // namespace detail

// File format:
//   BG <rows> <cols> <info_cols> <precode_rows>
//   RATES
//   <rows_used> <cols_used> <transmitted_count>   one line per ladder entry,
//     highest rate first; the list ends with the boundary equal to (rows, cols)
//   <row> <col> <shift>                           one line per base entry
// '#' starts a comment. A shift of -1 marks an absent cell and is skipped.
inline BaseGraph parse_base_graph(const std::string& text) {
  BaseGraph bg;
  std::vector<int> entry_line;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  enum { want_header, want_rates_kw, want_rates, want_entries } state = want_header;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;

    if (state == want_header) {
      std::istringstream iss(line);
      std::string tag;
      iss >> tag >> bg.rows >> bg.cols >> bg.info_cols >> bg.precode_rows;
      if (tag != "BG" || iss.fail())
        throw parse_error(lineno, "expected 'BG <rows> <cols> <info_cols> <precode_rows>'");
      state = want_rates_kw;
      continue;
    }
    if (state == want_rates_kw) {
      if (line != "RATES") throw parse_error(lineno, "expected 'RATES'");
      state = want_rates;
      continue;
    }

    long v[3];
    if (!detail::parse_three_ints(line, v)) throw parse_error(lineno, "expected three integers");

    if (state == want_rates) {
      RateBoundary b{int(v[0]), int(v[1]), int(v[2])};
      if (!bg.rate_boundaries.empty()) {
        const auto& p = bg.rate_boundaries.back();
        if (b.rows_used <= p.rows_used || b.cols_used <= p.cols_used)
          throw parse_error(lineno, "non-monotone rate boundaries");
      }
      bg.rate_boundaries.push_back(b);
      if (b.rows_used == bg.rows && b.cols_used == bg.cols) state = want_entries;
      continue;
    }

    if (v[2] == -1) continue;  // unlifted marker: absent cell in a dense table
    if (v[2] < -1) throw parse_error(lineno, "negative shift");
    bg.entries.push_back({int(v[0]), int(v[1]), int(v[2])});
    entry_line.push_back(lineno);
  }

  if (state != want_entries)
    throw parse_error(lineno, "truncated file: rate ladder never reached the full base size");

  // canonical (row, col) order; keep the line map in step
  std::vector<size_t> order(bg.entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::tie(bg.entries[a].row, bg.entries[a].col) <
           std::tie(bg.entries[b].row, bg.entries[b].col);
  });
  std::vector<BaseEntry> sorted_entries(bg.entries.size());
  std::vector<int> sorted_lines(bg.entries.size());
  for (size_t i = 0; i < order.size(); ++i) {
    sorted_entries[i] = bg.entries[order[i]];
    sorted_lines[i] = entry_line[order[i]];
  }
  bg.entries = std::move(sorted_entries);

  detail::validate_base_graph(bg, sorted_lines);
  return bg;
}

inline BaseGraph load_base_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open base graph file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_base_graph(buf.str());
}

}  // namespace rcldpc
