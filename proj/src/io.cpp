#include "lexstat/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexstat/errors.hpp"

namespace lexstat {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (s == "-0") s = "0";
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::io_error, "failed while reading '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io_error, "cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::io_error, "failed while writing '" + path + "'");
}

void write_distribution_csv(std::ostream& out, const Distribution& d,
                            const AlphabetProfile* profile) {
  if (d.view == View::alphabetical) {
    out << "symbol,frequency\n";
    for (int i = 0; i < d.size(); ++i) {
      if (profile)
        out << utf8_encode(profile->letters[static_cast<std::size_t>(i)]);
      else
        out << i;
      out << ',' << format_double(d.freqs[static_cast<std::size_t>(i)]) << '\n';
    }
    return;
  }
  out << "rank,symbol,frequency\n";
  const bool have_map = d.rank_to_symbol.size() == d.freqs.size();
  for (int k = 0; k < d.size(); ++k) {
    out << (k + 1) << ',';
    if (have_map) {
      const int sym = d.rank_to_symbol[static_cast<std::size_t>(k)];
      if (profile)
        out << utf8_encode(profile->letters[static_cast<std::size_t>(sym)]);
      else
        out << sym;
    }
    out << ',' << format_double(d.freqs[static_cast<std::size_t>(k)]) << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

double parse_number(const std::string& cell, const std::string& where) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    fail(ErrorCode::parse_error, where + ": '" + cell + "' is not a number");
  return v;
}

}  // namespace

Distribution read_distribution_csv(const std::string& path, const AlphabetProfile& profile) {
  std::istringstream in(read_text_file(path));
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::parse_error, path + ": empty distribution table");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();

  Distribution d;
  d.profile_name = profile.name;

  int line_no = 1;
  if (line == "symbol,frequency") {
    d.view = View::alphabetical;
    d.freqs.assign(static_cast<std::size_t>(profile.size()), 0.0);
    std::vector<bool> seen(d.freqs.size(), false);
    while (std::getline(in, line)) {
      ++line_no;
      const std::string where = path + ":" + std::to_string(line_no);
      if (line.empty() || line == "\r") continue;
      const auto cells = split_csv_line(line);
      if (cells.size() != 2) fail(ErrorCode::parse_error, where + ": expected 2 columns");
      const auto cps = utf8_decode(cells[0]);
      if (cps.size() != 1)
        fail(ErrorCode::parse_error, where + ": '" + cells[0] + "' is not a single letter");
      const auto idx = profile.letter_index(cps[0]);
      if (!idx)
        fail(ErrorCode::parse_error,
             where + ": '" + cells[0] + "' is not a letter of profile " + profile.name);
      if (seen[static_cast<std::size_t>(*idx)])
        fail(ErrorCode::parse_error, where + ": duplicate symbol '" + cells[0] + "'");
      seen[static_cast<std::size_t>(*idx)] = true;
      d.freqs[static_cast<std::size_t>(*idx)] = parse_number(cells[1], where);
    }
  } else if (line == "rank,symbol,frequency") {
    d.view = View::ordered;
    std::vector<double> values;
    std::vector<int> symbols;
    bool all_symbols = true;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string where = path + ":" + std::to_string(line_no);
      if (line.empty() || line == "\r") continue;
      const auto cells = split_csv_line(line);
      if (cells.size() != 3) fail(ErrorCode::parse_error, where + ": expected 3 columns");
      const double rank = parse_number(cells[0], where);
      if (rank != static_cast<double>(values.size() + 1))
        fail(ErrorCode::parse_error, where + ": ranks must run 1,2,... in order");
      const double v = parse_number(cells[2], where);
      if (!values.empty() && v > values.back() + 1e-12)
        fail(ErrorCode::parse_error, where + ": rank-sorted values must be non-increasing");
      values.push_back(v);
      if (cells[1].empty()) {
        all_symbols = false;
      } else {
        const auto cps = utf8_decode(cells[1]);
        if (cps.size() != 1)
          fail(ErrorCode::parse_error, where + ": '" + cells[1] + "' is not a single letter");
        const auto idx = profile.letter_index(cps[0]);
        if (!idx)
          fail(ErrorCode::parse_error,
               where + ": '" + cells[1] + "' is not a letter of profile " + profile.name);
        symbols.push_back(*idx);
      }
    }
    d.freqs = std::move(values);
    if (all_symbols && symbols.size() == d.freqs.size()) d.rank_to_symbol = std::move(symbols);
  } else {
    fail(ErrorCode::parse_error,
         path + ": header must be 'symbol,frequency' or 'rank,symbol,frequency'");
  }

  if (d.freqs.empty()) fail(ErrorCode::parse_error, path + ": no frequency rows");
  double sum = 0.0;
  for (double f : d.freqs) {
    if (f < 0.0) fail(ErrorCode::parse_error, path + ": negative frequency");
    sum += f;
  }
  // Published tables are rounded to a few decimals, so their sums drift off
  // 1 by up to ~1e-4 per column; accept that while rejecting real mistakes.
  if (std::abs(sum - 1.0) > 1e-3)
    fail(ErrorCode::parse_error,
         path + ": frequencies sum to " + format_double(sum) + ", expected 1");
  return d;
}

std::vector<std::pair<std::string, Distribution>> load_distribution_dir(
    const std::string& dir, const AlphabetProfile& profile) {
  namespace fs = std::filesystem;
  std::error_code ec;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  }
  if (ec) fail(ErrorCode::io_error, "cannot list '" + dir + "': " + ec.message());
  std::sort(files.begin(), files.end());
  if (files.empty())
    fail(ErrorCode::empty_references, "no .csv reference tables in '" + dir + "'");

  std::vector<std::pair<std::string, Distribution>> entries;
  entries.reserve(files.size());
  for (const auto& f : files)
    entries.emplace_back(f.stem().string(), read_distribution_csv(f.string(), profile));
  return entries;
}

ReferenceSet load_reference_dir(const std::string& dir, const AlphabetProfile& profile) {
  return make_reference_set(load_distribution_dir(dir, profile));
}

void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& m) {
  out << "label";
  for (int j = 0; j + 1 < m.size(); ++j) out << ',' << m.labels[static_cast<std::size_t>(j)];
  out << '\n';
  for (int i = 0; i < m.size(); ++i) {
    out << m.labels[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) out << ',' << std::llround(100.0 * m.at(i, j));
    out << '\n';
  }
}

}  // namespace lexstat
