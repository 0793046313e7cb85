// lexstat: statistical text analysis over declared alphabets.
//
// Subcommands: freq fit dist cluster rankshift hurst spectrum dichotomy
// identify scan precision mix. Outputs are deterministic: byte-identical for
// identical inputs. Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexstat/cluster.hpp"
#include "lexstat/distribution.hpp"
#include "lexstat/errors.hpp"
#include "lexstat/gapseries.hpp"
#include "lexstat/identify.hpp"
#include "lexstat/io.hpp"
#include "lexstat/logmodel.hpp"
#include "lexstat/precision.hpp"
#include "lexstat/profile.hpp"
#include "lexstat/spectral.hpp"
#include "lexstat/stream.hpp"

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Output plumbing: every subcommand fills tables; tables serialize as CSV
// (one header row) or JSON (array of records keyed by column name).

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add_row(std::initializer_list<json> cells) { rows.emplace_back(cells); }
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string cell_to_csv(const json& cell) {
  if (cell.is_string()) return csv_escape(cell.get<std::string>());
  if (cell.is_number_float()) return lexstat::format_double(cell.get<double>());
  return cell.dump();
}

std::string render_table(const Table& t, const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const auto& row : t.rows) {
      json rec = json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = row[c];
      out.push_back(std::move(rec));
    }
    return out.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(t.columns[c]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_to_csv(row[c]);
    }
    out += '\n';
  }
  return out;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << content;
    return;
  }
  lexstat::write_text_file(output_path, content);
}

void emit_table(const Table& t, const std::string& format, const std::string& output_path) {
  emit(render_table(t, format), output_path);
}

// ---------------------------------------------------------------------------
// Shared input plumbing.

struct TextInput {
  std::string input_path;
  std::string profile_path;
  bool devocalize = false;
};

void add_text_options(CLI::App* cmd, TextInput& in, bool required = true) {
  auto* i = cmd->add_option("--input", in.input_path, "UTF-8 text file to analyse");
  auto* p = cmd->add_option("--profile", in.profile_path, "alphabet profile file");
  if (required) {
    i->required();
    p->required();
  }
  cmd->add_flag("--devocalize", in.devocalize, "remove the profile's vowels after normalizing");
}

struct LoadedText {
  lexstat::AlphabetProfile profile;
  lexstat::SymbolStream stream;
};

LoadedText load_text(const TextInput& in) {
  LoadedText t;
  t.profile = lexstat::load_profile(in.profile_path);
  const auto res = lexstat::normalize(lexstat::read_text_file(in.input_path), t.profile);
  if (res.discarded > 0)
    std::cerr << "warning: " << in.input_path << ": discarded " << res.discarded
              << " unmappable codepoint(s)\n";
  t.stream = res.stream;
  if (in.devocalize) t.stream = lexstat::devocalize(t.stream, t.profile);
  return t;
}

char32_t single_letter(const std::string& arg) {
  const auto cps = lexstat::utf8_decode(arg);
  if (cps.size() != 1)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "'" + arg + "' is not a single character");
  return cps[0];
}

std::string symbol_name(const lexstat::AlphabetProfile& profile, int index) {
  return lexstat::utf8_encode(profile.letters[static_cast<std::size_t>(index)]);
}

Table distribution_table(const lexstat::Distribution& d,
                         const lexstat::AlphabetProfile& profile) {
  Table t;
  if (d.view == lexstat::View::alphabetical) {
    t.columns = {"symbol", "frequency"};
    for (int i = 0; i < d.size(); ++i)
      t.add_row({symbol_name(profile, i), d.freqs[static_cast<std::size_t>(i)]});
    return t;
  }
  t.columns = {"rank", "symbol", "frequency"};
  const bool have_map = d.rank_to_symbol.size() == d.freqs.size();
  for (int k = 0; k < d.size(); ++k) {
    const std::string sym =
        have_map ? symbol_name(profile, d.rank_to_symbol[static_cast<std::size_t>(k)]) : "";
    t.add_row({k + 1, sym, d.freqs[static_cast<std::size_t>(k)]});
  }
  return t;
}

// Parses "label=base1:w1,base2:w2" (or the label-free form, which names
// itself) into a labelled blend over already-loaded reference distributions.
std::pair<std::string, lexstat::Distribution> parse_blend(
    const std::string& spec,
    const std::vector<std::pair<std::string, lexstat::Distribution>>& bases) {
  std::string label;
  std::string recipe = spec;
  if (const auto eq = spec.find('='); eq != std::string::npos) {
    label = spec.substr(0, eq);
    recipe = spec.substr(eq + 1);
  }
  std::vector<std::pair<const lexstat::Distribution*, double>> parts;
  std::stringstream ss(recipe);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      lexstat::fail(lexstat::ErrorCode::invalid_argument,
                    "blend component '" + item + "' is not of the form name:weight");
    const std::string name = item.substr(0, colon);
    double weight = 0.0;
    try {
      weight = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      lexstat::fail(lexstat::ErrorCode::invalid_argument,
                    "blend weight in '" + item + "' is not a number");
    }
    const lexstat::Distribution* base = nullptr;
    for (const auto& [base_label, dist] : bases)
      if (base_label == name) base = &dist;
    if (!base)
      lexstat::fail(lexstat::ErrorCode::invalid_argument,
                    "blend refers to unknown reference '" + name + "'");
    parts.emplace_back(base, weight);
  }
  if (label.empty()) {
    label = recipe;
    std::replace(label.begin(), label.end(), ',', '+');
  }
  return {label, lexstat::blend(parts)};
}

lexstat::ReferenceSet load_references(const std::string& dir,
                                      const std::vector<std::string>& blend_specs,
                                      const lexstat::AlphabetProfile& profile) {
  auto entries = lexstat::load_distribution_dir(dir, profile);
  for (const auto& spec : blend_specs) entries.push_back(parse_blend(spec, entries));
  return lexstat::make_reference_set(entries);
}

// ---------------------------------------------------------------------------
// Subcommand configuration holders.

struct FreqArgs {
  TextInput in;
  bool ordered = false;
  bool bigrams = false;
};

struct FitArgs {
  TextInput in;
  std::string dist_path;
  int o_min = 0, o_max = 0;
  bool have_range = false;
  bool renormalize = false;
  int drop_rarest = 0;
  std::string drop_stage = "before";
  std::string curve_path;
};

struct DistArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> dists;
  std::string profile_path;
  bool devocalize = false;
  std::string view = "ordered";
};

struct ClusterArgs {
  DistArgs sources;
  double threshold = lexstat::kDefaultCliqueThreshold;
  std::string matrix_path;
};

struct RankshiftArgs {
  std::vector<std::string> inputs;
  std::string profile_path;
  bool devocalize = false;
};

struct HurstArgs {
  TextInput in;
  std::string symbol;
  std::size_t window = lexstat::kDefaultHurstWindow;
  std::size_t step = lexstat::kDefaultHurstStep;
  bool whole = false;
  std::size_t frame_max = lexstat::kDefaultHurstWindow;
  std::string histogram_path;
};

struct SpectrumArgs {
  TextInput in;
  std::string re_range = "-1.5:1.5";
  std::string im_range = "-1.5:1.5";
  std::string resolution = "101";
  std::vector<double> eps_levels;
  std::string mask_path;
};

struct DichotomyArgs {
  TextInput in;
  std::vector<double> radii;
  int nodes = lexstat::kDichotomyInitialNodes;
};

struct IdentifyArgs {
  TextInput in;
  std::string refs_dir;
  std::vector<std::string> blends;
  double threshold = lexstat::kLowConfidenceDistance;
};

struct ScanArgs {
  IdentifyArgs id;
  std::size_t window = lexstat::kDefaultScanWindow;
  std::size_t step = 1;
  std::string segments_path;
};

struct PrecisionArgs {
  TextInput in;
  std::string dist_path;
  double sigma = 0.0;
  std::uint64_t n_chars = 0;
};

struct MixArgs {
  std::vector<std::string> inputs;
  std::string profile_path;
  bool devocalize = false;
  std::string ratio = "1:1";
  std::size_t block_len = 1000;
};

std::pair<double, double> parse_range(const std::string& arg, const std::string& what) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  what + " must be of the form MIN:MAX, got '" + arg + "'");
  try {
    return {std::stod(arg.substr(0, colon)), std::stod(arg.substr(colon + 1))};
  } catch (const std::exception&) {
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  what + " bounds in '" + arg + "' are not numbers");
  }
}

std::pair<int, int> parse_ratio(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "ratio must be of the form WA:WB, got '" + arg + "'");
  try {
    return {std::stoi(arg.substr(0, colon)), std::stoi(arg.substr(colon + 1))};
  } catch (const std::exception&) {
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "ratio parts in '" + arg + "' are not integers");
  }
}

std::pair<int, int> parse_resolution(const std::string& arg) {
  const auto x = arg.find('x');
  try {
    if (x == std::string::npos) {
      const int n = std::stoi(arg);
      return {n, n};
    }
    return {std::stoi(arg.substr(0, x)), std::stoi(arg.substr(x + 1))};
  } catch (const std::exception&) {
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "resolution must be N or NXxNY, got '" + arg + "'");
  }
}

// Label for a path: file stem.
std::string stem_of(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the main table (already emitted side
// outputs go to their own paths).

void run_freq(const FreqArgs& a, const std::string& format, const std::string& output) {
  const LoadedText t = load_text(a.in);
  if (a.bigrams) {
    const auto counts = lexstat::bigram_counts(t.stream);
    Table table;
    table.columns = {"row_symbol", "col_symbol", "count"};
    for (int i = 0; i < counts.n; ++i)
      for (int j = 0; j < counts.n; ++j)
        table.add_row({symbol_name(t.profile, i), symbol_name(t.profile, j), counts.at(i, j)});
    emit_table(table, format, output);
    return;
  }
  lexstat::Distribution d = lexstat::count_frequencies(t.stream);
  if (a.ordered) d = lexstat::ordered(d);
  emit_table(distribution_table(d, t.profile), format, output);
}

void run_fit(const FitArgs& a, const std::string& format, const std::string& output) {
  lexstat::AlphabetProfile profile;
  lexstat::Distribution actual;
  if (!a.dist_path.empty()) {
    profile = lexstat::load_profile(a.in.profile_path);
    actual = lexstat::read_distribution_csv(a.dist_path, profile);
    if (actual.view == lexstat::View::alphabetical) actual = lexstat::ordered(actual);
  } else {
    const LoadedText t = load_text(a.in);
    profile = t.profile;
    actual = lexstat::ordered(lexstat::count_frequencies(t.stream));
  }

  lexstat::OffsetFit fit;
  lexstat::Distribution compared = actual;
  if (a.drop_rarest > 0 && a.drop_stage == "before") {
    compared = lexstat::truncate_ranks(actual, actual.size() - a.drop_rarest, true);
    fit = a.have_range ? lexstat::fit_offset(compared, a.o_min, a.o_max, a.renormalize)
                       : lexstat::fit_offset(compared, a.renormalize);
  } else {
    fit = a.have_range ? lexstat::fit_offset(actual, a.o_min, a.o_max, a.renormalize)
                       : lexstat::fit_offset(actual, a.renormalize);
    if (a.drop_rarest > 0) {
      // Rarest ranks eliminated after fitting: the offset comes from the full
      // alphabet, deviation and determination are re-scored on the retained
      // top of both curves.
      compared = lexstat::truncate_ranks(actual, actual.size() - a.drop_rarest, false);
      const auto model_cut =
          lexstat::truncate_ranks(fit.model, fit.model.size() - a.drop_rarest, false);
      fit.l1_dev = lexstat::l1_distance(compared, model_cut);
      fit.determination = lexstat::determination(compared, model_cut);
      fit.model = model_cut;
    }
  }

  Table summary;
  summary.columns = {"n", "o", "determination", "l1_dev"};
  summary.add_row({fit.n, fit.o, fit.determination, fit.l1_dev});
  emit_table(summary, format, output);

  if (!a.curve_path.empty()) {
    Table curve;
    curve.columns = {"rank", "model_freq", "actual_freq"};
    for (int k = 0; k < fit.model.size(); ++k)
      curve.add_row({k + 1, fit.model.freqs[static_cast<std::size_t>(k)],
                     compared.freqs[static_cast<std::size_t>(k)]});
    emit_table(curve, format, a.curve_path);
  }
}

std::vector<std::pair<std::string, lexstat::Distribution>> collect_distributions(
    const DistArgs& a, lexstat::AlphabetProfile& profile) {
  profile = lexstat::load_profile(a.profile_path);
  std::vector<std::pair<std::string, lexstat::Distribution>> out;
  for (const auto& path : a.inputs) {
    const auto res = lexstat::normalize(lexstat::read_text_file(path), profile);
    if (res.discarded > 0)
      std::cerr << "warning: " << path << ": discarded " << res.discarded
                << " unmappable codepoint(s)\n";
    lexstat::SymbolStream s = res.stream;
    if (a.devocalize) s = lexstat::devocalize(s, profile);
    out.emplace_back(stem_of(path), lexstat::count_frequencies(s));
  }
  for (const auto& path : a.dists)
    out.emplace_back(stem_of(path), lexstat::read_distribution_csv(path, profile));
  if (a.view == "ordered")
    for (auto& [label, d] : out)
      if (d.view == lexstat::View::alphabetical) d = lexstat::ordered(d);
  return out;
}

void run_dist(const DistArgs& a, const std::string& format, const std::string& output) {
  lexstat::AlphabetProfile profile;
  const auto entries = collect_distributions(a, profile);
  if (entries.size() != 2)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "dist compares exactly two inputs, got " + std::to_string(entries.size()));
  Table t;
  t.columns = {"label_a", "label_b", "l1"};
  t.add_row({entries[0].first, entries[1].first,
             lexstat::l1_distance(entries[0].second, entries[1].second)});
  emit_table(t, format, output);
}

void run_cluster(const ClusterArgs& a, const std::string& format, const std::string& output) {
  lexstat::AlphabetProfile profile;
  const auto entries = collect_distributions(a.sources, profile);
  const auto matrix = lexstat::distance_matrix(entries);
  const auto clustering = lexstat::clique_cluster(matrix, a.threshold);

  if (!a.matrix_path.empty()) {
    std::ostringstream out;
    lexstat::write_distance_matrix_csv(out, matrix);
    emit(out.str(), a.matrix_path);
  }

  Table t;
  t.columns = {"label", "cluster_id"};
  for (const std::string& label : matrix.labels)
    t.add_row({label, clustering.cluster_of(label)});
  emit_table(t, format, output);
}

void run_rankshift(const RankshiftArgs& a, const std::string& format,
                   const std::string& output) {
  if (a.inputs.size() != 2)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "rankshift compares exactly two inputs, got " +
                      std::to_string(a.inputs.size()));
  const auto profile = lexstat::load_profile(a.profile_path);
  std::vector<lexstat::Distribution> ds;
  for (const auto& path : a.inputs) {
    const auto res = lexstat::normalize(lexstat::read_text_file(path), profile);
    if (res.discarded > 0)
      std::cerr << "warning: " << path << ": discarded " << res.discarded
                << " unmappable codepoint(s)\n";
    lexstat::SymbolStream s = res.stream;
    if (a.devocalize) s = lexstat::devocalize(s, profile);
    ds.push_back(lexstat::ordered(lexstat::count_frequencies(s)));
  }
  const auto migration = lexstat::rank_migration(ds[0], ds[1]);

  std::vector<int> rank_a(migration.shift.size()), rank_b(migration.shift.size());
  for (std::size_t k = 0; k < migration.shift.size(); ++k) {
    rank_a[static_cast<std::size_t>(ds[0].rank_to_symbol[k])] = static_cast<int>(k) + 1;
    rank_b[static_cast<std::size_t>(ds[1].rank_to_symbol[k])] = static_cast<int>(k) + 1;
  }
  Table t;
  t.columns = {"symbol", "rank_a", "rank_b", "shift"};
  for (std::size_t i = 0; i < migration.shift.size(); ++i)
    t.add_row({symbol_name(profile, static_cast<int>(i)), rank_a[i], rank_b[i],
               migration.shift[i]});
  emit_table(t, format, output);
  std::cerr << "note: max rank shift " << migration.max_shift << "\n";
}

void run_hurst(const HurstArgs& a, const std::string& format, const std::string& output) {
  const LoadedText t = load_text(a.in);
  const auto idx = t.profile.letter_index(single_letter(a.symbol));
  if (!idx)
    lexstat::fail(lexstat::ErrorCode::out_of_range,
                  "'" + a.symbol + "' is not a letter of profile " + t.profile.name);
  const auto series = lexstat::gaps(t.stream, *idx);

  Table table;
  table.columns = {"t", "H"};
  if (a.whole) {
    const std::size_t cap = std::min(a.frame_max, series.size());
    table.add_row({static_cast<std::int64_t>(series.size()), lexstat::hurst_rs(series, cap)});
    emit_table(table, format, output);
    return;
  }
  const auto sweep = lexstat::hurst_distribution(series, a.window, a.step);
  for (const auto& p : sweep.points)
    table.add_row({static_cast<std::int64_t>(p.t), p.h});
  emit_table(table, format, output);

  if (!a.histogram_path.empty()) {
    const auto hist = lexstat::hurst_histogram(sweep);
    Table ht;
    ht.columns = {"bin_low", "bin_high", "count"};
    for (std::size_t b = 0; b < hist.counts.size(); ++b)
      ht.add_row({static_cast<double>(b) * hist.bin_width,
                  static_cast<double>(b + 1) * hist.bin_width, hist.counts[b]});
    emit_table(ht, format, a.histogram_path);
  }
}

void run_spectrum(const SpectrumArgs& a, int threads, const std::string& format,
                  const std::string& output) {
  const LoadedText t = load_text(a.in);
  const auto matrix = lexstat::transition_matrix(lexstat::bigram_counts(t.stream));
  if (!matrix.uniform_rows.empty()) {
    std::cerr << "warning: " << matrix.uniform_rows.size()
              << " symbol(s) never head a pair; their rows are uniform:";
    for (int i : matrix.uniform_rows) std::cerr << ' ' << symbol_name(t.profile, i);
    std::cerr << "\n";
  }

  lexstat::GridSpec region;
  std::tie(region.re_min, region.re_max) = parse_range(a.re_range, "--re");
  std::tie(region.im_min, region.im_max) = parse_range(a.im_range, "--im");
  std::tie(region.nx, region.ny) = parse_resolution(a.resolution);

  const auto grid = lexstat::pseudospectrum_grid(matrix, region, a.eps_levels, threads);

  std::size_t capped = 0;
  for (auto c : grid.capped) capped += c;
  if (capped > 0)
    std::cerr << "warning: " << capped
              << " grid node(s) sit on eigenvalues; their norms are capped\n";

  Table table;
  table.columns = {"re", "im", "log10_norm"};
  const std::size_t total = static_cast<std::size_t>(region.nx) * region.ny;
  for (std::size_t node = 0; node < total; ++node) {
    const int iy = static_cast<int>(node) / region.nx;
    const int ix = static_cast<int>(node) % region.nx;
    table.add_row({grid.re_at(ix), grid.im_at(iy), grid.log10_norm[node]});
  }
  emit_table(table, format, output);

  if (!a.mask_path.empty()) {
    Table mt;
    mt.columns = {"re", "im", "eps", "inside"};
    for (std::size_t e = 0; e < grid.eps_levels.size(); ++e)
      for (std::size_t node = 0; node < total; ++node) {
        const int iy = static_cast<int>(node) / region.nx;
        const int ix = static_cast<int>(node) % region.nx;
        mt.add_row({grid.re_at(ix), grid.im_at(iy), grid.eps_levels[e],
                    static_cast<int>(grid.mask[e * total + node])});
      }
    emit_table(mt, format, a.mask_path);
  }
}

void run_dichotomy(const DichotomyArgs& a, const std::string& format,
                   const std::string& output) {
  const LoadedText t = load_text(a.in);
  const auto matrix = lexstat::transition_matrix(lexstat::bigram_counts(t.stream));
  Table table;
  table.columns = {"r", "K_r", "M_used"};
  for (double r : a.radii) {
    const auto res = lexstat::radial_dichotomy(matrix, r, a.nodes);
    table.add_row({res.r, res.k_r, res.nodes_used});
  }
  emit_table(table, format, output);
}

void run_identify(const IdentifyArgs& a, const std::string& format,
                  const std::string& output) {
  const LoadedText t = load_text(a.in);
  const auto refs = load_references(a.refs_dir, a.blends, t.profile);
  const auto window = lexstat::ordered(lexstat::count_frequencies(t.stream));
  const auto v = lexstat::identify_window(window, refs, a.threshold);
  if (v.low_confidence)
    std::cerr << "warning: low confidence; distance " << lexstat::format_double(v.distance)
              << " above " << lexstat::format_double(a.threshold) << "\n";
  Table table;
  table.columns = {"label", "distance", "runner_up_gap", "low_confidence"};
  table.add_row({v.label, v.distance, v.runner_up_gap, v.low_confidence ? 1 : 0});
  emit_table(table, format, output);
}

void run_scan(const ScanArgs& a, const std::string& format, const std::string& output) {
  const LoadedText t = load_text(a.id.in);
  const auto refs = load_references(a.id.refs_dir, a.id.blends, t.profile);
  const auto result = lexstat::scan(t.stream, refs, a.window, a.step, a.id.threshold);

  std::size_t shaky = 0;
  for (const auto& wv : result.verdicts)
    if (wv.verdict.low_confidence) ++shaky;
  if (shaky > 0)
    std::cerr << "warning: " << shaky << " of " << result.verdicts.size()
              << " windows identified with low confidence\n";

  Table table;
  table.columns = {"t", "label", "distance", "low_confidence"};
  for (const auto& wv : result.verdicts)
    table.add_row({static_cast<std::int64_t>(wv.t), wv.verdict.label, wv.verdict.distance,
                   wv.verdict.low_confidence ? 1 : 0});
  emit_table(table, format, output);

  if (!a.segments_path.empty()) {
    Table st;
    st.columns = {"label", "t_begin", "t_end"};
    for (const auto& seg : result.segments)
      st.add_row({seg.label, static_cast<std::int64_t>(seg.t_begin),
                  static_cast<std::int64_t>(seg.t_end)});
    emit_table(st, format, a.segments_path);
  }
}

void run_precision(const PrecisionArgs& a, const std::string& format,
                   const std::string& output) {
  std::uint64_t n_chars = a.n_chars;
  double sigma = a.sigma;
  if (!a.in.input_path.empty()) {
    const LoadedText t = load_text(a.in);
    sigma = lexstat::sigma_n(lexstat::count_frequencies(t.stream));
    if (n_chars == 0) n_chars = t.stream.size();
  } else if (!a.dist_path.empty()) {
    const auto profile = lexstat::load_profile(a.in.profile_path);
    const auto d = lexstat::read_distribution_csv(a.dist_path, profile);
    sigma = lexstat::sigma_n(d);
  }
  const auto report = lexstat::solve_epsilon(n_chars, sigma);
  Table table;
  table.columns = {"N", "sigma", "ratio", "epsilon"};
  table.add_row({static_cast<std::int64_t>(report.n_chars), report.sigma, report.ratio,
                 report.epsilon});
  emit_table(table, format, output);
}

void run_mix(const MixArgs& a, const std::string& output) {
  if (a.inputs.size() != 2)
    lexstat::fail(lexstat::ErrorCode::invalid_argument,
                  "mix interleaves exactly two inputs, got " + std::to_string(a.inputs.size()));
  const auto profile = lexstat::load_profile(a.profile_path);
  std::vector<lexstat::SymbolStream> streams;
  for (const auto& path : a.inputs) {
    const auto res = lexstat::normalize(lexstat::read_text_file(path), profile);
    if (res.discarded > 0)
      std::cerr << "warning: " << path << ": discarded " << res.discarded
                << " unmappable codepoint(s)\n";
    lexstat::SymbolStream s = res.stream;
    if (a.devocalize) s = lexstat::devocalize(s, profile);
    streams.push_back(std::move(s));
  }
  const auto [wa, wb] = parse_ratio(a.ratio);
  const auto mixed = lexstat::mix_streams(streams[0], streams[1], wa, wb, a.block_len);
  emit(lexstat::render(mixed, profile) + "\n", output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical text analysis over declared alphabets"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output = "-";
  int threads = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output, "output path ('-' = stdout)")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for grid evaluation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  FreqArgs freq;
  auto* cmd_freq = app.add_subcommand("freq", "letter frequency table of a text");
  add_text_options(cmd_freq, freq.in);
  cmd_freq->add_flag("--ordered", freq.ordered, "rank-sorted view");
  cmd_freq->add_flag("--bigrams", freq.bigrams, "emit adjacent-pair counts instead");

  FitArgs fit;
  auto* cmd_fit = app.add_subcommand("fit", "fit the logarithmic rank-frequency model");
  add_text_options(cmd_fit, fit.in, false);
  cmd_fit->add_option("--dist", fit.dist_path, "distribution table instead of raw text");
  auto* omin = cmd_fit->add_option("--o-min", fit.o_min, "lowest offset to try");
  auto* omax = cmd_fit->add_option("--o-max", fit.o_max, "highest offset to try");
  omin->needs(omax);
  omax->needs(omin);
  cmd_fit->add_flag("--renormalize", fit.renormalize,
                    "report how far the renormalized model drifts from the raw formula");
  cmd_fit->add_option("--drop-rarest", fit.drop_rarest,
                      "eliminate this many rarest ranks")
      ->check(CLI::NonNegativeNumber);
  cmd_fit->add_option("--drop-stage", fit.drop_stage,
                      "eliminate rarest ranks before or after fitting")
      ->check(CLI::IsMember({"before", "after"}));
  cmd_fit->add_option("--curve", fit.curve_path, "write rank,model_freq,actual_freq here");

  DistArgs dist;
  auto* cmd_dist = app.add_subcommand("dist", "L1 distance between two distributions");
  cmd_dist->add_option("--input", dist.inputs, "text file (repeatable)");
  cmd_dist->add_option("--dist", dist.dists, "distribution table (repeatable)");
  cmd_dist->add_option("--profile", dist.profile_path, "alphabet profile file")->required();
  cmd_dist->add_flag("--devocalize", dist.devocalize, "remove vowels from text inputs");
  cmd_dist->add_option("--view", dist.view, "compare alphabetical or ordered views")
      ->check(CLI::IsMember({"alphabetical", "ordered"}))
      ->capture_default_str();

  ClusterArgs cluster;
  auto* cmd_cluster = app.add_subcommand("cluster", "threshold clique clustering");
  cmd_cluster->add_option("--input", cluster.sources.inputs, "text file (repeatable)");
  cmd_cluster->add_option("--dist", cluster.sources.dists, "distribution table (repeatable)");
  cmd_cluster->add_option("--profile", cluster.sources.profile_path, "alphabet profile file")
      ->required();
  cmd_cluster->add_flag("--devocalize", cluster.sources.devocalize,
                        "remove vowels from text inputs");
  cmd_cluster->add_option("--threshold", cluster.threshold, "clique edge threshold")
      ->capture_default_str();
  cmd_cluster->add_option("--matrix-out", cluster.matrix_path,
                          "write the percent distance matrix here");

  RankshiftArgs rankshift;
  auto* cmd_rankshift =
      app.add_subcommand("rankshift", "per-symbol rank migration between two texts");
  cmd_rankshift->add_option("--input", rankshift.inputs, "text file (exactly two)")
      ->required()
      ->expected(2);
  cmd_rankshift->add_option("--profile", rankshift.profile_path, "alphabet profile file")
      ->required();
  cmd_rankshift->add_flag("--devocalize", rankshift.devocalize, "remove vowels");

  HurstArgs hurst;
  auto* cmd_hurst = app.add_subcommand("hurst", "Hurst exponents of same-letter gap series");
  add_text_options(cmd_hurst, hurst.in);
  cmd_hurst->add_option("--symbol", hurst.symbol, "letter whose gaps are analysed")
      ->required();
  cmd_hurst->add_option("--window", hurst.window, "gaps per sliding frame")
      ->capture_default_str();
  cmd_hurst->add_option("--step", hurst.step, "frame advance")->capture_default_str();
  cmd_hurst->add_flag("--whole", hurst.whole, "single estimate over the whole series");
  cmd_hurst->add_option("--frame-max", hurst.frame_max,
                        "largest sub-frame for --whole (clipped to the series)")
      ->capture_default_str();
  cmd_hurst->add_option("--histogram-out", hurst.histogram_path,
                        "write bin_low,bin_high,count here");

  SpectrumArgs spectrum;
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "resolvent-norm grid of the bigram transition matrix");
  add_text_options(cmd_spectrum, spectrum.in);
  cmd_spectrum->add_option("--re", spectrum.re_range, "real-axis range MIN:MAX")
      ->capture_default_str();
  cmd_spectrum->add_option("--im", spectrum.im_range, "imaginary-axis range MIN:MAX")
      ->capture_default_str();
  cmd_spectrum->add_option("--res", spectrum.resolution, "grid nodes per axis, N or NXxNY")
      ->capture_default_str();
  cmd_spectrum->add_option("--eps", spectrum.eps_levels,
                           "epsilon level(s) for membership masks")
      ->delimiter(',');
  cmd_spectrum->add_option("--mask-out", spectrum.mask_path,
                           "write re,im,eps,inside masks here");

  DichotomyArgs dichotomy;
  auto* cmd_dichotomy =
      app.add_subcommand("dichotomy", "circular dichotomy condition number K_r");
  add_text_options(cmd_dichotomy, dichotomy.in);
  cmd_dichotomy->add_option("--r", dichotomy.radii, "circle radius (repeatable)")
      ->required()
      ->delimiter(',');
  cmd_dichotomy->add_option("--nodes", dichotomy.nodes, "initial quadrature nodes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  IdentifyArgs identify;
  auto* cmd_identify = app.add_subcommand("identify", "nearest reference for a whole text");
  add_text_options(cmd_identify, identify.in);
  cmd_identify->add_option("--refs", identify.refs_dir, "directory of <label>.csv tables")
      ->required();
  cmd_identify->add_option("--blend", identify.blends,
                           "extra reference label=name:w,name:w (repeatable)");
  cmd_identify->add_option("--threshold", identify.threshold, "low-confidence distance")
      ->capture_default_str();

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "sliding-window identification along a text");
  add_text_options(cmd_scan, scan.id.in);
  cmd_scan->add_option("--refs", scan.id.refs_dir, "directory of <label>.csv tables")
      ->required();
  cmd_scan->add_option("--blend", scan.id.blends,
                       "extra reference label=name:w,name:w (repeatable)");
  cmd_scan->add_option("--threshold", scan.id.threshold, "low-confidence distance")
      ->capture_default_str();
  cmd_scan->add_option("--window", scan.window, "symbols per window")->capture_default_str();
  cmd_scan->add_option("--step", scan.step, "window advance")->capture_default_str();
  cmd_scan->add_option("--segments-out", scan.segments_path,
                       "write label,t_begin,t_end runs here");

  PrecisionArgs precision;
  auto* cmd_precision =
      app.add_subcommand("precision", "sampling precision of a frequency distribution");
  add_text_options(cmd_precision, precision.in, false);
  cmd_precision->add_option("--dist", precision.dist_path,
                            "distribution table instead of raw text");
  cmd_precision->add_option("--sigma", precision.sigma, "aggregated sampling scale");
  cmd_precision->add_option("--n-chars", precision.n_chars, "sample length N");

  MixArgs mix;
  auto* cmd_mix = app.add_subcommand("mix", "deterministic block interleave of two texts");
  cmd_mix->add_option("--input", mix.inputs, "text file (exactly two)")
      ->required()
      ->expected(2);
  cmd_mix->add_option("--profile", mix.profile_path, "alphabet profile file")->required();
  cmd_mix->add_flag("--devocalize", mix.devocalize, "remove vowels before mixing");
  cmd_mix->add_option("--ratio", mix.ratio, "block ratio WA:WB")->capture_default_str();
  cmd_mix->add_option("--block-len", mix.block_len, "symbols per block")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  cmd_fit->callback([&] {
    if (fit.in.input_path.empty() == fit.dist_path.empty())
      throw CLI::ValidationError("fit: exactly one of --input or --dist is required");
    if (fit.in.profile_path.empty())
      throw CLI::ValidationError("fit: --profile is required");
  });
  cmd_dist->callback([&] {
    if (dist.inputs.size() + dist.dists.size() != 2)
      throw CLI::ValidationError("dist: exactly two inputs are required");
  });
  cmd_cluster->callback([&] {
    if (cluster.sources.inputs.size() + cluster.sources.dists.size() < 2)
      throw CLI::ValidationError("cluster: at least two inputs are required");
  });
  cmd_precision->callback([&] {
    const bool from_text = !precision.in.input_path.empty();
    const bool from_table = !precision.dist_path.empty();
    if (from_text && from_table)
      throw CLI::ValidationError("precision: --input and --dist are mutually exclusive");
    if ((from_text || from_table) && precision.in.profile_path.empty())
      throw CLI::ValidationError("precision: --profile is required with --input/--dist");
    if (from_table && precision.n_chars == 0)
      throw CLI::ValidationError(
          "precision: --n-chars is required with --dist (tables carry no sample length)");
    if (!from_text && !from_table && (!(precision.sigma > 0.0) || precision.n_chars == 0))
      throw CLI::ValidationError(
          "precision: need --input, --dist, or both --sigma and --n-chars");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (cmd_freq->parsed()) run_freq(freq, format, output);
    if (cmd_fit->parsed()) {
      fit.have_range = omin->count() > 0;
      run_fit(fit, format, output);
    }
    if (cmd_dist->parsed()) run_dist(dist, format, output);
    if (cmd_cluster->parsed()) run_cluster(cluster, format, output);
    if (cmd_rankshift->parsed()) run_rankshift(rankshift, format, output);
    if (cmd_hurst->parsed()) run_hurst(hurst, format, output);
    if (cmd_spectrum->parsed()) run_spectrum(spectrum, threads, format, output);
    if (cmd_dichotomy->parsed()) run_dichotomy(dichotomy, format, output);
    if (cmd_identify->parsed()) run_identify(identify, format, output);
    if (cmd_scan->parsed()) run_scan(scan, format, output);
    if (cmd_precision->parsed()) run_precision(precision, format, output);
    if (cmd_mix->parsed()) run_mix(mix, output);
  } catch (const lexstat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
