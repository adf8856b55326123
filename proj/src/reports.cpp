#include "sparc/reports.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sparc {

using nlohmann::json;

namespace {

// --- shared helpers ----------------------------------------------------------

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json header_json(const ReportHeader& h) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"kind", h.kind},
              {"config_hash", h.config_hash}, {"seed", h.seed}};
}

void write_tsv_header(const ReportHeader& h, const json& summary, std::ostream& out) {
  out << "# tool: " << kToolName << ' ' << kToolVersion << '\n'
      << "# kind: " << h.kind << '\n'
      << "# config_hash: " << h.config_hash << '\n'
      << "# seed: " << h.seed << '\n'
      << "# summary: " << summary.dump() << '\n';
}

struct Row {
  std::size_t offset;
  std::vector<std::string> fields;
};

struct TsvDocument {
  std::map<std::string, std::string, std::less<>> meta;
  json summary;
  std::vector<std::string> columns;
  std::size_t columns_offset = 0;
  std::vector<Row> rows;
};

std::string at_byte(std::size_t offset) { return " (byte offset " + std::to_string(offset) + ")"; }

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

TsvDocument parse_tsv(std::string_view content, std::string_view expected_kind) {
  if (!content.empty() && content.back() != '\n') {
    throw ParseError("truncated report: last line is incomplete" + at_byte(content.size()));
  }
  TsvDocument doc;
  bool have_columns = false;
  std::size_t pos = 0;
  while (pos < content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view line = content.substr(pos, nl - pos);
    const std::size_t offset = pos;
    pos = nl + 1;
    if (line.starts_with("# ")) {
      const auto colon = line.find(": ");
      if (colon == std::string_view::npos) throw ParseError("malformed header line" + at_byte(offset));
      doc.meta.emplace(std::string(line.substr(2, colon - 2)), std::string(line.substr(colon + 2)));
      continue;
    }
    if (line.empty()) continue;
    if (!have_columns) {
      doc.columns = split_tabs(line);
      doc.columns_offset = offset;
      have_columns = true;
      continue;
    }
    auto fields = split_tabs(line);
    if (fields.size() != doc.columns.size()) {
      throw ParseError("expected " + std::to_string(doc.columns.size()) + " columns, found " +
                       std::to_string(fields.size()) + at_byte(offset));
    }
    doc.rows.push_back({offset, std::move(fields)});
  }
  auto kind = doc.meta.find("kind");
  if (kind == doc.meta.end()) throw ParseError("not a report: missing '# kind:' header" + at_byte(0));
  if (!expected_kind.empty() && kind->second != expected_kind) {
    throw ParseError("expected a '" + std::string(expected_kind) + "' report, found '" + kind->second + "'");
  }
  auto summary = doc.meta.find("summary");
  if (summary == doc.meta.end()) throw ParseError("missing '# summary:' header" + at_byte(0));
  try {
    doc.summary = json::parse(summary->second);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed summary: ") + e.what());
  }
  if (!have_columns) throw ParseError("truncated report: no column header" + at_byte(content.size()));
  const auto expected = doc.summary.value("records", std::size_t{0});
  if (doc.rows.size() != expected) {
    throw ParseError("truncated report: expected " + std::to_string(expected) + " rows, found " +
                     std::to_string(doc.rows.size()) + at_byte(content.size()));
  }
  return doc;
}

ReportHeader header_from(const TsvDocument& doc) {
  ReportHeader h;
  h.kind = doc.meta.at("kind");
  if (auto it = doc.meta.find("config_hash"); it != doc.meta.end()) h.config_hash = it->second;
  if (auto it = doc.meta.find("seed"); it != doc.meta.end()) h.seed = std::stoull(it->second);
  return h;
}

double field_real(const Row& row, std::size_t i) {
  try {
    return parse_real(row.fields[i]);
  } catch (const ParseError&) {
    throw ParseError("bad number '" + row.fields[i] + "'" + at_byte(row.offset));
  }
}

std::size_t field_count(const Row& row, std::size_t i) {
  const double v = field_real(row, i);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw ParseError("bad count '" + row.fields[i] + "'" + at_byte(row.offset));
  }
  return static_cast<std::size_t>(v);
}

bool field_bool(const Row& row, std::size_t i) {
  if (row.fields[i] == "1") return true;
  if (row.fields[i] == "0") return false;
  throw ParseError("bad flag '" + row.fields[i] + "'" + at_byte(row.offset));
}

ProteinSet split_members(std::string_view text) {
  ProteinSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto sp = text.find(' ', start);
    const auto piece = text.substr(start, sp == std::string_view::npos ? std::string_view::npos : sp - start);
    if (!piece.empty()) out.emplace(piece);
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

json parse_json_report(std::string_view content, std::string_view expected_kind) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON report") + at_byte(e.byte));
  }
  if (!doc.is_object() || !doc.contains("header")) throw ParseError("not a report: missing header object");
  const auto kind = doc["header"].value("kind", std::string{});
  if (!expected_kind.empty() && kind != expected_kind) {
    throw ParseError("expected a '" + std::string(expected_kind) + "' report, found '" + kind + "'");
  }
  return doc;
}

ReportHeader header_from(const json& doc) {
  const auto& h = doc.at("header");
  return {h.at("kind").get<std::string>(), h.at("config_hash").get<std::string>(), h.at("seed").get<std::uint64_t>()};
}

// --- per-kind parsers working on in-memory content --------------------------

constexpr std::array kDerivabilityColumns{"complex_id", "present_count", "nonisolated_count", "component_sizes",
                                          "cs", "es", "ce", "density", "k_protein", "k_network"};

DerivabilityReport parse_derivability(std::string_view content, ReportHeader* header) {
  const auto doc = parse_tsv(content, "derivability");
  if (doc.columns.size() != kDerivabilityColumns.size()) {
    throw ParseError("unexpected derivability columns" + at_byte(doc.columns_offset));
  }
  DerivabilityReport report;
  try {
    report.network_label = doc.summary.at("network").get<std::string>();
    report.k = doc.summary.at("k").get<std::size_t>();
    report.t_ce = doc.summary.at("t_ce").get<double>();
    report.index_counts = {doc.summary.at("D_P").get<std::size_t>(), doc.summary.at("D_N").get<std::size_t>(),
                           doc.summary.at("D_CE").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed derivability summary: ") + e.what());
  }
  for (const auto& row : doc.rows) {
    DerivabilityRecord r;
    r.complex_id = row.fields[0];
    r.present_count = field_count(row, 1);
    r.nonisolated_count = field_count(row, 2);
    if (row.fields[3] != "-") {
      std::stringstream ss(row.fields[3]);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        try {
          r.component_sizes.push_back(std::stoull(piece));
        } catch (const std::exception&) {
          throw ParseError("bad component size list" + at_byte(row.offset));
        }
      }
    }
    r.cs = field_real(row, 4);
    r.es = field_real(row, 5);
    r.ce = field_real(row, 6);
    if (row.fields[7] != "NA") r.density = field_real(row, 7);
    r.k_protein = field_bool(row, 8);
    r.k_network = field_bool(row, 9);
    report.records.push_back(std::move(r));
  }
  if (header) *header = header_from(doc);
  return report;
}

SparcResult parse_sparc(std::string_view content, ReportHeader* header) {
  const auto doc = parse_tsv(content, "sparc");
  if (doc.columns.size() != 6) throw ParseError("unexpected sparc columns" + at_byte(doc.columns_offset));
  SparcResult result;
  for (const auto& row : doc.rows) {
    const auto& status = row.fields[1];
    if (status == "accepted") {
      result.accepted.add({row.fields[0], split_members(row.fields[5])});
      result.accepted_ce.push_back(field_real(row, 2));
      continue;
    }
    RefinedCluster r;
    r.cluster_id = row.fields[0];
    r.ce_before = field_real(row, 2);
    r.ce_after = field_real(row, 3);
    if (row.fields[4] != "-") {
      std::stringstream ss(row.fields[4]);
      std::string piece;
      while (std::getline(ss, piece, ',')) {
        const bool functional_only = !piece.empty() && piece.back() == '*';
        if (functional_only) piece.pop_back();
        r.added.push_back({piece, !functional_only});
      }
    }
    r.members = split_members(row.fields[5]);
    if (status == "rescued") {
      result.rescued.push_back(std::move(r));
    } else if (status == "rejected") {
      result.rejected.push_back(std::move(r));
    } else {
      throw ParseError("unknown SPARC status '" + status + "'" + at_byte(row.offset));
    }
  }
  if (header) *header = header_from(doc);
  return result;
}

EvalReport parse_eval(std::string_view content, ReportHeader* header) {
  const auto doc = parse_json_report(content, "eval");
  EvalReport r;
  try {
    r.j_min = doc.at("j_min").get<double>();
    r.k = doc.at("k").get<std::size_t>();
    r.benchmark_count = doc.at("benchmark_count").get<std::size_t>();
    r.predicted_count = doc.at("predicted_count").get<std::size_t>();
    r.matched_count = doc.at("matched_count").get<std::size_t>();
    r.derivable_count = doc.at("derivable_count").get<std::size_t>();
    r.derived_count = doc.at("derived_count").get<std::size_t>();
    r.precision = doc.at("precision").get<double>();
    r.recall = doc.at("recall").get<double>();
    for (const auto& p : doc.at("pair_matches")) {
      r.pair_matches.push_back({p.at("benchmark").get<std::string>(), p.at("prediction").get<std::string>(),
                                p.at("jaccard").get<double>()});
    }
    for (const auto& a : doc.at("accuracies")) {
      r.accuracies.push_back({a.at("benchmark").get<std::string>(), a.at("best_jaccard").get<double>()});
    }
    if (header) *header = header_from(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed eval report: ") + e.what());
  }
  return r;
}

std::string fmt_fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

}  // namespace

// --- writers / readers -------------------------------------------------------

void write_derivability(const DerivabilityReport& report, const ReportHeader& header, std::ostream& out) {
  const json summary{{"network", report.network_label}, {"k", report.k},
                     {"t_ce", report.t_ce},             {"records", report.records.size()},
                     {"D_P", report.index_counts.protein}, {"D_N", report.index_counts.network},
                     {"D_CE", report.index_counts.ce}};
  write_tsv_header(header, summary, out);
  for (std::size_t i = 0; i < kDerivabilityColumns.size(); ++i) {
    out << (i ? "\t" : "") << kDerivabilityColumns[i];
  }
  out << '\n';
  for (const auto& r : report.records) {
    std::string sizes;
    for (auto s : r.component_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    out << r.complex_id << '\t' << r.present_count << '\t' << r.nonisolated_count << '\t'
        << (sizes.empty() ? "-" : sizes) << '\t' << format_real(r.cs) << '\t' << format_real(r.es) << '\t'
        << format_real(r.ce) << '\t' << (r.density ? format_real(*r.density) : "NA") << '\t'
        << (r.k_protein ? 1 : 0) << '\t' << (r.k_network ? 1 : 0) << '\n';
  }
}

DerivabilityReport read_derivability(std::istream& in, ReportHeader* header) {
  return parse_derivability(read_all(in), header);
}

void write_ce_profile(const std::vector<std::pair<std::string, CeProfile>>& columns, const ReportHeader& header,
                      std::ostream& out) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().second.size();
  json labels = json::array();
  for (const auto& [label, profile] : columns) {
    if (profile.size() != rows) throw ArgumentError("CE profile columns differ in length");
    labels.push_back(label);
  }
  write_tsv_header(header, json{{"records", rows}, {"columns", labels}}, out);
  out << "t_ce";
  for (const auto& [label, _] : columns) out << '\t' << label;
  out << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    out << format_real(columns.front().second[i].first);
    for (const auto& [_, profile] : columns) out << '\t' << profile[i].second;
    out << '\n';
  }
}

void write_sparc(const SparcResult& result, const SparcConfig& config, const ReportHeader& header,
                 std::ostream& out) {
  const json summary{{"delta", config.delta},
                     {"max_growth", config.max_growth},
                     {"min_output_size", config.min_output_size},
                     {"accepted", result.accepted.size()},
                     {"rescued", result.rescued.size()},
                     {"rejected", result.rejected.size()},
                     {"records", result.accepted.size() + result.rescued.size() + result.rejected.size()}};
  write_tsv_header(header, summary, out);
  out << "cluster_id\tstatus\tce_before\tce_after\tadded\tmembers\n";
  for (std::size_t i = 0; i < result.accepted.size(); ++i) {
    const auto& c = result.accepted[i];
    out << c.id << "\taccepted\t" << format_real(result.accepted_ce.at(i)) << "\tNA\t-\t" << join(c.members)
        << '\n';
  }
  auto emit = [&out](const RefinedCluster& r, std::string_view status) {
    std::string added;
    for (const auto& a : r.added) {
      if (!added.empty()) added += ',';
      added += a.protein;
      if (!a.in_physical) added += '*';
    }
    out << r.cluster_id << '\t' << status << '\t' << format_real(r.ce_before) << '\t' << format_real(r.ce_after)
        << '\t' << (added.empty() ? "-" : added) << '\t' << join(r.members) << '\n';
  };
  for (const auto& r : result.rescued) emit(r, "rescued");
  for (const auto& r : result.rejected) emit(r, "rejected");
}

SparcResult read_sparc(std::istream& in, ReportHeader* header) { return parse_sparc(read_all(in), header); }

void write_eval(const EvalReport& report, const ReportHeader& header, std::ostream& out) {
  json pairs = json::array();
  for (const auto& p : report.pair_matches) {
    pairs.push_back({{"benchmark", p.benchmark_id}, {"prediction", p.prediction_id}, {"jaccard", p.jaccard}});
  }
  json accuracies = json::array();
  for (const auto& a : report.accuracies) {
    accuracies.push_back({{"benchmark", a.benchmark_id}, {"best_jaccard", a.best_jaccard}});
  }
  json doc{{"header", header_json(header)},
           {"j_min", report.j_min},
           {"k", report.k},
           {"benchmark_count", report.benchmark_count},
           {"predicted_count", report.predicted_count},
           {"matched_count", report.matched_count},
           {"derivable_count", report.derivable_count},
           {"derived_count", report.derived_count},
           {"precision", report.precision},
           {"recall", report.recall},
           {"pair_matches", pairs},
           {"accuracies", accuracies}};
  out << doc.dump(2) << '\n';
}

EvalReport read_eval(std::istream& in, ReportHeader* header) { return parse_eval(read_all(in), header); }

void write_pair_matches(const EvalReport& report, std::ostream& out) {
  out << "benchmark_id\tprediction_id\tjaccard\n";
  for (const auto& p : report.pair_matches) {
    out << p.benchmark_id << '\t' << p.prediction_id << '\t' << format_real(p.jaccard) << '\n';
  }
}

void write_stats(const std::vector<std::pair<std::string, NetworkStats>>& networks, const ReportHeader& header,
                 std::ostream& out) {
  json list = json::array();
  for (const auto& [label, st] : networks) {
    list.push_back({{"label", label},
                    {"proteins", st.protein_count},
                    {"interactions", st.interaction_count},
                    {"avg_node_degree", st.avg_node_degree}});
  }
  out << json{{"header", header_json(header)}, {"networks", list}}.dump(2) << '\n';
}

// --- inspect -----------------------------------------------------------------

void inspect(std::istream& in, std::ostream& out) {
  const std::string content = read_all(in);
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty report" + at_byte(0));

  if (content[first] == '{') {
    const auto doc = parse_json_report(content, "");
    const auto kind = doc["header"].value("kind", std::string{});
    if (kind == "eval") {
      const auto r = parse_eval(content, nullptr);
      out << "evaluation (J_min " << format_real(r.j_min) << ", k " << r.k << ")\n"
          << "  predictions " << r.predicted_count << ", matched " << r.matched_count << '\n'
          << "  derivable benchmarks " << r.derivable_count << ", derived " << r.derived_count << '\n'
          << "  Pr " << fmt_fixed(r.precision, 3) << "  Rc " << fmt_fixed(r.recall, 3) << '\n';
      return;
    }
    if (kind == "stats") {
      for (const auto& n : doc.at("networks")) {
        out << n.at("label").get<std::string>() << ": " << n.at("proteins").get<std::size_t>() << " proteins, "
            << n.at("interactions").get<std::size_t>() << " interactions, avg degree "
            << fmt_fixed(n.at("avg_node_degree").get<double>(), 2) << '\n';
      }
      return;
    }
    if (kind == "correlation") {
      out << doc.dump(2) << '\n';
      return;
    }
    throw ParseError("unrecognised JSON report kind '" + kind + "'");
  }

  const auto doc = parse_tsv(content, "");
  const auto& kind = doc.meta.at("kind");
  if (kind == "derivability") {
    const auto r = parse_derivability(content, nullptr);
    out << "derivability of " << r.records.size() << " complexes on '" << r.network_label << "' (k " << r.k
        << ", t_ce " << format_real(r.t_ce) << ")\n"
        << "  |D_P| " << r.index_counts.protein << "  |D_N| " << r.index_counts.network << "  |D_CE| "
        << r.index_counts.ce << '\n'
        << "  CE histogram over k-protein-derivable complexes:\n";
    std::array<std::size_t, 10> bins{};
    for (const auto& rec : r.records) {
      if (rec.k_protein) ++bins[std::min<std::size_t>(9, static_cast<std::size_t>(rec.ce * 10.0))];
    }
    for (std::size_t b = 0; b < bins.size(); ++b) {
      out << "    [" << fmt_fixed(b / 10.0, 1) << (b == 9 ? ", 1.0]" : ", " + fmt_fixed((b + 1) / 10.0, 1) + ")")
          << ' ' << bins[b] << '\n';
    }
    return;
  }
  if (kind == "sparc") {
    const auto r = parse_sparc(content, nullptr);
    std::size_t added = 0;
    for (const auto& c : r.rescued) added += c.added.size();
    out << "SPARC (delta " << format_real(doc.summary.value("delta", 0.0)) << ")\n"
        << "  accepted " << r.accepted.size() << ", rescued " << r.rescued.size() << " (" << added
        << " proteins added), rejected " << r.rejected.size() << '\n';
    return;
  }
  if (kind == "ce-profile") {
    out << "CE profile\n";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "\t" : "  ") << doc.columns[i];
    out << '\n';
    for (const auto& row : doc.rows) {
      for (std::size_t i = 0; i < row.fields.size(); ++i) out << (i ? "\t" : "  ") << row.fields[i];
      out << '\n';
    }
    return;
  }
  throw ParseError("unrecognised report kind '" + kind + "'");
}

void inspect(const std::filesystem::path& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  inspect(in, out);
}

}  // namespace sparc
