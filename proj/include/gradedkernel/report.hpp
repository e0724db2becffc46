#pragma once

// Machine-readable run reports. One JSON document per run; every table is
// an array of {i, j, dim} records.

#include "gradedkernel/verifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gk {

inline constexpr int kSchemaVersion = 1;

struct ReportMetadata {
  std::string tool = "gradedkernel";
  std::string version;
  std::string field;
  std::uint64_t seed = 0;
  int tmax = 6;
  std::optional<std::pair<int, int>> window;
  std::optional<int> max_steps;
  std::optional<double> timeout;
  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct CommandResult {
  int line = 0;
  int column = 0;
  std::string statement;  // normalized source text
  std::string kind;       // ring, ideal, module, betti, ...
  std::string status = "ok";
  std::string text;       // the rendered text output
  json data;              // numeric content, same as the text
  std::optional<VerifyResult> verify;
  std::string error;
  friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

struct ReportDocument {
  int schema_version = kSchemaVersion;
  ReportMetadata metadata;
  std::vector<CommandResult> results;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// ------------------------------------------------------------ tables

inline json table_entries(const std::map<std::pair<int, int>, long long>& m) {
  json a = json::array();
  for (const auto& [key, v] : m)
    if (v) a.push_back({{"i", key.first}, {"j", key.second}, {"dim", v}});
  return a;
}

inline json betti_json(const BettiTable& t) {
  return {{"entries", table_entries(t.entries)}, {"totals", t.totals()}, {"truncated", t.truncated}};
}

inline json cohomology_json(const CohomologyTable& t) {
  std::map<std::pair<int, int>, long long> m;
  for (int i = 0; i <= t.nvars; ++i)
    for (int j = t.lo; j <= t.hi; ++j)
      if (auto v = t.at(i, j)) m[{i, j}] = v;
  json top = json::array(), total = json::array();
  for (int i = 0; i <= t.nvars; ++i) {
    const auto& td = t.top_degree[static_cast<std::size_t>(i)];
    const auto& tt = t.total[static_cast<std::size_t>(i)];
    top.push_back(td ? json(*td) : json(nullptr));
    total.push_back(tt ? json(*tt) : json(nullptr));
  }
  return {{"window", {t.lo, t.hi}}, {"entries", table_entries(m)}, {"top_degree", top}, {"total", total}};
}

inline json lyubeznik_json(const LyubeznikTable& t) {
  return {{"dim", t.dim}, {"ibound", t.ibound}, {"entries", table_entries(t.values)}, {"truncated", t.truncated}};
}

// ------------------------------------------------------------ encoding

inline json encode(const ClaimReport& r) {
  return {{"claim", r.claim},     {"example", r.example}, {"reading", r.reading}, {"verdict", verdict_name(r.verdict)},
          {"witness", r.witness}, {"notes", r.notes},     {"crashed", r.crashed}};
}

inline json encode(const VerifyResult& v) {
  json reports = json::array();
  for (const auto& r : v.reports) reports.push_back(encode(r));
  json disc = json::array();
  for (const auto& d : v.discrepancies)
    disc.push_back({{"example", d.example}, {"kind", d.kind}, {"printed", d.printed}, {"computed", d.computed},
                    {"note", d.note}});
  json golden = json::array();
  for (const auto& g : v.golden) golden.push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
  return {{"summary",
           {{"PASS", v.summary.pass},
            {"FAIL", v.summary.fail},
            {"INCONCLUSIVE", v.summary.inconclusive},
            {"crashes", v.summary.crashes}}},
          {"reports", reports},
          {"discrepancies", disc},
          {"golden", golden},
          {"notes", v.notes}};
}

inline json encode(const ReportDocument& doc) {
  const auto& m = doc.metadata;
  json meta = {{"tool", m.tool}, {"version", m.version}, {"field", m.field}, {"seed", m.seed}, {"tmax", m.tmax}};
  meta["window"] = m.window ? json{m.window->first, m.window->second} : json(nullptr);
  meta["max_steps"] = m.max_steps ? json(*m.max_steps) : json(nullptr);
  meta["timeout"] = m.timeout ? json(*m.timeout) : json(nullptr);
  json results = json::array();
  for (const auto& r : doc.results) {
    json e = {{"line", r.line},   {"column", r.column}, {"statement", r.statement}, {"kind", r.kind},
              {"status", r.status}, {"text", r.text},   {"data", r.data}};
    if (r.verify) e["verify"] = encode(*r.verify);
    if (!r.error.empty()) e["error"] = r.error;
    results.push_back(e);
  }
  return {{"schema_version", doc.schema_version}, {"metadata", meta}, {"results", results}};
}

// ------------------------------------------------------------ decoding

inline ClaimReport decode_claim_report(const json& j) {
  ClaimReport r;
  r.claim = j.at("claim").get<std::string>();
  r.example = j.at("example").get<std::string>();
  r.reading = j.at("reading").get<std::string>();
  auto v = parse_verdict(j.at("verdict").get<std::string>());
  if (!v) throw std::invalid_argument("unknown verdict " + j.at("verdict").dump());
  r.verdict = *v;
  r.witness = j.at("witness");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.crashed = j.at("crashed").get<bool>();
  return r;
}

inline VerifyResult decode_verify(const json& j) {
  VerifyResult v;
  const auto& s = j.at("summary");
  v.summary = {s.at("PASS").get<int>(), s.at("FAIL").get<int>(), s.at("INCONCLUSIVE").get<int>(),
               s.at("crashes").get<int>()};
  for (const auto& r : j.at("reports")) v.reports.push_back(decode_claim_report(r));
  for (const auto& d : j.at("discrepancies"))
    v.discrepancies.push_back({d.at("example").get<std::string>(), d.at("kind").get<std::string>(),
                               d.at("printed").get<std::string>(), d.at("computed").get<std::string>(),
                               d.at("note").get<std::string>()});
  for (const auto& g : j.at("golden"))
    v.golden.push_back({g.at("name").get<std::string>(), g.at("passed").get<bool>(), g.at("detail").get<std::string>()});
  v.notes = j.at("notes").get<std::vector<std::string>>();
  return v;
}

inline ReportDocument decode_report(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version " + std::to_string(doc.schema_version));
  const auto& m = j.at("metadata");
  doc.metadata.tool = m.at("tool").get<std::string>();
  doc.metadata.version = m.at("version").get<std::string>();
  doc.metadata.field = m.at("field").get<std::string>();
  doc.metadata.seed = m.at("seed").get<std::uint64_t>();
  doc.metadata.tmax = m.at("tmax").get<int>();
  if (!m.at("window").is_null()) doc.metadata.window = {m.at("window").at(0).get<int>(), m.at("window").at(1).get<int>()};
  if (!m.at("max_steps").is_null()) doc.metadata.max_steps = m.at("max_steps").get<int>();
  if (!m.at("timeout").is_null()) doc.metadata.timeout = m.at("timeout").get<double>();
  for (const auto& e : j.at("results")) {
    CommandResult r;
    r.line = e.at("line").get<int>();
    r.column = e.at("column").get<int>();
    r.statement = e.at("statement").get<std::string>();
    r.kind = e.at("kind").get<std::string>();
    r.status = e.at("status").get<std::string>();
    r.text = e.at("text").get<std::string>();
    r.data = e.at("data");
    if (e.contains("verify")) r.verify = decode_verify(e.at("verify"));
    if (e.contains("error")) r.error = e.at("error").get<std::string>();
    doc.results.push_back(std::move(r));
  }
  return doc;
}

inline std::string report_to_string(const ReportDocument& doc) { return encode(doc).dump(2) + "\n"; }

inline ReportDocument report_from_string(const std::string& s) { return decode_report(json::parse(s)); }

}  // namespace gk
