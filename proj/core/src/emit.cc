// Copyright 2026 The k3inst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "k3inst/emit.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace k3inst {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kDash = "—";
constexpr std::string_view kCsvHeader =
    "label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim";

void require_candidate(const SurfaceRecord& r) {
  if (!r.is_candidate()) {
    throw std::invalid_argument(r.weights.to_string() + " is not a K3 candidate: " +
                                r.admissibility.reason());
  }
}

std::string label_text(const SurfaceRecord& r) {
  return r.label ? std::to_string(*r.label) : std::string();
}

Json label_json(const SurfaceRecord& r) {
  return r.label ? Json(*r.label) : Json(nullptr);
}

std::string markdown_sing(const SingularityData& d) {
  return d.empty() ? std::string(kDash) : d.canonical();
}

Json record_json(const SurfaceRecord& r) {
  const auto& inv = *r.invariants;
  Json j;
  j["label"] = label_json(r);
  for (int i = 0; i < kNumVariables; ++i) j["w" + std::to_string(i)] = r.weights[i];
  j["d"] = r.weights.degree();
  j["singularities"] = r.data->canonical();
  j["deg_num"] = inv.degree.numerator();
  j["deg_den"] = inv.degree.denominator();
  j["irreducibility"] = inv.certificate.label();
  j["dim"] = inv.dim.value;
  return j;
}

void csv_row(std::ostream& os, const SurfaceRecord& r) {
  const auto& inv = *r.invariants;
  os << label_text(r);
  for (int i = 0; i < kNumVariables; ++i) os << ',' << r.weights[i];
  os << ',' << r.weights.degree() << ',' << r.data->canonical() << ','
     << inv.degree.numerator() << ',' << inv.degree.denominator() << ','
     << inv.certificate.label() << ',' << inv.dim.value << '\n';
}

std::string surface_name(const WeightVector& w) {
  return "X_" + std::to_string(w.degree()) + " ⊂ P" + w.to_string();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected csv, markdown or json)");
}

TableSelection parse_table_selection(std::string_view name) {
  if (name == "1") return TableSelection::kTable1;
  if (name == "2") return TableSelection::kTable2;
  if (name == "both") return TableSelection::kBoth;
  throw std::invalid_argument("unknown table '" + std::string(name) +
                              "' (expected 1, 2 or both)");
}

std::string printed_style(const SingularityData& data) {
  if (data.empty()) return "no singularities";
  std::string s;
  for (const auto& e : data.entries()) {
    if (!s.empty()) s += ", ";
    if (e.count != 1) s += std::to_string(e.count) + "x";
    s += "A_" + std::to_string(e.order - 1);
  }
  return s;
}

std::string emit(std::span<const SurfaceRecord> records, Format format) {
  for (const auto& r : records) require_candidate(r);
  std::ostringstream os;
  switch (format) {
    case Format::kCsv:
      os << kCsvHeader << '\n';
      for (const auto& r : records) csv_row(os, r);
      break;
    case Format::kMarkdown:
      os << "| Label | Weights | d | Singularities | deg | Irreducibility | dim |\n"
         << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : records) {
        const auto& inv = *r.invariants;
        os << "| " << (r.label ? std::to_string(*r.label) : std::string(kDash)) << " | "
           << r.weights.to_string() << " | " << r.weights.degree() << " | "
           << markdown_sing(*r.data) << " | " << inv.degree.to_string() << " | "
           << inv.certificate.label() << " | " << inv.dim.value << " |\n";
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : records) arr.push_back(record_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string emit_tables(std::span<const SurfaceRecord> records, TableSelection table,
                        Format format) {
  for (const auto& r : records) require_candidate(r);
  if (table == TableSelection::kBoth && format != Format::kMarkdown) {
    return emit(records, format);
  }
  const bool t1 = table != TableSelection::kTable2;
  const bool t2 = table != TableSelection::kTable1;
  std::ostringstream os;
  switch (format) {
    case Format::kMarkdown: {
      if (t1) {
        os << "Table 1: orbifold K3 hypersurfaces and dim_C M*\n\n"
           << "| Label | X_d ⊂ P(w) | dim_C M* |\n|---|---|---|\n";
        for (const auto& r : records) {
          os << "| " << (r.label ? std::to_string(*r.label) : std::string(kDash)) << " | "
             << surface_name(r.weights) << " | " << r.invariants->dim.value << " |\n";
        }
      }
      if (t1 && t2) os << '\n';
      if (t2) {
        os << "Table 2: singularity data and deg\n\n"
           << "| Label | Singularities of X_d | deg |\n|---|---|---|\n";
        for (const auto& r : records) {
          os << "| " << (r.label ? std::to_string(*r.label) : std::string(kDash)) << " | "
             << printed_style(*r.data) << " | " << r.invariants->degree.to_string()
             << " |\n";
        }
      }
      break;
    }
    case Format::kCsv:
      os << (t1 ? "label,w0,w1,w2,w3,d,dim" : "label,singularities,deg_num,deg_den") << '\n';
      for (const auto& r : records) {
        os << label_text(r);
        if (t1) {
          for (int i = 0; i < kNumVariables; ++i) os << ',' << r.weights[i];
          os << ',' << r.weights.degree() << ',' << r.invariants->dim.value;
        } else {
          os << ',' << r.data->canonical() << ',' << r.invariants->degree.numerator()
             << ',' << r.invariants->degree.denominator();
        }
        os << '\n';
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : records) {
        const Json full = record_json(r);
        Json j;
        j["label"] = full["label"];
        if (t1) {
          for (const char* k : {"w0", "w1", "w2", "w3", "d", "dim"}) j[k] = full[k];
        } else {
          for (const char* k : {"singularities", "deg_num", "deg_den"}) j[k] = full[k];
        }
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> findings(const LabelDiff& ld) {
  std::vector<std::string> out;
  if (ld.table_dim_inconsistent) {
    out.push_back("printed dim disagrees with formula on printed singularities (" +
                  std::to_string(ld.dim_from_table_singularities) + ")");
  }
  if (ld.table_degree_inconsistent) {
    out.push_back("printed degree disagrees with formula on printed singularities (" +
                  ld.degree_from_table_singularities.to_string() + ")");
  }
  if (ld.table_rank_bound_violated) {
    out.push_back("printed singularities exceed rank bound (sum(m-1) = " +
                  std::to_string(ld.table_exceptional_rank) + " > 19)");
  }
  if (ld.oracle_disagrees_with_table) {
    out.push_back("finite-field oracle finds " +
                  (ld.oracle_data.empty() ? std::string("none") : ld.oracle_data.canonical()));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

std::vector<std::string> differences(const LabelDiff& ld) {
  std::vector<std::string> out;
  for (const auto& m : ld.mismatches) {
    out.push_back(field_name(m.field) + " computed " + m.computed + " vs table " + m.table);
  }
  return out;
}

}  // namespace

std::string render_diff(const DiffReport& report, Format format) {
  const auto& s = report.summary;
  std::ostringstream os;
  switch (format) {
    case Format::kMarkdown: {
      os << "Diff against the published tables: " << s.matches << " of " << s.labels
         << " labels match; " << s.mismatches << " mismatch (singularities "
         << s.singularity_mismatches << ", degree " << s.degree_mismatches << ", dim "
         << s.dimension_mismatches << ").\n"
         << "Findings on printed data: dim inconsistent " << s.table_dim_inconsistencies
         << ", degree inconsistent " << s.table_degree_inconsistencies
         << ", rank bound violated " << s.rank_bound_violations
         << ", oracle disagreement " << s.oracle_disagreements
         << "; unflagged mismatches " << s.unflagged_mismatches << ".\n\n"
         << "| Label | Weights | Status | Differences | Findings |\n"
         << "|---|---|---|---|---|\n";
      for (const auto& ld : report.rows) {
        const auto diffs = differences(ld);
        const auto finds = findings(ld);
        os << "| " << ld.label << " | " << ld.weights.to_string() << " | "
           << (ld.match() ? "match" : "mismatch") << " | "
           << (diffs.empty() ? std::string(kDash) : join(diffs, "; ")) << " | "
           << (finds.empty() ? std::string(kDash) : join(finds, "; ")) << " |\n";
      }
      break;
    }
    case Format::kCsv:
      os << "label,w0,w1,w2,w3,status,differences,findings\n";
      for (const auto& ld : report.rows) {
        os << ld.label;
        for (int i = 0; i < kNumVariables; ++i) os << ',' << ld.weights[i];
        os << ',' << (ld.match() ? "match" : "mismatch") << ','
           << join(differences(ld), "; ") << ',' << join(findings(ld), "; ") << '\n';
      }
      break;
    case Format::kJson: {
      Json j;
      j["summary"] = {{"labels", s.labels},
                      {"matches", s.matches},
                      {"mismatches", s.mismatches},
                      {"singularity_mismatches", s.singularity_mismatches},
                      {"degree_mismatches", s.degree_mismatches},
                      {"dimension_mismatches", s.dimension_mismatches},
                      {"table_dim_inconsistencies", s.table_dim_inconsistencies},
                      {"table_degree_inconsistencies", s.table_degree_inconsistencies},
                      {"rank_bound_violations", s.rank_bound_violations},
                      {"oracle_disagreements", s.oracle_disagreements},
                      {"unflagged_mismatches", s.unflagged_mismatches}};
      Json rows = Json::array();
      for (const auto& ld : report.rows) {
        Json r;
        r["label"] = ld.label;
        r["weights"] = ld.weights.weights();
        r["status"] = ld.match() ? "match" : "mismatch";
        Json mism = Json::array();
        for (const auto& m : ld.mismatches) {
          mism.push_back({{"field", field_name(m.field)},
                          {"computed", m.computed},
                          {"table", m.table}});
        }
        r["mismatches"] = std::move(mism);
        r["findings"] = {
            {"table_dim_inconsistent", ld.table_dim_inconsistent},
            {"dim_from_table_singularities", ld.dim_from_table_singularities},
            {"table_degree_inconsistent", ld.table_degree_inconsistent},
            {"degree_from_table_singularities",
             ld.degree_from_table_singularities.to_string()},
            {"table_rank_bound_violated", ld.table_rank_bound_violated},
            {"table_exceptional_rank", ld.table_exceptional_rank},
            {"oracle_disagrees_with_table", ld.oracle_disagrees_with_table},
            {"oracle_singularities", ld.oracle_data.canonical()}};
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_analysis(const SurfaceRecord& record, Format format) {
  if (!record.is_candidate()) {
    const std::string reason = record.admissibility.reason();
    if (format == Format::kJson) {
      Json j;
      j["weights"] = record.weights.weights();
      j["d"] = record.weights.degree();
      j["k3_candidate"] = false;
      j["reason"] = reason;
      return j.dump(2) + "\n";
    }
    return "not a K3 candidate: " + reason + "\n";
  }
  if (format != Format::kMarkdown) {
    return emit(std::span<const SurfaceRecord>(&record, 1), format);
  }

  const auto& inv = *record.invariants;
  const auto cert = certify(record.weights, *record.data, inv);
  std::ostringstream os;
  os << "# " << surface_name(record.weights) << "\n\n";
  os << "- label: " << (record.label ? std::to_string(*record.label) : std::string("unlisted"))
     << "\n- ambient well-formed: yes\n- hypersurface well-formed: yes\n"
     << "- general member quasi-smooth: yes\n\n";
  os << "## Singular points\n\n";
  const auto points = singular_points(record.weights);
  if (points.empty()) os << "none\n";
  for (const auto& p : points) {
    os << "- " << locus_to_string(p.locus) << ": ";
    if (p.count != 1) os << p.count << " x ";
    os << p.type_name() << '\n';
  }
  os << "\n## Invariants\n\n"
     << "- singularities: " << markdown_sing(*record.data) << " (k = "
     << record.data->point_count() << ")\n"
     << "- deg: " << inv.degree.to_string() << '\n'
     << "- irreducibility: " << inv.certificate.label() << '\n'
     << "- dim_C M*: " << inv.dim.value << "\n\n"
     << "## Certification\n\n"
     << cert.verdict << "\n\n"
     << cert.text;
  return os.str();
}

}  // namespace k3inst
