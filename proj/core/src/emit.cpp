#include "sqz/emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sqz/version.hpp"

namespace sqz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json metadata_block(const RunMetadata& meta) {
  ordered_json m;
  m["model"] = meta.model;
  ordered_json p = ordered_json::object();
  for (const auto& [key, value] : meta.parameters) p[key] = value;
  m["parameters"] = p;
  m["version"] = version;
  return m;
}

void dump(std::ostream& os, const ordered_json& doc) {
  os << doc.dump(2) << '\n';
}

ordered_json json_number(double v) {
  // Round-trip through the fixed text format so CSV and JSON agree digit for
  // digit.
  return ordered_json::parse(format_double(v));
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void emit_rows(std::ostream& os, const std::vector<ScanRow>& rows,
               OutputFormat format, const RunMetadata& meta) {
  if (format == OutputFormat::csv) {
    os << "detuning_gamma0,alpha_ell,g_ell,squeezing_db,flags\n";
    for (const ScanRow& r : rows)
      os << format_double(r.detuning) << ',' << format_double(r.alpha_ell)
         << ',' << format_double(r.g_ell) << ',' << format_double(r.s_db)
         << ',' << flags_to_string(r.flags) << '\n';
    return;
  }
  ordered_json doc;
  doc["metadata"] = metadata_block(meta);
  ordered_json arr = ordered_json::array();
  for (const ScanRow& r : rows) {
    ordered_json row;
    row["detuning_gamma0"] = json_number(r.detuning);
    row["alpha_ell"] = json_number(r.alpha_ell);
    row["g_ell"] = json_number(r.g_ell);
    row["squeezing_db"] = json_number(r.s_db);
    row["flags"] = flags_to_string(r.flags);
    arr.push_back(row);
  }
  doc["rows"] = arr;
  dump(os, doc);
}

void emit_kappa_rows(std::ostream& os, const std::vector<KappaRow>& rows,
                     OutputFormat format, const RunMetadata& meta) {
  if (format == OutputFormat::csv) {
    os << "log10_kappa,detuning_gamma0,squeezing_db,flags\n";
    for (const KappaRow& r : rows)
      os << format_double(std::log10(r.kappa)) << ','
         << format_double(r.detuning_opt) << ',' << format_double(r.s_db)
         << ',' << flags_to_string(r.flags) << '\n';
    return;
  }
  ordered_json doc;
  doc["metadata"] = metadata_block(meta);
  ordered_json grid = ordered_json::array();
  for (const KappaRow& r : rows) grid.push_back(json_number(r.kappa));
  doc["metadata"]["kappa_grid"] = grid;
  ordered_json arr = ordered_json::array();
  for (const KappaRow& r : rows) {
    ordered_json row;
    row["log10_kappa"] = json_number(std::log10(r.kappa));
    row["detuning_gamma0"] = json_number(r.detuning_opt);
    row["squeezing_db"] = json_number(r.s_db);
    row["flags"] = flags_to_string(r.flags);
    arr.push_back(row);
  }
  doc["rows"] = arr;
  dump(os, doc);
}

void emit_table(std::ostream& os, const std::vector<std::string>& names,
                const std::vector<std::vector<double>>& columns,
                OutputFormat format, const RunMetadata& meta) {
  if (names.empty() || names.size() != columns.size())
    throw std::invalid_argument("emit_table: names/columns mismatch");
  std::size_t n = columns.front().size();
  for (const auto& col : columns)
    if (col.size() != n)
      throw std::invalid_argument("emit_table: column length mismatch");
  if (format == OutputFormat::csv) {
    for (std::size_t c = 0; c < names.size(); ++c)
      os << (c ? "," : "") << names[c];
    os << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        os << (c ? "," : "") << format_double(columns[c][i]);
      os << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["metadata"] = metadata_block(meta);
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    ordered_json row;
    for (std::size_t c = 0; c < columns.size(); ++c)
      row[names[c]] = json_number(columns[c][i]);
    arr.push_back(row);
  }
  doc["rows"] = arr;
  dump(os, doc);
}

void emit_xy(std::ostream& os, const std::string& xname,
             const std::string& yname, const std::vector<double>& x,
             const std::vector<double>& y, OutputFormat format,
             const RunMetadata& meta) {
  emit_table(os, {xname, yname}, {x, y}, format, meta);
}

}  // namespace sqz
