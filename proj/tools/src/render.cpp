#include <sstream>

#include "rootbound/cli/cli.hpp"

namespace rootbound::cli {

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  return out + "\n";
}

std::string md_line(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + (c.empty() ? std::string("-") : c) + " |";
  return out + "\n";
}

std::string md_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  return out + "\n";
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string attractiveness_cell(const ConcavityReport& rep) {
  Json at = report_json(rep)["attractiveness"];
  return at.dump();
}

}  // namespace

std::vector<std::string> csv_columns(const std::string& family) {
  std::vector<std::string> cols{"family"};
  if (family == "su")
    cols.insert(cols.end(), {"p", "p_prime", "r", "r_prime"});
  else
    cols.insert(cols.end(), {"n", "p", "q"});
  cols.insert(cols.end(), {"dim_u_minus", "d_ma", "paper_bound", "derived_bound_su", "paper_formula_match",
                           "convex_degenerate"});
  return cols;
}

std::vector<std::string> csv_cells(const ConcavityReport& rep) {
  std::vector<std::string> cells{family_name(rep.spec)};
  const Json params = params_json(rep.spec);
  for (const auto& [key, value] : params.items()) cells.push_back(value.dump());
  cells.push_back(std::to_string(rep.dim_u_minus));
  cells.push_back(std::to_string(rep.d_ma));
  cells.push_back(std::to_string(rep.closed_form_bound));
  cells.push_back(rep.derived_bound_su ? std::to_string(*rep.derived_bound_su) : "");
  cells.push_back(bool_cell(rep.closed_form_match));
  cells.push_back(bool_cell(rep.convex_degenerate));
  return cells;
}

std::string render_report(const ConcavityReport& rep, OutputFormat format) {
  if (format == OutputFormat::json) return report_json(rep).dump(2) + "\n";

  auto cols = csv_columns(family_name(rep.spec));
  cols.insert(cols.end(), {"argmin", "attractiveness"});
  auto cells = csv_cells(rep);
  cells.push_back(root_set_json(rep.argmin).dump());
  cells.push_back(attractiveness_cell(rep));

  if (format == OutputFormat::csv) return csv_line(cols) + csv_line(cells);
  return md_line(cols) + md_rule(cols.size()) + md_line(cells);
}

std::string render_partition(const RootPartition& part, OutputFormat format) {
  const Json doc = partition_json(part);
  if (format == OutputFormat::json) return doc.dump(2) + "\n";
  std::string out;
  if (format == OutputFormat::csv) {
    out = csv_line({"set", "root"});
    for (const auto& [name, roots] : doc.items())
      for (const auto& r : roots) out += csv_line({name, r.dump()});
    return out;
  }
  out = md_line({"set", "roots"}) + md_rule(2);
  for (const auto& [name, roots] : doc.items()) out += md_line({name, roots.dump()});
  return out;
}

std::string render_sweep(const std::string& family, int max_n, const std::vector<ConcavityReport>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::json) {
    Json list = Json::array();
    for (const auto& rep : rows) {
      Json full = report_json(rep);
      list.push_back({
          {"family", full["family"]},
          {"params", full["params"]},
          {"dim_u_minus", full["dim_u_minus"]},
          {"d_ma", full["d_ma"]},
          {"paper_bound", full["paper_bound"]},
          {"derived_bound_su", full["derived_bound_su"]},
          {"paper_formula_match", full["paper_formula_match"]},
          {"convex_degenerate", full["convex_degenerate"]},
      });
    }
    Json doc = {{"family", family}, {"max_n", max_n}, {"rows", std::move(list)}};
    return doc.dump(2) + "\n";
  }
  const auto cols = csv_columns(family);
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << csv_line(cols);
    for (const auto& rep : rows) out << csv_line(csv_cells(rep));
  } else {
    out << md_line(cols) << md_rule(cols.size());
    for (const auto& rep : rows) out << md_line(csv_cells(rep));
  }
  return out.str();
}

}  // namespace rootbound::cli
