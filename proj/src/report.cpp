#include "sp4/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sp4 {

TableKind table_kind_from_string(const std::string& s) {
  if (s == "euler_sym") return TableKind::euler_sym;
  if (s == "euler_weight") return TableKind::euler_weight;
  if (s == "cuspidal") return TableKind::cuspidal;
  if (s == "h_total") return TableKind::h_total;
  throw std::invalid_argument("unknown table kind: " + s);
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + s);
}

ordered_json json_of_rat(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return ordered_json(q.get_num().get_si());
  return ordered_json(to_string(q));
}

ordered_json json_of_count(const SymbolicCount& c) {
  if (c.resolved()) return json_of_rat(c.constant);
  ordered_json j;
  j["const"] = json_of_rat(c.constant);
  j["zeta"] = json_of_rat(c.zeta_coeff);
  return j;
}

std::string z_string(const SymbolicCount& c) {
  if (c.resolved()) return to_string(c.constant);
  Rat w = c.zeta_coeff / 2;
  w.canonicalize();
  if (!is_integer(w)) return c.str();
  std::string z = w == 1 ? "z" : (w == -1 ? "-z" : to_string(w) + "z");
  if (c.constant == 0) return z;
  if (c.constant > 0) return z + "+" + to_string(c.constant);
  return z + to_string(c.constant);
}

std::string render_json(const ordered_json& j) { return j.dump(); }

namespace {

struct Grid {
  std::string row_name, col_name;
  std::vector<int64_t> rows, cols;
  std::vector<std::vector<SymbolicCount>> values;
};

Grid compute_grid(TableKind kind, const TableOptions& opts) {
  Grid g;
  TraceOracle oracle;
  if (kind == TableKind::euler_sym) {
    // One row per i with k = 15*i + j, matching the printed layout.
    g.row_name = "i";
    g.col_name = "j";
    const int64_t kmax = opts.k_max;
    for (int64_t i = 0; 15 * i <= kmax; ++i) g.rows.push_back(i);
    for (int64_t j = 0; j < 15; ++j) g.cols.push_back(j);
    for (int64_t i : g.rows) {
      std::vector<SymbolicCount> row;
      for (int64_t j : g.cols) {
        const int64_t k = 15 * i + j;
        if (k > kmax) break;
        row.emplace_back(chi_h(weight(2 * k, 0), oracle));
      }
      g.values.push_back(std::move(row));
    }
    return g;
  }
  g.row_name = "m1";
  g.col_name = "m2";
  for (int64_t m1 = 0; m1 <= opts.m1_max; m1 += 2) g.rows.push_back(m1);
  for (int64_t m2 = 0; m2 <= opts.m2_max; ++m2) g.cols.push_back(m2);
  for (int64_t m1 : g.rows) {
    std::vector<SymbolicCount> row;
    for (int64_t m2 : g.cols) {
      const HighestWeight l = weight(m1, m2);
      switch (kind) {
        case TableKind::euler_weight: row.emplace_back(chi_h(l, oracle)); break;
        case TableKind::cuspidal: row.push_back(h_cusp(l, opts.zk, oracle)); break;
        case TableKind::h_total: row.push_back(h_total(l, opts.zk, oracle)); break;
        default: throw std::logic_error("compute_grid: bad kind");
      }
    }
    g.values.push_back(std::move(row));
  }
  return g;
}

std::string table_name(TableKind kind) {
  switch (kind) {
    case TableKind::euler_sym: return "euler_sym";
    case TableKind::euler_weight: return "euler_weight";
    case TableKind::cuspidal: return "cuspidal";
    case TableKind::h_total: return "h_total";
  }
  return "?";
}

std::string emit_text(const Grid& g) {
  size_t width = static_cast<size_t>(g.row_name.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : g.values) {
    std::vector<std::string> r;
    for (const auto& v : row) {
      r.push_back(z_string(v));
      width = std::max(width, r.back().size());
    }
    cells.push_back(std::move(r));
  }
  std::ostringstream out;
  out << std::setw(static_cast<int>(width)) << g.row_name << " |";
  for (int64_t c : g.cols) out << " " << std::setw(static_cast<int>(width)) << c;
  out << "\n";
  for (size_t i = 0; i < cells.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << g.rows[i] << " |";
    for (const auto& s : cells[i]) out << " " << std::setw(static_cast<int>(width)) << s;
    out << "\n";
  }
  return out.str();
}

std::string emit_csv(TableKind kind, const Grid& g) {
  std::ostringstream out;
  if (kind == TableKind::euler_sym) {
    out << "k,value\n";
    for (size_t i = 0; i < g.values.size(); ++i)
      for (size_t j = 0; j < g.values[i].size(); ++j)
        out << 15 * g.rows[i] + g.cols[j] << "," << z_string(g.values[i][j]) << "\n";
    return out.str();
  }
  out << "m1,m2,value\n";
  for (size_t i = 0; i < g.values.size(); ++i)
    for (size_t j = 0; j < g.values[i].size(); ++j)
      out << g.rows[i] << "," << g.cols[j] << "," << z_string(g.values[i][j]) << "\n";
  return out.str();
}

ordered_json emit_json(TableKind kind, const Grid& g) {
  ordered_json j;
  j["table"] = table_name(kind);
  j[g.row_name] = g.rows;
  j[g.col_name] = g.cols;
  ordered_json rows = ordered_json::array();
  for (const auto& row : g.values) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(json_of_count(v));
    rows.push_back(std::move(r));
  }
  j["values"] = std::move(rows);
  return j;
}

}  // namespace

std::string emit_table(TableKind kind, const TableOptions& opts, OutputFormat fmt) {
  const Grid g = compute_grid(kind, opts);
  switch (fmt) {
    case OutputFormat::text: return emit_text(g);
    case OutputFormat::csv: return emit_csv(kind, g);
    case OutputFormat::json: return render_json(emit_json(kind, g)) + "\n";
  }
  throw std::invalid_argument("emit_table: bad format");
}

ordered_json hq_json(const HighestWeight& lambda, const ZkMode& mode) {
  const DegreeVector v = h_by_degree(lambda, mode);
  ordered_json j;
  ordered_json h = ordered_json::array();
  for (const auto& q : v.q) h.push_back(json_of_count(q));
  j["h"] = std::move(h);
  j["total"] = json_of_count(v.total());
  return j;
}

ordered_json torsion_json() {
  ordered_json list = ordered_json::array();
  for (const auto& t : torsion_classes()) {
    ordered_json j;
    j["id"] = t.id;
    ordered_json m = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 4; ++c) row.push_back(t.matrix(r, c).get_si());
      m.push_back(std::move(row));
    }
    j["matrix"] = std::move(m);
    j["order"] = t.order;
    j["charpoly"] = t.charpoly_label;
    j["case"] = std::string(1, t.case_label);
    j["family"] = to_string(t.family);
    j["sign_m1"] = t.sign_m1;
    j["chi"] = json_of_rat(t.centralizer_chi);
    list.push_back(std::move(j));
  }
  ordered_json out;
  out["torsion_classes"] = std::move(list);
  return out;
}

}  // namespace sp4
