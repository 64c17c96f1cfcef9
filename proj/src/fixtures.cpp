#include "sp4/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sp4 {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixtures: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& name) {
  return json::parse(read_file(fixture_dir() + "/" + name));
}

Rat parse_rat(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<int64_t>()));
  const std::string s = v.get<std::string>();
  Rat q(s, 10);
  q.canonicalize();
  return q;
}

// Entries are integers or affine strings in z = 2 * #Z: "z", "z-4", "2".
SymbolicCount parse_count(const json& v) {
  if (v.is_number_integer())
    return SymbolicCount(Rat(static_cast<long>(v.get<int64_t>())));
  std::string s = v.get<std::string>();
  SymbolicCount out;
  if (!s.empty() && s[0] == 'z') {
    out.zeta_coeff = 2;
    s = s.substr(1);
  }
  if (!s.empty()) out.constant = Rat(s, 10);
  out.constant.canonicalize();
  return out;
}

WeightGrid parse_grid(const json& j) {
  WeightGrid g;
  for (const auto& v : j.at("m1")) g.m1.push_back(v.get<int64_t>());
  for (const auto& v : j.at("m2")) g.m2.push_back(v.get<int64_t>());
  for (const auto& row : j.at("values")) {
    std::vector<SymbolicCount> r;
    for (const auto& v : row) r.push_back(parse_count(v));
    g.values.push_back(std::move(r));
  }
  if (g.values.size() != g.m1.size())
    throw std::runtime_error("fixtures: grid row count mismatch");
  for (const auto& r : g.values)
    if (r.size() != g.m2.size())
      throw std::runtime_error("fixtures: grid column count mismatch");
  return g;
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("SP4_FIXTURE_DIR")) return env;
#ifdef SP4_DEFAULT_FIXTURE_DIR
  return SP4_DEFAULT_FIXTURE_DIR;
#else
  return "data";
#endif
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void verify_fixture_checksums() {
  const json manifest = load_json("MANIFEST.json");
  for (const auto& [name, expected] : manifest.at("files").items()) {
    const uint64_t actual = fnv1a64(read_file(fixture_dir() + "/" + name));
    std::ostringstream hex;
    hex << std::hex << actual;
    if (hex.str() != expected.get<std::string>())
      throw std::runtime_error("fixtures: checksum mismatch for " + name +
                               " (got " + hex.str() + ", manifest " +
                               expected.get<std::string>() + ")");
  }
}

std::vector<int64_t> load_euler_sym_table() {
  const json j = load_json("euler_sym.json");
  std::vector<int64_t> out;
  for (const auto& row : j.at("values"))
    for (const auto& v : row) out.push_back(v.get<int64_t>());
  if (out.size() != 150)
    throw std::runtime_error("fixtures: euler_sym must hold 150 values");
  return out;
}

WeightGrid load_euler_weight_table() { return parse_grid(load_json("euler_weight.json")); }

WeightGrid load_cuspidal_table() { return parse_grid(load_json("cuspidal.json")); }

WeightGrid load_h_total_table() { return parse_grid(load_json("h_total.json")); }

std::vector<CentralizerCaseRow> load_centralizer_chi_table() {
  const json j = load_json("centralizer_chi.json");
  std::vector<CentralizerCaseRow> out;
  for (const auto& row : j.at("cases")) {
    CentralizerCaseRow r;
    r.case_label = row.at("case").get<std::string>();
    for (const auto& id : row.at("classes")) r.class_ids.push_back(id.get<int>());
    r.chi = parse_rat(row.at("chi"));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<WeylRow> load_weyl_table() {
  const json j = load_json("weyl_group.json");
  std::vector<WeylRow> out;
  for (const auto& row : j.at("rows")) {
    WeylRow r;
    r.label = row.at("label").get<std::string>();
    for (const auto& s : row.at("word")) r.word.push_back(s.get<std::string>());
    r.length = row.at("length").get<int>();
    const auto& a = row.at("a");
    const auto& b = row.at("b");
    r.a_m1 = a[0].get<int64_t>(); r.a_m2 = a[1].get<int64_t>(); r.a_c = a[2].get<int64_t>();
    r.b_m1 = b[0].get<int64_t>(); r.b_m2 = b[1].get<int64_t>(); r.b_c = b[2].get<int64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sp4
