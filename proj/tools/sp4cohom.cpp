// Command-line front end: single values, sweep tables, the torsion-class
// classification, and the verification battery.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sp4/report.hpp"
#include "sp4/verify.hpp"

namespace {

using namespace sp4;

struct WeightArgs {
  int64_t m1 = 0;
  int64_t m2 = 0;
};

ZkMode parse_zk_mode(const std::string& spec) {
  if (spec == "symbolic") return ZkMode::symbolic();
  if (spec == "assume") return ZkMode::assume();
  if (spec.rfind("set ", 0) == 0 || spec.rfind("set=", 0) == 0 || spec.find('=') != std::string::npos) {
    std::string body = spec.rfind("set ", 0) == 0 ? spec.substr(4) : spec;
    std::map<int64_t, int64_t> values;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("--zk-mode", "expected k=value pairs: " + item);
      values[std::stoll(item.substr(0, eq))] = std::stoll(item.substr(eq + 1));
    }
    return ZkMode::explicit_values(std::move(values));
  }
  throw CLI::ValidationError("--zk-mode", "expected symbolic | assume | set k=v,...");
}

void print_value(const SymbolicCount& v, OutputFormat fmt) {
  if (fmt == OutputFormat::json)
    std::cout << render_json(json_of_count(v)) << "\n";
  else
    std::cout << v.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of Sp4(Z) with highest-weight coefficients"};
  app.require_subcommand(1);

  WeightArgs w;
  std::string zk_spec = "symbolic";
  std::string format = "text";
  std::string kind = "euler_weight";
  int64_t m1_max = 30, m2_max = 14, k_max = 149;

  auto add_weight = [&](CLI::App* cmd) {
    cmd->add_option("--m1", w.m1, "coefficient of lambda_1")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--m2", w.m2, "coefficient of lambda_2")->required()->check(CLI::NonNegativeNumber);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text | csv | json")->default_val("text");
  };
  auto add_zk = [&](CLI::App* cmd) {
    cmd->add_option("--zk-mode", zk_spec,
                    "zeta policy: symbolic | assume | set k=v,...")
        ->default_val("symbolic");
  };

  auto* cmd_dim = app.add_subcommand("dim", "dimension of M_lambda");
  add_weight(cmd_dim);
  add_format(cmd_dim);

  auto* cmd_chi = app.add_subcommand("chi", "homological Euler characteristic, both routes");
  add_weight(cmd_chi);
  add_format(cmd_chi);

  auto* cmd_cusp = app.add_subcommand("cusp", "dimension of cuspidal cohomology");
  add_weight(cmd_cusp);
  add_format(cmd_cusp);
  add_zk(cmd_cusp);

  auto* cmd_hq = app.add_subcommand("hq", "dimensions h^0..h^5 and total");
  add_weight(cmd_hq);
  add_format(cmd_hq);
  add_zk(cmd_hq);

  auto* cmd_table = app.add_subcommand("table", "sweep grid");
  cmd_table->add_option("--kind", kind, "euler_sym | euler_weight | cuspidal | h_total")
      ->default_val("euler_weight");
  cmd_table->add_option("--m1-max", m1_max, "largest m1 (even rows)")->check(CLI::Range(int64_t(0), int64_t(2000)));
  cmd_table->add_option("--m2-max", m2_max, "largest m2")->check(CLI::Range(int64_t(0), int64_t(2000)));
  cmd_table->add_option("--k-max", k_max, "largest k for euler_sym")->check(CLI::Range(int64_t(0), int64_t(5000)));
  add_format(cmd_table);
  add_zk(cmd_table);

  auto* cmd_torsion = app.add_subcommand("torsion", "the 56-class classification");
  add_format(cmd_torsion);

  auto* cmd_verify = app.add_subcommand(
      "verify", "run every fixture and cross-route check; exit 1 on mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat fmt = format_from_string(format);
    if (cmd_dim->parsed()) {
      const Int d = weyl_dimension(weight(w.m1, w.m2));
      if (fmt == OutputFormat::json) {
        ordered_json j;
        j["m1"] = w.m1;
        j["m2"] = w.m2;
        j["dim"] = json_of_rat(Rat(d));
        std::cout << render_json(j) << "\n";
      } else {
        std::cout << d.get_str() << "\n";
      }
    } else if (cmd_chi->parsed()) {
      const HighestWeight l = weight(w.m1, w.m2);
      const Rat by_sum = chi_h(l);
      const Rat by_formula = chi_h_closed(l);
      const bool agree = by_sum == by_formula;
      if (fmt == OutputFormat::json) {
        ordered_json j;
        j["m1"] = w.m1;
        j["m2"] = w.m2;
        j["chi_h"] = json_of_rat(by_sum);
        j["chi_h_closed"] = json_of_rat(by_formula);
        j["agree"] = agree;
        std::cout << render_json(j) << "\n";
      } else {
        std::cout << to_string(by_sum) << "\n";
        if (!agree)
          std::cerr << "route disagreement: torsion sum " << to_string(by_sum)
                    << ", closed form " << to_string(by_formula) << "\n";
      }
      if (!agree) return 1;
    } else if (cmd_cusp->parsed()) {
      print_value(h_cusp(weight(w.m1, w.m2), parse_zk_mode(zk_spec)), fmt);
    } else if (cmd_hq->parsed()) {
      const ZkMode mode = parse_zk_mode(zk_spec);
      const HighestWeight l = weight(w.m1, w.m2);
      if (fmt == OutputFormat::json) {
        std::cout << render_json(hq_json(l, mode)) << "\n";
      } else {
        const DegreeVector v = h_by_degree(l, mode);
        for (int q = 0; q < 6; ++q) std::cout << "h^" << q << " = " << v.q[q].str() << "\n";
        std::cout << "total = " << v.total().str() << "\n";
      }
    } else if (cmd_table->parsed()) {
      TableOptions opts;
      opts.m1_max = m1_max;
      opts.m2_max = m2_max;
      opts.k_max = k_max;
      opts.zk = parse_zk_mode(zk_spec);
      std::cout << emit_table(table_kind_from_string(kind), opts, fmt);
    } else if (cmd_torsion->parsed()) {
      if (fmt == OutputFormat::json) {
        std::cout << render_json(torsion_json()) << "\n";
      } else {
        for (const auto& t : torsion_classes()) {
          std::cout << "T" << t.id << ": order " << t.order << ", " << t.charpoly_label
                    << ", case " << t.case_label << ", family " << to_string(t.family)
                    << (t.sign_m1 ? " (signed)" : "") << ", chi = "
                    << to_string(t.centralizer_chi) << "\n";
        }
      }
    } else if (cmd_verify->parsed()) {
      bool all_pass = true;
      for (const auto& r : run_verification()) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
      }
      if (!all_pass) return 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
