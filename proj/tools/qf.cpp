#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/arith.hpp"
#include "qseries/closedform.hpp"
#include "qseries/expr.hpp"
#include "qseries/registry.hpp"
#include "qseries/repcount.hpp"

namespace {

long default_order() {
  if (const char* env = std::getenv("QFORMS_ORDER")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 512;
}

std::vector<long> split_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stol(part));
  return out;
}

long run_formula(const std::string& name, long n) {
  using namespace qs::closedform;
  if (name == "r2") return r2(n);
  if (name == "rep_1_0_5") return rep_1_0_5(n);
  if (name == "rep_2_2_3") return rep_2_2_3(n);
  if (name == "rep_1_0_6") return rep_1_0_6(n);
  if (name == "rep_2_0_3") return rep_2_0_3(n);
  if (name == "rep_1_0_15") return rep_1_0_15(n);
  if (name == "rep_3_0_5") return rep_3_0_5(n);
  if (name == "rep_1_0_27") return rep_1_0_27(n);
  if (name == "rep_4_2_7") return rep_4_2_7(n);
  if (name == "cusp_d") return cusp_d(n);
  if (name == "thm81_coeff") return thm81_coeff(n);
  if (name == "williams_atilde") return williams_atilde(n);
  if (name == "quat_a") return rep_quat(QuatKind::A, n);
  if (name == "quat_b") return rep_quat(QuatKind::B, n);
  if (name == "quat_c") return rep_quat(QuatKind::C, n);
  if (name == "quat_d") return rep_quat(QuatKind::D, n);
  throw CLI::ValidationError("--name", "unknown formula: " + name);
}

void print_series(const qs::Series& s, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["min_exp"] = s.min_exp();
    j["order"] = s.order();
    auto& coeffs = j["coefficients"] = nlohmann::json::array();
    for (long n = s.min_exp(); n <= s.order(); ++n) coeffs.push_back(s.coeff(n).str());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qs::to_string(s) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series expansion, identity verification, and representation counts"};
  app.require_subcommand(1);

  std::string expr_text, format = "text", verify_id, json_path, form_text, quat_text, formula_name;
  long order = default_order();
  long upto = 100, formula_n = 1, factor_n = 0;
  bool verify_all_flag = false;

  auto* expand = app.add_subcommand("expand", "expand an expression as a q-series");
  expand->add_option("--expr", expr_text, "expression to expand")->required();
  expand->add_option("--order", order, "truncation order");
  expand->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "verify catalog identities");
  verify->add_option("--id", verify_id, "single identity id");
  verify->add_flag("--all", verify_all_flag, "verify the whole catalog");
  verify->add_option("--order", order, "truncation order");
  verify->add_option("--json", json_path, "write the JSON report to this path");

  auto* count = app.add_subcommand("count", "representation counts by enumeration");
  count->add_option("--form", form_text, "binary form a,b,c");
  count->add_option("--quat", quat_text, "diagonal quaternary form d1,d2,d3,d4");
  count->add_option("--upto", upto, "largest n to report");

  auto* formula = app.add_subcommand("formula", "closed-form representation counts");
  formula->add_option("--name", formula_name, "formula name")->required();
  formula->add_option("--n", formula_n, "argument")->required();

  auto* factor = app.add_subcommand("factor", "prime factorization");
  factor->add_option("n", factor_n, "integer to factor")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) {
      print_series(qs::expr::eval_expr(qs::expr::parse_expr(expr_text), order), format);
      return 0;
    }
    if (verify->parsed()) {
      if (verify_id.empty() == !verify_all_flag) {
        std::cerr << "verify: pass exactly one of --id or --all\n";
        return 2;
      }
      std::vector<qs::registry::VerificationReport> reports;
      if (verify_all_flag)
        reports = qs::registry::verify_all(order);
      else
        reports.push_back(qs::registry::verify(verify_id, order));
      for (const auto& r : reports) {
        std::cout << r.id << ": " << r.status;
        if (r.first_mismatch)
          std::cout << " (first mismatch at q^" << *r.first_mismatch << ": " << r.lhs_coeff << " vs "
                    << r.rhs_coeff << ")";
        std::cout << " [" << r.elapsed_ms << " ms]\n";
      }
      std::string json = qs::registry::report_json(reports, order);
      if (!json_path.empty()) std::ofstream(json_path) << json << "\n";
      return qs::registry::all_must_pass_ok(reports) ? 0 : 1;
    }
    if (count->parsed()) {
      if (form_text.empty() == quat_text.empty()) {
        std::cerr << "count: pass exactly one of --form or --quat\n";
        return 2;
      }
      qs::Series theta;
      if (!form_text.empty()) {
        auto v = split_longs(form_text);
        if (v.size() != 3) {
          std::cerr << "count: --form needs a,b,c\n";
          return 2;
        }
        theta = qs::repcount::bqf_theta({v[0], v[1], v[2]}, upto);
      } else {
        auto v = split_longs(quat_text);
        if (v.size() != 4) {
          std::cerr << "count: --quat needs d1,d2,d3,d4\n";
          return 2;
        }
        theta = qs::repcount::diag4_theta({{v[0], v[1], v[2], v[3]}}, upto);
      }
      for (long n = 0; n <= upto; ++n) std::cout << n << " " << theta.coeff(n) << "\n";
      return 0;
    }
    if (formula->parsed()) {
      std::cout << run_formula(formula_name, formula_n) << "\n";
      return 0;
    }
    if (factor->parsed()) {
      auto f = qs::arith::factorize(factor_n);
      std::cout << factor_n << " =";
      if (f.factors.empty()) std::cout << " 1";
      for (size_t i = 0; i < f.factors.size(); ++i) {
        auto [p, e] = f.factors[i];
        std::cout << (i ? " * " : " ") << p;
        if (e > 1) std::cout << "^" << e;
      }
      std::cout << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
