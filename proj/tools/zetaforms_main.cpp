#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "zetaforms/acceptance.hpp"
#include "zetaforms/report.hpp"
#include "zetaforms/special.hpp"

namespace zf = zetaforms;

namespace {

// exit codes: 0 pass, 1 check failed, 2 invalid input, 3 internal failure
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct Output {
  std::string path;
  bool csv = false;

  void emit(const zf::json& j, const std::string& csv_body = "") const {
    std::string body = csv && !csv_body.empty() ? csv_body : j.dump(2) + "\n";
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(path);
      f << body;
    }
  }
};

zf::Rat parse_rat_arg(const std::string& s) { return zf::parse_rational(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetaforms: linear forms in odd zeta values, saddle data, rank bounds, spread extraction"};
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "key=value file overriding defaults");

  long prec = 256;
  std::string out_path;
  bool as_csv = false, as_json = true;
  app.add_option("--prec-bits", prec, "working precision in bits (>= 64)")->capture_default_str();
  app.add_option("--out", out_path, "write the report to this path");
  app.add_flag("--csv", as_csv, "emit CSV where the command supports it");
  app.add_flag("--json", as_json, "emit JSON (default)");

  // ---- forms ----
  auto* forms = app.add_subcommand("forms", "build I_{beta,n} and run the exact checks");
  long f_a = 9, f_b = 1, f_n = 4;
  std::string f_r = "1";
  std::vector<long> f_growth;
  forms->add_option("--a", f_a)->required();
  forms->add_option("--b", f_b)->required();
  forms->add_option("--r", f_r, "rational, e.g. 3/2")->required();
  forms->add_option("--n", f_n)->required();
  forms->add_option("--growth", f_growth, "n values for growth diagnostics (CSV with --csv)");

  // ---- cot-matrix ----
  auto* cot = app.add_subcommand("cot-matrix", "cotangent basis c, d, V, W for odd b");
  long c_b = 3;
  cot->add_option("--b", c_b)->required();

  // ---- saddle ----
  auto* sad = app.add_subcommand("saddle", "mu1, rho_lambda, eps/omega/phi and hypothesis checks");
  long s_a = 45, s_b = 5;
  std::string s_r = "2";
  sad->add_option("--a", s_a)->required();
  sad->add_option("--b", s_b)->required();
  sad->add_option("--r", s_r)->required();

  // ---- bounds ----
  auto* bnd = app.add_subcommand("bounds", "dimension lower bound over r in I_{a,b}");
  long b_a = 9, b_b = 1;
  int b_grid = 64;
  bnd->add_option("--a", b_a)->required();
  bnd->add_option("--b", b_b)->required();
  bnd->add_option("--grid", b_grid)->capture_default_str();

  // ---- plan ----
  auto* plan = app.add_subcommand("plan", "parameter planners");
  auto* p70 = plan->add_subcommand("th70", "window planner; needs --eps, --big-a, --d");
  std::string p70_eps = "1/20", p70_A = "20^240", p70_D = "1";
  p70->add_option("--eps", p70_eps)->capture_default_str();
  p70->add_option("--big-a", p70_A, "integer, ^ allowed (e.g. 20^240)")->capture_default_str();
  p70->add_option("--d", p70_D)->capture_default_str();
  auto* p145 = plan->add_subcommand("th145", "two-zeta planner; needs --d odd");
  std::string p145_D = "1", p145_varpi = zf::kVarpiDigits;
  p145->add_option("--d", p145_D)->capture_default_str();
  p145->add_option("--varpi", p145_varpi, "imported constant")->capture_default_str();
  auto* p82 = plan->add_subcommand("cor82", "sparse-sequence planner; needs --eps");
  std::string p82_eps = "1/20";
  p82->add_option("--eps", p82_eps)->capture_default_str();
  plan->require_subcommand(1);

  // ---- extract ----
  auto* ext = app.add_subcommand("extract", "spread extraction from a JSON fixture");
  std::string e_file;
  ext->add_option("--file", e_file, "instance/request JSON")->required()->check(CLI::ExistingFile);

  // ---- zeta ----
  auto* zet = app.add_subcommand("zeta", "zeta(s) at the working precision");
  long z_s = 3;
  zet->add_option("--s", z_s)->required();

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "run the full acceptance scoreboard");
  std::vector<int> v_only;
  ver->add_option("--only", v_only, "criterion ids to run");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInvalid;
  }

  Output out{out_path, as_csv};
  if (prec < 64) {
    std::cerr << "error: --prec-bits must be >= 64\n";
    return kExitInvalid;
  }

  try {
    if (*forms) {
      zf::FormParams p{static_cast<int>(f_a), static_cast<int>(f_b), parse_rat_arg(f_r), f_n};
      zf::json j = zf::report_shell("forms");
      j["prec_bits"] = prec;
      zf::LinearFormFamily fam = zf::extract_linear_form(p);
      j["family"] = zf::to_json(fam);
      bool pass = true;
      zf::json checks = zf::json::array();
      auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back(zf::json{{"name", name}, {"pass", ok}, {"detail", detail}});
        pass = pass && ok;
      };
      zf::PartialFractions pf = zf::partial_fractions(p);
      add("residue_sum_c1_zero", pf.row_sum(1) == 0, "");
      bool even_ok = true;
      for (int jj = 2; jj <= p.a; jj += 2) even_ok = even_ok && pf.row_sum(jj) == 0;
      add("even_residue_sums_zero", even_ok, "");
      zf::Rat dk(zf::pow_int(zf::lcm_d(2 * p.n), static_cast<unsigned long>(p.a + p.b - 1)));
      bool denom_ok = true;
      for (const auto& [beta, v] : fam.ltilde) denom_ok = denom_ok && zf::is_integer(dk * v);
      for (const auto& [i, v] : fam.ell) denom_ok = denom_ok && zf::is_integer(dk * v);
      add("common_denominator_d2n", denom_ok, "");
      for (int beta : p.members()) {
        zf::Real lhs = zf::eval_form(fam, beta, prec);
        zf::Real rhs = zf::eval_series(p, beta, prec);
        zf::Real diff = abs(lhs - rhs);
        bool ok = diff < zf::Real::pow2(16 - static_cast<long>(prec), 64) ||
                  diff < zf::Real(1e-30, 64);
        add("eval_cross_check_beta_" + std::to_string(beta), ok, diff.str(6));
        j["I_beta_" + std::to_string(beta)] = zf::real_json(lhs);
      }
      j["checks"] = checks;
      j["pass"] = pass;
      if (!f_growth.empty()) {
        zf::GrowthTable table = zf::growth_diagnostics(p.a, p.b, p.r, f_growth, prec);
        j["growth"] = zf::to_json(table);
        out.emit(j, zf::growth_csv(table));
        return pass ? kExitPass : kExitCheckFailed;
      }
      out.emit(j);
      return pass ? kExitPass : kExitCheckFailed;
    }

    if (*cot) {
      zf::json j = zf::report_shell("cot-matrix");
      j["basis"] = zf::to_json(zf::build_basis(static_cast<int>(c_b)));
      j["pass"] = true;
      out.emit(j);
      return kExitPass;
    }

    if (*sad) {
      zf::SaddleParams p{static_cast<int>(s_a), static_cast<int>(s_b), parse_rat_arg(s_r)};
      zf::json j = zf::report_shell("saddle");
      j["prec_bits"] = prec;
      j["hypotheses"] = zf::to_json(zf::check_hypotheses(p, prec));
      j["mu1"] = zf::real_json(zf::locate_mu1(p, prec));
      j["re_f_mu1_upper"] = zf::real_json(zf::re_f_upper_at_mu1(p, prec));
      if (p.b_divides_a()) {
        zf::SaddleData d = zf::asymptotics(p, prec);
        j["asymptotics"] = zf::to_json(d);
      }
      j["pass"] = true;
      out.emit(j);
      return kExitPass;
    }

    if (*bnd) {
      zf::json j = zf::report_shell("bounds");
      j["prec_bits"] = prec;
      zf::BoundEvaluation ev = zf::dim_lower_bound(b_a, b_b, b_grid, prec);
      j["sup"] = zf::to_json(ev);
      j["at_r_1"] = zf::to_json(zf::evaluate_bound(zf::Real(1, prec), b_a, b_b, prec));
      auto rows = zf::bound_table(b_a, b_b, b_grid, prec);
      zf::json table = zf::json::array();
      for (const auto& row : rows) table.push_back(zf::to_json(row));
      j["table"] = table;
      j["pass"] = true;
      out.emit(j, zf::bounds_csv(rows));
      return kExitPass;
    }

    if (*plan) {
      zf::PlanReport rep;
      if (*p70)
        rep = zf::plan_th70(parse_rat_arg(p70_eps), zf::floor_rat(zf::parse_rational(p70_A)),
                            zf::floor_rat(zf::parse_rational(p70_D)), prec);
      else if (*p145)
        rep = zf::plan_th145(zf::floor_rat(zf::parse_rational(p145_D)), prec, p145_varpi);
      else
        rep = zf::plan_cor82(parse_rat_arg(p82_eps), prec);
      zf::json j = zf::report_shell("plan");
      j["prec_bits"] = prec;
      j["report"] = zf::to_json(rep);
      bool pass = rep.all_pass();
      j["pass"] = pass;
      out.emit(j);
      std::cerr << "margin: " << rep.margin.str(12) << (pass ? " (all checks pass)" : " (check failed)")
                << "\n";
      return pass ? kExitPass : kExitCheckFailed;
    }

    if (*ext) {
      std::ifstream f(e_file);
      zf::json in = zf::json::parse(f);
      zf::ExtractionInstance inst = zf::instance_from_json(in.at("instance"));
      zf::SpreadRequest req = zf::request_from_json(in.at("request"));
      zf::json j = zf::report_shell("extract");
      std::vector<long> result = zf::extract(inst, req);
      j["result"] = zf::extraction_result_json(result);
      j["certified"] = zf::certify(inst, req, result);
      j["pass"] = j["certified"].get<bool>();
      out.emit(j);
      return j["pass"].get<bool>() ? kExitPass : kExitInternal;
    }

    if (*zet) {
      zf::json j = zf::report_shell("zeta");
      j["s"] = z_s;
      j["value"] = zf::real_json(zf::zeta_int(z_s, prec));
      j["pass"] = true;
      out.emit(j);
      return kExitPass;
    }

    if (*ver) {
      auto results = zf::run_acceptance(&std::cout, v_only);
      zf::json j = zf::report_shell("verify");
      zf::json arr = zf::json::array();
      for (const auto& r : results)
        arr.push_back(zf::json{{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
      j["criteria"] = arr;
      bool pass = zf::all_pass(results);
      j["pass"] = pass;
      if (!out_path.empty()) out.emit(j);
      return pass ? kExitPass : kExitCheckFailed;
    }
  } catch (const zf::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const zf::CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const zf::InternalError& e) {
    std::cerr << "internal certification failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}
