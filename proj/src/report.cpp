#include "zetaforms/report.hpp"

#include <sstream>

namespace zetaforms {

json real_json(const Real& x, const char* provenance) {
  return json{{"value", x.str()}, {"prec_bits", static_cast<long>(x.prec())}, {"provenance", provenance}};
}

json rat_json(const Rat& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json complex_json(const Complex& z, const char* provenance) {
  return json{{"re", z.re.str()}, {"im", z.im.str()},
              {"prec_bits", static_cast<long>(z.prec())}, {"provenance", provenance}};
}

json report_shell(const std::string& command) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

json to_json(const CotangentBasis& basis) {
  json j;
  j["b"] = basis.b;
  j["members"] = basis.members;
  json vmap = json::object();
  for (const auto& [beta, poly] : basis.V) {
    json coeffs = json::array();
    for (const auto& c : poly.c) coeffs.push_back(rat_json(c));
    vmap[std::to_string(beta)] = coeffs;
  }
  j["V"] = vmap;
  json wmap = json::object();
  for (const auto& [beta, poly] : basis.W) {
    json coeffs = json::array();
    for (const auto& c : poly.c) coeffs.push_back(rat_json(c));
    wmap[std::to_string(beta)] = coeffs;
  }
  j["W"] = wmap;
  auto matrix = [](const std::vector<std::vector<Rat>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rat_json(x));
      rows.push_back(r);
    }
    return rows;
  };
  j["c"] = matrix(basis.c);
  j["d"] = matrix(basis.d);
  return j;
}

json to_json(const LinearFormFamily& family) {
  json j;
  j["a"] = family.params.a;
  j["b"] = family.params.b;
  j["r"] = rat_json(family.params.r);
  j["n"] = family.params.n;
  j["F"] = rat_json(family.F);
  json lt = json::object();
  for (const auto& [beta, v] : family.ltilde) lt[std::to_string(beta)] = rat_json(v);
  j["ltilde"] = lt;
  json el = json::object();
  for (const auto& [i, v] : family.ell) el[std::to_string(i)] = rat_json(v);
  j["ell"] = el;
  return j;
}

json to_json(const GrowthTable& table) {
  json j;
  j["coeff_bound"] = real_json(table.coeff_bound);
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json{{"n", row.n},
                        {"coeff_root", real_json(row.coeff_root)},
                        {"i1_root", real_json(row.i1_root)},
                        {"log_i1_over_n", real_json(row.log_i1_over_n)},
                        {"coeff_within_bound", row.coeff_within_bound}});
  }
  j["rows"] = rows;
  return j;
}

std::string growth_csv(const GrowthTable& table) {
  std::ostringstream os;
  os << "n,coeff_root,i1_root,log_i1_over_n,coeff_within_bound\n";
  for (const auto& row : table.rows) {
    os << row.n << "," << row.coeff_root.str(24) << "," << row.i1_root.str(24) << ","
       << row.log_i1_over_n.str(24) << "," << (row.coeff_within_bound ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string bounds_csv(const std::vector<BoundEvaluation>& rows) {
  std::ostringstream os;
  os << "r,log_alpha,log_q,ratio,dim_bound\n";
  for (const auto& ev : rows) {
    os << ev.r.str(24) << "," << ev.log_alpha_v.str(24) << "," << ev.log_q_v.str(24) << ","
       << ev.ratio.str(24) << "," << ev.dim_bound.str(24) << "\n";
  }
  return os.str();
}

json to_json(const SaddleData& data) {
  json j;
  j["a"] = data.params.a;
  j["b"] = data.params.b;
  j["r"] = rat_json(data.params.r);
  j["prec_bits"] = static_cast<long>(data.prec);
  j["mu1"] = real_json(data.mu1);
  json per = json::array();
  for (int lambda : data.params.members()) {
    json e;
    e["lambda"] = lambda;
    e["rho"] = complex_json(data.rho.at(lambda));
    e["eps"] = real_json(data.eps.at(lambda));
    e["omega"] = real_json(data.omega.at(lambda));
    e["phi"] = real_json(data.phi.at(lambda));
    e["f_second"] = complex_json(data.fpp.at(lambda));
    e["g"] = complex_json(data.g_at_rho.at(lambda));
    e["fprime_residual"] = real_json(data.fprime_residual.at(lambda));
    per.push_back(e);
  }
  j["saddles"] = per;
  j["exceptional_candidate"] = data.exceptional_candidate;
  return j;
}

json to_json(const HypothesisReport& rep) {
  json j;
  j["growth_ratio_ok"] = rep.growth_ratio_ok;
  j["growth_margin"] = real_json(rep.growth_margin);
  j["mu1_window_ok"] = rep.mu1_window_ok;
  j["mu1_margin"] = real_json(rep.mu1_margin);
  j["r_in_interval"] = rep.r_in_interval;
  j["interval_margin"] = real_json(rep.interval_margin);
  j["three_br_ok"] = rep.three_br_ok;
  return j;
}

json to_json(const PlanReport& rep) {
  json j;
  j["kind"] = rep.kind;
  json params = json::object();
  for (const auto& [k, v] : rep.params) {
    const char* provenance = (k == "varpi") ? "imported-constant" : "computed";
    params[k] = json{{"value", v}, {"provenance", provenance}};
  }
  j["params"] = params;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"margin", real_json(c.margin)},
                          {"note", c.note}});
  }
  j["checks"] = checks;
  j["margin"] = real_json(rep.margin);
  j["pass"] = rep.all_pass();
  return j;
}

json to_json(const BoundEvaluation& ev) {
  json j;
  j["r"] = real_json(ev.r);
  j["log_alpha"] = real_json(ev.log_alpha_v);
  j["log_q"] = real_json(ev.log_q_v);
  j["ratio"] = real_json(ev.ratio);
  j["dim_bound"] = real_json(ev.dim_bound);
  return j;
}

namespace {
Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) return rat_of(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
  throw InvalidInput("rat_from_json: expected integer, string, or {num, den}");
}
}  // namespace

ExtractionInstance instance_from_json(const json& j) {
  ExtractionInstance inst;
  inst.k = j.at("k").get<int>();
  inst.N = j.at("N").get<int>();
  inst.M = j.at("M").get<int>();
  for (const auto& row : j.at("lambda")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    inst.lambda.push_back(std::move(r));
  }
  for (const auto& row : j.at("xi")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    inst.xi.push_back(std::move(r));
  }
  inst.validate();
  return inst;
}

SpreadRequest request_from_json(const json& j) {
  SpreadRequest req;
  req.delta = rat_from_json(j.at("delta"));
  req.p = j.at("p").get<int>();
  if (j.contains("m"))
    for (const auto& v : j.at("m")) req.m.push_back(v.get<long>());
  return req;
}

json extraction_result_json(const std::vector<long>& result) {
  json j;
  j["indices"] = result;
  return j;
}

}  // namespace zetaforms
