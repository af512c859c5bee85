#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetaforms/acceptance.hpp"
#include "zetaforms/report.hpp"
#include "zetaforms/special.hpp"

namespace py = pybind11;
namespace zf = zetaforms;

namespace {

zf::Rat rat_arg(const std::string& s) { return zf::parse_rational(s); }

std::string json_str(const zf::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_zetaforms, m) {
  m.doc() = "linear forms in odd zeta values: exact coefficients, saddle data, "
            "rank bounds, spread extraction";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const zf::InvalidInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const zf::CheckFailure& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    } catch (const zf::InternalError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("lcm_d", [](unsigned long k) { return zf::lcm_d(k).get_str(); },
        py::arg("k"), "lcm(1..k) as a decimal string");

  m.def("bernoulli", [](unsigned long n) {
          zf::Rat b = zf::bernoulli(n);
          return py::make_tuple(b.get_num().get_str(), b.get_den().get_str());
        },
        py::arg("n"), "(numerator, denominator) strings");

  m.def("zeta", [](long s, long prec) { return zf::zeta_int(s, prec).str(); },
        py::arg("s"), py::arg("prec_bits") = 256);

  m.def("mu1", [](int a, int b, const std::string& r, long prec) {
          return zf::locate_mu1(zf::SaddleParams{a, b, rat_arg(r)}, prec).str();
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("prec_bits") = 256,
        "the unique root of Q right of 2r+1");

  m.def("re_f_at_mu1", [](int a, int b, const std::string& r, long prec) {
          return zf::re_f_upper_at_mu1(zf::SaddleParams{a, b, rat_arg(r)}, prec).str();
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("prec_bits") = 256);

  m.def("basis_json", [](int b) { return json_str(zf::to_json(zf::build_basis(b))); },
        py::arg("b"));

  m.def("forms_json", [](int a, int b, const std::string& r, long n) {
          zf::FormParams p{a, b, rat_arg(r), n};
          return json_str(zf::to_json(zf::extract_linear_form(p)));
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("n"));

  m.def("eval_form", [](int a, int b, const std::string& r, long n, int beta, long prec) {
          zf::FormParams p{a, b, rat_arg(r), n};
          return zf::eval_form(zf::extract_linear_form(p), beta, prec).str();
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("n"), py::arg("beta"),
        py::arg("prec_bits") = 192);

  m.def("eval_series", [](int a, int b, const std::string& r, long n, int beta, long prec) {
          zf::FormParams p{a, b, rat_arg(r), n};
          return zf::eval_series(p, beta, prec).str();
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("n"), py::arg("beta"),
        py::arg("prec_bits") = 192);

  m.def("saddle_json", [](int a, int b, const std::string& r, long prec) {
          return json_str(zf::to_json(zf::asymptotics(zf::SaddleParams{a, b, rat_arg(r)}, prec)));
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("prec_bits") = 192);

  m.def("dim_lower_bound_json", [](long a, long b, int grid, long prec) {
          return json_str(zf::to_json(zf::dim_lower_bound(a, b, grid, prec)));
        },
        py::arg("a"), py::arg("b"), py::arg("grid") = 64, py::arg("prec_bits") = 192);

  m.def("plan_th70_json", [](const std::string& eps, const std::string& A, const std::string& D,
                             long prec) {
          return json_str(zf::to_json(zf::plan_th70(rat_arg(eps), zf::floor_rat(rat_arg(A)),
                                                    zf::floor_rat(rat_arg(D)), prec)));
        },
        py::arg("eps"), py::arg("big_a"), py::arg("d"), py::arg("prec_bits") = 256);

  m.def("plan_th145_json", [](const std::string& D, long prec) {
          return json_str(zf::to_json(zf::plan_th145(zf::floor_rat(rat_arg(D)), prec)));
        },
        py::arg("d"), py::arg("prec_bits") = 256);

  m.def("plan_cor82_json", [](const std::string& eps, long prec) {
          return json_str(zf::to_json(zf::plan_cor82(rat_arg(eps), prec)));
        },
        py::arg("eps"), py::arg("prec_bits") = 256);

  m.def("extract_spread", [](const std::string& payload) {
          zf::json in = zf::json::parse(payload);
          zf::ExtractionInstance inst = zf::instance_from_json(in.at("instance"));
          zf::SpreadRequest req = zf::request_from_json(in.at("request"));
          std::vector<long> out = zf::extract(inst, req);
          if (!zf::certify(inst, req, out)) throw zf::InternalError("extract_spread: certification failed");
          return out;
        },
        py::arg("payload"), "instance/request JSON in, certified indices out");

  m.def("verify", [](const std::vector<int>& only) {
          auto results = zf::run_acceptance(nullptr, only);
          py::list out;
          for (const auto& r : results) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(d);
          }
          return out;
        },
        py::arg("only") = std::vector<int>{});
}
