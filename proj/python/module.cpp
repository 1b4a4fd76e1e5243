#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "wrt/lens.hpp"

namespace py = pybind11;
using namespace wrt;

namespace {

py::object rational_to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(numerator(r).str() + "/" + denominator(r).str());
}

py::dict result_to_dict(const InvariantResult& res) {
  py::dict d;
  d["p"] = res.p;
  d["q"] = res.q;
  d["r"] = res.r;
  d["cf"] = res.cf;
  d["phi"] = res.phi;
  d["weight"] = res.weight;
  d["method"] = res.method;
  d["value"] = std::complex<double>(res.numeric);
  if (res.exact) {
    py::object loads = py::module_::import("json").attr("loads");
    d["exact"] = loads(res.exact->to_json());
  }
  return d;
}

ContinuedFraction make_cf(const std::vector<long long>& entries) {
  return ContinuedFraction(entries);
}

}  // namespace

PYBIND11_MODULE(wrtlens, m) {
  m.doc() =
      "Witten-Reshetikhin-Turaev SO(3) invariants of lens spaces: exact "
      "cyclotomic and floating-point evaluation of the torus representation "
      "of SL(2,Z), continued fractions, Dedekind sums and the two invariant "
      "paths.";

  m.def(
      "cf_expand",
      [](long long num, long long den) {
        return cf_expand(num, den).entries();
      },
      py::arg("num"), py::arg("den"),
      "Normal-form continued fraction of num/den (|num/den| != 1).");

  m.def(
      "cf_for_lens",
      [](long long p, long long q) {
        auto [cf, u] = cf_for_lens(p, q);
        return py::make_tuple(cf.entries(),
                              py::make_tuple(u.a, u.b, u.c, u.d));
      },
      py::arg("p"), py::arg("q"),
      "Lens expansion of -p/q plus trailing zero, and the gluing matrix.");

  m.def(
      "nested_value",
      [](const std::vector<long long>& cf) {
        return rational_to_fraction(make_cf(cf).nested_value());
      },
      py::arg("cf"), "Nested-fraction value a_t/c_t as a Fraction.");

  m.def(
      "linking_data",
      [](const std::vector<long long>& cf) {
        LinkingData link = linking_data(make_cf(cf));
        py::dict d;
        d["diagonal"] = link.diagonal;
        d["trace"] = link.trace;
        d["signature"] = link.signature;
        d["weight"] = link.weight;
        return d;
      },
      py::arg("cf"));

  m.def(
      "dedekind_sum",
      [](long long q, long long p) {
        return rational_to_fraction(dedekind_sum(q, p));
      },
      py::arg("q"), py::arg("p"), "Dedekind sum s(q, p) as a Fraction.");

  m.def(
      "rademacher_phi",
      [](long long a, long long b, long long c, long long d) {
        return rational_to_fraction(rademacher_phi(SL2Matrix{a, b, c, d}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

  m.def(
      "rademacher_phi_cf",
      [](const std::vector<long long>& cf) {
        return rademacher_phi_cf(make_cf(cf));
      },
      py::arg("cf"));

  m.def(
      "gauss_reciprocity",
      [](long long n, long long mm, long long psi_num, long long psi_den) {
        auto [lhs, rhs] =
            gauss_reciprocity({n, mm, ratio(psi_num, psi_den)});
        return py::make_tuple(lhs, rhs);
      },
      py::arg("n"), py::arg("m"), py::arg("psi_num") = 0,
      py::arg("psi_den") = 1,
      "Both sides of the one-dimensional reciprocity identity.");

  m.def(
      "rep_matrix",
      [](long long r, const std::vector<long long>& cf) {
        RepMatrix<NumericBackend> mat =
            rep_bruteforce<NumericBackend>(r, make_cf(cf));
        std::vector<std::vector<std::complex<double>>> rows;
        for (long long j = 1; j <= mat.dim; ++j) {
          std::vector<std::complex<double>> row;
          for (long long l = 1; l <= mat.dim; ++l) row.push_back(mat.at(j, l));
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("r"), py::arg("cf"),
      "The matrix of the word T^{m_t} S ... T^{m_1} S (numeric).");

  m.def(
      "rep_closed_entry",
      [](long long r, const std::vector<long long>& cf, long long j,
         long long l) {
        return rep_closed_entry<NumericBackend>(r, make_cf(cf), j, l);
      },
      py::arg("r"), py::arg("cf"), py::arg("j"), py::arg("l"),
      "Closed Gauss-sum form of the word-matrix entry (j, l).");

  m.def(
      "im_sum",
      [](long long r, const std::vector<long long>& cf, long long j_out,
         long long j_in, const std::string& mode) {
        ImMode im_mode = mode == "direct" ? ImMode::kDirect : ImMode::kClosed;
        return im_sum<NumericBackend>(r, make_cf(cf), j_out, j_in, im_mode);
      },
      py::arg("r"), py::arg("cf"), py::arg("j_out"), py::arg("j_in"),
      py::arg("mode") = "direct");

  m.def(
      "invariant",
      [](long long p, long long q, long long r, const std::string& method,
         bool exact) {
        py::list results;
        auto run = [&](const char* which) {
          InvariantResult res;
          if (exact) {
            res = (std::string(which) == "oracle")
                      ? wrt_oracle<ExactBackend>(p, q, r)
                      : wrt_closed<ExactBackend>(p, q, r);
          } else {
            res = (std::string(which) == "oracle")
                      ? wrt_oracle<NumericBackend>(p, q, r)
                      : wrt_closed<NumericBackend>(p, q, r);
          }
          results.append(result_to_dict(res));
        };
        if (method == "both" || method == "oracle") run("oracle");
        if (method == "both" || method == "closed") run("closed");
        if (results.size() == 1) return py::object(results[0]);
        return py::object(results);
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("method") = "both",
      py::arg("exact") = false,
      "The invariant <L(p,q),0>_r; method oracle|closed|both.");

  m.def(
      "verify",
      [](long long p_max, const std::vector<long long>& r_list, bool exact,
         double tolerance) {
        VerifyReport rep = verify_grid(
            p_max, r_list, exact ? BackendKind::kExact : BackendKind::kNumeric,
            tolerance);
        py::dict d;
        d["pass"] = rep.pass;
        d["lens_count"] = rep.lens_count;
        d["max_deviation"] = rep.max_deviation;
        d["max_homeo_deviation"] = rep.max_homeo_deviation;
        d["all_phi_ok"] = rep.all_phi_ok;
        if (rep.exact) d["all_exact_equal"] = rep.all_exact_equal;
        d["summary"] = rep.summary();
        return d;
      },
      py::arg("p_max"), py::arg("r_list"), py::arg("exact") = false,
      py::arg("tolerance") = 1e-9,
      "Cross-path verification over the (p, q, r) grid.");

  m.def(
      "e_frac",
      [](long long a, long long n) {
        CyclotomicNumber x = e_frac(a, n);
        py::object loads = py::module_::import("json").attr("loads");
        py::dict d;
        d["exact"] = loads(x.to_json());
        ComplexApprox em = embed(x);
        d["value"] = std::complex<double>(em.re, em.im);
        return d;
      },
      py::arg("a"), py::arg("n"), "Exact root of unity e(a/n).");

  m.def(
      "sqrt_exact",
      [](unsigned long long n) {
        CyclotomicNumber x = sqrt_exact(n);
        py::object loads = py::module_::import("json").attr("loads");
        py::dict d;
        d["exact"] = loads(x.to_json());
        ComplexApprox em = embed(x);
        d["value"] = std::complex<double>(em.re, em.im);
        return d;
      },
      py::arg("n"), "Exact positive square root of n in cyclotomic form.");
}
