#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "abelian3/asymptotics.hpp"
#include "abelian3/polynomial.hpp"
#include "abelian3/rank2.hpp"
#include "abelian3/rank3.hpp"
#include "abelian3/typecounts.hpp"
#include "abelian3/verify.hpp"

namespace py = pybind11;
using namespace abelian3;

namespace {

// 128-bit values cross into Python through their decimal form.
py::int_ to_py(u128 v) { return py::int_(py::str(to_string(v))); }
py::int_ to_py(i128 v) { return py::int_(py::str(to_string(v))); }

u128 from_py(const py::int_& v) { return parse_u128(py::str(v)); }

py::dict polynomial_record(const IntPolynomial& poly) {
  py::dict d;
  d["text"] = to_string(poly);
  d["coefficients"] = poly.coefficients();
  return d;
}

Partition partition(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

py::list to_py_list(const std::vector<i128>& values) {
  py::list out;
  for (i128 v : values) out.append(to_py(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroups of Z_m x Z_n x Z_r";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::overflow_error& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const std::length_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("count", [](u64 a, u64 b, u64 c) { return to_py(count_total({a, b, c})); },
        py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("count_direct",
        [](u64 a, u64 b, u64 c) { return to_py(count_total_direct({a, b, c})); },
        py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("count_by_order",
        [](u64 a, u64 b, u64 c, const py::int_& order) {
          return to_py(count_by_order({a, b, c}, from_py(order)));
        },
        py::arg("m"), py::arg("n"), py::arg("r"), py::arg("order"));
  m.def("count_cyclic", [](u64 a, u64 b, u64 c) { return to_py(count_cyclic({a, b, c})); },
        py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("count_rank2", [](u64 a, u64 b) { return to_py(count_rank2(a, b)); }, py::arg("m"),
        py::arg("n"));

  m.def("enumerate",
        [](u64 a, u64 b, u64 c) {
          const Group3 g{a, b, c};
          py::list out;
          for_each_sextuple(g, [&](const Sextuple& sx) {
            const SubgroupBasis3 basis = materialize(sx, g);
            py::dict d;
            d["sextuple"] = py::make_tuple(sx.a, sx.b, sx.c, sx.t, sx.w, sx.z);
            d["basis"] = py::make_tuple(basis.a, basis.s, basis.u, basis.b, basis.v, basis.c);
            d["order"] = to_py(basis.order());
            out.append(std::move(d));
          });
          return out;
        },
        py::arg("m"), py::arg("n"), py::arg("r"),
        "Subgroups as sextuples (a, b, c, t, w, z) with their bases.");
  m.def("subgroup_elements",
        [](u64 a, u64 b, u64 c, std::array<u64, 6> sx, u64 bound) {
          const Group3 g{a, b, c};
          const auto basis = materialize(Sextuple{sx[0], sx[1], sx[2], sx[3], sx[4], sx[5]}, g);
          return subgroup_elements(basis, bound).elements;
        },
        py::arg("m"), py::arg("n"), py::arg("r"), py::arg("sextuple"),
        py::arg("bound") = kDefaultElementBound);

  m.def("symbolic_count",
        [](unsigned a, unsigned b, unsigned c) { return polynomial_record(symbolic_count(a, b, c)); },
        py::arg("nu1"), py::arg("nu2"), py::arg("nu3"));
  m.def("general_form", [](unsigned nu) { return polynomial_record(general_form(nu)); },
        py::arg("nu"));
  m.def("gaussian_binomial",
        [](unsigned r, unsigned k) { return polynomial_record(gaussian_binomial(r, k)); },
        py::arg("r"), py::arg("k"));
  m.def("type_count",
        [](std::vector<unsigned> lambda, std::vector<unsigned> mu) {
          return polynomial_record(type_count(partition(std::move(lambda)), partition(std::move(mu))));
        },
        py::arg("lam"), py::arg("mu"));
  m.def("h_closed_form", [](unsigned nu) { return polynomial_record(h_closed_form(nu)); },
        py::arg("nu"));

  m.def("sieve_s", [](u64 limit) { return to_py_list(sieve_s(limit)); }, py::arg("limit"));
  m.def("h_values", [](u64 limit) { return to_py_list(h_values(limit)); }, py::arg("limit"));
  m.def("dirichlet_constants",
        [](u64 prime_limit, unsigned tail_terms) {
          const DirichletValues v = H3_and_H3prime(prime_limit, tail_terms);
          py::dict d;
          d["H3"] = v.H3;
          d["H3_error"] = v.H3_error;
          d["H3prime"] = v.H3prime;
          d["H3prime_error"] = v.H3prime_error;
          return d;
        },
        py::arg("prime_limit") = 100000, py::arg("tail_terms") = 16);
  m.def("main_term", &main_term, py::arg("x"), py::arg("H3"), py::arg("H3prime"));
  m.def("asymptotic",
        [](std::vector<u64> xs, u64 prime_limit, unsigned tail_terms) {
          const DirichletValues v = H3_and_H3prime(prime_limit, tail_terms);
          py::list out;
          for (const auto& r : asymptotic_reports(xs, v)) {
            py::dict d;
            d["x"] = r.x;
            d["exact_sum"] = to_py(r.exact_sum);
            d["main_term"] = r.main_term;
            d["relative_error"] = r.relative_error;
            d["error_exponent_estimate"] = r.error_exponent_estimate;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("xs"), py::arg("prime_limit") = 100000, py::arg("tail_terms") = 16);

  m.def("verify",
        [](u64 max_order) {
          const VerifyReport report = verify_up_to(max_order);
          py::list failures;
          for (const auto& f : report.failures) {
            failures.append(py::make_tuple(py::make_tuple(f.group.m, f.group.n, f.group.r),
                                           f.problems));
          }
          py::dict d;
          d["passed"] = report.passed();
          d["groups_checked"] = report.groups_checked;
          d["subgroups_compared"] = report.subgroups_compared;
          d["failures"] = failures;
          return d;
        },
        py::arg("max_order") = 120);
}
