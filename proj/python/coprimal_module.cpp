// Python bindings for the coprimal core. Exact integers cross the boundary
// as Python ints (via decimal strings), exact rationals as
// fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coprimal/asymptotics.hpp"
#include "coprimal/counting.hpp"
#include "coprimal/partitions.hpp"
#include "coprimal/polynomials.hpp"

namespace py = pybind11;
using namespace coprimal;

namespace {

py::int_ to_py(const BigInt& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

CoprimalityConstraint make_constraint(const std::string& family, int k,
                                      int param) {
  if (family == "R") return CoprimalityConstraint::all_coprime(k);
  if (family == "A") return CoprimalityConstraint::split(k, param);
  if (family == "B") return CoprimalityConstraint::t_wise(k, param);
  throw std::invalid_argument("family must be 'R', 'A' or 'B'");
}

WeightVector make_weights(const std::vector<std::uint64_t>& a) {
  return WeightVector(a);
}

py::dict product_dict(const EulerProductResult& r) {
  py::dict d;
  d["value"] = static_cast<double>(r.value);
  d["prime_bound"] = r.prime_bound;
  d["tail_bound_estimate"] = static_cast<double>(r.tail_bound_estimate);
  d["factor_count"] = r.factor_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(coprimal, m) {
  m.doc() =
      "Exact and asymptotic counting of k-compositions of n under "
      "coprimality constraints";

  // number theory
  m.def("primes_up_to", [](std::uint64_t limit) { return primes_up_to(limit); },
        py::arg("limit"));
  m.def("factorize",
        [](std::uint64_t n) { return factorize(n).entries; },
        py::arg("n"), "Ordered list of (prime, exponent) pairs");
  m.def("mobius", [](std::uint64_t n) { return mobius(n); }, py::arg("n"));
  m.def("omega", [](std::uint64_t n) { return omega(n); }, py::arg("n"));
  m.def("divisors", [](std::uint64_t n) { return divisors(n); }, py::arg("n"));
  m.def("jordan_totient",
        [](int t, std::uint64_t n) { return to_py(jordan_totient(t, n)); },
        py::arg("t"), py::arg("n"));
  m.def("stirling_first_signed",
        [](int n, int k) { return to_py(stirling_first_signed(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("binomial",
        [](std::uint64_t n, std::uint64_t k) { return to_py(binomial(n, k)); },
        py::arg("n"), py::arg("k"));

  // restricted partitions
  m.def("count_nonneg",
        [](std::uint64_t n, const std::vector<std::uint64_t>& a) {
          return to_py(count_nonneg(n, make_weights(a)));
        },
        py::arg("n"), py::arg("weights"));
  m.def("count_positive",
        [](std::uint64_t n, const std::vector<std::uint64_t>& a) {
          return to_py(count_positive(n, make_weights(a)));
        },
        py::arg("n"), py::arg("weights"));
  m.def("partition_main_term",
        [](std::uint64_t n, const std::vector<std::uint64_t>& a) {
          return to_fraction(main_term(n, make_weights(a)));
        },
        py::arg("n"), py::arg("weights"));
  m.def("leading_coeffs",
        [](const std::vector<std::uint64_t>& a) {
          auto [hi, lo] = leading_coeffs(make_weights(a));
          return py::make_tuple(to_fraction(hi), to_fraction(lo));
        },
        py::arg("weights"));
  m.def("quasipoly_check",
        [](const std::vector<std::uint64_t>& a, std::uint64_t n_max) {
          QuasiPolyReport r = quasipoly_check(make_weights(a), n_max);
          py::dict d;
          d["period"] = r.period;
          d["degree"] = r.degree;
          d["max_abs_kth_difference"] = to_py(r.max_abs_kth_difference);
          return d;
        },
        py::arg("weights"), py::arg("n_max"));

  // multiplicative functions
  m.def("theta",
        [](int k, int s, const std::vector<std::uint64_t>& tuple) {
          return theta(k, s, tuple);
        },
        py::arg("k"), py::arg("s"), py::arg("tuple"));
  m.def("rho",
        [](int k, int t, const std::vector<std::uint64_t>& tuple) {
          return rho(k, t, tuple);
        },
        py::arg("k"), py::arg("t"), py::arg("tuple"));
  m.def("lambda_",
        [](int k, int s, const std::vector<std::uint64_t>& tuple) {
          return lambda(k, s, tuple);
        },
        py::arg("k"), py::arg("s"), py::arg("tuple"));
  m.def("psi",
        [](int k, int t, const std::vector<std::uint64_t>& tuple) {
          return psi(k, t, tuple);
        },
        py::arg("k"), py::arg("t"), py::arg("tuple"));
  m.def("convolution_check",
        [](const std::string& family, int k, int param,
           const std::vector<std::uint64_t>& tuple) {
          return convolution_check(make_constraint(family, k, param), tuple);
        },
        py::arg("family"), py::arg("k"), py::arg("param"), py::arg("tuple"));

  // constraint polynomials
  m.def("build_F",
        [](int k, int s) {
          IntegerPolynomial f = build_F(k, s);
          py::list out;
          for (const BigInt& c : f.coeffs()) out.append(to_py(c));
          return out;
        },
        py::arg("k"), py::arg("s"), "Coefficients, ascending degree");
  m.def("build_G",
        [](int k, int t) {
          IntegerPolynomial g = build_G(k, t);
          py::list out;
          for (const BigInt& c : g.coeffs()) out.append(to_py(c));
          return out;
        },
        py::arg("k"), py::arg("t"), "Coefficients, ascending degree");

  // counting
  m.def("total_compositions",
        [](std::uint64_t n, int k) { return to_py(total_compositions(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("brute_count",
        [](std::uint64_t n, const std::string& family, int k, int param,
           std::uint64_t work_budget) {
          WorkBudget budget;
          budget.limit = work_budget;
          return to_py(
              brute_count(n, make_constraint(family, k, param), budget));
        },
        py::arg("n"), py::arg("family"), py::arg("k"), py::arg("param") = 0,
        py::arg("work_budget") = 100'000'000ull);
  m.def("mobius_R",
        [](std::uint64_t n, int k) { return to_py(mobius_R(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("jordan_R",
        [](std::uint64_t n, int k) { return to_py(jordan_R(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("a_coefficients",
        [](int k) {
          py::list out;
          for (const BigInt& a : a_coefficients(k)) out.append(to_py(a));
          return out;
        },
        py::arg("k"));
  m.def("identity_A",
        [](std::uint64_t n, int k, int s, std::uint64_t work_budget) {
          WorkBudget budget;
          budget.limit = work_budget;
          return to_py(identity_A(n, k, s, budget));
        },
        py::arg("n"), py::arg("k"), py::arg("s"),
        py::arg("work_budget") = 100'000'000ull);
  m.def("identity_B",
        [](std::uint64_t n, int k, int t, std::uint64_t work_budget) {
          WorkBudget budget;
          budget.limit = work_budget;
          return to_py(identity_B(n, k, t, budget));
        },
        py::arg("n"), py::arg("k"), py::arg("t"),
        py::arg("work_budget") = 100'000'000ull);

  // Euler products and main terms
  m.def("constant_C",
        [](int k, int s, std::uint64_t prime_bound, int threads) {
          return product_dict(
              constant_C(k, s, prime_bound, default_table(), threads));
        },
        py::arg("k"), py::arg("s"), py::arg("prime_bound") = 1'000'000ull,
        py::arg("threads") = 1);
  m.def("constant_D",
        [](int k, int t, std::uint64_t prime_bound, int threads) {
          return product_dict(
              constant_D(k, t, prime_bound, default_table(), threads));
        },
        py::arg("k"), py::arg("t"), py::arg("prime_bound") = 1'000'000ull,
        py::arg("threads") = 1);
  m.def("H_at_ones",
        [](int k, int s, std::uint64_t prime_bound) {
          return product_dict(H_at_ones(k, s, prime_bound));
        },
        py::arg("k"), py::arg("s"), py::arg("prime_bound") = 1'000'000ull);
  m.def("L_at_ones",
        [](int k, int t, std::uint64_t prime_bound) {
          return product_dict(L_at_ones(k, t, prime_bound));
        },
        py::arg("k"), py::arg("t"), py::arg("prime_bound") = 1'000'000ull);
  m.def("local_f",
        [](int k, int s, std::uint64_t n) {
          return to_fraction(local_f(k, s, n));
        },
        py::arg("k"), py::arg("s"), py::arg("n"));
  m.def("local_g",
        [](int k, int t, std::uint64_t n) {
          return to_fraction(local_g(k, t, n));
        },
        py::arg("k"), py::arg("t"), py::arg("n"));
  m.def("main_term_A",
        [](std::uint64_t n, int k, int s, std::uint64_t prime_bound) {
          EulerProductResult c = constant_C(k, s, prime_bound);
          return static_cast<double>(main_term_A(n, k, s, c));
        },
        py::arg("n"), py::arg("k"), py::arg("s"),
        py::arg("prime_bound") = 1'000'000ull);
  m.def("main_term_B",
        [](std::uint64_t n, int k, int t, std::uint64_t prime_bound) {
          EulerProductResult d = constant_D(k, t, prime_bound);
          return static_cast<double>(main_term_B(n, k, t, d));
        },
        py::arg("n"), py::arg("k"), py::arg("t"),
        py::arg("prime_bound") = 1'000'000ull);
  m.def("residual_scan",
        [](const std::string& family, int k, int param,
           const std::vector<std::uint64_t>& n_list,
           std::uint64_t work_budget, std::uint64_t prime_bound, int threads) {
          WorkBudget budget;
          budget.limit = work_budget;
          ScanResult scan = residual_scan(make_constraint(family, k, param),
                                          n_list, budget, prime_bound, threads);
          py::list rows;
          for (const ResidualRow& r : scan.rows) {
            py::dict d;
            d["n"] = r.n;
            d["exact"] = to_py(r.exact_count);
            d["main"] = static_cast<double>(r.main_term);
            d["residual"] = static_cast<double>(r.residual);
            d["normalized_residual"] =
                static_cast<double>(r.normalized_residual);
            rows.append(d);
          }
          return py::make_tuple(rows, scan.truncated);
        },
        py::arg("family"), py::arg("k"), py::arg("param"), py::arg("n_list"),
        py::arg("work_budget") = 100'000'000ull,
        py::arg("prime_bound") = 1'000'000ull, py::arg("threads") = 0);
}
