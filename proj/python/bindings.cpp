#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhindex/cycmap.hpp"
#include "dhindex/dh.hpp"
#include "dhindex/ffpoly.hpp"
#include "dhindex/modarith.hpp"

namespace py = pybind11;
using namespace dhindex;

PYBIND11_MODULE(_dhindex, m) {
  m.doc() = "index computations for Diffie-Hellman mappings on cyclic groups";

  py::class_<PrimePower>(m, "PrimePower")
      .def_readonly("prime", &PrimePower::prime)
      .def_readonly("exponent", &PrimePower::exponent)
      .def("__repr__", [](const PrimePower& pp) {
        return "(" + std::to_string(pp.prime) + ", " +
               std::to_string(pp.exponent) + ")";
      });

  py::class_<Factorization>(m, "Factorization")
      .def_readonly("n", &Factorization::n)
      .def_readonly("factors", &Factorization::factors);

  py::class_<ResidueSet>(m, "ResidueSet")
      .def_readonly("modulus", &ResidueSet::modulus)
      .def_readonly("residues", &ResidueSet::residues)
      .def("__len__", [](const ResidueSet& s) { return s.residues.size(); });

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__repr__", [](const Rational& r) {
        return std::to_string(r.num) + "/" + std::to_string(r.den);
      });

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("factorize", &factorize, py::arg("n"));
  m.def("divisors", &divisors, py::arg("factorization"));
  m.def("euler_phi", &euler_phi, py::arg("factorization"));
  m.def("tau", &tau, py::arg("factorization"));
  m.def("crt", &crt, py::arg("parts"));
  m.def("linear_congruence", &linear_congruence, py::arg("a"), py::arg("b"),
        py::arg("n"));
  m.def("sqrt_mod_prime", &sqrt_mod_prime, py::arg("a"), py::arg("p"));
  m.def("solve_quadratic", &solve_quadratic, py::arg("n"), py::arg("b"),
        py::arg("c"));

  py::class_<GroupCtx>(m, "GroupCtx")
      .def(py::init<u64>(), py::arg("n"))
      .def_readonly("n", &GroupCtx::n)
      .def_readonly("divisors", &GroupCtx::divs);

  py::class_<ExpMap>(m, "ExpMap")
      .def(py::init([](u64 n, std::vector<u64> table) {
             return ExpMap{n, std::move(table)};
           }),
           py::arg("n"), py::arg("table"))
      .def_readonly("n", &ExpMap::n)
      .def_readonly("table", &ExpMap::table)
      .def("__eq__", [](const ExpMap& a, const ExpMap& b) { return a == b; });

  py::class_<BiExpMap>(m, "BiExpMap")
      .def(py::init([](u64 n, std::vector<std::vector<u64>> table) {
             return BiExpMap{n, std::move(table)};
           }),
           py::arg("n"), py::arg("table"))
      .def_readonly("n", &BiExpMap::n)
      .def_readonly("table", &BiExpMap::table);

  py::class_<CyclotomicMap>(m, "CyclotomicMap")
      .def(py::init([](u64 n, u64 ell, u64 r, std::vector<u64> mult) {
             return CyclotomicMap{n, ell, r, std::move(mult)};
           }),
           py::arg("n"), py::arg("ell"), py::arg("r"), py::arg("mult"))
      .def_readonly("n", &CyclotomicMap::n)
      .def_readonly("ell", &CyclotomicMap::ell)
      .def_readonly("r", &CyclotomicMap::r)
      .def_readonly("mult", &CyclotomicMap::mult);

  py::class_<BiCyclotomicMap>(m, "BiCyclotomicMap")
      .def(py::init([](u64 n, u64 ell1, u64 ell2, u64 r1, u64 r2,
                       std::vector<std::vector<u64>> mult) {
             return BiCyclotomicMap{n, ell1, ell2, r1, r2, std::move(mult)};
           }),
           py::arg("n"), py::arg("ell1"), py::arg("ell2"), py::arg("r1"),
           py::arg("r2"), py::arg("mult"))
      .def_readonly("n", &BiCyclotomicMap::n)
      .def_readonly("ell1", &BiCyclotomicMap::ell1)
      .def_readonly("ell2", &BiCyclotomicMap::ell2)
      .def_readonly("r1", &BiCyclotomicMap::r1)
      .def_readonly("r2", &BiCyclotomicMap::r2)
      .def_readonly("mult", &BiCyclotomicMap::mult);

  py::class_<IndexWitness>(m, "IndexWitness")
      .def_readonly("n", &IndexWitness::n)
      .def_readonly("ell", &IndexWitness::ell)
      .def_readonly("r", &IndexWitness::r)
      .def_readonly("mult", &IndexWitness::mult)
      .def_property_readonly("canonical_r", &IndexWitness::canonical_r)
      .def("to_map", &IndexWitness::to_map)
      .def("__repr__", [](const IndexWitness& w) {
        return "IndexWitness(ell=" + std::to_string(w.ell) +
               ", r=" + std::to_string(w.canonical_r()) + ")";
      });

  py::class_<BiIndexWitness>(m, "BiIndexWitness")
      .def_readonly("n", &BiIndexWitness::n)
      .def_readonly("ell1", &BiIndexWitness::ell1)
      .def_readonly("ell2", &BiIndexWitness::ell2)
      .def_readonly("r1", &BiIndexWitness::r1)
      .def_readonly("r2", &BiIndexWitness::r2)
      .def_readonly("mult", &BiIndexWitness::mult)
      .def("to_map", &BiIndexWitness::to_map);

  m.def("coset_of", &coset_of, py::arg("x"), py::arg("ell"), py::arg("n"));
  m.def("eval_cyclotomic", &eval_cyclotomic, py::arg("map"), py::arg("x"));
  m.def("eval_bicyclotomic", &eval_bicyclotomic, py::arg("map"), py::arg("x"),
        py::arg("y"));
  m.def("to_expmap", &to_expmap, py::arg("map"));
  m.def("bi_to_expmap", &bi_to_expmap, py::arg("map"));
  m.def("representable_at", &representable_at, py::arg("f"), py::arg("ell"));
  m.def("compute_index", &compute_index, py::arg("f"));
  m.def("compute_index_oracle", &compute_index_oracle, py::arg("f"));
  m.def("bi_representable_at", &bi_representable_at, py::arg("f"),
        py::arg("ell1"), py::arg("ell2"));
  m.def("minimal_index_pairs", &minimal_index_pairs, py::arg("f"));
  m.def("agreement_count", &agreement_count, py::arg("f"), py::arg("g"));
  m.def("window_agreement", &window_agreement, py::arg("f"), py::arg("g"),
        py::arg("window_start"), py::arg("window_len"));
  m.def("rectangle_profile", &rectangle_profile, py::arg("f"), py::arg("g"));

  py::class_<UniCoincidenceReport>(m, "UniCoincidenceReport")
      .def_readonly("n", &UniCoincidenceReport::n)
      .def_readonly("r", &UniCoincidenceReport::r)
      .def_readonly("a", &UniCoincidenceReport::a)
      .def_readonly("points", &UniCoincidenceReport::points)
      .def_readonly("count", &UniCoincidenceReport::count)
      .def_readonly("bound", &UniCoincidenceReport::bound)
      .def_readonly("ratio", &UniCoincidenceReport::ratio);

  py::class_<BiCoincidenceReport>(m, "BiCoincidenceReport")
      .def_readonly("n", &BiCoincidenceReport::n)
      .def_readonly("r1", &BiCoincidenceReport::r1)
      .def_readonly("r2", &BiCoincidenceReport::r2)
      .def_readonly("a", &BiCoincidenceReport::a)
      .def_readonly("points", &BiCoincidenceReport::points)
      .def_readonly("count", &BiCoincidenceReport::count)
      .def_readonly("bound", &BiCoincidenceReport::bound);

  py::class_<DivisorSumIdentity>(m, "DivisorSumIdentity")
      .def_readonly("n", &DivisorSumIdentity::n)
      .def_readonly("lhs", &DivisorSumIdentity::lhs)
      .def_readonly("rhs", &DivisorSumIdentity::rhs)
      .def_readonly("tau_bound", &DivisorSumIdentity::tau_bound)
      .def_readonly("equal", &DivisorSumIdentity::equal)
      .def_readonly("within_tau_bound", &DivisorSumIdentity::within_tau_bound);

  m.def("dh_uni", &dh_uni, py::arg("n"));
  m.def("dh_bi", &dh_bi, py::arg("n"));
  m.def("thm1_witness", &thm1_witness, py::arg("n"));
  m.def("uni_coincidences", &uni_coincidences, py::arg("n"), py::arg("r"),
        py::arg("a"));
  m.def("max_coincidences_for_index", &max_coincidences_for_index,
        py::arg("n"), py::arg("ell"));
  m.def("bi_coincidences", &bi_coincidences, py::arg("n"), py::arg("r1"),
        py::arg("r2"), py::arg("a"));
  m.def("divisor_sum_identity", &divisor_sum_identity, py::arg("n"));
  m.def("bi_from_uni", &bi_from_uni, py::arg("n"), py::arg("a"), py::arg("b"));

  py::class_<PrimeFieldCtx>(m, "PrimeFieldCtx")
      .def_readonly("p", &PrimeFieldCtx::p)
      .def_readonly("n", &PrimeFieldCtx::n)
      .def_readonly("gamma", &PrimeFieldCtx::gamma)
      .def_readonly("subgroup", &PrimeFieldCtx::subgroup);

  py::class_<Term>(m, "Term")
      .def_readonly("degree", &Term::degree)
      .def_readonly("coeff", &Term::coeff);

  py::class_<SparsePoly>(m, "SparsePoly")
      .def(py::init([](std::vector<std::pair<u64, u64>> terms) {
             SparsePoly poly;
             for (auto [d, c] : terms) poly.terms.push_back({d, c});
             return poly;
           }),
           py::arg("terms"))
      .def_readonly("terms", &SparsePoly::terms)
      .def("is_zero", &SparsePoly::is_zero)
      .def("degree", &SparsePoly::degree)
      .def("__eq__",
           [](const SparsePoly& a, const SparsePoly& b) { return a == b; });

  py::class_<SubgroupZeros>(m, "SubgroupZeros")
      .def_readonly("count", &SubgroupZeros::count)
      .def_readonly("exponents", &SubgroupZeros::exponents);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("observed", &BoundReport::observed)
      .def_readonly("bound", &BoundReport::bound)
      .def_readonly("pass_", &BoundReport::pass);

  py::class_<WindowSpec>(m, "WindowSpec")
      .def_readonly("start", &WindowSpec::start)
      .def_readonly("len", &WindowSpec::len)
      .def_readonly("defect", &WindowSpec::defect);

  py::class_<Thm5Report>(m, "Thm5Report")
      .def_readonly("ell", &Thm5Report::ell)
      .def_readonly("best_window", &Thm5Report::best_window)
      .def_readonly("bound", &Thm5Report::bound)
      .def_readonly("bound_pass", &Thm5Report::bound_pass)
      .def_readonly("fzero_checked", &Thm5Report::fzero_checked)
      .def_readonly("fzero_count", &Thm5Report::fzero_count)
      .def_readonly("fzero_required", &Thm5Report::fzero_required)
      .def_readonly("fzero_pass", &Thm5Report::fzero_pass)
      .def_readonly("pass_", &Thm5Report::pass);

  py::class_<Thm6Report>(m, "Thm6Report")
      .def_readonly("observed", &Thm6Report::observed)
      .def_readonly("bound", &Thm6Report::bound)
      .def_readonly("minimal_pairs", &Thm6Report::minimal_pairs)
      .def_readonly("pass_", &Thm6Report::pass);

  py::class_<VandermondeWitness>(m, "VandermondeWitness")
      .def_readonly("m", &VandermondeWitness::m)
      .def_readonly("v1_nodes_distinct", &VandermondeWitness::v1_nodes_distinct)
      .def_readonly("v2_nodes_distinct", &VandermondeWitness::v2_nodes_distinct)
      .def_readonly("g_nodes_distinct", &VandermondeWitness::g_nodes_distinct)
      .def_readonly("v1_invertible", &VandermondeWitness::v1_invertible)
      .def_readonly("v2_invertible", &VandermondeWitness::v2_invertible)
      .def_readonly("g_invertible", &VandermondeWitness::g_invertible)
      .def("consistent", &VandermondeWitness::consistent);

  m.def("make_ctx", &make_ctx, py::arg("p"), py::arg("n"));
  m.def("interpolate_subgroup", &interpolate_subgroup, py::arg("ctx"),
        py::arg("values"));
  m.def("cyclotomic_to_poly", &cyclotomic_to_poly, py::arg("map"),
        py::arg("ctx"));
  m.def("eval_poly", &eval_poly, py::arg("poly"), py::arg("x"), py::arg("p"));
  m.def("weight", &weight, py::arg("poly"));
  m.def("subgroup_zeros", &subgroup_zeros, py::arg("poly"), py::arg("ctx"));
  m.def("weight_zero_bound", &weight_zero_bound, py::arg("poly"),
        py::arg("ctx"));
  m.def("build_F", &build_F, py::arg("h"), py::arg("r"), py::arg("ctx"));
  m.def("thm5_check", &thm5_check, py::arg("f"), py::arg("ctx"));
  m.def("thm6_check", &thm6_check, py::arg("f"), py::arg("n"));
  m.def("vandermonde_witness", &vandermonde_witness, py::arg("ctx"),
        py::arg("u_list"), py::arg("window_start"), py::arg("ell1"),
        py::arg("ell2"), py::arg("r1"), py::arg("r2"));
}
