#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/extremal.hpp"
#include "hassedeg/reconstruct.hpp"
#include "hassedeg/stats.hpp"
#include "hassedeg/verify.hpp"

namespace py = pybind11;
using namespace hassedeg;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Permutation to_perm(const std::vector<int>& values) { return Permutation::from_one_line(values); }

std::vector<int> to_list(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

std::vector<std::vector<int>> to_lists(const std::vector<Permutation>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(to_list(p));
  return out;
}

Pairs to_pairs(const std::vector<Transposition>& ts) {
  Pairs out;
  for (const auto& t : ts) out.emplace_back(t.a, t.b);
  return out;
}

std::vector<Transposition> from_pairs(const Pairs& pairs) {
  std::vector<Transposition> out;
  for (auto [x, y] : pairs) out.push_back(Transposition::of(x, y));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degree statistics in the Hasse diagram of the strong Bruhat order";

  py::register_exception<ValidationFailure>(m, "ValidationFailure", PyExc_ValueError);

  m.def("inverse", [](const std::vector<int>& p) { return to_list(inverse(to_perm(p))); });
  m.def("inversion_number", [](const std::vector<int>& p) { return inversion_number(to_perm(p)); });
  m.def("degrees", [](const std::vector<int>& p) {
    const auto d = total_degree(to_perm(p));
    py::dict out;
    out["down"] = d.down;
    out["up"] = d.up;
    out["total"] = d.total;
    return out;
  });
  m.def("covered_by", [](const std::vector<int>& p) { return to_lists(covered_by(to_perm(p))); });
  m.def("covers_of", [](const std::vector<int>& p) { return to_lists(covers_of(to_perm(p))); });
  m.def("strong_descent_set",
        [](const std::vector<int>& p, int r) { return to_pairs(strong_descent_set(to_perm(p), r).members()); },
        py::arg("perm"), py::arg("r") = 1);
  m.def("reconstruct",
        [](int n, const Pairs& members) { return to_list(reconstruct(n, StrongDescentSet(n, 1, from_pairs(members)))); },
        py::arg("n"), py::arg("members"));
  m.def("is_realizable", [](int n, const Pairs& members) { return is_realizable(n, from_pairs(members)); });

  m.def("max_down_degree", &max_down_degree);
  m.def("max_total_degree", &max_total_degree);
  m.def("extremal_down_permutations", [](int n) { return to_lists(extremal_down_permutations(n)); });
  m.def("extremal_total_permutations", [](int n) { return to_lists(extremal_total_permutations(n)); });
  m.def("brute_force_max",
        [](int n, const std::string& stat, int jobs) {
          py::gil_scoped_release release;
          const auto r = brute_force_max(n, Statistic::parse(stat), jobs);
          return std::make_pair(r.value, to_lists(r.attaining));
        },
        py::arg("n"), py::arg("stat") = "down", py::arg("jobs") = 0);

  // Fractions cross the boundary as "p/q" strings; the Python package wraps them.
  m.def("expected_down_degree", [](int n) { return expected_down_degree(n).to_string(); });
  m.def("triple_sum_expectation", [](int n) { return triple_sum_expectation(n).to_string(); });
  m.def("distribution",
        [](int n, const std::string& stat, int jobs) {
          py::gil_scoped_release release;
          return distribution(n, Statistic::parse(stat), jobs).counts;
        },
        py::arg("n"), py::arg("stat") = "down", py::arg("jobs") = 0);
  m.def("monte_carlo_mean",
        [](int n, const std::string& stat, std::uint64_t samples, std::uint64_t seed, int jobs) {
          MonteCarloEstimate e;
          {
            py::gil_scoped_release release;
            e = monte_carlo_mean(n, Statistic::parse(stat), samples, seed, jobs);
          }
          py::dict out;
          out["mean"] = e.mean;
          out["standard_error"] = e.standard_error;
          out["samples"] = e.samples;
          return out;
        },
        py::arg("n"), py::arg("stat") = "down", py::arg("samples") = 100000, py::arg("seed") = 1,
        py::arg("jobs") = 0);
  m.def("verify",
        [](int max_n, std::vector<int> sampled_n, std::uint64_t samples, std::uint64_t seed, int jobs) {
          VerifyOptions o;
          o.max_n = max_n;
          o.sampled_n = std::move(sampled_n);
          o.samples = samples;
          o.seed = seed;
          o.jobs = jobs;
          VerifyReport report;
          {
            py::gil_scoped_release release;
            report = run_verification(o);
          }
          return std::make_pair(report.all_passed(), report.render(false));
        },
        py::arg("max_n") = 6, py::arg("sampled_n") = std::vector<int>{40, 100},
        py::arg("samples") = 10000, py::arg("seed") = 1, py::arg("jobs") = 0);
}
