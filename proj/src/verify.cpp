#include "hassedeg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "hassedeg/descent_graphs.hpp"
#include "hassedeg/parallel.hpp"
#include "hassedeg/reconstruct.hpp"
#include "hassedeg/stats.hpp"

namespace hassedeg {

namespace {

// Largest sampled degree for checks that sweep every order r.
constexpr int kAllOrdersSampleCap = 40;
constexpr std::uint64_t kSampleBlock = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Empty string: property holds for p. Otherwise a description of the failure.
using Property = std::function<std::string(const Permutation&)>;

std::string range_text(int lo, int hi) {
  if (hi < lo) return "none";
  if (lo == hi) return "n=" + std::to_string(lo);
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string describe(const Permutation& p, const std::string& what) {
  return p.to_string() + ": " + what;
}

// First failure in lexicographic order over S_n, independent of `jobs`.
std::optional<std::string> first_failure(int n, int jobs, const Property& property) {
  using Found = std::optional<std::string>;
  return reduce_over_ranks<Found>(
      n, jobs, Found{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Found local;
        const std::uint64_t total = factorial(n);
        Permutation p = unrank(n, begin);
        std::vector<int> v(p.values().begin(), p.values().end());
        for (std::uint64_t k = begin; k < std::min(end, total); ++k) {
          std::string why = property(p);
          if (!why.empty()) return Found(describe(p, why));
          if (k + 1 < end) {
            next_lexicographic(v);
            p = detail_unchecked(v);
          }
        }
        return local;
      },
      [](Found& acc, Found&& part) {
        if (!acc && part) acc = std::move(part);
      });
}

Outcome exhaustive(int lo, int hi, int jobs, const Property& property) {
  for (int n = lo; n <= hi; ++n) {
    if (auto failure = first_failure(n, jobs, property)) return {false, *failure};
  }
  return {true, range_text(lo, hi) + " exhaustive"};
}

Outcome sampled(const VerifyOptions& o, const std::string& check, const std::vector<int>& degrees,
                const Property& property) {
  std::ostringstream covered;
  bool first = true;
  for (int n : degrees) {
    const std::uint64_t blocks = (o.samples + kSampleBlock - 1) / kSampleBlock;
    const std::uint64_t base = mix_seed(o.seed ^ name_hash(check), static_cast<std::uint64_t>(n));
    using Found = std::optional<std::string>;
    auto parts = map_blocks<Found>(static_cast<std::size_t>(blocks), o.jobs, [&](std::size_t b) {
      Rng rng(mix_seed(base, b));
      const std::uint64_t count = std::min(kSampleBlock, o.samples - b * kSampleBlock);
      for (std::uint64_t s = 0; s < count; ++s) {
        const Permutation p = random_permutation(n, rng);
        std::string why = property(p);
        if (!why.empty()) return Found(describe(p, why));
      }
      return Found{};
    });
    for (auto& part : parts)
      if (part) return {false, "sampled n=" + std::to_string(n) + " " + *part};
    covered << (first ? "" : ",") << n;
    first = false;
  }
  if (first) return {true, ""};
  return {true, std::to_string(o.samples) + " samples at n=" + covered.str()};
}

Outcome both(Outcome a, const Outcome& b) {
  if (!a.ok) return a;
  if (!b.ok) return b;
  if (b.detail.empty()) return a;
  if (a.detail.empty()) return b;
  a.detail += "; " + b.detail;
  return a;
}

std::vector<int> at_most(const std::vector<int>& degrees, int cap) {
  std::vector<int> out;
  for (int n : degrees)
    if (n <= cap) out.push_back(n);
  return out;
}

template <class T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

class Suite {
 public:
  Suite() = default;

  void add(const std::string& name, const std::string& claim, const std::function<Outcome()>& body) {
    CheckResult result;
    result.name = name;
    result.claim = claim;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome outcome = body();
      result.passed = outcome.ok;
      result.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    report_.checks.push_back(std::move(result));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

}  // namespace

StrongDescentSet descent_set_ignoring_intermediates(const Permutation& p, int r) {
  std::vector<Transposition> members;
  for (int i = 1; i <= p.size(); ++i)
    for (int k = i + 1; k <= p.size(); ++k)
      if (p(i) > p(k)) members.push_back({p(k), p(i)});
  return StrongDescentSet(p.size(), r, std::move(members));
}

std::vector<int> coxeter_lengths_by_bfs(int n) {
  const std::uint64_t total = factorial(n);
  std::vector<int> dist(static_cast<std::size_t>(total), -1);
  std::deque<Permutation> queue;
  const Permutation start = Permutation::identity(n);
  dist[rank(start)] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    const int d = dist[rank(p)];
    for (int i = 1; i < n; ++i) {
      Permutation q = apply_transposition_right(p, Transposition{i, i + 1});
      auto& slot = dist[rank(q)];
      if (slot < 0) {
        slot = d + 1;
        queue.push_back(std::move(q));
      }
    }
  }
  return dist;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::render(bool with_timing) const {
  std::size_t name_width = 0;
  for (const auto& c : checks) name_width = std::max(name_width, c.name.size());
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(name_width))
       << c.name << "  " << c.claim << "  [" << c.detail << "]";
    if (with_timing) os << "  (" << std::fixed << std::setprecision(1) << c.millis << " ms)";
    os << '\n';
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

VerifyReport run_verification(const VerifyOptions& o) {
  if (o.max_n < 1) throw std::out_of_range("max-n must be at least 1");
  if (o.max_n > o.exhaustive_limit) {
    throw std::out_of_range("max-n " + std::to_string(o.max_n) + " exceeds the exhaustive limit " +
                            std::to_string(o.exhaustive_limit));
  }
  const int N = o.max_n;
  const int J = o.jobs;
  const auto& descent = o.descent;
  const auto all_orders_sampled = at_most(o.sampled_n, kAllOrdersSampleCap);
  Suite suite;

  suite.add("length-is-inversions", "inv(p) equals the shortest adjacent-transposition word length",
            [&] {
              const int hi = std::min(N, 5);
              for (int n = 1; n <= hi; ++n) {
                const auto lengths = coxeter_lengths_by_bfs(n);
                std::optional<std::string> bad;
                for_each_permutation(n, [&](const Permutation& p) {
                  if (bad) return;
                  const auto inv = inversion_number(p);
                  if (inv != lengths[rank(p)] || inv != inversion_number_naive(p)) {
                    bad = describe(p, "inv=" + std::to_string(inv) + " bfs=" +
                                          std::to_string(lengths[rank(p)]));
                  }
                });
                if (bad) return Outcome{false, *bad};
              }
              return Outcome{true, range_text(1, hi) + " by breadth-first search"};
            });

  suite.add("ltrm-generating-function",
            "sum over S_t of q^ltrm equals prod (q+k-1); mean ltrm is H_t", [&] {
              const int hi = std::min(N, 7);
              for (int t = 1; t <= hi; ++t) {
                std::vector<std::uint64_t> counts(t + 1, 0);
                for_each_permutation(t, [&](const Permutation& p) { ++counts[ltr_maxima(p)]; });
                const auto expected = ltrm_generating_coefficients(t);
                if (counts != expected) return Outcome{false, "coefficients differ at t=" + std::to_string(t)};
                mpz_class weighted = 0;
                for (int k = 0; k <= t; ++k) weighted += mpz_class(static_cast<unsigned long>(counts[k])) * k;
                const ExactRational mean(mpq_class(weighted, mpz_class(static_cast<unsigned long>(factorial(t)))));
                if (!(mean == expected_ltrm(t))) {
                  return Outcome{false, "mean ltrm at t=" + std::to_string(t) + " is " + mean.to_string()};
                }
              }
              return Outcome{true, "t=1.." + std::to_string(hi) + " exhaustive"};
            });

  suite.add("cover-criterion",
            "covers are exactly the +-1 length changes with no intermediate value between",
            [&] {
              return exhaustive(1, std::min(N, 6), J, [](const Permutation& p) -> std::string {
                std::set<Permutation> down, up;
                for (int a = 1; a <= p.size(); ++a) {
                  for (int b = a + 1; b <= p.size(); ++b) {
                    const Transposition t{a, b};
                    const auto delta = length_change(t, p);
                    if (delta == -1) down.insert(apply_transposition_left(t, p));
                    if (delta == 1) up.insert(apply_transposition_left(t, p));
                  }
                }
                const auto below = covered_by(p);
                const auto above = covers_of(p);
                if (std::set<Permutation>(below.begin(), below.end()) != down || below.size() != down.size()) {
                  return "covered_by disagrees with the length oracle";
                }
                if (std::set<Permutation>(above.begin(), above.end()) != up || above.size() != up.size()) {
                  return "covers_of disagrees with the length oracle";
                }
                for (const auto& q : below)
                  if (!is_cover(p, q)) return "is_cover rejects " + q.to_string();
                if (static_cast<std::size_t>(down_degree(p)) != down.size()) return "down degree mismatch";
                if (static_cast<std::size_t>(up_degree(p)) != up.size()) return "up degree mismatch";
                return {};
              });
            });

  suite.add("descent-set-oracle",
            "t in D^(r)(p) iff 0 > l(tp) - l(p) > -2r, for every order r", [&] {
              return exhaustive(2, std::min(N, 7), J, [&](const Permutation& p) -> std::string {
                for (int r = 1; r < p.size(); ++r) {
                  const auto d = descent(p, r);
                  std::vector<Transposition> oracle;
                  for (int a = 1; a <= p.size(); ++a) {
                    for (int b = a + 1; b <= p.size(); ++b) {
                      const auto delta = length_change({a, b}, p);
                      if (delta < 0 && delta > -2 * r) oracle.push_back({a, b});
                    }
                  }
                  if (d.members() != oracle) return "mismatch at r=" + std::to_string(r);
                }
                return {};
              });
            });

  suite.add("descent-set-monotone", "D^(r)(p) is contained in D^(r+1)(p)", [&] {
    return exhaustive(3, std::min(N, 7), J, [&](const Permutation& p) -> std::string {
      for (int r = 1; r + 1 < p.size(); ++r)
        if (!descent(p, r).is_subset_of(descent(p, r + 1))) return "fails at r=" + std::to_string(r);
      return {};
    });
  });

  const Property inverse_symmetry = [&](const Permutation& p) -> std::string {
    const Permutation q = inverse(p);
    for (int r = 1; r < p.size(); ++r) {
      const auto dp = descent(p, r);
      const auto dq = descent(q, r);
      if (dp.size() != dq.size()) return "d^(" + std::to_string(r) + ") differs from the inverse";
      for (const auto& t : dp.members()) {
        if (!dq.contains(Transposition::of(q(t.a), q(t.b)))) {
          return "member " + show(t) + " has no image at r=" + std::to_string(r);
        }
      }
    }
    return {};
  };
  suite.add("inverse-symmetry",
            "t(a,b) in D^(r)(p) iff t(p^-1(a),p^-1(b)) in D^(r)(p^-1); d^(r)(p) = d^(r)(p^-1)",
            [&] {
              return both(exhaustive(2, std::min(N, 8), J, inverse_symmetry),
                          sampled(o, "inverse-symmetry", all_orders_sampled, inverse_symmetry));
            });

  suite.add("up-down-duality", "d+(p) = d-(w0 p); identity and w0 have degree n-1", [&] {
    return exhaustive(1, N, J, [](const Permutation& p) -> std::string {
      const int n = p.size();
      const Permutation flipped = compose(Permutation::longest(n), p);
      if (up_degree(p) != down_degree(flipped)) return "d+ != d-(w0 p)";
      if (p == Permutation::identity(n) && (down_degree(p) != 0 || up_degree(p) != n - 1)) {
        return "identity degrees";
      }
      if (p == Permutation::longest(n) && (up_degree(p) != 0 || down_degree(p) != n - 1)) {
        return "w0 degrees";
      }
      return {};
    });
  });

  suite.add("reconstruction", "D-(p) determines p; rebuilding from D-(p) returns p", [&] {
    const int inj_hi = std::min(N, 7);
    for (int n = 1; n <= inj_hi; ++n) {
      std::set<std::vector<Transposition>> seen;
      std::optional<std::string> clash;
      for_each_permutation(n, [&](const Permutation& p) {
        if (!clash && !seen.insert(descent(p, 1).members()).second) clash = describe(p, "descent set collision");
      });
      if (clash) return Outcome{false, *clash};
    }
    const Property round_trip = [&](const Permutation& p) -> std::string {
      try {
        if (reconstruct(p.size(), descent(p, 1)) != p) return "round trip differs";
      } catch (const std::exception& e) {
        return std::string("reconstruct threw: ") + e.what();
      }
      return {};
    };
    Outcome out = exhaustive(1, N, J, round_trip);
    if (out.ok) out.detail = "injective " + range_text(1, inj_hi) + "; round trip " + out.detail;
    return both(out, sampled(o, "reconstruction", o.sampled_n, round_trip));
  });

  suite.add("max-down-degree", "max d- over S_n equals floor(n^2/4)", [&] {
    for (int n = 1; n <= N; ++n) {
      const auto best = brute_force_max(n, Statistic::down(), J, o.exhaustive_limit);
      if (best.value != max_down_degree(n)) {
        return Outcome{false, "n=" + std::to_string(n) + " maximum " + std::to_string(best.value)};
      }
    }
    return Outcome{true, range_text(1, N) + " exhaustive"};
  });

  suite.add("extremal-down-family",
            "down-maximal permutations are the block family, n (odd) or n/2 (even) of them", [&] {
              for (int n = 2; n <= N; ++n) {
                const auto best = brute_force_max(n, Statistic::down(), J, o.exhaustive_limit);
                const auto family = extremal_down_permutations(n);
                const std::size_t expected = n % 2 ? n : n / 2;
                if (best.attaining != family || family.size() != expected) {
                  return Outcome{false, "n=" + std::to_string(n) + " attaining set differs"};
                }
                for (const auto& p : family) {
                  if (longest_decreasing_subsequence(p) > 3) {
                    return Outcome{false, describe(p, "decreasing subsequence of length 4")};
                  }
                  if (n >= 4) {
                    auto parts = complete_multipartite_parts(graph_of(descent(p, 1)));
                    if (!parts || parts->size() != 2) {
                      return Outcome{false, describe(p, "descent graph not complete bipartite")};
                    }
                    auto small = std::min((*parts)[0].size(), (*parts)[1].size());
                    if (small != static_cast<std::size_t>(n / 2)) {
                      return Outcome{false, describe(p, "unbalanced bipartition")};
                    }
                  }
                }
              }
              return Outcome{true, range_text(2, N) + " exhaustive"};
            });

  const Property triangle_free = [&](const Permutation& p) -> std::string {
    if (!is_triangle_free(graph_of(descent(p, 1)))) return "strong descent graph has a triangle";
    return {};
  };
  suite.add("descent-graph-triangle-free", "the strong descent graph has no triangle", [&] {
    return both(exhaustive(1, N, J, triangle_free),
                sampled(o, "descent-graph-triangle-free", o.sampled_n, triangle_free));
  });

  const Property clique_free = [&](const Permutation& p) -> std::string {
    for (int r = 1; r < p.size(); ++r) {
      if (has_clique(graph_of(descent(p, r)), r + 2)) return "K_" + std::to_string(r + 2) + " at r=" + std::to_string(r);
    }
    return {};
  };
  suite.add("rth-graph-clique-free", "the r-th strong descent graph has no K_(r+2)", [&] {
    return both(exhaustive(2, std::min(N, 6), J, clique_free),
                sampled(o, "rth-graph-clique-free", all_orders_sampled, clique_free));
  });

  const Property turan_bound = [&](const Permutation& p) -> std::string {
    const int n = p.size();
    for (int r = 1; r < n; ++r) {
      const auto d = static_cast<std::int64_t>(descent(p, r).size());
      const auto t = turan_number(r + 1, n);
      const double cap = (r + 1) * r / 2.0 * (static_cast<double>(n) / (r + 1)) * (static_cast<double>(n) / (r + 1));
      if (d > t || static_cast<double>(t) > cap + 1e-9) {
        return "d^(" + std::to_string(r) + ")=" + std::to_string(d) + " exceeds t_" + std::to_string(r + 1) + "(n)=" + std::to_string(t);
      }
    }
    return {};
  };
  suite.add("rth-turan-bound", "d^(r)(p) <= t_(r+1)(n) <= C(r+1,2)(n/(r+1))^2, tight at r=1", [&] {
    Outcome out = both(exhaustive(2, N, J, turan_bound),
                       sampled(o, "rth-turan-bound", all_orders_sampled, turan_bound));
    for (int n = 2; out.ok && n <= N; ++n) {
      if (brute_force_max(n, Statistic::rth(1), J, o.exhaustive_limit).value != turan_number(2, n)) {
        out = {false, "bound not attained at r=1, n=" + std::to_string(n)};
      }
    }
    return out;
  });

  const Property inversions = [&](const Permutation& p) -> std::string {
    if (p.size() < 2) return {};
    const auto d = static_cast<std::int64_t>(descent(p, p.size() - 1).size());
    if (d != inversion_number(p)) return "d^(n-1)=" + std::to_string(d) + " != inv";
    return {};
  };
  suite.add("top-order-is-inversions", "d^(n-1)(p) = inv(p)", [&] {
    return both(exhaustive(2, N, J, inversions),
                sampled(o, "top-order-is-inversions", o.sampled_n, inversions));
  });

  suite.add("max-total-degree", "max d over S_n equals floor(n^2/4) + n - 2", [&] {
    for (int n = 2; n <= N; ++n) {
      const auto best = brute_force_max(n, Statistic::total(), J, o.exhaustive_limit);
      if (best.value != max_total_degree(n)) {
        return Outcome{false, "n=" + std::to_string(n) + " maximum " + std::to_string(best.value)};
      }
      const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
      if (max_total_degree(n) > pairs || (n >= 5 && max_total_degree(n) >= 2 * max_down_degree(n))) {
        return Outcome{false, "closed form out of the trivial bounds at n=" + std::to_string(n)};
      }
    }
    return Outcome{true, range_text(2, N) + " exhaustive"};
  });

  suite.add("extremal-total-family",
            "total-maximal permutations are the r/s/t orbit of the block family: 2, 4, 8 or 16", [&] {
              for (int n = 2; n <= N; ++n) {
                const auto best = brute_force_max(n, Statistic::total(), J, o.exhaustive_limit);
                const auto family = extremal_total_permutations(n);
                const std::size_t expected = n == 2 ? 2 : n <= 4 ? 4 : n % 2 ? 16 : 8;
                if (best.attaining != family || family.size() != expected) {
                  return Outcome{false, "n=" + std::to_string(n) + " attaining set differs"};
                }
                if (n == 5) {
                  for (const Permutation& w : {Permutation{3, 2, 5, 1, 4}, Permutation{4, 2, 5, 1, 3}}) {
                    if (!std::binary_search(family.begin(), family.end(), w)) {
                      return Outcome{false, describe(w, "witness missing")};
                    }
                  }
                }
              }
              return Outcome{true, range_text(2, N) + " exhaustive"};
            });

  const Property min_degree_bound = [](const Permutation& p) -> std::string {
    const int bound = p.size() / 2 + 1;
    const int got = min_degree(total_degree_graph(p));
    if (got > bound) return "min degree " + std::to_string(got) + " > " + std::to_string(bound);
    return {};
  };
  suite.add("total-graph-min-degree", "some vertex of the total degree graph has degree <= floor(n/2)+1", [&] {
    return both(exhaustive(1, N, J, min_degree_bound),
                sampled(o, "total-graph-min-degree", o.sampled_n, min_degree_bound));
  });

  suite.add("total-graph-split",
            "the total degree graph is the edge-disjoint union of two triangle-free graphs", [&] {
              return exhaustive(1, std::min(N, 6), J, [&](const Permutation& p) -> std::string {
                const LabeledGraph down = graph_of(descent(p, 1));
                const LabeledGraph up = up_graph(p);
                const LabeledGraph all = total_degree_graph(p);
                for (const auto& [a, b] : down.edges())
                  if (up.has_edge(a, b)) return "edge {" + std::to_string(a) + "," + std::to_string(b) + "} in both";
                if (all.edge_count() != down.edge_count() + up.edge_count()) return "edge counts do not add up";
                if (all.edge_count() != total_degree(p).total) return "e(graph) != d(p)";
                if (!is_triangle_free(down) || !is_triangle_free(up)) return "a part has a triangle";
                return {};
              });
            });

  suite.add("components-vs-global-descents",
            "components of the strong descent graph = global descents of p w0, plus one", [&] {
              auto offset_of = [](const Permutation& p) {
                const Permutation pw0 = compose(p, Permutation::longest(p.size()));
                return component_count(graph_of(strong_descent_set(p, 1))) - global_descent_count(pw0);
              };
              std::set<int> offsets;
              for (int n = 3; n <= std::min(N, 5); ++n)
                for_each_permutation(n, [&](const Permutation& p) { offsets.insert(offset_of(p)); });
              if (!offsets.empty() && offsets != std::set<int>{1}) {
                return Outcome{false, "calibration offset is not constant +1"};
              }
              return exhaustive(1, std::min(N, 7), J, [&](const Permutation& p) -> std::string {
                const Permutation pw0 = compose(p, Permutation::longest(p.size()));
                const int comps = component_count(graph_of(descent(p, 1)));
                if (comps != global_descent_count(pw0) + 1) return "components=" + std::to_string(comps);
                return {};
              });
            });

  suite.add("expected-down-degree",
            "E[d-] = triple sum = (n+1)H_n - 2n = exhaustive mean, exactly", [&] {
              const auto triple = triple_sum_prefixes(200);
              for (int n = 1; n <= 200; ++n) {
                if (!(triple[n - 1] == expected_down_degree(n))) {
                  return Outcome{false, "triple sum differs at n=" + std::to_string(n)};
                }
              }
              const int hi = std::min(N, 8);
              for (int n = 1; n <= hi; ++n) {
                const auto mean = distribution(n, Statistic::down(), J, o.exhaustive_limit).mean();
                if (!(mean == expected_down_degree(n))) {
                  return Outcome{false, "exhaustive mean " + mean.to_string() + " at n=" + std::to_string(n)};
                }
              }
              return Outcome{true, "closed form = triple sum n=1..200; exhaustive mean " + range_text(1, hi)};
            });

  const Property increment = [](const Permutation& p) -> std::string {
    if (p.size() < 2) return {};
    return check_ltrm_increment(p) ? std::string{} : "increment differs from ltrm of the suffix";
  };
  suite.add("down-degree-increment",
            "inserting i raises d- by the left-to-right maxima of the suffix after it", [&] {
              return both(exhaustive(2, std::min(N, 8), J, increment),
                          sampled(o, "down-degree-increment", at_most(o.sampled_n, kAllOrdersSampleCap), increment));
            });

  suite.add("expected-total-degree", "E[d] = 2 E[d-] over S_n", [&] {
    const int hi = std::min(N, 7);
    for (int n = 1; n <= hi; ++n) {
      const auto mean = distribution(n, Statistic::total(), J, o.exhaustive_limit).mean();
      if (!(mean == ExactRational(2) * expected_down_degree(n))) {
        return Outcome{false, "mean total " + mean.to_string() + " at n=" + std::to_string(n)};
      }
    }
    return Outcome{true, range_text(1, hi) + " exhaustive"};
  });

  suite.add("expectation-asymptotics", "|E[d-]/n - ln n| <= 2 for n = 10, 10^2, 10^3, 10^4", [&] {
    std::ostringstream seen;
    seen << std::fixed << std::setprecision(4);
    for (int n : {10, 100, 1000, 10000}) {
      const double gap = std::abs(expected_down_degree(n).to_double() / n - std::log(static_cast<double>(n)));
      seen << (n == 10 ? "" : " ") << gap;
      if (gap > 2.0) return Outcome{false, "gap " + seen.str() + " at n=" + std::to_string(n)};
    }
    return Outcome{true, "gaps " + seen.str()};
  });

  suite.add("monte-carlo-mean", "sampled mean of d- lies within 4 standard errors of the exact value", [&] {
    std::ostringstream seen;
    seen << std::setprecision(6);
    bool first = true;
    for (int n : o.monte_carlo_n) {
      const auto est = monte_carlo_mean(n, Statistic::down(), o.monte_carlo_samples,
                                        mix_seed(o.seed, static_cast<std::uint64_t>(n)), J);
      const double exact = expected_down_degree(n).to_double();
      seen << (first ? "" : ", ") << "n=" << n << " " << est.mean << "+-" << est.standard_error
           << " vs " << exact;
      first = false;
      if (std::abs(est.mean - exact) > 4.0 * est.standard_error + 1e-12) {
        return Outcome{false, seen.str()};
      }
    }
    return Outcome{true, seen.str()};
  });

  return suite.take();
}

}  // namespace hassedeg
