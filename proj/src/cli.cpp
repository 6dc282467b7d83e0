#include "hassedeg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/descent_graphs.hpp"
#include "hassedeg/extremal.hpp"
#include "hassedeg/io.hpp"
#include "hassedeg/reconstruct.hpp"
#include "hassedeg/stats.hpp"
#include "hassedeg/verify.hpp"

namespace hassedeg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;
  std::uint64_t seed = 1;
  int jobs = 0;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

std::string pick_format(const Globals& g, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : "|") + a;
  throw UsageError("--format must be one of " + list + " here, got '" + f + "'");
}

Statistic pick_stat(const std::string& name, int r) {
  if (name == "rth") return Statistic::rth(r);
  return Statistic::parse(name);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string joined(const std::vector<Permutation>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << ps[i];
  return os.str();
}

void print_degree_rows(std::ostream& out, const std::vector<Permutation>& rows, const std::string& format) {
  if (format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const auto& p : rows) {
      const auto d = total_degree(p);
      nlohmann::ordered_json row;
      row["perm"] = std::vector<int>(p.values().begin(), p.values().end());
      row["d_-"] = d.down;
      row["d_+"] = d.up;
      row["d"] = d.total;
      j.push_back(std::move(row));
    }
    out << j.dump() << '\n';
  } else if (format == "csv") {
    out << "perm,d_-,d_+,d\n";
    for (const auto& p : rows) {
      const auto d = total_degree(p);
      out << '"' << p << "\"," << d.down << ',' << d.up << ',' << d.total << '\n';
    }
  } else {
    std::size_t width = 4;
    for (const auto& p : rows) width = std::max(width, p.to_string().size());
    out << std::left << std::setw(static_cast<int>(width)) << "perm" << "  d_-  d_+  d\n";
    for (const auto& p : rows) {
      const auto d = total_degree(p);
      out << std::left << std::setw(static_cast<int>(width)) << p.to_string() << "  " << std::setw(3)
          << d.down << "  " << std::setw(3) << d.up << "  " << d.total << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree statistics in the Hasse diagram of the strong Bruhat order on S_n"};
  app.name("hassedeg");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format (depends on the subcommand)");
  app.add_option("--seed", g.seed, "Seed for random sampling");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all available)")->check(CLI::NonNegativeNumber);

  std::vector<std::string> perm_tokens;
  bool list_covers = false;
  int r = 1;
  std::string kind = "descent";
  int n = 0;
  std::string set_file;
  std::string stat_name = "down";
  bool brute = false;
  bool exact = false;
  bool floating = false;
  std::uint64_t samples = 100000;
  int max_n = 6;
  std::vector<int> sampled_n = {40, 100};
  std::uint64_t verify_samples = 10000;
  bool no_timing = false;
  std::string fault;

  auto* degrees = app.add_subcommand("degrees", "Down, up and total degree of a permutation");
  degrees->add_option("perm", perm_tokens, "Permutation, e.g. [3,1,2] or 3 1 2")->required();
  degrees->add_flag("--list", list_covers, "Also list the covered and covering permutations");

  auto* descents = app.add_subcommand("descents", "The r-th strong descent set (text or json)");
  descents->add_option("perm", perm_tokens)->required();
  descents->add_option("--r", r, "Order r, 1 <= r < n")->capture_default_str();

  auto* graph = app.add_subcommand("graph", "Descent or total degree graph (dot or json)");
  graph->add_option("perm", perm_tokens)->required();
  graph->add_option("--kind", kind, "descent | total | rth")
      ->check(CLI::IsMember({"descent", "total", "rth"}))
      ->capture_default_str();
  graph->add_option("--r", r, "Order for --kind rth")->capture_default_str();

  auto* rebuild = app.add_subcommand("reconstruct", "Rebuild a permutation from its strong descent set");
  rebuild->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);
  rebuild->add_option("set-file", set_file, "JSON or t(a,b) text file, '-' for stdin")->required();

  auto* extremal = app.add_subcommand("extremal", "Permutations of maximal down or total degree");
  extremal->add_option("n", n)->required()->check(CLI::PositiveNumber);
  extremal->add_option("--stat", stat_name, "down | total")
      ->check(CLI::IsMember({"down", "total"}))
      ->capture_default_str();
  extremal->add_flag("--brute-force", brute, "Search S_n exhaustively instead of generating the family");

  auto* expect = app.add_subcommand("expect", "Expected down degree over S_n");
  expect->add_option("n", n)->required()->check(CLI::PositiveNumber);
  expect->add_flag("--exact", exact, "Print the exact fraction (default)");
  expect->add_flag("--float", floating, "Print a decimal approximation");

  auto* dist = app.add_subcommand("distribution", "Exact histogram of a statistic over S_n");
  dist->add_option("n", n)->required()->check(CLI::PositiveNumber);
  dist->add_option("--stat", stat_name, "down | up | total | rth")->capture_default_str();
  dist->add_option("--r", r, "Order for --stat rth")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Monte Carlo mean of a statistic");
  sample->add_option("n", n)->required()->check(CLI::PositiveNumber);
  sample->add_option("--stat", stat_name, "down | up | total | rth")->capture_default_str();
  sample->add_option("--r", r, "Order for --stat rth")->capture_default_str();
  sample->add_option("--samples", samples)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every property check; exit 1 on any failure");
  verify->add_option("--max-n", max_n, "Largest n for exhaustive checks")->capture_default_str();
  verify->add_option("--sampled-n", sampled_n, "Degrees for random-sample checks")->delimiter(',');
  verify->add_option("--samples", verify_samples, "Random permutations per sampled degree")
      ->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "Omit timings from the report");
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"descent-criterion"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*degrees) {
      const Permutation p = io::parse_permutation(join(perm_tokens));
      const auto d = total_degree(p);
      const std::string format = pick_format(g, "text", {"text", "json"});
      if (format == "json") {
        nlohmann::ordered_json j;
        j["perm"] = std::vector<int>(p.values().begin(), p.values().end());
        j["down"] = d.down;
        j["up"] = d.up;
        j["total"] = d.total;
        j["inv"] = inversion_number(p);
        if (list_covers) {
          auto as_lists = [](const std::vector<Permutation>& ps) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& q : ps) arr.push_back(std::vector<int>(q.values().begin(), q.values().end()));
            return arr;
          };
          j["covered_by"] = as_lists(covered_by(p));
          j["covers"] = as_lists(covers_of(p));
        }
        out << j.dump() << '\n';
      } else {
        out << "down=" << d.down << " up=" << d.up << " total=" << d.total
            << " inv=" << inversion_number(p) << '\n';
        if (list_covers) {
          out << "covered_by: " << joined(covered_by(p)) << '\n';
          out << "covers: " << joined(covers_of(p)) << '\n';
        }
      }
    } else if (*descents) {
      const Permutation p = io::parse_permutation(join(perm_tokens));
      const auto d = strong_descent_set(p, r);
      const std::string format = pick_format(g, "text", {"text", "json"});
      if (format == "json") {
        out << io::descent_set_to_json(d).dump() << '\n';
      } else {
        out << io::descent_set_to_text(d) << '\n';
      }
    } else if (*graph) {
      const Permutation p = io::parse_permutation(join(perm_tokens));
      const LabeledGraph gr = kind == "total"  ? total_degree_graph(p)
                              : kind == "rth" ? strong_descent_graph(p, r)
                                              : strong_descent_graph(p, 1);
      const std::string format = pick_format(g, "dot", {"dot", "json"});
      if (format == "json") {
        out << io::graph_to_json(gr).dump() << '\n';
      } else {
        out << io::graph_to_dot(gr);
      }
    } else if (*rebuild) {
      const auto d = io::parse_descent_set(n, read_input(set_file));
      const Permutation p = reconstruct(n, d);
      const std::string format = pick_format(g, "text", {"text", "json"});
      if (format == "json") {
        out << nlohmann::json(std::vector<int>(p.values().begin(), p.values().end())).dump() << '\n';
      } else {
        out << p << '\n';
      }
    } else if (*extremal) {
      const std::string format = pick_format(g, "table", {"table", "json", "csv"});
      std::vector<Permutation> rows;
      const bool total = stat_name == "total";
      if (brute) {
        rows = brute_force_max(n, total ? Statistic::total() : Statistic::down(), g.jobs).attaining;
      } else {
        rows = total ? extremal_total_permutations(n) : extremal_down_permutations(n);
      }
      print_degree_rows(out, rows, format);
    } else if (*expect) {
      const ExactRational e = expected_down_degree(n);
      if (exact || !floating) out << e.to_string() << '\n';
      if (floating) out << std::setprecision(17) << e.to_double() << '\n';
    } else if (*dist) {
      const Histogram h = distribution(n, pick_stat(stat_name, r), g.jobs);
      const std::string format = pick_format(g, "json", {"json", "table", "csv"});
      if (format == "json") {
        out << io::histogram_to_json(h).dump() << '\n';
      } else {
        const char* sep = format == "csv" ? "," : " ";
        out << "value" << sep << "count\n";
        for (const auto& [value, count] : h.counts) out << value << sep << count << '\n';
      }
    } else if (*sample) {
      const Statistic stat = pick_stat(stat_name, r);
      const auto est = monte_carlo_mean(n, stat, samples, g.seed, g.jobs);
      const std::string format = pick_format(g, "text", {"text", "json"});
      if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["stat"] = stat.name();
        j["samples"] = est.samples;
        j["seed"] = g.seed;
        j["mean"] = est.mean;
        j["stderr"] = est.standard_error;
        out << j.dump() << '\n';
      } else {
        out << std::setprecision(10) << "mean=" << est.mean << " stderr=" << est.standard_error
            << " samples=" << est.samples << " seed=" << g.seed << '\n';
      }
    } else if (*verify) {
      VerifyOptions options;
      options.max_n = max_n;
      options.sampled_n = sampled_n;
      options.samples = verify_samples;
      options.seed = g.seed;
      options.jobs = g.jobs;
      if (fault == "descent-criterion") options.descent = descent_set_ignoring_intermediates;
      const VerifyReport report = run_verification(options);
      out << report.render(!no_timing);
      return report.all_passed() ? kOk : kVerificationFailure;
    }
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace hassedeg::cli
