#include "hassedeg/io.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hassedeg::io {

Permutation parse_permutation(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t\r\n");
  auto last = body.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty permutation text");
  body = body.substr(first, last - first + 1);
  if (body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced bracket in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> values;
  std::size_t i = 0;
  bool expect_value = true;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',') {
      if (expect_value) throw std::invalid_argument("misplaced comma in '" + text + "'");
      expect_value = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(body.substr(i), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number in '" + text + "'");
      }
      if (v < -1000000000L || v > 1000000000L) {
        throw std::invalid_argument("value out of range in '" + text + "'");
      }
      values.push_back(static_cast<int>(v));
      i += used;
      expect_value = false;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in '" + text + "'");
    }
  }
  if (values.empty()) throw std::invalid_argument("empty permutation text");
  if (expect_value) throw std::invalid_argument("trailing comma in '" + text + "'");
  return Permutation::from_one_line(std::move(values));
}

nlohmann::ordered_json descent_set_to_json(const StrongDescentSet& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n();
  j["r"] = d.r();
  auto members = nlohmann::ordered_json::array();
  for (const auto& t : d.members()) members.push_back({t.a, t.b});
  j["members"] = std::move(members);
  return j;
}

StrongDescentSet descent_set_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int r = j.contains("r") ? j.at("r").get<int>() : 1;
    std::vector<Transposition> members;
    for (const auto& pair : j.at("members")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("descent set member must be a pair");
      }
      members.push_back(Transposition::of(pair[0].get<int>(), pair[1].get<int>()));
    }
    return StrongDescentSet(n, r, std::move(members));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed descent set JSON: ") + e.what());
  }
}

std::string descent_set_to_text(const StrongDescentSet& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : d.members()) {
    if (!first) os << ' ';
    os << t;
    first = false;
  }
  return os.str();
}

StrongDescentSet descent_set_from_text(int n, int r, const std::string& text) {
  static const std::regex token(R"(\s*t\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*,?)");
  std::vector<Transposition> members;
  auto it = text.cbegin();
  std::smatch m;
  while (it != text.cend()) {
    if (std::isspace(static_cast<unsigned char>(*it))) {
      ++it;
      continue;
    }
    if (!std::regex_search(it, text.cend(), m, token, std::regex_constants::match_continuous)) {
      throw std::invalid_argument("malformed descent set text near '" +
                                  std::string(it, std::min(it + 16, text.cend())) + "'");
    }
    members.push_back(Transposition::of(std::stoi(m[1]), std::stoi(m[2])));
    it = m[0].second;
  }
  return StrongDescentSet(n, r, std::move(members));
}

StrongDescentSet parse_descent_set(int n, const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed descent set JSON: ") + e.what());
    }
    StrongDescentSet d = descent_set_from_json(j);
    if (d.n() != n) {
      throw std::invalid_argument("descent set declares n=" + std::to_string(d.n()) +
                                  " but n=" + std::to_string(n) + " was requested");
    }
    return d;
  }
  return descent_set_from_text(n, 1, content);
}

std::string graph_to_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json graph_to_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  try {
    LabeledGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

nlohmann::ordered_json histogram_to_json(const Histogram& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n;
  j["stat"] = h.stat.name();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [value, count] : h.counts) counts[std::to_string(value)] = count;
  j["counts"] = std::move(counts);
  return j;
}

}  // namespace hassedeg::io
