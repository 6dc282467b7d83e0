#pragma once

#include <string>

#include <json.hpp>

#include "hassedeg/bruhat.hpp"
#include "hassedeg/descent_graphs.hpp"
#include "hassedeg/permutation.hpp"
#include "hassedeg/stats.hpp"

namespace hassedeg::io {

// Accepts "[7,9,5,2]", "7,9,5,2", "7 9 5 2" and mixtures of commas and
// whitespace. Throws std::invalid_argument on anything else.
Permutation parse_permutation(const std::string& text);

// {"n":9,"r":1,"members":[[1,2],[1,3],...]}
nlohmann::ordered_json descent_set_to_json(const StrongDescentSet& d);
StrongDescentSet descent_set_from_json(const nlohmann::json& j);
// "t(1,2) t(1,3) ..."; empty string for the empty set.
std::string descent_set_to_text(const StrongDescentSet& d);
StrongDescentSet descent_set_from_text(int n, int r, const std::string& text);
// Dispatches on the first non-blank character: '{' means JSON, else text.
// For the text form, n comes from `n` and r defaults to 1.
StrongDescentSet parse_descent_set(int n, const std::string& content);

// graph G { ... } with every vertex declared and edges sorted.
std::string graph_to_dot(const LabeledGraph& g);
nlohmann::ordered_json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// {"n":...,"stat":"down","counts":{"0":1,...}} with keys in increasing value.
nlohmann::ordered_json histogram_to_json(const Histogram& h);

}  // namespace hassedeg::io
