#include <doctest.h>

#include "hassedeg/io.hpp"

using namespace hassedeg;

TEST_CASE("permutation parsing") {
  const Permutation p{3, 1, 2};
  CHECK(io::parse_permutation("[3,1,2]") == p);
  CHECK(io::parse_permutation("3,1,2") == p);
  CHECK(io::parse_permutation("3 1 2") == p);
  CHECK(io::parse_permutation(" [ 3, 1 ,2 ] ") == p);
  CHECK_THROWS(io::parse_permutation("[3,1,x]"));
  CHECK_THROWS(io::parse_permutation("[3,1,1]"));
  CHECK_THROWS(io::parse_permutation("[]"));
  CHECK_THROWS(io::parse_permutation("[3,1,2"));
}

TEST_CASE("descent set formats round trip") {
  const auto d = strong_descent_set(Permutation{7, 9, 5, 2, 3, 8, 4, 1, 6});
  const auto j = io::descent_set_to_json(d);
  CHECK(j.dump() ==
        R"({"n":9,"r":1,"members":[[1,2],[1,3],[1,4],[2,5],[3,5],[4,5],[4,8],[5,7],[5,9],[6,7],[6,8],[8,9]]})");
  CHECK(io::descent_set_from_json(nlohmann::json::parse(j.dump())) == d);
  const auto text = io::descent_set_to_text(d);
  CHECK(text == "t(1,2) t(1,3) t(1,4) t(2,5) t(3,5) t(4,5) t(4,8) t(5,7) t(5,9) t(6,7) t(6,8) t(8,9)");
  CHECK(io::descent_set_from_text(9, 1, text) == d);
  CHECK(io::parse_descent_set(9, text) == d);
  CHECK(io::parse_descent_set(9, "  " + j.dump()) == d);
  CHECK(io::descent_set_to_text(StrongDescentSet(3, 1, {})).empty());
  CHECK_THROWS(io::descent_set_from_text(9, 1, "t(1,2) garbage"));
  CHECK_THROWS(io::descent_set_from_json(nlohmann::json::parse(R"({"n":3,"r":1,"members":[[1,9]]})")));
}

TEST_CASE("graph formats") {
  const auto g = strong_descent_graph(Permutation{3, 4, 1, 2});
  CHECK(io::graph_to_dot(g) ==
        "graph G {\n  1;\n  2;\n  3;\n  4;\n  1 -- 3;\n  1 -- 4;\n  2 -- 3;\n  2 -- 4;\n}\n");
  const auto j = io::graph_to_json(g);
  CHECK(io::graph_from_json(nlohmann::json::parse(j.dump())) == g);
}

TEST_CASE("histogram JSON") {
  const auto h = distribution(3, Statistic::down(), 1);
  CHECK(io::histogram_to_json(h).dump() == R"({"n":3,"stat":"down","counts":{"0":1,"1":2,"2":3}})");
}
