#include "flatband/builtins.hpp"

#include <map>
#include <stdexcept>

namespace flatband {

namespace {

const std::map<std::string, std::string>& builtin_map() {
  static const std::map<std::string, std::string> m = {
      {"kagome",
       "# kagome (trihexagonal) lattice: 4-regular, three vertices per cell\n"
       "dim 2\n"
       "vertices w1 w2 w3\n"
       "edge w1 w2 0 0\n"
       "edge w1 w2 0 1\n"
       "edge w1 w3 0 0\n"
       "edge w1 w3 1 0\n"
       "edge w2 w3 0 0\n"
       "edge w2 w3 1 -1\n"},
      {"square",
       "# square lattice: one vertex per cell, 4-regular\n"
       "dim 2\n"
       "vertices w1\n"
       "edge w1 w1 1 0\n"
       "edge w1 w1 0 1\n"},
      {"cycle",
       "# the integer line (Z as its own Cayley graph)\n"
       "dim 1\n"
       "vertices w1\n"
       "edge w1 w1 1\n"},
      {"comb2",
       "# comb with two pendants per cell: base degree 4, pendants degree 1\n"
       "dim 1\n"
       "vertices b p1 p2\n"
       "edge b b 1\n"
       "edge b p1 0\n"
       "edge b p2 0\n"},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, t] : builtin_map()) v.push_back(k);
    return v;
  }();
  return names;
}

bool is_builtin(const std::string& name) { return builtin_map().count(name) > 0; }

std::string builtin_graph_text(const std::string& name) {
  auto it = builtin_map().find(name);
  if (it == builtin_map().end())
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
  return it->second;
}

}  // namespace flatband
