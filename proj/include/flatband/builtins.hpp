#pragma once

#include <string>
#include <vector>

namespace flatband {

// Built-in example lattices as graph-format documents; they go through the
// public parser, never a privileged construction path.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
std::string builtin_graph_text(const std::string& name);  // throws on unknown name

}  // namespace flatband
