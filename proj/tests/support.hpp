#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "afprov/af.hpp"
#include "afprov/semantics.hpp"

namespace afprov::testing {

// A -> B -> C, with C and D attacking each other.
inline ArgumentationFramework fig1() {
  return make_af({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "C"}});
}

inline AttackEdge edge(const char* a, const char* b) { return {ArgumentId(a), ArgumentId(b)}; }

inline ArgumentId id(const char* name) { return ArgumentId(name); }

inline ExtensionSet ext(const std::vector<std::string>& names) { return ExtensionSet::from_names(names); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string data_path(const std::string& name) { return std::string(AFPROV_TEST_DATA) + "/" + name; }

}  // namespace afprov::testing
