#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "unsharp/corpus.hpp"
#include "unsharp/poset.hpp"
#include "unsharp/sections.hpp"

namespace fixtures {

using unsharp::label_pair;
using unsharp::poset;

inline poset pentagon() {
  const std::vector<label_pair> c{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"c", "1"}, {"b", "1"}};
  return poset::from_covers({"0", "a", "b", "c", "1"}, c);
}

inline poset bowtie() {
  const std::vector<label_pair> c{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                                  {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}};
  return poset::from_covers({"0", "a", "b", "c", "d", "1"}, c);
}

inline poset tall_bowtie() {
  const std::vector<label_pair> c{{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "d"}, {"b", "e"},
                                  {"c", "d"}, {"c", "e"}, {"d", "1"}, {"e", "1"}};
  return poset::from_covers({"0", "a", "b", "c", "d", "e", "1"}, c);
}

inline unsharp::element_set labels(const poset& p, std::initializer_list<const char*> names) {
  unsharp::element_set s;
  for (const char* n : names) s.insert(p.at(n));
  return s;
}

inline poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<label_pair> c;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) c.emplace_back(labels[i - 1], labels[i]);
  }
  return poset::from_covers(labels, c);
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string golden(const std::string& name) {
  return slurp(std::string(UNSHARP_GOLDEN_DIR) + "/" + name + ".txt");
}

inline std::string data_file(const std::string& name) { return std::string(UNSHARP_DATA_DIR) + "/" + name; }

/// Every labeled poset on n points with pseudocomplemented sections.
inline std::vector<unsharp::sectioned_poset> pc_corpus(std::size_t n) {
  std::vector<unsharp::sectioned_poset> out;
  unsharp::enumerate_posets(n, unsharp::dedup_mode::labeled,
                            unsharp::filter_pc_sections([&](const unsharp::sectioned_poset& sp) { out.push_back(sp); }));
  return out;
}

}  // namespace fixtures
