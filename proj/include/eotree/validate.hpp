#pragma once

#include <map>
#include <string>
#include <vector>

#include "eotree/jointfmt.hpp"
#include "eotree/tree.hpp"

namespace eotree {

// QA pass over one joint-format sentence and its reconstructed tree.
std::vector<Violation> check_normalized(const JointSentence& sentence, const SyntaxTree& tree,
                                        const std::vector<std::string>& null_patterns = {
                                            R"(\*[^*]+\*)"});

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::map<std::string, std::size_t> label_freq;   // internal node labels
  std::map<std::size_t, std::size_t> arity_hist;   // children per internal node
  std::size_t max_depth = 0;

  void add(const SyntaxTree& tree);
  void merge(const CorpusStats& other);
  std::string report() const;

  bool operator==(const CorpusStats&) const = default;
};

}  // namespace eotree
