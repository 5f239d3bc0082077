#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eotree/tree.hpp"

namespace eotree {

// Ordered input substitutions applied before tokenization. Defaults handle
// artifacts of typeset sources: "\\" line breaks inside a token are
// deleted, middle dots become ASCII periods.
struct CharSubstitutions {
  std::vector<std::pair<std::string, std::string>> pairs;

  static CharSubstitutions defaults();
  static CharSubstitutions none() { return {}; }
  std::string apply(std::string_view text) const;
};

struct BracketedOptions {
  CharSubstitutions substitutions = CharSubstitutions::defaults();
  std::vector<std::string> null_patterns = {R"(\*[^*]+\*)"};
};

// One sentence: optional "# sent id = " / "# text = " headers plus the tree.
struct SentenceRecord {
  std::optional<std::string> id;
  std::optional<std::string> text;
  SyntaxTree tree;

  bool operator==(const SentenceRecord&) const = default;
};

struct BracketedDocument {
  Dialect dialect = Dialect::Normalized;
  std::vector<SentenceRecord> sentences;

  bool operator==(const BracketedDocument&) const = default;
};

BracketedDocument parse_bracketed(std::string_view text, Dialect dialect,
                                  const BracketedOptions& options = {});
BracketedDocument load_bracketed(const std::filesystem::path& path, Dialect dialect,
                                 const BracketedOptions& options = {});

std::string serialize_tree(const SyntaxTree& tree);
std::string serialize_tree_pretty(const SyntaxTree& tree);
std::string serialize_bracketed(const BracketedDocument& doc, bool pretty = false);

}  // namespace eotree
