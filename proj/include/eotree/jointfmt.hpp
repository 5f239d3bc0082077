#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eotree/tree.hpp"

namespace eotree {

// One row of the six-column joint annotation:
// id, eojeol surface, morph layer, UPOS, opening brackets, closing brackets.
struct TokenRow {
  std::string id;
  std::string surface;
  std::optional<MorphSeg> morph;
  std::string upos;
  std::string lhs;
  std::string rhs;

  bool operator==(const TokenRow&) const = default;
};

struct JointSentence {
  std::string sent_id;
  std::string text;
  std::vector<TokenRow> rows;

  bool operator==(const JointSentence&) const = default;
};

// Surfaces joined by spaces; PUNCT rows attach to the previous token.
std::string detokenize(const std::vector<TokenRow>& rows);

// Token ids continue the sentence id's numeric tail (width-preserving);
// ids without one get "<sent_id>-<n>".
std::string token_id(const std::string& sent_id, std::size_t index);

// Flatten a normalized tree into rows. The emitted text line is always the
// detokenization of the surfaces; a differing caller-supplied text line is
// reported through `warnings`.
JointSentence emit_joint(const SyntaxTree& tree, const std::string& sent_id,
                         const std::optional<std::string>& text = std::nullopt,
                         WarningList* warnings = nullptr);

std::string write_joint(const JointSentence& sentence);
std::string write_joint_file(const std::vector<JointSentence>& sentences);

struct ParsedJoint {
  JointSentence sentence;
  SyntaxTree tree;

  bool operator==(const ParsedJoint&) const = default;
};

ParsedJoint parse_joint(std::string_view block);
std::vector<ParsedJoint> parse_joint_file(std::string_view text);

}  // namespace eotree
