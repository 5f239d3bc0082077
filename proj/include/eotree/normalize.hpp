#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eotree/bracketed.hpp"
#include "eotree/morph.hpp"
#include "eotree/tree.hpp"

namespace eotree {

// How nominal phrases are regrouped.
//   Layered        -- NML/AdjP layers, left-branching compounds (default)
//   PhraseLevelAdj -- AdjP attaches at phrase level, no outer NML wrap
//   Flat           -- leave nominal phrases alone
enum class NmlAnalysis { Layered, PhraseLevelAdj, Flat };
enum class Branching { Left, Right };

struct NmlRuleSet {
  NmlAnalysis analysis = NmlAnalysis::Layered;
  Branching compound_branching = Branching::Left;
};

std::optional<NmlAnalysis> nml_analysis_from_string(std::string_view s);

struct NormalizeConfig {
  std::vector<std::string> null_patterns = {R"(\*[^*]+\*)"};
  bool splice_requires_tag_match = true;
  NmlRuleSet nml;

  static NormalizeConfig load(const std::filesystem::path& path);
  static NormalizeConfig parse(std::string_view text);
};

// ---- individual passes ----

// Collapse same-base unary/binary chains: child C is spliced into parent P
// when C.base == P.base and (tags equal, or C has none). With
// splice_requires_tag_match = false the tag condition is dropped.
SyntaxTree debinarize(const SyntaxTree& tree, bool splice_requires_tag_match = true);

// Remove null-element leaves and prune emptied nodes. nullopt = nothing left.
std::optional<SyntaxTree> strip_nulls(const SyntaxTree& tree,
                                      const std::vector<std::string>& null_patterns = {
                                          R"(\*[^*]+\*)"});

// Merge "+"-marked functional leaves into the nearest preceding host eojeol
// (a "+"-prefixed group label marks its first leaf), resolve morphs and
// surfaces, split trailing sentence punctuation off. When raw_text is given
// the merged yield is checked against it (YieldMismatch on disagreement).
SyntaxTree reattach_functional(const SyntaxTree& tree,
                               const std::optional<std::string>& raw_text = std::nullopt,
                               const CharSubstitutions& subs = CharSubstitutions::defaults(),
                               WarningList* warnings = nullptr, const TagMap& tag_map = {});

// Parse Sejong/Penn leaf tokens into MorphSegs and resolve eojeol surfaces:
// aligned against `text` when the token count matches, synthesized from the
// morph forms otherwise (with a soft warning on disagreement).
SyntaxTree resolve_morphology(const SyntaxTree& tree,
                              const std::optional<std::string>& text = std::nullopt,
                              const CharSubstitutions& subs = CharSubstitutions::defaults(),
                              WarningList* warnings = nullptr);

// Split leaves whose morph ends in a sentence-final punctuation run into
// eojeol + punctuation terminals; trailing punctuation moves to the root.
SyntaxTree split_fused_punctuation(const SyntaxTree& tree, const TagMap& tag_map = {});
SyntaxTree move_trailing_punctuation(const SyntaxTree& tree, const TagMap& tag_map = {});

// Wrap every leaf in a preterminal labeled with its UPOS.
SyntaxTree label_terminals(const SyntaxTree& tree, const UposTable& table,
                           const TagMap& tag_map = {});

// Regroup nominal phrases: apposition split, genitive+ADJ -> AdjP,
// compound runs -> (left-branching) NML layers.
SyntaxTree restructure_nominals(const SyntaxTree& tree, const NmlRuleSet& rules = {},
                                const TagMap& tag_map = {});

// ---- the pipeline ----

struct Pipeline {
  NormalizeConfig config;
  UposTable upos = UposTable::defaults();
  TagMap tag_map;  // dialect XPOS -> Sejong classes; identity for Sejong
  CharSubstitutions substitutions = CharSubstitutions::defaults();
};

// Full normalization. Returns nullopt when the sentence is empty after null
// stripping. Already-normalized input is returned unchanged.
std::optional<SyntaxTree> normalize_pipeline(const SyntaxTree& tree, Dialect dialect,
                                             const Pipeline& pipeline,
                                             const std::optional<std::string>& text = std::nullopt,
                                             const std::optional<std::string>& raw_text = std::nullopt,
                                             WarningList* warnings = nullptr);

}  // namespace eotree
