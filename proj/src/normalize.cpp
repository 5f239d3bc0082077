#include "eotree/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "eotree/hangul.hpp"

namespace eotree {

namespace {

std::string surface_from_forms(const MorphSeg& seg) {
  std::string out;
  for (const Morpheme& m : seg.morphs) out = hangul::append_form(out, m.form);
  return out;
}

bool is_punct_xpos(const std::string& mapped) {
  return mapped == "SF" || mapped == "SP" || mapped == "SS" || mapped == "SE" ||
         mapped == "SO";
}

bool is_punct_terminal(const Terminal& term, const TagMap& tag_map) {
  if (term.morph) {
    for (const Morpheme& m : term.morph->morphs)
      if (!is_punct_xpos(tag_map.apply(m.xpos))) return false;
    return !term.morph->morphs.empty();
  }
  return term.upos && *term.upos == "PUNCT";
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::optional<NmlAnalysis> nml_analysis_from_string(std::string_view s) {
  if (s == "layered") return NmlAnalysis::Layered;
  if (s == "phrase-level-adj") return NmlAnalysis::PhraseLevelAdj;
  if (s == "flat") return NmlAnalysis::Flat;
  return std::nullopt;
}

NormalizeConfig NormalizeConfig::parse(std::string_view text) {
  NormalizeConfig config;
  bool in_nulls = false;
  bool nulls_replaced = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "[nulls]") {
      in_nulls = true;
      if (!nulls_replaced) {
        config.null_patterns.clear();
        nulls_replaced = true;
      }
      continue;
    }
    if (in_nulls) {
      config.null_patterns.push_back(line);
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("ConfigError", "line " + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "splice_requires_tag_match") {
      if (value == "true")
        config.splice_requires_tag_match = true;
      else if (value == "false")
        config.splice_requires_tag_match = false;
      else
        throw Error("ConfigError", key + " must be true or false");
    } else if (key == "nml_analysis") {
      auto a = nml_analysis_from_string(value);
      if (!a) throw Error("ConfigError", "unknown nml_analysis \"" + value + "\"");
      config.nml.analysis = *a;
    } else if (key == "compound_branching") {
      if (value == "left")
        config.nml.compound_branching = Branching::Left;
      else if (value == "right")
        config.nml.compound_branching = Branching::Right;
      else
        throw Error("ConfigError", "compound_branching must be left or right");
    } else {
      throw Error("ConfigError", "unknown key \"" + key + "\"");
    }
  }
  return config;
}

NormalizeConfig NormalizeConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// ---- debinarize ----

SyntaxTree debinarize(const SyntaxTree& tree, bool splice_requires_tag_match) {
  if (tree.is_leaf()) return tree;
  std::vector<SyntaxTree> kids;
  kids.reserve(tree.children().size());
  for (const SyntaxTree& c : tree.children()) kids.push_back(debinarize(c, splice_requires_tag_match));

  auto eligible = [&](const SyntaxTree& c) {
    if (c.is_leaf()) return false;
    if (c.label().base != tree.label().base) return false;
    if (!splice_requires_tag_match) return true;
    return c.label().function_tags.empty() ||
           c.label().function_tags == tree.label().function_tags;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SyntaxTree> next;
    next.reserve(kids.size());
    for (SyntaxTree& k : kids) {
      if (eligible(k)) {
        for (SyntaxTree& g : k.children()) next.push_back(std::move(g));
        changed = true;
      } else {
        next.push_back(std::move(k));
      }
    }
    kids = std::move(next);
  }
  return SyntaxTree::node(tree.label(), std::move(kids));
}

// ---- strip_nulls ----

namespace {

std::optional<SyntaxTree> strip_nulls_rec(const SyntaxTree& t,
                                          const std::vector<std::regex>& res) {
  if (t.is_leaf()) {
    const Terminal& term = t.terminal();
    bool null = term.is_null;
    if (!null)
      for (const std::regex& re : res)
        if (std::regex_match(term.surface, re)) {
          null = true;
          break;
        }
    if (null) return std::nullopt;
    return t;
  }
  std::vector<SyntaxTree> kids;
  for (const SyntaxTree& c : t.children()) {
    if (auto r = strip_nulls_rec(c, res)) kids.push_back(std::move(*r));
  }
  if (kids.empty()) return std::nullopt;
  return SyntaxTree::node(t.label(), std::move(kids));
}

}  // namespace

std::optional<SyntaxTree> strip_nulls(const SyntaxTree& tree,
                                      const std::vector<std::string>& null_patterns) {
  std::vector<std::regex> res;
  res.reserve(null_patterns.size());
  for (const std::string& p : null_patterns) res.emplace_back(p);
  return strip_nulls_rec(tree, res);
}

// ---- resolve_morphology ----

namespace {

std::size_t count_eojeol_leaves(const SyntaxTree& t) {
  if (t.is_leaf()) return t.terminal().is_null ? 0 : 1;
  std::size_t n = 0;
  for (const SyntaxTree& c : t.children()) n += count_eojeol_leaves(c);
  return n;
}

SyntaxTree resolve_rec(const SyntaxTree& t, const std::vector<std::string>* tokens,
                       std::size_t& idx, WarningList* warnings) {
  if (t.is_leaf()) {
    Terminal term = t.terminal();
    if (term.is_null) return t;
    bool fresh = false;
    if (!term.morph) {
      term.morph = MorphSeg::parse(term.surface);
      term.surface = surface_from_forms(*term.morph);
      fresh = true;
    }
    if (tokens) {
      const std::string& tok = (*tokens)[idx];
      if (fresh && tok != term.surface)
        warn(warnings, "surface \"" + term.surface + "\" synthesized from morphs differs from text token \"" +
                           tok + "\"; using the text token");
      if (fresh) term.surface = tok;
    }
    ++idx;
    return SyntaxTree::leaf(std::move(term));
  }
  std::vector<SyntaxTree> kids;
  kids.reserve(t.children().size());
  for (const SyntaxTree& c : t.children()) kids.push_back(resolve_rec(c, tokens, idx, warnings));
  return SyntaxTree::node(t.label(), std::move(kids));
}

}  // namespace

SyntaxTree resolve_morphology(const SyntaxTree& tree, const std::optional<std::string>& text,
                              const CharSubstitutions& subs, WarningList* warnings) {
  std::vector<std::string> tokens;
  bool aligned = false;
  if (text) {
    tokens = whitespace_tokens(subs.apply(*text));
    std::size_t leaves = count_eojeol_leaves(tree);
    aligned = tokens.size() == leaves;
    if (!aligned)
      warn(warnings, "text has " + std::to_string(tokens.size()) + " tokens but the tree has " +
                         std::to_string(leaves) + " eojeol; surfaces synthesized from morphs");
  }
  std::size_t idx = 0;
  return resolve_rec(tree, aligned ? &tokens : nullptr, idx, warnings);
}

// ---- punctuation ----

namespace {

std::vector<SyntaxTree> split_punct_rec(const SyntaxTree& t, const TagMap& tag_map) {
  if (t.is_leaf()) {
    const Terminal& term = t.terminal();
    if (term.morph && term.morph->morphs.size() >= 2) {
      const auto& morphs = term.morph->morphs;
      std::size_t k = morphs.size();
      while (k > 0 && tag_map.apply(morphs[k - 1].xpos) == "SF") --k;
      if (k > 0 && k < morphs.size()) {
        MorphSeg rest{{morphs.begin(), morphs.begin() + k}};
        MorphSeg run{{morphs.begin() + k, morphs.end()}};
        Terminal punct;
        punct.morph = run;
        punct.surface = surface_from_forms(run);
        Terminal host = term;
        host.morph = rest;
        if (host.surface.ends_with(punct.surface))
          host.surface.resize(host.surface.size() - punct.surface.size());
        else
          host.surface = surface_from_forms(rest);
        return {SyntaxTree::leaf(std::move(host)), SyntaxTree::leaf(std::move(punct))};
      }
    }
    return {t};
  }
  std::vector<SyntaxTree> kids;
  for (const SyntaxTree& c : t.children())
    for (SyntaxTree& piece : split_punct_rec(c, tag_map)) kids.push_back(std::move(piece));
  return {SyntaxTree::node(t.label(), std::move(kids))};
}

}  // namespace

SyntaxTree split_fused_punctuation(const SyntaxTree& tree, const TagMap& tag_map) {
  if (tree.is_leaf()) return tree;
  std::vector<SyntaxTree> out = split_punct_rec(tree, tag_map);
  return std::move(out.front());
}

namespace {

// Drops leaves with index >= cut, collecting them (wrapped in their
// preterminal when present) into `units`; prunes emptied nodes.
std::optional<SyntaxTree> drop_tail_rec(const SyntaxTree& t, std::size_t cut, std::size_t& idx,
                                        std::vector<SyntaxTree>& units) {
  if (t.is_leaf()) {
    if (idx++ >= cut) {
      units.push_back(t);
      return std::nullopt;
    }
    return t;
  }
  if (t.is_preterminal()) {
    if (idx++ >= cut) {
      units.push_back(t);
      return std::nullopt;
    }
    return t;
  }
  std::vector<SyntaxTree> kids;
  for (const SyntaxTree& c : t.children())
    if (auto r = drop_tail_rec(c, cut, idx, units)) kids.push_back(std::move(*r));
  if (kids.empty()) return std::nullopt;
  return SyntaxTree::node(t.label(), std::move(kids));
}

}  // namespace

SyntaxTree move_trailing_punctuation(const SyntaxTree& tree, const TagMap& tag_map) {
  if (tree.is_leaf()) return tree;
  std::vector<Terminal> leaves = yield_terminals(tree);
  std::size_t cut = leaves.size();
  while (cut > 0 && is_punct_terminal(leaves[cut - 1], tag_map)) --cut;
  if (cut == leaves.size() || cut == 0) return tree;
  std::vector<SyntaxTree> units;
  std::size_t idx = 0;
  std::optional<SyntaxTree> trimmed = drop_tail_rec(tree, cut, idx, units);
  SyntaxTree root = std::move(*trimmed);
  for (SyntaxTree& u : units) root.children().push_back(std::move(u));
  return root;
}

// ---- reattach_functional ----

namespace {

SyntaxTree transfer_plus_labels(const SyntaxTree& t, bool& pending) {
  if (t.is_leaf()) {
    if (pending && (t.terminal().surface.empty() || t.terminal().surface[0] != '+')) {
      Terminal term = t.terminal();
      term.surface = "+" + term.surface;
      pending = false;
      return SyntaxTree::leaf(std::move(term));
    }
    if (pending) pending = false;  // already marked
    return t;
  }
  CategoryLabel label = t.label();
  if (!label.base.empty() && label.base[0] == '+') {
    label.base.erase(0, 1);
    if (label.base.empty()) throw Error("MalformedLabel", "label is just \"+\"");
    pending = true;
  }
  std::vector<SyntaxTree> kids;
  kids.reserve(t.children().size());
  for (const SyntaxTree& c : t.children()) kids.push_back(transfer_plus_labels(c, pending));
  return SyntaxTree::node(std::move(label), std::move(kids));
}

struct MergePlan {
  std::vector<bool> drop;            // leaf index -> removed (merged away)
  std::vector<Terminal> replacement; // leaf index -> resolved terminal
};

std::optional<SyntaxTree> apply_plan_rec(const SyntaxTree& t, const MergePlan& plan,
                                         std::size_t& idx) {
  if (t.is_leaf()) {
    std::size_t j = idx++;
    if (plan.drop[j]) return std::nullopt;
    return SyntaxTree::leaf(plan.replacement[j]);
  }
  std::vector<SyntaxTree> kids;
  for (const SyntaxTree& c : t.children())
    if (auto r = apply_plan_rec(c, plan, idx)) kids.push_back(std::move(*r));
  if (kids.empty()) return std::nullopt;
  return SyntaxTree::node(t.label(), std::move(kids));
}

}  // namespace

SyntaxTree reattach_functional(const SyntaxTree& tree, const std::optional<std::string>& raw_text,
                               const CharSubstitutions& subs, WarningList* warnings,
                               const TagMap& tag_map) {
  bool pending = false;
  SyntaxTree marked = transfer_plus_labels(tree, pending);

  std::vector<Terminal> leaves = yield_terminals(marked);
  MergePlan plan;
  plan.drop.assign(leaves.size(), false);
  plan.replacement.resize(leaves.size());

  long host = -1;
  for (std::size_t j = 0; j < leaves.size(); ++j) {
    const std::string& surface = leaves[j].surface;
    bool functional = !surface.empty() && surface[0] == '+';
    MorphSeg seg = MorphSeg::parse(functional ? surface.substr(1) : surface);
    if (functional) {
      if (host < 0)
        throw Error("OrphanFunctional",
                    "functional morpheme \"" + surface + "\" has no preceding eojeol");
      MorphSeg& host_seg = *plan.replacement[host].morph;
      host_seg.morphs.insert(host_seg.morphs.end(), seg.morphs.begin(), seg.morphs.end());
      plan.drop[j] = true;
    } else {
      Terminal term = leaves[j];
      term.morph = std::move(seg);
      plan.replacement[j] = std::move(term);
      host = static_cast<long>(j);
    }
  }
  for (std::size_t j = 0; j < leaves.size(); ++j)
    if (!plan.drop[j]) {
      Terminal& term = plan.replacement[j];
      term.surface = surface_from_forms(*term.morph);
    }

  std::size_t idx = 0;
  std::optional<SyntaxTree> merged = apply_plan_rec(marked, plan, idx);
  if (!merged) throw Error("EmptyTree", "no eojeol left after reattachment");

  if (raw_text) {
    std::string joined;
    for (const Terminal& term : yield_terminals(*merged)) {
      if (!joined.empty()) joined += ' ';
      joined += term.surface;
    }
    std::vector<std::string> raw_tokens = whitespace_tokens(subs.apply(*raw_text));
    std::string normalized_raw;
    for (const std::string& tok : raw_tokens) {
      if (!normalized_raw.empty()) normalized_raw += ' ';
      normalized_raw += tok;
    }
    if (joined != normalized_raw)
      throw Error("YieldMismatch",
                  "merged yield \"" + joined + "\" does not match raw text \"" + normalized_raw + "\"");
  }

  SyntaxTree out = split_fused_punctuation(*merged, tag_map);
  out = move_trailing_punctuation(out, tag_map);
  (void)warnings;
  return out;
}

// ---- label_terminals ----

namespace {

SyntaxTree wrap_leaf(const SyntaxTree& leaf, const UposTable& table, const TagMap& tag_map) {
  Terminal term = leaf.terminal();
  if (term.is_null) return leaf;  // left for the validator to flag
  if (!term.morph)
    throw Error("MissingMorph", "leaf \"" + term.surface + "\" has no morph segmentation");
  std::string upos = map_upos(*term.morph, table, tag_map);
  term.upos = upos;
  return SyntaxTree::node(CategoryLabel{upos, {}}, {SyntaxTree::leaf(std::move(term))});
}

SyntaxTree label_rec(const SyntaxTree& t, const UposTable& table, const TagMap& tag_map) {
  if (t.is_leaf()) return wrap_leaf(t, table, tag_map);
  if (t.is_preterminal() && is_upos(t.label().base)) {
    SyntaxTree out = t;
    Terminal& term = out.children()[0].terminal();
    if (!term.upos) term.upos = t.label().base;
    return out;
  }
  std::vector<SyntaxTree> kids;
  kids.reserve(t.children().size());
  for (const SyntaxTree& c : t.children()) kids.push_back(label_rec(c, table, tag_map));
  return SyntaxTree::node(t.label(), std::move(kids));
}

}  // namespace

SyntaxTree label_terminals(const SyntaxTree& tree, const UposTable& table, const TagMap& tag_map) {
  return label_rec(tree, table, tag_map);
}

// ---- restructure_nominals ----

namespace {

bool is_upos_preterminal(const SyntaxTree& t) {
  return t.is_preterminal() && is_upos(t.label().base);
}

bool is_nominal_pre(const SyntaxTree& t) {
  if (!is_upos_preterminal(t)) return false;
  const std::string& b = t.label().base;
  return b == "NOUN" || b == "PROPN";
}

bool is_genitive(const SyntaxTree& pre, const TagMap& tag_map) {
  const Terminal& term = pre.children()[0].terminal();
  if (term.morph && !term.morph->morphs.empty())
    return tag_map.apply(term.morph->morphs.back().xpos) == "JKG";
  // No morph layer: fall back to plain UPOS adjacency.
  return true;
}

SyntaxTree fold_compound(std::vector<SyntaxTree> items, Branching branching) {
  if (items.size() == 1) return std::move(items.front());
  if (branching == Branching::Left) {
    SyntaxTree acc = SyntaxTree::node("NML", {std::move(items[0]), std::move(items[1])});
    for (std::size_t i = 2; i < items.size(); ++i)
      acc = SyntaxTree::node("NML", {std::move(acc), std::move(items[i])});
    return acc;
  }
  SyntaxTree acc = SyntaxTree::node(
      "NML", {std::move(items[items.size() - 2]), std::move(items[items.size() - 1])});
  for (std::size_t i = items.size() - 2; i-- > 0;)
    acc = SyntaxTree::node("NML", {std::move(items[i]), std::move(acc)});
  return acc;
}

SyntaxTree process_nominal(SyntaxTree node, const NmlRuleSet& rules, const TagMap& tag_map) {
  std::vector<SyntaxTree>& children = node.children();

  // Dissolve unary wrappers over preterminals (NP-MOD over PROPN etc.).
  for (SyntaxTree& c : children) {
    while (!c.is_leaf() && !c.is_preterminal() && c.children().size() == 1 &&
           is_upos_preterminal(c.children()[0])) {
      SyntaxTree inner = std::move(c.children()[0]);
      c = std::move(inner);
    }
  }

  // Apposition: a trailing run of 2+ PROPN preterminals with material before
  // it becomes its own NP.
  std::size_t run_start = children.size();
  while (run_start > 0 && is_upos_preterminal(children[run_start - 1]) &&
         children[run_start - 1].label().base == "PROPN")
    --run_start;
  std::optional<SyntaxTree> name_np;
  std::vector<SyntaxTree> desc;
  if (children.size() - run_start >= 2 && run_start >= 1) {
    std::vector<SyntaxTree> run(std::make_move_iterator(children.begin() + run_start),
                                std::make_move_iterator(children.end()));
    name_np = SyntaxTree::node("NP", std::move(run));
    desc.assign(std::make_move_iterator(children.begin()),
                std::make_move_iterator(children.begin() + run_start));
  } else {
    desc = std::move(children);
  }

  // Genitive nominal directly before an ADJ forms an AdjP.
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
    if (is_nominal_pre(desc[i]) && is_genitive(desc[i], tag_map) &&
        is_upos_preterminal(desc[i + 1]) && desc[i + 1].label().base == "ADJ") {
      SyntaxTree adjp = SyntaxTree::node("AdjP", {std::move(desc[i]), std::move(desc[i + 1])});
      desc[i] = std::move(adjp);
      desc.erase(desc.begin() + i + 1);
    }
  }

  // Compound grouping.
  bool all_nominal = !desc.empty();
  for (const SyntaxTree& c : desc)
    if (!is_nominal_pre(c)) {
      all_nominal = false;
      break;
    }
  if (all_nominal && desc.size() >= 3) {
    SyntaxTree head = std::move(desc.back());
    desc.pop_back();
    SyntaxTree grouped = fold_compound(std::move(desc), rules.compound_branching);
    desc.clear();
    desc.push_back(std::move(grouped));
    desc.push_back(std::move(head));
  } else {
    std::size_t t_start = desc.size();
    while (t_start > 0 && is_nominal_pre(desc[t_start - 1])) --t_start;
    if (desc.size() - t_start >= 2 && t_start >= 1) {
      std::vector<SyntaxTree> run(std::make_move_iterator(desc.begin() + t_start),
                                  std::make_move_iterator(desc.end()));
      desc.resize(t_start);
      desc.push_back(fold_compound(std::move(run), rules.compound_branching));
    }
  }

  std::vector<SyntaxTree> rebuilt;
  if (name_np) {
    if (rules.analysis == NmlAnalysis::Layered && desc.size() >= 2) {
      rebuilt.push_back(SyntaxTree::node("NML", std::move(desc)));
    } else {
      rebuilt = std::move(desc);
    }
    rebuilt.push_back(std::move(*name_np));
  } else {
    rebuilt = std::move(desc);
  }
  return SyntaxTree::node(node.label(), std::move(rebuilt));
}

SyntaxTree restructure_rec(const SyntaxTree& t, const NmlRuleSet& rules, const TagMap& tag_map) {
  if (t.is_leaf() || t.is_preterminal()) return t;
  std::vector<SyntaxTree> kids;
  kids.reserve(t.children().size());
  for (const SyntaxTree& c : t.children()) kids.push_back(restructure_rec(c, rules, tag_map));
  SyntaxTree out = SyntaxTree::node(t.label(), std::move(kids));
  if (out.label().base == "NP" || out.label().base == "NML")
    out = process_nominal(std::move(out), rules, tag_map);
  return out;
}

}  // namespace

SyntaxTree restructure_nominals(const SyntaxTree& tree, const NmlRuleSet& rules,
                                const TagMap& tag_map) {
  if (rules.analysis == NmlAnalysis::Flat) return tree;
  return restructure_rec(tree, rules, tag_map);
}

// ---- pipeline ----

std::optional<SyntaxTree> normalize_pipeline(const SyntaxTree& tree, Dialect dialect,
                                             const Pipeline& pipeline,
                                             const std::optional<std::string>& text,
                                             const std::optional<std::string>& raw_text,
                                             WarningList* warnings) {
  if (validate_dialect(tree, Dialect::Normalized).empty()) return tree;

  std::vector<Violation> violations = validate_dialect(tree, dialect);
  if (!violations.empty())
    throw Error(to_string(violations.front().code), violations.front().message +
                                                        " (node " + violations.front().location + ")");

  SyntaxTree t = tree;
  if (dialect == Dialect::Kaist) {
    const std::optional<std::string>& raw = raw_text ? raw_text : text;
    t = reattach_functional(t, raw, pipeline.substitutions, warnings, pipeline.tag_map);
  } else {
    t = resolve_morphology(t, text, pipeline.substitutions, warnings);
  }

  std::optional<SyntaxTree> stripped = strip_nulls(t, pipeline.config.null_patterns);
  if (!stripped) return std::nullopt;
  t = std::move(*stripped);

  t = split_fused_punctuation(t, pipeline.tag_map);
  t = move_trailing_punctuation(t, pipeline.tag_map);
  t = debinarize(t, pipeline.config.splice_requires_tag_match);
  t = label_terminals(t, pipeline.upos, pipeline.tag_map);
  t = restructure_nominals(t, pipeline.config.nml, pipeline.tag_map);
  return t;
}

}  // namespace eotree
