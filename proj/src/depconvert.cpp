#include "eotree/depconvert.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace eotree {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

HeadRules HeadRules::defaults() {
  HeadRules rules;
  rules.directives["S"] = {HeadDirective::Direction::Rightmost, {"VP"}};
  rules.directives["VP"] = {HeadDirective::Direction::Rightmost, {"VERB", "VP"}};
  rules.directives["NP"] = {HeadDirective::Direction::Rightmost, {"NOUN", "PROPN", "NP"}};
  return rules;
}

HeadRules HeadRules::parse_tsv(std::string_view text) {
  HeadRules rules;
  std::size_t lineno = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw Error("MalformedSegment", "head rule line " + std::to_string(lineno) +
                                          ": expected BASE<TAB>DIRECTION<TAB>PRIORITIES");
    HeadDirective d;
    if (cols[1] == "leftmost")
      d.direction = HeadDirective::Direction::Leftmost;
    else if (cols[1] == "rightmost")
      d.direction = HeadDirective::Direction::Rightmost;
    else
      throw Error("MalformedSegment", "direction must be leftmost or rightmost, got \"" +
                                          cols[1] + "\"");
    if (cols[2] != "-")
      for (const std::string& p : split(cols[2], ','))
        if (!p.empty()) d.priorities.push_back(p);
    rules.directives[cols[0]] = std::move(d);
  }
  return rules;
}

HeadRules HeadRules::load_tsv(const std::filesystem::path& path) {
  return parse_tsv(read_file(path));
}

LabelMap LabelMap::defaults() {
  LabelMap map;
  map.labels["SBJ"] = "sbj";
  map.labels["AJT"] = "ajt";
  map.labels["MOD"] = "mod";
  return map;
}

LabelMap LabelMap::parse_tsv(std::string_view text) {
  LabelMap map;
  std::size_t lineno = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw Error("MalformedSegment",
                  "label map line " + std::to_string(lineno) + ": expected TAG<TAB>LABEL");
    map.labels[cols[0]] = cols[1];
  }
  return map;
}

LabelMap LabelMap::load_tsv(const std::filesystem::path& path) {
  return parse_tsv(read_file(path));
}

std::string LabelMap::for_tag(const std::string& tag) const {
  auto it = labels.find(tag);
  if (it != labels.end()) return it->second;
  return lowercase(tag);
}

namespace {

bool is_punct_unit(const SyntaxTree& t) {
  if (t.is_leaf()) return t.terminal().upos && *t.terminal().upos == "PUNCT";
  if (t.is_preterminal()) return t.label().base == "PUNCT";
  return false;
}

const std::string& unit_base(const SyntaxTree& t) {
  static const std::string empty;
  return t.is_leaf() ? empty : t.label().base;
}

}  // namespace

std::size_t find_head(const SyntaxTree& node, const HeadRules& rules) {
  if (node.is_leaf() || node.children().empty())
    throw Error("NotNormalized", "find_head needs an internal node");
  const std::vector<SyntaxTree>& kids = node.children();
  if (kids.size() == 1) return 0;

  HeadDirective directive;  // default: rightmost, no priorities
  auto it = rules.directives.find(node.label().base);
  if (it != rules.directives.end()) directive = it->second;

  auto scan = [&](auto&& pred) -> std::optional<std::size_t> {
    if (directive.direction == HeadDirective::Direction::Leftmost) {
      for (std::size_t i = 0; i < kids.size(); ++i)
        if (pred(kids[i])) return i;
    } else {
      for (std::size_t i = kids.size(); i-- > 0;)
        if (pred(kids[i])) return i;
    }
    return std::nullopt;
  };

  for (const std::string& priority : directive.priorities) {
    auto hit = scan([&](const SyntaxTree& c) { return unit_base(c) == priority; });
    if (hit) return *hit;
  }
  if (auto hit = scan([&](const SyntaxTree& c) { return !is_punct_unit(c); })) return *hit;
  return directive.direction == HeadDirective::Direction::Leftmost ? 0 : kids.size() - 1;
}

namespace {

struct DepBuilder {
  const HeadRules& rules;
  const LabelMap& labels;
  DepGraph graph;

  std::string arc_label(const SyntaxTree& child) const {
    if (is_punct_unit(child)) return labels.punct;
    if (!child.is_leaf() && !child.label().function_tags.empty())
      return labels.for_tag(child.label().function_tags.front());
    return labels.plain;
  }

  // Returns the 1-based index of the subtree's lexical head token.
  int percolate(const SyntaxTree& t, int& next_index) {
    if (t.is_leaf() || t.is_preterminal()) {
      const Terminal& term = t.is_leaf() ? t.terminal() : t.children()[0].terminal();
      DepNode node;
      node.index = next_index++;
      node.surface = term.surface;
      node.upos = term.upos ? *term.upos : (t.is_preterminal() ? t.label().base : "X");
      node.morph = term.morph;
      graph.nodes.push_back(std::move(node));
      return graph.nodes.back().index;
    }
    std::size_t head_child = find_head(t, rules);
    std::vector<int> heads(t.children().size());
    for (std::size_t i = 0; i < t.children().size(); ++i)
      heads[i] = percolate(t.children()[i], next_index);
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      if (i == head_child) continue;
      graph.arcs.push_back({heads[i], heads[head_child], arc_label(t.children()[i])});
    }
    return heads[head_child];
  }
};

}  // namespace

DepGraph to_dependency(const SyntaxTree& tree, const HeadRules& rules, const LabelMap& labels) {
  DepBuilder builder{rules, labels, {}};
  int next_index = 1;
  int root = builder.percolate(tree, next_index);

  bool any_content = false;
  for (const DepNode& n : builder.graph.nodes)
    if (n.upos != "PUNCT") {
      any_content = true;
      break;
    }
  if (!any_content) throw Error("AllPunct", "sentence has no non-punctuation token");

  builder.graph.arcs.push_back({root, 0, labels.root});
  builder.graph.root = root;
  std::sort(builder.graph.arcs.begin(), builder.graph.arcs.end(),
            [](const DepArc& a, const DepArc& b) { return a.dependent < b.dependent; });
  return builder.graph;
}

std::string emit_dependencies(const DepGraph& graph, const std::string& sent_id,
                              const std::string& text) {
  std::string out;
  out += "# sent id = " + sent_id + "\n";
  out += "# text = " + text + "\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const DepNode& node = graph.nodes[i];
    const DepArc& arc = graph.arcs[i];
    if (arc.dependent != node.index)
      throw Error("IdOrder", "arc list out of step with node list");
    out += std::to_string(node.index);
    out += '\t';
    out += node.surface;
    out += "\t_\t";
    out += node.upos;
    out += '\t';
    out += node.morph ? node.morph->str() : "_";
    out += "\t_\t";
    out += std::to_string(arc.head);
    out += '\t';
    out += arc.label;
    out += "\t_\t_\n";
  }
  return out;
}

std::vector<ParsedDeps> read_dependencies(std::string_view text) {
  std::vector<ParsedDeps> out;
  ParsedDeps current;
  bool in_block = false;

  auto flush = [&]() {
    if (!in_block) return;
    for (const DepArc& arc : current.graph.arcs)
      if (arc.head == 0) current.graph.root = arc.dependent;
    out.push_back(std::move(current));
    current = {};
    in_block = false;
  };

  for (const std::string& raw : split(text, '\n')) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      constexpr std::string_view kId = "# sent id = ";
      constexpr std::string_view kText = "# text = ";
      if (line.rfind(kId, 0) == 0) current.sent_id = line.substr(kId.size());
      if (line.rfind(kText, 0) == 0) current.text = line.substr(kText.size());
      in_block = true;
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw Error("ColumnCount", "dependency row has " + std::to_string(cols.size()) +
                                     " columns, expected 10");
    DepNode node;
    node.index = std::stoi(cols[0]);
    node.surface = cols[1];
    node.upos = cols[3];
    if (cols[4] != "_") node.morph = MorphSeg::parse(cols[4]);
    DepArc arc;
    arc.dependent = node.index;
    arc.head = std::stoi(cols[6]);
    arc.label = cols[7];
    current.graph.nodes.push_back(std::move(node));
    current.graph.arcs.push_back(std::move(arc));
    in_block = true;
  }
  flush();
  return out;
}

}  // namespace eotree
