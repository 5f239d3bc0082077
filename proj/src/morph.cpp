#include "eotree/morph.hpp"

#include <algorithm>
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

}  // namespace

MorphSeg MorphSeg::parse(std::string_view text) {
  if (text.empty()) throw Error("EmptyField", "empty morph segmentation");
  MorphSeg seg;
  for (const std::string& chunk : split(text, '+')) {
    if (chunk.empty())
      throw Error("MalformedSegment", "empty morpheme in \"" + std::string(text) + "\"");
    // The form may itself contain '/', the tag may not: split on the last.
    std::size_t slash = chunk.rfind('/');
    if (slash == std::string::npos)
      throw Error("MalformedSegment", "missing '/' in \"" + chunk + "\"");
    std::string form = chunk.substr(0, slash);
    std::string xpos = chunk.substr(slash + 1);
    if (form.empty()) throw Error("EmptyField", "empty form in \"" + chunk + "\"");
    if (xpos.empty()) throw Error("EmptyField", "empty tag in \"" + chunk + "\"");
    seg.morphs.push_back({std::move(form), std::move(xpos)});
  }
  return seg;
}

std::string MorphSeg::str() const {
  std::string out;
  for (std::size_t i = 0; i < morphs.size(); ++i) {
    if (i) out += '+';
    out += morphs[i].form;
    out += '/';
    out += morphs[i].xpos;
  }
  return out;
}

TagMap TagMap::parse_tsv(std::string_view text) {
  TagMap map;
  std::size_t lineno = 0;
  for (const std::string& line : split(text, '\n')) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (!cols.empty() && !cols.back().empty() && cols.back().back() == '\r')
      cols.back().pop_back();
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw Error("MalformedSegment",
                  "tag map line " + std::to_string(lineno) + ": expected FROM<TAB>TO");
    map.set(cols[0], cols[1]);
  }
  return map;
}

TagMap TagMap::load_tsv(const std::filesystem::path& path) {
  return parse_tsv(read_file(path));
}

namespace {

std::vector<std::string> parse_alternatives(const std::string& s) {
  std::vector<std::string> alts = split(s, '|');
  for (const std::string& a : alts)
    if (a.empty()) throw Error("MalformedSegment", "empty tag alternative in \"" + s + "\"");
  return alts;
}

UposRule parse_match(const std::string& expr, std::string upos) {
  UposRule rule;
  rule.upos = std::move(upos);
  if (expr == "*") {
    rule.always = true;
    return rule;
  }
  for (const std::string& cond : split(expr, '&')) {
    std::size_t eq = cond.find('=');
    if (eq == std::string::npos)
      throw Error("MalformedSegment", "bad match condition \"" + cond + "\"");
    std::string key = cond.substr(0, eq);
    std::vector<std::string> alts = parse_alternatives(cond.substr(eq + 1));
    if (key == "first")
      rule.first = alts;
    else if (key == "last")
      rule.last = alts;
    else if (key == "contains")
      rule.contains = alts;
    else
      throw Error("MalformedSegment", "unknown match key \"" + key + "\"");
  }
  return rule;
}

}  // namespace

UposTable UposTable::parse_tsv(std::string_view text) {
  std::vector<std::pair<long, UposRule>> rows;
  std::string fallback = "X";
  std::size_t lineno = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() == 2 && cols[0] == "default") {
      fallback = cols[1];
      continue;
    }
    if (cols.size() != 3)
      throw Error("MalformedSegment",
                  "rule line " + std::to_string(lineno) + ": expected PRIORITY<TAB>MATCH<TAB>UPOS");
    long priority = 0;
    try {
      priority = std::stol(cols[0]);
    } catch (const std::exception&) {
      throw Error("MalformedSegment", "bad priority \"" + cols[0] + "\"");
    }
    rows.emplace_back(priority, parse_match(cols[1], cols[2]));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  UposTable table;
  table.set_fallback(fallback);
  for (auto& [priority, rule] : rows) table.add_rule(std::move(rule));
  return table;
}

UposTable UposTable::load_tsv(const std::filesystem::path& path) {
  return parse_tsv(read_file(path));
}

UposTable UposTable::defaults() {
  UposTable t;
  t.add_rule({.last = {"ETM"}, .contains = {"VCP", "XSN"}, .upos = "ADJ"});
  t.add_rule({.last = {"EF", "EC", "EP"}, .contains = {"VV", "VX", "VCP"}, .upos = "VERB"});
  t.add_rule({.last = {"SF"}, .upos = "PUNCT"});
  t.add_rule({.first = {"SF", "SP", "SS", "SE", "SO"}, .upos = "PUNCT"});
  t.add_rule({.first = {"NNP"}, .upos = "PROPN"});
  t.add_rule({.first = {"NNG", "NNB", "NR", "XR"}, .upos = "NOUN"});
  t.add_rule({.first = {"MAG"}, .upos = "ADV"});
  t.add_rule({.first = {"MMD"}, .upos = "DET"});
  return t;
}

namespace {

bool any_of_tags(const std::string& tag, const std::vector<std::string>& alts) {
  return std::find(alts.begin(), alts.end(), tag) != alts.end();
}

}  // namespace

std::string UposTable::assign(const MorphSeg& seg, const TagMap& tag_map) const {
  if (seg.morphs.empty()) return fallback_;
  std::vector<std::string> tags;
  tags.reserve(seg.morphs.size());
  for (const Morpheme& m : seg.morphs) tags.push_back(tag_map.apply(m.xpos));
  for (const UposRule& rule : rules_) {
    if (rule.always) return rule.upos;
    if (!rule.first.empty() && !any_of_tags(tags.front(), rule.first)) continue;
    if (!rule.last.empty() && !any_of_tags(tags.back(), rule.last)) continue;
    if (!rule.contains.empty()) {
      bool hit = false;
      for (const std::string& t : tags)
        if (any_of_tags(t, rule.contains)) {
          hit = true;
          break;
        }
      if (!hit) continue;
    }
    return rule.upos;
  }
  return fallback_;
}

std::string map_upos(const MorphSeg& seg, const UposTable& table, const TagMap& tag_map) {
  return table.assign(seg, tag_map);
}

}  // namespace eotree
