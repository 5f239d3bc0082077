#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eotree/diagnostics.hpp"

namespace eotree {

// One morpheme: surface form + fine-grained POS tag (XPOS).
struct Morpheme {
  std::string form;
  std::string xpos;

  bool operator==(const Morpheme&) const = default;
};

// A "+"-joined morpheme segmentation of one eojeol,
// e.g. 프랑스/NNP+의/JKG.
struct MorphSeg {
  std::vector<Morpheme> morphs;

  static MorphSeg parse(std::string_view text);
  std::string str() const;

  bool operator==(const MorphSeg&) const = default;
};

// XPOS normalization table (e.g. Kaist lowercase tags -> Sejong classes).
// Unknown tags map to themselves.
class TagMap {
 public:
  TagMap() = default;

  static TagMap load_tsv(const std::filesystem::path& path);
  static TagMap parse_tsv(std::string_view text);

  std::string apply(const std::string& xpos) const {
    auto it = map_.find(xpos);
    return it == map_.end() ? xpos : it->second;
  }
  void set(std::string from, std::string to) { map_[std::move(from)] = std::move(to); }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, std::string>& entries() const { return map_; }

  bool operator==(const TagMap&) const = default;

 private:
  std::map<std::string, std::string> map_;
};

// One UPOS assignment rule: all listed tests must hold; each test passes
// when the (tag-mapped) xpos is any of its alternatives.
struct UposRule {
  std::vector<std::string> first;     // first xpos in ...
  std::vector<std::string> last;      // last xpos in ...
  std::vector<std::string> contains;  // some xpos in ...
  bool always = false;                // wildcard rule ("*")
  std::string upos;
};

// Ordered first-match rule table over the XPOS sequence of a segmentation.
class UposTable {
 public:
  static UposTable defaults();
  static UposTable load_tsv(const std::filesystem::path& path);
  static UposTable parse_tsv(std::string_view text);

  std::string assign(const MorphSeg& seg, const TagMap& tag_map = {}) const;

  const std::vector<UposRule>& rules() const { return rules_; }
  void add_rule(UposRule rule) { rules_.push_back(std::move(rule)); }
  void set_fallback(std::string upos) { fallback_ = std::move(upos); }
  const std::string& fallback() const { return fallback_; }

 private:
  std::vector<UposRule> rules_;
  std::string fallback_ = "X";
};

std::string map_upos(const MorphSeg& seg, const UposTable& table, const TagMap& tag_map = {});

}  // namespace eotree
