#pragma once

#include "eotree/morph.hpp"
#include "eotree/tree.hpp"

namespace eotree {

// Built-in XPOS normalization tables mapping the Kaist and Penn Korean
// tagsets onto Sejong classes. Mirrored by configs/{kaist,penn}_tag_map.tsv;
// a test keeps both in sync.
TagMap kaist_tag_map();
TagMap penn_tag_map();

// Identity for Sejong/Normalized input.
TagMap default_tag_map(Dialect dialect);

}  // namespace eotree
