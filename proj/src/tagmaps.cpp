#include "eotree/tagmaps.hpp"

namespace eotree {

TagMap kaist_tag_map() {
  TagMap m;
  // nouns
  m.set("ncn", "NNG");
  m.set("ncpa", "NNG");
  m.set("ncps", "NNG");
  m.set("nq", "NNP");
  m.set("nbn", "NNB");
  m.set("nbu", "NNB");
  m.set("npp", "NP");
  m.set("npd", "NP");
  m.set("nnc", "NR");
  m.set("nno", "NR");
  // predicates; predicative adjectives conjugate like verbs, so they are
  // folded into VV for the verbal UPOS rule
  m.set("pvg", "VV");
  m.set("pvd", "VV");
  m.set("paa", "VV");
  m.set("pad", "VV");
  m.set("px", "VX");
  m.set("jp", "VCP");
  // adverbs and determiners
  m.set("mag", "MAG");
  m.set("maj", "MAG");
  m.set("mad", "MAG");
  m.set("mmd", "MMD");
  m.set("mma", "MMD");
  // particles
  m.set("jxc", "JX");
  m.set("jxt", "JX");
  m.set("jcs", "JKS");
  m.set("jco", "JKO");
  m.set("jcm", "JKG");
  m.set("jca", "JKB");
  m.set("jct", "JKB");
  m.set("jcv", "JKV");
  m.set("jcj", "JC");
  // endings
  m.set("ecc", "EC");
  m.set("ecs", "EC");
  m.set("ecx", "EC");
  m.set("ef", "EF");
  m.set("ep", "EP");
  m.set("etm", "ETM");
  m.set("etn", "ETN");
  // affixes
  m.set("xsv", "XSV");
  m.set("xsn", "XSN");
  m.set("xsm", "XSA");
  // symbols
  m.set("sf", "SF");
  m.set("sp", "SP");
  m.set("sl", "SS");
  m.set("sr", "SS");
  m.set("sd", "SO");
  m.set("se", "SE");
  return m;
}

TagMap penn_tag_map() {
  TagMap m;
  // nouns
  m.set("NPR", "NNP");
  m.set("NNC", "NNG");
  m.set("NNX", "NNB");
  m.set("NNU", "NR");
  m.set("NPN", "NP");
  m.set("NFW", "SL");
  // predicates and copula
  m.set("VJ", "VA");
  m.set("CO", "VCP");
  m.set("LV", "VV");
  // determiners and adverbs
  m.set("DAN", "MMD");
  m.set("ADV", "MAG");
  m.set("ADC", "MAG");
  m.set("IJ", "IC");
  // particles
  m.set("PAU", "JX");
  m.set("PAN", "JKG");
  m.set("PCA", "JKO");
  m.set("PAD", "JKQ");
  m.set("PCJ", "JC");
  // endings and affixes
  m.set("EFN", "EF");
  m.set("EPF", "EP");
  m.set("EAN", "ETM");
  m.set("ENM", "ETN");
  m.set("XSF", "XSN");
  // symbols
  m.set("SFN", "SF");
  m.set("SCM", "SP");
  m.set("SSY", "SS");
  return m;
}

TagMap default_tag_map(Dialect dialect) {
  switch (dialect) {
    case Dialect::Kaist: return kaist_tag_map();
    case Dialect::PennKorean: return penn_tag_map();
    case Dialect::Sejong:
    case Dialect::Normalized: return {};
  }
  return {};
}

}  // namespace eotree
