// Copyright 2026 The toucan-prep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.h"
#include "toucan_prep/homograph.h"
#include "toucan_prep/pos_tagging.h"

namespace toucan_prep {
namespace {

using testing::DataPath;

const HomographDictionary& Dictionary() {
  static const HomographDictionary kDictionary =
      HomographDictionary::Load(DataPath("homographs.jsonl"));
  return kDictionary;
}

std::vector<TaggedToken> Tagged(
    std::initializer_list<std::pair<const char*, const char*>> words) {
  std::vector<TaggedToken> out;
  for (const auto& [surface, tag] : words) {
    TaggedToken t;
    t.surface = surface;
    t.extended_tag = tag;
    t.coarse_tag = TagMap::Default().CoarseOf(tag);
    t.token_index = out.size();
    out.push_back(t);
  }
  return out;
}

TEST(LoadDictionary, AdoptionsEntry) {
  const auto dict = HomographDictionary::Parse(
      R"({"grapheme": "adoptions", "candidates": [{"ipa": "adɔpsjɔ̃", "coarse": "NOUN"}, {"ipa": "adɔptjɔ̃", "coarse": "VERB"}], "default": 0})");
  EXPECT_EQ(dict.size(), 1u);
  ASSERT_NE(dict.Find("Adoptions"), nullptr);
}

TEST(LoadDictionary, EmptyFile) {
  EXPECT_EQ(HomographDictionary::Parse("").size(), 0u);
}

TEST(LoadDictionary, DuplicateGrapheme) {
  const std::string line =
      R"({"grapheme": "fils", "candidates": [{"ipa": "fis", "coarse": "NOUN"}], "default": 0})";
  EXPECT_ERROR_CODE(HomographDictionary::Parse(line + "\n" + line),
                    ErrorCode::kDuplicateGrapheme);
}

TEST(LoadDictionary, DuplicateTagPair) {
  EXPECT_ERROR_CODE(
      HomographDictionary::Parse(
          R"({"grapheme": "x", "candidates": [{"ipa": "a", "coarse": "NOUN"}, {"ipa": "b", "coarse": "NOUN"}], "default": 0})"),
      ErrorCode::kInvariantViolation);
  EXPECT_ERROR_CODE(
      HomographDictionary::Parse(R"({"grapheme": "x", "candidates": [], "default": 0})"),
      ErrorCode::kInvariantViolation);
  EXPECT_ERROR_CODE(
      HomographDictionary::Parse(
          R"({"grapheme": "x", "candidates": [{"ipa": "a", "coarse": "NOUN"}], "default": 3})"),
      ErrorCode::kInvariantViolation);
}

TEST(LoadDictionary, ParseErrorCarriesLine) {
  const std::string good =
      R"({"grapheme": "a", "candidates": [{"ipa": "a", "coarse": "NOUN"}], "default": 0})";
  try {
    HomographDictionary::Parse(good + "\n\n{not json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadDictionary, ShippedDictionaryCoversKeyWords) {
  EXPECT_GE(Dictionary().size(), 50u);
  for (const char* word : {"adoptions", "fils", "plus"}) {
    EXPECT_NE(Dictionary().Find(word), nullptr) << word;
  }
}

TEST(Resolve, AdoptionsVerbIsCoarseMatch) {
  HomographResolver resolver(Dictionary());
  const auto r = resolver.Resolve(Tagged({{"adoptions", "VERB"}})[0]);
  EXPECT_EQ(r.pronunciation, "adɔptjɔ̃");
  EXPECT_EQ(r.method, ResolutionMethod::kCoarseMatch);
}

TEST(Resolve, FilsSingularIsExtendedMatch) {
  HomographResolver resolver(Dictionary());
  const auto r = resolver.Resolve(Tagged({{"fils", "NMS"}})[0]);
  EXPECT_EQ(r.pronunciation, "fis");
  EXPECT_EQ(r.method, ResolutionMethod::kExtendedMatch);
}

TEST(Resolve, NonHomograph) {
  HomographResolver resolver(Dictionary());
  ASSERT_EQ(Dictionary().Find("maison"), nullptr);
  const auto r = resolver.Resolve(Tagged({{"maison", "NFS"}})[0]);
  EXPECT_EQ(r.method, ResolutionMethod::kNotHomograph);
  EXPECT_TRUE(r.pronunciation.empty());
}

TEST(Resolve, DefaultFallback) {
  HomographResolver resolver(Dictionary());
  const auto r = resolver.Resolve(Tagged({{"adoptions", "DET"}})[0]);
  EXPECT_EQ(r.method, ResolutionMethod::kDefaultFallback);
  EXPECT_EQ(r.pronunciation, "adɔpsjɔ̃");
}

TEST(ResolvePlus, Negation) {
  HomographResolver resolver(Dictionary());
  const auto s = Tagged({{"Je", "PPER1S"}, {"ne", "ADV"}, {"veux", "VERB"},
                         {"plus", "ADV"}, {".", "YPFOR"}});
  const auto r = resolver.Resolve(s, 3);
  EXPECT_EQ(r.pronunciation, "ply");
  EXPECT_EQ(r.plus_rule, PlusRule::kNegation);
}

TEST(ResolvePlus, ConsonantInitialAdjective) {
  HomographResolver resolver(Dictionary());
  const auto s = Tagged({{"plus", "ADV"}, {"grand", "ADJMS"}});
  const auto r = resolver.Resolve(s, 0);
  EXPECT_EQ(r.pronunciation, "ply");
  EXPECT_EQ(r.plus_rule, PlusRule::kConsonantFollows);
}

TEST(ResolvePlus, VowelInitialAdjectiveTakesLiaison) {
  HomographResolver resolver(Dictionary());
  const auto s = Tagged({{"plus", "ADV"}, {"important", "ADJMS"}});
  const auto r = resolver.Resolve(s, 0);
  EXPECT_EQ(r.pronunciation, "plyz");
  EXPECT_EQ(r.plus_rule, PlusRule::kLiaison);
}

TEST(ResolvePlus, PlainReading) {
  HomographResolver resolver(Dictionary());
  const auto s = Tagged({{"deux", "NUM"}, {"plus", "ADV"}, {"deux", "NUM"}});
  const auto r = resolver.Resolve(s, 1);
  EXPECT_EQ(r.pronunciation, "plys");
  EXPECT_EQ(r.plus_rule, PlusRule::kPlain);
}

TEST(ResolvePlus, NegationStopsAtClauseBoundary) {
  HomographResolver resolver(Dictionary());
  const auto s = Tagged({{"Il", "PPER3MS"}, {"ne", "ADV"}, {"vient", "VERB"},
                         {"pas", "ADV"}, {",", "YPFOR"}, {"deux", "NUM"},
                         {"plus", "ADV"}, {"deux", "NUM"}});
  EXPECT_EQ(resolver.Resolve(s, 6).plus_rule, PlusRule::kPlain);
}

TEST(ResolvePlus, HAspireCountsAsConsonant) {
  HomographResolver resolver(Dictionary());
  EXPECT_EQ(resolver.Resolve(Tagged({{"plus", "ADV"}, {"haut", "ADJMS"}}), 0)
                .plus_rule,
            PlusRule::kConsonantFollows);
  EXPECT_EQ(resolver.Resolve(Tagged({{"plus", "ADV"}, {"habile", "ADJMS"}}), 0)
                .plus_rule,
            PlusRule::kLiaison);
}

TEST(StartsWithVowelSound, Spelling) {
  const auto& config = PlusRuleConfig::Default();
  EXPECT_TRUE(StartsWithVowelSound("important", config));
  EXPECT_TRUE(StartsWithVowelSound("Élégant", config));
  EXPECT_TRUE(StartsWithVowelSound("heureux", config));
  EXPECT_FALSE(StartsWithVowelSound("grand", config));
  EXPECT_FALSE(StartsWithVowelSound("hideux", config));
  EXPECT_FALSE(StartsWithVowelSound("yaourt", config));
  EXPECT_FALSE(StartsWithVowelSound("", config));
}

// Independent statement of the cascade, used as the oracle below.
PlusRule ExpectedPlusRule(const std::vector<TaggedToken>& s, size_t k) {
  static const std::set<std::string> cues = {"ne", "n'", "non", "sans", "aucun",
                                             "jamais", "rien", "personne"};
  for (size_t j = k; j-- > 0;) {
    const std::string& w = s[j].surface;
    if (w == "," || w == ";" || w == "." || w == ":" || w == "!" || w == "?") break;
    if (cues.contains(w)) return PlusRule::kNegation;
  }
  if (k + 1 < s.size() &&
      (s[k + 1].coarse_tag == "ADJ" || s[k + 1].coarse_tag == "ADV")) {
    const std::string& w = s[k + 1].surface;
    const bool vowel = w == "important" || w == "utile" || w == "heureux";
    return vowel ? PlusRule::kLiaison : PlusRule::kConsonantFollows;
  }
  return PlusRule::kPlain;
}

TEST(ResolvePlus, ExactlyOneRuleFiresInCascadeOrder) {
  const std::vector<std::pair<const char*, const char*>> vocabulary = {
      {"ne", "ADV"},      {"jamais", "ADV"},  {"sans", "PREP"},
      {"rien", "PINDMS"}, {"il", "PPER3MS"},  {"mange", "VERB"},
      {",", "YPFOR"},     {";", "YPFOR"},     {"grand", "ADJMS"},
      {"important", "ADJMS"}, {"utile", "ADJMS"}, {"heureux", "ADJMS"},
      {"vite", "ADV"},    {"deux", "NUM"},    {"le", "DETMS"},
      {"chat", "NMS"},    {"plus", "ADV"}};
  HomographResolver resolver(Dictionary());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    std::vector<TaggedToken> s;
    const size_t n = 1 + rng() % 8;
    for (size_t i = 0; i < n; ++i) {
      const auto& [w, tag] = vocabulary[rng() % vocabulary.size()];
      s.push_back(Tagged({{w, tag}})[0]);
    }
    const size_t k = rng() % n;
    s[k] = Tagged({{"plus", "ADV"}})[0];
    const Resolution r = resolver.Resolve(s, k);
    ASSERT_EQ(r.method, ResolutionMethod::kPlusRule);
    ASSERT_EQ(r.plus_rule, ExpectedPlusRule(s, k));
    const std::string expected = r.plus_rule == PlusRule::kLiaison ? "plyz"
                                 : r.plus_rule == PlusRule::kPlain ? "plys"
                                                                   : "ply";
    ASSERT_EQ(r.pronunciation, expected);
  }
}

TEST(ResolveProperties, TotalityAndFallbackSoundness) {
  HomographResolver resolver(Dictionary());
  const std::vector<std::string> tags = {
      "NMS", "NFS", "NMP", "NFP", "VERB", "VPPMS", "AUX", "ADJ", "ADJFS",
      "ADV", "DET", "PREP", "NUM", "PRON", "INTJ", "X", "NEG", "LIAISON"};
  for (const std::string& grapheme : Dictionary().Graphemes()) {
    if (grapheme == "plus") continue;
    const HomographEntry& entry = *Dictionary().Find(grapheme);
    for (const std::string& tag : tags) {
      TaggedToken t;
      t.surface = grapheme;
      t.extended_tag = tag;
      t.coarse_tag = TagMap::Default().CoarseOf(tag);
      const Resolution r = resolver.Resolve(t);
      ASSERT_FALSE(r.pronunciation.empty()) << grapheme;
      int coarse_matches = 0;
      bool extended_matches = false;
      for (const auto& c : entry.candidates) {
        coarse_matches += c.coarse_pos == t.coarse_tag;
        extended_matches |= c.extended_pos == t.extended_tag;
      }
      if (coarse_matches != 1 && !extended_matches) {
        EXPECT_EQ(r.method, ResolutionMethod::kDefaultFallback) << grapheme;
        EXPECT_EQ(r.pronunciation, entry.candidates[entry.default_index].ipa);
      }
    }
  }
}

TEST(ResolveProperties, OracleTagsReachEveryDistinguishableCandidate) {
  HomographResolver resolver(Dictionary());
  for (const std::string& grapheme : Dictionary().Graphemes()) {
    if (grapheme == "plus") continue;
    const HomographEntry& entry = *Dictionary().Find(grapheme);
    for (const auto& c : entry.candidates) {
      int same_coarse = 0;
      for (const auto& other : entry.candidates) same_coarse += other.coarse_pos == c.coarse_pos;
      TaggedToken t;
      t.surface = grapheme;
      if (same_coarse == 1) {
        t.extended_tag = t.coarse_tag = c.coarse_pos;
      } else if (c.extended_pos) {
        t.extended_tag = *c.extended_pos;
        t.coarse_tag = c.coarse_pos;
      } else {
        continue;
      }
      const Resolution r = resolver.Resolve(t);
      EXPECT_EQ(r.pronunciation, c.ipa) << grapheme << " " << c.coarse_pos;
      EXPECT_TRUE(r.method == ResolutionMethod::kCoarseMatch ||
                  r.method == ResolutionMethod::kExtendedMatch);
    }
  }
}

TEST(AnnotateText, NoHomographs) {
  HomographResolver resolver(Dictionary());
  const auto tags = FileTagProvider::Parse("La\tDETFS\nmaison\tNFS\n.\tYPFOR\n");
  EXPECT_TRUE(AnnotateText("La maison.", tags, TagMap::Default(), resolver).empty());
}

TEST(AnnotateText, FilsRecord) {
  HomographResolver resolver(Dictionary());
  const auto tags = FileTagProvider::Parse(
      "Les\tDETMP\nfils\tNMS\ndu\tPREPDET\nroi\tNMS\n");
  const auto records = AnnotateText("Les fils du roi", tags, TagMap::Default(), resolver);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].surface, "fils");
  EXPECT_EQ(records[0].token_index, 1u);
  EXPECT_EQ(records[0].begin, 4u);
  EXPECT_EQ(records[0].end, 8u);
  EXPECT_EQ(records[0].resolution.pronunciation, "fis");
}

// Hand-applied cascade: the first "plus" follows "ne" in its clause (a);
// the second sits between numerals after the comma (d).
TEST(AnnotateText, TwoPlusOneNegated) {
  HomographResolver resolver(Dictionary());
  const std::string text = "Il ne mange plus, mais deux plus deux font quatre.";
  const auto tags = FileTagProvider::Parse(
      "Il\tPPER3MS\nne\tADV\nmange\tVERB\nplus\tADV\n,\tYPFOR\nmais\tCOCO\n"
      "deux\tNUM\nplus\tADV\ndeux\tNUM\nfont\tVERB\nquatre\tNUM\n.\tYPFOR\n");
  std::vector<std::string> plus;
  for (const auto& r : AnnotateText(text, tags, TagMap::Default(), resolver)) {
    if (r.surface == "plus") plus.push_back(r.resolution.pronunciation);
  }
  EXPECT_EQ(plus, (std::vector<std::string>{"ply", "plys"}));
}

TEST(EvaluateAccuracy, EmptyGoldSet) {
  HomographResolver resolver(Dictionary());
  const auto tagger = UnigramTagger::Load(DataPath("unigram_fr.tsv"));
  EXPECT_ERROR_CODE(EvaluateAccuracy({}, tagger, TagMap::Default(), resolver),
                    ErrorCode::kEmptyGoldSet);
}

TEST(EvaluateAccuracy, OracleTagsAreExact) {
  HomographResolver resolver(Dictionary());
  const auto gold = LoadGoldSet(DataPath("gold/homograph_gold.tsv"));
  const auto tags = FileTagProvider::Load(DataPath("gold/homograph_gold_tags.tsv"));
  const auto report = EvaluateAccuracy(gold, tags, TagMap::Default(), resolver);
  EXPECT_GE(report.total, 100u);
  EXPECT_DOUBLE_EQ(report.accuracy, 1.0);
  for (PlusRule rule : {PlusRule::kNegation, PlusRule::kConsonantFollows,
                        PlusRule::kLiaison, PlusRule::kPlain}) {
    ASSERT_TRUE(report.by_plus_rule.contains(rule));
    EXPECT_GT(report.by_plus_rule.at(rule).total, 0u);
  }
}

TEST(EvaluateAccuracy, GoldCoversKeyWords) {
  const auto gold = LoadGoldSet(DataPath("gold/homograph_gold.tsv"));
  std::set<std::string> found;
  for (const auto& item : gold) {
    const auto words = TokenizeWords(item.sentence);
    ASSERT_LT(item.token_index, words.size()) << item.sentence;
    found.insert(words[item.token_index].surface);
  }
  for (const char* w : {"adoptions", "fils", "plus"}) EXPECT_TRUE(found.contains(w)) << w;
}

TEST(EvaluateAccuracy, UnigramTaggerAboveEightyPercent) {
  HomographResolver resolver(Dictionary());
  const auto gold = LoadGoldSet(DataPath("gold/homograph_gold.tsv"));
  const auto tagger = UnigramTagger::Load(DataPath("unigram_fr.tsv"));
  const auto report = EvaluateAccuracy(gold, tagger, TagMap::Default(), resolver);
  EXPECT_GE(report.accuracy, 0.80);
  EXPECT_LT(report.accuracy, 1.0);
  EXPECT_EQ(report.correct + report.misses.size(), report.total);
}

TEST(GoldSet, ParseErrors) {
  EXPECT_ERROR_CODE(ParseGoldSet("sentence only\n"), ErrorCode::kParseError);
  EXPECT_ERROR_CODE(ParseGoldSet("a\tx\tply\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseGoldSet("# comment\n\nLe fils.\t1\tfis\n").size(), 1u);
}

TEST(TagMap, CoarseOf) {
  EXPECT_EQ(TagMap::Default().CoarseOf("NMS"), "NOUN");
  EXPECT_EQ(TagMap::Default().CoarseOf("VPPFS"), "VERB");
  EXPECT_EQ(TagMap::Default().CoarseOf("ADJ"), "ADJ");
  EXPECT_EQ(TagMap::Default().CoarseOf("???"), "X");
}

TEST(FileTagProvider, UnknownSentenceIsUnavailable) {
  const auto tags = FileTagProvider::Parse("a\tDET\n\nb\tNOUN\n");
  EXPECT_EQ(tags.sentence_count(), 2u);
  EXPECT_EQ(tags.Tag({"b"}), std::vector<std::string>{"NOUN"});
  EXPECT_ERROR_CODE(tags.Tag({"c"}), ErrorCode::kProviderUnavailable);
}

TEST(UnigramTagger, Deterministic) {
  const auto tagger = UnigramTagger::Load(DataPath("unigram_fr.tsv"));
  const std::vector<std::string> words = {"Les", "fils", "du", "roi", "."};
  const auto tags = tagger.Tag(words);
  EXPECT_EQ(tags.size(), words.size());
  EXPECT_EQ(tagger.Tag(words), tags);
}

}  // namespace
}  // namespace toucan_prep
