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

#include <fstream>
#include <sstream>

#include "toucan_prep/errors.h"
#include "toucan_prep/homograph.h"
#include "toucan_prep/text.h"
#include "utf8.h"

namespace toucan_prep {

namespace {

bool IsVowelLetter(char32_t cp) {
  static constexpr std::u32string_view kVowels = U"aeiouyàâäéèêëîïôöùûüÿœæ";
  return kVowels.find(cp) != std::u32string_view::npos;
}

}  // namespace

std::string_view ResolutionMethodName(ResolutionMethod method) {
  switch (method) {
    case ResolutionMethod::kNotHomograph: return "not_homograph";
    case ResolutionMethod::kCoarseMatch: return "coarse_match";
    case ResolutionMethod::kExtendedMatch: return "extended_match";
    case ResolutionMethod::kDefaultFallback: return "default_fallback";
    case ResolutionMethod::kPlusRule: return "plus_rule";
  }
  return "unknown";
}

void PlusRuleConfig::LoadConsonantExceptions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view word = internal::Trim(line);
    if (word.empty() || word.front() == '#') continue;
    consonant_initial_exceptions.insert(internal::ToLowerFrench(word));
  }
}

const PlusRuleConfig& PlusRuleConfig::Default() {
  static const PlusRuleConfig kConfig = [] {
    PlusRuleConfig config;
    config.LoadConsonantExceptions(std::string(TOUCAN_PREP_DATA_DIR) +
                                   "/h_aspire.txt");
    return config;
  }();
  return kConfig;
}

bool StartsWithVowelSound(std::string_view word, const PlusRuleConfig& config) {
  const std::string lower = internal::ToLowerFrench(word);
  if (config.consonant_initial_exceptions.contains(lower)) return false;
  const std::u32string cps = internal::DecodeUtf8(lower);
  if (cps.empty()) return false;
  if (cps[0] == U'h') return true;  // h muet unless listed above
  if (cps[0] == U'y') return cps.size() < 2 || !IsVowelLetter(cps[1]);
  return IsVowelLetter(cps[0]);
}

HomographResolver::HomographResolver(const HomographDictionary& dictionary,
                                     PlusRuleConfig plus_config)
    : dictionary_(dictionary), plus_config_(std::move(plus_config)) {}

Resolution HomographResolver::Resolve(const TaggedToken& token) const {
  return Resolve(std::span<const TaggedToken>(&token, 1), 0);
}

Resolution HomographResolver::Resolve(std::span<const TaggedToken> sentence,
                                      size_t position) const {
  const TaggedToken& token = sentence[position];
  const HomographEntry* entry = dictionary_.Find(token.surface);
  if (entry == nullptr) return {};
  if (internal::ToLowerFrench(token.surface) == "plus") {
    return ResolvePlus(sentence, position);
  }
  const HomographCandidate* coarse_hit = nullptr;
  int coarse_hits = 0;
  for (const auto& candidate : entry->candidates) {
    if (candidate.coarse_pos == token.coarse_tag) {
      coarse_hit = &candidate;
      ++coarse_hits;
    }
  }
  if (coarse_hits == 1) {
    return {coarse_hit->ipa, ResolutionMethod::kCoarseMatch};
  }
  const HomographCandidate* extended_hit = nullptr;
  for (const auto& candidate : entry->candidates) {
    if (candidate.extended_pos != token.extended_tag) continue;
    // Prefer a candidate that also agrees on the coarse tag.
    if (extended_hit == nullptr || candidate.coarse_pos == token.coarse_tag) {
      extended_hit = &candidate;
      if (candidate.coarse_pos == token.coarse_tag) break;
    }
  }
  if (extended_hit != nullptr) {
    return {extended_hit->ipa, ResolutionMethod::kExtendedMatch};
  }
  return {entry->candidates[entry->default_index].ipa,
          ResolutionMethod::kDefaultFallback};
}

Resolution HomographResolver::ResolvePlus(std::span<const TaggedToken> sentence,
                                          size_t position) const {
  // (a) a negation cue earlier in the same clause
  for (size_t j = position; j-- > 0;) {
    if (IsClauseDelimiter(sentence[j].surface)) break;
    if (plus_config_.negation_cues.contains(
            internal::ToLowerFrench(sentence[j].surface))) {
      return {plus_config_.negated_ipa, ResolutionMethod::kPlusRule,
              PlusRule::kNegation};
    }
  }
  // (b), (c) an adjective or adverb follows
  if (position + 1 < sentence.size()) {
    const TaggedToken& next = sentence[position + 1];
    if (plus_config_.liaison_tags.contains(next.coarse_tag)) {
      if (StartsWithVowelSound(next.surface, plus_config_)) {
        return {plus_config_.liaison_ipa, ResolutionMethod::kPlusRule,
                PlusRule::kLiaison};
      }
      return {plus_config_.consonant_ipa, ResolutionMethod::kPlusRule,
              PlusRule::kConsonantFollows};
    }
  }
  // (d)
  return {plus_config_.plain_ipa, ResolutionMethod::kPlusRule,
          PlusRule::kPlain};
}

std::vector<HomographRecord> AnnotateText(std::string_view text,
                                          const PosProvider& provider,
                                          const TagMap& tag_map,
                                          const HomographResolver& resolver) {
  std::vector<HomographRecord> records;
  const auto sentences = SplitSentences(text);
  for (size_t s = 0; s < sentences.size(); ++s) {
    const std::vector<TaggedToken> tagged =
        TagSentence(sentences[s], s, provider, tag_map);
    for (size_t i = 0; i < tagged.size(); ++i) {
      if (sentences[s][i].is_punctuation) continue;
      Resolution resolution = resolver.Resolve(tagged, i);
      if (resolution.method == ResolutionMethod::kNotHomograph) continue;
      records.push_back({s, i, tagged[i].begin, tagged[i].end,
                         tagged[i].surface, tagged[i].extended_tag,
                         std::move(resolution)});
    }
  }
  return records;
}

std::vector<GoldItem> ParseGoldSet(std::string_view content,
                                   const std::string& source) {
  std::vector<GoldItem> items;
  size_t line_no = 0;
  for (std::string line : internal::SplitString(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 3) {
      throw ParseError(source, line_no, "expected sentence<TAB>index<TAB>ipa");
    }
    GoldItem item;
    item.sentence = cols[0];
    try {
      size_t consumed = 0;
      const long index = std::stol(cols[1], &consumed);
      if (consumed != cols[1].size() || index < 0) throw std::invalid_argument("");
      item.token_index = static_cast<size_t>(index);
    } catch (const std::exception&) {
      throw ParseError(source, line_no, "bad token index '" + cols[1] + "'");
    }
    item.ipa = cols[2];
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<GoldItem> LoadGoldSet(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open gold set " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGoldSet(buffer.str(), path);
}

AccuracyReport EvaluateAccuracy(std::span<const GoldItem> gold,
                                const PosProvider& provider,
                                const TagMap& tag_map,
                                const HomographResolver& resolver) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyGoldSet, "gold set is empty");
  }
  AccuracyReport report;
  std::map<std::string, std::vector<TaggedToken>> tag_cache;
  for (const GoldItem& item : gold) {
    auto it = tag_cache.find(item.sentence);
    if (it == tag_cache.end()) {
      it = tag_cache
               .emplace(item.sentence,
                        TagSentence(TokenizeWords(item.sentence), 0, provider,
                                    tag_map))
               .first;
    }
    const std::vector<TaggedToken>& tagged = it->second;
    if (item.token_index >= tagged.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token index " + std::to_string(item.token_index) +
                      " out of range in: " + item.sentence);
    }
    const Resolution predicted = resolver.Resolve(tagged, item.token_index);
    const bool correct = predicted.pronunciation == item.ipa;
    ++report.total;
    report.correct += correct ? 1 : 0;
    MethodStats& method = report.by_method[predicted.method];
    ++method.total;
    method.correct += correct ? 1 : 0;
    if (predicted.method == ResolutionMethod::kPlusRule) {
      MethodStats& rule = report.by_plus_rule[predicted.plus_rule];
      ++rule.total;
      rule.correct += correct ? 1 : 0;
    }
    if (!correct) {
      report.misses.push_back(
          {item, predicted, tagged[item.token_index].extended_tag});
    }
  }
  report.accuracy =
      static_cast<double>(report.correct) / static_cast<double>(report.total);
  return report;
}

}  // namespace toucan_prep
