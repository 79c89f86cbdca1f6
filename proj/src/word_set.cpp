#include "neno/word_set.hpp"

#include <algorithm>

namespace neno {

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<Index> WordSet::word_length() const {
  if (words_.empty()) return std::nullopt;
  const Index len = words_.front().size();
  // Shortlex order puts the longest word last.
  if (words_.back().size() != len) {
    throw Error(ErrorCode::MixedLengths, "word set mixes lengths " + std::to_string(len) + " and " +
                                             std::to_string(words_.back().size()));
  }
  return len;
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
  std::vector<Word> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return WordSet(std::move(out));
}

namespace {

std::optional<Index> common_length(const WordSet& s1, const WordSet& s2) {
  const auto l1 = s1.word_length();
  const auto l2 = s2.word_length();
  if (l1 && l2 && *l1 != *l2) {
    throw Error(ErrorCode::MixedLengths,
                "pair mixes lengths " + std::to_string(*l1) + " and " + std::to_string(*l2));
  }
  return l1 ? l1 : l2;
}

void require_disjoint(const WordSet& s1, const WordSet& s2) {
  if (!set_intersection(s1, s2).empty()) {
    throw Error(ErrorCode::DisjointnessViolated, "the two word sets intersect");
  }
}

}  // namespace

WordPairReport is_cross_non_overlapping(const WordSet& s1, const WordSet& s2) {
  common_length(s1, s2);
  require_disjoint(s1, s2);
  WordPairReport report;
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      auto lengths = overlap_lengths(a, b);
      if (!lengths.empty()) {
        report.holds = false;
        report.subject = a;
        report.partner = b;
        report.lengths = std::move(lengths);
        return report;
      }
    }
  }
  return report;
}

WordPairReport is_full_pair(const WordSet& s1, const WordSet& s2, const Alphabet& alphabet) {
  const auto len = common_length(s1, s2);
  if (!len) throw Error(ErrorCode::InvalidArgument, "cannot infer word length from two empty sets");
  require_disjoint(s1, s2);
  const OverlapIndex index1(s1);
  const OverlapIndex index2(s2);
  WordPairReport report;
  for_each_word(alphabet, *len, [&](const Word& s) {
    if (s1.contains(s) || s2.contains(s)) return true;
    int side = 0;
    if (!index1.overlaps_any(s)) {
      side = 1;
    } else if (!index2.overlaps_any(s)) {
      side = 2;
    }
    if (side == 0) return true;
    report.holds = false;
    report.subject = s;
    report.uncovered_side = side;
    return false;
  });
  return report;
}

OverlapIndex::OverlapIndex(const WordSet& words) {
  for (const auto& w : words) {
    const auto* p = reinterpret_cast<const char*>(w.data());
    const auto n = static_cast<std::size_t>(w.size());
    for (std::size_t len = 1; len <= n; ++len) {
      prefixes_.emplace(p, len);
      suffixes_.emplace(p + n - len, len);
    }
  }
}

bool OverlapIndex::overlaps_any(std::span<const Symbol> s) const {
  const auto* p = reinterpret_cast<const char*>(s.data());
  const auto n = s.size();
  std::string key;
  for (std::size_t len = 1; len <= n; ++len) {
    key.assign(p + n - len, len);
    if (prefixes_.contains(key)) return true;
    key.assign(p, len);
    if (suffixes_.contains(key)) return true;
  }
  return false;
}

}  // namespace neno
