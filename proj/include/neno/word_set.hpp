#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "neno/alphabet.hpp"
#include "neno/word.hpp"

namespace neno {

/// Sorted, duplicate-free set of words.
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(std::vector<Word> words);
  WordSet(std::initializer_list<Word> words) : WordSet(std::vector<Word>(words)) {}

  bool contains(const Word& w) const;
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  /// Common length of the words; nullopt for the empty set.
  /// Throws MixedLengths when lengths differ.
  std::optional<Index> word_length() const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::vector<Word> words_;
};

WordSet set_intersection(const WordSet& a, const WordSet& b);

struct WordPairReport {
  bool holds = true;
  /// Cross check: the S1 word. Full check: the uncovered outside word.
  std::optional<Word> subject;
  /// Cross check: the S2 word overlapping the subject.
  std::optional<Word> partner;
  std::vector<Index> lengths;
  /// Full check: 1 when no S1 word overlaps the subject, else 2.
  int uncovered_side = 0;
};

/// Holds iff no s1 in S1 and s2 in S2 overlap. Witness is the least (s1, s2).
WordPairReport is_cross_non_overlapping(const WordSet& s1, const WordSet& s2);

/// Holds iff every word of the common length outside S1 u S2 overlaps some
/// word of S1 and some word of S2. Exhaustive over q^n words.
WordPairReport is_full_pair(const WordSet& s1, const WordSet& s2, const Alphabet& alphabet);

/// Answers "does s overlap some word of the set" in O(|s|) hash lookups.
class OverlapIndex {
 public:
  explicit OverlapIndex(const WordSet& words);

  bool overlaps_any(std::span<const Symbol> s) const;
  bool overlaps_any(const Word& s) const {
    return overlaps_any(std::span<const Symbol>(s.data(), static_cast<std::size_t>(s.size())));
  }

 private:
  std::unordered_set<std::string> prefixes_;
  std::unordered_set<std::string> suffixes_;
};

}  // namespace neno
