#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "neno/alphabet.hpp"
#include "neno/error.hpp"

namespace neno {

using Index = Eigen::Index;

/// A nonempty finite sequence of symbols. Templated on the symbol scalar so
/// that a picture can be read as a word over its column (or row) alphabet.
template <typename Scalar>
class BasicWord {
 public:
  using Storage = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  explicit BasicWord(Storage symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() == 0) throw Error(ErrorCode::EmptyValue, "words must be nonempty");
  }

  template <typename Derived>
  explicit BasicWord(const Eigen::DenseBase<Derived>& symbols) : BasicWord(Storage(symbols)) {}

  BasicWord(std::initializer_list<Scalar> symbols)
      : BasicWord(Storage(Eigen::Map<const Storage>(symbols.begin(), static_cast<Index>(symbols.size())))) {}

  Index size() const noexcept { return symbols_.size(); }
  Scalar operator[](Index i) const { return symbols_[i]; }
  const Storage& array() const noexcept { return symbols_; }
  const Scalar* data() const noexcept { return symbols_.data(); }

  auto head(Index len) const { return symbols_.head(len); }
  auto tail(Index len) const { return symbols_.tail(len); }

  friend bool operator==(const BasicWord& a, const BasicWord& b) {
    return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
  }

  /// Shortlex: length first, then symbol order position by position.
  friend bool operator<(const BasicWord& a, const BasicWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }

 private:
  Storage symbols_;
};

using Word = BasicWord<Symbol>;
/// Word whose symbols encode whole columns (or rows) of a picture.
using LineWord = BasicWord<std::uint64_t>;

template <typename Scalar>
BasicWord<Scalar> reverse(const BasicWord<Scalar>& w) {
  return BasicWord<Scalar>(w.array().reverse());
}

/// Lengths L, 1 <= L < |w|, whose length-L prefix equals the length-L suffix.
template <typename Scalar>
std::vector<Index> border_lengths(const BasicWord<Scalar>& w) {
  std::vector<Index> lengths;
  for (Index len = 1; len < w.size(); ++len) {
    if ((w.head(len) == w.tail(len)).all()) lengths.push_back(len);
  }
  return lengths;
}

template <typename Scalar>
bool is_bifix_free(const BasicWord<Scalar>& w) {
  for (Index len = 1; len < w.size(); ++len) {
    if ((w.head(len) == w.tail(len)).all()) return false;
  }
  return true;
}

/// All L with a length-L suffix of one word equal to the length-L prefix of
/// the other (either direction). Includes L = |s| = |t| when s == t.
template <typename Scalar>
std::vector<Index> overlap_lengths(const BasicWord<Scalar>& s, const BasicWord<Scalar>& t) {
  std::vector<Index> lengths;
  const Index limit = std::min(s.size(), t.size());
  for (Index len = 1; len <= limit; ++len) {
    if ((s.tail(len) == t.head(len)).all() || (t.tail(len) == s.head(len)).all()) {
      lengths.push_back(len);
    }
  }
  return lengths;
}

template <typename Scalar>
bool words_overlap(const BasicWord<Scalar>& s, const BasicWord<Scalar>& t) {
  const Index limit = std::min(s.size(), t.size());
  for (Index len = 1; len <= limit; ++len) {
    if ((s.tail(len) == t.head(len)).all() || (t.tail(len) == s.head(len)).all()) return true;
  }
  return false;
}

/// True when no proper prefix of any word equals a proper suffix of any word
/// (a word against itself included).
template <typename Scalar>
bool is_cross_bifix_free(const std::vector<BasicWord<Scalar>>& words) {
  for (const auto& a : words) {
    for (const auto& b : words) {
      const Index limit = std::min(a.size(), b.size());
      for (Index len = 1; len <= limit; ++len) {
        if (len == a.size() || len == b.size()) continue;
        if ((a.head(len) == b.tail(len)).all()) return false;
      }
    }
  }
  return true;
}

/// Visits every word of the given length over the alphabet, in lexicographic
/// order. The callback may return false to stop early.
template <typename Visit>
void for_each_word(const Alphabet& alphabet, Index length, Visit&& visit) {
  if (length < 1) throw Error(ErrorCode::EmptyValue, "word length must be at least 1");
  const auto q = static_cast<Symbol>(alphabet.size());
  Word::Storage digits = Word::Storage::Zero(length);
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const Word&>, bool>) {
      if (!visit(Word(digits))) return;
    } else {
      visit(Word(digits));
    }
    Index pos = length - 1;
    while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
    if (pos < 0) return;
    ++digits[pos];
  }
}

}  // namespace neno

template <typename Scalar>
struct std::hash<neno::BasicWord<Scalar>> {
  std::size_t operator()(const neno::BasicWord<Scalar>& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.size());
    for (neno::Index i = 0; i < w.size(); ++i) {
      h = h * 1099511628211ULL ^ static_cast<std::size_t>(w[i]);
    }
    return h;
  }
};
