#include "neno/languages.hpp"

#include <string>

namespace neno {

const char* to_string(SuffixMode mode) noexcept {
  return mode == SuffixMode::AnySuffix ? "any" : "proper";
}

SuffixMode parse_suffix_mode(std::string_view text) {
  if (text == "any") return SuffixMode::AnySuffix;
  if (text == "proper") return SuffixMode::ProperOnly;
  throw Error(ErrorCode::ParseError, "suffix mode must be 'any' or 'proper', got '" + std::string(text) + "'");
}

namespace {

void require_min_length(Index len, const char* what) {
  if (len < 4) {
    throw Error(ErrorCode::SizeTooSmall, std::string(what) + " needs length >= 4, got " + std::to_string(len));
  }
}

bool is_binary(const Word& w) { return (w.array() <= 1).all(); }

WordSet filter_words(Index len, auto&& keep) {
  std::vector<Word> out;
  for_each_word(Alphabet::binary(), len, [&](const Word& w) {
    if (keep(w)) out.push_back(w);
  });
  return WordSet(std::move(out));
}

}  // namespace

bool is_S1(const Word& w) { return (w.array() == 1).all(); }

bool is_S2(const Word& w) {
  return w.size() >= 2 && is_binary(w) && w[0] == 0 && w[w.size() - 1] == 0;
}

bool is_S3(const Word& w) {
  return w.size() >= 2 && w[0] == 1 && w[1] == 1 && (w.tail(w.size() - 2) == 0).all();
}

bool is_S4(const Word& w, SuffixMode mode) {
  const Index m = w.size();
  if (m < 3 || !is_binary(w) || w[0] != 1 || w[m - 1] != 0) return false;
  if ((w.array().segment(1, m - 2) == 0).all()) return false;
  return !has_suffix_in(w.array(), OneOneZeros::plus, mode);
}

WordSet gen_S1(Index n) {
  require_min_length(n, "S1");
  return WordSet({Word(Word::Storage::Ones(n))});
}

WordSet gen_S2(Index n) {
  require_min_length(n, "S2");
  return filter_words(n, [](const Word& w) { return is_S2(w); });
}

WordSet gen_S3(Index m) {
  require_min_length(m, "S3");
  Word::Storage w = Word::Storage::Zero(m);
  w.head(2).setOnes();
  return WordSet({Word(w)});
}

WordSet gen_S4(Index m, SuffixMode mode) {
  require_min_length(m, "S4");
  return filter_words(m, [mode](const Word& w) { return is_S4(w, mode); });
}

}  // namespace neno
