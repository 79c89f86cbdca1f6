#include "neno/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "neno/error.hpp"

namespace neno {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "alphabet needs at least two symbols");
  }
  if (symbols_.size() > 255) {
    throw Error(ErrorCode::InvalidArgument, "alphabet too large");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (!std::isgraph(static_cast<unsigned char>(c)) || c == '#') {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("alphabet symbol not allowed: '") + c + "'");
    }
    if (symbols_.find(c, i + 1) != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
}

char Alphabet::symbol(Symbol s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::WrongAlphabet, "symbol index " + std::to_string(s) + " outside alphabet");
  }
  return symbols_[s];
}

std::optional<Symbol> Alphabet::find(char c) const noexcept {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Symbol Alphabet::index_of(char c) const {
  if (auto s = find(c)) return *s;
  throw Error(ErrorCode::WrongAlphabet, std::string("'") + c + "' is not in alphabet \"" + symbols_ + "\"");
}

int Alphabet::bits_per_symbol() const noexcept {
  return std::max(1, static_cast<int>(std::bit_width(symbols_.size() - 1)));
}

}  // namespace neno
