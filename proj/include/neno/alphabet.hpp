#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace neno {

/// Symbols are stored as indices into an Alphabet; index order is the
/// lexicographic order used everywhere.
using Symbol = std::uint8_t;

class Alphabet {
 public:
  /// Each character is one symbol. Requires at least two distinct printable,
  /// non-'#' characters.
  explicit Alphabet(std::string symbols);

  static Alphabet binary() { return Alphabet("01"); }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }

  char symbol(Symbol s) const;
  std::optional<Symbol> find(char c) const noexcept;
  Symbol index_of(char c) const;
  bool contains(Symbol s) const noexcept { return s < symbols_.size(); }

  /// Bits needed to store one symbol index (at least 1).
  int bits_per_symbol() const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

}  // namespace neno
