#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "neno/picture.hpp"
#include "neno/word_set.hpp"

namespace neno {

/// Sorted, duplicate-free set of pictures in canonical order.
class PictureSet {
 public:
  PictureSet() = default;
  explicit PictureSet(std::vector<Picture> pictures);
  PictureSet(std::initializer_list<Picture> pictures) : PictureSet(std::vector<Picture>(pictures)) {}

  bool contains(const Picture& p) const;
  std::size_t size() const noexcept { return pictures_.size(); }
  bool empty() const noexcept { return pictures_.empty(); }
  const Picture& operator[](std::size_t i) const { return pictures_[i]; }
  auto begin() const noexcept { return pictures_.begin(); }
  auto end() const noexcept { return pictures_.end(); }
  const std::vector<Picture>& pictures() const noexcept { return pictures_; }

  /// Common size; nullopt for the empty set. Throws MixedSizes.
  std::optional<std::pair<Index, Index>> picture_size() const;

  friend bool operator==(const PictureSet&, const PictureSet&) = default;

 private:
  std::vector<Picture> pictures_;
};

/// frame(S) = (R_F(S), R_L(S), C_F(S), C_L(S)).
struct FrameQuadruple {
  WordSet first_rows;
  WordSet last_rows;
  WordSet first_cols;
  WordSet last_cols;

  friend bool operator==(const FrameQuadruple&, const FrameQuadruple&) = default;
};

FrameQuadruple frame_of(const PictureSet& s);

/// Applies f to every member; the result is re-sorted.
template <typename F>
PictureSet transform(const PictureSet& s, F&& f) {
  std::vector<Picture> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(f(p));
  return PictureSet(std::move(out));
}

}  // namespace neno
