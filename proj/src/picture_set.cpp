#include "neno/picture_set.hpp"

#include <algorithm>
#include <string>

namespace neno {

PictureSet::PictureSet(std::vector<Picture> pictures) : pictures_(std::move(pictures)) {
  std::sort(pictures_.begin(), pictures_.end());
  pictures_.erase(std::unique(pictures_.begin(), pictures_.end()), pictures_.end());
}

bool PictureSet::contains(const Picture& p) const {
  return std::binary_search(pictures_.begin(), pictures_.end(), p);
}

std::optional<std::pair<Index, Index>> PictureSet::picture_size() const {
  if (pictures_.empty()) return std::nullopt;
  const auto first = pictures_.front().size();
  const auto last = pictures_.back().size();
  if (first != last) {
    throw Error(ErrorCode::MixedSizes, "picture set mixes sizes " + std::to_string(first.first) + "x" +
                                           std::to_string(first.second) + " and " + std::to_string(last.first) +
                                           "x" + std::to_string(last.second));
  }
  return first;
}

FrameQuadruple frame_of(const PictureSet& s) {
  std::vector<Word> rf, rl, cf, cl;
  for (const auto& p : s) {
    auto f = frame_of(p);
    rf.push_back(std::move(f.first_row));
    rl.push_back(std::move(f.last_row));
    cf.push_back(std::move(f.first_col));
    cl.push_back(std::move(f.last_col));
  }
  return {WordSet(std::move(rf)), WordSet(std::move(rl)), WordSet(std::move(cf)), WordSet(std::move(cl))};
}

}  // namespace neno
