#include "neno/overlap.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace neno {

const char* to_string(OverlapKind kind) noexcept { return kind == OverlapKind::tl ? "tl" : "bl"; }

const char* to_string(Orientation orientation) noexcept { return orientation == Orientation::PQ ? "PQ" : "QP"; }

OverlapFlags flags_for(Index h, Index k, std::pair<Index, Index> p_size, std::pair<Index, Index> q_size) {
  const std::pair<Index, Index> hk{h, k};
  OverlapFlags f;
  f.proper = hk != p_size && hk != q_size;
  f.h_slide = h == p_size.first && h == q_size.first;
  f.v_slide = k == p_size.second && k == q_size.second;
  f.frame = h == 1 || k == 1;
  return f;
}

namespace {

constexpr OverlapKind kKinds[] = {OverlapKind::tl, OverlapKind::bl};
constexpr Orientation kOrientations[] = {Orientation::PQ, Orientation::QP};

// a supplies the tl (or bl) prefix, b the br (or tr) prefix.
bool blocks_match(OverlapKind kind, const Picture& a, const Picture& b, Index h, Index k) {
  if (kind == OverlapKind::tl) return (corner_block(a, Corner::tl, h, k) == corner_block(b, Corner::br, h, k)).all();
  return (corner_block(a, Corner::bl, h, k) == corner_block(b, Corner::tr, h, k)).all();
}

bool passes(OverlapFilter filter, const OverlapFlags& f) {
  switch (filter) {
    case OverlapFilter::proper:
      return f.proper;
    case OverlapFilter::frame:
      return f.frame;
    case OverlapFilter::proper_frame:
      return f.proper && f.frame;
    case OverlapFilter::any:
    default:
      return true;
  }
}

std::uint64_t low_mask(Index width_bits) {
  return width_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_bits) - 1;
}

bool packed_match(OverlapKind kind, const PackedPicture& a, const PackedPicture& b, Index h, Index k) {
  const int bits = a.bits();
  const std::uint64_t mask = low_mask(k * bits);
  const Index shift = (b.cols() - k) * bits;
  const Index a_top = kind == OverlapKind::tl ? 0 : a.rows() - h;
  const Index b_top = kind == OverlapKind::tl ? b.rows() - h : 0;
  for (Index r = 0; r < h; ++r) {
    if (((a.row(a_top + r) ^ (b.row(b_top + r) >> shift)) & mask) != 0) return false;
  }
  return true;
}

template <typename Visit>
void scan_packed(const PackedPicture& p, const PackedPicture& q, Visit&& visit) {
  const Index max_h = std::min(p.rows(), q.rows());
  const Index max_k = std::min(p.cols(), q.cols());
  const std::pair<Index, Index> p_size{p.rows(), p.cols()};
  const std::pair<Index, Index> q_size{q.rows(), q.cols()};
  for (auto kind : kKinds) {
    for (auto orientation : kOrientations) {
      const PackedPicture& a = orientation == Orientation::PQ ? p : q;
      const PackedPicture& b = orientation == Orientation::PQ ? q : p;
      for (Index h = 1; h <= max_h; ++h) {
        for (Index k = 1; k <= max_k; ++k) {
          if (!packed_match(kind, a, b, h, k)) continue;
          if (!visit(OverlapWitness{kind, orientation, h, k, flags_for(h, k, p_size, q_size)})) return;
        }
      }
    }
  }
}

}  // namespace

OverlapFlags classify(const OverlapWitness& w, const Picture& p, const Picture& q) {
  if (w.h < 1 || w.k < 1 || w.h > std::min(p.rows(), q.rows()) || w.k > std::min(p.cols(), q.cols())) {
    throw Error(ErrorCode::WitnessMismatch,
                "overlap size " + std::to_string(w.h) + "x" + std::to_string(w.k) + " does not fit both pictures");
  }
  const Picture& a = w.orientation == Orientation::PQ ? p : q;
  const Picture& b = w.orientation == Orientation::PQ ? q : p;
  if (!blocks_match(w.kind, a, b, w.h, w.k)) {
    throw Error(ErrorCode::WitnessMismatch, std::string(to_string(w.kind)) + " " + to_string(w.orientation) + " " +
                                                std::to_string(w.h) + "x" + std::to_string(w.k) +
                                                " corner blocks differ");
  }
  return flags_for(w.h, w.k, p.size(), q.size());
}

std::vector<OverlapWitness> find_overlaps_reference(const Picture& p, const Picture& q) {
  std::vector<OverlapWitness> out;
  const Index max_h = std::min(p.rows(), q.rows());
  const Index max_k = std::min(p.cols(), q.cols());
  for (auto kind : kKinds) {
    for (auto orientation : kOrientations) {
      const Picture& a = orientation == Orientation::PQ ? p : q;
      const Picture& b = orientation == Orientation::PQ ? q : p;
      for (Index h = 1; h <= max_h; ++h) {
        for (Index k = 1; k <= max_k; ++k) {
          if (blocks_match(kind, a, b, h, k)) {
            out.push_back({kind, orientation, h, k, flags_for(h, k, p.size(), q.size())});
          }
        }
      }
    }
  }
  return out;
}

namespace {

int packing_bits(const Picture& p, const Picture& q) {
  const Symbol top = std::max(p.array().maxCoeff(), q.array().maxCoeff());
  return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(top))));
}

}  // namespace

std::vector<OverlapWitness> find_overlaps(const Picture& p, const Picture& q) {
  const int bits = packing_bits(p, q);
  if (!PackedPicture::fits(p.cols(), bits) || !PackedPicture::fits(q.cols(), bits)) {
    return find_overlaps_reference(p, q);
  }
  return all_overlaps(PackedPicture(p, bits), PackedPicture(q, bits));
}

std::optional<OverlapWitness> first_proper_overlap(const Picture& p, const Picture& q) {
  const int bits = packing_bits(p, q);
  if (!PackedPicture::fits(p.cols(), bits) || !PackedPicture::fits(q.cols(), bits)) {
    for (const auto& w : find_overlaps_reference(p, q)) {
      if (w.flags.proper) return w;
    }
    return std::nullopt;
  }
  return first_overlap(PackedPicture(p, bits), PackedPicture(q, bits), OverlapFilter::proper);
}

bool properly_overlap(const Picture& p, const Picture& q) { return first_proper_overlap(p, q).has_value(); }

bool is_unbordered(const Picture& p) { return !properly_overlap(p, p); }

PackedPicture::PackedPicture(const Picture& p, int bits) : rows_(p.rows()), cols_(p.cols()), bits_(bits) {
  if (!fits(cols_, bits_)) {
    throw Error(ErrorCode::InvalidArgument, "rows of " + std::to_string(cols_) + " symbols at " +
                                                std::to_string(bits_) + " bits do not fit 64 bits");
  }
  rows_data_.reserve(static_cast<std::size_t>(rows_));
  for (Index i = 0; i < rows_; ++i) {
    std::uint64_t packed = 0;
    for (Index j = 0; j < cols_; ++j) packed |= std::uint64_t{p.array()(i, j)} << (j * bits_);
    rows_data_.push_back(packed);
  }
}

PackedPicture::PackedPicture(Index rows, Index cols, int bits, std::vector<std::uint64_t> packed_rows)
    : rows_(rows), cols_(cols), bits_(bits), rows_data_(std::move(packed_rows)) {
  if (rows_ < 1 || cols_ < 1 || !fits(cols_, bits_) || static_cast<Index>(rows_data_.size()) != rows_) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent packed picture shape");
  }
}

std::optional<OverlapWitness> first_overlap(const PackedPicture& p, const PackedPicture& q, OverlapFilter filter) {
  if (p.bits() != q.bits()) throw Error(ErrorCode::InvalidArgument, "packed pictures use different symbol widths");
  std::optional<OverlapWitness> found;
  scan_packed(p, q, [&](const OverlapWitness& w) {
    if (!passes(filter, w.flags)) return true;
    found = w;
    return false;
  });
  return found;
}

bool has_overlap(const PackedPicture& p, const PackedPicture& q, OverlapFilter filter) {
  return first_overlap(p, q, filter).has_value();
}

std::vector<OverlapWitness> all_overlaps(const PackedPicture& p, const PackedPicture& q) {
  if (p.bits() != q.bits()) throw Error(ErrorCode::InvalidArgument, "packed pictures use different symbol widths");
  std::vector<OverlapWitness> out;
  scan_packed(p, q, [&](const OverlapWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace neno
