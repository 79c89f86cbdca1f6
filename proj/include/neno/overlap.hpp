#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neno/picture.hpp"

namespace neno {

/// tl: a tl-prefix of one picture equals a br-prefix of the other.
/// bl: a bl-prefix of one picture equals a tr-prefix of the other.
enum class OverlapKind { tl, bl };

/// PQ: the first picture supplies the tl (resp. bl) prefix. QP: the second.
enum class Orientation { PQ, QP };

struct OverlapFlags {
  bool proper = false;
  bool h_slide = false;
  bool v_slide = false;
  bool frame = false;

  friend bool operator==(const OverlapFlags&, const OverlapFlags&) = default;
};

struct OverlapWitness {
  OverlapKind kind = OverlapKind::tl;
  Orientation orientation = Orientation::PQ;
  Index h = 1;
  Index k = 1;
  OverlapFlags flags;

  friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;

  /// Canonical order: kind, orientation, then (h, k).
  friend bool operator<(const OverlapWitness& a, const OverlapWitness& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.orientation != b.orientation) return a.orientation < b.orientation;
    if (a.h != b.h) return a.h < b.h;
    return a.k < b.k;
  }
};

const char* to_string(OverlapKind kind) noexcept;
const char* to_string(Orientation orientation) noexcept;

/// Flags for an (h, k) overlap between pictures of the given sizes.
OverlapFlags flags_for(Index h, Index k, std::pair<Index, Index> p_size, std::pair<Index, Index> q_size);

/// Recomputes the flags of a claimed witness. Throws WitnessMismatch when
/// the corner blocks do not coincide or the size is out of range.
OverlapFlags classify(const OverlapWitness& w, const Picture& p, const Picture& q);

/// Reference scan over Eigen corner blocks, canonical order.
std::vector<OverlapWitness> find_overlaps_reference(const Picture& p, const Picture& q);

/// Same result as the reference scan, on bit-packed rows.
std::vector<OverlapWitness> find_overlaps(const Picture& p, const Picture& q);

std::optional<OverlapWitness> first_proper_overlap(const Picture& p, const Picture& q);
bool properly_overlap(const Picture& p, const Picture& q);

/// No proper self-overlap.
bool is_unbordered(const Picture& p);

enum class OverlapFilter { any, proper, frame, proper_frame };

/// Rows packed into 64-bit words, `bits` per symbol, column j at bits
/// [j*bits, (j+1)*bits). Requires cols * bits <= 64.
class PackedPicture {
 public:
  PackedPicture(const Picture& p, int bits);
  PackedPicture(Index rows, Index cols, int bits, std::vector<std::uint64_t> packed_rows);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  int bits() const noexcept { return bits_; }
  std::uint64_t row(Index i) const { return rows_data_[static_cast<std::size_t>(i)]; }

  static bool fits(Index cols, int bits) noexcept { return cols * bits <= 64; }

 private:
  Index rows_;
  Index cols_;
  int bits_;
  std::vector<std::uint64_t> rows_data_;
};

/// First witness in canonical order passing the filter.
std::optional<OverlapWitness> first_overlap(const PackedPicture& p, const PackedPicture& q,
                                            OverlapFilter filter = OverlapFilter::any);
bool has_overlap(const PackedPicture& p, const PackedPicture& q, OverlapFilter filter = OverlapFilter::any);
std::vector<OverlapWitness> all_overlaps(const PackedPicture& p, const PackedPicture& q);

}  // namespace neno
