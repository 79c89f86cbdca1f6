#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "neno/families.hpp"
#include "neno/overlap.hpp"
#include "neno/picture_set.hpp"

namespace neno {

enum class Strategy { naive, layered };

const char* to_string(Strategy strategy) noexcept;

struct VerifyOptions {
  /// Candidate pictures a naive scan may enumerate.
  std::uint64_t work_limit = std::uint64_t{1} << 26;
  /// Members of X the layered verifier may walk.
  std::uint64_t member_limit = std::uint64_t{1} << 22;
  /// 0 = one per hardware thread.
  unsigned workers = 1;
  /// Re-run every frame-overlap decision through the picture scan.
  bool cross_check = false;
};

struct VerificationReport {
  std::string property;
  bool holds = true;
  Strategy strategy = Strategy::naive;
  std::uint64_t candidates = 0;
  std::uint64_t pairs = 0;
  /// Failing candidate, or the overlapping pair in (p, q) order.
  std::vector<Picture> witness;
  std::optional<OverlapWitness> overlap;
  std::vector<std::string> notes;
  std::chrono::duration<double> wall_time{0};
};

/// Header line `property=.. verdict=.. strategy=.. candidates=.. pairs=..`,
/// then `note=` lines and the witness block. Wall time is not printed.
void write_report(std::ostream& out, const VerificationReport& report, const Alphabet& alphabet = Alphabet::binary());
std::string format_report(const VerificationReport& report, const Alphabet& alphabet = Alphabet::binary());

/// No ordered pair of members (p = q included) properly overlaps.
VerificationReport verify_non_overlapping(const PictureSet& s, const VerifyOptions& options = {});

/// No member has a proper self-overlap.
VerificationReport verify_unbordered(const PictureSet& s, const VerifyOptions& options = {});

/// Every picture of size (m, n) outside S overlaps some member, by scanning
/// all q^{mn} candidates. S must be non-overlapping.
VerificationReport verify_neno_naive(const PictureSet& s, Index m, Index n,
                                     const Alphabet& alphabet = Alphabet::binary(), const VerifyOptions& options = {});

/// Members never frame-overlap each other and every non-member of size
/// (m, n) frame-overlaps a member. Uses the frame-word reduction.
VerificationReport verify_frame_complete(const PictureSet& s, Index m, Index n,
                                         const Alphabet& alphabet = Alphabet::binary(),
                                         const VerifyOptions& options = {});

/// Four tiers: (i) both word pairs cross-non-overlapping and full, (ii)
/// frame(Y) = frame(X), (iii) Y non-overlapping, (iv) every member of X \ Y
/// overlaps a member of Y. X must be the full frame product of the languages.
VerificationReport verify_neno_layered(const PictureSet& y, const PictureSet& x, const FrameLanguages& langs,
                                       const Alphabet& alphabet = Alphabet::binary(),
                                       const VerifyOptions& options = {});

/// Corner symbols match at every shared corner and every word of every
/// language takes part in some consistent frame.
bool is_frame_compatible(const FrameLanguages& langs, const Alphabet& alphabet = Alphabet::binary());

/// Binary S, non-overlapping: corners constant on S and one of (0,0,1,1),
/// (1,1,0,0), (1,0,1,0), (0,1,0,1).
VerificationReport check_corner_lemma(const PictureSet& s, const VerifyOptions& options = {});

/// Non-overlapping S: (R_F, R_L) and (C_F, C_L) are cross-non-overlapping.
VerificationReport check_frame_necessity(const PictureSet& s, const VerifyOptions& options = {});

/// Non-overlapping S: the column words of its members form a
/// cross-bifix-free set over the column alphabet.
VerificationReport check_column_code(const PictureSet& s, const Alphabet& alphabet = Alphabet::binary(),
                                     const VerifyOptions& options = {});

/// Every picture of S belongs to the family.
VerificationReport verify_membership(const std::vector<Picture>& pictures, const FamilySpec& spec);

}  // namespace neno
