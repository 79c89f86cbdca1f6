#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neno/languages.hpp"
#include "neno/picture_set.hpp"

namespace neno {

enum class Family { X, Y, Z, M };

const char* to_string(Family family) noexcept;

/// A family at a size. m = n = 0 means the size is taken from the picture
/// being tested.
struct FamilySpec {
  Family family = Family::X;
  Index m = 0;
  Index n = 0;
  SuffixMode mode = SuffixMode::AnySuffix;

  bool sized() const noexcept { return m > 0 && n > 0; }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// "Y:m=4,n=6", optionally ",suffix=proper"; a bare "Y" leaves the size open.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

enum class Condition { frame, cond1, cond2, cond2a, cond1bis };

const char* to_string(Condition condition) noexcept;

/// row = 0 marks a whole-column violation, col = 0 a whole-row one.
struct ConditionViolation {
  Condition condition = Condition::frame;
  Index row = 0;
  Index col = 0;

  friend bool operator==(const ConditionViolation&, const ConditionViolation&) = default;
};

std::string format_violation(const ConditionViolation& v);

struct Membership {
  bool member = true;
  std::optional<ConditionViolation> violation;

  explicit operator bool() const noexcept { return member; }
};

struct FrameLanguages {
  WordSet s1;
  WordSet s2;
  WordSet s3;
  WordSet s4;
};

FrameLanguages frame_languages(Index m, Index n, SuffixMode mode = SuffixMode::AnySuffix);

/// frame(p) in S1 x S2 x S3 x S4.
Membership in_X(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

/// Least j in 2..n whose cells in rows 2..m-1 are all 0.
std::optional<ConditionViolation> check_cond1(const Picture& p);

/// Least (i, j) != (1, 1), row-major, with p(i, j..n) all 1 and column j
/// from row i in 110*. ProperOnly skips row 1.
std::optional<ConditionViolation> check_cond2(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

/// check_cond2 without the row clause.
std::optional<ConditionViolation> check_cond2a(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

/// Every (i, j) != (1, n) with p(i, 1..j) all 1 whose column segment from
/// row i has no suffix in 110*, in row-major order.
std::vector<ConditionViolation> cond1bis_violations(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);
std::optional<ConditionViolation> check_cond1bis(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

Membership in_Y(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);
Membership in_Z(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);
Membership in_M(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

/// Dispatches on the family; a sized spec also requires size(p) = (m, n).
Membership is_member(const Picture& p, const FamilySpec& spec);

/// {1ya : |y| = m-2, y != 0, no suffix in 110*}
WordSet gen_I(Index m, SuffixMode mode = SuffixMode::AnySuffix);
/// {1x0 : |x| = m-2, x != 0, no suffix in 110+}
WordSet gen_L(Index m, SuffixMode mode = SuffixMode::AnySuffix);

struct EnumerateOptions {
  /// Upper bound on the generation space (frame product times interiors for
  /// X, Y, M; the column product for Z).
  std::uint64_t work_limit = std::uint64_t{1} << 22;
  /// false lets Z stream in generation order instead of canonical order.
  bool canonical = true;
};

/// Size of the space the generator for this spec walks.
long double generation_space(const FamilySpec& spec);

/// Streams members; the callback returns false to stop.
void for_each_member(const FamilySpec& spec, const std::function<bool(const Picture&)>& visit,
                     const EnumerateOptions& options = {});

PictureSet enumerate(const FamilySpec& spec, const EnumerateOptions& options = {});

std::uint64_t count_members(const FamilySpec& spec, const EnumerateOptions& options = {});

/// Rewrites interior cells of p in X until it lies in Y, keeping the frame.
/// Interior columns are settled right to left: a column is kept when it
/// violates nothing given the columns to its right, otherwise it becomes the
/// nearest such column (fewest flips, rows 3..m-1 before row 2).
Picture repair_to_Y(const Picture& p, SuffixMode mode = SuffixMode::AnySuffix);

}  // namespace neno
