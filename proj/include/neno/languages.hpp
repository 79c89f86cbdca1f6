#pragma once

#include <Eigen/Core>
#include <string_view>

#include "neno/word.hpp"
#include "neno/word_set.hpp"

namespace neno {

/// Whether a word counts as a suffix of itself when testing "has a suffix in".
enum class SuffixMode { AnySuffix, ProperOnly };

const char* to_string(SuffixMode mode) noexcept;
SuffixMode parse_suffix_mode(std::string_view text);

/// The binary patterns 110^* (min_zeros = 0) and 110^+ (min_zeros = 1).
enum class OneOneZeros { star, plus };

template <typename Derived>
bool matches(const Eigen::DenseBase<Derived>& segment, OneOneZeros pattern) {
  const Index len = segment.size();
  const Index min_len = pattern == OneOneZeros::star ? 2 : 3;
  if (len < min_len) return false;
  if (segment(0) != 1 || segment(1) != 1) return false;
  for (Index i = 2; i < len; ++i) {
    if (segment(i) != 0) return false;
  }
  return true;
}

template <typename Derived>
bool has_suffix_in(const Eigen::DenseBase<Derived>& segment, OneOneZeros pattern, SuffixMode mode) {
  const Index len = segment.size();
  for (Index start = mode == SuffixMode::AnySuffix ? 0 : 1; start < len; ++start) {
    if (matches(segment.tail(len - start), pattern)) return true;
  }
  return false;
}

// Row and column languages of the construction. All binary; n, m >= 4.

bool is_S1(const Word& w);
bool is_S2(const Word& w);
bool is_S3(const Word& w);
bool is_S4(const Word& w, SuffixMode mode = SuffixMode::AnySuffix);

/// {1^n}
WordSet gen_S1(Index n);
/// {0w0 : |w| = n-2}
WordSet gen_S2(Index n);
/// {110^{m-2}}
WordSet gen_S3(Index m);
/// {1w0 : |w| = m-2, w != 0^{m-2}, no suffix in 110^+}
WordSet gen_S4(Index m, SuffixMode mode = SuffixMode::AnySuffix);

}  // namespace neno
