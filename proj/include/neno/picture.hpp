#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "neno/alphabet.hpp"
#include "neno/error.hpp"
#include "neno/word.hpp"

namespace neno {

/// Nonempty rectangular array of symbols. Positions are 1-based (i, j) with
/// (1, 1) the top-left cell; the storage itself is 0-based and row-major.
template <typename Scalar>
class BasicPicture {
 public:
  using Storage = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit BasicPicture(Storage cells) : cells_(std::move(cells)) {
    if (cells_.size() == 0) throw Error(ErrorCode::EmptyValue, "pictures must be nonempty");
  }

  template <typename Derived>
  explicit BasicPicture(const Eigen::DenseBase<Derived>& cells) : BasicPicture(Storage(cells)) {}

  Index rows() const noexcept { return cells_.rows(); }
  Index cols() const noexcept { return cells_.cols(); }
  std::pair<Index, Index> size() const noexcept { return {rows(), cols()}; }

  Scalar operator()(Index i, Index j) const { return cells_(i - 1, j - 1); }

  Scalar at(Index i, Index j) const {
    if (i < 1 || j < 1 || i > rows() || j > cols()) {
      throw Error(ErrorCode::OutOfDomain, "position (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") outside a " + std::to_string(rows()) + "x" +
                                              std::to_string(cols()) + " picture");
    }
    return (*this)(i, j);
  }

  const Storage& array() const noexcept { return cells_; }
  const Scalar* data() const noexcept { return cells_.data(); }

  friend bool operator==(const BasicPicture& a, const BasicPicture& b) {
    return a.size() == b.size() && std::equal(a.data(), a.data() + a.cells_.size(), b.data());
  }

  /// Canonical order: rows, then columns, then row-major lexicographic.
  friend bool operator<(const BasicPicture& a, const BasicPicture& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.data(), a.data() + a.cells_.size(), b.data(), b.data() + b.cells_.size());
  }

 private:
  Storage cells_;
};

using Picture = BasicPicture<Symbol>;

/// [(top, left), (bottom, right)], inclusive and 1-based.
struct Subdomain {
  Index top = 1;
  Index left = 1;
  Index bottom = 1;
  Index right = 1;

  Index height() const noexcept { return bottom - top + 1; }
  Index width() const noexcept { return right - left + 1; }

  void check_within(Index m, Index n) const {
    if (top < 1 || left < 1 || top > bottom || left > right || bottom > m || right > n) {
      throw Error(ErrorCode::OutOfDomain, "subdomain [(" + std::to_string(top) + "," + std::to_string(left) + "),(" +
                                              std::to_string(bottom) + "," + std::to_string(right) +
                                              ")] outside a " + std::to_string(m) + "x" + std::to_string(n) +
                                              " picture");
    }
  }
};

enum class Corner { tl, tr, bl, br };

template <typename Scalar>
BasicPicture<Scalar> subpicture(const BasicPicture<Scalar>& p, const Subdomain& d) {
  d.check_within(p.rows(), p.cols());
  return BasicPicture<Scalar>(p.array().block(d.top - 1, d.left - 1, d.height(), d.width()));
}

/// The h x k block anchored at the given corner, as an Eigen expression.
template <typename Scalar>
auto corner_block(const BasicPicture<Scalar>& p, Corner corner, Index h, Index k) {
  const auto& a = p.array();
  switch (corner) {
    case Corner::tl:
      return a.block(0, 0, h, k);
    case Corner::tr:
      return a.block(0, p.cols() - k, h, k);
    case Corner::bl:
      return a.block(p.rows() - h, 0, h, k);
    case Corner::br:
    default:
      return a.block(p.rows() - h, p.cols() - k, h, k);
  }
}

template <typename Scalar>
BasicPicture<Scalar> corner_prefix(const BasicPicture<Scalar>& p, Corner corner, Index h, Index k) {
  if (h < 1 || k < 1 || h > p.rows() || k > p.cols()) {
    throw Error(ErrorCode::OutOfDomain, "prefix size " + std::to_string(h) + "x" + std::to_string(k) +
                                            " exceeds a " + std::to_string(p.rows()) + "x" +
                                            std::to_string(p.cols()) + " picture");
  }
  return BasicPicture<Scalar>(corner_block(p, corner, h, k));
}

template <typename Scalar>
BasicWord<Scalar> row(const BasicPicture<Scalar>& p, Index i) {
  return BasicWord<Scalar>(p.array().row(i - 1).transpose());
}

/// Column j read top to bottom.
template <typename Scalar>
BasicWord<Scalar> column(const BasicPicture<Scalar>& p, Index j) {
  return BasicWord<Scalar>(p.array().col(j - 1));
}

template <typename Scalar>
struct BasicFrame {
  BasicWord<Scalar> first_row;
  BasicWord<Scalar> last_row;
  BasicWord<Scalar> first_col;
  BasicWord<Scalar> last_col;

  friend bool operator==(const BasicFrame&, const BasicFrame&) = default;
};

using Frame = BasicFrame<Symbol>;

template <typename Scalar>
BasicFrame<Scalar> frame_of(const BasicPicture<Scalar>& p) {
  return {row(p, 1), row(p, p.rows()), column(p, 1), column(p, p.cols())};
}

/// Clockwise quarter turn: result(i, j) = p(m - j + 1, i).
template <typename Scalar>
BasicPicture<Scalar> rotate90(const BasicPicture<Scalar>& p) {
  return BasicPicture<Scalar>(p.array().transpose().rowwise().reverse());
}

/// Reflection across the vertical axis.
template <typename Scalar>
BasicPicture<Scalar> row_mirror(const BasicPicture<Scalar>& p) {
  return BasicPicture<Scalar>(p.array().rowwise().reverse());
}

/// Reflection across the horizontal axis.
template <typename Scalar>
BasicPicture<Scalar> col_mirror(const BasicPicture<Scalar>& p) {
  return BasicPicture<Scalar>(p.array().colwise().reverse());
}

/// (p(1,1), p(1,n), p(m,1), p(m,n))
template <typename Scalar>
std::array<Scalar, 4> corners_of(const BasicPicture<Scalar>& p) {
  const Index m = p.rows();
  const Index n = p.cols();
  return {p(1, 1), p(1, n), p(m, 1), p(m, n)};
}

namespace detail {

template <typename Derived>
std::uint64_t line_code(const Eigen::DenseBase<Derived>& line, std::uint64_t q) {
  std::uint64_t code = 0;
  for (Index i = 0; i < line.size(); ++i) code = code * q + static_cast<std::uint64_t>(line(i));
  return code;
}

inline void check_line_fits(Index length, std::size_t q) {
  long double space = 1;
  for (Index i = 0; i < length; ++i) space *= static_cast<long double>(q);
  if (space > 18446744073709551615.0L) {
    throw Error(ErrorCode::InvalidArgument,
                "a line of " + std::to_string(length) + " symbols does not fit a 64-bit line symbol");
  }
}

}  // namespace detail

/// The picture as a length-n word over the alphabet of its columns. Column
/// symbols are base-q codes with the top cell most significant.
template <typename Scalar>
LineWord column_word(const BasicPicture<Scalar>& p, std::size_t q) {
  detail::check_line_fits(p.rows(), q);
  LineWord::Storage codes(p.cols());
  for (Index j = 0; j < p.cols(); ++j) codes[j] = detail::line_code(p.array().col(j), q);
  return LineWord(codes);
}

/// The picture as a length-m word over the alphabet of its rows. Row symbols
/// are base-q codes with the leftmost cell most significant.
template <typename Scalar>
LineWord row_word(const BasicPicture<Scalar>& p, std::size_t q) {
  detail::check_line_fits(p.cols(), q);
  LineWord::Storage codes(p.rows());
  for (Index i = 0; i < p.rows(); ++i) codes[i] = detail::line_code(p.array().row(i), q);
  return LineWord(codes);
}

}  // namespace neno
