#include <gtest/gtest.h>

#include <sstream>

#include "neno/io.hpp"
#include "neno/picture_set.hpp"
#include "oracles.hpp"

using namespace neno;

namespace {

Picture pic(std::vector<std::string> rows) { return picture_from_rows(rows); }

std::string text(const Word& w) { return format_word(w); }

const Picture& counterexample() {
  static const Picture p = pic({"11111", "10111", "01010", "01001", "01010"});
  return p;
}

// Second picture of the Y(m,n) figure.
const Picture& figure_member() {
  static const Picture p = pic({"11111", "10101", "00101", "01110", "01101", "01000"});
  return p;
}

}  // namespace

TEST(Picture, AccessIsOneBased) {
  const auto& p = counterexample();
  EXPECT_EQ(p.rows(), 5);
  EXPECT_EQ(p.cols(), 5);
  EXPECT_EQ(p(1, 1), 1);
  EXPECT_EQ(p(5, 5), 0);
  EXPECT_EQ(p(4, 5), 1);
  EXPECT_THROW(p.at(0, 1), Error);
  EXPECT_THROW(p.at(6, 1), Error);
  EXPECT_THROW(Picture(Picture::Storage(0, 3)), Error);
}

TEST(Picture, CanonicalOrder) {
  EXPECT_LT(pic({"11"}), pic({"1", "1"}));
  EXPECT_LT(pic({"01", "11"}), pic({"10", "00"}));
  EXPECT_LT(pic({"1"}), pic({"00"}));
}

TEST(Subpicture, Examples) {
  const auto& p = counterexample();
  EXPECT_EQ(subpicture(p, {1, 1, 5, 5}), p);
  EXPECT_EQ(subpicture(p, {3, 2, 3, 2}), pic({"1"}));
  EXPECT_EQ(subpicture(p, {1, 1, 2, 2}), pic({"11", "10"}));
  try {
    subpicture(p, {1, 1, 6, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
  }
  EXPECT_THROW(subpicture(p, {2, 1, 1, 1}), Error);
}

TEST(Subpicture, CompositionMatchesComposedDomain) {
  const auto& p = figure_member();
  for (Index t = 1; t <= 6; ++t)
    for (Index l = 1; l <= 5; ++l)
      for (Index b = t; b <= 6; ++b)
        for (Index r = l; r <= 5; ++r) {
          const auto outer = subpicture(p, {t, l, b, r});
          const Subdomain inner{1, 1 + (r - l) / 2, 1 + (b - t) / 2, r - l + 1};
          const Subdomain composed{t, l + inner.left - 1, t + inner.bottom - 1, l + inner.right - 1};
          ASSERT_EQ(subpicture(outer, inner), subpicture(p, composed));
        }
}

TEST(CornerPrefix, Examples) {
  const auto& p = counterexample();
  EXPECT_EQ(corner_prefix(p, Corner::tl, 5, 5), p);
  EXPECT_EQ(corner_prefix(p, Corner::br, 1, 1), pic({"0"}));
  EXPECT_EQ(corner_prefix(p, Corner::bl, 2, 2), pic({"01", "01"}));
  EXPECT_EQ(corner_prefix(p, Corner::tr, 2, 3), pic({"111", "111"}));
  EXPECT_THROW(corner_prefix(p, Corner::tl, 0, 1), Error);
  EXPECT_THROW(corner_prefix(p, Corner::tl, 2, 6), Error);
}

TEST(CornerPrefix, BottomRightIsTopLeftOfHalfTurn) {
  for (const auto& o : oracle::all_pictures(3, 3)) {
    const auto p = oracle::to_picture(o);
    const auto half = rotate90(rotate90(p));
    for (Index h = 1; h <= 3; ++h)
      for (Index k = 1; k <= 3; ++k) {
        const auto br = corner_prefix(p, Corner::br, h, k);
        ASSERT_EQ(rotate90(rotate90(corner_prefix(half, Corner::tl, h, k))), br);
      }
  }
}

TEST(Frame, Examples) {
  const auto f = frame_of(figure_member());
  EXPECT_EQ(text(f.first_row), "11111");
  EXPECT_EQ(text(f.last_row), "01000");
  EXPECT_EQ(text(f.first_col), "110000");
  EXPECT_EQ(text(f.last_col), "111010");
  const auto g = frame_of(counterexample());
  EXPECT_EQ(text(g.first_row), "11111");
  EXPECT_EQ(text(g.last_row), "01010");
  EXPECT_EQ(text(g.first_col), "11000");
  EXPECT_EQ(text(g.last_col), "11010");
  const auto one = frame_of(pic({"1"}));
  EXPECT_EQ(text(one.first_row), "1");
  EXPECT_EQ(text(one.last_col), "1");
}

TEST(Frame, RotationLaw) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    for (const auto& o : oracle::all_pictures(m, n)) {
      const auto p = oracle::to_picture(o);
      const auto f = frame_of(p);
      const auto r = frame_of(rotate90(p));
      ASSERT_EQ(r.first_row, reverse(f.first_col));
      ASSERT_EQ(r.last_row, reverse(f.last_col));
      ASSERT_EQ(r.first_col, f.last_row);
      ASSERT_EQ(r.last_col, f.first_row);
    }
  }
}

TEST(Transforms, Examples) {
  EXPECT_EQ(rotate90(pic({"01"})), pic({"0", "1"}));
  EXPECT_EQ(rotate90(pic({"01", "11", "00"})), pic({"010", "011"}));
  EXPECT_EQ(row(row_mirror(counterexample()), 1), row(counterexample(), 1));
  EXPECT_EQ(row_mirror(pic({"011"})), pic({"110"}));
  EXPECT_EQ(col_mirror(pic({"01", "11"})), pic({"11", "01"}));
}

TEST(Transforms, GroupLawsAndOracle) {
  for (auto [m, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 2}}) {
    for (const auto& o : oracle::all_pictures(m, n)) {
      const auto p = oracle::to_picture(o);
      const auto r = rotate90(p);
      ASSERT_EQ(oracle::from_picture(r), oracle::rotate(o));
      ASSERT_EQ(rotate90(rotate90(rotate90(r))), p);
      ASSERT_EQ(row_mirror(row_mirror(p)), p);
      ASSERT_EQ(col_mirror(col_mirror(p)), p);
      ASSERT_EQ(rotate90(r), row_mirror(col_mirror(p)));
      ASSERT_EQ(r.size(), std::pair(p.cols(), p.rows()));
    }
  }
}

TEST(Corners, Examples) {
  EXPECT_EQ(corners_of(figure_member()), (std::array<Symbol, 4>{1, 1, 0, 0}));
  EXPECT_EQ(corners_of(counterexample()), (std::array<Symbol, 4>{1, 1, 0, 0}));
  EXPECT_EQ(corners_of(pic({"000", "000"})), (std::array<Symbol, 4>{0, 0, 0, 0}));
}

TEST(LineWords, Examples) {
  const auto cw = column_word(pic({"01", "10"}), 2);
  ASSERT_EQ(cw.size(), 2);
  EXPECT_EQ(cw[0], 1u);  // column "01"
  EXPECT_EQ(cw[1], 2u);  // column "10"
  const auto p = counterexample();
  EXPECT_EQ(column_word(rotate90(p), 2).size(), 5);
  const auto c = column_word(p, 2);
  EXPECT_EQ(c.size(), 5);
  EXPECT_EQ(c[0], 0b11000u);
  EXPECT_EQ(row_word(p, 2)[1], 0b10111u);
  EXPECT_THROW(column_word(Picture(Picture::Storage::Zero(70, 1)), 2), Error);
}

TEST(PictureSet, SortsDeduplicatesAndChecksSize) {
  const PictureSet s{pic({"11", "10"}), pic({"01", "00"}), pic({"11", "10"})};
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], pic({"01", "00"}));
  EXPECT_TRUE(s.contains(pic({"11", "10"})));
  EXPECT_EQ(s.picture_size(), (std::pair<Index, Index>(2, 2)));
  const PictureSet mixed{pic({"1"}), pic({"11"})};
  try {
    mixed.picture_size();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedSizes);
  }
  const auto f = frame_of(s);
  EXPECT_EQ(f.first_rows.size(), 2u);
  EXPECT_EQ(f.last_cols.size(), 1u);
}

TEST(PictureIo, RoundTrip) {
  const PictureSet s{counterexample(), Picture(figure_member().array().block(0, 0, 5, 5))};
  std::ostringstream out;
  write_pictures(out, s);
  EXPECT_NE(out.str().find("# count=2\n"), std::string::npos);
  std::istringstream in(out.str());
  EXPECT_EQ(PictureSet(read_pictures(in)), s);
  EXPECT_EQ(format_picture(pic({"10", "01"})), "2 2\n10\n01\n");
}

TEST(PictureIo, StrictFormat) {
  auto parse = [](const std::string& t) {
    std::istringstream in(t);
    return read_pictures(in);
  };
  EXPECT_EQ(parse("2 2\n10\n01").size(), 1u);
  EXPECT_EQ(parse("# c\n1 2\n10\n\n# between\n1 2\n01\n").size(), 2u);
  EXPECT_EQ(parse("").size(), 0u);
  auto code = [&](const std::string& t) {
    try {
      parse(t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code("1 2\n10\n\n\n1 2\n01\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("1 2\n10\n1 2\n01\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("1 2\n100\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("2 2\n10\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("1  2\n10\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("x 2\n10\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("1 2\n12\n"), ErrorCode::WrongAlphabet);
}

TEST(PictureIo, OtherAlphabets) {
  const Alphabet abc("abc");
  const auto p = picture_from_rows({"abc", "cba"}, abc);
  EXPECT_EQ(p(2, 1), 2);
  EXPECT_EQ(format_picture(p, abc), "2 3\nabc\ncba\n");
}
