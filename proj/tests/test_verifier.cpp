#include <gtest/gtest.h>

#include "neno/families.hpp"
#include "neno/io.hpp"
#include "neno/verifier.hpp"
#include "oracles.hpp"

using namespace neno;

namespace {

Picture pic(std::vector<std::string> rows) { return picture_from_rows(rows); }

PictureSet family(Family f, int m, int n) { return enumerate({f, m, n, SuffixMode::AnySuffix}); }

VerifyOptions with_workers(unsigned w) {
  VerifyOptions o;
  o.workers = w;
  return o;
}

PictureSet without(const PictureSet& s, std::size_t index) {
  std::vector<Picture> v(s.begin(), s.end());
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(index));
  return PictureSet(v);
}

bool frame_overlap(const oracle::Pic& a, const oracle::Pic& b) {
  for (const auto& w : oracle::overlaps(a, b)) {
    if (w.h == 1 || w.k == 1) return true;
  }
  return false;
}

// Least picture outside s that no member overlaps under `hit`.
template <typename Hit>
std::optional<oracle::Pic> least_expander(const PictureSet& s, int m, int n, Hit hit) {
  const auto members = oracle::from_set(s);
  for (const auto& c : oracle::all_pictures(m, n)) {
    if (std::find(members.begin(), members.end(), c) != members.end()) continue;
    if (std::none_of(members.begin(), members.end(), [&](const oracle::Pic& p) { return hit(c, p); })) return c;
  }
  return std::nullopt;
}

}  // namespace

TEST(NonOverlapping, Examples) {
  const auto bordered = verify_non_overlapping(PictureSet{pic({"11", "11"})});
  EXPECT_FALSE(bordered.holds);
  ASSERT_EQ(bordered.witness.size(), 2u);
  EXPECT_EQ(bordered.witness[0], bordered.witness[1]);
  ASSERT_TRUE(bordered.overlap.has_value());
  EXPECT_TRUE(bordered.overlap->flags.proper);
  EXPECT_TRUE(verify_non_overlapping(family(Family::Y, 4, 4)).holds);
  EXPECT_TRUE(verify_non_overlapping(family(Family::M, 5, 5)).holds);
  EXPECT_TRUE(verify_non_overlapping(PictureSet{}).holds);
}

TEST(NonOverlapping, MatchesOracleOnSmallSets) {
  const auto all = oracle::all_pictures(2, 3);
  for (std::size_t a = 0; a < all.size(); a += 3) {
    for (std::size_t b = a; b < all.size(); b += 5) {
      const PictureSet s{oracle::to_picture(all[a]), oracle::to_picture(all[b])};
      bool expect = true;
      for (const auto& p : oracle::from_set(s))
        for (const auto& q : oracle::from_set(s)) expect = expect && !oracle::properly_overlap(p, q);
      ASSERT_EQ(verify_non_overlapping(s).holds, expect);
      ASSERT_EQ(verify_non_overlapping(s, with_workers(3)).holds, expect);
    }
  }
}

TEST(Unbordered, Examples) {
  EXPECT_FALSE(verify_unbordered(PictureSet{pic({"00", "00"})}).holds);
  EXPECT_TRUE(verify_unbordered(family(Family::Y, 4, 5)).holds);
}

TEST(NenoNaive, YAtFourByFourHolds) {
  const auto r = verify_neno_naive(family(Family::Y, 4, 4), 4, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.candidates, 65536u);
  EXPECT_EQ(r.property, "neno-naive");
}

TEST(NenoNaive, EmptySetFailsWithLeastPicture) {
  const auto r = verify_neno_naive(PictureSet{}, 4, 4);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness[0], Picture(Picture::Storage::Zero(4, 4)));
  EXPECT_EQ(r.candidates, 1u);
}

TEST(NenoNaive, RemovingAMemberExposesTheOracleExpander) {
  const auto y = family(Family::Y, 4, 4);
  for (std::size_t drop : {std::size_t{0}, y.size() / 2, y.size() - 1}) {
    const auto s = without(y, drop);
    const auto expect = least_expander(s, 4, 4, oracle::any_overlap);
    ASSERT_TRUE(expect.has_value());
    const auto one = verify_neno_naive(s, 4, 4, Alphabet::binary(), with_workers(1));
    const auto four = verify_neno_naive(s, 4, 4, Alphabet::binary(), with_workers(4));
    EXPECT_FALSE(one.holds);
    ASSERT_EQ(one.witness.size(), 1u);
    EXPECT_EQ(oracle::from_picture(one.witness[0]), *expect);
    EXPECT_EQ(format_report(one), format_report(four));
  }
}

TEST(NenoNaive, Preconditions) {
  try {
    verify_neno_naive(PictureSet{pic({"11", "11"})}, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNonOverlapping);
  }
  try {
    verify_neno_naive(family(Family::Y, 4, 4), 4, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongSize);
  }
  VerifyOptions tight;
  tight.work_limit = 1000;
  try {
    verify_neno_naive(family(Family::Y, 4, 4), 4, 4, Alphabet::binary(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WorkLimitExceeded);
  }
}

TEST(NenoNaive, TernaryAlphabet) {
  const Alphabet abc("abc");
  const PictureSet s{picture_from_rows({"ab", "cc"}, abc)};
  const auto r = verify_neno_naive(s, 2, 2, abc);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(format_picture(r.witness[0], abc), "2 2\naa\ncb\n");
}

TEST(FrameComplete, XHoldsAndCrossCheckAgrees) {
  const auto x = family(Family::X, 4, 4);
  EXPECT_TRUE(verify_frame_complete(x, 4, 4).holds);
  VerifyOptions cross;
  cross.cross_check = true;
  const auto r = verify_frame_complete(x, 4, 4, Alphabet::binary(), cross);
  EXPECT_TRUE(r.holds);
  // 64 members, then every candidate.
  EXPECT_EQ(r.candidates, 64u + 65536u);
}

TEST(FrameComplete, RemovingAMemberExposesTheOracleWitness) {
  const auto x = family(Family::X, 4, 4);
  const auto s = without(x, 17);
  const auto expect = least_expander(s, 4, 4, frame_overlap);
  ASSERT_TRUE(expect.has_value());
  VerifyOptions cross;
  cross.cross_check = true;
  cross.workers = 4;
  const auto r = verify_frame_complete(s, 4, 4, Alphabet::binary(), cross);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(oracle::from_picture(r.witness[0]), *expect);
  cross.workers = 1;
  EXPECT_EQ(format_report(r), format_report(verify_frame_complete(s, 4, 4, Alphabet::binary(), cross)));
}

TEST(FrameComplete, MembersThatFrameOverlapFail) {
  const PictureSet s{pic({"1111", "1000", "0000", "0001"}), pic({"1111", "1010", "0100", "0110"})};
  const auto r = verify_frame_complete(s, 4, 4);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness.size(), 2u);
  ASSERT_TRUE(r.overlap.has_value());
  EXPECT_TRUE(r.overlap->flags.frame);
}

TEST(Layered, YHoldsAndAgreesWithNaive) {
  const auto y = family(Family::Y, 4, 4);
  const auto x = family(Family::X, 4, 4);
  const auto r = verify_neno_layered(y, x, frame_languages(4, 4));
  EXPECT_TRUE(r.holds) << format_report(r);
  EXPECT_EQ(r.holds, verify_neno_naive(y, 4, 4).holds);
}

TEST(Layered, MissingMemberFailsTierFour) {
  const auto y = family(Family::Y, 4, 5);
  const auto x = family(Family::X, 4, 5);
  const auto s = without(y, 0);
  const auto r = verify_neno_layered(s, x, frame_languages(4, 5), Alphabet::binary(), with_workers(4));
  EXPECT_FALSE(r.holds);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_EQ(r.notes.front(), "failed-tiers=iv");
  EXPECT_FALSE(verify_neno_naive(s, 4, 5).holds);
  EXPECT_EQ(format_report(r), format_report(verify_neno_layered(s, x, frame_languages(4, 5))));
}

TEST(Layered, RejectsPartialX) {
  const auto y = family(Family::Y, 4, 4);
  const auto x = family(Family::X, 4, 4);
  try {
    verify_neno_layered(y, without(x, 3), frame_languages(4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(FrameCompatibility, Examples) {
  EXPECT_TRUE(is_frame_compatible(frame_languages(4, 4)));
  EXPECT_TRUE(is_frame_compatible(frame_languages(6, 5)));
  auto broken = frame_languages(4, 4);
  broken.s1 = WordSet{parse_word("0000")};
  EXPECT_FALSE(is_frame_compatible(broken));
}

TEST(CornerLemma, Examples) {
  const auto r = check_corner_lemma(family(Family::Y, 5, 5));
  EXPECT_TRUE(r.holds);
  EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "class=(1,1,0,0)"), r.notes.end());
  try {
    check_corner_lemma(PictureSet{pic({"000", "011", "111"}), pic({"111", "100", "000"})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNonOverlapping);
  }
  EXPECT_TRUE(check_corner_lemma(PictureSet{family(Family::Y, 4, 4)[0]}).holds);
}

TEST(FrameNecessity, Examples) {
  EXPECT_TRUE(check_frame_necessity(family(Family::Y, 4, 4)).holds);
  EXPECT_TRUE(check_frame_necessity(family(Family::M, 5, 5)).holds);
  // Non-overlapping subsets inherit the property.
  const auto y = family(Family::Y, 4, 5);
  for (std::size_t stride : {2u, 3u, 7u}) {
    std::vector<Picture> part;
    for (std::size_t i = 0; i < y.size(); i += stride) part.push_back(y[i]);
    EXPECT_TRUE(check_frame_necessity(PictureSet(part)).holds);
  }
}

TEST(ColumnCode, YFamiliesAreCrossBifixFree) {
  for (auto [m, n] : {std::pair{4, 4}, std::pair{4, 5}, std::pair{5, 4}}) {
    EXPECT_TRUE(check_column_code(family(Family::Y, m, n)).holds) << m << "x" << n;
  }
}

TEST(Membership, ZInsideY) {
  const auto z = family(Family::Z, 4, 5);
  const auto r = verify_membership(std::vector<Picture>(z.begin(), z.end()), parse_family_spec("Y:m=4,n=5"));
  EXPECT_TRUE(r.holds);
  const auto bad = verify_membership({pic({"11111", "10111", "01010", "01001", "01010"})}, parse_family_spec("Y"));
  EXPECT_FALSE(bad.holds);
  ASSERT_FALSE(bad.notes.empty());
  EXPECT_EQ(bad.notes.back(), "cond2 at (1,3)");
}

TEST(Report, TextLayout) {
  const auto r = verify_non_overlapping(PictureSet{pic({"11", "11"})});
  const auto text = format_report(r);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "property=non-overlapping verdict=fails strategy=naive candidates=1 pairs=1");
  EXPECT_NE(text.find("note=member is bordered\n"), std::string::npos);
  EXPECT_NE(text.find("witness-overlap tl PQ 1 1 proper,frame"), std::string::npos);
}
