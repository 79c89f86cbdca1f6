#include "neno/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

#include "neno/io.hpp"
#include "neno/parallel.hpp"

namespace neno {

const char* to_string(Strategy strategy) noexcept { return strategy == Strategy::naive ? "naive" : "layered"; }

void write_report(std::ostream& out, const VerificationReport& r, const Alphabet& alphabet) {
  out << "property=" << r.property << " verdict=" << (r.holds ? "holds" : "fails")
      << " strategy=" << to_string(r.strategy) << " candidates=" << r.candidates << " pairs=" << r.pairs << '\n';
  for (const auto& note : r.notes) out << "note=" << note << '\n';
  for (const auto& p : r.witness) out << "witness-picture\n" << format_picture(p, alphabet);
  if (r.overlap) out << "witness-overlap " << format_witness(*r.overlap) << '\n';
}

std::string format_report(const VerificationReport& report, const Alphabet& alphabet) {
  std::ostringstream out;
  write_report(out, report, alphabet);
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

int symbol_bits(const PictureSet& s) {
  Symbol top = 1;
  for (const auto& p : s) top = std::max(top, p.array().maxCoeff());
  return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(top))));
}

std::vector<PackedPicture> pack_all(const PictureSet& s, int bits) {
  std::vector<PackedPicture> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    if (!PackedPicture::fits(p.cols(), bits)) {
      throw Error(ErrorCode::InvalidArgument, "rows wider than 64 bits are not supported by the verifier");
    }
    out.emplace_back(p, bits);
  }
  return out;
}

std::string size_text(Index m, Index n) { return std::to_string(m) + "x" + std::to_string(n); }

// q^{mn} if it fits the limit, else WorkLimitExceeded.
std::uint64_t candidate_space(Index m, Index n, std::size_t q, std::uint64_t limit) {
  const long double space = std::pow(static_cast<long double>(q), static_cast<long double>(m * n));
  if (space > static_cast<long double>(limit)) {
    std::ostringstream msg;
    msg << "scanning all " << size_text(m, n) << " pictures over " << q << " symbols needs " << space
        << " candidates, limit " << limit;
    throw Error(ErrorCode::WorkLimitExceeded, msg.str());
  }
  return static_cast<std::uint64_t>(space);
}

// Candidate pictures are numbered in canonical order: the base-q digits of
// the index, most significant first, fill the cells row by row.
class CandidateCodec {
 public:
  CandidateCodec(Index m, Index n, std::size_t q) : m_(m), n_(n), q_(q), bits_(std::max(1, static_cast<int>(std::bit_width(q - 1)))) {}

  int bits() const noexcept { return bits_; }

  std::uint64_t index_of(const Picture& p) const {
    std::uint64_t idx = 0;
    for (Index i = 0; i < m_; ++i) {
      for (Index j = 0; j < n_; ++j) idx = idx * q_ + p.array()(i, j);
    }
    return idx;
  }

  void decode(std::uint64_t idx, Picture::Storage& cells) const {
    for (Index c = m_ * n_ - 1; c >= 0; --c) {
      cells(c / n_, c % n_) = static_cast<Symbol>(idx % q_);
      idx /= q_;
    }
  }

  Picture picture(std::uint64_t idx) const {
    Picture::Storage cells(m_, n_);
    decode(idx, cells);
    return Picture(std::move(cells));
  }

  void decode_packed(std::uint64_t idx, std::vector<std::uint64_t>& rows) const {
    rows.assign(static_cast<std::size_t>(m_), 0);
    for (Index c = m_ * n_ - 1; c >= 0; --c) {
      rows[static_cast<std::size_t>(c / n_)] |= (idx % q_) << ((c % n_) * bits_);
      idx /= q_;
    }
  }

 private:
  Index m_;
  Index n_;
  std::uint64_t q_;
  int bits_;
};

void check_size(const PictureSet& s, Index m, Index n) {
  if (auto size = s.picture_size(); size && *size != std::pair{m, n}) {
    throw Error(ErrorCode::WrongSize, "set holds " + size_text(size->first, size->second) + " pictures, expected " +
                                          size_text(m, n));
  }
}

void require_non_overlapping(const PictureSet& s, const VerifyOptions& options, const char* who) {
  auto r = verify_non_overlapping(s, options);
  if (!r.holds) throw Error(ErrorCode::NotNonOverlapping, std::string(who) + " needs a non-overlapping set");
}

// Least ordered pair (i, j), i <= j, of members that overlap under filter.
struct PairScan {
  ScanResult scan;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<OverlapWitness> overlap;
};

PairScan scan_member_pairs(const std::vector<PackedPicture>& packed, OverlapFilter filter, unsigned workers) {
  PairScan out;
  out.scan = first_failure_scan(
      packed.size(), workers, [] { return 0; },
      [&](int, std::uint64_t i, std::uint64_t& pairs) {
        for (std::size_t j = i; j < packed.size(); ++j) {
          ++pairs;
          if (has_overlap(packed[i], packed[j], filter)) return true;
        }
        return false;
      });
  if (out.scan.first_failure) {
    const auto i = static_cast<std::size_t>(*out.scan.first_failure);
    for (std::size_t j = i; j < packed.size(); ++j) {
      if (auto w = first_overlap(packed[i], packed[j], filter)) {
        out.pair = {i, j};
        out.overlap = w;
        break;
      }
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_non_overlapping(const PictureSet& s, const VerifyOptions& options) {
  const auto start = Clock::now();
  s.picture_size();
  VerificationReport r;
  r.property = "non-overlapping";
  const auto packed = pack_all(s, symbol_bits(s));
  const auto scan = scan_member_pairs(packed, OverlapFilter::proper, options.workers);
  r.candidates = scan.scan.counters.candidates;
  r.pairs = scan.scan.counters.pairs;
  if (scan.pair) {
    r.holds = false;
    r.witness = {s[scan.pair->first], s[scan.pair->second]};
    r.overlap = scan.overlap;
    r.notes.push_back(scan.pair->first == scan.pair->second ? "member is bordered" : "two members properly overlap");
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport verify_unbordered(const PictureSet& s, const VerifyOptions&) {
  const auto start = Clock::now();
  VerificationReport r;
  r.property = "unbordered";
  for (const auto& p : s) {
    ++r.candidates;
    ++r.pairs;
    if (auto w = first_proper_overlap(p, p)) {
      r.holds = false;
      r.witness = {p, p};
      r.overlap = w;
      r.notes.push_back("member is bordered");
      break;
    }
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport verify_neno_naive(const PictureSet& s, Index m, Index n, const Alphabet& alphabet,
                                     const VerifyOptions& options) {
  const auto start = Clock::now();
  check_size(s, m, n);
  const std::uint64_t total = candidate_space(m, n, alphabet.size(), options.work_limit);
  require_non_overlapping(s, options, "neno-naive");
  const CandidateCodec codec(m, n, alphabet.size());
  if (!PackedPicture::fits(n, codec.bits())) {
    throw Error(ErrorCode::InvalidArgument, "rows wider than 64 bits are not supported by the verifier");
  }
  const auto packed = pack_all(s, codec.bits());
  std::vector<std::uint64_t> member_index;
  for (const auto& p : s) member_index.push_back(codec.index_of(p));

  struct State {
    std::vector<std::uint64_t> rows;
  };
  const auto scan = first_failure_scan(
      total, options.workers, [] { return State{}; },
      [&](State& st, std::uint64_t idx, std::uint64_t& pairs) {
        if (std::binary_search(member_index.begin(), member_index.end(), idx)) return false;
        codec.decode_packed(idx, st.rows);
        const PackedPicture candidate(m, n, codec.bits(), st.rows);
        for (const auto& q : packed) {
          ++pairs;
          if (has_overlap(candidate, q)) return false;
        }
        return true;
      });

  VerificationReport r;
  r.property = "neno-naive";
  r.candidates = scan.counters.candidates;
  r.pairs = scan.counters.pairs;
  if (scan.first_failure) {
    r.holds = false;
    r.witness = {codec.picture(*scan.first_failure)};
    r.notes.push_back("candidate overlaps no member");
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport verify_frame_complete(const PictureSet& s, Index m, Index n, const Alphabet& alphabet,
                                         const VerifyOptions& options) {
  const auto start = Clock::now();
  check_size(s, m, n);
  const std::uint64_t total = candidate_space(m, n, alphabet.size(), options.work_limit);
  const CandidateCodec codec(m, n, alphabet.size());
  const auto packed = pack_all(s, codec.bits());
  VerificationReport r;
  r.property = "frame-complete";

  const auto members = scan_member_pairs(packed, OverlapFilter::proper_frame, options.workers);
  r.candidates = members.scan.counters.candidates;
  r.pairs = members.scan.counters.pairs;
  if (members.pair) {
    r.holds = false;
    r.witness = {s[members.pair->first], s[members.pair->second]};
    r.overlap = members.overlap;
    r.notes.push_back("two members frame overlap");
    r.wall_time = Clock::now() - start;
    return r;
  }

  const auto frames = frame_of(s);
  const OverlapIndex last_rows(frames.last_rows);
  const OverlapIndex first_rows(frames.first_rows);
  const OverlapIndex last_cols(frames.last_cols);
  const OverlapIndex first_cols(frames.first_cols);
  std::vector<std::uint64_t> member_index;
  for (const auto& p : s) member_index.push_back(codec.index_of(p));

  struct State {
    Picture::Storage cells;
    std::vector<Symbol> line;
    std::vector<std::uint64_t> rows;
  };
  auto overlaps_line = [](const OverlapIndex& index, std::vector<Symbol>& line, const auto& expr) {
    line.resize(static_cast<std::size_t>(expr.size()));
    for (Index t = 0; t < expr.size(); ++t) line[static_cast<std::size_t>(t)] = expr(t);
    return index.overlaps_any(std::span<const Symbol>(line));
  };
  const auto scan = first_failure_scan(
      total, options.workers, [&] { return State{Picture::Storage(m, n), {}, {}}; },
      [&](State& st, std::uint64_t idx, std::uint64_t& pairs) {
        if (std::binary_search(member_index.begin(), member_index.end(), idx)) return false;
        codec.decode(idx, st.cells);
        ++pairs;
        const bool reduced = overlaps_line(last_rows, st.line, st.cells.row(0)) ||
                             overlaps_line(first_rows, st.line, st.cells.row(m - 1)) ||
                             overlaps_line(last_cols, st.line, st.cells.col(0)) ||
                             overlaps_line(first_cols, st.line, st.cells.col(n - 1));
        if (options.cross_check) {
          codec.decode_packed(idx, st.rows);
          const PackedPicture candidate(m, n, codec.bits(), st.rows);
          bool direct = false;
          for (const auto& q : packed) {
            ++pairs;
            if (has_overlap(candidate, q, OverlapFilter::frame)) {
              direct = true;
              break;
            }
          }
          if (direct != reduced) {
            throw Error(ErrorCode::WitnessMismatch,
                        "frame-word reduction disagrees with the picture scan on candidate " + std::to_string(idx));
          }
        }
        return !reduced;
      });
  r.candidates += scan.counters.candidates;
  r.pairs += scan.counters.pairs;
  if (options.cross_check) r.notes.push_back("cross-checked against the picture scan");
  if (scan.first_failure) {
    r.holds = false;
    r.witness = {codec.picture(*scan.first_failure)};
    r.notes.push_back("candidate frame-overlaps no member");
  }
  r.wall_time = Clock::now() - start;
  return r;
}

namespace {

struct CornerClasses {
  std::size_t q;
  // classes[lang][a * q + b]: words with first symbol a and last symbol b.
  std::array<std::vector<std::size_t>, 4> counts;
};

CornerClasses corner_classes(const FrameLanguages& langs, std::size_t q) {
  CornerClasses c{q, {}};
  const WordSet* sets[] = {&langs.s1, &langs.s2, &langs.s3, &langs.s4};
  for (int l = 0; l < 4; ++l) {
    c.counts[l].assign(q * q, 0);
    for (const auto& w : *sets[l]) {
      if (w[0] >= q || w[w.size() - 1] >= q) throw Error(ErrorCode::WrongAlphabet, "language symbol outside alphabet");
      ++c.counts[l][w[0] * q + w[w.size() - 1]];
    }
  }
  return c;
}

// Visits every corner assignment (a, b, c, d) = (p(1,1), p(1,n), p(m,1), p(m,n))
// with its per-language class indices.
template <typename Visit>
void for_each_corner_tuple(std::size_t q, Visit&& visit) {
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        for (std::size_t d = 0; d < q; ++d) visit(a * q + b, c * q + d, a * q + c, b * q + d);
}

long double frame_product_size(const FrameLanguages& langs, std::size_t q) {
  const auto cls = corner_classes(langs, q);
  long double total = 0;
  for_each_corner_tuple(q, [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    total += static_cast<long double>(cls.counts[0][r1]) * static_cast<long double>(cls.counts[1][r2]) *
             static_cast<long double>(cls.counts[2][c1]) * static_cast<long double>(cls.counts[3][c2]);
  });
  return total;
}

bool in_product(const Picture& p, const FrameLanguages& langs) {
  const auto f = frame_of(p);
  return langs.s1.contains(f.first_row) && langs.s2.contains(f.last_row) && langs.s3.contains(f.first_col) &&
         langs.s4.contains(f.last_col);
}

std::string format_words(const WordSet& s, std::size_t limit = 4) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& w : s) {
    if (shown == limit) {
      out += ",...";
      break;
    }
    if (shown++ > 0) out += ",";
    out += format_word(w);
  }
  return out.empty() ? "{}" : "{" + out + "}";
}

// Tier (i) for one word pair; appends a note and returns false on failure.
bool word_pair_tier(const char* name, const WordSet& a, const WordSet& b, const Alphabet& alphabet,
                    std::vector<std::string>& notes, const Alphabet& out_alphabet) {
  try {
    auto cross = is_cross_non_overlapping(a, b);
    if (!cross.holds) {
      notes.push_back(std::string("tier=i pair=") + name + " cross-non-overlapping fails: " +
                      format_word(*cross.subject, out_alphabet) + " overlaps " +
                      format_word(*cross.partner, out_alphabet));
      return false;
    }
    auto full = is_full_pair(a, b, alphabet);
    if (!full.holds) {
      notes.push_back(std::string("tier=i pair=") + name + " full fails: " + format_word(*full.subject, out_alphabet) +
                      " overlaps no word of side " + std::to_string(full.uncovered_side));
      return false;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DisjointnessViolated && e.code() != ErrorCode::MixedLengths) throw;
    notes.push_back(std::string("tier=i pair=") + name + " " + e.what());
    return false;
  }
  return true;
}

}  // namespace

bool is_frame_compatible(const FrameLanguages& langs, const Alphabet& alphabet) {
  const WordSet* sets[] = {&langs.s1, &langs.s2, &langs.s3, &langs.s4};
  for (const auto* s : sets) {
    if (s->empty()) return false;
  }
  try {
    const auto n = *langs.s1.word_length();
    const auto m = *langs.s3.word_length();
    if (*langs.s2.word_length() != n || *langs.s4.word_length() != m) return false;
  } catch (const Error&) {
    return false;
  }
  const std::size_t q = alphabet.size();
  const auto cls = corner_classes(langs, q);
  std::array<std::vector<bool>, 4> used;
  for (auto& u : used) u.assign(q * q, false);
  for_each_corner_tuple(q, [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    if (cls.counts[0][r1] && cls.counts[1][r2] && cls.counts[2][c1] && cls.counts[3][c2]) {
      used[0][r1] = used[1][r2] = used[2][c1] = used[3][c2] = true;
    }
  });
  for (int l = 0; l < 4; ++l) {
    for (std::size_t k = 0; k < q * q; ++k) {
      if (cls.counts[l][k] && !used[l][k]) return false;
    }
  }
  return true;
}

VerificationReport verify_neno_layered(const PictureSet& y, const PictureSet& x, const FrameLanguages& langs,
                                       const Alphabet& alphabet, const VerifyOptions& options) {
  const auto start = Clock::now();
  if (!is_frame_compatible(langs, alphabet)) {
    throw Error(ErrorCode::FrameIncompatible, "frame languages have no consistent corner assignment for some word");
  }
  const Index n = *langs.s1.word_length();
  const Index m = *langs.s3.word_length();
  check_size(x, m, n);
  check_size(y, m, n);
  if (x.size() > options.member_limit) {
    throw Error(ErrorCode::WorkLimitExceeded, "X has " + std::to_string(x.size()) + " members, limit " +
                                                  std::to_string(options.member_limit));
  }
  const long double expected =
      frame_product_size(langs, alphabet.size()) *
      std::pow(static_cast<long double>(alphabet.size()), static_cast<long double>(std::max<Index>(0, (m - 2) * (n - 2))));
  const bool x_is_product = static_cast<long double>(x.size()) == expected &&
                            std::all_of(x.begin(), x.end(), [&](const Picture& p) { return in_product(p, langs); });
  if (!x_is_product) {
    throw Error(ErrorCode::InvalidArgument, "X is not the set of all pictures with frame in the language product");
  }

  VerificationReport r;
  r.property = "neno-layered";
  r.strategy = Strategy::layered;
  std::vector<std::string> failed;
  auto fail_tier = [&](const char* tier) { failed.push_back(tier); };

  // (i)
  if (!word_pair_tier("S1,S2", langs.s1, langs.s2, alphabet, r.notes, alphabet) |
      !word_pair_tier("S3,S4", langs.s3, langs.s4, alphabet, r.notes, alphabet)) {
    fail_tier("i");
  }

  // (ii)
  {
    const auto fy = frame_of(y);
    const auto fx = frame_of(x);
    const std::pair<const char*, std::pair<const WordSet*, const WordSet*>> parts[] = {
        {"R_F", {&fy.first_rows, &fx.first_rows}},
        {"R_L", {&fy.last_rows, &fx.last_rows}},
        {"C_F", {&fy.first_cols, &fx.first_cols}},
        {"C_L", {&fy.last_cols, &fx.last_cols}}};
    bool ok = true;
    for (const auto& [name, sets] : parts) {
      if (*sets.first != *sets.second) {
        ok = false;
        r.notes.push_back(std::string("tier=ii frame component ") + name + " of Y is " + format_words(*sets.first) +
                          ", of X is " + format_words(*sets.second));
      }
    }
    auto outside = std::find_if(y.begin(), y.end(), [&](const Picture& p) { return !x.contains(p); });
    if (outside != y.end()) {
      ok = false;
      r.notes.push_back("tier=ii Y is not a subset of X");
      if (r.witness.empty() && failed.empty()) r.witness = {*outside};
    }
    if (!ok) fail_tier("ii");
  }

  // (iii)
  const int bits = std::max(1, static_cast<int>(std::bit_width(alphabet.size() - 1)));
  const auto packed_y = pack_all(y, bits);
  {
    const auto scan = scan_member_pairs(packed_y, OverlapFilter::proper, options.workers);
    r.candidates += scan.scan.counters.candidates;
    r.pairs += scan.scan.counters.pairs;
    if (scan.pair) {
      r.notes.push_back("tier=iii two members of Y properly overlap");
      if (failed.empty()) {
        r.witness = {y[scan.pair->first], y[scan.pair->second]};
        r.overlap = scan.overlap;
      }
      fail_tier("iii");
    }
  }

  // (iv)
  {
    const auto scan = first_failure_scan(
        x.size(), options.workers, [] { return 0; },
        [&](int, std::uint64_t i, std::uint64_t& pairs) {
          const Picture& p = x[static_cast<std::size_t>(i)];
          if (y.contains(p)) return false;
          const PackedPicture pp(p, bits);
          for (const auto& q : packed_y) {
            ++pairs;
            if (has_overlap(pp, q)) return false;
          }
          return true;
        });
    r.candidates += scan.counters.candidates;
    r.pairs += scan.counters.pairs;
    if (scan.first_failure) {
      r.notes.push_back("tier=iv a member of X \\ Y overlaps no member of Y");
      if (failed.empty()) r.witness = {x[static_cast<std::size_t>(*scan.first_failure)]};
      fail_tier("iv");
    }
  }

  if (!failed.empty()) {
    r.holds = false;
    std::string list;
    for (const auto& t : failed) list += (list.empty() ? "" : ",") + t;
    r.notes.insert(r.notes.begin(), "failed-tiers=" + list);
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_corner_lemma(const PictureSet& s, const VerifyOptions& options) {
  const auto start = Clock::now();
  for (const auto& p : s) {
    if ((p.array() > 1).any()) throw Error(ErrorCode::WrongAlphabet, "corner lemma applies to binary pictures");
  }
  require_non_overlapping(s, options, "corner-lemma");
  VerificationReport r;
  r.property = "corner-lemma";
  if (s.empty()) return r;
  using Corners = std::array<Symbol, 4>;
  static constexpr Corners kClasses[] = {{0, 0, 1, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  const Corners first = corners_of(s[0]);
  auto text = [](const Corners& c) {
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]) + ")";
  };
  for (const auto& p : s) {
    ++r.candidates;
    const Corners c = corners_of(p);
    if (c != first) {
      r.holds = false;
      r.witness = {s[0], p};
      r.notes.push_back("corners " + text(first) + " and " + text(c) + " differ");
      break;
    }
  }
  if (r.holds) {
    if (std::find(std::begin(kClasses), std::end(kClasses), first) == std::end(kClasses)) {
      r.holds = false;
      r.witness = {s[0]};
      r.notes.push_back("corner class " + text(first) + " is not one of the four admissible classes");
    } else {
      r.notes.push_back("class=" + text(first));
    }
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_frame_necessity(const PictureSet& s, const VerifyOptions& options) {
  const auto start = Clock::now();
  require_non_overlapping(s, options, "frame-necessity");
  VerificationReport r;
  r.property = "frame-necessity";
  const auto f = frame_of(s);
  const std::pair<const char*, std::pair<const WordSet*, const WordSet*>> parts[] = {
      {"rows", {&f.first_rows, &f.last_rows}}, {"columns", {&f.first_cols, &f.last_cols}}};
  for (const auto& [name, sets] : parts) {
    r.pairs += sets.first->size() * sets.second->size();
    try {
      auto rep = is_cross_non_overlapping(*sets.first, *sets.second);
      if (!rep.holds) {
        r.holds = false;
        r.notes.push_back(std::string(name) + ": " + format_word(*rep.subject) + " overlaps " +
                          format_word(*rep.partner));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DisjointnessViolated) throw;
      r.holds = false;
      r.notes.push_back(std::string(name) + ": first and last sets intersect");
    }
  }
  r.candidates = s.size();
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport check_column_code(const PictureSet& s, const Alphabet& alphabet, const VerifyOptions& options) {
  const auto start = Clock::now();
  require_non_overlapping(s, options, "column-code");
  VerificationReport r;
  r.property = "column-code";
  std::vector<LineWord> words;
  for (const auto& p : s) words.push_back(column_word(p, alphabet.size()));
  r.candidates = words.size();
  r.pairs = words.size() * words.size();
  if (!is_cross_bifix_free(words)) {
    r.holds = false;
    r.notes.push_back("column words share a proper prefix and proper suffix");
  }
  r.wall_time = Clock::now() - start;
  return r;
}

VerificationReport verify_membership(const std::vector<Picture>& pictures, const FamilySpec& spec) {
  const auto start = Clock::now();
  VerificationReport r;
  r.property = "member:" + format_family_spec(spec);
  for (const auto& p : pictures) {
    ++r.candidates;
    auto mem = is_member(p, spec);
    if (!mem) {
      r.holds = false;
      r.witness = {p};
      r.notes.push_back(format_violation(*mem.violation));
      break;
    }
  }
  r.wall_time = Clock::now() - start;
  return r;
}

}  // namespace neno
