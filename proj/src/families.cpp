#include "neno/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace neno {

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::X:
      return "X";
    case Family::Y:
      return "Y";
    case Family::Z:
      return "Z";
    case Family::M:
    default:
      return "M";
  }
}

const char* to_string(Condition condition) noexcept {
  switch (condition) {
    case Condition::frame:
      return "frame";
    case Condition::cond1:
      return "cond1";
    case Condition::cond2:
      return "cond2";
    case Condition::cond2a:
      return "cond2a";
    case Condition::cond1bis:
    default:
      return "cond1bis";
  }
}

namespace {

[[noreturn]] void spec_error(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "family spec '" + std::string(text) + "': " + why);
}

Index parse_size(std::string_view text, std::string_view value) {
  Index out = 0;
  for (char c : value) {
    if (c < '0' || c > '9' || out > 1000000) spec_error(text, "size must be a positive integer");
    out = out * 10 + (c - '0');
  }
  if (value.empty() || out < 1) spec_error(text, "size must be a positive integer");
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  if (name == "X") {
    spec.family = Family::X;
  } else if (name == "Y") {
    spec.family = Family::Y;
  } else if (name == "Z") {
    spec.family = Family::Z;
  } else if (name == "M") {
    spec.family = Family::M;
  } else {
    spec_error(text, "family must be one of X, Y, Z, M");
  }
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  bool has_m = false;
  bool has_n = false;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) spec_error(text, "expected key=value, got '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "m" && !has_m) {
      spec.m = parse_size(text, value);
      has_m = true;
    } else if (key == "n" && !has_n) {
      spec.n = parse_size(text, value);
      has_n = true;
    } else if (key == "suffix") {
      try {
        spec.mode = parse_suffix_mode(value);
      } catch (const Error& e) {
        spec_error(text, e.what());
      }
    } else {
      spec_error(text, "unexpected key '" + std::string(key) + "'");
    }
  }
  if (has_m != has_n) spec_error(text, "give both m and n or neither");
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::string out = to_string(spec.family);
  std::string sep = ":";
  if (spec.sized()) {
    out += sep + "m=" + std::to_string(spec.m) + ",n=" + std::to_string(spec.n);
    sep = ",";
  }
  if (spec.mode == SuffixMode::ProperOnly) out += sep + "suffix=proper";
  return out;
}

std::string format_violation(const ConditionViolation& v) {
  std::string out = to_string(v.condition);
  if (v.row > 0 && v.col > 0) return out + " at (" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
  if (v.col > 0) return out + " at column " + std::to_string(v.col);
  if (v.row > 0) return out + " at row " + std::to_string(v.row);
  return out;
}

FrameLanguages frame_languages(Index m, Index n, SuffixMode mode) {
  return {gen_S1(n), gen_S2(n), gen_S3(m), gen_S4(m, mode)};
}

namespace {

void require_family_domain(const Picture& p) {
  if (p.rows() < 4 || p.cols() < 4) {
    throw Error(ErrorCode::WrongSize, "families need m, n >= 4, got " + std::to_string(p.rows()) + "x" +
                                          std::to_string(p.cols()));
  }
  if ((p.array() > 1).any()) throw Error(ErrorCode::WrongAlphabet, "families are binary");
}

Membership fails(Condition c, Index row, Index col) { return {false, ConditionViolation{c, row, col}}; }

Membership from(std::optional<ConditionViolation> v) {
  if (v) return {false, v};
  return {};
}

// Column j (0-based) from row i (0-based) down.
auto column_tail(const Picture& p, Index i, Index j) { return p.array().col(j).tail(p.rows() - i); }

bool row_ones_from(const Picture& p, Index i, Index j) { return (p.array().row(i).tail(p.cols() - j) == 1).all(); }

std::optional<ConditionViolation> cond2_scan(const Picture& p, SuffixMode mode, bool row_clause,
                                             Condition tag) {
  const Index first_row = mode == SuffixMode::AnySuffix ? 0 : 1;
  for (Index i = first_row; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) {
      if (i == 0 && j == 0) continue;
      if (row_clause && !row_ones_from(p, i, j)) continue;
      if (matches(column_tail(p, i, j), OneOneZeros::star)) return ConditionViolation{tag, i + 1, j + 1};
    }
  }
  return std::nullopt;
}

}  // namespace

Membership in_X(const Picture& p, SuffixMode mode) {
  require_family_domain(p);
  const auto f = frame_of(p);
  if (!is_S1(f.first_row)) return fails(Condition::frame, 1, 0);
  if (!is_S2(f.last_row)) return fails(Condition::frame, p.rows(), 0);
  if (!is_S3(f.first_col)) return fails(Condition::frame, 0, 1);
  if (!is_S4(f.last_col, mode)) return fails(Condition::frame, 0, p.cols());
  return {};
}

std::optional<ConditionViolation> check_cond1(const Picture& p) {
  if (p.rows() < 3) return std::nullopt;
  for (Index j = 1; j < p.cols(); ++j) {
    if ((p.array().col(j).segment(1, p.rows() - 2) == 0).all()) return ConditionViolation{Condition::cond1, 0, j + 1};
  }
  return std::nullopt;
}

std::optional<ConditionViolation> check_cond2(const Picture& p, SuffixMode mode) {
  return cond2_scan(p, mode, true, Condition::cond2);
}

std::optional<ConditionViolation> check_cond2a(const Picture& p, SuffixMode mode) {
  return cond2_scan(p, mode, false, Condition::cond2a);
}

std::vector<ConditionViolation> cond1bis_violations(const Picture& p, SuffixMode mode) {
  std::vector<ConditionViolation> out;
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols() && p.array()(i, j) == 1; ++j) {
      if (i == 0 && j == p.cols() - 1) continue;
      if (!has_suffix_in(column_tail(p, i, j), OneOneZeros::star, mode)) {
        out.push_back({Condition::cond1bis, i + 1, j + 1});
      }
    }
  }
  return out;
}

std::optional<ConditionViolation> check_cond1bis(const Picture& p, SuffixMode mode) {
  auto all = cond1bis_violations(p, mode);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Membership in_Y(const Picture& p, SuffixMode mode) {
  if (auto x = in_X(p, mode); !x) return x;
  if (auto v = check_cond1(p)) return from(v);
  return from(check_cond2(p, mode));
}

Membership in_Z(const Picture& p, SuffixMode mode) {
  if (auto x = in_X(p, mode); !x) return x;
  if (auto v = check_cond1(p)) return from(v);
  return from(check_cond2a(p, mode));
}

Membership in_M(const Picture& p, SuffixMode mode) {
  if (auto x = in_X(p, mode); !x) return x;
  if (auto v = check_cond1bis(p, mode)) return from(v);
  return from(check_cond2(p, mode));
}

Membership is_member(const Picture& p, const FamilySpec& spec) {
  if (spec.sized() && p.size() != std::pair{spec.m, spec.n}) {
    throw Error(ErrorCode::WrongSize, "picture is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                                          ", family " + format_family_spec(spec) + " wants " +
                                          std::to_string(spec.m) + "x" + std::to_string(spec.n));
  }
  switch (spec.family) {
    case Family::X:
      return in_X(p, spec.mode);
    case Family::Y:
      return in_Y(p, spec.mode);
    case Family::Z:
      return in_Z(p, spec.mode);
    case Family::M:
    default:
      return in_M(p, spec.mode);
  }
}

namespace {

WordSet filter_binary_words(Index len, const std::function<bool(const Word&)>& keep) {
  std::vector<Word> out;
  for_each_word(Alphabet::binary(), len, [&](const Word& w) {
    if (keep(w)) out.push_back(w);
  });
  return WordSet(std::move(out));
}

}  // namespace

WordSet gen_I(Index m, SuffixMode mode) {
  if (m < 4) throw Error(ErrorCode::SizeTooSmall, "I(m) needs m >= 4, got " + std::to_string(m));
  return filter_binary_words(m, [&](const Word& w) {
    return w[0] == 1 && !(w.array().segment(1, m - 2) == 0).all() &&
           !has_suffix_in(w.array(), OneOneZeros::star, mode);
  });
}

WordSet gen_L(Index m, SuffixMode mode) {
  if (m < 4) throw Error(ErrorCode::SizeTooSmall, "L(m) needs m >= 4, got " + std::to_string(m));
  return filter_binary_words(m, [&](const Word& w) {
    return w[0] == 1 && w[m - 1] == 0 && !(w.array().segment(1, m - 2) == 0).all() &&
           !has_suffix_in(w.array(), OneOneZeros::plus, mode);
  });
}

namespace {

void require_spec_size(const FamilySpec& spec) {
  if (!spec.sized()) throw Error(ErrorCode::InvalidArgument, "enumeration needs a sized family spec");
  if (spec.m < 4 || spec.n < 4) {
    throw Error(ErrorCode::WrongSize,
                "families need m, n >= 4, got " + std::to_string(spec.m) + "x" + std::to_string(spec.n));
  }
}

std::unordered_set<std::string> prefixes_of(const WordSet& words) {
  std::unordered_set<std::string> out;
  for (const auto& w : words) {
    const auto* p = reinterpret_cast<const char*>(w.data());
    for (Index len = 1; len <= w.size(); ++len) out.emplace(p, static_cast<std::size_t>(len));
  }
  return out;
}

// Row-major depth-first walk over pictures whose frame lies in the product.
// Values are tried 0 before 1, so members arrive in canonical order.
class FrameProductWalk {
 public:
  FrameProductWalk(Index m, Index n, const FrameLanguages& langs)
      : m_(m),
        n_(n),
        first_row_(prefixes_of(langs.s1)),
        last_row_(prefixes_of(langs.s2)),
        first_col_(prefixes_of(langs.s3)),
        last_col_(prefixes_of(langs.s4)),
        cells_(Picture::Storage::Zero(m, n)) {}

  void run(const std::function<bool(const Picture&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    step(0);
  }

 private:
  bool feasible(Index i, Index j) {
    if (i == 0 && !first_row_.contains(row_prefix(i, j))) return false;
    if (i == m_ - 1 && !last_row_.contains(row_prefix(i, j))) return false;
    if (j == 0 && !first_col_.contains(col_prefix(i, j))) return false;
    if (j == n_ - 1 && !last_col_.contains(col_prefix(i, j))) return false;
    return true;
  }

  std::string row_prefix(Index i, Index j) const {
    std::string s(static_cast<std::size_t>(j + 1), '\0');
    for (Index c = 0; c <= j; ++c) s[static_cast<std::size_t>(c)] = static_cast<char>(cells_(i, c));
    return s;
  }

  std::string col_prefix(Index i, Index j) const {
    std::string s(static_cast<std::size_t>(i + 1), '\0');
    for (Index r = 0; r <= i; ++r) s[static_cast<std::size_t>(r)] = static_cast<char>(cells_(r, j));
    return s;
  }

  void step(Index cell) {
    if (stopped_) return;
    if (cell == m_ * n_) {
      if (!(*visit_)(Picture(cells_))) stopped_ = true;
      return;
    }
    const Index i = cell / n_;
    const Index j = cell % n_;
    for (Symbol v = 0; v <= 1 && !stopped_; ++v) {
      cells_(i, j) = v;
      if (feasible(i, j)) step(cell + 1);
    }
    cells_(i, j) = 0;
  }

  Index m_;
  Index n_;
  std::unordered_set<std::string> first_row_;
  std::unordered_set<std::string> last_row_;
  std::unordered_set<std::string> first_col_;
  std::unordered_set<std::string> last_col_;
  Picture::Storage cells_;
  const std::function<bool(const Picture&)>* visit_ = nullptr;
  bool stopped_ = false;
};

// Z as 110^{m-2} followed by n-2 columns of I(m) and one column of L(m).
void walk_column_product(const FamilySpec& spec, const std::function<bool(const Picture&)>& visit) {
  const Index m = spec.m;
  const Index n = spec.n;
  const auto first = gen_S3(m);
  const auto inner = gen_I(m, spec.mode);
  const auto last = gen_L(m, spec.mode);
  if (inner.empty() || last.empty()) return;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n - 1), 0);
  Picture::Storage cells(m, n);
  cells.col(0) = first[0].array();
  while (true) {
    for (Index j = 1; j < n - 1; ++j) cells.col(j) = inner[digits[static_cast<std::size_t>(j - 1)]].array();
    cells.col(n - 1) = last[digits.back()].array();
    if (!visit(Picture(cells))) return;
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      const std::size_t radix = pos + 1 == digits.size() ? last.size() : inner.size();
      if (++digits[pos] < radix) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

long double generation_space(const FamilySpec& spec) {
  require_spec_size(spec);
  if (spec.family == Family::Z) {
    const auto inner = static_cast<long double>(gen_I(spec.m, spec.mode).size());
    const auto last = static_cast<long double>(gen_L(spec.m, spec.mode).size());
    return std::pow(inner, static_cast<long double>(spec.n - 2)) * last;
  }
  const auto langs = frame_languages(spec.m, spec.n, spec.mode);
  const auto frames = static_cast<long double>(langs.s1.size() * langs.s2.size() * langs.s3.size() * langs.s4.size());
  return frames * std::pow(2.0L, static_cast<long double>((spec.m - 2) * (spec.n - 2)));
}

void for_each_member(const FamilySpec& spec, const std::function<bool(const Picture&)>& visit,
                     const EnumerateOptions& options) {
  const long double space = generation_space(spec);
  if (space > static_cast<long double>(options.work_limit)) {
    std::ostringstream msg;
    msg << "enumerating " << format_family_spec(spec) << " walks " << space << " configurations, limit "
        << options.work_limit;
    throw Error(ErrorCode::WorkLimitExceeded, msg.str());
  }
  if (spec.family == Family::Z) {
    if (!options.canonical) {
      walk_column_product(spec, visit);
      return;
    }
    std::vector<Picture> all;
    walk_column_product(spec, [&](const Picture& p) {
      all.push_back(p);
      return true;
    });
    std::sort(all.begin(), all.end());
    for (const auto& p : all) {
      if (!visit(p)) return;
    }
    return;
  }
  FrameProductWalk walk(spec.m, spec.n, frame_languages(spec.m, spec.n, spec.mode));
  if (spec.family == Family::X) {
    walk.run(visit);
    return;
  }
  const FamilySpec member_spec{spec.family, 0, 0, spec.mode};
  walk.run([&](const Picture& p) { return !is_member(p, member_spec) || visit(p); });
}

PictureSet enumerate(const FamilySpec& spec, const EnumerateOptions& options) {
  std::vector<Picture> out;
  for_each_member(
      spec,
      [&](const Picture& p) {
        out.push_back(p);
        return true;
      },
      options);
  return PictureSet(std::move(out));
}

std::uint64_t count_members(const FamilySpec& spec, const EnumerateOptions& options) {
  std::uint64_t count = 0;
  auto streaming = options;
  streaming.canonical = false;
  for_each_member(
      spec,
      [&](const Picture&) {
        ++count;
        return true;
      },
      streaming);
  return count;
}

namespace {

// Column j (0-based) is settled when it violates neither condition 1 nor
// condition 2; both only look at columns j..n-1.
bool column_settled(const Picture::Storage& g, Index j, SuffixMode mode) {
  const Index m = g.rows();
  const Index n = g.cols();
  if ((g.col(j).segment(1, m - 2) == 0).all()) return false;
  const Index first_row = mode == SuffixMode::AnySuffix ? 0 : 1;
  for (Index i = first_row; i < m; ++i) {
    if (!(g.row(i).tail(n - j) == 1).all()) continue;
    if (matches(g.col(j).tail(m - i), OneOneZeros::star)) return false;
  }
  return true;
}

// Flip sets over the interior rows ordered by size, then by row preference
// (rows 3..m-1 first, row 2 last).
std::vector<std::uint32_t> flip_order(Index m) {
  const Index rows = m - 2;
  auto rank = [&](Index bit) { return bit == 0 ? rows - 1 : bit - 1; };
  std::vector<std::uint32_t> masks(std::size_t{1} << rows);
  std::iota(masks.begin(), masks.end(), 0u);
  auto key = [&](std::uint32_t mask) {
    std::vector<Index> ranks;
    for (Index b = 0; b < rows; ++b) {
      if (mask >> b & 1u) ranks.push_back(rank(b));
    }
    std::sort(ranks.begin(), ranks.end());
    return std::pair{ranks.size(), ranks};
  };
  std::stable_sort(masks.begin(), masks.end(), [&](auto a, auto b) { return key(a) < key(b); });
  return masks;
}

}  // namespace

Picture repair_to_Y(const Picture& p, SuffixMode mode) {
  if (auto x = in_X(p, mode); !x) {
    throw Error(ErrorCode::NotInX, "repair needs a member of X; " + format_violation(*x.violation));
  }
  const Index m = p.rows();
  const Index n = p.cols();
  if (m - 2 > 20) throw Error(ErrorCode::InvalidArgument, "repair supports at most 22 rows");
  Picture::Storage g = p.array();
  const auto order = flip_order(m);
  for (Index j = n - 2; j >= 1; --j) {
    if (column_settled(g, j, mode)) continue;
    const auto original = g.col(j).eval();
    bool settled = false;
    for (auto mask : order) {
      g.col(j) = original;
      for (Index b = 0; b < m - 2; ++b) {
        if (mask >> b & 1u) g(b + 1, j) ^= 1;
      }
      if (column_settled(g, j, mode)) {
        settled = true;
        break;
      }
    }
    if (!settled) {
      throw Error(ErrorCode::RepairFailed, "no interior completion settles column " + std::to_string(j + 1));
    }
  }
  Picture out(std::move(g));
  if (auto y = in_Y(out, mode); !y) {
    throw Error(ErrorCode::RepairFailed, "repaired picture still violates " + format_violation(*y.violation));
  }
  return out;
}

}  // namespace neno
