#include "neno/counting.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace neno {

namespace {

BigInt power(const BigInt& base, Index exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string suffix_tag(SuffixMode mode) { return std::string(":") + to_string(mode); }

template <typename T>
std::string text_or_dash(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream out;
  out << *v;
  return out.str();
}

}  // namespace

Rational upper_bound(Index m, Index n, std::size_t q) {
  if (m < 1 || n < 1 || q < 2) throw Error(ErrorCode::InvalidArgument, "upper bound needs m, n >= 1 and q >= 2");
  return Rational(power(BigInt(q), m * n), BigInt(2 * std::max(m, n) - 1));
}

BigInt lower_bound_formula(Index m, Index n) {
  if (m < 4 || n < 4) throw Error(ErrorCode::SizeTooSmall, "lower bound needs m, n >= 4");
  return power(power(BigInt(2), m - 2) - 1, n - 2) * power(BigInt(2), m - 3);
}

std::optional<bool> CountReport::agree() const {
  if (!closed || !enumerated) return std::nullopt;
  return *closed == Rational(*enumerated);
}

std::string format_count(const CountReport& r) {
  const auto agreement = r.agree();
  return "id=" + r.id + " m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + " closed=" +
         text_or_dash(r.closed) + " enumerated=" + text_or_dash(r.enumerated) +
         " agree=" + (agreement ? (*agreement ? "yes" : "no") : "-");
}

BigInt count_Z_by_definition(Index m, Index n, SuffixMode mode, const EnumerateOptions& options) {
  BigInt count = 0;
  auto streaming = options;
  streaming.canonical = false;
  for_each_member(
      FamilySpec{Family::X, m, n, mode},
      [&](const Picture& p) {
        if (in_Z(p, mode)) ++count;
        return true;
      },
      streaming);
  return count;
}

std::vector<CountReport> closed_counts(Index m, Index n, SuffixMode mode, const EnumerateOptions& options) {
  if (m < 4 || n < 4) throw Error(ErrorCode::SizeTooSmall, "closed counts need m, n >= 4");
  const auto tag = suffix_tag(mode);
  const BigInt i_count = gen_I(m, mode).size();
  const BigInt l_count = gen_L(m, mode).size();
  const BigInt z_count = count_Z_by_definition(m, n, mode, options);
  std::vector<CountReport> out;
  out.push_back({"I" + tag, m, n, Rational(power(BigInt(2), m - 2) - 1), i_count});
  out.push_back({"L" + tag, m, n, Rational(power(BigInt(2), m - 3)), l_count});
  out.push_back({"Z" + tag, m, n, Rational(lower_bound_formula(m, n)), z_count});
  out.push_back({"Z-product" + tag, m, n, Rational(power(i_count, n - 2) * l_count), z_count});
  return out;
}

AuditReport audit_bounds(Index m, Index n, SuffixMode mode, const EnumerateOptions& options) {
  AuditReport a;
  a.m = m;
  a.n = n;
  a.mode = mode;
  const auto tag = suffix_tag(mode);
  const Rational upper = upper_bound(m, n, 2);
  const BigInt lower = lower_bound_formula(m, n);
  const BigInt x = count_members({Family::X, m, n, mode}, options);
  const BigInt y = count_members({Family::Y, m, n, mode}, options);
  const BigInt z = count_Z_by_definition(m, n, mode, options);
  a.counts.push_back({"upper-bound", m, n, upper, std::nullopt});
  a.counts.push_back({"lower-bound", m, n, Rational(lower), std::nullopt});
  a.counts.push_back({"X" + tag, m, n, std::nullopt, x});
  a.counts.push_back({"Y" + tag, m, n, std::nullopt, y});
  a.counts.push_back({"Z" + tag, m, n, Rational(lower), z});
  for (auto each : {SuffixMode::AnySuffix, SuffixMode::ProperOnly}) {
    for (auto& r : closed_counts(m, n, each, options)) {
      if (each != mode || r.id != "Z" + tag) a.counts.push_back(std::move(r));
    }
  }
  a.checks.push_back({"Z<=Y", z <= y});
  a.checks.push_back({"Y<=X", y <= x});
  a.checks.push_back({"Y<=upper-bound", Rational(y) <= upper});
  a.checks.push_back({"Y>=lower-bound", y >= lower});
  for (const auto& r : a.counts) {
    if (r.id.starts_with("Z-product")) a.checks.push_back({"product-law" + r.id.substr(9), r.agree().value_or(false)});
  }
  return a;
}

void write_audit(std::ostream& out, const AuditReport& a) {
  for (const auto& r : a.counts) out << format_count(r) << '\n';
  for (const auto& c : a.checks) out << "check=" << c.name << " holds=" << (c.holds ? "yes" : "no") << '\n';
}

}  // namespace neno
