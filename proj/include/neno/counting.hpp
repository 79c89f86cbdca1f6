#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "neno/families.hpp"

namespace neno {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^{mn} / (2 max(m, n) - 1), exact.
Rational upper_bound(Index m, Index n, std::size_t q);

/// (2^{m-2} - 1)^{n-2} * 2^{m-3}
BigInt lower_bound_formula(Index m, Index n);

struct CountReport {
  std::string id;
  Index m = 0;
  Index n = 0;
  std::optional<Rational> closed;
  std::optional<BigInt> enumerated;

  /// Set only when both values are present.
  std::optional<bool> agree() const;
};

/// `id=<..> m=<..> n=<..> closed=<int|p/q|-> enumerated=<int|-> agree=<yes|no|->`
std::string format_count(const CountReport& report);

/// Closed forms for |I(m)|, |L(m)| and |Z(m,n)| next to enumeration under
/// the given mode, plus the product law |Z| = |I|^{n-2} |L|. Ids carry the
/// mode, e.g. `I:any`.
std::vector<CountReport> closed_counts(Index m, Index n, SuffixMode mode, const EnumerateOptions& options = {});

/// |Z(m,n)| counted by filtering X through the definition of Z.
BigInt count_Z_by_definition(Index m, Index n, SuffixMode mode, const EnumerateOptions& options = {});

struct AuditCheck {
  std::string name;
  bool holds = false;
};

struct AuditReport {
  Index m = 0;
  Index n = 0;
  SuffixMode mode = SuffixMode::AnySuffix;
  std::vector<CountReport> counts;
  std::vector<AuditCheck> checks;
};

/// Upper bound, closed lower bound and enumerated |X|, |Y|, |Z| under the
/// mode, with the checks Z<=Y, Y<=X, Y<=upper-bound, Y>=lower-bound and the
/// product law, followed by the closed-form comparison in both modes.
AuditReport audit_bounds(Index m, Index n, SuffixMode mode = SuffixMode::AnySuffix,
                         const EnumerateOptions& options = {});

void write_audit(std::ostream& out, const AuditReport& report);

}  // namespace neno
