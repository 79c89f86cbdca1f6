#include "neno/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "neno/counting.hpp"
#include "neno/io.hpp"
#include "neno/verifier.hpp"

namespace neno {

Picture counterexample_picture() { return picture_from_rows({"11111", "10111", "01010", "01001", "01010"}); }

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string positions(const std::vector<ConditionViolation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
  }
  return out.empty() ? "-" : out;
}

}  // namespace

bool repro_counterexample(std::ostream& out, unsigned workers) {
  const Picture p = counterexample_picture();
  bool all = true;
  auto clause = [&](const std::string& name, bool ok, const std::string& detail) {
    out << "clause " << name << ": " << (ok ? "ok" : "FAILED") << (detail.empty() ? "" : " (" + detail + ")") << '\n';
    all = all && ok;
  };
  out << "picture\n" << format_picture(p);

  const auto x = in_X(p);
  out << "in_X=" << yes_no(x.member) << '\n';
  clause("in X(5,5)", x.member, x.violation ? format_violation(*x.violation) : "");

  const auto m = in_M(p);
  const auto bis = cond1bis_violations(p);
  out << "in_M=" << yes_no(m.member) << " cond1bis-violations=" << positions(bis) << '\n';
  clause("not in M(5,5)", !m.member, m.violation ? format_violation(*m.violation) : "");

  const auto y = in_Y(p);
  out << "in_Y=" << yes_no(y.member) << (y.violation ? " violation=" + format_violation(*y.violation) : "") << '\n';
  clause("in Y(5,5)", y.member, y.violation ? format_violation(*y.violation) : "");

  const FamilySpec x55{Family::X, 5, 5, SuffixMode::AnySuffix};
  const auto xs = enumerate(x55);
  const PackedPicture packed(p, 1);
  std::size_t overlapping = 0;
  std::size_t proper = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const PackedPicture q(xs[i], 1);
    if (has_overlap(packed, q)) {
      ++overlapping;
      if (!first) first = i;
    }
    if (has_overlap(packed, q, OverlapFilter::proper)) ++proper;
  }
  out << "overlap-free against |X(5,5)|=" << xs.size() << " members: " << (overlapping == 0 ? "yes" : "no")
      << " overlapping=" << overlapping << " properly=" << proper << '\n';
  if (first) {
    out << "first overlapping member\n" << format_picture(xs[*first]);
    out << "witness " << format_witness(*first_overlap(packed, PackedPicture(xs[*first], 1))) << '\n';
  }
  clause("overlaps no member of X(5,5)", overlapping == 0, std::to_string(overlapping) + " members overlap");

  const auto ms = enumerate(FamilySpec{Family::M, 5, 5, SuffixMode::AnySuffix});
  VerifyOptions options;
  options.workers = workers;
  const auto layered = verify_neno_layered(ms, xs, frame_languages(5, 5), Alphabet::binary(), options);
  out << "|M(5,5)|=" << ms.size() << '\n';
  write_report(out, layered);
  clause("neno-layered on M(5,5) fails", !layered.holds, "");

  out << "verdict=" << (all ? "holds" : "fails") << '\n';
  return all;
}

namespace {

struct Common {
  std::string alphabet = "01";
  std::string suffix;
  std::uint64_t work_limit = 0;
  unsigned workers = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_suffix) {
  cmd->add_option("--alphabet", c.alphabet, "symbol characters in order")->capture_default_str();
  if (with_suffix) cmd->add_option("--suffix", c.suffix, "suffix semantics")->check(CLI::IsMember({"any", "proper"}));
  cmd->add_option("--work-limit", c.work_limit, "enumeration / candidate limit");
  cmd->add_option("--workers", c.workers, "worker threads, 0 = hardware threads")->capture_default_str();
}

SuffixMode mode_of(const Common& c) { return c.suffix.empty() ? SuffixMode::AnySuffix : parse_suffix_mode(c.suffix); }

EnumerateOptions enumerate_options(const Common& c) {
  EnumerateOptions o;
  if (c.work_limit > 0) o.work_limit = c.work_limit;
  return o;
}

VerifyOptions verify_options(const Common& c, bool cross_check) {
  VerifyOptions o;
  if (c.work_limit > 0) o.work_limit = o.member_limit = c.work_limit;
  o.workers = c.workers;
  o.cross_check = cross_check;
  return o;
}

std::pair<Index, Index> parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_m = 0;
    std::size_t used_n = 0;
    const auto m = std::stol(text.substr(0, x), &used_m);
    const auto n = std::stol(text.substr(x + 1), &used_n);
    if (used_m != x || used_n != text.size() - x - 1 || m < 1 || n < 1) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "size must look like MxN, got '" + text + "'");
  }
}

std::vector<Picture> read_all(const std::vector<std::string>& files, const Alphabet& alphabet) {
  std::vector<Picture> out;
  for (const auto& f : files) {
    auto ps = read_pictures(std::filesystem::path(f), alphabet);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Picture read_single(const std::string& file, const Alphabet& alphabet) {
  auto ps = read_pictures(std::filesystem::path(file), alphabet);
  if (ps.size() != 1) {
    throw Error(ErrorCode::ParseError, file + " holds " + std::to_string(ps.size()) + " pictures, expected one");
  }
  return ps.front();
}

int report_exit(std::ostream& out, const VerificationReport& r, const Alphabet& alphabet) {
  write_report(out, r, alphabet);
  return r.holds ? kExitOk : kExitFails;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify non-overlapping picture codes"};
  app.require_subcommand(1);

  Common gen_c;
  std::string gen_spec;
  std::string gen_output;
  auto* gen = app.add_subcommand("generate", "enumerate a family in canonical order");
  gen->add_option("spec", gen_spec, "family spec, e.g. Y:m=4,n=4")->required();
  gen->add_option("-o,--output", gen_output, "picture-set file to write");
  add_common(gen, gen_c, true);

  Common ver_c;
  std::string ver_property;
  std::vector<std::string> ver_files;
  std::string ver_against;
  std::string ver_size;
  bool ver_cross = false;
  auto* ver = app.add_subcommand("verify", "check a property of a picture set");
  ver->add_option("property", ver_property,
                  "non-overlapping | neno-naive | neno-layered | frame-complete | unbordered | corner-lemma | "
                  "frame-necessity | column-code | member:<family>")
      ->required();
  ver->add_option("files", ver_files, "picture-set files (their union is checked)");
  ver->add_option("--against", ver_against, "family spec of X for neno-layered");
  ver->add_option("--size", ver_size, "MxN candidate size when the set is empty");
  ver->add_flag("--cross-check", ver_cross, "re-check frame overlaps with the picture scan");
  add_common(ver, ver_c, true);

  Common ov_c;
  std::string ov_a;
  std::string ov_b;
  auto* ov = app.add_subcommand("overlap", "list all overlaps between two pictures");
  ov->add_option("a", ov_a, "single-picture file")->required();
  ov->add_option("b", ov_b, "single-picture file")->required();
  add_common(ov, ov_c, false);

  Common cnt_c;
  Index cnt_m = 0;
  Index cnt_n = 0;
  auto* cnt = app.add_subcommand("count", "closed forms and enumerated family sizes");
  cnt->add_option("m", cnt_m)->required()->check(CLI::Range(4, 64));
  cnt->add_option("n", cnt_n)->required()->check(CLI::Range(4, 64));
  add_common(cnt, cnt_c, true);

  Common aud_c;
  Index aud_m = 0;
  Index aud_n = 0;
  auto* aud = app.add_subcommand("audit", "counts plus the bound checks");
  aud->add_option("m", aud_m)->required()->check(CLI::Range(4, 64));
  aud->add_option("n", aud_n)->required()->check(CLI::Range(4, 64));
  add_common(aud, aud_c, true);

  Common rep_c;
  auto* rep = app.add_subcommand("repro-counterexample", "check the 5x5 counterexample claim");
  add_common(rep, rep_c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      auto spec = parse_family_spec(gen_spec);
      if (!gen_c.suffix.empty()) spec.mode = mode_of(gen_c);
      if (!spec.sized()) throw Error(ErrorCode::ParseError, "generate needs a sized spec such as Y:m=4,n=4");
      const Alphabet alphabet(gen_c.alphabet);
      std::ofstream file;
      if (!gen_output.empty()) {
        file.open(gen_output);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + gen_output);
      }
      std::ostream& target = gen_output.empty() ? out : file;
      PictureWriter writer(target, alphabet);
      for_each_member(
          spec,
          [&](const Picture& p) {
            writer.write(p);
            return true;
          },
          enumerate_options(gen_c));
      writer.finish();
      if (!gen_output.empty()) out << "count=" << writer.count() << '\n';
      return kExitOk;
    }

    if (*ver) {
      const Alphabet alphabet(ver_c.alphabet);
      const auto options = verify_options(ver_c, ver_cross);
      const auto pictures = read_all(ver_files, alphabet);
      if (ver_property.starts_with("member:")) {
        auto spec = parse_family_spec(ver_property.substr(7));
        if (!ver_c.suffix.empty()) spec.mode = mode_of(ver_c);
        return report_exit(out, verify_membership(pictures, spec), alphabet);
      }
      const PictureSet set(pictures);
      auto size = set.picture_size();
      if (!ver_size.empty()) {
        const auto given = parse_size(ver_size);
        if (size && *size != given) throw Error(ErrorCode::WrongSize, "--size disagrees with the pictures");
        size = given;
      }
      auto need_size = [&] {
        if (!size) throw Error(ErrorCode::InvalidArgument, "empty set: give the candidate size with --size MxN");
        return *size;
      };
      if (ver_property == "non-overlapping") return report_exit(out, verify_non_overlapping(set, options), alphabet);
      if (ver_property == "unbordered") return report_exit(out, verify_unbordered(set, options), alphabet);
      if (ver_property == "corner-lemma") return report_exit(out, check_corner_lemma(set, options), alphabet);
      if (ver_property == "frame-necessity") return report_exit(out, check_frame_necessity(set, options), alphabet);
      if (ver_property == "column-code") return report_exit(out, check_column_code(set, alphabet, options), alphabet);
      if (ver_property == "neno-naive") {
        const auto [m, n] = need_size();
        return report_exit(out, verify_neno_naive(set, m, n, alphabet, options), alphabet);
      }
      if (ver_property == "frame-complete") {
        const auto [m, n] = need_size();
        return report_exit(out, verify_frame_complete(set, m, n, alphabet, options), alphabet);
      }
      if (ver_property == "neno-layered") {
        if (ver_against.empty()) throw Error(ErrorCode::InvalidArgument, "neno-layered needs --against <X spec>");
        auto spec = parse_family_spec(ver_against);
        if (!ver_c.suffix.empty()) spec.mode = mode_of(ver_c);
        if (spec.family != Family::X || !spec.sized()) {
          throw Error(ErrorCode::InvalidArgument, "--against must be a sized X spec such as X:m=5,n=5");
        }
        EnumerateOptions eo;
        eo.work_limit = options.member_limit;
        const auto x = enumerate(spec, eo);
        return report_exit(out, verify_neno_layered(set, x, frame_languages(spec.m, spec.n, spec.mode), alphabet, options),
                           alphabet);
      }
      throw Error(ErrorCode::InvalidArgument, "unknown property '" + ver_property + "'");
    }

    if (*ov) {
      const Alphabet alphabet(ov_c.alphabet);
      const auto a = read_single(ov_a, alphabet);
      const auto b = read_single(ov_b, alphabet);
      const auto ws = find_overlaps(a, b);
      if (ws.empty()) {
        out << "none\n";
        return kExitFails;
      }
      for (const auto& w : ws) out << format_witness(w) << '\n';
      return kExitOk;
    }

    if (*cnt) {
      const auto a = audit_bounds(cnt_m, cnt_n, mode_of(cnt_c), enumerate_options(cnt_c));
      for (const auto& r : a.counts) out << format_count(r) << '\n';
      return kExitOk;
    }

    if (*aud) {
      write_audit(out, audit_bounds(aud_m, aud_n, mode_of(aud_c), enumerate_options(aud_c)));
      return kExitOk;
    }

    if (*rep) return repro_counterexample(out, rep_c.workers) ? kExitOk : kExitFails;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::WorkLimitExceeded ? kExitWorkLimit : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace neno
