#include "neno/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace neno {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<Symbol> parse_symbols(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    auto s = alphabet.find(c);
    if (!s) {
      throw Error(ErrorCode::WrongAlphabet,
                  std::string("symbol '") + c + "' not in alphabet \"" + alphabet.symbols() + "\"");
    }
    out.push_back(*s);
  }
  return out;
}

bool parse_index(std::string_view text, Index& value) {
  if (text.empty() || text.front() == '0') return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw Error(ErrorCode::EmptyValue, "words must be nonempty");
  const auto symbols = parse_symbols(text, alphabet);
  return Word(Eigen::Map<const Word::Storage>(symbols.data(), static_cast<Index>(symbols.size())));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (Index i = 0; i < w.size(); ++i) out.push_back(alphabet.symbol(w[i]));
  return out;
}

WordSet read_word_set(std::istream& in, const Alphabet& alphabet) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.push_back(parse_word(line, alphabet));
  }
  return WordSet(std::move(words));
}

Picture picture_from_rows(const std::vector<std::string>& rows, const Alphabet& alphabet) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::EmptyValue, "pictures must be nonempty");
  const auto m = static_cast<Index>(rows.size());
  const auto n = static_cast<Index>(rows.front().size());
  Picture::Storage cells(m, n);
  for (Index i = 0; i < m; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(r.size()) != n) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " has " + std::to_string(r.size()) +
                                             " symbols, expected " + std::to_string(n));
    }
    const auto symbols = parse_symbols(r, alphabet);
    for (Index j = 0; j < n; ++j) cells(i, j) = symbols[static_cast<std::size_t>(j)];
  }
  return Picture(std::move(cells));
}

std::string format_picture(const Picture& p, const Alphabet& alphabet) {
  std::string out = std::to_string(p.rows()) + " " + std::to_string(p.cols()) + "\n";
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) out.push_back(alphabet.symbol(p.array()(i, j)));
    out.push_back('\n');
  }
  return out;
}

std::vector<Picture> read_pictures(std::istream& in, const Alphabet& alphabet) {
  std::vector<Picture> out;
  std::string line;
  std::size_t line_no = 0;
  bool expect_separator = false;
  bool saw_blank = false;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  };
  while (next_line()) {
    if (line.empty()) {
      if (!expect_separator || saw_blank) parse_error(line_no, "unexpected blank line");
      saw_blank = true;
      continue;
    }
    if (expect_separator && !saw_blank) parse_error(line_no, "pictures must be separated by one blank line");
    const auto space = line.find(' ');
    Index m = 0;
    Index n = 0;
    if (space == std::string::npos || !parse_index(std::string_view(line).substr(0, space), m) ||
        !parse_index(std::string_view(line).substr(space + 1), n)) {
      parse_error(line_no, "expected header 'm n', got '" + line + "'");
    }
    std::vector<std::string> rows;
    for (Index i = 0; i < m; ++i) {
      if (!next_line()) parse_error(line_no, "file ends inside a picture");
      if (static_cast<Index>(line.size()) != n) {
        parse_error(line_no, "row has " + std::to_string(line.size()) + " symbols, expected " + std::to_string(n));
      }
      rows.push_back(line);
    }
    try {
      out.push_back(picture_from_rows(rows, alphabet));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::WrongAlphabet) throw;
      parse_error(line_no, e.what());
    }
    expect_separator = true;
    saw_blank = false;
  }
  return out;
}

std::vector<Picture> read_pictures(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_pictures(in, alphabet);
}

void write_pictures(std::ostream& out, const PictureSet& s, const Alphabet& alphabet) {
  PictureWriter writer(out, alphabet);
  for (const auto& p : s) writer.write(p);
  writer.finish();
}

PictureWriter::PictureWriter(std::ostream& out, Alphabet alphabet) : out_(out), alphabet_(std::move(alphabet)) {}

void PictureWriter::write(const Picture& p) {
  if (count_ > 0) out_ << '\n';
  out_ << format_picture(p, alphabet_);
  ++count_;
}

void PictureWriter::finish() { out_ << "# count=" << count_ << '\n'; }

std::string format_witness(const OverlapWitness& w) {
  std::string flags;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!flags.empty()) flags.push_back(',');
    flags += name;
  };
  add(w.flags.proper, "proper");
  add(w.flags.h_slide, "h_slide");
  add(w.flags.v_slide, "v_slide");
  add(w.flags.frame, "frame");
  if (flags.empty()) flags = "-";
  return std::string(to_string(w.kind)) + " " + to_string(w.orientation) + " " + std::to_string(w.h) + " " +
         std::to_string(w.k) + " " + flags;
}

OverlapWitness parse_witness(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind, orientation, h, k, flags, extra;
  if (!(in >> kind >> orientation >> h >> k >> flags) || (in >> extra)) {
    throw Error(ErrorCode::ParseError, "witness needs 'KIND ORIENT h k FLAGS', got '" + std::string(text) + "'");
  }
  OverlapWitness w;
  if (kind == "tl") {
    w.kind = OverlapKind::tl;
  } else if (kind == "bl") {
    w.kind = OverlapKind::bl;
  } else {
    throw Error(ErrorCode::ParseError, "unknown overlap kind '" + kind + "'");
  }
  if (orientation == "PQ") {
    w.orientation = Orientation::PQ;
  } else if (orientation == "QP") {
    w.orientation = Orientation::QP;
  } else {
    throw Error(ErrorCode::ParseError, "unknown orientation '" + orientation + "'");
  }
  if (!parse_index(h, w.h) || !parse_index(k, w.k)) {
    throw Error(ErrorCode::ParseError, "overlap size must be positive integers");
  }
  if (flags != "-") {
    std::istringstream list(flags);
    std::string flag;
    while (std::getline(list, flag, ',')) {
      if (flag == "proper") {
        w.flags.proper = true;
      } else if (flag == "h_slide") {
        w.flags.h_slide = true;
      } else if (flag == "v_slide") {
        w.flags.v_slide = true;
      } else if (flag == "frame") {
        w.flags.frame = true;
      } else {
        throw Error(ErrorCode::ParseError, "unknown overlap flag '" + flag + "'");
      }
    }
  }
  return w;
}

}  // namespace neno
