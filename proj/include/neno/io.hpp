#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "neno/overlap.hpp"
#include "neno/picture_set.hpp"
#include "neno/word_set.hpp"

namespace neno {

Word parse_word(std::string_view text, const Alphabet& alphabet = Alphabet::binary());
std::string format_word(const Word& w, const Alphabet& alphabet = Alphabet::binary());

/// One word per line; blank lines and '#' lines are skipped.
WordSet read_word_set(std::istream& in, const Alphabet& alphabet = Alphabet::binary());

/// Builds a picture from its rows, each given as symbol characters.
Picture picture_from_rows(const std::vector<std::string>& rows, const Alphabet& alphabet = Alphabet::binary());

/// "m n" header line, then m rows of n symbols, each newline-terminated.
std::string format_picture(const Picture& p, const Alphabet& alphabet = Alphabet::binary());

/// Reads a picture-set file: pictures separated by exactly one blank line,
/// '#' lines are comments. Order and duplicates are preserved.
std::vector<Picture> read_pictures(std::istream& in, const Alphabet& alphabet = Alphabet::binary());
std::vector<Picture> read_pictures(const std::filesystem::path& path, const Alphabet& alphabet = Alphabet::binary());

void write_pictures(std::ostream& out, const PictureSet& s, const Alphabet& alphabet = Alphabet::binary());

/// Streams pictures in the set-file format and closes with a `# count=N`
/// footer.
class PictureWriter {
 public:
  PictureWriter(std::ostream& out, Alphabet alphabet);

  void write(const Picture& p);
  void finish();
  std::size_t count() const noexcept { return count_; }

 private:
  std::ostream& out_;
  Alphabet alphabet_;
  std::size_t count_ = 0;
};

/// `KIND ORIENT h k FLAGS`, e.g. `tl PQ 2 3 proper,frame`; `-` for no flags.
std::string format_witness(const OverlapWitness& w);
OverlapWitness parse_witness(std::string_view text);

}  // namespace neno
