#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncfactor/word.hpp"

namespace ncfactor {

Alphabet::Alphabet(std::vector<std::string> letters) {
  if (letters.empty()) throw std::invalid_argument("alphabet must have at least one letter");
  std::set<std::string> seen;
  for (const auto& l : letters) {
    if (l.empty()) throw std::invalid_argument("alphabet letter names must be non-empty");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate alphabet letter '" + l + "'");
  }
  letters_ = std::make_shared<const std::vector<std::string>>(std::move(letters));
}

Alphabet Alphabet::default_xyz() {
  static const Alphabet xyz{"x", "y", "z"};
  return xyz;
}

std::optional<LetterIndex> Alphabet::index_of(std::string_view name) const {
  const auto it = std::find(letters_->begin(), letters_->end(), name);
  if (it == letters_->end()) return std::nullopt;
  return static_cast<LetterIndex>(it - letters_->begin());
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<LetterIndex>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix_from(std::size_t pos) const {
  return Word(std::vector<LetterIndex>(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.end()));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<LetterIndex> out;
  out.reserve(a.length() + b.length());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() <=> b.length();
  return a.letters_ <=> b.letters_;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '*';
    out += alphabet.name(w[i]);
  }
  return out;
}

}  // namespace ncfactor
