#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncfactor {

using LetterIndex = std::uint32_t;

/// Ordered, finite set of letter names x_1..x_d. Cheap to copy (shared storage).
class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty list, empty or duplicate names.
  explicit Alphabet(std::vector<std::string> letters);
  Alphabet(std::initializer_list<std::string> letters)
      : Alphabet(std::vector<std::string>(letters)) {}

  /// {x, y, z}
  static Alphabet default_xyz();

  std::size_t size() const { return letters_->size(); }
  const std::string& name(LetterIndex i) const { return (*letters_)[i]; }
  const std::vector<std::string>& letters() const { return *letters_; }
  std::optional<LetterIndex> index_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_ || *a.letters_ == *b.letters_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> letters_;
};

/// Element of the free monoid: a sequence of letter indices. The empty word is 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<LetterIndex> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<LetterIndex> letters) : letters_(letters) {}

  static Word letter(LetterIndex i) { return Word{i}; }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  LetterIndex operator[](std::size_t i) const { return letters_[i]; }
  std::span<const LetterIndex> letters() const { return letters_; }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;

  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  /// Length-lexicographic (deglex) order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<LetterIndex> letters_;
};

/// "1" for the empty word, otherwise letter names joined by '*'.
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace ncfactor
