#ifndef LAWS_WORD_HPP
#define LAWS_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laws/common.hpp"

namespace laws {

inline constexpr int kMaxRank = 4;

// One letter of a free-group word: a generator or its inverse, packed into a
// single byte (index * 2 + negative bit).  The alphabet is a,b,c,d with
// inverses printed A,B,C,D.
struct Generator {
  std::uint8_t code = 0;

  static Generator make(int index, int sign);
  int index() const { return code >> 1; }
  int sign() const { return (code & 1) ? -1 : +1; }
  Generator inverse() const { return Generator{static_cast<std::uint8_t>(code ^ 1)}; }
  auto operator<=>(const Generator&) const = default;
};

using Letters = std::vector<Generator>;

// A freely reduced word over generators a..d, together with its declared
// alphabet rank (2..4).  All constructors reduce; the invariant that no
// letter is adjacent to its inverse always holds.
class Word {
 public:
  Word() : rank_(2) {}
  explicit Word(int rank);

  static Word from_letters(const Letters& raw, int rank);

  const Letters& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int rank() const { return rank_; }

  // Returns a copy declared over a (possibly larger) alphabet.
  Word with_rank(int rank) const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

 private:
  friend Word reduce(const Letters&, int);
  Letters letters_;
  int rank_;
};

Word reduce(const Letters& raw, int rank = 2);
Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, std::uint64_t e);
Word commutator(const Word& u, const Word& v);

// If every letter of the nonempty word uses one generator index, returns it.
std::optional<int> is_generator_power(const Word& w);

// Text format: lowercase a..d are generators, uppercase A..D their inverses.
Word parse_word(std::string_view text, int rank = 0);  // rank 0: infer
std::string to_string(const Word& w);

}  // namespace laws

#endif
