#include "laws/word.hpp"

#include <algorithm>

namespace laws {

Generator Generator::make(int index, int sign) {
  if (index < 0 || index >= kMaxRank)
    throw error("generator index out of range");
  if (sign != 1 && sign != -1) throw error("generator sign must be +1 or -1");
  return Generator{static_cast<std::uint8_t>(index * 2 + (sign < 0 ? 1 : 0))};
}

Word::Word(int rank) : rank_(rank) {
  if (rank < 2 || rank > kMaxRank) throw error("word rank must be in 2..4");
}

Word Word::from_letters(const Letters& raw, int rank) { return reduce(raw, rank); }

Word Word::with_rank(int rank) const {
  Word w(rank);
  for (const Generator& g : letters_)
    if (g.index() >= rank) throw error("letter index exceeds requested rank");
  w.letters_ = letters_;
  return w;
}

Word reduce(const Letters& raw, int rank) {
  Word w(rank);
  Letters& out = w.letters_;
  out.reserve(raw.size());
  for (const Generator& g : raw) {
    if (g.index() >= rank) throw error("letter index exceeds word rank");
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
  return w;
}

namespace {

int common_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw error("word rank mismatch");
  return u.rank();
}

// Appends a reduced word to a reduced prefix, cancelling across the seam.
void append_reduced(Letters& out, const Letters& tail) {
  for (const Generator& g : tail) {
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
}

}  // namespace

Word concat(const Word& u, const Word& v) {
  int rank = common_rank(u, v);
  Letters out = u.letters();
  out.reserve(u.length() + v.length());
  append_reduced(out, v.letters());
  return reduce(out, rank);
}

Word inverse(const Word& w) {
  Letters out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return reduce(out, w.rank());
}

Word power(const Word& w, std::uint64_t e) {
  // Square-and-multiply on words; each partial product is reduced, so the
  // cost is linear in the output length, not in e * |w|.
  Word acc(w.rank());
  Word base = w;
  while (e > 0) {
    if (e & 1) acc = concat(acc, base);
    e >>= 1;
    if (e > 0) base = concat(base, base);
  }
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

std::optional<int> is_generator_power(const Word& w) {
  if (w.empty()) throw error("is_generator_power requires a nonempty word");
  int idx = w.letters().front().index();
  for (const Generator& g : w.letters())
    if (g.index() != idx) return std::nullopt;
  return idx;
}

Word parse_word(std::string_view text, int rank) {
  Letters out;
  int max_index = -1;
  for (char c : text) {
    int index;
    int sign;
    if (c >= 'a' && c <= 'd') {
      index = c - 'a';
      sign = +1;
    } else if (c >= 'A' && c <= 'D') {
      index = c - 'A';
      sign = -1;
    } else {
      throw parse_error(std::string("invalid word character '") + c + "'");
    }
    max_index = std::max(max_index, index);
    out.push_back(Generator::make(index, sign));
  }
  if (rank == 0) rank = std::max(2, max_index + 1);
  return reduce(out, rank);
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.length());
  for (const Generator& g : w.letters())
    s.push_back(static_cast<char>((g.sign() > 0 ? 'a' : 'A') + g.index()));
  return s;
}

}  // namespace laws
