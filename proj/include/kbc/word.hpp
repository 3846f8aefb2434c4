#pragma once

// Exact word arithmetic in the rank-2 free group <a, b>: free and cyclic
// reduction, inversion, conjugation, exponent sums, and canonical forms
// for conjugacy classes. Everything here is a plain value; all operations
// are pure, so words can be shared freely across threads.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kbc {

// Letters of the free group. The numeric order a < a^-1 < b < b^-1 is the
// order used for canonical rotations; changing it would change every
// canonical form, so it is fixed here once.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

constexpr char generator_char(Letter l) noexcept {
  return static_cast<std::uint8_t>(l) < 2 ? 'a' : 'b';
}

constexpr int sign_of(Letter l) noexcept {
  return (static_cast<std::uint8_t>(l) & 1u) ? -1 : +1;
}

constexpr Letter make_letter(char gen, int sign) {
  if ((gen != 'a' && gen != 'b') || (sign != 1 && sign != -1))
    throw std::invalid_argument("make_letter: generator must be 'a' or 'b', sign +-1");
  return static_cast<Letter>((gen == 'b' ? 2 : 0) | (sign < 0 ? 1 : 0));
}

namespace detail {

inline std::vector<Letter> free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline bool is_freely_reduced(std::span<const Letter> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == inverse(seq[i - 1])) return false;
  return true;
}

// Least rotation under the fixed letter order; seq must be cyclically reduced.
inline std::vector<Letter> least_rotation(std::vector<Letter> seq) {
  if (seq.size() <= 1) return seq;
  std::vector<Letter> best = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

}  // namespace detail

// A freely reduced word. Instances are only created through reduce() and
// the group operations below, so the no-adjacent-cancellation invariant
// always holds. The empty word is the identity.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  friend Word reduce(std::span<const Letter> raw);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence. Idempotent.
inline Word reduce(std::span<const Letter> raw) {
  return Word(detail::free_reduce(raw));
}

inline Word reduce(const std::vector<Letter>& raw) {
  return reduce(std::span<const Letter>(raw));
}

inline Word word_from(std::initializer_list<Letter> raw) {
  return reduce(std::span<const Letter>(raw.begin(), raw.size()));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(inverse(*it));
  return reduce(out);  // already reduced, but reduce() is the only entry point
}

inline Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return reduce(out);
}

// g w g^-1, freely reduced.
inline Word conjugate(const Word& g, const Word& w) {
  return concat(concat(g, w), invert(g));
}

inline Word power(const Word& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long reps = k < 0 ? -k : k;
  Word acc;
  for (long long i = 0; i < reps; ++i) acc = concat(acc, base);
  return acc;
}

// Signed a- and b-letter counts. A homomorphism onto Z^2, invariant under
// conjugation and cyclic rotation.
struct ExponentPair {
  long long e_a = 0;
  long long e_b = 0;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  friend ExponentPair operator+(const ExponentPair& x, const ExponentPair& y) {
    return {x.e_a + y.e_a, x.e_b + y.e_b};
  }
};

inline ExponentPair exponent_sums(const Word& w) {
  ExponentPair e;
  for (Letter l : w.letters())
    (generator_char(l) == 'a' ? e.e_a : e.e_b) += sign_of(l);
  return e;
}

// Canonical representative of a conjugacy class: cyclically reduced and
// rotated to the lexicographically least position under a < a^-1 < b < b^-1.
// Equality of CyclicWords is therefore plain structural equality.
class CyclicWord {
 public:
  CyclicWord() = default;

  // `seq` must already be cyclically reduced; only the rotation is chosen here.
  static CyclicWord canonical(std::vector<Letter> seq) {
    if (!detail::is_freely_reduced(seq) ||
        (seq.size() >= 2 && seq.front() == inverse(seq.back())))
      throw std::invalid_argument("CyclicWord::canonical: sequence is not cyclically reduced");
    return CyclicWord(detail::least_rotation(std::move(seq)));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word as_word() const { return reduce(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> canonical_letters)
      : letters_(std::move(canonical_letters)) {}
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

// Conjugacy normal form: strips inverse first/last pairs, then rotates the
// remaining cyclically reduced core to its canonical position. The returned
// conjugator makes the decomposition an exact identity in the free group.
inline CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> mid(w.letters());
  std::vector<Letter> conj;
  while (mid.size() >= 2 && mid.front() == inverse(mid.back())) {
    conj.push_back(mid.front());
    mid.erase(mid.begin());
    mid.pop_back();
  }
  // Locate the canonical rotation and fold the rotation offset into the
  // conjugator: if core = x.y and canonical = y.x then core = x.canonical.x^-1.
  std::vector<Letter> canon = detail::least_rotation(mid);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < mid.size(); ++i) {
    std::vector<Letter> rot(mid.begin() + i, mid.end());
    rot.insert(rot.end(), mid.begin(), mid.begin() + i);
    if (rot == canon) {
      offset = i;
      break;
    }
  }
  conj.insert(conj.end(), mid.begin(), mid.begin() + offset);
  return {CyclicWord::canonical(std::move(canon)), reduce(conj)};
}

inline bool cyclic_equal(const CyclicWord& x, const CyclicWord& y) {
  return x == y;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Exponents larger than this are rejected: words are stored letter by
// letter, so the bound keeps expansions finite.
inline constexpr long long kMaxParseExponent = 1'000'000;

// Grammar: word := term*, term := letter ('^' '-'? digits)?, letters a b A B
// (uppercase = inverse), whitespace between terms ignored. "a^-1" == "A",
// "a^0" is the empty term.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Letter l;
    switch (c) {
      case 'a': l = Letter::a; break;
      case 'A': l = Letter::A; break;
      case 'b': l = Letter::b; break;
      case 'B': l = Letter::B; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t caret = i;
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("expected digits after '^'", caret);
      exp = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        exp = exp * 10 + (text[i] - '0');
        if (exp > kMaxParseExponent)
          throw ParseError("exponent exceeds bound " + std::to_string(kMaxParseExponent), caret);
        ++i;
      }
      if (neg) exp = -exp;
    }
    Letter eff = exp < 0 ? inverse(l) : l;
    long long reps = exp < 0 ? -exp : exp;
    for (long long r = 0; r < reps; ++r) raw.push_back(eff);
  }
  return reduce(raw);
}

namespace detail {

inline std::string format_letters(std::span<const Letter> seq) {
  if (seq.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < seq.size()) {
    std::size_t j = i;
    while (j < seq.size() && seq[j] == seq[i]) ++j;
    std::size_t run = j - i;
    out += generator_char(seq[i]);
    if (sign_of(seq[i]) < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace detail

// Run-length text form: "ab^3ab^3", "ab^-1a^-1b^-1"; the empty word is "1".
inline std::string to_string(const Word& w) {
  return detail::format_letters(w.letters());
}

inline std::string to_string(const CyclicWord& w) {
  return detail::format_letters(w.letters());
}

}  // namespace kbc
