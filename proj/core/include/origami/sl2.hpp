#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

// Generators of SL(2,Z): S = (0 -1; 1 0), T = (1 1; 0 1).
enum class Sl2Letter : std::uint8_t { S, T, SInv, TInv };

Sl2Letter inverse(Sl2Letter l);
char letter_char(Sl2Letter l);  // 'S','T','s','t' (lowercase = inverse)

// Freely reduced word over {S, T, S^-1, T^-1}. Construction and
// concatenation cancel adjacent inverse pairs. The string form writes
// inverses in lowercase: "TSt" denotes T*S*T^-1.
class Sl2Word {
 public:
  Sl2Word() = default;
  explicit Sl2Word(std::vector<Sl2Letter> letters);

  static Sl2Word parse(std::string_view s);
  static Sl2Word letter(Sl2Letter l);
  static Sl2Word t_power(long long k);

  const std::vector<Sl2Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Sl2Word inverse() const;
  Sl2Word pow(long long k) const;
  std::string str() const;

  friend Sl2Word operator*(const Sl2Word& a, const Sl2Word& b);
  friend bool operator==(const Sl2Word&, const Sl2Word&) = default;

 private:
  void append(Sl2Letter l);
  std::vector<Sl2Letter> letters_;
};

// Element of SL(2,Z). The determinant invariant ad - bc = 1 is the caller's
// to establish on aggregate construction; all arithmetic here preserves it
// and throws Sl2OverflowError instead of wrapping around.
struct Sl2Matrix {
  long long a = 1, b = 0;
  long long c = 0, d = 1;

  static Sl2Matrix identity() { return {}; }
  long long det() const;
  Sl2Matrix inverse() const { return {d, -b, -c, a}; }
  bool operator==(const Sl2Matrix&) const = default;
  std::string str() const;
};

Sl2Matrix operator*(const Sl2Matrix& m, const Sl2Matrix& n);

Sl2Matrix letter_matrix(Sl2Letter l);

// Product of the letter matrices in word order: the first character of
// "TSt" contributes the leftmost factor.
Sl2Matrix word_to_matrix(const Sl2Word& w);

// Some freely reduced word evaluating to m (words are certificates, not
// canonical forms). Continued-fraction reduction on the first column.
// Requires det m = 1.
Sl2Word matrix_to_word(const Sl2Matrix& m);

// The SL(2,Z) action on regular origamis:
//   S*(G,x,y) = (G, y^-1, x)        T*(G,x,y) = (G, x, y*x^-1)
//   S^-1*(G,x,y) = (G, y, x^-1)     T^-1*(G,x,y) = (G, x, y*x)
RegularOrigami act_generator(const RegularOrigami& o, Sl2Letter l);

// Left action matching word_to_matrix: the rightmost letter acts first, so
// act_word(O, w1*w2) = act_word(act_word(O, w2), w1).
RegularOrigami act_word(const RegularOrigami& o, const Sl2Word& w);

}  // namespace origami
