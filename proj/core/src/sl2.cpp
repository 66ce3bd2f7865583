#include "origami/sl2.hpp"

#include <cstdlib>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

Sl2Letter inverse(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::S: return Sl2Letter::SInv;
    case Sl2Letter::T: return Sl2Letter::TInv;
    case Sl2Letter::SInv: return Sl2Letter::S;
    case Sl2Letter::TInv: return Sl2Letter::T;
  }
  throw std::logic_error("bad letter");
}

char letter_char(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::S: return 'S';
    case Sl2Letter::T: return 'T';
    case Sl2Letter::SInv: return 's';
    case Sl2Letter::TInv: return 't';
  }
  throw std::logic_error("bad letter");
}

Sl2Word::Sl2Word(std::vector<Sl2Letter> letters) {
  letters_.reserve(letters.size());
  for (Sl2Letter l : letters) append(l);
}

void Sl2Word::append(Sl2Letter l) {
  if (!letters_.empty() && letters_.back() == origami::inverse(l))
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Sl2Word Sl2Word::parse(std::string_view s) {
  Sl2Word w;
  for (char ch : s) {
    switch (ch) {
      case 'S': w.append(Sl2Letter::S); break;
      case 'T': w.append(Sl2Letter::T); break;
      case 's': w.append(Sl2Letter::SInv); break;
      case 't': w.append(Sl2Letter::TInv); break;
      case ' ': break;
      default: throw std::invalid_argument(std::string("bad word character '") + ch + "'");
    }
  }
  return w;
}

Sl2Word Sl2Word::letter(Sl2Letter l) {
  Sl2Word w;
  w.letters_.push_back(l);
  return w;
}

Sl2Word Sl2Word::t_power(long long k) {
  Sl2Word w;
  Sl2Letter l = k >= 0 ? Sl2Letter::T : Sl2Letter::TInv;
  long long n = k >= 0 ? k : -k;
  w.letters_.assign(static_cast<std::size_t>(n), l);
  return w;
}

Sl2Word Sl2Word::inverse() const {
  Sl2Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(origami::inverse(*it));
  return w;
}

Sl2Word Sl2Word::pow(long long k) const {
  Sl2Word base = k >= 0 ? *this : inverse();
  Sl2Word acc;
  for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) acc = acc * base;
  return acc;
}

std::string Sl2Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Sl2Letter l : letters_) s.push_back(letter_char(l));
  return s;
}

Sl2Word operator*(const Sl2Word& a, const Sl2Word& b) {
  Sl2Word w = a;
  for (Sl2Letter l : b.letters_) w.append(l);
  return w;
}

namespace {

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r))
    throw Sl2OverflowError("matrix entry overflow in addition");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r))
    throw Sl2OverflowError("matrix entry overflow in multiplication");
  return r;
}

}  // namespace

long long Sl2Matrix::det() const {
  return checked_add(checked_mul(a, d), -checked_mul(b, c));
}

std::string Sl2Matrix::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

Sl2Matrix operator*(const Sl2Matrix& m, const Sl2Matrix& n) {
  return {checked_add(checked_mul(m.a, n.a), checked_mul(m.b, n.c)),
          checked_add(checked_mul(m.a, n.b), checked_mul(m.b, n.d)),
          checked_add(checked_mul(m.c, n.a), checked_mul(m.d, n.c)),
          checked_add(checked_mul(m.c, n.b), checked_mul(m.d, n.d))};
}

Sl2Matrix letter_matrix(Sl2Letter l) {
  switch (l) {
    case Sl2Letter::S: return {0, -1, 1, 0};
    case Sl2Letter::T: return {1, 1, 0, 1};
    case Sl2Letter::SInv: return {0, 1, -1, 0};
    case Sl2Letter::TInv: return {1, -1, 0, 1};
  }
  throw std::logic_error("bad letter");
}

Sl2Matrix word_to_matrix(const Sl2Word& w) {
  Sl2Matrix m = Sl2Matrix::identity();
  for (Sl2Letter l : w.letters()) m = m * letter_matrix(l);
  return m;
}

Sl2Word matrix_to_word(const Sl2Matrix& m) {
  if (m.det() != 1) throw std::invalid_argument("matrix_to_word requires det 1");

  // Reduce m to the identity by left multiplications with T^k and S, and
  // collect the inverse letters: if L_k * ... * L_1 * m = I then
  // m = L_1^-1 * ... * L_k^-1.
  std::vector<Sl2Letter> applied;  // L_1, L_2, ... in application order
  Sl2Matrix cur = m;
  auto apply_t = [&](long long k) {  // cur <- T^k * cur
    cur = {checked_add(cur.a, checked_mul(k, cur.c)),
           checked_add(cur.b, checked_mul(k, cur.d)), cur.c, cur.d};
    Sl2Letter l = k >= 0 ? Sl2Letter::T : Sl2Letter::TInv;
    for (long long i = 0, n = std::llabs(k); i < n; ++i) applied.push_back(l);
  };
  auto apply_s = [&]() {  // cur <- S * cur
    cur = {-cur.c, -cur.d, cur.a, cur.b};
    applied.push_back(Sl2Letter::S);
  };

  while (cur.c != 0) {
    // bring |a| below |c| (nearest-integer division), then swap rows
    long long q = cur.a / cur.c;
    long long r = cur.a - q * cur.c;
    if (std::llabs(r) * 2 > std::llabs(cur.c)) q += (cur.c > 0) == (r > 0) ? 1 : -1;
    if (q != 0) apply_t(-q);
    apply_s();
  }
  // now cur = (e b'; 0 e) with e = +-1
  if (cur.a == 1) {
    if (cur.b != 0) apply_t(-cur.b);
  } else {
    // -I = S^2
    if (cur.b != 0) apply_t(cur.b);
    apply_s();
    apply_s();
  }

  std::vector<Sl2Letter> word;
  word.reserve(applied.size());
  for (Sl2Letter l : applied) word.push_back(inverse(l));
  // Sl2Word construction performs the free reduction
  return Sl2Word(std::move(word));
}

RegularOrigami act_generator(const RegularOrigami& o, Sl2Letter l) {
  switch (l) {
    case Sl2Letter::S: return {o.group, o.y.inverse(), o.x};
    case Sl2Letter::T: return {o.group, o.x, o.y * o.x.inverse()};
    case Sl2Letter::SInv: return {o.group, o.y, o.x.inverse()};
    case Sl2Letter::TInv: return {o.group, o.x, o.y * o.x};
  }
  throw std::logic_error("bad letter");
}

RegularOrigami act_word(const RegularOrigami& o, const Sl2Word& w) {
  RegularOrigami cur = o;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) cur = act_generator(cur, *it);
  return cur;
}

}  // namespace origami
