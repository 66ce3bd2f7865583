#include "origami/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "origami/errors.hpp"

namespace origami {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("cycles are not disjoint");
      used[from] = 1;
      p.images_[from] = to;
    }
  }
  return Perm(std::move(p.images_));  // re-validate bijectivity
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::pow(long long e) const {
  Perm base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-(e + 1)) + 1;
  Perm acc = identity(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

long long Perm::order() const {
  long long ord = 1;
  for (int len : cycle_lengths()) ord = std::lcm(ord, static_cast<long long>(len));
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
      j = images_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_lengths() const {
  std::vector<int> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      j = images_[j];
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("cannot compose permutations of degrees " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  Perm r;
  r = Perm(std::move(img));
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image table
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace origami
