#include "origami/cylinders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

std::pair<long long, long long> Cylinder::inverse_modulus() const {
  long long g = std::gcd(circumference, height);
  return {circumference / g, height / g};
}

long long CylinderDecomposition::total_area() const {
  long long area = 0;
  for (const Cylinder& c : cylinders) area += c.circumference * c.height;
  return area;
}

std::vector<Cylinder> horizontal_cylinders(const PermOrigami& surface) {
  const int n = surface.squares;
  const Perm& r = surface.sigma_r;
  const Perm& u = surface.sigma_u;

  // rows = cycles of sigma_r
  std::vector<int> row_of(n, -1);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    if (row_of[i] >= 0) continue;
    std::vector<int> row;
    int j = i;
    while (row_of[j] < 0) {
      row_of[j] = static_cast<int>(rows.size());
      row.push_back(j);
      j = r(j);
    }
    rows.push_back(std::move(row));
  }

  // merge across singularity-free interfaces (union-find over rows)
  std::vector<int> parent(rows.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    bool free_interface = true;
    for (int t : rows[ri]) {
      if (u(r(t)) != r(u(t))) {
        free_interface = false;
        break;
      }
    }
    if (free_interface) {
      int above = row_of[u(rows[ri][0])];
      parent[find(static_cast<int>(ri))] = find(above);
    }
  }

  std::vector<Cylinder> out;
  std::vector<int> cyl_of(rows.size(), -1);
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    int root = find(static_cast<int>(ri));
    if (cyl_of[root] < 0) {
      cyl_of[root] = static_cast<int>(out.size());
      out.emplace_back();
      out.back().circumference = static_cast<long long>(rows[ri].size());
      out.back().height = 0;
    }
    Cylinder& c = out[cyl_of[root]];
    if (c.circumference != static_cast<long long>(rows[ri].size()))
      throw std::logic_error("rows of unequal length merged into one cylinder");
    c.height += 1;
    c.squares.insert(c.squares.end(), rows[ri].begin(), rows[ri].end());
  }
  return out;
}

namespace {

// smallest positive integer that is an integer multiple of every w/h
long long common_twist(const std::vector<Cylinder>& cylinders) {
  long long m = 1;
  for (const Cylinder& c : cylinders) {
    auto [num, den] = c.inverse_modulus();
    (void)den;
    m = std::lcm(m, num);
  }
  return m;
}

CylinderDecomposition decompose_with(const RegularOrigami& o, Sl2Word word,
                                     std::array<long long, 2> direction) {
  CylinderDecomposition d;
  d.direction = direction;
  d.direction_word = std::move(word);
  d.direction_matrix = word_to_matrix(d.direction_word);
  d.cylinders = horizontal_cylinders(cayley_origami(act_word(o, d.direction_word)));
  d.twist_exponent = common_twist(d.cylinders);
  d.parabolic_word =
      d.direction_word.inverse() * Sl2Word::t_power(d.twist_exponent) * d.direction_word;
  d.parabolic = d.direction_matrix.inverse() *
                Sl2Matrix{1, d.twist_exponent, 0, 1} * d.direction_matrix;
  return d;
}

}  // namespace

CylinderDecomposition cylinders_in_direction(const RegularOrigami& o, long long m) {
  if (m < 0) throw std::invalid_argument("direction parameter m must be >= 0");
  Sl2Word block = Sl2Word::parse("SSSTS");
  return decompose_with(o, block.pow(m), {1, -m});
}

CylinderDecomposition cylinders_in_vector_direction(const RegularOrigami& o,
                                                    long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("direction must be nonzero");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("direction must be primitive");
  // A = (p -t; q s) with p*s + q*t = 1 has det 1 and A*e1 = (p, q)
  long long s = 0, t = 0;
  {
    long long r0 = p, r1 = q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long k = r0 / r1;
      r0 -= k * r1; std::swap(r0, r1);
      s0 -= k * s1; std::swap(s0, s1);
      t0 -= k * t1; std::swap(t0, t1);
    }
    if (r0 == 1) { s = s0; t = t0; }
    else { s = -s0; t = -t0; }  // gcd reported as -1 for negative inputs
  }
  Sl2Matrix a{p, -t, q, s};
  return decompose_with(o, matrix_to_word(a), {p, q});
}

Sl2Matrix parabolic_element(const CylinderDecomposition& d) {
  long long m = common_twist(d.cylinders);
  return d.direction_matrix.inverse() * Sl2Matrix{1, m, 0, 1} * d.direction_matrix;
}

}  // namespace origami
