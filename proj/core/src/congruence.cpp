#include "origami/congruence.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "origami/errors.hpp"

namespace origami {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// conjugate A * T^m * A^-1
Sl2Matrix twist_conjugate(const Sl2Matrix& a, long long m) {
  return a * Sl2Matrix{1, m, 0, 1} * a.inverse();
}

const Sl2Matrix kTS{1, -1, 1, 0};       // (S^-1 T^-1)^-1
const Sl2Matrix kSTInv{0, -1, 1, -1};   // (T S^-1)^-1
const Sl2Matrix kS{0, -1, 1, 0};        // (S^-1)^-1

}  // namespace

std::vector<long long> primes_dividing(unsigned long long n) {
  std::vector<long long> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<long long>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<long long>(n));
  return out;
}

unsigned long long sl2_mod_n_order(unsigned long long n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  unsigned long long order = n * n * n;
  for (long long p : primes_dividing(n)) {
    unsigned long long pp = static_cast<unsigned long long>(p) * p;
    order = order / pp * (pp - 1);
  }
  return order;
}

bool surjects_mod_n(const VeechGroup& v, unsigned long long n,
                    unsigned long long max_n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return true;
  if (n > max_n)
    throw ResourceLimitError("surjectivity check capped at n <= " +
                             std::to_string(max_n));

  const long long nn = static_cast<long long>(n);
  auto reduce = [nn](long long x) {
    return static_cast<unsigned long long>((x % nn + nn) % nn);
  };
  auto key = [n](std::array<unsigned long long, 4> m) {
    return ((m[0] * n + m[1]) * n + m[2]) * n + m[3];
  };

  std::vector<std::array<unsigned long long, 4>> gens;
  for (const Sl2Matrix& g : v.generator_matrices)
    gens.push_back({reduce(g.a), reduce(g.b), reduce(g.c), reduce(g.d)});

  const unsigned long long target = sl2_mod_n_order(n);
  std::array<unsigned long long, 4> id{1, 0, 0, 1};
  std::unordered_set<unsigned long long> seen{key(id)};
  std::vector<std::array<unsigned long long, 4>> frontier{id};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto m = frontier[i];
    for (const auto& g : gens) {
      std::array<unsigned long long, 4> h{
          (m[0] * g[0] + m[1] * g[2]) % n, (m[0] * g[1] + m[1] * g[3]) % n,
          (m[2] * g[0] + m[3] * g[2]) % n, (m[2] * g[1] + m[3] * g[3]) % n};
      if (seen.insert(key(h)).second) {
        if (seen.size() == target) return true;
        frontier.push_back(h);
      }
    }
  }
  return seen.size() == target;
}

bool verify_witness(const RegularOrigami& o, long long p, const Sl2Matrix& a1,
                     const Sl2Matrix& a2, long long m1, long long m2) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a1.det() != 1 || a2.det() != 1)
    throw std::invalid_argument("conjugators must have determinant 1");

  // (1): A1*e1 != j * A2*e1 mod p for all j. The first columns are
  // primitive vectors, never 0 mod p, so j ranges over 1..p-1.
  long long u0 = ((a1.a % p) + p) % p, u1 = ((a1.c % p) + p) % p;
  long long v0 = ((a2.a % p) + p) % p, v1 = ((a2.c % p) + p) % p;
  for (long long j = 1; j < p; ++j)
    if (u0 == j * v0 % p && u1 == j * v1 % p) return false;

  // (2): p divides neither exponent
  if (m1 % p == 0 || m2 % p == 0) return false;

  // (3): both conjugated twists stabilize the origami
  return contains(o, twist_conjugate(a1, m1)) &&
         contains(o, twist_conjugate(a2, m2));
}

namespace {

std::optional<TncgWitness> proposition_witness(const RegularOrigami& o, long long p) {
  const long long ord_y = o.y.order();
  const long long ord_yx = (o.y * o.x).order();

  // condition (1): gcd(p, ord(y) * ord(yx)) = 1
  if (ord_y % p != 0 && ord_yx % p != 0) {
    TncgWitness w;
    w.prime = p;
    w.case_tag = "proposition-1";
    w.a1 = kTS;      // (S^-1 T^-1) * O = (G, yx, x^-1) has inverse modulus ord(yx)
    w.m1 = ord_yx;
    w.a2 = kSTInv;   // (T S^-1) * O = (G, y, (yx)^-1) has inverse modulus ord(y)
    w.m2 = ord_y;
    if (verify_witness(o, p, w.a1, w.a2, w.m1, w.m2)) return w;
  }

  // condition (2): exponents r with x*y^-r of order coprime to p. The order
  // of x*y^-r only depends on r mod ord(y); the range p*ord(y) exhausts all
  // combinations of (r mod p, r mod ord(y)).
  std::vector<long long> twist(ord_y);
  Perm ypow = Perm::identity(o.y.degree());
  const Perm yinv = o.y.inverse();
  for (long long r = 0; r < ord_y; ++r) {
    twist[r] = (o.x * ypow).order();
    ypow = ypow * yinv;
  }
  const long long bound = p * ord_y;
  for (long long r1 = 0; r1 < bound; ++r1) {
    if (twist[r1 % ord_y] % p == 0) continue;
    for (long long r2 = 0; r2 < bound; ++r2) {
      if (r1 % p == r2 % p) continue;
      if (twist[r2 % ord_y] % p == 0) continue;
      TncgWitness w;
      w.prime = p;
      w.case_tag = "proposition-2";
      // (S^3 T S)^-r * O = (G, x*y^-r, y); the conjugator below is the
      // inverse of that word's matrix (1 0; r 1)
      w.a1 = Sl2Matrix{1, 0, -r1, 1};
      w.m1 = twist[r1 % ord_y];
      w.a2 = Sl2Matrix{1, 0, -r2, 1};
      w.m2 = twist[r2 % ord_y];
      w.y_shifts = {{r1, r2}};
      if (verify_witness(o, p, w.a1, w.a2, w.m1, w.m2)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TncgCertificate> certify_by_proposition(const RegularOrigami& o) {
  TncgCertificate cert;
  cert.origami = o;
  cert.residual_primes_note = "proposition-1-uniform";
  for (long long p : primes_dividing(o.group->order())) {
    auto w = proposition_witness(o, p);
    if (!w) return std::nullopt;
    cert.witnesses.push_back(std::move(*w));
  }
  return cert;
}

std::optional<TncgCertificate> certify_by_abc(std::shared_ptr<const PermGroup> g,
                                              const Perm& x, const Perm& y,
                                              long long a, long long b, long long c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("orders must be positive");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
    throw NotPairwiseCoprimeError("a, b, c must be pairwise coprime");
  if (x.order() != a || y.order() != b || (x * y).order() != c)
    throw OrderMismatchError("(ord(x), ord(y), ord(xy)) does not match (a, b, c)");

  // the criterion applies to the origami (G, y, x)
  RegularOrigami om = make_regular_origami(std::move(g), y, x);

  TncgCertificate cert;
  cert.origami = om;
  cert.residual_primes_note = "abc-bc-uniform";
  for (long long p : primes_dividing(om.group->order())) {
    TncgWitness w;
    w.prime = p;
    if (b % p != 0 && c % p != 0) {
      w.case_tag = "abc-bc";
      w.a1 = Sl2Matrix::identity();  // horizontal cylinders of O itself: ord(y) = b
      w.m1 = b;
      w.a2 = kTS;                    // (S^-1 T^-1) * O = (G, xy, y^-1): ord(xy) = c
      w.m2 = c;
    } else if (a % p != 0 && c % p != 0) {
      w.case_tag = "abc-ac";
      w.a1 = kTS;
      w.m1 = c;
      w.a2 = kSTInv;                 // (T S^-1) * O = (G, x, (xy)^-1): ord(x) = a
      w.m2 = a;
    } else if (a % p != 0 && b % p != 0) {
      w.case_tag = "abc-ab";
      w.a1 = Sl2Matrix::identity();
      w.m1 = b;
      w.a2 = kS;                     // S^-1 * O = (G, x, y^-1): ord(x) = a
      w.m2 = a;
    } else {
      return std::nullopt;  // unreachable for pairwise coprime a, b, c
    }
    if (!verify_witness(om, p, w.a1, w.a2, w.m1, w.m2)) return std::nullopt;
    cert.witnesses.push_back(std::move(w));
  }
  return cert;
}

}  // namespace origami
