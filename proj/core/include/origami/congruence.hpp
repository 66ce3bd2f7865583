#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origami/origami.hpp"
#include "origami/sl2.hpp"
#include "origami/veech.hpp"

namespace origami {

// Witness for one prime p in the totally-non-congruence criterion:
// matrices A1, A2 and exponents m1, m2 with
//   (1) A1*e1 and j*A2*e1 never congruent mod p for j = 1..p-1,
//   (2) p divides neither m1 nor m2,
//   (3) Ai * T^mi * Ai^-1 lies in the Veech group of the target origami.
struct TncgWitness {
  long long prime = 2;
  // proposition-1 | proposition-2 | abc-bc | abc-ac | abc-ab
  std::string case_tag;
  Sl2Matrix a1, a2;
  long long m1 = 1, m2 = 1;
  // proposition-2 only: the exponents r_i with A_i chosen for x*y^-r_i
  std::optional<std::array<long long, 2>> y_shifts;
};

// One witness per prime dividing |G|; every other prime is covered by the
// named uniform witness in residual_primes_note.
struct TncgCertificate {
  RegularOrigami origami;
  std::vector<TncgWitness> witnesses;
  std::string residual_primes_note;
};

// |SL(2, Z/nZ)| = n^3 * prod_{p | n} (1 - p^-2).
unsigned long long sl2_mod_n_order(unsigned long long n);

// Reduce the generators mod n and close under multiplication; true iff the
// image is all of SL(2, Z/nZ). Throws ResourceLimitError for n > max_n.
bool surjects_mod_n(const VeechGroup& v, unsigned long long n,
                    unsigned long long max_n = 60);

// Checks the witness conditions against the origami's Veech group
// (membership by acting; no orbit enumeration). Throws on non-prime p or a
// conjugator with determinant != 1.
bool verify_witness(const RegularOrigami& o, long long p, const Sl2Matrix& a1,
                     const Sl2Matrix& a2, long long m1, long long m2);

// Sufficient criterion on (G, x, y): for each prime p dividing |G| either
//   (1) gcd(p, ord(y) * ord(yx)) = 1, witnessed by the horizontal cylinders
//       of (G, yx, x^-1) and (G, y, (yx)^-1), or
//   (2) some r1 !≡ r2 (mod p) have gcd(p, ord(x y^-r1) * ord(x y^-r2)) = 1,
//       witnessed by the cylinders in directions (1, r_i).
// Every witness is self-verified before the certificate is emitted; absent
// means the criterion could not be established (never "is congruence").
std::optional<TncgCertificate> certify_by_proposition(const RegularOrigami& o);

// Certificate for the origami (G, y, x) built from an (a, b, c)-generating
// pair with a, b, c pairwise coprime. Throws OrderMismatchError /
// NotPairwiseCoprimeError / NotGeneratingError on bad input.
std::optional<TncgCertificate> certify_by_abc(std::shared_ptr<const PermGroup> g,
                                              const Perm& x, const Perm& y,
                                              long long a, long long b, long long c);

std::vector<long long> primes_dividing(unsigned long long n);

}  // namespace origami
