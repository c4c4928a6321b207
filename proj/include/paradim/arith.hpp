#pragma once

#include <vector>

#include "paradim/exactmath.hpp"

namespace paradim {

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
long squarefree_part(long d);  // keeps the sign of d
// Discriminant of Q(sqrt(d)); throws DSquare when d is a perfect square.
long fundamental_discriminant(long d);

// (d/p): 1 split, -1 inert, 0 ramified in Q(sqrt(d)).
int split_symbol(long d, long p);
// Kronecker symbol (D/n) for n >= 1.
int kronecker(long D, long n);

// Class number of Q(sqrt(-d)) by counting reduced forms; d squarefree.
long class_number(long d);
// B_{2,chi} for the character of Q(sqrt(p)), p prime > 3.
Rational bernoulli_b2_chi(long p);
// 1 if p = 1 mod 4, 2 if p = 7 mod 8, 4 if p = 3 mod 8.
int a_p(long p);

inline int delta(long a, long b) { return a == b ? 1 : 0; }
// Least nonnegative residue.
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace paradim
