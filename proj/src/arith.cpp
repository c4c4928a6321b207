#include "paradim/arith.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace paradim {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

long squarefree_part(long d) {
  if (d == 0) throw std::invalid_argument("squarefree part of 0");
  long s = d < 0 ? -1 : 1;
  long n = std::labs(d);
  for (long q = 2; q * q <= n; ++q)
    while (n % (q * q) == 0) n /= q * q;
  return s * n;
}

long fundamental_discriminant(long d) {
  long s = squarefree_part(d);
  if (s == 1) throw DSquare(std::to_string(d) + " is a perfect square");
  return mod(s, 4) == 1 ? s : 4 * s;
}

int kronecker(long D, long n) {
  if (n < 1) throw std::invalid_argument("kronecker modulus must be positive");
  return mpz_kronecker_si(Integer(D).get_mpz_t(), n);
}

int split_symbol(long d, long p) {
  if (d == 0) throw std::invalid_argument("split symbol of 0");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return kronecker(fundamental_discriminant(d), p);
}

namespace {

template <class K, class V, class F>
V memo(std::map<K, V>& cache, std::mutex& mu, const K& key, F compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  V v = compute();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

long count_reduced_forms(long D) {
  // |B| <= A <= C, B^2 - 4AC = D, primitive, B >= 0 on the boundary
  long n = 0;
  const long absD = -D;
  for (long A = 1; 3 * A * A <= absD; ++A) {
    for (long B = -A + 1; B <= A; ++B) {
      long num = B * B - D;
      if (num % (4 * A) != 0) continue;
      long C = num / (4 * A);
      if (C < A) continue;
      if (C == A && B < 0) continue;
      if (std::gcd(std::gcd(A, std::labs(B)), C) != 1) continue;
      ++n;
    }
  }
  return n;
}

}  // namespace

long class_number(long d) {
  if (d < 1) throw std::invalid_argument("class number needs d >= 1");
  if (squarefree_part(d) != d) throw NotSquarefree(std::to_string(d));
  static std::map<long, long> cache;
  static std::mutex mu;
  return memo(cache, mu, d, [d] { return count_reduced_forms(fundamental_discriminant(-d)); });
}

Rational bernoulli_b2_chi(long p) {
  if (p == 2 || p == 3) throw UnsupportedPrime("B_{2,chi} is consumed only for p > 3");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  static std::map<long, Rational> cache;
  static std::mutex mu;
  return memo(cache, mu, p, [p] {
    const long D = fundamental_discriminant(p);
    const long f = std::labs(D);
    Integer s1 = 0, s2 = 0;
    const Integer Dz(D);
    for (long a = 1; a <= f; ++a) {
      int c = mpz_kronecker_si(Dz.get_mpz_t(), a);
      if (c == 0) continue;
      s1 += c * (Integer(a) * a);
      s2 += c * a;
    }
    return Rational(make_rational(s1, f) - Rational(s2));
  });
}

int a_p(long p) {
  if (p == 2) throw UnsupportedPrime("a_p is defined for odd p");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (mod(p, 4) == 1) return 1;
  return mod(p, 8) == 7 ? 2 : 4;
}

}  // namespace paradim
