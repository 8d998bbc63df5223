#include "gstark/util.hpp"

#include <algorithm>
#include <map>

namespace gstark {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

long isqrt(long n) { return isqrt(Int(n)).get_si(); }

bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(long n) { return is_prime(Int(n)); }

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, not a prime power of interest; Brent's variant
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345);
  while (true) {
    Int y = rng.get_z_range(n - 2) + 1;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x = y, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 0 && d != n && d > 1) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (n % p == 0) {
      out[Int(p)]++;
      factor_into(n / p, out);
      return;
    }
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(const Int& n) {
  Int m = abs(n);
  std::map<Int, int> acc;
  // strip small primes first
  for (long p = 2; p < 100000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > m) break;
    while (m % p == 0) {
      acc[Int(p)]++;
      m /= p;
    }
  }
  factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long smallest_prime_factor(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool is_fundamental_discriminant(long D) {
  if (D <= 1) return false;
  auto squarefree = [](long n) {
    for (long d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) return false;
    return true;
  };
  long r = D % 4;
  if (r == 1) return squarefree(D);
  if (r == 0) {
    long m = D / 4;
    long mr = m % 4;
    return squarefree(m) && (mr == 2 || mr == 3);
  }
  return false;
}

Int powmod(const Int& a, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int invmod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw domain_error("invmod: element not invertible");
  return r;
}

long valuation(const Int& n, const Int& p) {
  if (n == 0) throw domain_error("valuation of zero");
  Int m = n;
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Int rat_mod(const Rat& x, const Int& p, const Int& pk) {
  Int num = x.get_num(), den = x.get_den();
  if (den % p == 0) throw domain_error("rat_mod: negative valuation");
  Int r = (num % pk) * invmod(den % pk, pk) % pk;
  if (r < 0) r += pk;
  return r;
}

Int symmetric_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

Rat bernoulli(unsigned k) {
  static std::vector<Rat> cache;  // B_0, B_1, ...
  if (k < cache.size()) return cache[k];
  // B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  if (cache.empty()) cache.push_back(Rat(1));
  for (unsigned n = cache.size(); n <= k; ++n) {
    Rat s(0);
    Int binom(1);  // C(n+1, j) built incrementally
    for (unsigned j = 0; j < n; ++j) {
      s += Rat(binom) * cache[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    Rat b = -s / Rat(n + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[k];
}

}  // namespace gstark
