#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstark {

using Int = mpz_class;
using Rat = mpq_class;

// floor(sqrt(n)) for n >= 0
Int isqrt(const Int& n);
long isqrt(long n);

bool is_square(const Int& n);

// Kronecker symbol (a|n), full generality including n even or negative.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

bool is_prime(const Int& n);
bool is_prime(long n);

// prime factorisation of |n| as (prime, exponent) pairs, trial division +
// Pollard rho for the cofactor
std::vector<std::pair<Int, int>> factor(const Int& n);

std::vector<long> divisors(long n);
long smallest_prime_factor(long n);

// true iff D is a fundamental discriminant of a real quadratic field (D > 1)
bool is_fundamental_discriminant(long D);

// a^e mod m, e >= 0
Int powmod(const Int& a, const Int& e, const Int& m);

// inverse of a modulo m; throws if gcd(a, m) != 1
Int invmod(const Int& a, const Int& m);

// v_p(n) for n != 0
long valuation(const Int& n, const Int& p);

// reduce a rational with v_p(x) >= 0 modulo p^k; throws on p in denominator
Int rat_mod(const Rat& x, const Int& p, const Int& pk);

// symmetric representative in (-m/2, m/2]
Int symmetric_mod(const Int& a, const Int& m);

// Bernoulli number B_k (even k <= 30 is all we ever need; computed by the
// standard recurrence, cached)
Rat bernoulli(unsigned k);

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& w) : std::runtime_error(w) {}
};
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace gstark
