#pragma once

#include <array>

#include "gstark/quadforms.hpp"
#include "gstark/util.hpp"

namespace gstark {

using IMat2 = std::array<Int, 4>;  // row major, arbitrary-precision entries

// Minimal positive solution (t, u) of t^2 - D u^2 = 4, found from one period
// of the principal reduced cycle.  The "=4" normalisation keeps the
// automorph matrix integral for every D.
std::pair<Int, Int> pell4(long D);

// true iff t^2 - D u^2 = -4 is soluble, i.e. the field has a unit of
// negative norm
bool has_negative_norm_unit(long D);

struct AutomorphMatrix {
  IMat2 gamma;   // det 1, fixes the source form
  QuadForm form;
  Int t, u;      // the pell4 solution used
};

// The fundamental automorph of Q: gamma = ((t+bu)/2, cu; -au, (t-bu)/2)
AutomorphMatrix automorph(const QuadForm& q);

// Dedekind sum s(a, c) via the Euclidean-remainder formula; gcd(a,c) = 1
Rat dedekind_sum(const Int& a, const Int& c);
// the defining double sum, kept as a slow independent oracle
Rat dedekind_sum_slow(long a, long c);

// Dedekind symbol Phi (b/d when c = 0, else (a+d)/c - 12 sgn(c) s(a,c))
Rat dedekind_symbol(const IMat2& g);
// Rademacher symbol Psi = Phi - 3 sgn(c(a+d)); conjugation invariant
Rat rademacher(const IMat2& g);

// zeta_-(0, A) = Psi(gamma_A)/12; requires no unit of negative norm
Rat zeta_minus_zero(const QuadForm& q);

// e = #mu(H) for the narrow Hilbert class field of Q(sqrt D)
long mu_count(long D);

struct ValuationVector {
  long e = 0;
  std::vector<long> ord;             // ord_P(eps_A) indexed like the class group
  std::vector<long> positive_sorted; // one v >= 0 per involution pair,
                                     // descending; length h+/2
};

// P-adic valuations of the Brumer-Stark units: ord_P(eps_A) = -(e/12) Psi(gamma_A)
ValuationVector unit_valuations(const NarrowClassGroup& G);

}  // namespace gstark
