#include "gstark/meyer.hpp"

#include <algorithm>

namespace gstark {

namespace {

IMat2 imat_mul(const IMat2& x, const IMat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

QuadForm iapply_check(const QuadForm& q, const IMat2& g) {
  Int a = q.a, b = q.b, c = q.c;
  Int na = a * g[0] * g[0] + b * g[0] * g[2] + c * g[2] * g[2];
  Int nb = 2 * a * g[0] * g[1] + b * (g[0] * g[3] + g[1] * g[2]) +
           2 * c * g[2] * g[3];
  Int nc = a * g[1] * g[1] + b * g[1] * g[3] + c * g[3] * g[3];
  if (!na.fits_slong_p() || !nb.fits_slong_p() || !nc.fits_slong_p())
    throw domain_error("automorph check overflow");
  return {na.get_si(), nb.get_si(), nc.get_si()};
}

int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

std::pair<Int, Int> pell4(long D) {
  if (D <= 0 || is_square(Int(D)))
    throw domain_error("pell4: D must be positive non-square");
  if (D % 4 != 0 && D % 4 != 1) throw domain_error("pell4: not a discriminant");
  QuadForm start = reduce(principal_form(D));
  IMat2 M{1, 0, 0, 1};
  QuadForm cur = start;
  do {
    Mat2 step;
    cur = rho(cur, &step);
    IMat2 s{step[0], step[1], step[2], step[3]};
    M = imat_mul(M, s);
  } while (!(cur == start));
  if (M[0] + M[3] < 0)
    for (auto& e : M) e = -e;
  Int t = M[0] + M[3];
  // gamma = ((t+bu)/2, cu; -au, (t-bu)/2) for the start form, so u = -M[2]/a
  Int u = -M[2] / Int(start.a);
  if (u < 0) u = -u;
  if (t * t - D * u * u != 4)
    throw domain_error("pell4: cycle product is not an automorph");
  return {t, u};
}

bool has_negative_norm_unit(long D) {
  QuadForm p = reduce(principal_form(D));
  QuadForm anti = reduce(involute(p));
  QuadForm cur = p;
  do {
    if (cur == anti) return true;
    cur = rho(cur);
  } while (!(cur == p));
  return false;
}

AutomorphMatrix automorph(const QuadForm& q) {
  Int disc = q.disc();
  if (!disc.fits_slong_p()) throw domain_error("automorph: disc too large");
  auto [t, u] = pell4(disc.get_si());
  IMat2 g{(t + q.b * u) / 2, q.c * u, -q.a * u, (t - q.b * u) / 2};
  if (g[0] * g[3] - g[1] * g[2] != 1)
    throw domain_error("automorph: determinant is not 1");
  if (!(iapply_check(q, g) == q))
    throw domain_error("automorph: matrix does not fix the form");
  return {g, q, t, u};
}

Rat dedekind_sum(const Int& a_in, const Int& c_in) {
  Int c = abs(c_in);
  if (c == 0) throw domain_error("dedekind_sum: c = 0");
  Int a = a_in % c;
  if (a < 0) a += c;
  if (c == 1) return Rat(0);
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw domain_error("dedekind_sum: gcd(a,c) != 1");
  // remainders r_0 = c > r_1 = a > ... > r_{n+1} = 1
  std::vector<Int> r{c, a};
  while (r.back() != 1) r.push_back(r[r.size() - 2] % r.back());
  long n = static_cast<long>(r.size()) - 2;
  Rat s(0);
  for (size_t j = 1; j < r.size(); ++j) {
    Rat term(r[j] * r[j] + r[j - 1] * r[j - 1] + 1);
    term /= Rat(r[j] * r[j - 1]);
    s += term;
  }
  s /= 12;
  if (n % 2 == 0) s -= Rat(1, 4);
  s.canonicalize();
  return s;
}

Rat dedekind_sum_slow(long a, long c) {
  if (c == 0) throw domain_error("dedekind_sum_slow: c = 0");
  auto saw = [](const Rat& x) -> Rat {
    // ((x)) = 0 for integers, else x - floor(x) - 1/2
    if (x.get_den() == 1) return Rat(0);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    Rat r = x - Rat(fl) - Rat(1, 2);
    r.canonicalize();
    return r;
  };
  long cc = std::labs(c);
  Rat s(0);
  for (long k = 1; k <= cc; ++k)
    s += saw(Rat(Int(a) * k, Int(c))) * saw(Rat(k, c));
  s.canonicalize();
  return s;
}

Rat dedekind_symbol(const IMat2& g) {
  if (g[0] * g[3] - g[1] * g[2] != 1)
    throw domain_error("dedekind_symbol: det != 1");
  const Int &a = g[0], &b = g[1], &c = g[2], &d = g[3];
  if (c == 0) {
    Rat r(b, d);  // d = +-1
    r.canonicalize();
    return r;
  }
  Rat phi(a + d, c);
  phi.canonicalize();
  phi -= Rat(12 * sgn(c)) * dedekind_sum(a, c);
  phi.canonicalize();
  return phi;
}

Rat rademacher(const IMat2& g) {
  Rat psi = dedekind_symbol(g);
  const Int &a = g[0], &c = g[2], &d = g[3];
  psi -= Rat(3 * sgn(c * (a + d)));
  psi.canonicalize();
  return psi;
}

Rat zeta_minus_zero(const QuadForm& q) {
  Int disc = q.disc();
  if (!disc.fits_slong_p()) throw domain_error("zeta: disc too large");
  long D = disc.get_si();
  if (!is_fundamental_discriminant(D))
    throw domain_error("zeta: non-fundamental discriminant");
  if (has_negative_norm_unit(D))
    throw domain_error("zeta: field has a unit of negative norm");
  Rat z = rademacher(automorph(q).gamma) / 12;
  z.canonicalize();
  return z;
}

long mu_count(long D) {
  long e = 2;
  if (D % 4 == 0 && (D / 4) % 4 == 3) e *= 2;
  if (D % 3 == 0) e *= 3;
  return e;
}

ValuationVector unit_valuations(const NarrowClassGroup& G) {
  if (G.has_negative_norm_unit())
    throw domain_error("unit_valuations: field has a unit of negative norm");
  ValuationVector V;
  V.e = mu_count(G.D());
  V.ord.resize(G.size());
  for (size_t i = 0; i < G.size(); ++i) {
    Rat psi = rademacher(automorph(G.cls(i).rep()).gamma);
    Rat o = -Rat(V.e) * psi / 12;
    o.canonicalize();
    if (o.get_den() != 1)
      throw domain_error("unit_valuations: non-integral valuation");
    V.ord[i] = static_cast<long>(o.get_num().get_si());
  }
  long sum = 0;
  for (size_t i = 0; i < G.size(); ++i) {
    sum += V.ord[i];
    if (V.ord[G.involution(i)] != -V.ord[i])
      throw domain_error("unit_valuations: involution pairing violated");
  }
  if (sum != 0) throw domain_error("unit_valuations: valuations do not sum to 0");
  for (size_t i = 0; i < G.size(); ++i) {
    size_t j = G.involution(i);
    if (i < j) V.positive_sorted.push_back(std::max(V.ord[i], V.ord[j]));
  }
  std::sort(V.positive_sorted.rbegin(), V.positive_sorted.rend());
  return V;
}

}  // namespace gstark
