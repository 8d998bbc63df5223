#include "gstark/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gstark {

namespace {
using i128 = __int128;

long long checked_ll(i128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    throw domain_error("quadform coefficient overflow");
  return static_cast<long long>(v);
}

long long floor_sqrt(i128 n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (i128)r * r > n) --r;
  while ((i128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace

Int QuadForm::disc() const {
  return Int(b) * Int(b) - 4 * Int(a) * Int(c);
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {checked_ll((i128)x[0] * y[0] + (i128)x[1] * y[2]),
          checked_ll((i128)x[0] * y[1] + (i128)x[1] * y[3]),
          checked_ll((i128)x[2] * y[0] + (i128)x[3] * y[2]),
          checked_ll((i128)x[2] * y[1] + (i128)x[3] * y[3])};
}

long long mat_det(const Mat2& x) {
  return checked_ll((i128)x[0] * x[3] - (i128)x[1] * x[2]);
}

QuadForm apply(const QuadForm& q, const Mat2& g) {
  i128 r = g[0], s = g[1], t = g[2], u = g[3];
  i128 a = q.a, b = q.b, c = q.c;
  i128 na = a * r * r + b * r * t + c * t * t;
  i128 nb = 2 * a * r * s + b * (r * u + s * t) + 2 * c * t * u;
  i128 nc = a * s * s + b * s * u + c * u * u;
  return {checked_ll(na), checked_ll(nb), checked_ll(nc)};
}

bool is_reduced(const QuadForm& q) {
  i128 disc = (i128)q.b * q.b - 4 * (i128)q.a * q.c;
  if (disc <= 0) return false;
  long long sq = floor_sqrt(disc);
  if ((i128)sq * sq == disc) return false;
  long long aa = std::llabs(q.a);
  return q.b >= 1 && q.b <= sq && 2 * aa >= sq - q.b + 1 && 2 * aa <= sq + q.b;
}

QuadForm rho(const QuadForm& q, Mat2* out_step) {
  i128 disc = (i128)q.b * q.b - 4 * (i128)q.a * q.c;
  if (disc <= 0) throw domain_error("rho: discriminant must be positive");
  long long sq = floor_sqrt(disc);
  if ((i128)sq * sq == disc) throw domain_error("rho: square discriminant");
  long long cabs = std::llabs(q.c);
  if (cabs == 0) throw domain_error("rho: degenerate form");
  long long m = 2 * cabs;
  long long r;
  if (cabs > sq) {
    // representative of -b mod 2|c| in (-|c|, |c|]
    r = (-q.b) % m;
    if (r < 0) r += m;
    if (r > cabs) r -= m;
  } else {
    // representative in (sq - 2|c|, sq]
    long long t = (sq + q.b) % m;
    if (t < 0) t += m;
    r = sq - t;
  }
  i128 nc = ((i128)r * r - disc) / (4 * (i128)q.c);
  QuadForm out{q.c, r, checked_ll(nc)};
  if (out_step) {
    long long s = (q.b + r) / (2 * q.c);
    *out_step = {0, -1, 1, s};
  }
  return out;
}

QuadForm reduce(const QuadForm& q) {
  QuadForm cur = q;
  for (int i = 0; i < 100000; ++i) {
    if (is_reduced(cur)) return cur;
    cur = rho(cur);
  }
  throw domain_error("reduce: did not terminate");
}

std::vector<QuadForm> reduced_cycle(const QuadForm& q) {
  QuadForm start = reduce(q);
  std::vector<QuadForm> cyc{start};
  QuadForm cur = rho(start);
  while (!(cur == start)) {
    cyc.push_back(cur);
    cur = rho(cur);
    if (cyc.size() > 10000000) throw domain_error("cycle: runaway");
  }
  size_t least = 0;
  for (size_t i = 1; i < cyc.size(); ++i)
    if (cyc[i] < cyc[least]) least = i;
  std::rotate(cyc.begin(), cyc.begin() + least, cyc.end());
  return cyc;
}

QuadForm involute(const QuadForm& q) { return {-q.c, -q.b, -q.a}; }

QuadForm principal_form(long D) {
  long long sq = isqrt(D);
  long long b0 = (sq % 2 == (D % 2)) ? sq : sq - 1;
  return {1, b0, (b0 * b0 - D) / 4};
}

QuadForm FormClass::rep() const {
  for (const auto& f : cycle)
    if (f.a > 0) return f;
  throw domain_error("class cycle has no positive-a member");
}

NarrowClassGroup::NarrowClassGroup(long D) : D_(D) {
  if (D <= 0 || (D % 4 != 0 && D % 4 != 1))
    throw domain_error("not a discriminant: D != 0,1 mod 4");
  if (is_square(Int(D))) throw domain_error("square discriminant");
  long long sq = isqrt(D);
  std::vector<QuadForm> all;
  for (long long b = (D % 2 == 0) ? 2 : 1; b <= sq; b += 2) {
    long long n = (D - b * b) / 4;  // = -a*c > 0
    for (long long a = 1; a * a <= n; ++a) {
      if (n % a) continue;
      for (long long aa : {a, n / a}) {
        if (2 * aa < sq - b + 1 || 2 * aa > sq + b) continue;
        all.push_back({aa, b, -n / aa});
        all.push_back({-aa, b, n / aa});
        if (a == n / a) break;
      }
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::unordered_set<QuadForm, QuadFormHash> seen;
  std::vector<FormClass> found;
  for (const auto& f : all) {
    if (seen.count(f)) continue;
    FormClass fc;
    fc.cycle = reduced_cycle(f);
    for (const auto& g : fc.cycle) seen.insert(g);
    found.push_back(std::move(fc));
  }
  // principal class first, rest by least member
  QuadForm p0 = reduce(principal_form(D));
  std::stable_sort(found.begin(), found.end(),
                   [](const FormClass& x, const FormClass& y) {
                     return x.cycle.front() < y.cycle.front();
                   });
  for (size_t i = 0; i < found.size(); ++i) {
    bool is_princ = std::find(found[i].cycle.begin(), found[i].cycle.end(),
                              p0) != found[i].cycle.end();
    if (is_princ && i != 0) std::swap(found[0], found[i]);
  }
  classes_ = std::move(found);
  for (size_t i = 0; i < classes_.size(); ++i)
    for (const auto& g : classes_[i].cycle) lookup_[g] = i;
  invol_.resize(classes_.size());
  for (size_t i = 0; i < classes_.size(); ++i)
    invol_[i] = class_of(involute(classes_[i].rep()));
}

size_t NarrowClassGroup::class_of(const QuadForm& q) const {
  QuadForm r = reduce(q);
  auto it = lookup_.find(r);
  if (it == lookup_.end())
    throw domain_error("class_of: form has wrong discriminant");
  return it->second;
}

size_t NarrowClassGroup::different_class() const {
  return invol_[0];
}

bool NarrowClassGroup::has_negative_norm_unit() const {
  return different_class() == principal();
}

std::vector<Mat2> hecke_reps(long n) {
  if (n < 1) throw domain_error("hecke_reps: n must be positive");
  std::vector<Mat2> out;
  for (long m : divisors(n)) {
    long q = n / m;
    if (std::gcd(m, q) != 1) continue;
    for (long j = 0; j < m; ++j) out.push_back({q, j, 0, m});
  }
  return out;
}

NearlyReducedSets::NearlyReducedSets(long D, const QuadForm& q0)
    : D_(D), q0_(reduce(q0)) {
  if (q0.disc() != D) throw domain_error("nearly reduced: disc mismatch");
}

const std::vector<MarkedForm>& NearlyReducedSets::level(long n) {
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  std::vector<MarkedForm> out;
  if (n == 1) {
    for (const auto& f : reduced_cycle(q0_))
      out.push_back({f, Mat2{1, 0, 0, 1}});
  } else {
    long p = smallest_prime_factor(n);
    const auto& base = level(n / p);
    auto hp = hecke_reps(p);
    std::unordered_set<QuadForm, QuadFormHash> present;
    for (const auto& mf : base) {
      for (const auto& d : hp) {
        QuadForm img = apply(mf.form, d);
        QuadForm r = reduce(img);
        if (present.count(r)) continue;
        Mat2 g = mat_mul(mf.gamma, d);
        for (const auto& f : reduced_cycle(r)) {
          present.insert(f);
          out.push_back({f, g});
        }
      }
    }
  }
  return memo_.emplace(n, std::move(out)).first->second;
}

std::vector<MarkedForm> NearlyReducedSets::positive_level(long n) {
  std::vector<MarkedForm> out;
  for (const auto& mf : level(n))
    if (mf.form.a > 0) out.push_back(mf);
  return out;
}

std::map<long, std::vector<MarkedForm>> nearly_reduced_sets(long D,
                                                            const QuadForm& q0,
                                                            long n) {
  if (!is_reduced(q0)) throw domain_error("nearly_reduced_sets: Q0 not reduced");
  NearlyReducedSets builder(D, q0);
  std::map<long, std::vector<MarkedForm>> out;
  for (long d : divisors(n)) out[d] = builder.positive_level(d);
  return out;
}

}  // namespace gstark
