#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gstark/util.hpp"

namespace gstark {

// Integral indefinite binary quadratic form a x^2 + b xy + c y^2 of positive
// non-square discriminant.  Coefficients stay within int64 for every
// discriminant D*n^2 this project touches (D < 10^5, n <= a few thousand);
// products are taken through __int128 where they could overflow.
struct QuadForm {
  long long a = 0, b = 0, c = 0;

  Int disc() const;
  bool operator==(const QuadForm& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const QuadForm& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
};

struct QuadFormHash {
  size_t operator()(const QuadForm& q) const {
    size_t h = std::hash<long long>()(q.a);
    h = h * 1000003 + std::hash<long long>()(q.b);
    h = h * 1000003 + std::hash<long long>()(q.c);
    return h;
  }
};

using Mat2 = std::array<long long, 4>;  // row major (m0 m1; m2 m3)

Mat2 mat_mul(const Mat2& x, const Mat2& y);
long long mat_det(const Mat2& x);

// Right action Q^g = Q(g00 x + g01 y, g10 x + g11 y); disc scales by det^2.
QuadForm apply(const QuadForm& q, const Mat2& g);

bool is_reduced(const QuadForm& q);

// one rho-step of the reduction operator; also returns the SL2(Z) matrix of
// the step when out_step is non-null
QuadForm rho(const QuadForm& q, Mat2* out_step = nullptr);

QuadForm reduce(const QuadForm& q);

// the full cycle of reduced forms through reduce(q), in rho order,
// canonically rotated to start at the lexicographically least member
std::vector<QuadForm> reduced_cycle(const QuadForm& q);

// involution (a,b,c) -> (-c,-b,-a); sends the class A to A[sqrt(D)]
QuadForm involute(const QuadForm& q);

// principal reduced form of fundamental discriminant D
QuadForm principal_form(long D);

struct FormClass {
  std::vector<QuadForm> cycle;
  QuadForm rep() const;  // first cycle member with a > 0
};

// One FormClass per narrow ideal class of discriminant D, principal class
// first, rest sorted by least cycle member.
class NarrowClassGroup {
 public:
  explicit NarrowClassGroup(long D);

  long D() const { return D_; }
  size_t size() const { return classes_.size(); }
  const FormClass& cls(size_t i) const { return classes_[i]; }
  const std::vector<FormClass>& classes() const { return classes_; }

  // index of the class containing reduce(q); q must have discriminant D
  size_t class_of(const QuadForm& q) const;
  size_t involution(size_t i) const { return invol_[i]; }
  size_t principal() const { return 0; }
  // class of the different ideal (sqrt(D)); nontrivial iff there is no unit
  // of norm -1
  size_t different_class() const;

  bool has_negative_norm_unit() const;

 private:
  long D_;
  std::vector<FormClass> classes_;
  std::vector<size_t> invol_;
  std::unordered_map<QuadForm, size_t, QuadFormHash> lookup_;
};

// determinant-n Hecke coset representatives (n/m, j; 0, m), m|n, 0<=j<m,
// gcd(m, n/m) = 1
std::vector<Mat2> hecke_reps(long n);

struct MarkedForm {
  QuadForm form;   // member of a reduced cycle at discriminant D n^2
  Mat2 gamma;      // det n, form ~ Q0^gamma
};

// Incremental computation of the nearly-reduced form sets M(n, A).  Built
// recursively: M(n) comes from M(n/p) for the smallest prime p | n by
// applying the p+1 Hecke matrices and appending whole reduced cycles of any
// image not yet represented.
class NearlyReducedSets {
 public:
  NearlyReducedSets(long D, const QuadForm& q0);

  // all marked forms (full cycles, both signs of a) for level n
  const std::vector<MarkedForm>& level(long n);
  // the a > 0 members, which is what the series formulas sum over
  std::vector<MarkedForm> positive_level(long n);

 private:
  long D_;
  QuadForm q0_;
  std::map<long, std::vector<MarkedForm>> memo_;
};

// M(d, class(Q0)) for every divisor d of n, filtered to a > 0 > c
std::map<long, std::vector<MarkedForm>> nearly_reduced_sets(long D,
                                                            const QuadForm& q0,
                                                            long n);

}  // namespace gstark
