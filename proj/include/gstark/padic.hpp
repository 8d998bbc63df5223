#pragma once

#include <memory>
#include <string>
#include <utility>

#include "gstark/util.hpp"

namespace gstark {

// Arithmetic context for Q_{p^2}, the unramified quadratic extension of Q_p.
// Elements are written a + b*s where s is a root of the fixed degree-2
// polynomial x^2 - c1*x - c0, irreducible mod p.  Residues live mod p^m.
//
// The generator is chosen deterministically per p: x^2 - c with c the
// smallest positive quadratic non-residue mod p, except p = 2 which uses
// x^2 + x + 1.
class PadicCtx {
 public:
  PadicCtx(long p, long m);

  long p() const { return p_; }
  long prec() const { return m_; }
  const Int& modulus() const { return pm_; }  // p^m
  long minpoly_c0() const { return c0_; }     // s^2 = c1*s + c0
  long minpoly_c1() const { return c1_; }

  bool operator==(const PadicCtx& o) const {
    return p_ == o.p_ && m_ == o.m_ && c0_ == o.c0_ && c1_ == o.c1_;
  }

  // p^k for 0 <= k <= some slack beyond m (computed on demand)
  Int ppow(long k) const;

 private:
  long p_, m_;
  long c0_, c1_;
  Int pm_;
};

using CtxPtr = std::shared_ptr<const PadicCtx>;

CtxPtr make_ctx(long p, long m);

// Element of Q_{p^2} at fixed working precision: p^val * (a + b*s) with
// (a, b) a unit pair (not both divisible by p), residues canonical in
// [0, p^m).  `rel` tracks how many p-adic digits of the unit part are
// actually meaningful; absolute precision is val + rel.
class Fp2 {
 public:
  Fp2() : zero_(true), val_(0), rel_(0) {}

  static Fp2 zero(const CtxPtr& c) {
    Fp2 x;
    x.ctx_ = c;
    x.zero_ = true;
    x.val_ = 0;
    x.rel_ = c->prec();
    return x;
  }
  static Fp2 one(const CtxPtr& c) { return from_int(c, 1); }
  static Fp2 from_int(const CtxPtr& c, const Int& n);
  static Fp2 from_rat(const CtxPtr& c, const Rat& q);
  // p^val * (a + b s), pair need not be reduced or unit-normalised
  static Fp2 make(const CtxPtr& c, long val, const Int& a, const Int& b,
                  long rel = -1);
  // the generator s itself
  static Fp2 gen(const CtxPtr& c) { return make(c, 0, 0, 1); }

  const CtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return zero_; }
  long val() const;  // throws on zero
  long rel_prec() const { return rel_; }
  long abs_prec() const { return zero_ ? rel_ : val_ + rel_; }
  const Int& unit_a() const { return a_; }
  const Int& unit_b() const { return b_; }
  bool is_unit() const { return !zero_ && val_ == 0; }
  bool in_base_field() const;  // b-component of unit part vanishes

  Fp2 operator-() const;
  Fp2 operator+(const Fp2& o) const;
  Fp2 operator-(const Fp2& o) const;
  Fp2 operator*(const Fp2& o) const;
  Fp2 operator/(const Fp2& o) const;
  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 inverse() const;
  Fp2 pow(long e) const;
  Fp2 frobenius() const;  // a + b*s -> a + b*(c1 - s), the field automorphism
  Fp2 norm() const;       // x * frobenius(x), lands in Q_p

  // representation equality (same val and canonical residues)
  bool operator==(const Fp2& o) const;
  bool operator!=(const Fp2& o) const { return !(*this == o); }
  // agreement to `digits` absolute p-adic digits
  bool close_to(const Fp2& o, long digits) const;

  // residue pair of this element as an integer combination a + b*s reduced
  // mod p^k (requires val >= 0); used by the recognition lattices
  std::pair<Int, Int> residue_pair(long k) const;

  std::string str() const;

 private:
  void canonicalize();

  CtxPtr ctx_;
  bool zero_;
  long val_;
  Int a_, b_;
  long rel_;
};

// Iwasawa-branch p-adic logarithm: kills p and all roots of unity, additive
// on products.  Input must be nonzero.
Fp2 padic_log(const Fp2& x);

// Inverse of padic_log on its convergence domain: requires val >= 1 for odd
// p and val >= 2 for p = 2.
Fp2 padic_exp(const Fp2& x);

// Teichmueller lift: the unique (p^2-1)-st root of unity congruent to the
// unit x mod p, computed by iterating x -> x^{p^2}.
Fp2 teichmuller(const Fp2& x);

// Square root of a unit in Z_{p^2}^x if one exists there (throws otherwise).
// Branch: of the two roots r, -r, returns the one with lexicographically
// smaller residue pair.
Fp2 padic_sqrt(const Fp2& x);
bool has_padic_sqrt(const Fp2& x);

// The fixed square root of D in Q_{p^2} for (D|p) = -1, canonical branch.
Fp2 sqrt_disc(const CtxPtr& c, long D);

}  // namespace gstark
