#include "gstark/padic.hpp"

#include <algorithm>
#include <sstream>

namespace gstark {

namespace {

// arithmetic on unit pairs (a + b*s) modulo an explicit p-power
struct PairRing {
  Int mod;
  long c0, c1;  // s^2 = c1*s + c0

  using P = std::pair<Int, Int>;

  P reduce(const P& x) const {
    Int a = x.first % mod, b = x.second % mod;
    if (a < 0) a += mod;
    if (b < 0) b += mod;
    return {a, b};
  }
  P mul(const P& x, const P& y) const {
    Int bb = x.second * y.second;
    Int a = x.first * y.first + bb * c0;
    Int b = x.first * y.second + x.second * y.first + bb * c1;
    return reduce({a, b});
  }
  P add(const P& x, const P& y) const {
    return reduce({x.first + y.first, x.second + y.second});
  }
  P sub(const P& x, const P& y) const {
    return reduce({x.first - y.first, x.second - y.second});
  }
  P pow(P base, Int e) const {
    P r{1, 0};
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return reduce(r);
  }
  // conjugate a + b*(c1 - s)
  P conj(const P& x) const {
    return reduce({x.first + x.second * c1, -x.second});
  }
  // norm x * conj(x) = a^2 + a b c1 - b^2 c0
  Int norm(const P& x) const {
    Int n = (x.first * x.first + x.first * x.second * c1 -
             x.second * x.second * c0) %
            mod;
    if (n < 0) n += mod;
    return n;
  }
  P inv(const P& x, const Int& p) const {
    Int n = norm(x);
    if (n % p == 0) throw domain_error("inverse of non-unit pair");
    Int ninv = invmod(n, mod);
    P c = conj(x);
    return reduce({c.first * ninv, c.second * ninv});
  }
};

long pair_val(const std::pair<Int, Int>& x, long p, long cap) {
  long v = 0;
  Int a = x.first, b = x.second;
  while (v < cap && a % p == 0 && b % p == 0) {
    a /= p;
    b /= p;
    ++v;
  }
  return v;
}

}  // namespace

PadicCtx::PadicCtx(long p, long m) : p_(p), m_(m) {
  if (m < 1) throw domain_error("precision must be >= 1");
  if (!is_prime(p)) throw domain_error("p must be prime");
  if (p == 2) {
    c0_ = -1;  // s^2 + s + 1 = 0
    c1_ = -1;
  } else {
    long c = 2;
    while (kronecker(c, p) != -1) ++c;
    c0_ = c;  // s^2 = c
    c1_ = 0;
  }
  mpz_ui_pow_ui(pm_.get_mpz_t(), p_, m_);
}

Int PadicCtx::ppow(long k) const {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k);
  return r;
}

CtxPtr make_ctx(long p, long m) { return std::make_shared<PadicCtx>(p, m); }

void Fp2::canonicalize() {
  const long p = ctx_->p(), m = ctx_->prec();
  const Int& pm = ctx_->modulus();
  a_ %= pm;
  b_ %= pm;
  if (a_ < 0) a_ += pm;
  if (b_ < 0) b_ += pm;
  long k = pair_val({a_, b_}, p, std::min(rel_, m));
  if (k >= rel_ || (a_ == 0 && b_ == 0)) {
    // indistinguishable from zero at this precision
    long abs = val_ + rel_;
    zero_ = true;
    val_ = 0;
    a_ = b_ = 0;
    rel_ = abs;
    return;
  }
  if (k > 0) {
    Int pk = ctx_->ppow(k);
    a_ /= pk;
    b_ /= pk;
    val_ += k;
    rel_ = std::min(rel_ - k, m - k);
  }
}

Fp2 Fp2::make(const CtxPtr& c, long val, const Int& a, const Int& b, long rel) {
  Fp2 x;
  x.ctx_ = c;
  x.zero_ = false;
  x.val_ = val;
  x.a_ = a;
  x.b_ = b;
  x.rel_ = (rel < 0 || rel > c->prec()) ? c->prec() : rel;
  x.canonicalize();
  return x;
}

Fp2 Fp2::from_int(const CtxPtr& c, const Int& n) {
  if (n == 0) return zero(c);
  return make(c, 0, n, 0);
}

Fp2 Fp2::from_rat(const CtxPtr& c, const Rat& q) {
  if (q == 0) return zero(c);
  Int num = q.get_num(), den = q.get_den();
  Int p(c->p());
  long v = valuation(num, p) - valuation(den, p);
  Int pv;
  mpz_ui_pow_ui(pv.get_mpz_t(), c->p(), std::abs(v));
  if (v > 0) num /= pv;
  if (v < 0) den /= pv;
  Int u = (num % c->modulus()) * invmod(den % c->modulus(), c->modulus());
  return make(c, v, u, 0);
}

long Fp2::val() const {
  if (zero_) throw domain_error("valuation of zero");
  return val_;
}

bool Fp2::in_base_field() const {
  if (zero_) return true;
  if (b_ == 0) return true;
  return pair_val({b_, b_}, ctx_->p(), rel_) >= rel_;
}

Fp2 Fp2::operator-() const {
  if (zero_) return *this;
  return make(ctx_, val_, -a_, -b_, rel_);
}

Fp2 Fp2::operator+(const Fp2& o) const {
  if (zero_ && o.zero_) {
    Fp2 z = zero(ctx_ ? ctx_ : o.ctx_);
    z.rel_ = std::min(rel_, o.rel_);
    return z;
  }
  if (zero_) {
    // x known mod p^rel_ of *this; adding it can only cap precision
    Fp2 r = o;
    r.rel_ = std::min(r.rel_, rel_ - o.val_);
    if (r.rel_ <= 0) {
      Fp2 z = zero(ctx_);
      z.rel_ = rel_;
      return z;
    }
    return r;
  }
  if (o.zero_) return o + *this;
  long v = std::min(val_, o.val_);
  long abs_limit = std::min(val_ + rel_, o.val_ + o.rel_);
  Int pa = ctx_->ppow(val_ - v), pb = ctx_->ppow(o.val_ - v);
  return make(ctx_, v, a_ * pa + o.a_ * pb, b_ * pa + o.b_ * pb,
              abs_limit - v);
}

Fp2 Fp2::operator-(const Fp2& o) const { return *this + (-o); }

Fp2 Fp2::operator*(const Fp2& o) const {
  if (zero_ || o.zero_) {
    Fp2 z = zero(ctx_ ? ctx_ : o.ctx_);
    // absolute precision of a product with zero: v(other) + abs(zero)
    long other_v = zero_ ? (o.zero_ ? o.rel_ : o.val_) : val_;
    z.rel_ = std::min(rel_, o.rel_) + other_v;
    return z;
  }
  PairRing R{ctx_->modulus(), ctx_->minpoly_c0(), ctx_->minpoly_c1()};
  auto r = R.mul({a_, b_}, {o.a_, o.b_});
  return make(ctx_, val_ + o.val_, r.first, r.second, std::min(rel_, o.rel_));
}

Fp2 Fp2::inverse() const {
  if (zero_) throw domain_error("division by zero");
  PairRing R{ctx_->modulus(), ctx_->minpoly_c0(), ctx_->minpoly_c1()};
  auto r = R.inv({a_, b_}, Int(ctx_->p()));
  return make(ctx_, -val_, r.first, r.second, rel_);
}

Fp2 Fp2::operator/(const Fp2& o) const { return *this * o.inverse(); }

Fp2 Fp2::pow(long e) const {
  if (e == 0) return one(ctx_);
  if (e < 0) return inverse().pow(-e);
  if (zero_) {
    Fp2 z = zero(ctx_);
    z.rel_ = rel_ * e;
    return z;
  }
  PairRing R{ctx_->modulus(), ctx_->minpoly_c0(), ctx_->minpoly_c1()};
  auto r = R.pow({a_, b_}, Int(e));
  return make(ctx_, val_ * e, r.first, r.second, rel_);
}

Fp2 Fp2::frobenius() const {
  if (zero_) return *this;
  PairRing R{ctx_->modulus(), ctx_->minpoly_c0(), ctx_->minpoly_c1()};
  auto r = R.conj({a_, b_});
  return make(ctx_, val_, r.first, r.second, rel_);
}

Fp2 Fp2::norm() const { return *this * frobenius(); }

bool Fp2::operator==(const Fp2& o) const {
  if (zero_ != o.zero_) return false;
  if (zero_) return true;
  return val_ == o.val_ && a_ == o.a_ && b_ == o.b_;
}

bool Fp2::close_to(const Fp2& o, long digits) const {
  Fp2 d = *this - o;
  if (d.is_zero()) return d.rel_ >= digits;
  return d.val_ >= digits;
}

std::pair<Int, Int> Fp2::residue_pair(long k) const {
  Int pk = ctx_->ppow(k);
  if (zero_) return {Int(0), Int(0)};
  if (val_ < 0) throw domain_error("residue_pair: negative valuation");
  Int pv = ctx_->ppow(val_);
  return {a_ * pv % pk, b_ * pv % pk};
}

std::string Fp2::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << ctx_->p() << "^" << rel_ << ")";
    return os.str();
  }
  os << ctx_->p() << "^" << val_ << "*(" << a_.get_str();
  if (b_ != 0) os << " + " << b_.get_str() << "*s";
  os << ") + O(" << ctx_->p() << "^" << val_ + rel_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Teichmueller lift of a unit pair, computed modulo p^k
std::pair<Int, Int> teich_pair(const PadicCtx& c, std::pair<Int, Int> u,
                               long k) {
  Int pk = c.ppow(k);
  PairRing R{pk, c.minpoly_c0(), c.minpoly_c1()};
  Int psq(c.p());
  psq *= c.p();
  u = R.reduce(u);
  for (long i = 0; i <= k + 2; ++i) {
    auto nxt = R.pow(u, psq);
    if (nxt == u) break;
    u = nxt;
  }
  return u;
}

// log of a pair w == 1 mod p (mod p^{k0+} with w exact), result mod p^K.
// For p = 2 the input is first squared until w == 1 mod 4; the caller's
// precision accounting absorbs the halving.
std::pair<Int, Int> log1_series(const PadicCtx& c, std::pair<Int, Int> w,
                                long K, long& loss) {
  const long p = c.p();
  loss = 0;
  long halvings = 0;
  {
    Int pk = c.ppow(K + 24);
    PairRing R{pk, c.minpoly_c0(), c.minpoly_c1()};
    w = R.reduce(w);
    if (p == 2) {
      while (pair_val(R.sub(w, {1, 0}), 2, 3) < 2) {
        w = R.mul(w, w);
        ++halvings;
        if (halvings > 4) throw domain_error("log: not a 1-unit");
      }
      loss = halvings;
    }
  }
  const long guard = 24;
  Int pK = c.ppow(K + guard);
  PairRing R{pK, c.minpoly_c0(), c.minpoly_c1()};
  auto y = R.sub(w, {1, 0});
  long kv = pair_val(y, p, K + guard);
  if (kv < 1) throw domain_error("log series: argument not congruent to 1");
  std::pair<Int, Int> sum{0, 0}, ypow{1, 0};
  for (long n = 1;; ++n) {
    // term valuation lower bound: n*kv - v_p(n)
    long vp_n = 0;
    for (long t = n; t % p == 0; t /= p) ++vp_n;
    if ((n - 1) * kv > K + guard) break;
    ypow = R.mul(ypow, y);
    long nv = vp_n;
    Int nunit(n);
    Int pe(1);
    for (long t = 0; t < nv; ++t) {
      nunit /= p;
      pe *= p;
    }
    // ypow divisible by p^{n*kv} >= p^{nv}; exact division of residues
    std::pair<Int, Int> term{ypow.first / pe, ypow.second / pe};
    Int iu = invmod(nunit % pK, pK);
    term = R.reduce({term.first * iu, term.second * iu});
    if (n % 2 == 0) term = R.reduce({-term.first, -term.second});
    sum = R.add(sum, term);
  }
  if (halvings > 0) {
    Int ph(1);
    ph <<= halvings;
    // log(w^{2^h}) = 2^h log(w); the series value is exactly divisible
    if (sum.first % ph != 0 || sum.second % ph != 0)
      throw precision_error("log: halving division failed");
    sum.first /= ph;
    sum.second /= ph;
  }
  Int pKm = c.ppow(K);
  sum.first %= pKm;
  sum.second %= pKm;
  return sum;
}

}  // namespace

Fp2 teichmuller(const Fp2& x) {
  if (x.is_zero() || x.val() != 0)
    throw domain_error("teichmuller: input must be a unit");
  const auto& c = *x.ctx();
  auto u = teich_pair(c, {x.unit_a(), x.unit_b()}, c.prec());
  return Fp2::make(x.ctx(), 0, u.first, u.second, c.prec());
}

Fp2 padic_log(const Fp2& x) {
  if (x.is_zero()) throw domain_error("log of zero");
  const auto& c = *x.ctx();
  long K = x.rel_prec();
  if (K <= 1) throw precision_error("log: input has no usable precision");
  PairRing R{c.modulus(), c.minpoly_c0(), c.minpoly_c1()};
  std::pair<Int, Int> u{x.unit_a(), x.unit_b()};
  auto zeta = teich_pair(c, u, c.prec());
  auto w = R.mul(u, R.inv(zeta, Int(c.p())));
  long loss = 0;
  auto s = log1_series(c, w, K, loss);
  Fp2 r = Fp2::make(x.ctx(), 0, s.first, s.second, c.prec());
  if (r.is_zero()) {
    Fp2 z = Fp2::zero(x.ctx());
    return z;
  }
  long abs = K - loss;
  return Fp2::make(x.ctx(), r.val(), r.unit_a(), r.unit_b(), abs - r.val());
}

Fp2 padic_exp(const Fp2& x) {
  const auto& c = *x.ctx();
  if (x.is_zero()) return Fp2::one(x.ctx());
  const long p = c.p();
  long k = x.val();
  if ((p == 2 && k < 2) || (p != 2 && k < 1))
    throw domain_error("exp: argument outside convergence domain");
  long K = std::min(c.prec(), x.abs_prec());
  // determine last term and the factorial valuation budget
  long nmax = 1, vfact = 0, G = 0;
  for (long n = 1;; ++n) {
    long t = n, vp = 0;
    while (t % p == 0) {
      t /= p;
      ++vp;
    }
    vfact += vp;
    G = std::max(G, vfact);
    if (n * k - vfact >= K + 2) {
      nmax = n;
      break;
    }
    if (n > 100000) throw precision_error("exp: series too long");
  }
  Int pM = c.ppow(K + G + 2);
  PairRing R{pM, c.minpoly_c0(), c.minpoly_c1()};
  Int pv = c.ppow(k);
  std::pair<Int, Int> y = R.reduce({x.unit_a() * pv, x.unit_b() * pv});
  std::pair<Int, Int> sum{1, 0}, ypow{1, 0};
  Int funit(1);
  long fval = 0;
  for (long n = 1; n <= nmax; ++n) {
    ypow = R.mul(ypow, y);
    long t = n, vp = 0;
    while (t % p == 0) {
      t /= p;
      ++vp;
    }
    fval += vp;
    funit = funit * t % pM;
    Int pe = c.ppow(fval);
    std::pair<Int, Int> term{ypow.first / pe, ypow.second / pe};
    Int iu = invmod(funit, pM);
    term = R.reduce({term.first * iu, term.second * iu});
    sum = R.add(sum, term);
  }
  Int pK = c.ppow(K);
  return Fp2::make(x.ctx(), 0, sum.first % pK, sum.second % pK, K);
}

namespace {

std::pair<Int, Int> sqrt_pair(const PadicCtx& c, const std::pair<Int, Int>& w,
                              long K, bool& ok) {
  const long p = c.p();
  ok = false;
  if (p != 2) {
    // root in F_{p^2} by scanning (p^2 <= 361 for our primes)
    PairRing Rp{Int(p), c.minpoly_c0(), c.minpoly_c1()};
    auto w0 = Rp.reduce(w);
    std::pair<Int, Int> z{0, 0};
    bool found = false;
    for (long a = 0; a < p && !found; ++a)
      for (long b = 0; b < p && !found; ++b) {
        std::pair<Int, Int> t{a, b};
        if (Rp.mul(t, t) == w0 && !(a == 0 && b == 0)) {
          z = t;
          found = true;
        }
      }
    if (!found) return {0, 0};
    // Hensel with doubling precision
    long cur = 1;
    while (cur < K) {
      cur = std::min(2 * cur, K);
      Int pk = c.ppow(cur);
      PairRing R{pk, c.minpoly_c0(), c.minpoly_c1()};
      auto f = R.sub(R.mul(z, z), R.reduce(w));
      auto corr = R.mul(f, R.inv(R.add(z, z), Int(p)));
      z = R.sub(z, corr);
    }
    ok = true;
    return z;
  }
  // p = 2: search a starting root mod 2^6, then Newton
  long start = std::min<long>(K, 6);
  Int p6 = c.ppow(start);
  PairRing R6{p6, c.minpoly_c0(), c.minpoly_c1()};
  auto w6 = R6.reduce(w);
  std::pair<Int, Int> z{0, 0};
  bool found = false;
  for (long a = 0; a < 64 && !found; ++a)
    for (long b = 0; b < 64 && !found; ++b) {
      if (a % 2 == 0 && b % 2 == 0) continue;
      std::pair<Int, Int> t{a, b};
      if (R6.mul(t, t) == w6) {
        z = t;
        found = true;
      }
    }
  if (!found) return {0, 0};
  Int pk = c.ppow(K + 2);
  PairRing R{pk, c.minpoly_c0(), c.minpoly_c1()};
  auto ww = R.reduce(w);
  for (int it = 0; it < 64; ++it) {
    auto f = R.sub(R.mul(z, z), ww);
    long vf = pair_val(f, 2, K + 2);
    if (vf >= K + 1) break;
    // z' = z - f/(2z); f is divisible by 2
    std::pair<Int, Int> fh{f.first / 2, f.second / 2};
    auto corr = R.mul(fh, R.inv(z, Int(2)));
    z = R.sub(z, corr);
  }
  auto f = R.sub(R.mul(z, z), ww);
  if (pair_val(f, 2, K + 1) < K) return {0, 0};
  ok = true;
  return z;
}

}  // namespace

bool has_padic_sqrt(const Fp2& x) {
  if (x.is_zero()) return true;
  if (x.val() % 2 != 0) return false;
  bool ok = false;
  sqrt_pair(*x.ctx(), {x.unit_a(), x.unit_b()}, std::min<long>(12, x.ctx()->prec()),
            ok);
  return ok;
}

Fp2 padic_sqrt(const Fp2& x) {
  if (x.is_zero()) return x;
  const auto& c = *x.ctx();
  if (x.val() % 2 != 0) throw domain_error("sqrt: odd valuation");
  bool ok = false;
  long K = x.rel_prec();
  auto z = sqrt_pair(c, {x.unit_a(), x.unit_b()}, std::min(K, c.prec()), ok);
  if (!ok) throw domain_error("sqrt: not a square in Q_{p^2}");
  long rel = c.p() == 2 ? K - 1 : K;
  Fp2 r = Fp2::make(x.ctx(), x.val() / 2, z.first, z.second, rel);
  Fp2 nr = -r;
  auto pr = r.residue_pair(std::min(rel, c.prec()));
  auto pn = nr.residue_pair(std::min(rel, c.prec()));
  if (pn < pr) return nr;
  return r;
}

Fp2 sqrt_disc(const CtxPtr& c, long D) {
  if (kronecker(Int(D), Int(c->p())) != -1)
    throw domain_error("sqrt_disc: p not inert in Q(sqrt D)");
  return padic_sqrt(Fp2::from_int(c, Int(D)));
}

}  // namespace gstark
