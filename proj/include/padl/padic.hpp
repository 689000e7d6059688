#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "padl/numutil.hpp"

namespace padl {

struct insufficient_precision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated p-adic number: unit * p^val known modulo p^aprec.
//
// The unit is coprime to p and reduced mod p^{aprec-val}. A zero unit marks
// "zero at precision": the value is only known to be divisible by p^aprec.
// All arithmetic propagates the largest precision the inputs justify and
// never more.
class PadicNumber {
  public:
    static constexpr long kExactPrec = std::numeric_limits<long>::max() / 4;

    PadicNumber() : p_(0), val_(0), aprec_(0), unit_(0) {}

    static PadicNumber zero(long p, long aprec = kExactPrec) {
        PadicNumber x;
        x.p_ = check_prime(p);
        x.val_ = aprec;
        x.aprec_ = aprec;
        x.unit_ = 0;
        return x;
    }
    static PadicNumber one(long p, long aprec) { return from_integer(p, 1, aprec); }

    static PadicNumber from_integer(long p, const mpz_class& n, long aprec) {
        check_prime(p);
        return make(p, 0, n, aprec);
    }

    static PadicNumber from_rational(long p, const mpq_class& q, long aprec) {
        check_prime(p);
        if (q == 0) return zero(p, aprec);
        long vnum = q.get_num() == 0 ? 0 : vp_mpz(q.get_num(), p);
        long vden = vp_mpz(q.get_den(), p);
        long v = vnum - vden;
        mpz_class num = q.get_num() / mpz_pow(mpz_class(p), (unsigned long)vnum);
        mpz_class den = q.get_den() / mpz_pow(mpz_class(p), (unsigned long)vden);
        mpz_class mod = pow_long(p, (unsigned long)aprec);
        mpz_class u = mod_pos(num * mod_inverse(mod_pos(den, mod), mod), mod);
        PadicNumber x;
        x.p_ = p;
        x.val_ = v;
        x.aprec_ = v + aprec;
        x.unit_ = u;
        x.normalize_unit(aprec);
        return x;
    }

    long prime() const { return p_; }
    bool is_zero() const { return unit_ == 0; }
    // For a zero-at-precision element this is a certified lower bound.
    long valuation() const { return val_; }
    long abs_precision() const { return aprec_; }
    long rel_precision() const { return is_zero() ? 0 : aprec_ - val_; }
    const mpz_class& unit_part() const { return unit_; }

    bool is_unit() const { return !is_zero() && val_ == 0; }

    // unit * p^val as an exact rational representative of the coset.
    mpq_class rational_rep() const {
        if (is_zero()) return mpq_class(0);
        mpq_class r(unit_);
        if (val_ >= 0)
            r *= mpq_class(pow_long(p_, (unsigned long)val_));
        else
            r /= mpq_class(pow_long(p_, (unsigned long)(-val_)));
        r.canonicalize();
        return r;
    }

    // integer representative mod p^aprec (requires val >= 0)
    mpz_class integer_rep() const {
        if (is_zero()) return mpz_class(0);
        if (val_ < 0) throw std::domain_error("integer_rep: negative valuation");
        return unit_ * pow_long(p_, (unsigned long)val_);
    }

    PadicNumber operator-() const {
        if (is_zero()) return *this;
        PadicNumber r = *this;
        mpz_class mod = pow_long(p_, (unsigned long)rel_precision());
        r.unit_ = mod_pos(-unit_, mod);
        return r;
    }

    PadicNumber operator+(const PadicNumber& o) const {
        same_prime(o);
        long ap = std::min(aprec_, o.aprec_);
        long base = std::min(val_, o.val_);
        if (base >= ap) return zero(p_, ap);
        long rel = ap - base;
        mpz_class mod = pow_long(p_, (unsigned long)rel);
        mpz_class m = 0;
        if (!is_zero()) m += unit_ * pow_long(p_, (unsigned long)(val_ - base));
        if (!o.is_zero()) m += o.unit_ * pow_long(p_, (unsigned long)(o.val_ - base));
        return make(p_, base, mod_pos(m, mod), rel);
    }
    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }

    PadicNumber operator*(const PadicNumber& o) const {
        same_prime(o);
        if (is_zero() || o.is_zero()) {
            // |xy| <= p^-(lb(x) + lb(y)) with lb = certified valuation bound
            long lb1 = is_zero() ? aprec_ : val_;
            long lb2 = o.is_zero() ? o.aprec_ : o.val_;
            return zero(p_, clamp_prec(lb1 + lb2));
        }
        long rel = std::min(rel_precision(), o.rel_precision());
        mpz_class mod = pow_long(p_, (unsigned long)rel);
        return make(p_, val_ + o.val_, mod_pos(unit_ * o.unit_, mod), rel);
    }

    PadicNumber inverse() const {
        if (is_zero())
            throw insufficient_precision("inverse of zero-at-precision element");
        long rel = rel_precision();
        mpz_class mod = pow_long(p_, (unsigned long)rel);
        PadicNumber r;
        r.p_ = p_;
        r.val_ = -val_;
        r.aprec_ = -val_ + rel;
        r.unit_ = mod_inverse(unit_, mod);
        return r;
    }

    PadicNumber operator/(const PadicNumber& o) const { return *this * o.inverse(); }

    PadicNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        PadicNumber acc = one(p_, is_zero() ? aprec_ : rel_precision());
        PadicNumber b = *this;
        long ee = e;
        while (ee > 0) {
            if (ee & 1) acc = acc * b;
            b = b * b;
            ee >>= 1;
        }
        return acc;
    }

    // multiply by p^k exactly
    PadicNumber shift(long k) const {
        PadicNumber r = *this;
        r.val_ += k;
        r.aprec_ = clamp_prec(r.aprec_ + k);
        return r;
    }

    // truncate to absolute precision ap (no-op if already coarser)
    PadicNumber truncate(long ap) const {
        if (aprec_ <= ap) return *this;
        if (is_zero() || val_ >= ap) return zero(p_, ap);
        PadicNumber r = *this;
        r.aprec_ = ap;
        r.unit_ = mod_pos(unit_, pow_long(p_, (unsigned long)(ap - val_)));
        return r;
    }

    // equality of the represented cosets at the joint precision
    bool same_value(const PadicNumber& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;

    // base-p digits of the unit part, least significant first
    std::vector<long> unit_digits() const {
        std::vector<long> d;
        mpz_class u = unit_;
        long n = rel_precision();
        for (long i = 0; i < n; ++i) {
            mpz_class q, r;
            mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), (unsigned long)p_);
            d.push_back(r.get_si());
            u = q;
        }
        return d;
    }

  private:
    static long check_prime(long p) {
        if (p < 3 || p % 2 == 0)
            throw std::domain_error("prime must be odd and >= 3");
        return p;
    }
    static long clamp_prec(long a) { return std::min(a, kExactPrec); }
    void same_prime(const PadicNumber& o) const {
        if (p_ != o.p_) throw std::domain_error("mixed primes");
    }

    // value p^base * m, with m known mod p^rel
    static PadicNumber make(long p, long base, const mpz_class& m_in, long rel) {
        PadicNumber x;
        x.p_ = p;
        if (rel <= 0) return zero(p, base);
        mpz_class m = mod_pos(m_in, pow_long(p, (unsigned long)rel));
        if (m == 0) return zero(p, clamp_prec(base + rel));
        long w = vp_mpz(m, p);
        x.val_ = base + w;
        x.aprec_ = clamp_prec(base + rel);
        x.unit_ = m / mpz_pow(mpz_class(p), (unsigned long)w);
        x.normalize_unit(x.aprec_ - x.val_);
        return x;
    }

    void normalize_unit(long rel) {
        unit_ = mod_pos(unit_, pow_long(p_, (unsigned long)rel));
        if (unit_ == 0) {
            val_ = aprec_;
        }
    }

    long p_;
    long val_;
    long aprec_;
    mpz_class unit_;
};

// Teichmuller lift: the (p-1)-st root of unity congruent to a mod p.
PadicNumber teichmuller(long p, const mpz_class& a, long aprec);

// log on 1 + pZ_p; exp on pZ_p (p odd). Series cutoffs are derived from the
// argument's precision. Results carry whatever precision survives the
// denominator valuations.
PadicNumber padic_log(const PadicNumber& x);
PadicNumber padic_exp(const PadicNumber& x);

// binomial coefficient C(x, n) for p-adic x
PadicNumber padic_binomial(const PadicNumber& x, unsigned long n);

}  // namespace padl
