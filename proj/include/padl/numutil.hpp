#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer/rational helpers shared across the library.

namespace padl {

inline mpz_class mpz_pow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpz_class pow_long(long b, unsigned long e) { return mpz_pow(mpz_class(b), e); }

// p-adic valuation of a nonzero integer.
inline long vp_mpz(const mpz_class& n, long p) {
    if (n == 0) throw std::domain_error("vp of zero");
    mpz_class m = n, q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p);
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

inline long vp_mpq(const mpq_class& x, long p) {
    if (x == 0) throw std::domain_error("vp of zero");
    long v = vp_mpz(x.get_num(), p) - vp_mpz(x.get_den(), p);
    return v;
}

inline mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

inline mpz_class mpz_binomial(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// v_p(n!) via Legendre.
inline long vp_factorial(unsigned long n, long p) {
    long v = 0;
    unsigned long q = n;
    while (q >= (unsigned long)p) {
        q /= (unsigned long)p;
        v += (long)q;
    }
    return v;
}

inline long ilog_floor(unsigned long n, long base) {
    long e = 0;
    unsigned long q = n;
    while (q >= (unsigned long)base) {
        q /= (unsigned long)base;
        ++e;
    }
    return e;
}

// Smallest primitive root mod p that stays primitive mod p^n (p odd).
long primitive_root_mod_pn(long p, int n);

// Bernoulli numbers B_0..B_n (B_1 = -1/2), cached.
const std::vector<mpq_class>& bernoulli_table(unsigned long n);
inline mpq_class bernoulli(unsigned long n) { return bernoulli_table(n)[n]; }

// Bernoulli polynomial B_k(x).
mpq_class bernoulli_poly(unsigned long k, const mpq_class& x);

// Positive generator of the Z-module generated by a finite set of rationals.
// Zero for the empty/zero set.
mpq_class rational_content(const std::vector<mpq_class>& xs);

// Parse "3", "-1.5", "7/2" into an exact rational.
mpq_class parse_rational(const std::string& s);

struct Cusp {
    mpz_class num, den;  // primitive: gcd = 1, (1,0) is infinity
};

}  // namespace padl
