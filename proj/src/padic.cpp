#include "padl/padic.hpp"

#include <sstream>

namespace padl {

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << p_ << "^" << aprec_ << ")";
        return os.str();
    }
    os << unit_;
    if (val_ != 0) os << "*" << p_ << "^" << val_;
    os << " + O(" << p_ << "^" << aprec_ << ")";
    return os.str();
}

PadicNumber teichmuller(long p, const mpz_class& a, long aprec) {
    if (aprec < 1) throw std::domain_error("teichmuller: need positive precision");
    mpz_class mod = pow_long(p, (unsigned long)aprec);
    mpz_class x = mod_pos(a, mod);
    if (x % p == 0) throw std::domain_error("teichmuller: argument divisible by p");
    // x -> x^p gains at least one digit of contact per pass
    for (long i = 0; i <= aprec + 1; ++i) {
        mpz_class y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), (unsigned long)p, mod.get_mpz_t());
        if (y == x) break;
        x = y;
    }
    return PadicNumber::from_integer(p, x, aprec);
}

namespace {
// exact integer divisor carrying just enough precision not to clip the dividend
PadicNumber exact_div(const PadicNumber& num, const mpz_class& d) {
    long p = num.prime();
    long vd = d == 0 ? 0 : vp_mpz(d, p);
    long prec = std::max<long>(1, num.rel_precision() + vd + 1);
    return num / PadicNumber::from_integer(p, d, prec);
}
}  // namespace

PadicNumber padic_log(const PadicNumber& x) {
    long p = x.prime();
    PadicNumber z = x - PadicNumber::one(p, x.abs_precision());
    if (z.is_zero()) return PadicNumber::zero(p, z.abs_precision());
    long vz = z.valuation();
    if (vz < 1) throw std::domain_error("padic_log: argument not congruent to 1 mod p");
    long target = x.abs_precision();
    PadicNumber acc = PadicNumber::zero(p, x.abs_precision());
    PadicNumber zpow = z;
    // v(z^n/n) >= n*vz - floor(log_p n), nondecreasing in n for vz >= 1
    for (unsigned long n = 1; (long)n * vz - ilog_floor(n, p) < target; ++n) {
        PadicNumber term = exact_div(zpow, mpz_class(n));
        if (n % 2 == 0) term = -term;
        acc = acc + term;
        zpow = zpow * z;
    }
    return acc;
}

PadicNumber padic_exp(const PadicNumber& x) {
    long p = x.prime();
    if (x.is_zero()) return PadicNumber::one(p, x.abs_precision());
    long vx = x.valuation();
    if (vx < 1) throw std::domain_error("padic_exp: argument valuation must be >= 1");
    long target = x.abs_precision();
    PadicNumber acc = PadicNumber::one(p, target);
    PadicNumber term = PadicNumber::one(p, target);
    // v(x^n/n!) >= n*vx - (n-1)/(p-1), strictly increasing for vx >= 1, p odd
    for (unsigned long n = 1; (long)n * vx * (p - 1) - ((long)n - 1) < target * (p - 1); ++n) {
        term = exact_div(term * x, mpz_class(n));
        acc = acc + term;
    }
    return acc;
}

PadicNumber padic_binomial(const PadicNumber& x, unsigned long n) {
    long p = x.prime();
    if (n == 0) return PadicNumber::one(p, x.abs_precision());
    PadicNumber acc = PadicNumber::one(p, x.abs_precision());
    for (unsigned long i = 0; i < n; ++i)
        acc = acc * (x - PadicNumber::from_integer(p, mpz_class(i), x.abs_precision()));
    return exact_div(acc, factorial(n));
}

}  // namespace padl
