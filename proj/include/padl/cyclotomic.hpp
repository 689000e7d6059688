#pragma once

#include <optional>
#include <vector>

#include "padl/padic.hpp"

namespace padl {

// Element of Z_p[zeta] with zeta a primitive p^level-th root of unity,
// stored as a coefficient vector of length phi(p^level) reduced modulo the
// p^level-th cyclotomic polynomial. Level 0 is the scalar ring Q_p itself.
//
// Each coefficient tracks its own p-adic precision. min_valuation() is a
// certified lower bound for the (ramified) valuation of the element; for
// level 0 it is exact.
class CyclotomicPadic {
  public:
    CyclotomicPadic() : p_(0), level_(0) {}

    static CyclotomicPadic scalar(const PadicNumber& x) {
        CyclotomicPadic c;
        c.p_ = x.prime();
        c.level_ = 0;
        c.coeff_ = {x};
        return c;
    }
    static CyclotomicPadic zero(long p, int level, long aprec);
    static CyclotomicPadic one(long p, long aprec) {
        return scalar(PadicNumber::one(p, aprec));
    }
    // zeta_{p^level}^e at the given coefficient precision
    static CyclotomicPadic root_power(long p, int level, const mpz_class& e, long aprec);

    long prime() const { return p_; }
    int level() const { return level_; }
    long degree() const { return (long)coeff_.size(); }
    const std::vector<PadicNumber>& coeffs() const { return coeff_; }

    bool is_zero() const;
    // min over coefficients of the certified valuation; lower bound for v_p
    long min_valuation() const;
    long min_abs_precision() const;

    CyclotomicPadic lift_to_level(int n) const;

    CyclotomicPadic operator+(const CyclotomicPadic& o) const;
    CyclotomicPadic operator-(const CyclotomicPadic& o) const;
    CyclotomicPadic operator-() const;
    CyclotomicPadic operator*(const CyclotomicPadic& o) const;
    CyclotomicPadic operator*(const PadicNumber& s) const;
    CyclotomicPadic operator/(const PadicNumber& s) const;

    bool same_value(const CyclotomicPadic& o) const { return (*this - o).is_zero(); }

    // level-0 / rational content extraction; nullopt if a nonconstant
    // coordinate is visibly nonzero
    std::optional<PadicNumber> as_scalar() const;

    std::string to_string() const;

  private:
    static long phi_pn(long p, int n);
    void reduce_from_powers(std::vector<PadicNumber>& raw);

    long p_;
    int level_;
    std::vector<PadicNumber> coeff_;
};

inline CyclotomicPadic operator*(const PadicNumber& s, const CyclotomicPadic& c) {
    return c * s;
}

}  // namespace padl
