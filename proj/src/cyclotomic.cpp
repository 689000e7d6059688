#include "padl/cyclotomic.hpp"

#include <sstream>

namespace padl {

long CyclotomicPadic::phi_pn(long p, int n) {
    if (n == 0) return 1;
    long d = p - 1;
    for (int i = 1; i < n; ++i) d *= p;
    return d;
}

CyclotomicPadic CyclotomicPadic::zero(long p, int level, long aprec) {
    CyclotomicPadic c;
    c.p_ = p;
    c.level_ = level;
    c.coeff_.assign(phi_pn(p, level), PadicNumber::zero(p, aprec));
    return c;
}

CyclotomicPadic CyclotomicPadic::root_power(long p, int level, const mpz_class& e, long aprec) {
    if (level == 0) return scalar(PadicNumber::one(p, aprec));
    mpz_class pn = pow_long(p, (unsigned long)level);
    long idx = mpz_class(mod_pos(e, pn)).get_si();
    CyclotomicPadic c;
    c.p_ = p;
    c.level_ = level;
    std::vector<PadicNumber> raw(pn.get_si(), PadicNumber::zero(p, aprec));
    raw[idx] = PadicNumber::one(p, aprec);
    c.reduce_from_powers(raw);
    return c;
}

// Input: coefficients on exponents 0..p^level-1 (mod X^{p^level} - 1 already).
// Reduce modulo Phi_{p^level}: X^{phi + t} = -sum_{i<p-1} X^{i p^{level-1} + t}
// for 0 <= t < p^{level-1}.
void CyclotomicPadic::reduce_from_powers(std::vector<PadicNumber>& raw) {
    long phi = phi_pn(p_, level_);
    long pl1 = phi / (p_ - 1);  // p^{level-1}
    coeff_.assign(phi, PadicNumber::zero(p_, PadicNumber::kExactPrec));
    for (long e = 0; e < (long)raw.size(); ++e) {
        if (e < phi) {
            coeff_[e] = coeff_[e] + raw[e];
        } else {
            long t = e - phi;  // t < p^{level-1}
            for (long i = 0; i < p_ - 1; ++i)
                coeff_[i * pl1 + t] = coeff_[i * pl1 + t] - raw[e];
        }
    }
}

bool CyclotomicPadic::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

long CyclotomicPadic::min_valuation() const {
    long v = PadicNumber::kExactPrec;
    for (const auto& c : coeff_) v = std::min(v, c.valuation());
    return v;
}

long CyclotomicPadic::min_abs_precision() const {
    long v = PadicNumber::kExactPrec;
    for (const auto& c : coeff_) v = std::min(v, c.abs_precision());
    return v;
}

CyclotomicPadic CyclotomicPadic::lift_to_level(int n) const {
    if (n < level_) throw std::domain_error("lift_to_level: cannot lower level");
    if (n == level_) return *this;
    long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p_;
    long stride = 1;
    for (int i = 0; i < n - level_; ++i) stride *= p_;  // zeta_old = zeta_new^stride
    CyclotomicPadic c;
    c.p_ = p_;
    c.level_ = n;
    std::vector<PadicNumber> raw(pn, PadicNumber::zero(p_, min_abs_precision()));
    if (level_ == 0) {
        raw[0] = coeff_[0];
    } else {
        for (long e = 0; e < (long)coeff_.size(); ++e) raw[(e * stride) % pn] = coeff_[e];
    }
    c.reduce_from_powers(raw);
    return c;
}

CyclotomicPadic CyclotomicPadic::operator+(const CyclotomicPadic& o) const {
    if (p_ != o.p_) throw std::domain_error("mixed primes");
    int n = std::max(level_, o.level_);
    CyclotomicPadic a = lift_to_level(n), b = o.lift_to_level(n);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] = a.coeff_[i] + b.coeff_[i];
    return a;
}

CyclotomicPadic CyclotomicPadic::operator-() const {
    CyclotomicPadic a = *this;
    for (auto& c : a.coeff_) c = -c;
    return a;
}

CyclotomicPadic CyclotomicPadic::operator-(const CyclotomicPadic& o) const {
    return *this + (-o);
}

CyclotomicPadic CyclotomicPadic::operator*(const CyclotomicPadic& o) const {
    if (p_ != o.p_) throw std::domain_error("mixed primes");
    int n = std::max(level_, o.level_);
    CyclotomicPadic a = lift_to_level(n), b = o.lift_to_level(n);
    if (n == 0) return scalar(a.coeff_[0] * b.coeff_[0]);
    long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p_;
    std::vector<PadicNumber> raw(pn, PadicNumber::zero(p_, PadicNumber::kExactPrec));
    for (long i = 0; i < (long)a.coeff_.size(); ++i) {
        if (a.coeff_[i].is_zero() && a.coeff_[i].abs_precision() >= PadicNumber::kExactPrec) continue;
        for (long j = 0; j < (long)b.coeff_.size(); ++j) {
            long e = (i + j) % pn;
            raw[e] = raw[e] + a.coeff_[i] * b.coeff_[j];
        }
    }
    CyclotomicPadic c;
    c.p_ = p_;
    c.level_ = n;
    c.reduce_from_powers(raw);
    return c;
}

CyclotomicPadic CyclotomicPadic::operator*(const PadicNumber& s) const {
    CyclotomicPadic a = *this;
    for (auto& c : a.coeff_) c = c * s;
    return a;
}

CyclotomicPadic CyclotomicPadic::operator/(const PadicNumber& s) const {
    CyclotomicPadic a = *this;
    for (auto& c : a.coeff_) c = c / s;
    return a;
}

std::optional<PadicNumber> CyclotomicPadic::as_scalar() const {
    if (level_ == 0) return coeff_[0];
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return std::nullopt;
    return coeff_[0];
}

std::string CyclotomicPadic::to_string() const {
    std::ostringstream os;
    os << "[level " << level_ << "] ";
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeff_[i].to_string() << ")";
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0 (prec " << min_abs_precision() << ")";
    return os.str();
}

}  // namespace padl
