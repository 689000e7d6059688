#include "padl/numutil.hpp"

#include <algorithm>
#include <mutex>

namespace padl {

long primitive_root_mod_pn(long p, int n) {
    if (p < 3) throw std::domain_error("primitive_root_mod_pn: p must be odd");
    // factor p-1
    std::vector<long> fac;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (fac.empty() || fac.back() != d) fac.push_back(d);
            m /= d;
        }
    if (m > 1) fac.push_back(m);

    auto is_root_mod_p = [&](long g) {
        for (long q : fac) {
            mpz_class r;
            mpz_class base(g), mod(p);
            mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (unsigned long)((p - 1) / q), mod.get_mpz_t());
            if (r == 1) return false;
        }
        return true;
    };
    for (long g = 2; g < p; ++g) {
        if (!is_root_mod_p(g)) continue;
        if (n == 1) return g;
        // g primitive mod p^2 implies primitive mod all p^n
        mpz_class r, base(g), mod = pow_long(p, 2);
        mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (unsigned long)(p - 1), mod.get_mpz_t());
        if (r != 1) return g;
        return g + p;  // g+p is then primitive mod p^2
    }
    throw std::logic_error("primitive root not found");
}

namespace {
std::vector<mpq_class> g_bern{mpq_class(1)};
std::mutex g_bern_mutex;
}  // namespace

const std::vector<mpq_class>& bernoulli_table(unsigned long n) {
    std::lock_guard<std::mutex> lk(g_bern_mutex);
    while (g_bern.size() <= n) {
        unsigned long m = g_bern.size();
        // sum_{j<m} C(m+1, j) B_j = 0
        mpq_class s(0);
        for (unsigned long j = 0; j < m; ++j)
            s += mpq_class(mpz_binomial(mpz_class(m + 1), j)) * g_bern[j];
        mpq_class b = -s / mpq_class(m + 1);
        b.canonicalize();
        g_bern.push_back(b);
    }
    return g_bern;
}

mpq_class bernoulli_poly(unsigned long k, const mpq_class& x) {
    const auto& B = bernoulli_table(k);
    mpq_class acc(0), xpow(1);
    // B_k(x) = sum_i C(k,i) B_{k-i} x^i
    for (unsigned long i = 0; i <= k; ++i) {
        acc += mpq_class(mpz_binomial(mpz_class(k), i)) * B[k - i] * xpow;
        xpow *= x;
    }
    acc.canonicalize();
    return acc;
}

mpq_class rational_content(const std::vector<mpq_class>& xs) {
    mpz_class L(1);
    for (const auto& x : xs)
        if (x != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g(0);
    for (const auto& x : xs) {
        if (x == 0) continue;
        mpz_class scaled = x.get_num() * (L / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) return mpq_class(0);
    mpq_class c(g, L);
    c.canonicalize();
    return c;
}

mpq_class parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    mpz_class ip = head.empty() || head == "-" ? mpz_class(0) : mpz_class(head);
    if (neg) ip = -ip;
    mpz_class den = mpz_pow(mpz_class(10), tail.size());
    mpz_class frac = tail.empty() ? mpz_class(0) : mpz_class(tail);
    mpq_class q(ip * den + frac, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace padl
