#include "symki/rational.hpp"

#include <mutex>
#include <vector>

namespace symki {
namespace exact {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw precondition_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_strings(const std::string& num, const std::string& den) {
    return make_rational(Integer(num), Integer(den));
}

Integer von_staudt_clausen_denominator(unsigned n) {
    if (n == 0 || n % 2 != 0) throw precondition_error("von_staudt_clausen_denominator: n must be even and positive");
    Integer d = 1;
    for (unsigned p = 2; p <= n + 1; ++p) {
        if (!is_prime(p)) continue;
        if (n % (p - 1) == 0) d *= p;
    }
    return d;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo;  // guarded by bernoulli_mutex

// Extends the memo table through index n using the defining recursion
//   sum_{j=0}^{n} C(n+1, j) B_j = 0   (n >= 1),   B_0 = 1.
void extend_bernoulli_locked(unsigned n) {
    if (bernoulli_memo.empty()) bernoulli_memo.emplace_back(1);
    for (unsigned m = bernoulli_memo.size(); m <= n; ++m) {
        if (m > 2 && m % 2 == 1) {
            bernoulli_memo.emplace_back(0);
            continue;
        }
        Rational acc(0);
        mpz_class binom;
        for (unsigned j = 0; j < m; ++j) {
            if (j > 2 && j % 2 == 1) continue;  // odd Bernoulli numbers vanish
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            acc += Rational(binom) * bernoulli_memo[j];
        }
        Rational value = -acc / Rational(m + 1);
        if (m % 2 == 0) {
            // von Staudt-Clausen: den(B_m) = prod of primes p with (p-1) | m.
            if (value.get_den() != von_staudt_clausen_denominator(m))
                throw std::logic_error("bernoulli: von Staudt-Clausen check failed at n=" + std::to_string(m));
        }
        bernoulli_memo.push_back(value);
    }
}

}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (n >= bernoulli_memo.size()) extend_bernoulli_locked(n);
    return bernoulli_memo[n];
}

Rational zeta_neg(unsigned k) {
    if (k == 0) throw precondition_error("zeta_neg: k must be >= 1");
    return -bernoulli(2 * k) / Rational(2 * k);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    Integer d = 3;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

FactorizationResult numerator_prime_divisors(const Rational& r, const Integer& bound) {
    if (r == 0) throw precondition_error("numerator_prime_divisors: zero input");
    if (bound < 1) throw precondition_error("numerator_prime_divisors: bound must be positive");
    FactorizationResult out;
    Integer n = abs(Integer(r.get_num()));
    Integer d = 2;
    while (n > 1 && d <= bound && d * d <= n) {
        if (n % d == 0) {
            out.primes.insert(d);
            while (n % d == 0) n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1 && d * d > n) {
        // n is prime: no divisor up to its square root.
        if (n <= bound) {
            out.primes.insert(n);
            n = 1;
        }
    }
    out.residual = (n > 1);
    return out;
}

}  // namespace exact
}  // namespace symki
