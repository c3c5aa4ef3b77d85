// Exact rational arithmetic, Bernoulli numbers, zeta values at negative odd
// integers, and numerator factorization by trial division.  Everything here
// is deterministic and total on its stated domain.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace symki {

// Thrown when an operation is called outside its stated domain.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed the configured resource budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace exact {

// Canonical rational: gcd(|num|, den) = 1 and den >= 1.  mpq_class maintains
// exactly this normal form, so it is the representation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational rational_from_strings(const std::string& num, const std::string& den);

// B_n with the convention B_0 = 1, B_1 = -1/2, fixed by the recursion
// sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1.  Memoized; safe for concurrent
// callers.  For even n the von Staudt-Clausen denominator is checked before
// the value is handed out.
Rational bernoulli(unsigned n);

// prod { p prime : (p-1) | n } for even n >= 2; equals den(B_n).
Integer von_staudt_clausen_denominator(unsigned n);

// zeta(1-2k) = -B_{2k} / (2k), k >= 1.
Rational zeta_neg(unsigned k);

struct FactorizationResult {
    std::set<Integer> primes;  // prime divisors of |numerator| that are <= bound
    bool residual;             // an unfactored cofactor > 1 remains
};

// Trial division of |numerator(r)| by primes up to `bound`.  Deterministic;
// no probabilistic primality anywhere.  r must be nonzero.
FactorizationResult numerator_prime_divisors(const Rational& r, const Integer& bound);

bool is_prime(const Integer& n);  // deterministic trial division

}  // namespace exact
}  // namespace symki
