#include "symki/polynomial.hpp"

#include "symki/matrix.hpp"

namespace symki {
namespace poly {

void normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qpoly_from(const ZPoly& p) {
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
    normalize(q);
    return q;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw precondition_error("poly divmod: division by zero polynomial");
    QPoly r(a), q;
    const int db = degree(b);
    if (degree(a) >= db) q.assign(a.size() - b.size() + 1, Rational(0));
    while (degree(r) >= db) {
        const int dr = degree(r);
        Rational c = r.back() / b.back();
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        normalize(r);
    }
    return {q, r};
}

XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    // Standard extended Euclid, then make g monic.
    QPoly r0 = a, r1 = b;
    QPoly u0 = {Rational(1)}, u1 = {};
    QPoly v0 = {}, v1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly u2 = sub(u0, mul(q, u1));
        QPoly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.empty()) return {r0, u0, v0};
    Rational lead = r0.back();
    return {scale(r0, 1 / lead), scale(u0, 1 / lead), scale(v0, 1 / lead)};
}

ZPoly cyclotomic(unsigned n) {
    if (n == 0) throw precondition_error("cyclotomic: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed over Q and
    // known to be integral.
    QPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        QPoly phi_d = qpoly_from(cyclotomic(d));
        auto [q, r] = divmod(num, phi_d);
        if (!r.empty()) throw std::logic_error("cyclotomic: non-exact division");
        num = std::move(q);
    }
    ZPoly out(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i].get_den() != 1) throw std::logic_error("cyclotomic: non-integer coefficient");
        out[i] = num[i].get_num();
    }
    return out;
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
    ZPoly ta(a), tb(b);
    while (!ta.empty() && ta.back() == 0) ta.pop_back();
    while (!tb.empty() && tb.back() == 0) tb.pop_back();
    if (ta.empty() || tb.empty()) return 0;
    const std::size_t m = ta.size() - 1, n = tb.size() - 1;
    if (m == 0 && n == 0) return 1;
    // Sylvester matrix: n rows of a's coefficients, m rows of b's.
    IntMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = ta[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = tb[n - j];
    return s.det();
}

}  // namespace poly
}  // namespace symki
