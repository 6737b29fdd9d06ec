#include "quatks/hilbert.hpp"

#include <algorithm>
#include <set>

namespace quatks {

namespace {

// v_p of a nonzero rational.
long val_p(const Rat& q, const Int& p) {
    long v = 0;
    Int n = q.get_num();
    Int d = q.get_den();
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        d /= p;
        --v;
    }
    return v;
}

// Legendre symbol of a rational p-adic unit u modulo an odd prime p.
int legendre_unit(const Rat& u, const Int& p) {
    int ln = mpz_legendre(u.get_num().get_mpz_t(), p.get_mpz_t());
    int ld = mpz_legendre(u.get_den().get_mpz_t(), p.get_mpz_t());
    return ln * ld;
}

// u mod 8 for an odd rational unit (den odd => den^-1 = den mod 8).
long mod8_unit(const Rat& u) {
    Int m = u.get_num() * u.get_den();
    Int r = m % 8;
    if (r < 0) r += 8;
    return r.get_si();
}

int eps2(long m8) { return (m8 % 4 == 3) ? 1 : 0; }          // (u-1)/2 mod 2
int omega2(long m8) { return (m8 == 3 || m8 == 5) ? 1 : 0; }  // (u^2-1)/8 mod 2

std::set<Int> odd_prime_divisors(const Int& n) {
    std::set<Int> out;
    Int m = abs(n);
    while (m % 2 == 0) m /= 2;
    for (Int d = 3; d * d <= m; d += 2) {
        if (m % d == 0) {
            out.insert(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.insert(m);
    return out;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
    if (!v.finite) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.p;
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("hilbert symbol at non-prime " + p.get_str());

    long alpha = val_p(a, p);
    long beta = val_p(b, p);
    Rat pq(p);
    Rat u = a, w = b;
    for (long t = 0; t < alpha; ++t) u /= pq;
    for (long t = 0; t > alpha; --t) u *= pq;
    for (long t = 0; t < beta; ++t) w /= pq;
    for (long t = 0; t > beta; --t) w *= pq;

    if (p == 2) {
        long u8 = mod8_unit(u), w8 = mod8_unit(w);
        long e = eps2(u8) * eps2(w8) + alpha * omega2(w8) + beta * omega2(u8);
        return (e % 2 != 0) ? -1 : 1;
    }

    // (a,b)_p = (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha
    int s = 1;
    Int half = (p - 1) / 2;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && mpz_odd_p(half.get_mpz_t())) s = -s;
    if (beta % 2 != 0) s *= legendre_unit(u, p);
    if (alpha % 2 != 0) s *= legendre_unit(w, p);
    return s;
}

std::vector<Place> ramified_places(const Rat& a, const Rat& b) {
    std::set<Int> candidates = odd_prime_divisors(a.get_num() * a.get_den() * b.get_num() *
                                                  b.get_den());
    candidates.insert(2);

    std::vector<Place> out;
    for (const Int& p : candidates) {
        Place v = Place::prime(p);
        if (hilbert_symbol(a, b, v) == -1) out.push_back(v);
    }
    if (hilbert_symbol(a, b, Place::real()) == -1) out.push_back(Place::real());
    if (out.size() % 2 != 0)
        throw std::logic_error("hilbert product formula violated (internal error)");
    return out;
}

Int discriminant(const QuatAlgebra& alg) {
    Int d = 1;
    for (const Place& v : ramified_places(alg.a, alg.b))
        if (v.finite) d *= v.p;
    return d;
}

}  // namespace quatks
