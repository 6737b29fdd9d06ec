#pragma once

#include <string>
#include <vector>

#include "quatks/rational.hpp"

namespace quatks {

// Truncated unramified quadratic extension (Z/p^N)[omega] / (omega^2 - s),
// s the smallest quadratic non-residue mod p. Odd p only; N >= 2 so that the
// element p stays visible below the truncation.
class Zp2 {
public:
    struct Elem {
        Int u, v;  // u + v omega
        bool operator==(const Elem& o) const { return u == o.u && v == o.v; }
    };

    Zp2(long p, int N);

    long p() const { return p_; }
    int precision() const { return N_; }
    const Int& modulus() const { return pN_; }
    long s() const { return s_; }

    Elem make(Int u, Int v) const { return {reduce(u), reduce(v)}; }
    Elem from_int(long n) const { return make(Int(n), 0); }
    Elem zero() const { return {0, 0}; }
    Elem one() const { return {1, 0}; }
    Elem omega() const { return {0, 1}; }

    Elem add(const Elem& a, const Elem& b) const { return make(a.u + b.u, a.v + b.v); }
    Elem sub(const Elem& a, const Elem& b) const { return make(a.u - b.u, a.v - b.v); }
    Elem neg(const Elem& a) const { return make(-a.u, -a.v); }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(a.u * b.u + s_ * a.v * b.v, a.u * b.v + a.v * b.u);
    }
    Elem frobenius(const Elem& a) const { return make(a.u, -a.v); }
    Int trace(const Elem& a) const { return reduce(2 * a.u); }
    Int norm(const Elem& a) const { return reduce(a.u * a.u - s_ * a.v * a.v); }

    bool is_zero(const Elem& a) const { return a.u == 0 && a.v == 0; }
    bool is_unit(const Elem& a) const { return a.u % p_ != 0 || a.v % p_ != 0; }
    Elem inv(const Elem& a) const;  // throws std::domain_error on non-units

    // p-adic valuation min(v(u), v(v)), clamped to N (so valuation(0) = N).
    int valuation(const Elem& a) const;

    std::string str(const Elem& a) const;

private:
    long p_;
    int N_;
    Int pN_;
    long s_;

    Int reduce(const Int& n) const {
        Int r = n % pN_;
        if (r < 0) r += pN_;
        return r;
    }
};

// O_D = Zp2 + Zp2 j with j^2 = p and j x = conj(x) j: the maximal order of
// the p-adic quaternion division algebra, truncated mod p^N.
class ODRing {
public:
    struct Elem {
        Zp2::Elem x, y;  // x + y j
        bool operator==(const Elem& o) const { return x == o.x && y == o.y; }
    };

    explicit ODRing(Zp2 base) : R_(std::move(base)) {}
    const Zp2& base() const { return R_; }

    Elem make(Zp2::Elem x, Zp2::Elem y) const { return {std::move(x), std::move(y)}; }
    Elem one() const { return {R_.one(), R_.zero()}; }
    Elem j() const { return {R_.zero(), R_.one()}; }

    Elem add(const Elem& a, const Elem& b) const {
        return {R_.add(a.x, b.x), R_.add(a.y, b.y)};
    }
    // (x1 + y1 j)(x2 + y2 j) = (x1 x2 + p y1 conj(y2)) + (x1 y2 + y1 conj(x2)) j
    Elem mul(const Elem& a, const Elem& b) const;
    Elem conj(const Elem& a) const { return {R_.frobenius(a.x), R_.neg(a.y)}; }
    Int trd(const Elem& a) const { return R_.trace(a.x); }
    Int nrd(const Elem& a) const;  // N(x) - p N(y), in the base ring

private:
    Zp2 R_;
};

using Mat2z = std::array<std::array<Zp2::Elem, 2>, 2>;

Mat2z mat2z_mul(const Zp2& R, const Mat2z& a, const Mat2z& b);
Zp2::Elem mat2z_det(const Zp2& R, const Mat2z& m);

// The splitting O_D (x) Zp2 -> 2x2 matrices over Zp2 with (2,1) entry
// divisible by p: (x + y j) (x) a -> [[a x, a y],[p a conj(y), a conj(x)]].
Mat2z tau_isomorphism(const ODRing& ring, const ODRing::Elem& d, const Zp2::Elem& a);

enum class ModuleClass { Standard, Twisted };

const char* module_class_name(ModuleClass c);

// Rank-2 module with basis (x, y): e1 M = R x, e2 M = R y, the Zp2-part of
// O_D acting diag(beta, conj beta), and j x = a y, j y = b x with ab = p.
// Standard class: (a,b) = (p,1) up to units; Twisted: (1,p).
struct ODModule {
    Zp2::Elem a, b;
};

// Checks ab = p; rejects presentations where neither a nor b is a unit.
ODModule make_module(const Zp2& R, Zp2::Elem a, Zp2::Elem b);

// Standard iff b is a unit, Twisted iff a is (equivalently: j maps e1 M onto
// e2 M mod p exactly in the Twisted class).
ModuleClass classify_module(const Zp2& R, const ODModule& m);

// Precompose the action with ad(mu) (reduced to ad(j) by mu = j * unit):
// relabels the idempotent components and swaps (a,b). Involution; swaps the
// class.
ODModule twist_by_ad_mu(const ODModule& m);

// Action of x + y j on the basis (x, y): [[x, b y],[a conj(y), conj(x)]].
// Its determinant is nrd (the determinant condition), for every (a,b).
Mat2z module_action(const Zp2& R, const ODModule& m, const ODRing::Elem& g);

struct HomReport {
    bool same_class = false;
    Zp2::Elem gen_alpha, gen_beta;  // generator: f(x') = alpha x, f(y') = beta y
    bool rank_one = false;          // solution set is exactly { lambda * gen }
    int det_valuation = -1;         // v_p(alpha * beta)
};

// Hom_{O_D}(T', T) for the component-preserving maps f(x') = alpha x,
// f(y') = beta y; free of rank 1, generator (1, p) for Twisted -> Standard.
HomReport hom_module(const Zp2& R, const ODModule& Tprime, const ODModule& T);

// Valuation of the coefficient the induced map on determinants multiplies
// by: v_p(alpha beta). 1 for distinct classes, 0 for equal ones.
int det_image(const Zp2& R, const HomReport& hom);

// --- good (split) primes -------------------------------------------------

using Mat2i = std::array<std::array<Int, 2>, 2>;

// (Z/p^N)^2 with the literal M_2(Z/p^N)-action, expressed in an optional
// unimodular basis (identity by default).
struct SplitModule {
    long p;
    int N;
    Mat2i basis;

    SplitModule(long p_, int N_);
    SplitModule(long p_, int N_, Mat2i basis_);
};

struct SplitReport {
    bool idempotents_ok = false;  // complementary rank-1 idempotents, trace 1
    bool swap_ok = false;         // eps = [[0,1],[1,0]] swaps the components
    bool hom_rank_one = false;    // Hom(ad(eps)-twist, id) free rank 1
    int det_valuation = -1;       // 0 expected: no p factor at good primes

    bool pass() const {
        return idempotents_ok && swap_ok && hom_rank_one && det_valuation == 0;
    }
};

SplitReport split_prime_check(const SplitModule& m);

}  // namespace quatks
