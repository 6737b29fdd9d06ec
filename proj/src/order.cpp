#include "quatks/order.hpp"

#include <sstream>

namespace quatks {

namespace {

Mat4 basis_matrix(const std::array<QuatElement, 4>& basis) {
    Mat4 m;
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) m[row][col] = basis[col].x[row];
    return m;
}

bool integer_vec(const Vec4& v) {
    for (const Rat& c : v)
        if (!is_integer(c)) return false;
    return true;
}

}  // namespace

Order::Order(QuatAlgebra alg, std::array<QuatElement, 4> basis)
    : alg_(std::move(alg)), basis_(std::move(basis)), coord_mat_(basis_matrix(basis_)) {
    for (const QuatElement& e : basis_)
        if (!(e.alg == alg_))
            throw std::invalid_argument("order basis element from a different algebra");
    if (det4(coord_mat_) == 0)
        throw std::invalid_argument("order basis is linearly dependent");
}

Vec4 Order::coords_of(const QuatElement& q) const {
    if (!(q.alg == alg_)) throw std::invalid_argument("element from a different algebra");
    return solve4(coord_mat_, q.x);
}

QuatElement Order::element_from_coords(const Vec4& c) const {
    QuatElement acc = QuatElement::scalar(alg_, 0);
    for (int t = 0; t < 4; ++t) acc = acc + c[t] * basis_[t];
    return acc;
}

bool Order::contains(const QuatElement& q) const { return integer_vec(coords_of(q)); }

OrderReport verify_order(const QuatAlgebra& alg, const std::array<QuatElement, 4>& basis) {
    OrderReport rep;
    Mat4 m = basis_matrix(basis);
    rep.independent = det4(m) != 0;
    if (!rep.independent) {
        rep.witness = "basis is linearly dependent over Q";
        return rep;
    }
    Order o(alg, basis);

    auto note = [&rep](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };

    rep.contains_one = o.contains(QuatElement::one(alg));
    if (!rep.contains_one) note("1 is not in the lattice");

    rep.closed = true;
    for (int i = 0; i < 4 && rep.closed; ++i)
        for (int j = 0; j < 4 && rep.closed; ++j)
            if (!o.contains(basis[i] * basis[j])) {
                rep.closed = false;
                std::ostringstream os;
                os << "product e" << i + 1 << "*e" << j + 1 << " = "
                   << (basis[i] * basis[j]).str() << " leaves the lattice";
                note(os.str());
            }

    rep.trace_integral = true;
    for (int i = 0; i < 4; ++i)
        if (!is_integer(reduced_trace(basis[i]))) {
            rep.trace_integral = false;
            note("trd(e" + std::to_string(i + 1) + ") = " +
                 format_rational(reduced_trace(basis[i])) + " is not an integer");
            break;
        }

    // nrd is integral on the whole lattice iff it is integral on the basis
    // and the polar form trd(e_i conj(e_j)) is integral off the diagonal.
    rep.norm_integral = true;
    for (int i = 0; i < 4 && rep.norm_integral; ++i) {
        if (!is_integer(reduced_norm(basis[i]))) {
            rep.norm_integral = false;
            note("nrd(e" + std::to_string(i + 1) + ") = " +
                 format_rational(reduced_norm(basis[i])) + " is not an integer");
        }
    }
    for (int i = 0; i < 4 && rep.norm_integral; ++i)
        for (int j = i + 1; j < 4 && rep.norm_integral; ++j) {
            Rat polar = reduced_trace(basis[i] * conjugate_main(basis[j]));
            if (!is_integer(polar)) {
                rep.norm_integral = false;
                note("trd(e" + std::to_string(i + 1) + " conj(e" + std::to_string(j + 1) +
                     ")) = " + format_rational(polar) + " is not an integer");
            }
        }
    return rep;
}

Int reduced_discriminant(const Order& o) {
    Mat4 gram;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gram[i][j] = reduced_trace(o.basis()[i] * o.basis()[j]);
    Rat det = det4(gram);
    Rat ad = abs(det);
    if (!is_integer(ad))
        throw std::domain_error("trace gram determinant " + format_rational(det) +
                                " is not an integer");
    Int n = ad.get_num();
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), 2) == 0)
        throw std::domain_error("|trace gram determinant| " + n.get_str() +
                                " is not a perfect square");
    return root;
}

Int dual_lattice_index(const Order& o) {
    Mat4 gram;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gram[i][j] = reduced_trace(o.basis()[i] * conjugate_main(o.basis()[j]));
    Rat det = abs(det4(gram));
    if (!is_integer(det))
        throw std::domain_error("dual pairing determinant is not an integer");
    return det.get_num();
}

bool is_maximal(const Order& o) {
    return reduced_discriminant(o) == discriminant(o.algebra());
}

MuElement::MuElement(QuatElement m, Int d) : mu(std::move(m)), d_B(std::move(d)) {
    if (d_B <= 0) throw std::invalid_argument("mu needs positive d_B");
    if (reduced_trace(mu) != 0)
        throw std::invalid_argument("mu must have reduced trace 0");
    if (reduced_norm(mu) != Rat(d_B))
        throw std::invalid_argument("mu must have reduced norm d_B = " + d_B.get_str() +
                                    ", got " + format_rational(reduced_norm(mu)));
    // trd = 0 and nrd = d_B give mu^2 = -d_B via the characteristic equation;
    // assert it anyway.
    QuatElement sq = mu * mu;
    Int neg_d = -d_B;
    if (!(sq == QuatElement::scalar(mu.alg, Rat(neg_d))))
        throw std::logic_error("mu^2 != -d_B (arithmetic inconsistency)");
}

QuatElement MuElement::mu_inverse() const { return Rat(-1, d_B) * mu; }

namespace {

// 0, 1, -1, 2, -2, ... up to |c| <= bound.
std::vector<long> balanced_range(long bound) {
    std::vector<long> out;
    out.push_back(0);
    for (long c = 1; c <= bound; ++c) {
        out.push_back(c);
        out.push_back(-c);
    }
    return out;
}

}  // namespace

std::optional<MuElement> find_mu(const Order& o, std::optional<long> bound_opt) {
    if (!is_indefinite(o.algebra()))
        throw std::invalid_argument("find_mu requires an indefinite algebra");
    if (!is_maximal(o)) throw std::invalid_argument("find_mu requires a maximal order");

    Int d_B = discriminant(o.algebra());
    if (!d_B.fits_slong_p()) throw std::invalid_argument("discriminant too large for find_mu");
    const long target = d_B.get_si();
    long bound = bound_opt.value_or(target);
    if (bound < 1) throw std::invalid_argument("find_mu bound must be >= 1");

    // trd and nrd as integer linear resp. quadratic forms in the coordinates.
    std::array<long, 4> tr{};
    long nf[4][4] = {};  // nrd(sum c e) = sum_{i<=j} nf[i][j] c_i c_j
    for (int i = 0; i < 4; ++i) {
        Rat t = reduced_trace(o.basis()[i]);
        Rat n = reduced_norm(o.basis()[i]);
        if (!is_integer(t) || !is_integer(n))
            throw std::invalid_argument("find_mu needs an integral basis");
        if (!t.get_num().fits_slong_p() || !n.get_num().fits_slong_p())
            throw std::invalid_argument("order basis too large for find_mu");
        tr[i] = t.get_num().get_si();
        nf[i][i] = n.get_num().get_si();
        for (int j = i + 1; j < 4; ++j) {
            Rat polar = reduced_trace(o.basis()[i] * conjugate_main(o.basis()[j]));
            if (!is_integer(polar))
                throw std::invalid_argument("find_mu needs an integral basis");
            nf[i][j] = polar.get_num().get_si();
        }
    }

    const std::vector<long> range = balanced_range(bound);
    for (long c0 : range) {
        const long t0 = tr[0] * c0;
        const long n0 = nf[0][0] * c0 * c0;
        for (long c1 : range) {
            const long t1 = t0 + tr[1] * c1;
            const long n1 = n0 + (nf[1][1] * c1 + nf[0][1] * c0) * c1;
            for (long c2 : range) {
                const long t2 = t1 + tr[2] * c2;
                const long n2 = n1 + (nf[2][2] * c2 + nf[0][2] * c0 + nf[1][2] * c1) * c2;
                for (long c3 : range) {
                    if (t2 + tr[3] * c3 != 0) continue;
                    long n = n2 + (nf[3][3] * c3 + nf[0][3] * c0 + nf[1][3] * c1 +
                                   nf[2][3] * c2) * c3;
                    if (n != target) continue;
                    if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
                    Vec4 coords{Rat(c0), Rat(c1), Rat(c2), Rat(c3)};
                    return MuElement(o.element_from_coords(coords), d_B);
                }
            }
        }
    }
    return std::nullopt;
}

QuatElement star_involution(const QuatElement& q, const MuElement& mu) {
    return mu.mu_inverse() * conjugate_main(q) * mu.mu;
}

bool check_star_stabilizes(const Order& o, const MuElement& mu) {
    for (const QuatElement& e : o.basis())
        if (!o.contains(star_involution(e, mu))) return false;
    return true;
}

}  // namespace quatks
