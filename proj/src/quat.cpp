#include "quatks/quat.hpp"

#include <sstream>

namespace quatks {

namespace {

void require_same(const QuatElement& p, const QuatElement& q) {
    if (!(p.alg == q.alg))
        throw std::invalid_argument("mixed quaternion algebras in arithmetic");
}

}  // namespace

std::string QuatElement::str() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < 4; ++t) {
        if (x[t] == 0) continue;
        Rat c = x[t];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t == 0 || !(c == 1 || c == -1))
            os << format_rational(c) << (t == 0 ? "" : "*");
        else if (c == -1)
            os << "-";
        os << names[t];
    }
    if (first) os << "0";
    return os.str();
}

QuatElement operator+(const QuatElement& p, const QuatElement& q) {
    require_same(p, q);
    return {p.alg, p.x[0] + q.x[0], p.x[1] + q.x[1], p.x[2] + q.x[2], p.x[3] + q.x[3]};
}

QuatElement operator-(const QuatElement& p, const QuatElement& q) {
    require_same(p, q);
    return {p.alg, p.x[0] - q.x[0], p.x[1] - q.x[1], p.x[2] - q.x[2], p.x[3] - q.x[3]};
}

QuatElement operator-(const QuatElement& q) {
    return {q.alg, -q.x[0], -q.x[1], -q.x[2], -q.x[3]};
}

QuatElement operator*(const QuatElement& p, const QuatElement& q) {
    require_same(p, q);
    const Rat& a = p.alg.a;
    const Rat& b = p.alg.b;
    const Vec4& x = p.x;
    const Vec4& y = q.x;
    // From ij = -ji = k: ik = aj, ki = -aj, jk = -bi, kj = bi, k^2 = -ab.
    Rat z0 = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
    Rat z1 = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
    Rat z2 = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
    Rat z3 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return {p.alg, std::move(z0), std::move(z1), std::move(z2), std::move(z3)};
}

QuatElement operator*(const Rat& c, const QuatElement& q) {
    return {q.alg, c * q.x[0], c * q.x[1], c * q.x[2], c * q.x[3]};
}

QuatElement conjugate_main(const QuatElement& q) {
    return {q.alg, q.x[0], -q.x[1], -q.x[2], -q.x[3]};
}

Rat reduced_trace(const QuatElement& q) { return 2 * q.x[0]; }

Rat reduced_norm(const QuatElement& q) {
    const Rat& a = q.alg.a;
    const Rat& b = q.alg.b;
    const Vec4& x = q.x;
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

QuatElement inverse(const QuatElement& q) {
    Rat n = reduced_norm(q);
    if (n == 0) throw std::domain_error("quaternion with reduced norm 0 has no inverse");
    Rat inv = 1 / n;
    return inv * conjugate_main(q);
}

}  // namespace quatks
