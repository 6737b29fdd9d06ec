#include "quatks/rational.hpp"

namespace quatks {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string format_rational(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat det4(const Mat4& m) {
    Mat4 a = m;
    Rat det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row) {
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int row = col + 1; row < 4; ++row) {
            if (a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

Vec4 solve4(const Mat4& m, const Vec4& rhs) {
    Mat4 a = m;
    Vec4 b = rhs;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row) {
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("singular linear system");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (int row = col + 1; row < 4; ++row) {
            if (a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    Vec4 x;
    for (int row = 3; row >= 0; --row) {
        Rat acc = b[row];
        for (int k = row + 1; k < 4; ++k) acc -= a[row][k] * x[k];
        x[row] = acc / a[row][row];
    }
    return x;
}

}  // namespace quatks
