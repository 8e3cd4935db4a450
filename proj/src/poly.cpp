#include "nilorb/poly.hpp"

#include <sstream>

#include "nilorb/errors.hpp"

namespace nilorb {

Poly Poly::monomial(int deg, const Rat& coeff) {
    Poly p;
    if (coeff == 0) return p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = coeff;
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v = 0;
    for (int k = degree(); k >= 0; --k) v = v * x + c[k];
    return v;
}

Mat Poly::eval_matrix(const std::vector<Mat>& pw) const {
    if (pw.empty()) throw DomainError("empty power table");
    int n = pw[0].rows();
    if (degree() >= int(pw.size())) throw DomainError("power table too short for polynomial degree");
    Mat out(n, n);
    for (int k = 0; k <= degree(); ++k)
        if (c[k] != 0) out = out + pw[k] * c[k];
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return Poly(std::move(r));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || c[k] != 1) os << rat_to_string(c[k]) << (k > 0 ? "*" : "");
        if (k > 0) os << "x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

}  // namespace nilorb
