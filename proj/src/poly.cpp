#include "hardy/poly.hpp"
#include "hardy/errors.hpp"

#include <cmath>

namespace hardy {

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back({0.0, 0.0});
    trim();
}

void Polynomial::trim() {
    while (c_.size() > 1 && std::abs(c_.back()) == 0.0) c_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex leading) {
    Polynomial p({leading});
    for (const Complex& r : roots)
        p = p * Polynomial({-r, {1.0, 0.0}});
    return p;
}

int Polynomial::degree() const {
    if (c_.size() == 1 && std::abs(c_[0]) == 0.0) return -1;
    return int(c_.size()) - 1;
}

Complex Polynomial::eval(Complex z) const {
    Complex v{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * z + *it;
    return v;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Complex> out(c_.size() + o.c_.size() - 1, Complex{0.0, 0.0});
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> out(std::max(c_.size(), o.c_.size()), Complex{0.0, 0.0});
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> out = c_;
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::conj_reflect() const {
    std::vector<Complex> out = c_;
    for (auto& v : out) v = std::conj(v);
    return Polynomial(std::move(out));
}

Complex RationalFunction::eval(Complex z) const {
    const Complex d = den.eval(z);
    if (std::abs(d) < 1e-300)
        throw PoleHit("RationalFunction::eval");
    return num.eval(z) / d;
}

} // namespace hardy
