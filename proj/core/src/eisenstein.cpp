#include "ecmf/eisenstein.hpp"

#include "ecmf/errors.hpp"

namespace ecmf {

std::string EisensteinInt::str() const {
    if (b_ == 0) return a_.str();
    std::string s;
    if (a_ != 0) s += a_.str();
    if (b_ > 0 && !s.empty()) s += "+";
    if (b_ == -1) s += "-";
    else if (b_ != 1) s += b_.str() + "*";
    s += "rho";
    return s;
}

const std::array<EisensteinInt, 6>& EisensteinInt::units() {
    // rho^2 = -1 - rho
    static const std::array<EisensteinInt, 6> u = {
        EisensteinInt{1, 0},  EisensteinInt{-1, 0},
        EisensteinInt{0, 1},  EisensteinInt{0, -1},
        EisensteinInt{-1, -1}, EisensteinInt{1, 1},
    };
    return u;
}

std::optional<EisensteinInt> eis_exact_div(const EisensteinInt& alpha, const EisensteinInt& beta) {
    if (beta.is_zero()) throw DomainError("eis_exact_div: division by zero");
    const BigInt n = beta.norm();
    const EisensteinInt prod = alpha * beta.conj();
    if (prod.a() % n != 0 || prod.b() % n != 0) return std::nullopt;
    return EisensteinInt{prod.a() / n, prod.b() / n};
}

bool eis_divides(const EisensteinInt& divisor, const EisensteinInt& value) {
    return eis_exact_div(value, divisor).has_value();
}

BigInt eis_norm(const EisensteinInt& alpha) { return alpha.norm(); }

unsigned eis_lambda_valuation(EisensteinInt alpha) {
    if (alpha.is_zero())
        throw DomainError("eis_lambda_valuation: valuation of zero is infinite");
    unsigned k = 0;
    // Each exact division by lambda divides the norm by 3, so this terminates.
    for (;;) {
        auto q = eis_exact_div(alpha, EisensteinInt::lambda());
        if (!q) return k;
        alpha = *q;
        ++k;
    }
}

int eis_mod_lambda(const EisensteinInt& alpha) {
    // a + b rho = (a + b) - b lambda, so alpha = a + b mod lambda, and the
    // integers 0, 1, 2 mod 3 represent the classes {0, 1, -1}.
    BigInt r = (alpha.a() + alpha.b()) % 3;
    if (r < 0) r += 3;
    if (r == 2) return -1;
    return static_cast<int>(r);
}

} // namespace ecmf
