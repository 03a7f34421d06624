#include "ecmf/weierstrass.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ecmf/errors.hpp"

namespace ecmf {

WeierstrassModel WeierstrassModel::long_form(const BigRat& a1, const BigRat& a2,
                                             const BigRat& a3, const BigRat& a4,
                                             const BigRat& a6) {
    WeierstrassModel m;
    m.form_ = CurveForm::Long;
    m.a_ = {a1, a2, a3, a4, a6};
    return m;
}

WeierstrassModel WeierstrassModel::short_form(const BigRat& A, const BigRat& B) {
    WeierstrassModel m;
    m.form_ = CurveForm::Short;
    m.a_ = {BigRat(0), BigRat(0), BigRat(0), A, B};
    return m;
}

WeierstrassModel WeierstrassModel::root_form(const BigRat& r1, const BigRat& r2,
                                             const BigRat& r3) {
    WeierstrassModel m;
    m.form_ = CurveForm::Root;
    m.a_ = {BigRat(0), -(r1 + r2 + r3), BigRat(0), r1 * r2 + r1 * r3 + r2 * r3,
            -(r1 * r2 * r3)};
    m.roots_ = std::array<BigRat, 3>{r1, r2, r3};
    return m;
}

const std::array<BigRat, 3>& WeierstrassModel::roots() const {
    if (!roots_) throw DomainError("roots: model is not in root form");
    return *roots_;
}

BigRat WeierstrassModel::b2() const { return a1() * a1() + 4 * a2(); }
BigRat WeierstrassModel::b4() const { return a1() * a3() + 2 * a4(); }
BigRat WeierstrassModel::b6() const { return a3() * a3() + 4 * a6(); }

BigRat WeierstrassModel::c4() const { return (b2() * b2() - 24 * b4()) / 12; }

BigRat WeierstrassModel::c6() const {
    const BigRat B2 = b2();
    return (-B2 * B2 * B2 + 36 * B2 * b4() - 216 * b6()) / 216;
}

BigRat WeierstrassModel::disc_weierstrass() const {
    const BigRat C4 = c4(), C6 = c6();
    return C4 * C4 * C4 - 27 * C6 * C6;
}

BigRat WeierstrassModel::disc_root() const {
    const auto& r = roots();
    const BigRat d12 = r[0] - r[1], d13 = r[0] - r[2], d23 = r[1] - r[2];
    return d12 * d12 * d13 * d13 * d23 * d23;
}

BigRat WeierstrassModel::delta() const {
    return form_ == CurveForm::Root ? disc_root() : disc_weierstrass();
}

BigRat WeierstrassModel::j() const {
    const BigRat dw = disc_weierstrass();
    if (dw == 0) throw SingularCurve();
    const BigRat C4 = c4();
    return 1728 * C4 * C4 * C4 / dw;
}

CurveInvariants WeierstrassModel::invariants() const {
    if (is_singular()) throw SingularCurve();
    return {delta(), c4(), j()};
}

WeierstrassModel WeierstrassModel::to_short_form() const {
    if (form_ == CurveForm::Short) return *this;
    return short_form(-4 * c4(), -16 * c6());
}

bool WeierstrassModel::is_integral() const {
    for (const auto& a : a_)
        if (!is_integer(a)) return false;
    return true;
}

std::string WeierstrassModel::str() const {
    switch (form_) {
    case CurveForm::Short:
        return "[" + to_string(a4()) + "," + to_string(a6()) + "]";
    case CurveForm::Root: {
        const auto& r = roots();
        return "(" + to_string(r[0]) + "," + to_string(r[1]) + "," + to_string(r[2]) + ")";
    }
    case CurveForm::Long:
        return to_string(a1()) + "," + to_string(a2()) + "," + to_string(a3()) + "," +
               to_string(a4()) + "," + to_string(a6());
    }
    return {};
}

namespace {

std::vector<BigRat> parse_rationals(const std::string& body, std::size_t expected) {
    std::vector<BigRat> out;
    std::string token;
    std::istringstream in(body);
    while (std::getline(in, token, ',')) {
        std::string clean;
        for (char ch : token)
            if (!std::isspace(static_cast<unsigned char>(ch))) clean += ch;
        if (clean.empty()) throw DomainError("curve model: empty coefficient");
        try {
            out.emplace_back(clean);
        } catch (const std::exception&) {
            throw DomainError("curve model: bad rational '" + clean + "'");
        }
    }
    if (out.size() != expected)
        throw DomainError("curve model: expected " + std::to_string(expected) +
                          " coefficients, got " + std::to_string(out.size()));
    return out;
}

} // namespace

WeierstrassModel WeierstrassModel::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("curve model: empty string");
    if (s.front() == '[') {
        if (s.back() != ']') throw DomainError("curve model: unbalanced brackets");
        auto v = parse_rationals(s.substr(1, s.size() - 2), 2);
        return short_form(v[0], v[1]);
    }
    if (s.front() == '(') {
        if (s.back() != ')') throw DomainError("curve model: unbalanced parentheses");
        auto v = parse_rationals(s.substr(1, s.size() - 2), 3);
        return root_form(v[0], v[1], v[2]);
    }
    auto v = parse_rationals(s, 5);
    return long_form(v[0], v[1], v[2], v[3], v[4]);
}

} // namespace ecmf
