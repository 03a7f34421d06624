#pragma once

#include <array>
#include <optional>
#include <string>

#include "ecmf/bigint.hpp"

namespace ecmf {

enum class CurveForm { Long, Short, Root };

struct CurveInvariants {
    BigRat delta; // root-formula discriminant for Root form, Weierstrass otherwise
    BigRat c4;
    BigRat j;
};

// A cubic model of an elliptic curve:
//   Long:  y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
//   Short: y^2 = x^3 + A x + B
//   Root:  y^2 = (x - r1)(x - r2)(x - r3)
//
// c4 and c6 follow the normalization c4 = (b2^2 - 24 b4)/12 and
// c6 = (-b2^3 + 36 b2 b4 - 216 b6)/216, which is 1/12 resp. 1/216 of the
// normalization most references use. The two discriminant conventions are
// both kept: disc_weierstrass() = c4^3 - 27 c6^2 (equals -16(4A^3 + 27B^2)
// on short models) and, for root form, disc_root() = prod (r_i - r_j)^2,
// related by disc_weierstrass = 16 * disc_root on monic cubic models.
class WeierstrassModel {
public:
    static WeierstrassModel long_form(const BigRat& a1, const BigRat& a2, const BigRat& a3,
                                      const BigRat& a4, const BigRat& a6);
    static WeierstrassModel short_form(const BigRat& A, const BigRat& B);
    static WeierstrassModel root_form(const BigRat& r1, const BigRat& r2, const BigRat& r3);

    CurveForm form() const { return form_; }

    const BigRat& a1() const { return a_[0]; }
    const BigRat& a2() const { return a_[1]; }
    const BigRat& a3() const { return a_[2]; }
    const BigRat& a4() const { return a_[3]; }
    const BigRat& a6() const { return a_[4]; }

    // Root form only.
    const std::array<BigRat, 3>& roots() const;

    BigRat b2() const;
    BigRat b4() const;
    BigRat b6() const;
    BigRat c4() const;
    BigRat c6() const;

    BigRat disc_weierstrass() const;
    BigRat disc_root() const; // root form only

    // The elliptic predicate: nonzero discriminant.
    bool is_singular() const { return disc_weierstrass() == 0; }

    // Form-dependent discriminant: disc_root for Root form, disc_weierstrass
    // for Short and Long.
    BigRat delta() const;

    BigRat j() const; // throws SingularCurve when delta = 0

    CurveInvariants invariants() const;

    // The b2, b4, b6 -> c4, c6 pipeline ending in Short(-4 c4, -16 c6).
    // A model that is already Short is returned unchanged. The j-invariant
    // is preserved.
    WeierstrassModel to_short_form() const;

    // True when y^2 equals a monic cubic, i.e. a1 = a3 = 0.
    bool is_cubic_form() const { return a_[0] == 0 && a_[2] == 0; }

    // True when every a-invariant is an integer.
    bool is_integral() const;

    // Text grammar: "a1,a2,a3,a4,a6" (long), "[A,B]" (short), "(r1,r2,r3)" (root).
    std::string str() const;
    static WeierstrassModel parse(const std::string& text);

private:
    WeierstrassModel() = default;

    CurveForm form_ = CurveForm::Short;
    std::array<BigRat, 5> a_{};               // a1, a2, a3, a4, a6
    std::optional<std::array<BigRat, 3>> roots_;
};

} // namespace ecmf
