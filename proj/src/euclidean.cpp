#include "crtkit/euclidean.hpp"

#include <utility>

#include "crtkit/error.hpp"

namespace crtkit {

namespace {

const Int& as_int(const DomainElement& a) {
    const Int* v = std::get_if<Int>(&a);
    if (!v)
        throw Error(errc::domain_mismatch, "integer domain received a polynomial element");
    return *v;
}

class IntegerDomain final : public EuclideanDomain {
public:
    std::string name() const override { return "int"; }
    DomainElement zero() const override { return Int(0); }
    DomainElement one() const override { return Int(1); }
    DomainElement add(const DomainElement& a, const DomainElement& b) const override {
        return as_int(a) + as_int(b);
    }
    DomainElement neg(const DomainElement& a) const override { return -as_int(a); }
    DomainElement mul(const DomainElement& a, const DomainElement& b) const override {
        return as_int(a) * as_int(b);
    }
    DomainDivMod divmod(const DomainElement& a, const DomainElement& b) const override {
        const Int& bi = as_int(b);
        if (bi.is_zero()) throw Error(errc::division_by_zero, "integer division by zero");
        // Euclidean division: 0 <= r < |b|.
        auto [q, r] = Int::divmod(as_int(a), bi);
        if (r.is_negative()) {
            r += bi.abs();
            q = bi.is_negative() ? q + Int(1) : q - Int(1);
        }
        return {std::move(q), std::move(r)};
    }
    Int norm(const DomainElement& a) const override {
        const Int& v = as_int(a);
        if (v.is_zero())
            throw Error(errc::bad_arguments, "the Euclidean norm is undefined at zero");
        return v.abs();
    }
    DomainNormalized normalize(const DomainElement& a) const override {
        const Int& v = as_int(a);
        if (v.is_negative()) return {-v, Int(-1)};
        return {v, Int(1)};
    }
};

}  // namespace

const EuclideanDomain& integer_domain() {
    static const IntegerDomain instance;
    return instance;
}

const DensePoly& GfpPolyDomain::as_poly(const DomainElement& a) const {
    const DensePoly* v = std::get_if<DensePoly>(&a);
    if (!v)
        throw Error(errc::domain_mismatch, name() + " received an integer element");
    if (!(v->field() == field_))
        throw Error(errc::field_mismatch, name() + " received an element of GF(" +
                                              v->field().p().to_string() + ")");
    return *v;
}

std::string GfpPolyDomain::name() const { return "gfp-poly:" + field_.p().to_string(); }

DomainElement GfpPolyDomain::zero() const { return DensePoly(field_); }

DomainElement GfpPolyDomain::one() const { return DensePoly::constant(field_, Int(1)); }

DomainElement GfpPolyDomain::add(const DomainElement& a, const DomainElement& b) const {
    return poly_add(as_poly(a), as_poly(b));
}

DomainElement GfpPolyDomain::neg(const DomainElement& a) const { return poly_neg(as_poly(a)); }

DomainElement GfpPolyDomain::mul(const DomainElement& a, const DomainElement& b) const {
    return poly_mul(as_poly(a), as_poly(b));
}

DomainDivMod GfpPolyDomain::divmod(const DomainElement& a, const DomainElement& b) const {
    auto [q, r] = poly_divmod(as_poly(a), as_poly(b));
    return {std::move(q), std::move(r)};
}

Int GfpPolyDomain::norm(const DomainElement& a) const {
    const DensePoly& p = as_poly(a);
    if (p.is_zero()) throw Error(errc::bad_arguments, "the Euclidean norm is undefined at zero");
    return Int(static_cast<unsigned long long>(*p.degree()));
}

DomainNormalized GfpPolyDomain::normalize(const DomainElement& a) const {
    const DensePoly& p = as_poly(a);
    if (p.is_zero()) return {p, DensePoly::constant(field_, Int(1))};
    Int lead = p.leading_coeff();
    if (lead.is_one()) return {p, DensePoly::constant(field_, Int(1))};
    Int lead_inv = field_.inv(lead);
    std::vector<Int> coeffs = p.coeffs();
    for (auto& c : coeffs) c = field_.mul(c, lead_inv);
    return {DensePoly::from_coeffs(field_, std::move(coeffs)),
            DensePoly::constant(field_, lead)};
}

GfpPolyDomain gfp_poly_domain(PrimeField field) { return GfpPolyDomain(std::move(field)); }

DomainElement eu_gcd(const EuclideanDomain& d, const DomainElement& a, const DomainElement& b) {
    DomainElement x = a;
    DomainElement y = b;
    while (!d.is_zero(y)) {
        DomainElement r = d.divmod(x, y).remainder;
        x = std::exchange(y, std::move(r));
    }
    return d.normalize(x).canonical;
}

DomainExtGcd eu_ext_gcd(const EuclideanDomain& d, const DomainElement& a,
                        const DomainElement& b) {
    DomainElement old_r = a, r = b;
    DomainElement old_x = d.one(), x = d.zero();
    DomainElement old_y = d.zero(), y = d.one();
    while (!d.is_zero(r)) {
        auto [q, rem] = d.divmod(old_r, r);
        old_r = std::exchange(r, std::move(rem));
        DomainElement t = d.sub(old_x, d.mul(q, x));
        old_x = std::exchange(x, std::move(t));
        t = d.sub(old_y, d.mul(q, y));
        old_y = std::exchange(y, std::move(t));
    }
    DomainNormalized n = d.normalize(old_r);
    if (!(n.unit == d.one())) {
        // Divide the cofactors by the unit; exact since units divide everything.
        old_x = d.divmod(old_x, n.unit).quotient;
        old_y = d.divmod(old_y, n.unit).quotient;
    }
    return {std::move(n.canonical), std::move(old_x), std::move(old_y)};
}

bool are_coprime(const EuclideanDomain& d, const DomainElement& a, const DomainElement& b) {
    DomainElement g = eu_gcd(d, a, b);
    return !d.is_zero(g) && d.norm(g) == d.norm(d.one());
}

}  // namespace crtkit
