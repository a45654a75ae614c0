#pragma once

/// Runtime Euclidean-domain abstraction: a ring with division-with-remainder
/// and a norm, enough to run the (extended) Euclidean algorithm and generic
/// mixed-radix recombination. Two instances: the integers and GF(p)[X].
///
/// The descriptor is an ordinary runtime value so the CLI can select the
/// domain dynamically; elements are a variant over the instances' carriers.

#include <memory>
#include <string>
#include <variant>

#include "crtkit/integer.hpp"
#include "crtkit/polynomial.hpp"

namespace crtkit {

using DomainElement = std::variant<Int, DensePoly>;

struct DomainDivMod {
    DomainElement quotient;
    DomainElement remainder;
};

/// x = canonical * unit, unit invertible; canonical associates are
/// non-negative integers / monic polynomials.
struct DomainNormalized {
    DomainElement canonical;
    DomainElement unit;
};

struct DomainExtGcd {
    DomainElement g;  // canonical gcd
    DomainElement x;  // a*x + b*y = g
    DomainElement y;
};

class EuclideanDomain {
public:
    virtual ~EuclideanDomain() = default;

    virtual std::string name() const = 0;
    virtual DomainElement zero() const = 0;
    virtual DomainElement one() const = 0;
    virtual DomainElement add(const DomainElement& a, const DomainElement& b) const = 0;
    virtual DomainElement neg(const DomainElement& a) const = 0;
    virtual DomainElement mul(const DomainElement& a, const DomainElement& b) const = 0;
    /// a = q*b + r with r = 0 or norm(r) < norm(b); the integer instance
    /// keeps r non-negative so remainders are canonical residues.
    /// Throws Error(division_by_zero) when b = 0.
    virtual DomainDivMod divmod(const DomainElement& a, const DomainElement& b) const = 0;
    /// Pre: a != 0 (the norm is undefined at zero).
    virtual Int norm(const DomainElement& a) const = 0;
    virtual DomainNormalized normalize(const DomainElement& a) const = 0;

    DomainElement sub(const DomainElement& a, const DomainElement& b) const {
        return add(a, neg(b));
    }
    bool is_zero(const DomainElement& a) const { return a == zero(); }
    bool is_unit(const DomainElement& a) const { return !is_zero(a) && norm(a) == norm(one()); }
};

/// Canonical (normalized) gcd by the Euclidean algorithm; eu_gcd(0,0) = 0.
DomainElement eu_gcd(const EuclideanDomain& d, const DomainElement& a, const DomainElement& b);

/// Extended Euclidean algorithm; g is canonical and a*x + b*y = g holds
/// exactly in the domain.
DomainExtGcd eu_ext_gcd(const EuclideanDomain& d, const DomainElement& a, const DomainElement& b);

/// True iff eu_gcd(a, b) is a unit.
bool are_coprime(const EuclideanDomain& d, const DomainElement& a, const DomainElement& b);

/// The ring of integers with Euclidean (non-negative-remainder) division.
const EuclideanDomain& integer_domain();

/// GF(p)[X] with norm = degree and monic canonical associates.
class GfpPolyDomain final : public EuclideanDomain {
public:
    explicit GfpPolyDomain(PrimeField field) : field_(std::move(field)) {}

    const PrimeField& field() const { return field_; }

    std::string name() const override;
    DomainElement zero() const override;
    DomainElement one() const override;
    DomainElement add(const DomainElement& a, const DomainElement& b) const override;
    DomainElement neg(const DomainElement& a) const override;
    DomainElement mul(const DomainElement& a, const DomainElement& b) const override;
    DomainDivMod divmod(const DomainElement& a, const DomainElement& b) const override;
    Int norm(const DomainElement& a) const override;
    DomainNormalized normalize(const DomainElement& a) const override;

private:
    const DensePoly& as_poly(const DomainElement& a) const;
    PrimeField field_;
};

GfpPolyDomain gfp_poly_domain(PrimeField field);

}  // namespace crtkit
