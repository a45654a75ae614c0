#pragma once

/// Univariate polynomials over a prime field GF(p), in both a dense
/// (coefficient vector) and a sparse (exponent/coefficient pair list)
/// representation. The two carry independent arithmetic so they can be
/// cross-checked against each other; conversions are exact inverses.
///
/// Dense coefficients are stored low-degree-first. The JSON wire form
/// uses explicit exponents, so the internal layout never leaks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crtkit/integer.hpp"

namespace crtkit {

/// GF(p); construction runs a deterministic primality check.
class PrimeField {
public:
    explicit PrimeField(Int p);

    const Int& p() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    Int reduce(const Int& x) const { return x.mod(p_); }
    Int add(const Int& a, const Int& b) const { return (a + b).mod(p_); }
    Int sub(const Int& a, const Int& b) const { return (a - b).mod(p_); }
    Int neg(const Int& a) const { return (-a).mod(p_); }
    Int mul(const Int& a, const Int& b) const { return (a * b).mod(p_); }
    /// Pre: a != 0 (mod p).
    Int inv(const Int& a) const;
    Int pow(const Int& a, const Int& e) const;

private:
    Int p_;
};

class SparsePoly;

class DensePoly {
public:
    explicit DensePoly(PrimeField field) : field_(std::move(field)) {}
    /// Coefficient of X^i at index i; values are reduced and trailing
    /// zeros trimmed.
    static DensePoly from_coeffs(PrimeField field, std::vector<Int> coeffs);
    static DensePoly constant(PrimeField field, const Int& c);

    const PrimeField& field() const { return field_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt encodes the zero polynomial's degree (-infinity).
    std::optional<std::size_t> degree() const;
    /// Pre: not zero.
    const Int& leading_coeff() const;
    Int coeff(std::size_t i) const;

    bool operator==(const DensePoly& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

private:
    PrimeField field_;
    std::vector<Int> coeffs_;
};

class SparsePoly {
public:
    explicit SparsePoly(PrimeField field) : field_(std::move(field)) {}
    /// Terms need not be sorted or reduced; they are normalized (merged,
    /// sorted by exponent, zeros dropped).
    static SparsePoly from_terms(PrimeField field,
                                 std::vector<std::pair<std::uint64_t, Int>> terms);

    const PrimeField& field() const { return field_; }
    /// Strictly increasing exponents, all coefficients nonzero.
    const std::vector<std::pair<std::uint64_t, Int>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<std::uint64_t> degree() const;

    bool operator==(const SparsePoly& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }

private:
    PrimeField field_;
    std::vector<std::pair<std::uint64_t, Int>> terms_;
};

SparsePoly to_sparse(const DensePoly& p);
DensePoly to_dense(const SparsePoly& q);

DensePoly poly_add(const DensePoly& a, const DensePoly& b);
DensePoly poly_neg(const DensePoly& a);
DensePoly poly_sub(const DensePoly& a, const DensePoly& b);
DensePoly poly_mul(const DensePoly& a, const DensePoly& b);

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_neg(const SparsePoly& a);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);

/// Horner evaluation.
Int poly_eval(const DensePoly& q, const Int& x);
/// Term-by-term with modular exponentiation.
Int poly_eval(const SparsePoly& q, const Int& x);

/// a = q*b + r with deg r < deg b (or r = 0). Throws Error(division_by_zero)
/// when b = 0.
std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b);

}  // namespace crtkit
