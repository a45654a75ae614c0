#include "crtkit/polynomial.hpp"

#include <algorithm>
#include <map>

#include "crtkit/error.hpp"
#include "crtkit/number_theory.hpp"

namespace crtkit {

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (!(a == b))
        throw Error(errc::field_mismatch, "mixed fields GF(" + a.p().to_string() + ") and GF(" +
                                              b.p().to_string() + ")");
}

}  // namespace

PrimeField::PrimeField(Int p) : p_(std::move(p)) {
    if (!is_prime(p_))
        throw Error(errc::not_prime, "field characteristic must be prime, got " + p_.to_string());
}

Int PrimeField::inv(const Int& a) const { return mod_inverse(a, p_); }

Int PrimeField::pow(const Int& a, const Int& e) const { return mod_pow(a, e, p_); }

DensePoly DensePoly::from_coeffs(PrimeField field, std::vector<Int> coeffs) {
    DensePoly r(std::move(field));
    for (auto& c : coeffs) c = r.field_.reduce(c);
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    r.coeffs_ = std::move(coeffs);
    return r;
}

DensePoly DensePoly::constant(PrimeField field, const Int& c) {
    return from_coeffs(std::move(field), {c});
}

std::optional<std::size_t> DensePoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Int& DensePoly::leading_coeff() const {
    if (coeffs_.empty())
        throw Error(errc::bad_arguments, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Int DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

std::string DensePoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !coeffs_[i].is_one()) s += coeffs_[i].to_string();
        if (i >= 1) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

SparsePoly SparsePoly::from_terms(PrimeField field,
                                  std::vector<std::pair<std::uint64_t, Int>> terms) {
    SparsePoly r(field);
    std::map<std::uint64_t, Int> merged;
    for (auto& [e, c] : terms) {
        auto [it, fresh] = merged.emplace(e, field.reduce(c));
        if (!fresh) it->second = field.add(it->second, c);
    }
    for (auto& [e, c] : merged) {
        if (!c.is_zero()) r.terms_.emplace_back(e, c);
    }
    return r;
}

std::optional<std::uint64_t> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
}

SparsePoly to_sparse(const DensePoly& p) {
    std::vector<std::pair<std::uint64_t, Int>> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (!p.coeffs()[i].is_zero()) terms.emplace_back(i, p.coeffs()[i]);
    }
    return SparsePoly::from_terms(p.field(), std::move(terms));
}

DensePoly to_dense(const SparsePoly& q) {
    std::vector<Int> coeffs;
    if (!q.is_zero()) {
        coeffs.assign(static_cast<std::size_t>(*q.degree()) + 1, Int(0));
        for (const auto& [e, c] : q.terms()) coeffs[static_cast<std::size_t>(e)] = c;
    }
    return DensePoly::from_coeffs(q.field(), std::move(coeffs));
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b) {
    require_same_field(a.field(), b.field());
    std::vector<Int> coeffs(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = a.field().add(a.coeff(i), b.coeff(i));
    return DensePoly::from_coeffs(a.field(), std::move(coeffs));
}

DensePoly poly_neg(const DensePoly& a) {
    std::vector<Int> coeffs = a.coeffs();
    for (auto& c : coeffs) c = a.field().neg(c);
    return DensePoly::from_coeffs(a.field(), std::move(coeffs));
}

DensePoly poly_sub(const DensePoly& a, const DensePoly& b) { return poly_add(a, poly_neg(b)); }

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return DensePoly(a.field());
    std::vector<Int> coeffs(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            coeffs[i + j] = (coeffs[i + j] + a.coeffs()[i] * b.coeffs()[j]).mod(a.field().p());
        }
    }
    return DensePoly::from_coeffs(a.field(), std::move(coeffs));
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
    require_same_field(a.field(), b.field());
    std::vector<std::pair<std::uint64_t, Int>> terms;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            terms.push_back(*ia++);
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            terms.push_back(*ib++);
        } else {
            Int c = a.field().add(ia->second, ib->second);
            if (!c.is_zero()) terms.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return SparsePoly::from_terms(a.field(), std::move(terms));
}

SparsePoly poly_neg(const SparsePoly& a) {
    std::vector<std::pair<std::uint64_t, Int>> terms = a.terms();
    for (auto& [e, c] : terms) c = a.field().neg(c);
    return SparsePoly::from_terms(a.field(), std::move(terms));
}

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b) { return poly_add(a, poly_neg(b)); }

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) {
    require_same_field(a.field(), b.field());
    // Exponent-keyed accumulation of the term-by-term products.
    std::map<std::uint64_t, Int> acc;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Int prod = a.field().mul(ca, cb);
            auto [it, fresh] = acc.emplace(ea + eb, prod);
            if (!fresh) it->second = a.field().add(it->second, prod);
        }
    }
    std::vector<std::pair<std::uint64_t, Int>> terms(acc.begin(), acc.end());
    return SparsePoly::from_terms(a.field(), std::move(terms));
}

Int poly_eval(const DensePoly& q, const Int& x) {
    Int acc = 0;
    Int xr = q.field().reduce(x);
    for (std::size_t i = q.coeffs().size(); i-- > 0;)
        acc = q.field().add(q.field().mul(acc, xr), q.coeffs()[i]);
    return acc;
}

Int poly_eval(const SparsePoly& q, const Int& x) {
    Int acc = 0;
    Int xr = q.field().reduce(x);
    for (const auto& [e, c] : q.terms())
        acc = q.field().add(acc, q.field().mul(c, q.field().pow(xr, Int(e))));
    return acc;
}

std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
    const PrimeField& f = a.field();
    if (a.is_zero() || *a.degree() < *b.degree())
        return {DensePoly(f), a};

    std::vector<Int> rem = a.coeffs();
    std::size_t db = *b.degree();
    std::vector<Int> quot(rem.size() - db, Int(0));
    Int lead_inv = f.inv(b.leading_coeff());

    for (std::size_t dr = rem.size(); dr-- > db;) {
        // Eliminate rem's X^dr term.
        if (rem[dr].is_zero()) continue;
        Int factor = f.mul(rem[dr], lead_inv);
        quot[dr - db] = factor;
        for (std::size_t i = 0; i <= db; ++i)
            rem[dr - db + i] = f.sub(rem[dr - db + i], f.mul(factor, b.coeffs()[i]));
    }
    return {DensePoly::from_coeffs(f, std::move(quot)), DensePoly::from_coeffs(f, std::move(rem))};
}

}  // namespace crtkit
