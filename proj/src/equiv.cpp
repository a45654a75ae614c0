#include "crtkit/equiv.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "crtkit/error.hpp"

namespace crtkit {

namespace {

void require_same_base(const EquivRelation& a, const EquivRelation& b) {
    if (!(a.base() == b.base()))
        throw Error(errc::base_mismatch, "relations on sets of size " +
                                             std::to_string(a.base().size) + " and " +
                                             std::to_string(b.base().size));
}

}  // namespace

EquivRelation EquivRelation::from_partition(FiniteSet base,
                                            const std::vector<std::vector<std::size_t>>& blocks) {
    EquivRelation r;
    r.base_ = base;
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    r.class_of_.assign(base.size, kUnassigned);
    for (const auto& block : blocks) {
        if (block.empty()) throw Error(errc::not_a_partition, "empty block");
        std::size_t id = *std::min_element(block.begin(), block.end());
        for (std::size_t x : block) {
            if (x >= base.size)
                throw Error(errc::not_a_partition,
                            "element " + std::to_string(x) + " outside the base set");
            if (r.class_of_[x] != kUnassigned)
                throw Error(errc::not_a_partition,
                            "element " + std::to_string(x) + " occurs in two blocks");
            r.class_of_[x] = id;
        }
    }
    for (std::size_t x = 0; x < base.size; ++x) {
        if (r.class_of_[x] == kUnassigned)
            throw Error(errc::not_a_partition,
                        "element " + std::to_string(x) + " is not covered");
    }
    return r;
}

EquivRelation EquivRelation::from_labels(FiniteSet base, const std::vector<std::size_t>& labels) {
    if (labels.size() != base.size)
        throw Error(errc::not_a_partition, "label count does not match the base size");
    EquivRelation r;
    r.base_ = base;
    r.class_of_.assign(base.size, 0);
    std::map<std::size_t, std::size_t> first_seen;  // label -> minimal member
    for (std::size_t x = 0; x < base.size; ++x) {
        auto [it, fresh] = first_seen.emplace(labels[x], x);
        r.class_of_[x] = it->second;
    }
    return r;
}

EquivRelation EquivRelation::identity(FiniteSet base) {
    EquivRelation r;
    r.base_ = base;
    r.class_of_.resize(base.size);
    for (std::size_t x = 0; x < base.size; ++x) r.class_of_[x] = x;
    return r;
}

EquivRelation EquivRelation::full(FiniteSet base) {
    EquivRelation r;
    r.base_ = base;
    r.class_of_.assign(base.size, 0);
    return r;
}

std::size_t EquivRelation::class_of(std::size_t x) const {
    if (x >= base_.size)
        throw Error(errc::out_of_range, "element " + std::to_string(x) + " outside the base set");
    return class_of_[x];
}

bool EquivRelation::same_class(std::size_t x, std::size_t y) const {
    return class_of(x) == class_of(y);
}

std::size_t EquivRelation::class_count() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < base_.size; ++x) {
        if (class_of_[x] == x) ++count;  // canonical ids are their own minimal member
    }
    return count;
}

BinRelation BinRelation::full(FiniteSet base) {
    BinRelation r(base);
    std::fill(r.bits_.begin(), r.bits_.end(), true);
    return r;
}

BinRelation BinRelation::of(const EquivRelation& rel) {
    BinRelation r(rel.base());
    for (std::size_t x = 0; x < rel.base().size; ++x) {
        for (std::size_t y = 0; y < rel.base().size; ++y) {
            if (rel.same_class(x, y)) r.insert(x, y);
        }
    }
    return r;
}

std::size_t BinRelation::pair_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

EquivRelation intersect(const EquivRelation& alpha, const EquivRelation& beta) {
    require_same_base(alpha, beta);
    const std::size_t n = alpha.base().size;
    // x's class id: the minimal y related to x under both relations.
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y <= x; ++y) {
            if (alpha.same_class(x, y) && beta.same_class(x, y)) {
                labels[x] = y;
                break;
            }
        }
    }
    return EquivRelation::from_labels(alpha.base(), labels);
}

BinRelation compose(const EquivRelation& alpha, const EquivRelation& beta) {
    require_same_base(alpha, beta);
    const std::size_t n = alpha.base().size;
    BinRelation out(alpha.base());
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            for (std::size_t y = 0; y < n; ++y) {
                if (alpha.same_class(x, y) && beta.same_class(y, z)) {
                    out.insert(x, z);
                    break;
                }
            }
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> sigma_classes(const EquivRelation& alpha,
                                                  const EquivRelation& beta, std::size_t x) {
    require_same_base(alpha, beta);
    return {alpha.class_of(x), beta.class_of(x)};
}

EquivRelation kernel_of_sigma(const EquivRelation& alpha, const EquivRelation& beta) {
    require_same_base(alpha, beta);
    const std::size_t n = alpha.base().size;
    // Group by sigma value; first occurrence (ascending) is the minimal member.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_seen;
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto [it, fresh] = first_seen.emplace(sigma_classes(alpha, beta, x), x);
        labels[x] = it->second;
    }
    return EquivRelation::from_labels(alpha.base(), labels);
}

bool sigma_onto(const EquivRelation& alpha, const EquivRelation& beta) {
    require_same_base(alpha, beta);
    const std::size_t n = alpha.base().size;
    std::map<std::pair<std::size_t, std::size_t>, bool> hit;
    for (std::size_t x = 0; x < n; ++x) hit[sigma_classes(alpha, beta, x)] = true;
    return hit.size() == alpha.class_count() * beta.class_count();
}

std::vector<EquivRelation> all_equiv_relations(FiniteSet base) {
    std::vector<EquivRelation> out;
    std::vector<std::size_t> rgs(base.size, 0);
    if (base.size == 0) {
        out.push_back(EquivRelation::identity(base));
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
    auto emit = [&] { out.push_back(EquivRelation::from_labels(base, rgs)); };
    std::vector<std::size_t> maxes(base.size, 0);  // maxes[i] = max of rgs[0..i-1]
    emit();
    for (;;) {
        // Advance to the lexicographically next string.
        std::size_t i = base.size;
        while (i-- > 1) {
            if (rgs[i] <= maxes[i]) break;  // can still bump this position
            rgs[i] = 0;
        }
        if (i == 0) return out;
        ++rgs[i];
        for (std::size_t j = i + 1; j < base.size; ++j)
            maxes[j] = std::max(maxes[j - 1], rgs[j - 1]);
        emit();
    }
}

Theorem5Report verify_theorem5(std::size_t n, std::size_t max_n) {
    if (n > max_n)
        throw Error(errc::bound_exceeded, "n = " + std::to_string(n) + " exceeds the bound " +
                                              std::to_string(max_n));
    FiniteSet base{n};
    std::vector<EquivRelation> relations = all_equiv_relations(base);
    BinRelation everything = BinRelation::full(base);

    Theorem5Report report;
    report.size = n;
    report.kernel_ok = true;
    report.onto_ok = true;
    for (const EquivRelation& alpha : relations) {
        for (const EquivRelation& beta : relations) {
            ++report.pairs_checked;
            if (!(kernel_of_sigma(alpha, beta) == intersect(alpha, beta)))
                report.kernel_ok = false;
            if (sigma_onto(alpha, beta) != (compose(alpha, beta) == everything))
                report.onto_ok = false;
        }
    }
    return report;
}

}  // namespace crtkit
