#pragma once

/// Finite equivalence relations (as canonical partitions) and the
/// set-theoretic generalization of the CRT: for sigma(x) = (alpha(x),
/// beta(x)), ker(sigma) = alpha intersect beta, and sigma is onto iff
/// alpha o beta = M x M. Verified exhaustively over all relation pairs
/// on small sets.

#include <cstddef>
#include <utility>
#include <vector>

namespace crtkit {

struct FiniteSet {
    std::size_t size = 0;  // elements are 0 .. size-1

    bool operator==(const FiniteSet& o) const = default;
};

/// Partition of a FiniteSet; class ids are the minimal member of each block,
/// so equal relations have equal class maps.
class EquivRelation {
public:
    /// Blocks must be nonempty, disjoint and cover the base set.
    /// Throws Error(not_a_partition).
    static EquivRelation from_partition(FiniteSet base,
                                        const std::vector<std::vector<std::size_t>>& blocks);
    /// Canonicalizes an arbitrary labeling (elements with equal labels are
    /// equivalent).
    static EquivRelation from_labels(FiniteSet base, const std::vector<std::size_t>& labels);
    static EquivRelation identity(FiniteSet base);
    /// The single-block relation M x M.
    static EquivRelation full(FiniteSet base);

    const FiniteSet& base() const { return base_; }
    /// Canonical class id (minimal member) of x.
    std::size_t class_of(std::size_t x) const;
    bool same_class(std::size_t x, std::size_t y) const;
    std::size_t class_count() const;

    bool operator==(const EquivRelation& o) const {
        return base_ == o.base_ && class_of_ == o.class_of_;
    }

private:
    FiniteSet base_;
    std::vector<std::size_t> class_of_;
};

/// Plain binary relation on a FiniteSet as an n x n incidence bitmap.
class BinRelation {
public:
    explicit BinRelation(FiniteSet base)
        : base_(base), bits_(base.size * base.size, false) {}
    static BinRelation full(FiniteSet base);
    /// The pair set of an equivalence relation.
    static BinRelation of(const EquivRelation& r);

    const FiniteSet& base() const { return base_; }
    bool contains(std::size_t x, std::size_t z) const { return bits_[x * base_.size + z]; }
    void insert(std::size_t x, std::size_t z) { bits_[x * base_.size + z] = true; }
    std::size_t pair_count() const;

    bool operator==(const BinRelation& o) const = default;

private:
    FiniteSet base_;
    std::vector<bool> bits_;
};

/// x ~ y iff x ~alpha y and x ~beta y. Throws Error(base_mismatch).
EquivRelation intersect(const EquivRelation& alpha, const EquivRelation& beta);

/// (x, z) iff there is a y with x ~alpha y and y ~beta z.
BinRelation compose(const EquivRelation& alpha, const EquivRelation& beta);

/// sigma(x) = (alpha(x), beta(x)) as canonical class ids.
/// Throws Error(out_of_range) when x is not in the base set.
std::pair<std::size_t, std::size_t> sigma_classes(const EquivRelation& alpha,
                                                  const EquivRelation& beta, std::size_t x);

/// The relation x ~ y iff sigma(x) = sigma(y); equals intersect(alpha, beta)
/// by the kernel identity.
EquivRelation kernel_of_sigma(const EquivRelation& alpha, const EquivRelation& beta);

/// True iff every (alpha-class, beta-class) pair is sigma(x) for some x.
/// Computed directly from the image; the compose criterion is the theorem,
/// not the implementation.
bool sigma_onto(const EquivRelation& alpha, const EquivRelation& beta);

/// All equivalence relations on the base set, enumerated via restricted
/// growth strings (Bell(n) of them).
std::vector<EquivRelation> all_equiv_relations(FiniteSet base);

struct Theorem5Report {
    std::size_t size = 0;
    std::size_t pairs_checked = 0;
    bool kernel_ok = false;
    bool onto_ok = false;

    bool ok() const { return kernel_ok && onto_ok; }
};

/// Checks the kernel identity and the onto criterion for every pair of
/// equivalence relations on an n-set. Pre: n <= max_n (Bell numbers grow
/// fast); throws Error(bound_exceeded).
Theorem5Report verify_theorem5(std::size_t n, std::size_t max_n = 6);

}  // namespace crtkit
