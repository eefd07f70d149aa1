#pragma once

#include <stdexcept>
#include <vector>

#include "seb/permutations.hpp"
#include "seb/report.hpp"

namespace seb {

/// The unique relabeling of {1..n} that carries U onto V order-preservingly
/// and the complement onto the complement order-preservingly, extended oddly
/// to signed values.
class RelabelMap {
public:
    RelabelMap(int n, std::vector<int> u, std::vector<int> v);

    int n() const { return n_; }
    const std::vector<int>& u() const { return u_; }  // ascending
    const std::vector<int>& v() const { return v_; }
    const TypeAPermutation& tau() const { return tau_; }

    /// tau(value) with tau(-x) = -tau(x), tau(0) = 0.
    int apply(int value) const;

private:
    int n_;
    std::vector<int> u_, v_;
    TypeAPermutation tau_;
};

RelabelMap build_relabel(int n, const std::vector<int>& u, const std::vector<int>& v);

/// tau o sigma. Requires sigma's negative set to be exactly the map's U.
SignedPermutation apply_relabel(const RelabelMap& map, const SignedPermutation& sigma);

/// Membership test for the image of the fold-down map: every entry smaller
/// in absolute value than a negative entry must itself be negative, i.e. the
/// negative set is an initial segment {1..j}.
bool fn_image_predicate(const SignedPermutation& tau);

/// Folds a permutation of {1..n+1} to a signed permutation of {1..n}:
/// entries below the first letter shift down by it (turning negative),
/// entries above shift down by one. Descent count is preserved and the
/// number of signs is first letter minus one.
SignedPermutation f_map(const TypeAPermutation& sigma);

struct NotInImageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse of f_map; throws NotInImageError when the predicate fails.
TypeAPermutation f_inverse(const SignedPermutation& tau);

/// Exhaustive verification that relabeling is a descent-preserving bijection
/// between equal-size negative-set classes, for all pairs (U,V) up to n_max.
Report verify_relabel_theorem(int n_max, int cap = kSignedEnumCap);

/// Exhaustive verification of the fold-down bijection: injectivity, image
/// characterization, and the cell-by-cell cardinality match with b(n,k,j).
Report verify_bijection_theorem(int n_max, int cap = kSignedEnumCap);

}  // namespace seb
