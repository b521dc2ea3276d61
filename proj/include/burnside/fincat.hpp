#pragma once

#include <string>
#include <vector>

#include "burnside/matrix.hpp"
#include "burnside/poset.hpp"
#include "burnside/rational_function.hpp"

namespace burnside {

/// A finite category presented by its hom-set cardinalities and an isomorphism
/// partition of the objects. Composition tables are never stored: everything
/// computed here depends only on zeta and the partition. EI status is metadata
/// asserted by the constructor, not inferred.
class FinCat {
public:
    /// Validates: zeta square over the objects, nonnegative integer entries,
    /// zeta(x,x) >= 1, and zeta block-constant on the declared iso partition.
    FinCat(std::vector<std::string> objects, Matrix<Rational> zeta,
           std::vector<std::vector<std::size_t>> iso_classes, bool ei);

    std::size_t object_count() const { return objects_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const Matrix<Rational>& zeta() const { return zeta_; }
    const std::vector<std::vector<std::size_t>>& iso_classes() const { return iso_classes_; }
    std::size_t iso_class_of(std::size_t obj) const { return class_of_[obj]; }
    std::size_t iso_class_size(std::size_t obj) const { return iso_classes_[class_of_[obj]].size(); }
    bool is_ei() const { return ei_; }

    FinCat opposite() const;

private:
    std::vector<std::string> objects_;
    Matrix<Rational> zeta_;
    std::vector<std::vector<std::size_t>> iso_classes_;
    std::vector<std::size_t> class_of_;
    bool ei_;
};

/// A poset as a category: hom-sizes zeta(x,y) = [x <= y], singleton iso
/// classes. Always EI.
FinCat poset_category(const Poset& P);

/// One object with hom_size endomorphisms. EI iff the monoid is a group,
/// which the caller asserts.
FinCat one_object_category(std::size_t hom_size, bool group_like);

/// m objects, identity morphisms only.
FinCat discrete_category(std::size_t m);

/// The idempotent e(x,y) = 1/|[x]| when x ~ y, else 0.
Matrix<Rational> idempotent_e(const FinCat& C);

/// Skeletal Möbius inversion: the inverse nu of zeta inside the iso-invariant
/// subalgebra, with nu.zeta = zeta.nu = e. Computed on a skeleton (first
/// object of each iso class) and redistributed uniformly over the classes.
/// Throws NoSkeletalInversion when the skeleton's zeta matrix is singular.
Matrix<Rational> skeletal_nu(const FinCat& C);

struct WeightFunction {
    std::vector<Rational> values;  // indexed by object
    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// The unique weighting (zeta . k = 1) constant on iso classes: row sums of nu.
WeightFunction skeletal_weighting(const FinCat& C);
/// The unique coweighting (k . zeta = 1) constant on iso classes: column sums.
WeightFunction skeletal_coweighting(const FinCat& C);

/// chi(C): the sum of all entries of nu.
Rational euler_char(const FinCat& C);

/// The generating function sum_n |C_n| t^n of non-degenerate nerve simplices,
/// as a canonical rational function: 1^T (delta - (zeta-delta) t)^-1 1.
RationalFunction series_generating(const FinCat& C);

/// chi_Sigma(C) = series_generating(C) evaluated at -1; throws
/// NotInLocalization when the reduced denominator vanishes there.
Rational series_euler(const FinCat& C);

/// |C_n| = 1^T (zeta - delta)^n 1: the number of non-degenerate n-simplices.
Integer nerve_count(const FinCat& C, std::size_t n);

}  // namespace burnside
