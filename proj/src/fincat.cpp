#include "burnside/fincat.hpp"

#include <algorithm>

namespace burnside {

FinCat::FinCat(std::vector<std::string> objects, Matrix<Rational> zeta,
               std::vector<std::vector<std::size_t>> iso_classes, bool ei)
    : objects_(std::move(objects)),
      zeta_(std::move(zeta)),
      iso_classes_(std::move(iso_classes)),
      ei_(ei) {
    const std::size_t n = objects_.size();
    if (zeta_.rows() != n || zeta_.cols() != n)
        throw std::invalid_argument("FinCat: zeta must be square over the objects");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!zeta_(i, j).is_integer() || zeta_(i, j).sgn() < 0)
                throw std::invalid_argument("FinCat: zeta entries must be nonnegative integers");
        }
    for (std::size_t i = 0; i < n; ++i)
        if (zeta_(i, i) < Rational(1))
            throw std::invalid_argument("FinCat: missing identity morphism (zeta(x,x) < 1)");
    class_of_.assign(n, n);
    for (std::size_t c = 0; c < iso_classes_.size(); ++c) {
        if (iso_classes_[c].empty()) throw std::invalid_argument("FinCat: empty iso class");
        for (std::size_t obj : iso_classes_[c]) {
            if (obj >= n || class_of_[obj] != n)
                throw std::invalid_argument("FinCat: iso classes are not a partition");
            class_of_[obj] = c;
        }
        std::sort(iso_classes_[c].begin(), iso_classes_[c].end());
    }
    for (std::size_t obj = 0; obj < n; ++obj)
        if (class_of_[obj] == n)
            throw std::invalid_argument("FinCat: iso classes are not a partition");
    // Membership criterion for the iso-invariant subalgebra: zeta must be
    // block-constant on the partition, in both coordinates.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t ri = iso_classes_[class_of_[i]][0];
            std::size_t rj = iso_classes_[class_of_[j]][0];
            if (zeta_(i, j) != zeta_(ri, rj))
                throw std::invalid_argument(
                    "FinCat: zeta is not invariant under the declared isomorphisms");
        }
}

FinCat FinCat::opposite() const {
    return FinCat(objects_, zeta_.transpose(), iso_classes_, ei_);
}

FinCat poset_category(const Poset& P) {
    const std::size_t n = P.size();
    Matrix<Rational> zeta(n, n);
    std::vector<std::vector<std::size_t>> classes(n);
    for (std::size_t i = 0; i < n; ++i) {
        classes[i] = {i};
        for (std::size_t j = 0; j < n; ++j) zeta(i, j) = P.leq(i, j) ? Rational(1) : Rational(0);
    }
    return FinCat(P.labels(), std::move(zeta), std::move(classes), true);
}

FinCat one_object_category(std::size_t hom_size, bool group_like) {
    Matrix<Rational> zeta(1, 1);
    zeta(0, 0) = Rational(static_cast<long long>(hom_size));
    return FinCat({"*"}, std::move(zeta), {{0}}, group_like);
}

FinCat discrete_category(std::size_t m) {
    Matrix<Rational> zeta(m, m);
    std::vector<std::string> labels(m);
    std::vector<std::vector<std::size_t>> classes(m);
    for (std::size_t i = 0; i < m; ++i) {
        zeta(i, i) = Rational(1);
        labels[i] = "d" + std::to_string(i);
        classes[i] = {i};
    }
    return FinCat(std::move(labels), std::move(zeta), std::move(classes), true);
}

Matrix<Rational> idempotent_e(const FinCat& C) {
    const std::size_t n = C.object_count();
    Matrix<Rational> e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (C.iso_class_of(i) == C.iso_class_of(j))
                e(i, j) = Rational(1, static_cast<long long>(C.iso_class_size(i)));
    return e;
}

Matrix<Rational> skeletal_nu(const FinCat& C) {
    const std::size_t n = C.object_count();
    const auto& classes = C.iso_classes();
    const std::size_t r = classes.size();
    Matrix<Rational> skel(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) skel(a, b) = C.zeta()(classes[a][0], classes[b][0]);
    Matrix<Rational> inv(r, r);
    try {
        inv = mat_inverse(skel);
    } catch (const SingularMatrixError&) {
        throw NoSkeletalInversion("skeletal_nu: the skeleton's zeta matrix is singular");
    }
    Matrix<Rational> nu(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t a = C.iso_class_of(i);
            std::size_t b = C.iso_class_of(j);
            nu(i, j) = inv(a, b) / Rational(static_cast<long long>(classes[a].size()) *
                                            static_cast<long long>(classes[b].size()));
        }
    Matrix<Rational> e = idempotent_e(C);
    if (nu * C.zeta() != e || C.zeta() * nu != e)
        throw std::logic_error("skeletal_nu: inversion check failed");
    return nu;
}

WeightFunction skeletal_weighting(const FinCat& C) {
    Matrix<Rational> nu = skeletal_nu(C);
    WeightFunction k;
    k.values.assign(C.object_count(), Rational(0));
    for (std::size_t i = 0; i < C.object_count(); ++i)
        for (std::size_t j = 0; j < C.object_count(); ++j) k.values[i] += nu(i, j);
    return k;
}

WeightFunction skeletal_coweighting(const FinCat& C) {
    Matrix<Rational> nu = skeletal_nu(C);
    WeightFunction k;
    k.values.assign(C.object_count(), Rational(0));
    for (std::size_t j = 0; j < C.object_count(); ++j)
        for (std::size_t i = 0; i < C.object_count(); ++i) k.values[j] += nu(i, j);
    return k;
}

Rational euler_char(const FinCat& C) {
    Matrix<Rational> nu = skeletal_nu(C);
    Rational total(0);
    for (std::size_t i = 0; i < C.object_count(); ++i)
        for (std::size_t j = 0; j < C.object_count(); ++j) total += nu(i, j);
    return total;
}

RationalFunction series_generating(const FinCat& C) {
    const std::size_t n = C.object_count();
    if (n == 0) return RationalFunction(0);
    RationalFunction t = RationalFunction::variable();
    Matrix<RationalFunction> A(n, n);
    Matrix<RationalFunction> ones(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        ones(i, 0) = RationalFunction(1);
        for (std::size_t j = 0; j < n; ++j) {
            Rational z = C.zeta()(i, j);
            Rational d = (i == j) ? Rational(1) : Rational(0);
            A(i, j) = RationalFunction(d) - RationalFunction(Polynomial(z - d)) * t;
        }
    }
    // delta - (zeta - delta) t is invertible over Q(t): it is delta at t = 0.
    Matrix<RationalFunction> X = mat_solve(A, ones);
    RationalFunction f;
    for (std::size_t i = 0; i < n; ++i) f += X(i, 0);
    return f;
}

Rational series_euler(const FinCat& C) {
    RationalFunction f = series_generating(C);
    if (!f.regular_at(Rational(-1)))
        throw NotInLocalization("series_euler: generating function has a pole at -1");
    return f.eval_at(Rational(-1));
}

Integer nerve_count(const FinCat& C, std::size_t n) {
    const std::size_t m = C.object_count();
    std::vector<Integer> v(m, 1);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Integer> next(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Integer z = C.zeta()(i, j).num();
                if (i == j) --z;
                if (!z.is_zero()) next[i] += z * v[j];
            }
        v = std::move(next);
    }
    Integer total(0);
    for (const auto& x : v) total += x;
    return total;
}

}  // namespace burnside
