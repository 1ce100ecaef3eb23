// Weight systems of irreducible highest-weight modules, computed exactly:
// Freudenthal's multiplicity recursion cross-checked against the Weyl
// dimension formula, the zero-weight predicate, and the hyperplane checks
// behind the non-swinging condition together with the X0 witness search.
#pragma once

#include "milnor/rootsys.hpp"

#include <map>
#include <optional>
#include <vector>

namespace milnor {

struct HighestWeight {
    std::vector<long> fw_coords; // coordinates in the fundamental-weight basis
    RootSystem rs;

    QVec ambient() const; // as a vector in the ambient rational space
};

struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const { return qvec_less(a, b); }
};
using WeightMap = std::map<QVec, long, QVecLess>;

struct WeightSystem {
    RootSystem rs;
    QVec highest;
    WeightMap entries; // weight -> multiplicity
    long total_dim = 0;
};

// Dimension by the Weyl formula (exact).
mpz_class weyl_dimension(const RootSystem& rs, const QVec& hw_ambient);

// Full weight multiset via Freudenthal; throws std::runtime_error carrying
// the computed dimension when it exceeds `dim_cap`, std::invalid_argument
// for non-dominant or non-integral highest weights.
WeightSystem weight_system(const HighestWeight& hw, long dim_cap = 100000);

bool has_zero_weight(const WeightSystem& ws);
long zero_weight_multiplicity(const WeightSystem& ws);

struct ConditionIIIResult {
    bool ok = false;
    QVec offending_weight; // set when !ok: a nonzero weight vanishing on F
    QVec x0;               // set when ok: integer vector in F, strictly dominant,
                           // nonvanishing on every nonzero weight
};

// Tests that no nonzero weight vanishes identically on F = {X : -w0 X = X}
// and, on success, produces the X0 witness by dilation + lattice
// perturbation inside F.
ConditionIIIResult condition_iii_check(const WeightSystem& ws);

// The witness from condition_iii_check as a DominantVector, normalized to
// primitive integer coordinates; throws std::runtime_error when condition
// (iii) fails.
DominantVector x0_candidate(const WeightSystem& ws);

} // namespace milnor
