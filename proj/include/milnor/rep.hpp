// Exact construction of irreducible highest-weight modules: the truncated
// Verma module is built level by level, the contravariant form is computed
// on each weight space, and its radical is quotiented away on the fly.  The
// resulting Chevalley generator matrices are exact rationals, and the
// longest-element representative is a finite product of nilpotent
// exponentials.
#pragma once

#include "milnor/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace milnor {

struct RepModule {
    RootSystem rs;
    QVec highest;
    long dim = 0;
    std::vector<QVec> basis_weights;        // weight of each basis vector
    std::vector<QMat> e_ops, f_ops, h_ops;  // one triple per simple index
    std::vector<long> zero_block;           // basis indices spanning V^0
    std::map<QVec, std::vector<long>, QVecLess> weight_blocks;
    std::map<QVec, QMat, QVecLess> gram_blocks; // contravariant form per block
};

// Throws std::runtime_error past the dimension cap and std::logic_error if
// any internal cross-check (Freudenthal dimensions, bracket identities)
// fails.
RepModule build_irrep(const HighestWeight& hw, long dim_cap = 2000);

struct LongestElementOperator {
    QMat matrix;
    std::vector<int> reduced_word_used;
};

// Product over a reduced word of w0 of exp(f_i) exp(-e_i) exp(f_i); uses the
// deterministic word from longest_element unless one is supplied.
LongestElementOperator w0_representative(const RepModule& m);
LongestElementOperator w0_representative(const RepModule& m, const std::vector<int>& reduced_word);

struct ConditionIResult {
    bool ok = false;
    std::optional<QVec> moved_vector; // a zero-weight vector not fixed, in basis coordinates
};

// True iff the longest-element representative restricts to the identity on
// the zero-weight block (exact test).
ConditionIResult condition_i_check(const RepModule& m);

// exp of a nilpotent exact matrix (finite series)
QMat nilpotent_exp(const QMat& n);

} // namespace milnor
