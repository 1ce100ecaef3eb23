// Reduced irreducible root systems in their standard orthonormal
// realizations, with exact rational coordinates, and the Weyl-group
// machinery built on top of them: the longest element, stabilizers of
// dominant vectors, and the (-w0)-fixed subspace.
#pragma once

#include "milnor/qlinalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace milnor {

struct RootSystem {
    char type_label = '?';      // one of A,B,C,D,E,F,G
    int rank = 0;
    std::size_t ambient_dim = 0;
    std::vector<QVec> simple_roots;
    QMat cartan_matrix;         // a_ij = 2(a_i,a_j)/(a_j,a_j)
    std::vector<QVec> positive_roots;
    std::vector<QVec> fundamental_weights; // inside span of the roots
    QVec weyl_vector;                      // half-sum of positive roots

    std::string name() const { return std::string(1, type_label) + std::to_string(rank); }
    // <v, alpha_i^vee> as a rational
    Rat pairing(const QVec& v, int i) const;
    std::uint64_t weyl_order() const;
};

struct WeylElement {
    std::vector<int> word; // indices of simple reflections, reduced
    QMat matrix;           // ambient_dim x ambient_dim
};

struct DominantVector {
    QVec coords;
    bool strict = false;
};

// Build a root system from its type; throws std::invalid_argument for
// invalid (type, rank) combinations.
RootSystem build_root_system(char type_label, int rank);
RootSystem build_root_system(const std::string& name); // "B2", "a3", ...

// Matrix of the reflection in simple root i.
QMat simple_reflection_matrix(const RootSystem& rs, int i);

// Number of positive roots sent to negative ones; equals word length for a
// reduced word.
std::size_t weyl_inversions(const RootSystem& rs, const QMat& m);

WeylElement longest_element(const RootSystem& rs);

// Basis of F = {X : -w0(X) = X}; always nonempty for irreducible types.
std::vector<QVec> minus_w0_fixed_subspace(const RootSystem& rs);

// True iff w maps every root positive on X to a root nonnegative on X.
// Asserts agreement with the direct stabilizer test (they coincide for
// dominant X); throws std::logic_error on disagreement.
bool weyl_weak_stabilizer_check(const RootSystem& rs, const WeylElement& w, const DominantVector& x);

// Full Weyl group, breadth-first over reduced words, ties broken by lowest
// simple index.  Throws std::runtime_error past the size cap.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              std::uint64_t cap = 1000000);

// W_X computed both as {w : wX = X} and as the intersection of the
// fundamental-weight stabilizers over simple roots positive on X; the two
// computations are cross-checked.
std::vector<WeylElement> stabilizer_intersection(const RootSystem& rs, const DominantVector& x,
                                                 std::uint64_t cap = 1000000);

bool is_dominant(const RootSystem& rs, const QVec& v);
bool is_strictly_dominant(const RootSystem& rs, const QVec& v);

// Weyl-fold v into the closed dominant chamber (greedy simple reflections).
QVec fold_dominant(const RootSystem& rs, QVec v);

} // namespace milnor
