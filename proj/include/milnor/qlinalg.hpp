// Exact rational vectors and dense matrices over GMP rationals, plus the
// small amount of linear algebra the exact modules need (RREF, nullspace,
// inverse, solving).  Dimensions stay small (a few hundred at most), so a
// simple fraction-exact Gauss-Jordan is all we ever want.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const QVec& a, const Rat& c);
Rat qdot(const QVec& a, const QVec& b);
bool qvec_is_zero(const QVec& a);
// strict lexicographic order, used to keep weight maps deterministic
bool qvec_less(const QVec& a, const QVec& b);
// divide by the gcd of numerators times lcm of denominators: the primitive
// integer vector on the same ray (first nonzero entry made positive).
QVec qvec_primitive(const QVec& a);
std::string qvec_to_string(const QVec& a);

class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rat& c) const;
    QVec apply(const QVec& v) const;

    QMat transpose() const;
    bool is_identity() const;
    bool is_zero() const;

    // deterministic content hash (for Weyl-group dedup)
    std::size_t hash() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Row-reduce in place; returns the rank and fills `pivots` with the pivot
// column of each nonzero row.
std::size_t qmat_rref(QMat& m, std::vector<std::size_t>* pivots = nullptr);

// Basis of the right nullspace, one QVec per basis vector.
std::vector<QVec> qmat_nullspace(const QMat& m);

std::size_t qmat_rank(QMat m);

// Inverse of a square matrix; throws std::runtime_error if singular.
QMat qmat_inverse(const QMat& m);

// Solve m x = b for square nonsingular m.
QVec qmat_solve(const QMat& m, const QVec& b);

} // namespace milnor
