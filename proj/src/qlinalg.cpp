#include "milnor/qlinalg.hpp"

#include <functional>

namespace milnor {

QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qvec_scale(const QVec& a, const Rat& c) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Rat qdot(const QVec& a, const QVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

bool qvec_less(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

QVec qvec_primitive(const QVec& a) {
    mpz_class den(1);
    for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g(0);
    QVec ints(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class n = a[i].get_num() * (den / a[i].get_den());
        ints[i] = Rat(n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return ints;
    int sign = 0;
    for (const auto& x : ints)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    Rat scale = Rat(sign) / Rat(g);
    for (auto& x : ints) x *= scale;
    return ints;
}

std::string qvec_to_string(const QVec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].get_str();
    }
    return s + ")";
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QVec QMat::apply(const QVec& v) const {
    QVec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool QMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::size_t QMat::hash() const {
    std::size_t h = 1469598103934665603ULL;
    std::hash<std::string> sh;
    for (const auto& x : a_) {
        h ^= sh(x.get_str());
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t qmat_rref(QMat& m, std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(piv, j), m(rank, j));
        Rat inv = 1 / m(rank, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<QVec> qmat_nullspace(const QMat& m0) {
    QMat m = m0;
    std::vector<std::size_t> pivots;
    qmat_rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t qmat_rank(QMat m) { return qmat_rref(m); }

QMat qmat_inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::runtime_error("qmat_inverse: not square");
    std::size_t n = m.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (qmat_rref(aug) != n) throw std::runtime_error("qmat_inverse: singular matrix");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

QVec qmat_solve(const QMat& m, const QVec& b) {
    std::size_t n = m.rows();
    QMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = qmat_rref(aug, &pivots);
    if (rank != n || (rank > 0 && pivots.back() == n))
        throw std::runtime_error("qmat_solve: singular system");
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

} // namespace milnor
