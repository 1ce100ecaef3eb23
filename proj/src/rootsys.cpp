#include "milnor/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace milnor {

namespace {

QVec unit(std::size_t dim, std::size_t i, const Rat& c = Rat(1)) {
    QVec v(dim, Rat(0));
    v[i] = c;
    return v;
}

std::vector<QVec> simple_roots_for(char t, int n, std::size_t& dim) {
    std::vector<QVec> s;
    switch (t) {
        case 'A': {
            dim = n + 1;
            for (int i = 0; i < n; ++i) {
                QVec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        }
        case 'B': {
            dim = n;
            for (int i = 0; i + 1 < n; ++i) {
                QVec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(unit(dim, n - 1));
            break;
        }
        case 'C': {
            dim = n;
            for (int i = 0; i + 1 < n; ++i) {
                QVec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(unit(dim, n - 1, Rat(2)));
            break;
        }
        case 'D': {
            dim = n;
            for (int i = 0; i + 1 < n; ++i) {
                QVec v(dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            QVec v(dim, Rat(0));
            v[n - 2] = 1;
            v[n - 1] = 1;
            s.push_back(v);
            break;
        }
        case 'E': {
            dim = 8;
            QVec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            s.push_back(a1);
            QVec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            s.push_back(a2);
            for (int i = 0; i < n - 2; ++i) {
                QVec v(8, Rat(0));
                v[i] = -1;
                v[i + 1] = 1;
                s.push_back(v);
            }
            break;
        }
        case 'F': {
            dim = 4;
            s.push_back(qvec_sub(unit(4, 1), unit(4, 2)));
            s.push_back(qvec_sub(unit(4, 2), unit(4, 3)));
            s.push_back(unit(4, 3));
            QVec a4(4, Rat(-1, 2));
            a4[0] = Rat(1, 2);
            s.push_back(a4);
            break;
        }
        case 'G': {
            dim = 3;
            s.push_back(qvec_sub(unit(3, 0), unit(3, 1)));
            QVec a2(3, Rat(0));
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            s.push_back(a2);
            break;
        }
        default:
            throw std::invalid_argument("unknown root system type");
    }
    return s;
}

std::size_t expected_positive_count(char t, int n) {
    switch (t) {
        case 'A': return std::size_t(n) * (n + 1) / 2;
        case 'B':
        case 'C': return std::size_t(n) * n;
        case 'D': return std::size_t(n) * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

QVec reflect(const QVec& x, const QVec& alpha) {
    Rat c = 2 * qdot(x, alpha) / qdot(alpha, alpha);
    return qvec_sub(x, qvec_scale(alpha, c));
}

} // namespace

Rat RootSystem::pairing(const QVec& v, int i) const {
    const QVec& a = simple_roots[i];
    return 2 * qdot(v, a) / qdot(a, a);
}

std::uint64_t RootSystem::weyl_order() const {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (type_label) {
        case 'A': return fact(rank + 1);
        case 'B':
        case 'C': return (std::uint64_t(1) << rank) * fact(rank);
        case 'D': return (std::uint64_t(1) << (rank - 1)) * fact(rank);
        case 'E': return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
        case 'F': return 1152;
        case 'G': return 12;
    }
    return 0;
}

RootSystem build_root_system(char type_label, int rank) {
    char t = std::toupper(static_cast<unsigned char>(type_label));
    bool ok = false;
    switch (t) {
        case 'A': ok = rank >= 1; break;
        case 'B':
        case 'C': ok = rank >= 1; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
    }
    if (!ok || rank > 64)
        throw std::invalid_argument("invalid root system " + std::string(1, t) + std::to_string(rank));

    RootSystem rs;
    rs.type_label = t;
    rs.rank = rank;
    rs.simple_roots = simple_roots_for(t, rank, rs.ambient_dim);

    // all roots by reflection closure of the simple roots
    std::set<QVec, decltype(&qvec_less)> roots(&qvec_less);
    std::vector<QVec> frontier = rs.simple_roots;
    for (const auto& a : frontier) roots.insert(a);
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& r : frontier)
            for (const auto& a : rs.simple_roots) {
                QVec img = reflect(r, a);
                if (roots.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }

    // positivity = nonnegative coordinates in the simple-root basis
    QMat basis(rs.ambient_dim, rank);
    for (int j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < rs.ambient_dim; ++i) basis(i, j) = rs.simple_roots[j][i];
    for (const auto& r : roots) {
        // least-squares-free exact solve via the Gram system (basis has full column rank)
        QMat gram(rank, rank);
        QVec rhs(rank);
        for (int i = 0; i < rank; ++i) {
            for (int j = 0; j < rank; ++j) gram(i, j) = qdot(rs.simple_roots[i], rs.simple_roots[j]);
            rhs[i] = qdot(rs.simple_roots[i], r);
        }
        QVec coeff = qmat_solve(gram, rhs);
        bool nonneg = true;
        for (const auto& c : coeff)
            if (c < 0) {
                nonneg = false;
                break;
            }
        if (nonneg) rs.positive_roots.push_back(r);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), qvec_less);

    if (rs.positive_roots.size() != expected_positive_count(t, rank))
        throw std::logic_error("reflection closure produced wrong positive-root count for " + rs.name());
    if (roots.size() != 2 * rs.positive_roots.size())
        throw std::logic_error("root system is not symmetric for " + rs.name());

    rs.cartan_matrix = QMat(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rs.cartan_matrix(i, j) =
                2 * qdot(rs.simple_roots[i], rs.simple_roots[j]) / qdot(rs.simple_roots[j], rs.simple_roots[j]);

    // fundamental weights: omega_i = sum_k c_k alpha_k with sum_k c_k a_kj = delta_ij
    QMat at = rs.cartan_matrix.transpose();
    for (int i = 0; i < rank; ++i) {
        QVec e(rank, Rat(0));
        e[i] = 1;
        QVec c = qmat_solve(at, e);
        QVec w(rs.ambient_dim, Rat(0));
        for (int k = 0; k < rank; ++k) w = qvec_add(w, qvec_scale(rs.simple_roots[k], c[k]));
        rs.fundamental_weights.push_back(w);
    }

    rs.weyl_vector = QVec(rs.ambient_dim, Rat(0));
    for (const auto& r : rs.positive_roots) rs.weyl_vector = qvec_add(rs.weyl_vector, r);
    rs.weyl_vector = qvec_scale(rs.weyl_vector, Rat(1, 2));

    return rs;
}

RootSystem build_root_system(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("root system name too short: " + name);
    char t = name[0];
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw std::invalid_argument("malformed root system name: " + name);
    return build_root_system(t, std::stoi(name.substr(1)));
}

QMat simple_reflection_matrix(const RootSystem& rs, int i) {
    std::size_t d = rs.ambient_dim;
    QMat m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        QVec img = reflect(unit(d, j), rs.simple_roots[i]);
        for (std::size_t r = 0; r < d; ++r) m(r, j) = img[r];
    }
    return m;
}

std::size_t weyl_inversions(const RootSystem& rs, const QMat& m) {
    std::set<QVec, decltype(&qvec_less)> pos(&qvec_less);
    for (const auto& r : rs.positive_roots) pos.insert(r);
    std::size_t count = 0;
    for (const auto& r : rs.positive_roots) {
        QVec img = m.apply(r);
        for (auto& x : img) x = -x;
        if (pos.count(img)) ++count;
    }
    return count;
}

WeylElement longest_element(const RootSystem& rs) {
    QVec v = qvec_scale(rs.weyl_vector, Rat(-1));
    std::vector<int> word;
    while (true) {
        int pick = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (qdot(v, rs.simple_roots[i]) < 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        v = reflect(v, rs.simple_roots[pick]);
        word.push_back(pick);
    }
    WeylElement w;
    w.word = word;
    w.matrix = QMat::identity(rs.ambient_dim);
    for (int i : word) w.matrix = w.matrix * simple_reflection_matrix(rs, i);
    if (w.word.size() != rs.positive_roots.size())
        throw std::logic_error("longest element word length mismatch");
    if (weyl_inversions(rs, w.matrix) != rs.positive_roots.size())
        throw std::logic_error("longest element does not invert all positive roots");
    return w;
}

std::vector<QVec> minus_w0_fixed_subspace(const RootSystem& rs) {
    WeylElement w0 = longest_element(rs);
    // -w0 X = X  <=>  (w0 + id) X = 0
    QMat m = w0.matrix + QMat::identity(rs.ambient_dim);
    auto basis = qmat_nullspace(m);
    for (auto& b : basis) b = qvec_primitive(b);
    if (basis.empty()) throw std::logic_error("(-w0)-fixed subspace is trivial");
    return basis;
}

bool is_dominant(const RootSystem& rs, const QVec& v) {
    for (const auto& a : rs.simple_roots)
        if (qdot(v, a) < 0) return false;
    return true;
}

bool is_strictly_dominant(const RootSystem& rs, const QVec& v) {
    for (const auto& a : rs.simple_roots)
        if (qdot(v, a) <= 0) return false;
    return true;
}

QVec fold_dominant(const RootSystem& rs, QVec v) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : rs.simple_roots)
            if (qdot(v, a) < 0) {
                v = reflect(v, a);
                moved = true;
            }
    }
    return v;
}

bool weyl_weak_stabilizer_check(const RootSystem& rs, const WeylElement& w, const DominantVector& x) {
    if (!is_dominant(rs, x.coords))
        throw std::invalid_argument("weyl_weak_stabilizer_check: X must be dominant");
    bool weak = true;
    for (const auto& r : rs.positive_roots) {
        for (int sign = 0; sign < 2 && weak; ++sign) {
            QVec root = sign ? qvec_scale(r, Rat(-1)) : r;
            if (qdot(root, x.coords) > 0 && qdot(w.matrix.apply(root), x.coords) < 0) weak = false;
        }
        if (!weak) break;
    }
    bool fixes = (w.matrix.apply(x.coords) == x.coords);
    if (weak != fixes)
        throw std::logic_error("weak-stabilizer condition disagrees with the direct stabilizer test");
    return weak;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::uint64_t cap) {
    if (rs.weyl_order() > cap)
        throw std::runtime_error("Weyl group of " + rs.name() + " has " + std::to_string(rs.weyl_order()) +
                                 " elements, above the cap of " + std::to_string(cap));
    std::vector<WeylElement> out;
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
    auto insert_if_new = [&](WeylElement&& w) {
        std::size_t h = w.matrix.hash();
        auto& bucket = seen[h];
        for (auto idx : bucket)
            if (out[idx].matrix == w.matrix) return false;
        bucket.push_back(out.size());
        out.push_back(std::move(w));
        return true;
    };
    WeylElement id;
    id.word = {};
    id.matrix = QMat::identity(rs.ambient_dim);
    insert_if_new(std::move(id));
    std::vector<QMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));
    // breadth-first: level = reduced length, ties broken by lowest index
    std::size_t next = 0;
    while (next < out.size()) {
        std::size_t stop = out.size();
        for (; next < stop; ++next)
            for (int i = 0; i < rs.rank; ++i) {
                WeylElement w;
                w.word = out[next].word;
                w.word.push_back(i);
                w.matrix = out[next].matrix * gens[i];
                insert_if_new(std::move(w));
            }
    }
    if (out.size() != rs.weyl_order()) throw std::logic_error("Weyl enumeration miscounted " + rs.name());
    return out;
}

std::vector<WeylElement> stabilizer_intersection(const RootSystem& rs, const DominantVector& x,
                                                 std::uint64_t cap) {
    auto all = enumerate_weyl_group(rs, cap);
    std::vector<WeylElement> direct;
    for (const auto& w : all)
        if (w.matrix.apply(x.coords) == x.coords) direct.push_back(w);

    std::vector<int> active; // simple roots positive on X
    for (int i = 0; i < rs.rank; ++i)
        if (qdot(x.coords, rs.simple_roots[i]) != 0) active.push_back(i);
    std::vector<const WeylElement*> inter;
    for (const auto& w : all) {
        bool in_all = true;
        for (int i : active)
            if (!(w.matrix.apply(rs.fundamental_weights[i]) == rs.fundamental_weights[i])) {
                in_all = false;
                break;
            }
        if (in_all) inter.push_back(&w);
    }
    if (inter.size() != direct.size())
        throw std::logic_error("stabilizer computations disagree for " + rs.name());
    for (std::size_t i = 0; i < direct.size(); ++i)
        if (!(inter[i]->matrix == direct[i].matrix))
            throw std::logic_error("stabilizer computations disagree for " + rs.name());
    return direct;
}

} // namespace milnor
