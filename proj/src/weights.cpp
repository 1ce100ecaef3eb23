#include "milnor/weights.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace milnor {

namespace {

// exact coordinates of v in the simple-root basis (via the Gram system)
QVec simple_root_coords(const RootSystem& rs, const QVec& v) {
    int n = rs.rank;
    QMat gram(n, n);
    QVec rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) gram(i, j) = qdot(rs.simple_roots[i], rs.simple_roots[j]);
        rhs[i] = qdot(rs.simple_roots[i], v);
    }
    return qmat_solve(gram, rhs);
}

bool in_root_span(const RootSystem& rs, const QVec& v) {
    QVec c = simple_root_coords(rs, v);
    QVec back(v.size(), Rat(0));
    for (int k = 0; k < rs.rank; ++k) back = qvec_add(back, qvec_scale(rs.simple_roots[k], c[k]));
    return back == v;
}

// mu is a weight of L(lambda) iff its dominant fold nu satisfies
// lambda - nu = nonnegative integer combination of simple roots.
bool is_module_weight(const RootSystem& rs, const QVec& lambda, const QVec& mu) {
    QVec nu = fold_dominant(rs, mu);
    QVec diff = qvec_sub(lambda, nu);
    if (!in_root_span(rs, diff)) return false;
    QVec c = simple_root_coords(rs, diff);
    for (const auto& x : c) {
        if (x < 0) return false;
        if (x.get_den() != 1) return false;
    }
    return true;
}

} // namespace

QVec HighestWeight::ambient() const {
    if (static_cast<int>(fw_coords.size()) != rs.rank)
        throw std::invalid_argument("highest weight has wrong number of coordinates");
    QVec v(rs.ambient_dim, Rat(0));
    for (int i = 0; i < rs.rank; ++i) {
        if (fw_coords[i] < 0) throw std::invalid_argument("highest weight must be dominant (nonnegative coordinates)");
        v = qvec_add(v, qvec_scale(rs.fundamental_weights[i], Rat(fw_coords[i])));
    }
    return v;
}

mpz_class weyl_dimension(const RootSystem& rs, const QVec& hw) {
    QVec lr = qvec_add(hw, rs.weyl_vector);
    Rat num(1), den(1);
    for (const auto& a : rs.positive_roots) {
        num *= qdot(lr, a);
        den *= qdot(rs.weyl_vector, a);
    }
    Rat d = num / den;
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return d.get_num();
}

WeightSystem weight_system(const HighestWeight& hw, long dim_cap) {
    const RootSystem& rs = hw.rs;
    QVec lambda = hw.ambient();
    mpz_class dim = weyl_dimension(rs, lambda);
    if (dim > dim_cap)
        throw std::runtime_error("module dimension " + dim.get_str() + " exceeds the cap of " +
                                 std::to_string(dim_cap));

    // all module weights by downward closure (every weight below lambda is
    // reachable by single simple-root steps through weights), then the
    // dominant ones ordered by depth
    WeightMap seen;
    std::deque<QVec> queue;
    seen[lambda] = 1;
    queue.push_back(lambda);
    std::vector<QVec> dominant;
    while (!queue.empty()) {
        QVec mu = queue.front();
        queue.pop_front();
        if (is_dominant(rs, mu)) dominant.push_back(mu);
        for (int i = 0; i < rs.rank; ++i) {
            QVec nu = qvec_sub(mu, rs.simple_roots[i]);
            if (seen.count(nu)) continue;
            if (!is_module_weight(rs, lambda, nu)) continue;
            seen[nu] = 1;
            queue.push_back(nu);
        }
    }
    std::sort(dominant.begin(), dominant.end(), [&](const QVec& a, const QVec& b) {
        Rat ha = qdot(qvec_sub(lambda, a), rs.weyl_vector);
        Rat hb = qdot(qvec_sub(lambda, b), rs.weyl_vector);
        if (ha != hb) return ha < hb;
        return qvec_less(a, b);
    });

    // Freudenthal recursion over dominant weights, shallower ones first
    WeightMap mult;
    QVec lr = qvec_add(lambda, rs.weyl_vector);
    Rat lr2 = qdot(lr, lr);
    auto mult_of = [&](const QVec& v) -> long {
        auto it = mult.find(fold_dominant(rs, v));
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& mu : dominant) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        QVec mr = qvec_add(mu, rs.weyl_vector);
        Rat denom = lr2 - qdot(mr, mr);
        Rat sum(0);
        for (const auto& a : rs.positive_roots) {
            for (long k = 1;; ++k) {
                QVec up = qvec_add(mu, qvec_scale(a, Rat(k)));
                if (!is_module_weight(rs, lambda, up)) break;
                long m = mult_of(up);
                if (m > 0) sum += Rat(m) * qdot(up, a);
            }
        }
        Rat value = 2 * sum / denom;
        if (value.get_den() != 1) throw std::logic_error("Freudenthal produced a non-integer multiplicity");
        mult[mu] = static_cast<long>(value.get_num().get_si());
    }

    // expand Weyl orbits
    WeightSystem ws;
    ws.rs = rs;
    ws.highest = lambda;
    long total = 0;
    for (const auto& mu : dominant) {
        long m = mult[mu];
        // orbit of mu under W by closure under simple reflections
        std::vector<QVec> orbit{mu};
        WeightMap seen;
        seen[mu] = 1;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (int i = 0; i < rs.rank; ++i) {
                Rat c = rs.pairing(orbit[k], i);
                if (c == 0) continue;
                QVec img = qvec_sub(orbit[k], qvec_scale(rs.simple_roots[i], c));
                if (seen.emplace(img, 1).second) orbit.push_back(img);
            }
        for (const auto& w : orbit) {
            ws.entries[w] = m;
            total += m;
        }
    }
    ws.total_dim = total;
    if (mpz_class(total) != dim)
        throw std::logic_error("Freudenthal total " + std::to_string(total) +
                               " disagrees with the Weyl dimension " + dim.get_str());
    return ws;
}

bool has_zero_weight(const WeightSystem& ws) { return zero_weight_multiplicity(ws) > 0; }

long zero_weight_multiplicity(const WeightSystem& ws) {
    QVec zero(ws.rs.ambient_dim, Rat(0));
    auto it = ws.entries.find(zero);
    return it == ws.entries.end() ? 0 : it->second;
}

ConditionIIIResult condition_iii_check(const WeightSystem& ws) {
    const RootSystem& rs = ws.rs;
    auto fbasis = minus_w0_fixed_subspace(rs);

    ConditionIIIResult res;
    for (const auto& [w, m] : ws.entries) {
        if (qvec_is_zero(w)) continue;
        bool vanishes = true;
        for (const auto& f : fbasis)
            if (qdot(w, f) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) {
            res.ok = false;
            res.offending_weight = w;
            return res;
        }
    }

    auto all_nonvanishing = [&](const QVec& x) {
        for (const auto& [w, m] : ws.entries) {
            if (qvec_is_zero(w)) continue;
            if (qdot(w, x) == 0) return false;
        }
        return true;
    };

    // start from the Weyl vector projected onto F (rho is itself fixed by
    // -w0, so this is rho), cleared to integers
    WeylElement w0 = longest_element(rs);
    QVec proj = qvec_scale(qvec_sub(rs.weyl_vector, w0.matrix.apply(rs.weyl_vector)), Rat(1, 2));
    QVec base = qvec_primitive(proj);
    if (!is_strictly_dominant(rs, base)) throw std::logic_error("projected Weyl vector not strictly dominant");

    if (all_nonvanishing(base)) {
        res.ok = true;
        res.x0 = base;
        return res;
    }

    // perturb within F by lattice steps around a dilation of the base point
    std::size_t nb = fbasis.size();
    for (long radius = 1; radius <= 64; radius *= 2) {
        QVec center = qvec_scale(base, Rat(4 * radius));
        std::vector<long> c(nb, -radius);
        while (true) {
            QVec x = center;
            for (std::size_t j = 0; j < nb; ++j)
                if (c[j] != 0) x = qvec_add(x, qvec_scale(fbasis[j], Rat(c[j])));
            if (is_strictly_dominant(rs, x) && all_nonvanishing(x)) {
                res.ok = true;
                res.x0 = qvec_primitive(x);
                return res;
            }
            std::size_t j = 0;
            while (j < nb && c[j] == radius) c[j++] = -radius;
            if (j == nb) break;
            ++c[j];
        }
    }
    throw std::logic_error("X0 lattice search exhausted without a witness");
}

DominantVector x0_candidate(const WeightSystem& ws) {
    ConditionIIIResult r = condition_iii_check(ws);
    if (!r.ok)
        throw std::runtime_error("condition (iii) fails: weight " + qvec_to_string(r.offending_weight) +
                                 " vanishes on the (-w0)-fixed subspace");
    WeylElement w0 = longest_element(ws.rs);
    QVec back = w0.matrix.apply(r.x0);
    for (auto& v : back) v = -v;
    if (!(back == r.x0)) throw std::logic_error("X0 witness is not (-w0)-fixed");
    if (!is_strictly_dominant(ws.rs, r.x0)) throw std::logic_error("X0 witness is not strictly dominant");
    DominantVector dv;
    dv.coords = r.x0;
    dv.strict = true;
    return dv;
}

} // namespace milnor
