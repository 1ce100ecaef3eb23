#include "milnor/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace milnor {

namespace {

using Col = std::vector<std::pair<long, Rat>>; // sparse column over basis indices

Col col_unit(long idx) { return {{idx, Rat(1)}}; }

void col_add(Col& into, const Col& other, const Rat& scale) {
    for (const auto& [i, c] : other) {
        bool found = false;
        for (auto& [j, d] : into)
            if (j == i) {
                d += c * scale;
                found = true;
                break;
            }
        if (!found && c * scale != 0) into.emplace_back(i, c * scale);
    }
}

struct Builder {
    const RootSystem& rs;
    QVec lambda;
    std::vector<QVec> basis_weights;
    std::vector<std::vector<Col>> ecol, fcol; // [simple index][basis index]
    std::map<QVec, std::vector<long>, QVecLess> blocks;
    std::map<QVec, QMat, QVecLess> gram;

    explicit Builder(const RootSystem& r) : rs(r), ecol(r.rank), fcol(r.rank) {}

    long add_basis_vector(const QVec& wt) {
        long idx = static_cast<long>(basis_weights.size());
        basis_weights.push_back(wt);
        for (int i = 0; i < rs.rank; ++i) {
            ecol[i].emplace_back();
            fcol[i].emplace_back();
        }
        blocks[wt].push_back(idx);
        return idx;
    }

    // <basis[p], sum_r col[r] basis[r]> using the Gram block of p's weight
    Rat pair_with(long p, const Col& col) {
        const QVec& wt = basis_weights[p];
        const auto& blk = blocks.at(wt);
        const QMat& g = gram.at(wt);
        long prow = -1;
        for (std::size_t r = 0; r < blk.size(); ++r)
            if (blk[r] == p) prow = static_cast<long>(r);
        Rat s(0);
        for (const auto& [idx, c] : col) {
            if (basis_weights[idx] != wt) continue; // cross-weight terms are orthogonal
            long q = -1;
            for (std::size_t r = 0; r < blk.size(); ++r)
                if (blk[r] == idx) q = static_cast<long>(r);
            s += c * g(prow, q);
        }
        return s;
    }

    Col apply_cols(const std::vector<Col>& cols, const Col& v) {
        Col out;
        for (const auto& [idx, c] : v) col_add(out, cols[idx], c);
        return out;
    }
};

} // namespace

RepModule build_irrep(const HighestWeight& hw, long dim_cap) {
    const RootSystem& rs = hw.rs;
    WeightSystem ws = weight_system(hw, dim_cap);

    // weights ordered by depth below lambda (exact integer heights)
    std::vector<QVec> order;
    for (const auto& [w, m] : ws.entries) order.push_back(w);
    QMat gramm(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) gramm(i, j) = qdot(rs.simple_roots[i], rs.simple_roots[j]);
    std::map<QVec, Rat, QVecLess> height;
    for (const auto& w : order) {
        QVec rhs(rs.rank);
        QVec diff = qvec_sub(ws.highest, w);
        for (int i = 0; i < rs.rank; ++i) rhs[i] = qdot(rs.simple_roots[i], diff);
        QVec c = qmat_solve(gramm, rhs);
        Rat h(0);
        for (const auto& x : c) h += x;
        height[w] = h;
    }
    std::sort(order.begin(), order.end(), [&](const QVec& a, const QVec& b) {
        const Rat &ha = height.at(a), &hb = height.at(b);
        if (ha != hb) return ha < hb;
        return qvec_less(a, b);
    });

    Builder bld(rs);

    for (const auto& mu : order) {
        long expected = ws.entries.at(mu);
        if (mu == ws.highest) {
            long idx = bld.add_basis_vector(mu);
            QMat g(1, 1);
            g(0, 0) = 1;
            bld.gram[mu] = g;
            (void)idx;
            continue;
        }

        // candidate vectors f_i . b for b in the block of mu + alpha_i
        std::vector<std::pair<int, long>> cand;
        for (int i = 0; i < rs.rank; ++i) {
            QVec up = qvec_add(mu, rs.simple_roots[i]);
            auto it = bld.blocks.find(up);
            if (it == bld.blocks.end()) continue;
            for (long b : it->second) cand.emplace_back(i, b);
        }
        std::size_t m = cand.size();
        if (m == 0) throw std::logic_error("weight with no candidates above it");

        // cross Gram of the candidates:
        //   <f_i b, f_j b'> = <b, f_j (e_i b')> + [i == j] <wt(b'), a_i^vee> <b, b'>
        QMat cg(m, m);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                auto [ip, bp] = cand[p];
                auto [iq, bq] = cand[q];
                Col eb = bld.ecol[ip][bq];              // e_{ip} b_q, known one level up
                Col feb = bld.apply_cols(bld.fcol[iq], eb); // f_{iq} e_{ip} b_q
                Rat val = bld.pair_with(bp, feb);
                if (ip == iq) {
                    Rat h = rs.pairing(bld.basis_weights[bq], ip);
                    val += h * bld.pair_with(bp, col_unit(bq));
                }
                cg(p, q) = val;
            }

        if (static_cast<long>(qmat_rank(cg)) != expected)
            throw std::logic_error("contravariant-form rank disagrees with Freudenthal multiplicity");

        // greedy selection of a nondegenerate principal submatrix
        std::vector<std::size_t> sel;
        for (std::size_t q = 0; q < m && static_cast<long>(sel.size()) < expected; ++q) {
            std::vector<std::size_t> trial = sel;
            trial.push_back(q);
            QMat sub(trial.size(), trial.size());
            for (std::size_t a = 0; a < trial.size(); ++a)
                for (std::size_t b = 0; b < trial.size(); ++b) sub(a, b) = cg(trial[a], trial[b]);
            if (qmat_rank(sub) == trial.size()) sel = std::move(trial);
        }
        if (static_cast<long>(sel.size()) != expected)
            throw std::logic_error("failed to select a basis of a weight space");

        std::vector<long> new_idx;
        for (std::size_t s : sel) {
            auto [i, b] = cand[s];
            long idx = bld.add_basis_vector(mu);
            new_idx.push_back(idx);
            bld.fcol[i][b] = col_unit(idx);
        }
        QMat g(expected, expected);
        for (long a = 0; a < expected; ++a)
            for (long b = 0; b < expected; ++b) g(a, b) = cg(sel[a], sel[b]);
        bld.gram[mu] = g;

        // non-selected candidates, expanded over the new basis via the form
        for (std::size_t q = 0; q < m; ++q) {
            if (std::find(sel.begin(), sel.end(), q) != sel.end()) continue;
            QVec rhs(expected);
            for (long a = 0; a < expected; ++a) rhs[a] = cg(sel[a], q);
            QVec x = qmat_solve(g, rhs);
            Col col;
            for (long a = 0; a < expected; ++a)
                if (x[a] != 0) col.emplace_back(new_idx[a], x[a]);
            auto [i, b] = cand[q];
            bld.fcol[i][b] = std::move(col);
        }

        // e_j action on the new basis vectors:
        //   e_j (f_i b) = f_i (e_j b) + [i == j] <wt(b), a_j^vee> b
        for (long k = 0; k < expected; ++k) {
            auto [i, b] = cand[sel[k]];
            for (int j = 0; j < rs.rank; ++j) {
                Col res = bld.apply_cols(bld.fcol[i], bld.ecol[j][b]);
                if (i == j) col_add(res, col_unit(b), rs.pairing(bld.basis_weights[b], j));
                bld.ecol[j][new_idx[k]] = std::move(res);
            }
        }
    }

    long dim = static_cast<long>(bld.basis_weights.size());
    if (dim != ws.total_dim) throw std::logic_error("irrep dimension mismatch");

    RepModule mod;
    mod.rs = rs;
    mod.highest = ws.highest;
    mod.dim = dim;
    mod.basis_weights = bld.basis_weights;
    mod.weight_blocks = bld.blocks;
    mod.gram_blocks = bld.gram;
    QVec zero(rs.ambient_dim, Rat(0));
    if (bld.blocks.count(zero)) mod.zero_block = bld.blocks.at(zero);

    for (int i = 0; i < rs.rank; ++i) {
        QMat E(dim, dim), F(dim, dim), H(dim, dim);
        for (long b = 0; b < dim; ++b) {
            for (const auto& [r, c] : bld.ecol[i][b]) E(r, b) = c;
            for (const auto& [r, c] : bld.fcol[i][b]) F(r, b) = c;
            Rat h = rs.pairing(mod.basis_weights[b], i);
            if (h.get_den() != 1) throw std::logic_error("non-integral h eigenvalue");
            H(b, b) = h;
        }
        mod.e_ops.push_back(std::move(E));
        mod.f_ops.push_back(std::move(F));
        mod.h_ops.push_back(std::move(H));
    }

    // exact bracket identities certify the construction
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            QMat comm = mod.e_ops[i] * mod.f_ops[j] - mod.f_ops[j] * mod.e_ops[i];
            if (i == j) {
                if (!(comm == mod.h_ops[i])) throw std::logic_error("[e_i, f_i] != h_i");
            } else if (!comm.is_zero()) {
                throw std::logic_error("[e_i, f_j] != 0 for i != j");
            }
            QMat he = mod.h_ops[i] * mod.e_ops[j] - mod.e_ops[j] * mod.h_ops[i];
            if (!(he == mod.e_ops[j] * rs.pairing(rs.simple_roots[j], i)))
                throw std::logic_error("[h_i, e_j] has the wrong eigenvalue");
            QMat hf = mod.h_ops[i] * mod.f_ops[j] - mod.f_ops[j] * mod.h_ops[i];
            if (!(hf == mod.f_ops[j] * (-rs.pairing(rs.simple_roots[j], i))))
                throw std::logic_error("[h_i, f_j] has the wrong eigenvalue");
        }

    return mod;
}

QMat nilpotent_exp(const QMat& n) {
    std::size_t d = n.rows();
    QMat term = QMat::identity(d);
    QMat sum = term;
    Rat fact(1);
    for (std::size_t k = 1; k <= d; ++k) {
        term = term * n;
        if (term.is_zero()) break;
        fact *= Rat(static_cast<long>(k));
        sum = sum + term * (1 / fact);
    }
    return sum;
}

LongestElementOperator w0_representative(const RepModule& m) {
    return w0_representative(m, longest_element(m.rs).word);
}

LongestElementOperator w0_representative(const RepModule& m, const std::vector<int>& reduced_word) {
    LongestElementOperator op;
    op.reduced_word_used = reduced_word;
    op.matrix = QMat::identity(m.dim);
    for (int i : reduced_word) {
        QMat ef = nilpotent_exp(m.f_ops[i]);
        QMat eme = nilpotent_exp(m.e_ops[i] * Rat(-1));
        op.matrix = op.matrix * (ef * eme * ef);
    }

    // the operator must permute weight spaces according to w0
    WeylElement w0 = longest_element(m.rs);
    for (long b = 0; b < m.dim; ++b) {
        QVec target = w0.matrix.apply(m.basis_weights[b]);
        for (long r = 0; r < m.dim; ++r)
            if (op.matrix(r, b) != 0 && !(m.basis_weights[r] == target))
                throw std::logic_error("longest-element operator does not permute weight spaces");
    }
    return op;
}

ConditionIResult condition_i_check(const RepModule& m) {
    ConditionIResult res;
    LongestElementOperator op = w0_representative(m);
    res.ok = true;
    for (long j : m.zero_block) {
        bool fixed = true;
        for (long r = 0; r < m.dim; ++r)
            if (op.matrix(r, j) != (r == j ? 1 : 0)) {
                fixed = false;
                break;
            }
        if (!fixed) {
            res.ok = false;
            QVec v(m.dim, Rat(0));
            v[j] = 1;
            res.moved_vector = v;
            break;
        }
    }
    return res;
}

} // namespace milnor
