#include "milnor/criterion.hpp"

#include <omp.h>

#include <stdexcept>

namespace milnor {

std::string RepId::to_string() const {
    std::string s(1, type_label);
    s += std::to_string(rank);
    s += " [";
    for (std::size_t i = 0; i < fw_coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fw_coords[i]);
    }
    return s + "]";
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Milnorian: return "Milnorian";
        case Verdict::NonMilnorianCriterion: return "non-Milnorian-criterion";
        case Verdict::MilnorianTrivially: return "Milnorian-trivially";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

CriterionReport evaluate(const RepId& id, long weight_dim_cap, long rep_dim_cap) {
    CriterionReport rep;
    rep.rep_id = id;

    RootSystem rs = build_root_system(id.type_label, id.rank);
    HighestWeight hw{id.fw_coords, rs};
    WeightSystem ws = weight_system(hw, weight_dim_cap);
    rep.dim = ws.total_dim;
    rep.zero_weight_dim = zero_weight_multiplicity(ws);

    ConditionIIIResult c3 = condition_iii_check(ws);
    rep.cond_iii = c3.ok;
    if (c3.ok)
        rep.x0 = c3.x0;
    else
        rep.cond_iii_witness = c3.offending_weight;

    if (rep.zero_weight_dim == 0) {
        // no vector is fixed by the Cartan subgroup, so the fixed-vector
        // condition holds vacuously and the module needs no construction
        rep.cond_i = true;
        rep.verdict = Verdict::MilnorianTrivially;
        return rep;
    }

    RepModule mod = build_irrep(hw, rep_dim_cap);
    rep.cond_i = condition_i_check(mod).ok;

    if (!rep.cond_i)
        rep.verdict = Verdict::NonMilnorianCriterion;
    else if (rep.cond_iii)
        rep.verdict = Verdict::Milnorian;
    else
        rep.verdict = Verdict::Undecided;

    // re-validate the emitted certificate independently of the search path
    if (rep.verdict == Verdict::Milnorian) {
        WeylElement w0 = longest_element(rs);
        QVec img = w0.matrix.apply(*rep.x0);
        for (auto& v : img) v = -v;
        if (!(img == *rep.x0)) throw std::logic_error("X0 certificate is not (-w0)-fixed");
        for (const auto& [w, m] : ws.entries) {
            if (qvec_is_zero(w)) continue;
            if (qdot(w, *rep.x0) == 0) throw std::logic_error("X0 certificate vanishes on a nonzero weight");
        }
    }
    return rep;
}

std::vector<CriterionReport> scan(const std::vector<RepId>& catalog, long weight_dim_cap, long rep_dim_cap,
                                  bool parallel) {
    std::vector<CriterionReport> out(catalog.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < static_cast<long>(catalog.size()); ++i) {
        try {
            out[i] = evaluate(catalog[i], weight_dim_cap, rep_dim_cap);
        } catch (const std::exception& e) {
            out[i].rep_id = catalog[i];
            out[i].error = e.what();
        }
    }
    return out;
}

} // namespace milnor
