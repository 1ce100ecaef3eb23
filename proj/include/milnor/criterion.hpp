// Combines the zero-weight reduction, the longest-element fixed-vector test
// and the non-swinging condition into a single verdict per representation,
// with batch scanning over catalogs.
#pragma once

#include "milnor/rep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace milnor {

struct RepId {
    char type_label = '?';
    int rank = 0;
    std::vector<long> fw_coords;

    std::string to_string() const;
};

enum class Verdict {
    Milnorian,              // zero weight present, conditions (i) and (iii) hold
    NonMilnorianCriterion,  // zero weight present, condition (i) fails
    MilnorianTrivially,     // no zero weight
    Undecided,              // condition (iii) fails, the theorem does not apply
};

std::string verdict_name(Verdict v);

struct CriterionReport {
    RepId rep_id;
    long dim = 0;
    long zero_weight_dim = 0;
    bool cond_i = false;
    bool cond_iii = false;
    std::optional<QVec> x0;               // present iff cond_iii
    std::optional<QVec> cond_iii_witness; // offending weight when cond_iii fails
    Verdict verdict = Verdict::Undecided;
    std::optional<std::string> error;     // set when evaluation failed (cap exceeded, ...)
};

// Evaluate one representation.  Cap errors propagate as std::runtime_error.
CriterionReport evaluate(const RepId& id, long weight_dim_cap = 100000, long rep_dim_cap = 2000);

// Evaluate a catalog; failures are recorded inline in the report, the scan
// itself never throws.  Entries are independent and evaluated in parallel.
std::vector<CriterionReport> scan(const std::vector<RepId>& catalog, long weight_dim_cap = 100000,
                                  long rep_dim_cap = 2000, bool parallel = true);

} // namespace milnor
