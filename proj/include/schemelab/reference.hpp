#pragma once
// Published reference values for the hypermatching schemes, transcribed as
// data. Computed results are compared against these, never derived from them.

#include <string>
#include <vector>

namespace schemelab::reference {

// Class counts of M_{4r,2,r} for r = 0..7.
const std::vector<long>& q2_stable_counts();
// Class counts of M_{p,q,2} in the stable range for q = 0..4.
const std::vector<long>& r2_stable_counts();
// Class counts of M_{p,2,2} for p = 6, 7, 8.
const std::vector<long>& m22_counts();

// Commutativity of M_i and M_j at (q, r) = (2, 2), p <= 15, indexed by X label.
enum class Commute { Always, Never, Only6, Only9 };
Commute m22_commute(int i, int j);
std::string to_string(Commute c);

// Symmetric subschemes of M_{p,2,2} as key partitions ("M1|B5+B7|B6").
const std::vector<std::string>& m22_all_p_subschemes();
// p-specific ones; empty for p without any.
std::vector<std::string> m22_subschemes_only_at(int p);

}  // namespace schemelab::reference
