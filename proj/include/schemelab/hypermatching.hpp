#pragma once
// Schemes on r-matchings of the complete q-uniform hypergraph on p vertices:
// orbit classification by meet tables, typed-partition counts,
// commutativity tables and subscheme search.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "schemelab/scheme_core.hpp"

namespace schemelab {

// Edges are vertex bitmasks (p <= 32), kept in lexicographic order of their
// sorted vertex lists.
struct Matching {
  std::vector<std::uint32_t> edges;
  std::uint32_t saturation() const;
  std::string str() const;  // e.g. "{{0,1},{2,3}}"
  friend bool operator==(const Matching&, const Matching&) = default;
};

// All r-matchings in lexicographic order of their edge sequences.
std::vector<Matching> enumerate_matchings(int p, int q, int r);
// p! / (r! (q!)^r (p - qr)!)
mpz_class matching_count(int p, int q, int r);

// m[i*r + j] = |S_i & T_j|.
struct MeetTable {
  int r = 0;
  std::vector<int> m;
  int sum() const;
  MeetTable transposed() const;
  std::string str() const;  // "[[a,b],[c,d]]"
  friend bool operator==(const MeetTable&, const MeetTable&) = default;
  friend bool operator<(const MeetTable& a, const MeetTable& b) { return a.m < b.m; }
};

MeetTable meet_table(const Matching& s, const Matching& t);
// Lexicographic minimum of the row-major entries over row and column permutations.
MeetTable canonical_form(const MeetTable& t);

enum class PartType { Plus, Minus, Bar, Prime };

struct TypedPart {
  int value = 0;
  PartType type = PartType::Plus;
  friend auto operator<=>(const TypedPart&, const TypedPart&) = default;
};

// Components of the union of two 2-uniform matchings.
struct TypedPartition {
  std::vector<TypedPart> parts;  // sorted by (value, type)
  std::string str() const;       // "1+,1-,2'" with '~' marking the bar type
  friend bool operator==(const TypedPartition&, const TypedPartition&) = default;
};

TypedPartition typed_partition_of(const Matching& s, const Matching& t);
// Typed partitions of 2r obeying the parity, balance and vertex-budget rules.
std::vector<TypedPartition> typed_partitions(int p, int r);

struct ClassId {
  MeetTable table;       // canonical
  int saturation = 0;    // |sat(S) | sat(T)|
  std::string key;       // table.str()
  std::optional<TypedPartition> partition;  // q = 2 only
  std::optional<int> x_index;               // (q, r) = (2, 2) only: X0..X9
  std::string label() const;
};

// Index 0..9 for the typed partitions of the ten classes at (q, r) = (2, 2).
std::optional<int> x_index_of(const TypedPartition& tp);

class HypermatchingScheme final : public RelationOracle {
 public:
  HypermatchingScheme(int p, int q, int r);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  const std::vector<Matching>& matchings() const { return matchings_; }
  const std::vector<ClassId>& classes() const { return classes_; }
  std::optional<int> class_index(const std::string& key) const;
  std::optional<int> class_by_x(int x) const;

  int class_of(std::size_t a, std::size_t b) const;
  std::size_t valency(int k) const { return valency_.at(static_cast<std::size_t>(k)); }

  std::size_t ground_size() const override { return matchings_.size(); }
  std::size_t class_count() const override { return classes_.size(); }
  void relation_row(std::size_t a, std::vector<int>& out) const override;
  std::optional<std::pair<std::size_t, std::size_t>> representative(int k,
                                                                    int which) const override;

  // Dense form; throws std::length_error above max_ground matchings.
  AssociationScheme to_scheme(std::size_t max_ground = 5000) const;

 private:
  std::uint64_t raw_code(std::size_t a, std::size_t b) const;

  int p_, q_, r_;
  std::vector<Matching> matchings_;
  std::vector<ClassId> classes_;
  std::unordered_map<std::uint64_t, int> code_to_class_;
  std::vector<std::size_t> valency_;
  std::vector<std::vector<std::size_t>> reps_;  // reps_[which][k]
};

HypermatchingScheme classify(int p, int q, int r);
BinaryMatrix associate(const HypermatchingScheme& s, int k);

// Blocks of the saturation contraction: classes grouped by saturation, the
// identity's own saturation group without the identity.
ClassPartition saturation_partition(const HypermatchingScheme& s);
AssociationScheme saturation_contraction(const HypermatchingScheme& s);

// Number of classes of M_{p,2,r} from the typed-partition enumeration.
mpz_class count_classes_q2(int p, int r);
// Coefficients [x^{2r} y^r] of the product formula for r = 0..r_max (p >= 4r regime).
std::vector<mpz_class> count_classes_q2_series(int r_max);
// Closed form for M_{p,q,2}; requires p >= 4q.
mpz_class count_classes_r2(int p, int q);

enum class CommuteVerdict { Always, Never, OnlyAt };
std::string_view to_string(CommuteVerdict v);

struct CommuteEntry {
  CommuteVerdict verdict = CommuteVerdict::Always;
  std::vector<int> commuting_p;  // p where both classes exist and commute
  std::vector<int> tested_p;     // p where both classes exist
};

struct CommutativityTable {
  int q = 0, r = 0;
  std::vector<int> p_values;
  std::vector<ClassId> classes;  // stable class set (largest p)
  std::vector<std::vector<CommuteEntry>> entries;
};

CommutativityTable commutativity_table(int q, int r, int p_min, int p_max);

struct SubschemeFound {
  ClassPartition blocks;       // class indices at this p
  std::vector<std::string> block_labels;
  StructureConstants constants;
};

struct SubschemeSearchOptions {
  bool symmetric_only = true;
};

// Exhaustive over set partitions of the non-identity classes.
std::vector<SubschemeFound> subscheme_search(int q, int r, int p,
                                             const SubschemeSearchOptions& opts = {});

// Blocks given as class keys: canonical tables, "X<k>"/"M<k>" labels at
// (2, 2), or "B<s>" for a whole saturation group.
using KeyPartition = std::vector<std::vector<std::string>>;
KeyPartition parse_key_partition(const std::string& text);  // "M1+B8|B5+B6+B7"

// Resolves keys at one p; classes absent at p are dropped. Throws when a
// present class is uncovered.
ClassPartition resolve_partition(const HypermatchingScheme& s, const KeyPartition& keys);

struct StabilityReport {
  std::vector<int> p_values;
  std::vector<bool> verdicts;
  bool holds_through_3qr = false;
  bool prediction_consistent = true;  // holds through 3qr implies holds everywhere tested
};

StabilityReport contraction_stability(int q, int r, const KeyPartition& keys, int p_max);

nlohmann::ordered_json to_json(const ClassId& c);
nlohmann::ordered_json to_json(const CommutativityTable& t);

}  // namespace schemelab
