#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schemelab/hypermatching.hpp"

using namespace schemelab;

namespace {

std::uint32_t permute_mask(std::uint32_t m, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (int t = 0; t < static_cast<int>(perm.size()); ++t)
    if ((m >> t) & 1u) out |= 1u << perm[static_cast<std::size_t>(t)];
  return out;
}

std::vector<std::uint32_t> image(const Matching& m, const std::vector<int>& perm) {
  std::vector<std::uint32_t> e;
  for (auto x : m.edges) e.push_back(permute_mask(x, perm));
  std::sort(e.begin(), e.end());
  return e;
}

// Orbits of the symmetric group on ordered pairs of r-matchings, by brute
// force. The group is transitive on matchings, so this is the number of
// orbits of the stabiliser of one matching.
std::size_t orbit_count(int p, int q, int r) {
  const auto ms = enumerate_matchings(p, q, r);
  const auto base = image(ms[0], [&] {
    std::vector<int> id(static_cast<std::size_t>(p));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  std::vector<std::vector<int>> stab;
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  do
    if (image(ms[0], perm) == base) stab.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& t : ms) {
    auto best = image(t, stab[0]);
    for (const auto& g : stab) best = std::min(best, image(t, g));
    seen.insert(best);
  }
  return seen.size();
}

// Number of sets of r pairwise disjoint q-subsets of [p], by recursion on the smallest vertex.
long count_matchings(int p, int q, int r) {
  if (r == 0) return 1;
  if (p < q * r) return 0;
  // Either vertex p-1 is unused, or it lies in one of the r edges.
  return count_matchings(p - 1, q, r) + binomial64(p - 1, q - 1) * count_matchings(p - q, q, r - 1);
}

}  // namespace

TEST_CASE("matching enumeration agrees with an independent count") {
  for (int p = 1; p <= 10; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r) {
        const long want = count_matchings(p, q, r);
        CHECK(matching_count(p, q, r) == want);
        CHECK(static_cast<long>(enumerate_matchings(p, q, r).size()) == want);
      }
  const auto ms = enumerate_matchings(6, 2, 2);
  for (const auto& m : ms) {
    CHECK(__builtin_popcount(m.saturation()) == 4);
    CHECK((m.edges[0] & m.edges[1]) == 0u);
  }
}

TEST_CASE("canonical meet tables ignore row and column order") {
  const auto ms = enumerate_matchings(7, 2, 3);
  const MeetTable t = meet_table(ms[0], ms[17]);
  CHECK(t.sum() == std::popcount(ms[0].saturation() & ms[17].saturation()));
  MeetTable swapped = t;
  std::swap(swapped.m[0], swapped.m[3]);
  std::swap(swapped.m[1], swapped.m[4]);
  std::swap(swapped.m[2], swapped.m[5]);
  CHECK(canonical_form(swapped) == canonical_form(t));
  CHECK(canonical_form(t.transposed()).sum() == t.sum());
}

TEST_CASE("class counts match brute-force orbit counts") {
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{{4, 2, 2}, {5, 2, 2}, {6, 2, 2}, {7, 2, 2}, {8, 2, 2}, {6, 3, 1}, {6, 2, 3}, {7, 3, 2}, {8, 2, 3}}) {
    const std::size_t orbits = orbit_count(p, q, r);
    CHECK(classify(p, q, r).class_count() == orbits);
    if (q == 2) {
      CHECK(count_classes_q2(p, r) == static_cast<long>(orbits));
      CHECK(typed_partitions(p, r).size() == orbits);
    }
  }
}

TEST_CASE("typed partitions of double pairs") {
  const auto ms = enumerate_matchings(6, 2, 2);
  const HypermatchingScheme s(6, 2, 2);
  std::set<std::string> seen;
  for (std::size_t b = 0; b < ms.size(); ++b) seen.insert(typed_partition_of(ms[0], ms[b]).str());
  CHECK(seen.size() == s.class_count());
  for (const auto& c : s.classes()) {
    REQUIRE(c.partition);
    REQUIRE(c.x_index);
    CHECK(*x_index_of(*c.partition) == *c.x_index);
  }
}

TEST_CASE("series coefficients agree with direct counts in the stable range") {
  const auto series = count_classes_q2_series(4);
  for (int r = 1; r <= 4; ++r) CHECK(series[static_cast<std::size_t>(r)] == count_classes_q2(4 * r, r));
  for (int q = 1; q <= 3; ++q)
    CHECK(count_classes_r2(4 * q, q) == static_cast<long>(classify(4 * q, q, 2).class_count()));
}

TEST_CASE("the dense scheme satisfies the axioms and the oracle constants agree") {
  const HypermatchingScheme s(7, 2, 2);
  const AssociationScheme dense = s.to_scheme();
  CHECK(verify_axioms(dense).ok());
  CHECK(structure_constants(s) == structure_constants(dense));
  for (std::size_t k = 0; k < s.class_count(); ++k)
    CHECK(s.valency(static_cast<int>(k)) == dense.associate(k).row_count(0));
  CHECK_THROWS_AS(s.to_scheme(10), std::length_error);
}

TEST_CASE("saturation contraction is a subscheme found by the search") {
  for (int p : {6, 7, 8}) {
    const HypermatchingScheme s(p, 2, 2);
    const auto contracted = saturation_contraction(s);
    CHECK(verify_axioms(contracted).ok());
    auto blocks = saturation_partition(s);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    bool found = false;
    for (auto f : subscheme_search(2, 2, p)) {
      for (auto& b : f.blocks) std::sort(b.begin(), b.end());
      std::sort(f.blocks.begin(), f.blocks.end());
      found = found || f.blocks == blocks;
    }
    CHECK(found);
  }
}

TEST_CASE("search results are verified by dense contraction") {
  const HypermatchingScheme s(7, 2, 2);
  const AssociationScheme dense = s.to_scheme();
  for (const auto& f : subscheme_search(2, 2, 7)) {
    CHECK(contract(dense, f.blocks).report.ok());
    CHECK(f.blocks.size() == f.block_labels.size());
  }
}

TEST_CASE("key partitions") {
  const KeyPartition keys = parse_key_partition("M1 + M2 | B4");
  REQUIRE(keys.size() == 2);
  CHECK(keys[0] == std::vector<std::string>{"M1", "M2"});
  CHECK_THROWS_AS(parse_key_partition("M1||M2"), std::invalid_argument);
  const HypermatchingScheme s(6, 2, 3);
  CHECK_THROWS_AS(resolve_partition(s, parse_key_partition("M1")), std::invalid_argument);
  const HypermatchingScheme t(6, 2, 2);
  CHECK_THROWS_AS(resolve_partition(t, parse_key_partition("M1")), std::invalid_argument);
}

TEST_CASE("commutativity verdicts are symmetric and trivial on the diagonal") {
  const CommutativityTable t = commutativity_table(2, 2, 6, 8);
  for (std::size_t a = 0; a < t.classes.size(); ++a)
    for (std::size_t b = 0; b < t.classes.size(); ++b) {
      const auto& e = t.entries[a][b];
      CHECK(t.entries[b][a].verdict == e.verdict);
      if (a == 0 || b == 0 || a == b) CHECK(e.verdict == CommuteVerdict::Always);
    }
}
