#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "schemelab/hypermatching.hpp"

namespace schemelab {

std::string ClassId::label() const {
  if (x_index) return "X" + std::to_string(*x_index);
  if (partition) return partition->str();
  return key;
}

HypermatchingScheme::HypermatchingScheme(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (r < 1 || r > 4) throw std::invalid_argument("classify: need 1 <= r <= 4");
  if (q < 1 || std::log2(static_cast<double>(q + 1)) * r * r > 63) throw std::invalid_argument("classify: meet tables too large to encode");
  matchings_ = enumerate_matchings(p, q, r);
  if (matchings_.empty()) throw std::invalid_argument("classify: no r-matchings (p < qr)");

  // The symmetric group is transitive on matchings, so row 0 meets every class.
  std::vector<MeetTable> seen;
  for (const auto& t : matchings_) {
    MeetTable c = canonical_form(meet_table(matchings_[0], t));
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(std::move(c));
  }
  const MeetTable identity = canonical_form(meet_table(matchings_[0], matchings_[0]));
  std::sort(seen.begin(), seen.end(), [&](const MeetTable& a, const MeetTable& b) {
    const bool ia = a == identity, ib = b == identity;
    if (ia != ib) return ia;
    const int sa = -a.sum(), sb = -b.sum();
    if (sa != sb) return sa < sb;
    return a < b;
  });
  for (const auto& t : seen) {
    ClassId c;
    c.table = t;
    c.saturation = 2 * q * r - t.sum();
    c.key = t.str();
    classes_.push_back(std::move(c));
  }

  // Every row/column permutation of a canonical table maps to its class.
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const MeetTable& t = classes_[k].table;
    std::vector<int> rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(r));
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::uint64_t code = 0, base = 1;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            code += base * static_cast<std::uint64_t>(
                               t.m[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)] * r +
                                                            cols[static_cast<std::size_t>(j)])]);
            base *= static_cast<std::uint64_t>(q + 1);
          }
        code_to_class_[code] = static_cast<int>(k);
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }

  valency_.assign(classes_.size(), 0);
  reps_.assign(2, std::vector<std::size_t>(classes_.size(), matchings_.size()));
  std::vector<int> row;
  for (std::size_t which = 0; which < 2 && which < matchings_.size(); ++which) {
    relation_row(which, row);
    for (std::size_t b = 0; b < row.size(); ++b) {
      const auto k = static_cast<std::size_t>(row[b]);
      if (which == 0) ++valency_[k];
      if (reps_[which][k] == matchings_.size()) reps_[which][k] = b;
      // A representative of class k from row 0 also fixes its label.
      if (which == 0 && reps_[0][k] == b && q == 2) {
        classes_[k].partition = typed_partition_of(matchings_[0], matchings_[b]);
        if (r == 2) classes_[k].x_index = x_index_of(*classes_[k].partition);
      }
    }
  }
}

std::optional<int> HypermatchingScheme::class_index(const std::string& key) const {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].key == key || classes_[k].label() == key) return static_cast<int>(k);
  return std::nullopt;
}

std::optional<int> HypermatchingScheme::class_by_x(int x) const {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].x_index == x) return static_cast<int>(k);
  return std::nullopt;
}

std::uint64_t HypermatchingScheme::raw_code(std::size_t a, std::size_t b) const {
  const auto& s = matchings_[a].edges;
  const auto& t = matchings_[b].edges;
  std::uint64_t code = 0, base = 1;
  const auto radix = static_cast<std::uint64_t>(q_ + 1);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      code += base * static_cast<std::uint64_t>(
                         __builtin_popcount(s[static_cast<std::size_t>(i)] & t[static_cast<std::size_t>(j)]));
      base *= radix;
    }
  return code;
}

int HypermatchingScheme::class_of(std::size_t a, std::size_t b) const {
  const auto it = code_to_class_.find(raw_code(a, b));
  if (it == code_to_class_.end())
    throw std::logic_error("HypermatchingScheme: meet table outside the classified set");
  return it->second;
}

void HypermatchingScheme::relation_row(std::size_t a, std::vector<int>& out) const {
  out.resize(matchings_.size());
  for (std::size_t b = 0; b < matchings_.size(); ++b) out[b] = class_of(a, b);
}

std::optional<std::pair<std::size_t, std::size_t>> HypermatchingScheme::representative(
    int k, int which) const {
  const auto w = static_cast<std::size_t>(which);
  const std::size_t b = reps_.at(w).at(static_cast<std::size_t>(k));
  if (b == matchings_.size()) return std::nullopt;
  return std::make_pair(w, b);
}

AssociationScheme HypermatchingScheme::to_scheme(std::size_t max_ground) const {
  const std::size_t n = matchings_.size();
  if (n > max_ground)
    throw std::length_error("to_scheme: " + std::to_string(n) + " matchings exceed the dense cap");
  std::vector<BinaryMatrix> a(classes_.size(), BinaryMatrix(n));
  std::vector<int> row;
  for (std::size_t x = 0; x < n; ++x) {
    relation_row(x, row);
    for (std::size_t y = 0; y < n; ++y) a[static_cast<std::size_t>(row[y])].set(x, y);
  }
  std::vector<std::string> labels;
  for (const auto& c : classes_) labels.push_back(c.label());
  return AssociationScheme(std::move(a), std::move(labels));
}

HypermatchingScheme classify(int p, int q, int r) { return HypermatchingScheme(p, q, r); }

BinaryMatrix associate(const HypermatchingScheme& s, int k) {
  const std::size_t n = s.ground_size();
  BinaryMatrix m(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.class_of(x, y) == k) m.set(x, y);
  return m;
}

ClassPartition saturation_partition(const HypermatchingScheme& s) {
  ClassPartition blocks;
  std::vector<int> sats;
  for (std::size_t k = 1; k < s.class_count(); ++k) {
    const int sat = s.classes()[k].saturation;
    auto it = std::find(sats.begin(), sats.end(), sat);
    if (it == sats.end()) {
      sats.push_back(sat);
      blocks.push_back({static_cast<int>(k)});
    } else {
      blocks[static_cast<std::size_t>(it - sats.begin())].push_back(static_cast<int>(k));
    }
  }
  return blocks;
}

AssociationScheme saturation_contraction(const HypermatchingScheme& s) {
  const AssociationScheme dense = s.to_scheme();
  auto result = contract(dense, saturation_partition(s));
  std::vector<std::string> labels{"I"};
  const auto blocks = saturation_partition(s);
  for (const auto& b : blocks) {
    const int sat = s.classes()[static_cast<std::size_t>(b.front())].saturation;
    labels.push_back(sat == s.q() * s.r() ? "B" + std::to_string(sat) + "-I" : "B" + std::to_string(sat));
  }
  return AssociationScheme(result.scheme.associates(), labels);
}

nlohmann::ordered_json to_json(const ClassId& c) {
  nlohmann::ordered_json j;
  j["label"] = c.label();
  j["table"] = c.key;
  j["saturation"] = c.saturation;
  if (c.partition) j["partition"] = c.partition->str();
  return j;
}

}  // namespace schemelab
