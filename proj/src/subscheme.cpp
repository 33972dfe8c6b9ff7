#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schemelab/hypermatching.hpp"
#include "schemelab/parallel.hpp"

namespace schemelab {

std::string_view to_string(CommuteVerdict v) {
  switch (v) {
    case CommuteVerdict::Always: return "always";
    case CommuteVerdict::Never: return "never";
    case CommuteVerdict::OnlyAt: return "only_at";
  }
  return "always";
}

CommutativityTable commutativity_table(int q, int r, int p_min, int p_max) {
  if (p_min > p_max) throw std::invalid_argument("commutativity_table: empty p range");
  CommutativityTable out;
  out.q = q;
  out.r = r;
  for (int p = std::max(p_min, q * r); p <= p_max; ++p) out.p_values.push_back(p);
  if (out.p_values.empty()) throw std::invalid_argument("commutativity_table: p range below qr");
  struct PerP {
    std::vector<std::string> keys;
    StructureConstants sc;
  };
  std::vector<PerP> per(out.p_values.size());
  std::vector<ClassId> top;
  parallel_for(out.p_values.size(), [&](std::size_t t) {
    const HypermatchingScheme s(out.p_values[t], q, r);
    for (const auto& c : s.classes()) per[t].keys.push_back(c.key);
    per[t].sc = structure_constants(s);
    if (t + 1 == out.p_values.size()) top = s.classes();
  });
  out.classes = top;
  const std::size_t d = top.size();
  out.entries.assign(d, std::vector<CommuteEntry>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      CommuteEntry& e = out.entries[a][b];
      for (std::size_t t = 0; t < per.size(); ++t) {
        const auto& keys = per[t].keys;
        const auto ia = std::find(keys.begin(), keys.end(), top[a].key);
        const auto ib = std::find(keys.begin(), keys.end(), top[b].key);
        if (ia == keys.end() || ib == keys.end()) continue;
        const auto i = static_cast<std::size_t>(ia - keys.begin());
        const auto j = static_cast<std::size_t>(ib - keys.begin());
        e.tested_p.push_back(out.p_values[t]);
        bool commute = true;
        for (std::size_t k = 0; k < keys.size() && commute; ++k)
          commute = per[t].sc(i, j, k) == per[t].sc(j, i, k);
        if (commute) e.commuting_p.push_back(out.p_values[t]);
      }
      if (e.commuting_p.size() == e.tested_p.size())
        e.verdict = CommuteVerdict::Always;
      else if (e.commuting_p.empty())
        e.verdict = CommuteVerdict::Never;
      else
        e.verdict = CommuteVerdict::OnlyAt;
    }
  return out;
}

nlohmann::ordered_json to_json(const CommutativityTable& t) {
  nlohmann::ordered_json j;
  j["q"] = t.q;
  j["r"] = t.r;
  j["p_values"] = t.p_values;
  auto cls = nlohmann::ordered_json::array();
  for (const auto& c : t.classes) cls.push_back(to_json(c));
  j["classes"] = std::move(cls);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < t.entries.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < t.entries.size(); ++b) {
      const auto& e = t.entries[a][b];
      nlohmann::ordered_json cell;
      cell["verdict"] = std::string(to_string(e.verdict));
      if (e.verdict == CommuteVerdict::OnlyAt) cell["p"] = e.commuting_p;
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

namespace {

// X numbering when available, class index otherwise.
int order_key(const HypermatchingScheme& s, int c) {
  const auto& id = s.classes()[static_cast<std::size_t>(c)];
  return id.x_index ? *id.x_index : 1000 + c;
}

void normalise(const HypermatchingScheme& s, ClassPartition& blocks) {
  auto less = [&](int a, int b) { return order_key(s, a) < order_key(s, b); };
  for (auto& b : blocks) std::sort(b.begin(), b.end(), less);
  std::sort(blocks.begin(), blocks.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) { return less(a[0], b[0]); });
}

std::vector<std::vector<int>> keyed(const HypermatchingScheme& s, const ClassPartition& blocks) {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks) {
    std::vector<int> k;
    for (int c : b) k.push_back(order_key(s, c));
    out.push_back(std::move(k));
  }
  return out;
}

std::string block_label(const HypermatchingScheme& s, const std::vector<int>& block) {
  std::string out;
  for (int c : block) {
    if (!out.empty()) out += "+";
    const auto& id = s.classes()[static_cast<std::size_t>(c)];
    out += id.x_index ? "M" + std::to_string(*id.x_index) : id.label();
  }
  return out;
}

}  // namespace

std::vector<SubschemeFound> subscheme_search(int q, int r, int p, const SubschemeSearchOptions& opts) {
  const HypermatchingScheme s(p, q, r);
  const StructureConstants sc = structure_constants(s);
  const std::size_t m = s.class_count() - 1;
  if (m > 12) throw std::invalid_argument("subscheme_search: more than 12 classes");
  std::vector<SubschemeFound> found;
  if (m == 0) return found;
  // Restricted growth strings enumerate each set partition once.
  std::vector<int> rgs(m, 0), maxima(m, 0);
  while (true) {
    const int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    ClassPartition blocks(static_cast<std::size_t>(nblocks));
    for (std::size_t i = 0; i < m; ++i)
      blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i + 1));
    bool closed = true;
    if (opts.symmetric_only)
      for (std::size_t i = 0; i < m && closed; ++i)
        closed = rgs[i] == rgs[static_cast<std::size_t>(sc.transpose[i + 1] - 1)];
    if (closed) {
      ContractionCheck chk = check_contraction(sc, blocks);
      if (chk.is_subscheme() && (!opts.symmetric_only || chk.symmetric)) {
        SubschemeFound f;
        f.blocks = blocks;
        normalise(s, f.blocks);
        for (const auto& b : f.blocks) f.block_labels.push_back(block_label(s, b));
        f.constants = std::move(*chk.constants);
        found.push_back(std::move(f));
      }
    }
    std::size_t i = m - 1;
    while (i > 0 && rgs[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxima[i] = std::max(maxima[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  std::sort(found.begin(), found.end(), [&](const SubschemeFound& a, const SubschemeFound& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    return keyed(s, a.blocks) < keyed(s, b.blocks);
  });
  return found;
}

KeyPartition parse_key_partition(const std::string& text) {
  KeyPartition out;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    std::vector<std::string> keys;
    std::stringstream members(block);
    std::string key;
    while (std::getline(members, key, '+')) {
      key.erase(std::remove_if(key.begin(), key.end(), [](char c) { return c == ' '; }), key.end());
      if (!key.empty()) keys.push_back(key);
    }
    if (keys.empty()) throw std::invalid_argument("partition: empty block in '" + text + "'");
    out.push_back(std::move(keys));
  }
  if (out.empty()) throw std::invalid_argument("partition: no blocks in '" + text + "'");
  return out;
}

ClassPartition resolve_partition(const HypermatchingScheme& s, const KeyPartition& keys) {
  ClassPartition out;
  for (const auto& block : keys) {
    std::vector<int> members;
    for (const auto& key : block) {
      if (key.size() >= 2 && (key[0] == 'M' || key[0] == 'X') &&
          key.find_first_not_of("0123456789", 1) == std::string::npos) {
        if (s.q() != 2 || s.r() != 2)
          throw std::invalid_argument("partition: labels " + key + " exist only for q = r = 2");
        if (auto k = s.class_by_x(std::stoi(key.substr(1)))) members.push_back(*k);
      } else if (key.size() >= 2 && key[0] == 'B' &&
                 key.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int sat = std::stoi(key.substr(1));
        for (std::size_t k = 1; k < s.class_count(); ++k)
          if (s.classes()[k].saturation == sat) members.push_back(static_cast<int>(k));
      } else if (auto k = s.class_index(key)) {
        members.push_back(*k);
      } else if (key.front() != '[') {
        throw std::invalid_argument("partition: unknown class key '" + key + "'");
      }
    }
    std::sort(members.begin(), members.end());
    if (!members.empty()) out.push_back(std::move(members));
  }
  validate_partition(out, s.class_count());
  return out;
}

StabilityReport contraction_stability(int q, int r, const KeyPartition& keys, int p_max) {
  StabilityReport rep;
  for (int p = 2 * q * r; p <= p_max; ++p) rep.p_values.push_back(p);
  std::vector<char> verdicts(rep.p_values.size(), 0);
  parallel_for(rep.p_values.size(), [&](std::size_t t) {
    const HypermatchingScheme s(rep.p_values[t], q, r);
    const StructureConstants sc = structure_constants(s);
    const ContractionCheck chk = check_contraction(sc, resolve_partition(s, keys));
    verdicts[t] = chk.is_subscheme() && chk.symmetric;
  });
  rep.verdicts.assign(verdicts.begin(), verdicts.end());
  rep.holds_through_3qr = true;
  bool all = true;
  for (std::size_t t = 0; t < rep.p_values.size(); ++t) {
    if (rep.p_values[t] <= 3 * q * r) rep.holds_through_3qr = rep.holds_through_3qr && rep.verdicts[t];
    all = all && rep.verdicts[t];
  }
  rep.prediction_consistent = !rep.holds_through_3qr || all;
  return rep;
}

}  // namespace schemelab
