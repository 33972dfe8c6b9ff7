#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schemelab/kernels.hpp"
#include "schemelab/scheme_core.hpp"

namespace schemelab {

AssociationScheme::AssociationScheme(std::vector<BinaryMatrix> associates,
                                     std::vector<std::string> labels)
    : associates_(std::move(associates)), labels_(std::move(labels)) {
  if (associates_.empty()) throw std::invalid_argument("AssociationScheme: no associates");
  ground_ = associates_.front().size();
  for (const auto& a : associates_)
    if (a.size() != ground_)
      throw std::invalid_argument("AssociationScheme: associates differ in dimension");
  if (labels_.empty())
    for (std::size_t i = 0; i < associates_.size(); ++i) labels_.push_back("A" + std::to_string(i));
  if (labels_.size() != associates_.size())
    throw std::invalid_argument("AssociationScheme: one label per associate required");
  if (associates_.size() >= std::numeric_limits<std::uint16_t>::max()) return;
  std::vector<std::uint16_t> rel(ground_ * ground_, std::numeric_limits<std::uint16_t>::max());
  for (std::size_t c = 0; c < associates_.size(); ++c) {
    const BinaryMatrix& a = associates_[c];
    for (std::size_t i = 0; i < ground_; ++i)
      for (std::size_t w = 0; w < a.words(); ++w) {
        std::uint64_t x = a.row(i)[w];
        while (x) {
          const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(x));
          std::uint16_t& slot = rel[i * ground_ + j];
          if (slot != std::numeric_limits<std::uint16_t>::max()) return;  // overlap
          slot = static_cast<std::uint16_t>(c);
          x &= x - 1;
        }
      }
  }
  for (auto v : rel)
    if (v == std::numeric_limits<std::uint16_t>::max()) return;  // gap
  relation_ = std::move(rel);
}

SchemeOracle::SchemeOracle(const AssociationScheme& s) : s_(s) {
  if (!s.partitions_ones())
    throw std::invalid_argument("SchemeOracle: associates do not partition J");
}

void SchemeOracle::relation_row(std::size_t a, std::vector<int>& out) const {
  const std::size_t n = s_.ground_size();
  out.resize(n);
  const auto& rel = s_.relation();
  for (std::size_t b = 0; b < n; ++b) out[b] = rel[a * n + b];
}

std::optional<std::pair<std::size_t, std::size_t>> SchemeOracle::representative(int k,
                                                                              int which) const {
  const BinaryMatrix& a = s_.associate(static_cast<std::size_t>(k));
  auto first = a.first_one();
  if (!first || which == 0) return first;
  std::optional<std::pair<std::size_t, std::size_t>> other;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t w = 0; w < a.words(); ++w) {
      std::uint64_t x = a.row(i)[w];
      while (x) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(x));
        if (i != first->first) return std::make_pair(i, j);
        if (!other && j != first->second) other = std::make_pair(i, j);
        x &= x - 1;
      }
    }
  return other ? other : first;
}

namespace {

void count_column(const RelationOracle& o, const std::vector<int>& trans, std::size_t x,
                  std::size_t y, std::size_t k, StructureConstants& sc, std::vector<int>& rx,
                  std::vector<int>& ry) {
  o.relation_row(x, rx);
  o.relation_row(y, ry);
  for (std::size_t z = 0; z < o.ground_size(); ++z)
    sc(static_cast<std::size_t>(rx[z]), static_cast<std::size_t>(trans[ry[z]]), k) += 1;
}

}  // namespace

StructureConstants structure_constants(const RelationOracle& o) {
  const std::size_t d = o.class_count();
  const std::size_t n = o.ground_size();
  StructureConstants sc(d);
  sc.transpose.assign(d, -1);
  std::vector<int> rx, ry;
  std::vector<std::pair<std::size_t, std::size_t>> reps(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto r = o.representative(static_cast<int>(k), 0);
    if (!r) throw std::runtime_error("structure_constants: class " + std::to_string(k) + " is empty");
    reps[k] = *r;
    o.relation_row(r->second, ry);
    sc.transpose[k] = ry[r->first];
  }
  for (std::size_t k = 0; k < d; ++k)
    if (sc.transpose[static_cast<std::size_t>(sc.transpose[k])] != static_cast<int>(k))
      throw std::runtime_error("structure_constants: transpose map is not an involution at class " +
                               std::to_string(k));
  for (std::size_t k = 0; k < d; ++k)
    count_column(o, sc.transpose, reps[k].first, reps[k].second, k, sc, rx, ry);
  StructureConstants check(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto r = o.representative(static_cast<int>(k), 1);
    if (!r || *r == reps[k]) continue;
    o.relation_row(r->second, ry);
    if (ry[r->first] != sc.transpose[k])
      throw std::runtime_error("structure_constants: transpose of class " + std::to_string(k) +
                               " depends on the representative");
    count_column(o, sc.transpose, r->first, r->second, k, check, rx, ry);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (check(i, j, k) != sc(i, j, k)) {
          std::ostringstream os;
          os << "structure constant p[" << i << "][" << j << "][" << k
             << "] differs between representatives (" << sc(i, j, k) << " vs " << check(i, j, k)
             << ")";
          throw std::runtime_error(os.str());
        }
  }
  (void)n;
  sc.valency.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    sc.valency[i] = sc(i, static_cast<std::size_t>(sc.transpose[i]), 0);
  return sc;
}

StructureConstants structure_constants(const AssociationScheme& s) {
  return structure_constants(SchemeOracle(s));
}

AxiomReport verify_axioms(const AssociationScheme& s, const AxiomOptions& opts) {
  AxiomReport r;
  const std::size_t n = s.ground_size();
  const std::size_t d = s.class_count();
  std::ostringstream why;
  r.a1 = s.associate(0) == BinaryMatrix::identity(n);
  if (!r.a1 && !r.witness) r.witness = "associate 0 is not the identity";

  std::vector<BinaryMatrix> transposed;
  transposed.reserve(d);
  for (const auto& a : s.associates()) transposed.push_back(a.transpose());
  r.transpose.assign(d, -1);
  r.a2 = true;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      if (s.associate(j) == transposed[i]) {
        r.transpose[i] = static_cast<int>(j);
        break;
      }
    if (r.transpose[i] < 0) {
      r.a2 = false;
      if (!r.witness) r.witness = "transpose of associate " + std::to_string(i) + " is not an associate";
    }
  }

  r.a3 = s.partitions_ones();
  if (!r.a3 && !r.witness) {
    for (std::size_t x = 0; x < n && !r.witness; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        int hits = 0;
        for (const auto& a : s.associates()) hits += a.get(x, y);
        if (hits != 1) {
          r.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) + ") lies in " +
                      std::to_string(hits) + " associates";
          break;
        }
      }
  }

  if (!r.a3) {
    r.a4_mode = "skipped";
    return r;
  }
  StructureConstants sc;
  try {
    sc = structure_constants(s);
  } catch (const std::runtime_error& e) {
    r.a4 = false;
    r.a4_mode = "representative";
    if (!r.witness) r.witness = e.what();
    return r;
  }
  const std::size_t words = s.associate(0).words();
  const double work = static_cast<double>(d) * d * n * n * words;
  if (work > opts.entrywise_budget) {
    r.a4 = true;
    r.a4_mode = "representative";
    return r;
  }
  r.a4_mode = "entrywise";
  r.a4 = true;
  const auto& k = kernels::active();
  const auto& rel = s.relation();
  for (std::size_t i = 0; i < d && r.a4; ++i)
    for (std::size_t j = 0; j < d && r.a4; ++j) {
      const BinaryMatrix& ai = s.associate(i);
      const BinaryMatrix& bjt = transposed[j];
      for (std::size_t x = 0; x < n && r.a4; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const auto v = static_cast<std::int64_t>(k.and_popcount(ai.row(x), bjt.row(y), words));
          const std::size_t c = rel[x * n + y];
          if (v != sc(i, j, c)) {
            r.a4 = false;
            r.witness = "(A" + std::to_string(i) + " A" + std::to_string(j) + ")[" +
                        std::to_string(x) + "," + std::to_string(y) + "] = " + std::to_string(v) +
                        " but p^" + std::to_string(c) + " = " + std::to_string(sc(i, j, c));
            break;
          }
        }
    }
  return r;
}

bool is_commutative(const StructureConstants& sc) {
  const std::size_t d = sc.classes();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (sc(i, j, k) != sc(j, i, k)) return false;
  return true;
}

bool is_symmetric(const StructureConstants& sc) {
  for (std::size_t i = 0; i < sc.transpose.size(); ++i)
    if (sc.transpose[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_symmetric(const AssociationScheme& s) {
  for (const auto& a : s.associates())
    if (!a.is_symmetric()) return false;
  return true;
}

void validate_partition(const ClassPartition& blocks, std::size_t classes) {
  std::vector<int> seen(classes, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    for (int c : b) {
      if (c == 0) throw std::invalid_argument("partition: the identity class stays alone");
      if (c < 0 || static_cast<std::size_t>(c) >= classes)
        throw std::invalid_argument("partition: class index " + std::to_string(c) + " out of range");
      if (seen[static_cast<std::size_t>(c)]++)
        throw std::invalid_argument("partition: class " + std::to_string(c) + " appears twice");
    }
  }
  for (std::size_t c = 1; c < classes; ++c)
    if (!seen[c]) throw std::invalid_argument("partition: class " + std::to_string(c) + " missing");
}

ContractionResult contract(const AssociationScheme& s, const ClassPartition& blocks) {
  validate_partition(blocks, s.class_count());
  std::vector<BinaryMatrix> merged{s.associate(0)};
  std::vector<std::string> labels{s.labels().at(0)};
  for (const auto& b : blocks) {
    BinaryMatrix m(s.ground_size());
    std::string label;
    for (int c : b) {
      m |= s.associate(static_cast<std::size_t>(c));
      if (!label.empty()) label += "+";
      label += s.labels().at(static_cast<std::size_t>(c));
    }
    merged.push_back(std::move(m));
    labels.push_back(std::move(label));
  }
  ContractionResult out;
  out.scheme = AssociationScheme(std::move(merged), std::move(labels));
  out.report = verify_axioms(out.scheme);
  return out;
}

ContractionCheck check_contraction(const StructureConstants& sc, const ClassPartition& blocks) {
  const std::size_t d = sc.classes();
  validate_partition(blocks, d);
  std::vector<std::vector<int>> all{{0}};
  for (const auto& b : blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    all.push_back(sorted);
  }
  const std::size_t m = all.size();
  std::vector<int> block_of(d);
  for (std::size_t a = 0; a < m; ++a)
    for (int c : all[a]) block_of[static_cast<std::size_t>(c)] = static_cast<int>(a);

  ContractionCheck out;
  out.transpose_closed = true;
  out.symmetric = true;
  std::vector<int> tblock(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<int> img;
    for (int c : all[a]) img.push_back(sc.transpose[static_cast<std::size_t>(c)]);
    std::sort(img.begin(), img.end());
    const int b = block_of[static_cast<std::size_t>(img.front())];
    if (img != all[static_cast<std::size_t>(b)]) {
      out.transpose_closed = false;
      out.symmetric = false;
      out.witness = "block " + std::to_string(a) + " is not mapped onto a block by transposition";
      return out;
    }
    tblock[a] = b;
    if (b != static_cast<int>(a)) out.symmetric = false;
  }
  StructureConstants merged(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        std::optional<std::int64_t> value;
        for (int k : all[c]) {
          std::int64_t v = 0;
          for (int i : all[a])
            for (int j : all[b])
              v += sc(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                      static_cast<std::size_t>(k));
          if (!value) {
            value = v;
          } else if (*value != v) {
            out.closed = false;
            out.witness = "merged product of blocks " + std::to_string(a) + "," +
                          std::to_string(b) + " is not constant on block " + std::to_string(c);
            return out;
          }
        }
        merged(a, b, c) = *value;
      }
  out.closed = true;
  merged.transpose = tblock;
  merged.valency.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    merged.valency[a] = merged(a, static_cast<std::size_t>(tblock[a]), 0);
  out.constants = std::move(merged);
  return out;
}

AssociationScheme wreath(const AssociationScheme& a1, const AssociationScheme& a2) {
  if (!is_symmetric(a1) || !is_symmetric(a2))
    throw std::invalid_argument("wreath: both factors must be symmetric");
  const std::size_t n1 = a1.ground_size();
  const std::size_t n2 = a2.ground_size();
  BinaryMatrix ones2(n2);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) ones2.set(i, j);
  const BinaryMatrix id1 = BinaryMatrix::identity(n1);
  std::vector<BinaryMatrix> out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a2.class_count(); ++i) {
    out.push_back(kron(id1, a2.associate(i)));
    labels.push_back("I(x)" + a2.labels()[i]);
  }
  for (std::size_t i = 1; i < a1.class_count(); ++i) {
    out.push_back(kron(a1.associate(i), ones2));
    labels.push_back(a1.labels()[i] + "(x)J");
  }
  return AssociationScheme(std::move(out), std::move(labels));
}

namespace {

std::vector<double> apply(const BinaryMatrix& a, const double* v) {
  const std::size_t n = a.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t w = 0; w < a.words(); ++w) {
      std::uint64_t x = a.row(i)[w];
      while (x) {
        s += v[w * 64 + static_cast<std::size_t>(__builtin_ctzll(x))];
        x &= x - 1;
      }
    }
    out[i] = s;
  }
  return out;
}

}  // namespace

PMatrix p_matrix(const AssociationScheme& s) {
  if (!is_symmetric(s))
    throw std::invalid_argument("p_matrix: only symmetric schemes have a real eigenmatrix");
  const std::size_t n = s.ground_size();
  const std::size_t d = s.class_count();
  for (int attempt = 0; attempt < 6; ++attempt) {
    DenseMatrix c(n);
    for (std::size_t i = 1; i < d; ++i) {
      const double coef = std::sqrt(2.0 + static_cast<double>(i) + 13.0 * attempt);
      const BinaryMatrix& a = s.associate(i);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (a.get(x, y)) c(x, y) += coef;
    }
    EigenOptions eo;
    eo.vectors = true;
    const Spectrum sp = eig_sym(c, eo);
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
    const double scale = std::max(1.0, std::fabs(sp.values.front()));
    for (std::size_t i = 0; i < n; ++i) {
      if (!groups.empty() && sp.values[groups.back().first] - sp.values[i] <= 1e-7 * scale)
        groups.back().second = i + 1;
      else
        groups.emplace_back(i, i + 1);
    }
    if (groups.size() != d) continue;
    PMatrix pm;
    pm.attempts = attempt + 1;
    bool ok = true;
    for (const auto& [b, e] : groups) {
      std::vector<double> row(d);
      for (std::size_t i = 0; i < d && ok; ++i) {
        const double* v0 = sp.vectors.row(b);
        const auto av0 = apply(s.associate(i), v0);
        double theta = 0.0;
        for (std::size_t x = 0; x < n; ++x) theta += v0[x] * av0[x];
        row[i] = theta;
        const double tol = 1e-6 * std::max(1.0, std::fabs(theta));
        for (std::size_t t = b; t < e && ok; ++t) {
          const double* v = sp.vectors.row(t);
          const auto av = apply(s.associate(i), v);
          for (std::size_t x = 0; x < n; ++x)
            if (std::fabs(av[x] - theta * v[x]) > tol) {
              ok = false;
              break;
            }
        }
      }
      if (!ok) break;
      pm.rows.push_back(std::move(row));
      pm.multiplicities.push_back(static_cast<int>(e - b));
    }
    if (!ok) continue;
    std::vector<double> valency(d);
    for (std::size_t i = 0; i < d; ++i) valency[i] = static_cast<double>(s.associate(i).row_count(0));
    std::vector<std::size_t> order(pm.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto trivial = [&](std::size_t r) {
      if (pm.multiplicities[r] != 1) return false;
      for (std::size_t i = 0; i < d; ++i)
        if (std::fabs(pm.rows[r][i] - valency[i]) > 1e-6 * std::max(1.0, valency[i])) return false;
      return true;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const bool tx = trivial(x), ty = trivial(y);
      if (tx != ty) return tx;
      for (std::size_t i = 1; i < d; ++i) {
        const double dx = pm.rows[x][i], dy = pm.rows[y][i];
        if (std::fabs(dx - dy) > 1e-6 * std::max(1.0, std::fabs(dx))) return dx > dy;
      }
      return false;
    });
    PMatrix sorted;
    sorted.attempts = pm.attempts;
    for (auto r : order) {
      sorted.rows.push_back(pm.rows[r]);
      sorted.multiplicities.push_back(pm.multiplicities[r]);
    }
    if (!trivial(order.front())) continue;
    return sorted;
  }
  throw std::runtime_error("p_matrix: could not separate the common eigenspaces");
}

bool attach_exact(PMatrix& pm, const std::vector<std::vector<Rational>>& candidates, double tol) {
  if (candidates.size() != pm.rows.size()) return false;
  std::vector<std::vector<Rational>> exact(pm.rows.size());
  std::vector<bool> used(candidates.size(), false);
  for (std::size_t r = 0; r < pm.rows.size(); ++r) {
    bool found = false;
    for (std::size_t c = 0; c < candidates.size() && !found; ++c) {
      if (used[c] || candidates[c].size() != pm.rows[r].size()) continue;
      bool match = true;
      for (std::size_t i = 0; i < pm.rows[r].size(); ++i)
        if (std::fabs(candidates[c][i].to_double() - pm.rows[r][i]) > tol) {
          match = false;
          break;
        }
      if (match) {
        used[c] = true;
        exact[r] = candidates[c];
        found = true;
      }
    }
    if (!found) return false;
  }
  pm.exact = std::move(exact);
  return true;
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["A1"] = r.a1;
  j["A2"] = r.a2;
  j["A3"] = r.a3;
  j["A4"] = r.a4;
  j["A4_mode"] = r.a4_mode;
  j["ok"] = r.ok();
  j["transpose"] = r.transpose;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

nlohmann::ordered_json to_json(const StructureConstants& sc) {
  nlohmann::ordered_json j;
  const std::size_t d = sc.classes();
  j["classes"] = d;
  j["transpose"] = sc.transpose;
  j["valency"] = sc.valency;
  auto p = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d; ++i) {
    auto pi = nlohmann::ordered_json::array();
    for (std::size_t jj = 0; jj < d; ++jj) {
      auto pij = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < d; ++k) pij.push_back(sc(i, jj, k));
      pi.push_back(std::move(pij));
    }
    p.push_back(std::move(pi));
  }
  j["p"] = std::move(p);
  return j;
}

nlohmann::ordered_json to_json(const PMatrix& pm) {
  nlohmann::ordered_json j;
  j["rows"] = pm.rows;
  j["multiplicities"] = pm.multiplicities;
  if (pm.exact) {
    auto ex = nlohmann::ordered_json::array();
    for (const auto& row : *pm.exact) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(v.str());
      ex.push_back(std::move(r));
    }
    j["exact"] = std::move(ex);
  }
  return j;
}

}  // namespace schemelab
