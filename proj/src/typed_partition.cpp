#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "schemelab/hypermatching.hpp"

namespace schemelab {

std::string TypedPartition::str() const {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ",";
    out += std::to_string(part.value);
    switch (part.type) {
      case PartType::Plus: out += "+"; break;
      case PartType::Minus: out += "-"; break;
      case PartType::Bar: out += "~"; break;
      case PartType::Prime: out += "'"; break;
    }
  }
  return out;
}

TypedPartition typed_partition_of(const Matching& s, const Matching& t) {
  std::array<int, 32> s_edge, t_edge;
  s_edge.fill(-1);
  t_edge.fill(-1);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    if (__builtin_popcount(s.edges[i]) != 2 || __builtin_popcount(t.edges[i]) != 2)
      throw std::invalid_argument("typed_partition_of: 2-uniform matchings only");
    for (std::uint32_t x = s.edges[i]; x; x &= x - 1) s_edge[static_cast<std::size_t>(__builtin_ctz(x))] = static_cast<int>(i);
    for (std::uint32_t x = t.edges[i]; x; x &= x - 1) t_edge[static_cast<std::size_t>(__builtin_ctz(x))] = static_cast<int>(i);
  }
  const std::uint32_t all = s.saturation() | t.saturation();
  std::uint32_t seen = 0;
  TypedPartition tp;
  for (std::uint32_t x = all; x; x &= x - 1) {
    const int v0 = __builtin_ctz(x);
    if (seen & (1u << v0)) continue;
    // Flood fill the component through S and T edges.
    std::uint32_t comp = 0;
    std::vector<int> stack{v0};
    std::uint32_t s_used = 0, t_used = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (comp & (1u << v)) continue;
      comp |= 1u << v;
      if (int e = s_edge[static_cast<std::size_t>(v)]; e >= 0) {
        s_used |= 1u << e;
        for (std::uint32_t y = s.edges[static_cast<std::size_t>(e)]; y; y &= y - 1) stack.push_back(__builtin_ctz(y));
      }
      if (int e = t_edge[static_cast<std::size_t>(v)]; e >= 0) {
        t_used |= 1u << e;
        for (std::uint32_t y = t.edges[static_cast<std::size_t>(e)]; y; y &= y - 1) stack.push_back(__builtin_ctz(y));
      }
    }
    seen |= comp;
    const int ns = __builtin_popcount(s_used);
    const int nt = __builtin_popcount(t_used);
    const int edges = ns + nt;
    const int verts = __builtin_popcount(comp);
    TypedPart part{edges, PartType::Prime};
    if (verts == edges) part.type = PartType::Prime;
    else if (edges % 2 == 0) part.type = PartType::Bar;
    else part.type = ns > nt ? PartType::Plus : PartType::Minus;
    tp.parts.push_back(part);
  }
  std::sort(tp.parts.begin(), tp.parts.end());
  return tp;
}

namespace {

void fill(const std::vector<TypedPart>& kinds, std::size_t k, int left, TypedPartition& cur,
          std::vector<TypedPartition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (k == kinds.size()) return;
  const int v = kinds[k].value;
  int used = 0;
  for (; used * v <= left; ++used) {
    fill(kinds, k + 1, left - used * v, cur, out);
    cur.parts.push_back(kinds[k]);
  }
  for (int i = 0; i < used; ++i) cur.parts.pop_back();
}

}  // namespace

std::vector<TypedPartition> typed_partitions(int p, int r) {
  if (r < 0) throw std::invalid_argument("typed_partitions: r >= 0");
  std::vector<TypedPart> kinds;
  for (int v = 1; v <= 2 * r; ++v) {
    if (v % 2) {
      kinds.push_back({v, PartType::Plus});
      kinds.push_back({v, PartType::Minus});
    } else {
      kinds.push_back({v, PartType::Bar});
      kinds.push_back({v, PartType::Prime});
    }
  }
  std::vector<TypedPartition> raw;
  TypedPartition cur;
  fill(kinds, 0, 2 * r, cur, raw);
  std::vector<TypedPartition> out;
  for (auto& tp : raw) {
    int plus = 0, minus = 0, paths = 0;
    for (const auto& part : tp.parts) {
      plus += part.type == PartType::Plus;
      minus += part.type == PartType::Minus;
      paths += part.type != PartType::Prime;
    }
    if (plus != minus || paths > p - 2 * r) continue;
    std::sort(tp.parts.begin(), tp.parts.end());
    out.push_back(std::move(tp));
  }
  std::sort(out.begin(), out.end(), [](const TypedPartition& a, const TypedPartition& b) {
    return a.parts < b.parts;
  });
  return out;
}

mpz_class count_classes_q2(int p, int r) {
  if (p < 2 * r) return 0;
  return static_cast<unsigned long>(typed_partitions(p, r).size());
}

std::vector<mpz_class> count_classes_q2_series(int r_max) {
  if (r_max < 0) throw std::invalid_argument("count_classes_q2_series: r_max >= 0");
  const int xmax = 2 * r_max;
  const int ymax = r_max;
  std::vector<mpz_class> c(static_cast<std::size_t>((xmax + 1) * (ymax + 1)), 0);
  auto at = [&](int x, int y) -> mpz_class& { return c[static_cast<std::size_t>(x * (ymax + 1) + y)]; };
  at(0, 0) = 1;
  auto geometric = [&](int a, int b) {
    for (int x = a; x <= xmax; ++x)
      for (int y = b; y <= ymax; ++y) at(x, y) += at(x - a, y - b);
  };
  for (int i = 1; 2 * i - 1 <= xmax; ++i) {
    geometric(2 * i - 1, i);
    geometric(2 * i - 1, i - 1);
    if (2 * i <= xmax) {
      geometric(2 * i, i);
      geometric(2 * i, i);
    }
  }
  std::vector<mpz_class> out;
  for (int r = 0; r <= r_max; ++r) out.push_back(at(2 * r, r));
  return out;
}

mpz_class count_classes_r2(int p, int q) {
  if (q < 0) throw std::invalid_argument("count_classes_r2: q >= 0");
  if (p < 4 * q) throw std::domain_error("count_classes_r2: closed form needs p >= 4q");
  const mpz_class z = q;
  const mpz_class head = z * z * z * z + 6 * z * z * z + 20 * z * z;
  const mpz_class n = q % 2 == 0 ? head + 36 * z + 24 : head + 30 * z + 15;
  return n / 24;
}

std::optional<int> x_index_of(const TypedPartition& tp) {
  static const std::array<const char*, 10> names{
      "2',2'", "4'", "2~,2'", "4~", "1+,1-,2'", "2~,2~", "1-,3+", "1+,3-", "1+,1-,2~", "1+,1+,1-,1-"};
  const std::string s = tp.str();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (s == names[i]) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace schemelab
