#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "schemelab/hypermatching.hpp"

namespace schemelab {

std::uint32_t Matching::saturation() const {
  std::uint32_t s = 0;
  for (auto e : edges) s |= e;
  return s;
}

std::string Matching::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += "{";
    bool first = true;
    for (std::uint32_t x = edges[i]; x; x &= x - 1) {
      if (!first) out += ",";
      out += std::to_string(__builtin_ctz(x));
      first = false;
    }
    out += "}";
  }
  return out + "}";
}

namespace {

void lex_subsets(int p, int q, int start, std::uint32_t cur, int left,
                 std::vector<std::uint32_t>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= p - left; ++v) lex_subsets(p, q, v + 1, cur | (1u << v), left - 1, out);
}

void extend(const std::vector<std::uint32_t>& edges, std::size_t from, int left, std::uint32_t used,
            std::vector<std::uint32_t>& cur, std::vector<Matching>& out) {
  if (left == 0) {
    out.push_back(Matching{cur});
    return;
  }
  for (std::size_t e = from; e < edges.size(); ++e) {
    if (edges[e] & used) continue;
    cur.push_back(edges[e]);
    extend(edges, e + 1, left - 1, used | edges[e], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int p, int q, int r) {
  if (p < 0 || p > 32 || q < 1 || r < 0)
    throw std::invalid_argument("enumerate_matchings: need 0 <= p <= 32, q >= 1, r >= 0");
  std::vector<std::uint32_t> edges;
  if (q <= p) lex_subsets(p, q, 0, 0, q, edges);
  std::vector<Matching> out;
  std::vector<std::uint32_t> cur;
  if (static_cast<long>(q) * r <= p) extend(edges, 0, r, 0, cur, out);
  return out;
}

mpz_class matching_count(int p, int q, int r) {
  if (static_cast<long>(q) * r > p) return 0;
  mpz_class num, den, t;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(r));
  mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(q));
  for (int i = 0; i < r; ++i) den *= t;
  mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(p - q * r));
  den *= t;
  return num / den;
}

int MeetTable::sum() const { return std::accumulate(m.begin(), m.end(), 0); }

MeetTable MeetTable::transposed() const {
  MeetTable t{r, std::vector<int>(m.size())};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) t.m[static_cast<std::size_t>(j * r + i)] = m[static_cast<std::size_t>(i * r + j)];
  return t;
}

std::string MeetTable::str() const {
  std::string out = "[";
  for (int i = 0; i < r; ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < r; ++j) {
      if (j) out += ",";
      out += std::to_string(m[static_cast<std::size_t>(i * r + j)]);
    }
    out += "]";
  }
  return out + "]";
}

MeetTable meet_table(const Matching& s, const Matching& t) {
  const int r = static_cast<int>(s.edges.size());
  if (t.edges.size() != s.edges.size()) throw std::invalid_argument("meet_table: sizes differ");
  MeetTable mt{r, std::vector<int>(static_cast<std::size_t>(r * r))};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      mt.m[static_cast<std::size_t>(i * r + j)] =
          __builtin_popcount(s.edges[static_cast<std::size_t>(i)] & t.edges[static_cast<std::size_t>(j)]);
  return mt;
}

MeetTable canonical_form(const MeetTable& t) {
  const int r = t.r;
  std::vector<int> rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(r));
  std::iota(rows.begin(), rows.end(), 0);
  MeetTable best = t;
  std::vector<int> cand(t.m.size());
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          cand[static_cast<std::size_t>(i * r + j)] =
              t.m[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)] * r + cols[static_cast<std::size_t>(j)])];
      if (cand < best.m) best.m = cand;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

}  // namespace schemelab
