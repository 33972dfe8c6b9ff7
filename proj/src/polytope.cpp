#include <stdexcept>

#include "schemelab/classic_schemes.hpp"
#include "schemelab/hypermatching.hpp"
#include "schemelab/lsplus.hpp"

namespace schemelab {

namespace {

void check_mt_params(int p, int q, int r) {
  if (q < 1 || r < 1 || p < q * r)
    throw std::invalid_argument("matching polytope: needs q, r >= 1 and p >= qr");
  if (p > 32) throw std::invalid_argument("matching polytope: p <= 32");
}

void check_bmt_params(int b, int p, int q) {
  if (b < 1 || q < 1 || p < q) throw std::invalid_argument("b-matching polytope: needs b, q >= 1 and p >= q");
  if (p > 63) throw std::invalid_argument("b-matching polytope: p <= 63");
}

// Vertex incidence rows over sets given as masks, negated for covering.
Polytope incidence_polytope(const std::vector<std::uint64_t>& sets, int p, long rhs, bool cover,
                            std::string name) {
  Polytope P;
  P.n = sets.size();
  P.name = std::move(name);
  const Rational sign = cover ? Rational(-1) : Rational(1);
  for (int v = 0; v < p; ++v) {
    PolytopeRow row;
    for (std::size_t s = 0; s < sets.size(); ++s)
      if ((sets[s] >> v) & 1u) row.coeffs.emplace_back(s, sign);
    row.rhs = sign * Rational(rhs);
    P.rows.push_back(std::move(row));
  }
  return P;
}

std::vector<std::uint64_t> saturations(int p, int q, int r) {
  std::vector<std::uint64_t> out;
  for (const auto& m : enumerate_matchings(p, q, r)) out.push_back(m.saturation());
  return out;
}

std::string params(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int x : v) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

Polytope build_frac(const Graph& g) {
  Polytope P;
  P.n = g.n();
  P.name = "FRAC";
  for (auto [u, v] : g.edges()) {
    PolytopeRow row;
    row.coeffs = {{u, Rational(1)}, {v, Rational(1)}};
    row.rhs = 1;
    P.rows.push_back(std::move(row));
  }
  return P;
}

Polytope build_mt(int p, int q, int r) {
  check_mt_params(p, q, r);
  return incidence_polytope(saturations(p, q, r), p, 1, false, "MT" + params({p, q, r}));
}

Polytope build_mt_cover(int p, int q, int r) {
  check_mt_params(p, q, r);
  return incidence_polytope(saturations(p, q, r), p, 1, true, "MTC" + params({p, q, r}));
}

Polytope build_bmt(int b, int p, int q) {
  check_bmt_params(b, p, q);
  return incidence_polytope(colex_subsets(p, q), p, b, false, "bMT" + params({b, p, q}));
}

Polytope build_bmt_cover(int b, int p, int q) {
  check_bmt_params(b, p, q);
  return incidence_polytope(colex_subsets(p, q), p, b, true, "bMTC" + params({b, p, q}));
}

ConeCheck cone_check(const Polytope& P, const std::vector<Rational>& v) {
  ConeCheck out;
  if (v.size() != P.n + 1) {
    out.reason = "dimension mismatch";
    return out;
  }
  const Rational& lam = v[0];
  if (lam.sign() < 0) {
    out.reason = "negative homogenising coordinate";
    return out;
  }
  if (lam.is_zero()) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        out.reason = "nonzero vector with zero homogenising coordinate";
        return out;
      }
    out.member = true;
    return out;
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].sign() < 0 || v[i] > lam) {
      out.reason = "box violated at coordinate " + std::to_string(i);
      return out;
    }
  for (std::size_t k = 0; k < P.rows.size(); ++k) {
    mpq_class lhs = 0;
    for (const auto& [idx, a] : P.rows[k].coeffs) lhs += a.raw() * v[idx + 1].raw();
    if (lhs > P.rows[k].rhs.raw() * lam.raw()) {
      out.violated_row = k;
      out.reason = "row " + std::to_string(k) + " violated";
      return out;
    }
  }
  out.member = true;
  return out;
}

bool cone_member(const Polytope& P, const std::vector<Rational>& v) { return cone_check(P, v).member; }

}  // namespace schemelab
