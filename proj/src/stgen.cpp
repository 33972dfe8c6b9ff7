#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "schemelab/classic_schemes.hpp"
#include "schemelab/hypermatching.hpp"
#include "schemelab/lsplus.hpp"
#include "schemelab/parallel.hpp"

namespace schemelab {

namespace {

constexpr std::size_t kGroundCap = 2000;

Rational ratio(const mpz_class& a, const mpz_class& b) { return Rational(a, b); }
Rational rat(long v) { return Rational(v); }

bool corner_ok(const RatMatrix& Y) {
  if (!Y.is_symmetric() || Y(0, 0) != Rational(1)) return false;
  for (std::size_t i = 1; i < Y.size(); ++i)
    if (Y(i, 0) != Y(i, i)) return false;
  return true;
}

// Every Y e_i and Y (e0 - e_i) in K(P).
bool columns_in_cone(const Polytope& P, const RatMatrix& Y) {
  const std::size_t m = Y.size();
  std::vector<char> ok(m, 1);
  parallel_for(m - 1, [&](std::size_t t) {
    const std::size_t i = t + 1;
    std::vector<Rational> col(m), comp(m);
    for (std::size_t k = 0; k < m; ++k) {
      col[k] = Y(k, i);
      comp[k] = Y(k, 0) - Y(k, i);
    }
    ok[i] = cone_member(P, col) && cone_member(P, comp);
  });
  return std::all_of(ok.begin() + 1, ok.end(), [](char c) { return c != 0; });
}

DenseMatrix lower_block(const RatMatrix& Y) {
  DenseMatrix d(Y.size() - 1);
  for (std::size_t i = 1; i < Y.size(); ++i)
    for (std::size_t j = 1; j < Y.size(); ++j) d(i - 1, j - 1) = Y(i, j).to_double();
  return d;
}

// Compares the multiplicity-weighted closed-form spectrum with a numeric one.
void match_spectrum(RankCertificateReport& r, const DenseMatrix& block, double scale) {
  EigenOptions eo;
  eo.method = block.size() > 200 ? EigenMethod::Tridiagonal : EigenMethod::Jacobi;
  const std::vector<double> numeric = eig_sym(block, eo).values;
  std::vector<std::pair<double, std::size_t>> expected;  // value, eigen index
  for (std::size_t t = 0; t < r.eigen.size(); ++t)
    for (int m = 0; m < r.eigen[t].multiplicity; ++m)
      expected.emplace_back(r.eigen[t].closed_form.to_double(), t);
  std::sort(expected.begin(), expected.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  r.eigen_max_deviation = 0;
  if (expected.size() != numeric.size()) {
    r.eigen_match = false;
    r.warnings.push_back("closed-form multiplicities do not sum to the dimension");
    return;
  }
  std::vector<char> seen(r.eigen.size(), 0);
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    r.eigen_max_deviation = std::max(r.eigen_max_deviation, std::abs(numeric[i] - expected[i].first));
    auto& e = r.eigen[expected[i].second];
    if (!seen[expected[i].second]) {
      e.numeric = numeric[i];
      seen[expected[i].second] = 1;
    }
  }
  r.eigen_match = r.eigen_max_deviation <= 1e-7 * scale;
}

void finish_eigen(RankCertificateReport& r) {
  r.eigen_nonnegative = std::all_of(r.eigen.begin(), r.eigen.end(),
                                    [](const EigenCheck& e) { return e.closed_form.sign() >= 0; });
  for (const auto& e : r.eigen)
    if (e.alternate && *e.alternate != e.closed_form) {
      r.eigen_match = false;
      r.warnings.push_back("factored and unfactored eigenvalues differ at j = " + std::to_string(e.j));
    }
}

}  // namespace

bool RankCertificateReport::ok() const {
  if (!corner || !structure || !eigen_nonnegative || !eigen_match) return false;
  if (identity && !*identity) return false;
  if (averaging && !*averaging) return false;
  if (direct_cones && !*direct_cones) return false;
  if (psd && psd->verdict != PsdVerdict::Psd) return false;
  for (const auto& o : obligations)
    if (!o.cited && !o.discharged) return false;
  return true;
}

LsCertificate stgen1_matrix(int p, int q, int r) {
  const int qr = q * r;
  const auto ms = enumerate_matchings(p, q, r);
  if (ms.size() > kGroundCap) throw std::length_error("stgen1: more than 2000 matchings");
  const mpz_class block = matching_count(qr, q, r);
  const Rational a0 = ratio(1, binomial(p - 1, qr - 1) * block);
  const Rational a1 = ratio(1, binomial(p - qr - 1, qr - 1) * block);
  const Rational off = a0 * a1;
  const std::size_t n = ms.size();
  std::vector<std::uint32_t> sat(n);
  for (std::size_t s = 0; s < n; ++s) sat[s] = ms[s].saturation();
  LsCertificate c;
  c.Y = RatMatrix(n + 1);
  c.Y(0, 0) = 1;
  for (std::size_t s = 0; s < n; ++s) {
    c.Y(0, s + 1) = c.Y(s + 1, 0) = c.Y(s + 1, s + 1) = a0;
    for (std::size_t t = 0; t < n; ++t)
      if ((sat[s] & sat[t]) == 0) c.Y(s + 1, t + 1) = off;
  }
  return c;
}

RankCertificateReport stgen1_certificate(int p, int q, int r, int level, const PsdOptions& psd) {
  const int qr = q * r;
  if (q < 1 || r < 1) throw std::invalid_argument("stgen1: q, r >= 1");
  if (p < 2 * qr) throw std::invalid_argument("stgen1: needs p >= 2qr");
  if (level < 1 || level >= p / qr) throw std::invalid_argument("stgen1: needs 1 <= level < floor(p/qr)");
  RankCertificateReport rep;
  rep.family = "mt";
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.level = level;
  if (p % qr != 0) rep.implied_rank = level + 1;
  else rep.warnings.push_back("qr divides p: the fractional point is integral, no rank claim");

  const HypermatchingScheme hs(p, q, r);
  const auto& ms = hs.matchings();
  const std::size_t n = ms.size();
  if (n > kGroundCap) throw std::length_error("stgen1: more than 2000 matchings");
  rep.ground = n;
  const mpz_class block = matching_count(qr, q, r);
  const Rational a0 = ratio(1, binomial(p - 1, qr - 1) * block);
  const Rational a1 = ratio(1, binomial(p - qr - 1, qr - 1) * block);
  rep.alphas = {a0, a1};
  const LsCertificate cert = stgen1_matrix(p, q, r);
  const RatMatrix& Y = cert.Y;
  rep.corner = corner_ok(Y);

  std::vector<std::uint32_t> sat(n);
  for (std::size_t s = 0; s < n; ++s) sat[s] = ms[s].saturation();

  // Y' = a0 (I + a1 B) with B the class of saturation 2qr in the scheme.
  {
    std::vector<char> ok(n, 1);
    parallel_for(n, [&](std::size_t s) {
      for (std::size_t t = 0; t < n && ok[s]; ++t) {
        const int k = hs.class_of(s, t);
        Rational want = s == t ? a0 : Rational(0);
        if (s != t && hs.classes()[static_cast<std::size_t>(k)].saturation == 2 * qr) want = a0 * a1;
        if (Y(s + 1, t + 1) != want) ok[s] = 0;
      }
    });
    rep.structure = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  }

  // sum_T |sat S & sat T| / qr * Y e_T = Y e0, compared entrywise in integers.
  {
    std::vector<std::vector<std::uint32_t>> disjoint(n);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t t = 0; t < n; ++t)
        if ((sat[w] & sat[t]) == 0) disjoint[w].push_back(static_cast<std::uint32_t>(t));
    std::vector<char> ok(n, 1);
    const Rational qrr = rat(qr);
    parallel_for(n, [&](std::size_t s) {
      std::vector<long> meet(n);
      long total = 0;
      for (std::size_t t = 0; t < n; ++t) {
        meet[t] = std::popcount(sat[s] & sat[t]);
        total += meet[t];
      }
      if (a0 * rat(total) != qrr) {
        ok[s] = 0;
        return;
      }
      for (std::size_t w = 0; w < n; ++w) {
        long acc = 0;
        for (std::uint32_t t : disjoint[w]) acc += meet[t];
        if (a0 * rat(meet[w]) + a0 * a1 * rat(acc) != a0 * qrr) {
          ok[s] = 0;
          return;
        }
      }
    });
    rep.identity = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  }

  if (level == 1) {
    rep.direct_cones = columns_in_cone(build_mt(p, q, r), Y);
    const Polytope sub = build_mt(p - qr, q, r);
    std::vector<Rational> v(sub.n + 1, a1);
    v[0] = 1;
    InductionObligation ob;
    ob.statement = "alpha1 e in MT_r(K_" + std::to_string(p - qr) + "^" + std::to_string(q) + ")";
    ob.discharged = cone_member(sub, v);
    ob.how = "exact row check";
    rep.obligations.push_back(ob);
  } else {
    InductionObligation ob;
    ob.statement = "alpha1 e in LS+^" + std::to_string(level - 1) + "(MT_r(K_" + std::to_string(p - qr) +
                   "^" + std::to_string(q) + "))";
    const RankCertificateReport sub = stgen1_certificate(p - qr, q, r, level - 1, psd);
    ob.discharged = sub.ok();
    ob.how = "recursive certificate at level " + std::to_string(level - 1);
    rep.obligations.push_back(ob);
  }
  InductionObligation face;
  face.statement = "LS+(P cap F) is contained in LS+(P) cap F for faces F of the unit cube";
  face.cited = true;
  face.how = "general property of LS+, not checked";
  rep.obligations.push_back(face);

  for (int j = 0; j <= qr; ++j) {
    EigenCheck e;
    e.j = j;
    const Rational sgn = j % 2 == 0 ? rat(1) : rat(-1);
    const mpz_class c = binomial(p - qr - j, qr - j);
    e.closed_form = a0 * (rat(1) + sgn * ratio(c, binomial(p - qr - 1, qr - 1)));
    e.alternate = a0 * (rat(1) + sgn * Rational(mpz_class(c * block)) * a1);
    e.multiplicity = static_cast<int>(johnson_multiplicity(p, j).get_si());
    rep.eigen.push_back(e);
  }
  const long kernel = mpz_class(binomial(p, qr) * (block - 1)).get_si();
  if (kernel > 0) {
    EigenCheck e;
    e.j = -1;  // kernel of the all-ones factor
    e.closed_form = a0;
    e.multiplicity = static_cast<int>(kernel);
    rep.eigen.push_back(e);
  }
  match_spectrum(rep, lower_block(Y), std::abs(a0.to_double()));
  finish_eigen(rep);
  rep.psd = psd_check(Y, psd);
  return rep;
}

LsCertificate stgen4_matrix(int b, int p, int q) {
  if (p < 2 * q) throw std::invalid_argument("stgen4: needs p >= 2q");
  const auto subsets = colex_subsets(p, q);
  const std::size_t n = subsets.size();
  if (n > kGroundCap) throw std::length_error("stgen4: more than 2000 edges");
  const Rational a0 = ratio(b, binomial(p - 1, q - 1));
  const Rational a1 = Rational(b - 1, static_cast<long>(q) * (p - q));
  const Rational a2 = ratio(b - 1, q * binomial(p - q, q - 1));
  const Rational a3 = ratio(static_cast<long>(b) * p - 2L * b * q + q, q * binomial(p - q, q));
  LsCertificate c;
  c.Y = RatMatrix(n + 1);
  c.Y(0, 0) = 1;
  for (std::size_t s = 0; s < n; ++s) {
    c.Y(0, s + 1) = c.Y(s + 1, 0) = a0;
    for (std::size_t t = 0; t < n; ++t) {
      const int meet = std::popcount(subsets[s] & subsets[t]);
      // Sum of the four associate matrices; the indicators overlap when q = 2.
      Rational v = s == t ? rat(1) : rat(0);
      if (s != t && meet == q - 1) v += a1;
      if (s != t && meet == 1) v += a2;
      if (meet == 0) v += a3;
      c.Y(s + 1, t + 1) = a0 * v;
    }
  }
  return c;
}

namespace {

// Sums of w_{i,j,S} over disjoint j and |S| = size, for one edge i.
std::vector<Rational> averaged(int b, int p, int q, const std::vector<std::uint64_t>& edges,
                               std::size_t i, int size, bool include_ends, long& outside,
                               const Polytope& P, bool check_members) {
  const std::size_t n = edges.size();
  std::vector<Rational> acc(n, 0);
  const mpz_class denom_far = binomial(p - 2 * q - 1, q - 1);
  const Rational far = denom_far == 0 ? rat(0) : ratio(b, denom_far);
  const std::uint64_t ei = edges[i];
  std::vector<int> iv, jv;
  for (int v = 0; v < p; ++v)
    if ((ei >> v) & 1u) iv.push_back(v);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t ej = edges[j];
    if (ei & ej) continue;
    jv.clear();
    for (int v = 0; v < p; ++v)
      if ((ej >> v) & 1u) jv.push_back(v);
    const int pairs = q * q;
    // Subsets of the q^2 cross pairs of the given size, by bitmask.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<Rational> w(n, 0);
      if (include_ends) {
        w[i] = 1;
        w[j] = 1;
      }
      for (int t = 0; t < pairs; ++t) {
        if (!((mask >> t) & 1u)) continue;
        const int v1 = iv[static_cast<std::size_t>(t / q)];
        const int v2 = jv[static_cast<std::size_t>(t % q)];
        const std::uint64_t h1 = (ei & ~(std::uint64_t{1} << v1)) | (std::uint64_t{1} << v2);
        const std::uint64_t h2 = (ej & ~(std::uint64_t{1} << v2)) | (std::uint64_t{1} << v1);
        // Counted with multiplicity: for q = 2 a pair and its complement
        // produce the same two edges.
        w[colex_rank(h1)] += 1;
        w[colex_rank(h2)] += 1;
      }
      for (std::size_t h = 0; h < n; ++h)
        if ((edges[h] & (ei | ej)) == 0) w[h] = far;
      if (check_members) {
        std::vector<Rational> v(n + 1);
        v[0] = 1;
        std::copy(w.begin(), w.end(), v.begin() + 1);
        if (!cone_member(P, v)) ++outside;
      }
      for (std::size_t h = 0; h < n; ++h) acc[h] += w[h];
    }
  }
  return acc;
}

}  // namespace

RankCertificateReport stgen4_certificate(int b, int p, int q, const PsdOptions& psd) {
  if (b < 1 || q < 1) throw std::invalid_argument("stgen4: b, q >= 1");
  if (static_cast<long>(q) * q < b) throw std::invalid_argument("stgen4: needs q^2 >= b");
  if (p < b + q - 1) throw std::invalid_argument("stgen4: needs p >= b + q - 1");
  if (p < 2 * q) throw std::invalid_argument("stgen4: needs p >= 2q");
  RankCertificateReport rep;
  rep.family = "bmt";
  rep.b = b;
  rep.p = p;
  rep.q = q;
  rep.level = (p - b - q + 1) / (2 * q);
  if ((static_cast<long>(b) * p) % q != 0)
    rep.implied_rank = rep.level + 1;
  else
    rep.warnings.push_back("q divides bp: the fractional point may be integral, no rank claim");

  const auto edges = colex_subsets(p, q);
  const std::size_t n = edges.size();
  rep.ground = n;
  const LsCertificate cert = stgen4_matrix(b, p, q);
  const RatMatrix& Y = cert.Y;
  const Rational a0 = ratio(b, binomial(p - 1, q - 1));
  const Rational a1 = Rational(b - 1, static_cast<long>(q) * (p - q));
  const Rational a2 = ratio(b - 1, q * binomial(p - q, q - 1));
  const Rational a3 = ratio(static_cast<long>(b) * p - 2L * b * q + q, q * binomial(p - q, q));
  rep.alphas = {a0, a1, a2, a3};
  rep.corner = corner_ok(Y);

  // Y' = a0 (I + a1 J1 + a2 J_{q-1} + a3 J_q) from the Johnson associates.
  {
    RatMatrix want = RatMatrix::identity(n);
    want += johnson_matrix(p, q, 1) * a1;
    want += johnson_matrix(p, q, q - 1) * a2;
    want += johnson_matrix(p, q, q) * a3;
    want *= a0;
    rep.structure = true;
    for (std::size_t s = 0; s < n && rep.structure; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (Y(s + 1, t + 1) != want(s, t)) {
          rep.structure = false;
          break;
        }
  }

  const Polytope P = build_bmt(b, p, q);
  if (rep.level >= 1) {
    // Averages of the w vectors, checked on every edge while the work stays small.
    const long per_edge = binomial(p - q, q).get_si() * binomial(q * q, b).get_si();
    const bool all_edges = static_cast<double>(per_edge) * static_cast<double>(n * n) <= 2e7;
    const std::size_t count = all_edges ? n : 1;
    const bool base = rep.level == 1;
    std::vector<char> avg_ok(count, 1);
    std::vector<long> outside(count, 0);
    parallel_for(count, [&](std::size_t i) {
      long members = 0;
      const std::vector<Rational> z = averaged(b, p, q, edges, i, b - 1, true, members, P, base);
      const std::vector<Rational> zb = averaged(b, p, q, edges, i, b, false, members, P, base);
      const Rational nz = Rational(mpz_class(binomial(p - q, q) * binomial(q * q, b - 1)));
      const Rational nzb = Rational(mpz_class(binomial(p - q, q) * binomial(q * q, b)));
      for (std::size_t h = 0; h < n; ++h) {
        if (a0 * z[h] / nz != Y(h + 1, i + 1)) avg_ok[i] = 0;
        if ((rat(1) - a0) * zb[h] / nzb != Y(h + 1, 0) - Y(h + 1, i + 1)) avg_ok[i] = 0;
      }
      outside[i] = members;
    });
    rep.averaging = std::all_of(avg_ok.begin(), avg_ok.end(), [](char c) { return c != 0; });
    if (!all_edges) rep.warnings.push_back("averaging checked at edge 0 only");
    InductionObligation ob;
    const int sub_p = p - 2 * q;
    ob.statement = "b/C(" + std::to_string(sub_p - 1) + "," + std::to_string(q - 1) + ") e in LS+^" +
                   std::to_string(rep.level - 1) + "(bMT(K_" + std::to_string(sub_p) + "^" +
                   std::to_string(q) + "))";
    long out_total = 0;
    for (long o : outside) out_total += o;
    if (base && out_total > 0)
      rep.warnings.push_back(std::to_string(out_total) +
                             " of the w_{i,j,S} vectors leave bMT (repeated cross edges)");
    if (base) {
      rep.direct_cones = columns_in_cone(P, Y);
      ob.discharged = *rep.direct_cones;
      ob.how = "Y e_i and Y (e0 - e_i) checked against K(bMT) exactly";
    } else {
      const RankCertificateReport sub = stgen4_certificate(b, sub_p, q, psd);
      ob.discharged = sub.ok();
      ob.how = "recursive certificate at level " + std::to_string(rep.level - 1);
    }
    rep.obligations.push_back(ob);
    InductionObligation face;
    face.statement = "LS+(P cap F) is contained in LS+(P) cap F for faces F of the unit cube";
    face.cited = true;
    face.how = "general property of LS+, not checked";
    rep.obligations.push_back(face);
  } else {
    InductionObligation ob;
    ob.statement = "alpha0 e in bMT(K_" + std::to_string(p) + "^" + std::to_string(q) + ")";
    std::vector<Rational> v(n + 1, a0);
    v[0] = 1;
    ob.discharged = cone_member(P, v);
    ob.how = "exact row check (level 0)";
    rep.obligations.push_back(ob);
    rep.warnings.push_back("level 0: cone conditions of the certificate are not required");
  }

  for (int j = 0; j <= q; ++j) {
    EigenCheck e;
    e.j = j;
    const Rational sgn = j % 2 == 0 ? rat(1) : rat(-1);
    const Rational f1 = rat(1) + sgn * ratio(binomial(p - q - j, q - j), binomial(p - q - 1, q - 1));
    const Rational f2 = rat(1) + Rational(static_cast<long>(b - 1) * ((q - j) * (p - q - j) - j),
                                          static_cast<long>(q) * (p - q));
    e.closed_form = a0 * f1 * f2;
    e.alternate = a0 * (rat(1) + a1 * Rational(johnson_eigenvalue(p, q, 1, j)) +
                        a2 * Rational(johnson_eigenvalue(p, q, q - 1, j)) +
                        a3 * Rational(johnson_eigenvalue(p, q, q, j)));
    e.multiplicity = static_cast<int>(johnson_multiplicity(p, j).get_si());
    rep.eigen.push_back(e);
  }
  match_spectrum(rep, lower_block(Y), std::abs(a0.to_double()));
  finish_eigen(rep);
  rep.psd = psd_check(Y, psd);
  return rep;
}

nlohmann::ordered_json to_json(const RankCertificateReport& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  nlohmann::ordered_json params;
  if (r.family == "bmt") params["b"] = r.b;
  params["p"] = r.p;
  params["q"] = r.q;
  if (r.family == "mt") params["r"] = r.r;
  j["parameters"] = std::move(params);
  j["level"] = r.level;
  if (r.implied_rank) j["implied_rank_lower_bound"] = *r.implied_rank;
  std::vector<std::string> alphas;
  for (const auto& a : r.alphas) alphas.push_back(a.str());
  j["alphas"] = alphas;
  j["ground"] = r.ground;
  nlohmann::ordered_json checks;
  checks["corner"] = r.corner;
  checks["structure"] = r.structure;
  if (r.identity) checks["identity"] = *r.identity;
  if (r.averaging) checks["averaging"] = *r.averaging;
  if (r.direct_cones) checks["direct_cones"] = *r.direct_cones;
  checks["eigen_nonnegative"] = r.eigen_nonnegative;
  checks["eigen_match"] = r.eigen_match;
  j["checks"] = std::move(checks);
  auto eig = nlohmann::ordered_json::array();
  for (const auto& e : r.eigen) {
    nlohmann::ordered_json x;
    x["j"] = e.j;
    x["closed_form"] = e.closed_form.str();
    if (e.alternate) x["unfactored"] = e.alternate->str();
    x["numeric"] = e.numeric;
    x["multiplicity"] = e.multiplicity;
    x["provenance"] = "closed-form";
    eig.push_back(std::move(x));
  }
  j["eigenvalues"] = std::move(eig);
  j["eigen_max_deviation"] = r.eigen_max_deviation;
  if (r.psd) {
    nlohmann::ordered_json p;
    p["mode"] = std::string(to_string(r.psd->used));
    p["verdict"] = std::string(to_string(r.psd->verdict));
    if (r.psd->min_eigenvalue) p["lambda_min"] = *r.psd->min_eigenvalue;
    j["psd"] = std::move(p);
  }
  auto obs = nlohmann::ordered_json::array();
  for (const auto& o : r.obligations)
    obs.push_back({{"statement", o.statement},
                   {"discharged", o.discharged},
                   {"cited", o.cited},
                   {"how", o.how}});
  j["obligations"] = std::move(obs);
  j["warnings"] = r.warnings;
  j["ok"] = r.ok();
  return j;
}

long max_disjoint_matchings(int p, int q, int r) {
  std::vector<std::uint32_t> sets;
  for (const auto& m : enumerate_matchings(p, q, r)) sets.push_back(m.saturation());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const int qr = q * r;
  long best = 0;
  std::function<void(std::size_t, std::uint32_t, long)> dfs = [&](std::size_t from, std::uint32_t used,
                                                                    long count) {
    best = std::max(best, count);
    const long free = p - std::popcount(used);
    if (count + free / qr <= best) return;
    for (std::size_t s = from; s < sets.size(); ++s)
      if ((sets[s] & used) == 0) dfs(s + 1, used | sets[s], count + 1);
  };
  dfs(0, 0, 0);
  return best;
}

long min_matching_cover(int p, int q, int r) {
  std::vector<std::uint32_t> sets;
  for (const auto& m : enumerate_matchings(p, q, r)) sets.push_back(m.saturation());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const int qr = q * r;
  const std::uint32_t all = p == 32 ? ~0u : (1u << p) - 1;
  long best = p + 1;
  std::function<void(std::uint32_t, long)> dfs = [&](std::uint32_t covered, long count) {
    if (covered == all) {
      best = std::min(best, count);
      return;
    }
    const long open = p - std::popcount(covered);
    if (count + (open + qr - 1) / qr >= best) return;
    const int v = std::countr_zero(~covered & all);
    for (std::uint32_t s : sets)
      if ((s >> v) & 1u) dfs(covered | s, count + 1);
  };
  dfs(0, 0);
  return best;
}

bool GapReport::ok() const {
  if (!lp_certified || ratio_form != mod_form) return false;
  if (packing_bruteforce && *packing_bruteforce != integer_optimum) return false;
  if (covering_bruteforce && *covering_bruteforce != covering_optimum) return false;
  return true;
}

GapReport mt_gap(int p, int q, int r, bool brute_force) {
  const int qr = q * r;
  if (q < 1 || r < 1 || p <= qr) throw std::invalid_argument("mt_gap: needs p > qr");
  if (p % qr == 0) throw std::invalid_argument("mt_gap: qr divides p");
  GapReport g;
  g.p = p;
  g.q = q;
  g.r = r;
  g.lp_optimum = Rational(p, qr);
  // Primal point a0 e and dual y = e / qr on the vertex rows.
  const Polytope P = build_mt(p, q, r);
  const Rational a0 = ratio(1, binomial(p - 1, qr - 1) * matching_count(qr, q, r));
  std::vector<Rational> x(P.n + 1, a0);
  x[0] = 1;
  const bool primal = cone_member(P, x) && a0 * Rational(static_cast<long>(P.n)) == g.lp_optimum;
  std::vector<Rational> col(P.n, 0);
  const Rational y(1, qr);
  for (const auto& row : P.rows)
    for (const auto& [idx, a] : row.coeffs) col[idx] += a * y;
  const bool dual = std::all_of(col.begin(), col.end(), [](const Rational& c) { return c >= Rational(1); }) &&
                    y * Rational(static_cast<long>(P.rows.size())) == g.lp_optimum;
  g.lp_certified = primal && dual;
  g.integer_optimum = p / qr;
  g.covering_optimum = (p + qr - 1) / qr;
  g.ratio_form = g.lp_optimum / Rational(g.integer_optimum);
  g.mod_form = rat(1) + Rational(p % qr, p - p % qr);
  if (brute_force) {
    g.packing_bruteforce = max_disjoint_matchings(p, q, r);
    g.covering_bruteforce = min_matching_cover(p, q, r);
  }
  return g;
}

nlohmann::ordered_json to_json(const GapReport& g) {
  nlohmann::ordered_json j;
  j["parameters"] = {{"p", g.p}, {"q", g.q}, {"r", g.r}};
  j["lp_optimum"] = {{"value", g.lp_optimum.str()}, {"provenance", "closed-form"},
                     {"certified", g.lp_certified}};
  j["integer_optimum"] = {{"value", g.integer_optimum}, {"provenance", "closed-form"}};
  j["gap"] = {{"ratio_form", g.ratio_form.str()}, {"mod_form", g.mod_form.str()}};
  if (g.packing_bruteforce) j["packing_bruteforce"] = {{"value", *g.packing_bruteforce}, {"provenance", "brute-force"}};
  j["covering_optimum"] = {{"value", g.covering_optimum}, {"provenance", "closed-form"}};
  if (g.covering_bruteforce)
    j["covering_bruteforce"] = {{"value", *g.covering_bruteforce}, {"provenance", "brute-force"}};
  j["ok"] = g.ok();
  return j;
}

}  // namespace schemelab
