#include "solvcert/representation.hpp"

#include <algorithm>
#include <map>

#include "solvcert/errors.hpp"

namespace solvcert {

std::string to_string(RepTier t) {
  switch (t) {
    case RepTier::AdCenterless: return "AdCenterless";
    case RepTier::AdPlusCharacters: return "AdPlusCharacters";
    case RepTier::NilpotentPBW: return "NilpotentPBW";
    case RepTier::SplitOverNilradical: return "SplitOverNilradical";
  }
  return "?";
}

bool verify_homomorphism(const LieAlgebra& g, const Representation& rep) {
  if (static_cast<int>(rep.matrices.size()) != g.dim()) return false;
  int d = rep.target_dim;
  for (const RatMatrix& m : rep.matrices)
    if (m.rows() != d || m.cols() != d) return false;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      RatVec c = g.bracket_basis(i, j);
      RatMatrix lhs(d, d);
      for (int k = 0; k < g.dim(); ++k)
        if (!c[k].is_zero()) lhs = lhs + rep.matrices[k] * c[k];
      RatMatrix rhs =
          rep.matrices[i] * rep.matrices[j] - rep.matrices[j] * rep.matrices[i];
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<RatVec> representation_joint_kernel(const Representation& rep) {
  int n = static_cast<int>(rep.matrices.size());
  int d = rep.target_dim;
  RatMatrix stacked(d * d, n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        stacked.at(r * d + c, j) = rep.matrices[j].at(r, c);
  return kernel(stacked);
}

namespace {

bool all_upper_triangular(const std::vector<RatMatrix>& ms) {
  for (const RatMatrix& m : ms)
    if (!m.is_upper_triangular()) return false;
  return true;
}

void finish_flags(const LieAlgebra& g, Representation& rep) {
  rep.is_triangular = all_upper_triangular(rep.matrices);
  rep.is_faithful = representation_joint_kernel(rep).empty();
  if (!verify_homomorphism(g, rep))
    throw Error("internal: representation violates the homomorphism law");
}

std::vector<std::string> poly_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.str());
  return out;
}

// ---------------------------------------------------------------------------
// Common eigenvector flags of a commuting family with rational eigenvalues.
// ---------------------------------------------------------------------------

// One common eigenvector; eigenvalues scanned ascending by (den, num).
RatVec common_eigenvector(const std::vector<RatMatrix>& ops, int r) {
  Subspace w = Subspace::full(r);
  for (const RatMatrix& a : ops) {
    auto rows = w.basis_vectors();
    int k = w.dim();
    RatMatrix restricted(k, k);
    for (int j = 0; j < k; ++j) {
      RatVec coords = w.coordinates(a.apply(rows[j]));
      for (int l = 0; l < k; ++l) restricted.at(l, j) = coords[l];
    }
    Poly chi = char_poly(restricted);
    auto eigenvalues = rational_roots(chi);
    if (eigenvalues.empty()) throw NeedsIrrationalEigenvalue(poly_strings(chi));
    RatMatrix shifted = restricted;
    for (int d = 0; d < k; ++d) shifted.at(d, d) -= eigenvalues[0];
    std::vector<RatVec> vecs;
    for (const RatVec& u : kernel(shifted)) {
      RatVec v(r, Rat(0));
      for (int l = 0; l < k; ++l)
        for (int t = 0; t < r; ++t) v[t] += u[l] * rows[l][t];
      vecs.push_back(std::move(v));
    }
    w = Subspace::span(r, vecs);
  }
  return w.basis().row(0);
}

// Ordered basis u_1..u_r with A u_i in span(u_1..u_i) for every op.
std::vector<RatVec> common_eigen_flag(const std::vector<RatMatrix>& ops, int r) {
  if (r == 0) return {};
  RatVec u1 = common_eigenvector(ops, r);
  if (r == 1) return {u1};
  Subspace line = Subspace::span(r, {u1});
  int pivot = line.pivots()[0];
  // Quotient by span(u1): subtract the u1 component, drop the pivot coord.
  RatMatrix proj(r - 1, r), lift(r, r - 1);
  {
    int a = 0;
    for (int j = 0; j < r; ++j) {
      if (j == pivot) continue;
      lift.at(j, a) = Rat(1);
      for (int t = 0; t < r; ++t)
        proj.at(a, t) = (t == j ? Rat(1) : Rat(0)) -
                        (t == pivot ? line.basis().at(0, j) : Rat(0));
      ++a;
    }
  }
  std::vector<RatMatrix> descended;
  for (const RatMatrix& a : ops) descended.push_back(proj * a * lift);
  std::vector<RatVec> flag{u1};
  for (const RatVec& v : common_eigen_flag(descended, r - 1))
    flag.push_back(lift.apply(v));
  return flag;
}

// ---------------------------------------------------------------------------
// Truncated enveloping-algebra machinery.
// ---------------------------------------------------------------------------

// Generators adapted to the lower central series: level-l generators extend
// L_{l+1} to L_l, levels listed ascending.  Within a level the order comes
// from a common-eigenvector flag of the (commuting) derivation actions,
// reversed so the action only moves generators to later positions modulo
// deeper levels; brackets land strictly deeper by the series itself.
struct AdaptedGenerators {
  RatMatrix columns;        // k x k, generator i = column i (algebra coords)
  std::vector<int> levels;  // per generator
};

AdaptedGenerators adapted_generators(const LieAlgebra& nn,
                                     const std::vector<RatMatrix>& ders) {
  int k = nn.dim();
  auto lcs = nn.lower_central_series();
  if (lcs.back().dim() != 0)
    throw InvalidInput("adapted generators require a nilpotent algebra");
  int c = static_cast<int>(lcs.size()) - 1;
  std::vector<RatVec> generators;
  std::vector<int> levels;
  for (int level = 1; level <= c; ++level) {
    const Subspace& big = lcs[level - 1];
    const Subspace& small = level < static_cast<int>(lcs.size())
                                ? lcs[level]
                                : Subspace::zero(k);
    // Canonical extension of `small` to `big`.
    std::vector<RatVec> layer;
    Subspace reach = small;
    for (const RatVec& row : big.basis_vectors()) {
      if (reach.contains(row)) continue;
      layer.push_back(row);
      reach = reach.sum(Subspace::span(k, {row}));
    }
    int r = static_cast<int>(layer.size());
    if (r == 0) continue;

    // Derivation action on the layer modulo the deeper part.
    std::vector<RatMatrix> layer_ops;
    if (!ders.empty()) {
      RatMatrix basis_cols(k, r + small.dim());
      for (int j = 0; j < r; ++j)
        for (int t = 0; t < k; ++t) basis_cols.at(t, j) = layer[j][t];
      for (int j = 0; j < small.dim(); ++j)
        for (int t = 0; t < k; ++t)
          basis_cols.at(t, r + j) = small.basis().at(j, t);
      for (const RatMatrix& d : ders) {
        RatMatrix op(r, r);
        for (int j = 0; j < r; ++j) {
          RatVec coords = solve(basis_cols, d.apply(layer[j]));
          for (int l = 0; l < r; ++l) op.at(l, j) = coords[l];
        }
        layer_ops.push_back(std::move(op));
      }
    }
    auto flag = common_eigen_flag(layer_ops, r);
    // Reversed flag order: the action moves mass to later generators.
    for (int i = r - 1; i >= 0; --i) {
      RatVec v(k, Rat(0));
      for (int j = 0; j < r; ++j)
        for (int t = 0; t < k; ++t) v[t] += flag[i][j] * layer[j][t];
      generators.push_back(std::move(v));
      levels.push_back(level);
    }
  }
  RatMatrix columns(k, k);
  for (int j = 0; j < k; ++j)
    for (int t = 0; t < k; ++t) columns.at(t, j) = generators[j][t];
  return {std::move(columns), std::move(levels)};
}

long binomial_capped(int n, int k, long cap) {
  long acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact at each step
    if (acc > cap) return cap + 1;
  }
  return acc;
}

// Monomials are exponent vectors over the adapted generators; the weight of
// a monomial is the sum of the generator levels of its factors.  Both the
// left multiplications and the derivation actions can only raise weight, so
// everything of weight above the largest weight seen among degree <= c
// monomials is invisible to the truncated module and can be dropped early.
struct Monomials {
  int k = 0;
  std::vector<int> levels;

  long weight(const std::vector<int>& e) const {
    long w = 0;
    for (int i = 0; i < k; ++i) w += static_cast<long>(e[i]) * levels[i];
    return w;
  }

  int degree(const std::vector<int>& e) const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  std::vector<int> word_of(const std::vector<int>& e) const {
    std::vector<int> w;
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < e[i]; ++t) w.push_back(i);
    return w;
  }

  std::vector<int> exp_of(const std::vector<int>& word) const {
    std::vector<int> e(k, 0);
    for (int i : word) ++e[i];
    return e;
  }

  void enumerate_by_weight(std::vector<int>& e, int pos, long budget,
                           std::vector<std::vector<int>>& out) const {
    if (pos == k) {
      out.push_back(e);
      return;
    }
    for (int d = 0; static_cast<long>(d) * levels[pos] <= budget; ++d) {
      e[pos] = d;
      enumerate_by_weight(e, pos + 1, budget - static_cast<long>(d) * levels[pos],
                          out);
    }
    e[pos] = 0;
  }
};

// Straightening in the enveloping algebra: recursively resolve the first
// adjacent inversion g_a g_b (a > b) as g_b g_a + [g_a, g_b].  Terminates by
// induction on (word length, inversion count).  Bracket substitutions never
// lower the weight, so words above the cap are dropped.
void straighten(const std::vector<int>& word, const Rat& coeff,
                const LieAlgebra& alg, const Monomials& mono, long weight_cap,
                std::map<std::vector<int>, Rat>& acc) {
  long w = 0;
  for (int x : word) w += mono.levels[x];
  if (w > weight_cap) return;
  int p = -1;
  for (size_t t = 0; t + 1 < word.size(); ++t)
    if (word[t] > word[t + 1]) {
      p = static_cast<int>(t);
      break;
    }
  if (p < 0) {
    std::vector<int> e = mono.exp_of(word);
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(std::move(e), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) acc.erase(it);
    }
    return;
  }
  std::vector<int> swapped = word;
  std::swap(swapped[p], swapped[p + 1]);
  straighten(swapped, coeff, alg, mono, weight_cap, acc);
  RatVec br = alg.bracket_basis(word[p], word[p + 1]);
  for (int t = 0; t < alg.dim(); ++t) {
    if (br[t].is_zero()) continue;
    std::vector<int> contracted;
    contracted.reserve(word.size() - 1);
    for (size_t u = 0; u < word.size(); ++u) {
      if (static_cast<int>(u) == p + 1) continue;
      contracted.push_back(static_cast<int>(u) == p ? t : word[u]);
    }
    straighten(contracted, coeff * br[t], alg, mono, weight_cap, acc);
  }
}

// Module carrying the truncated left regular representation.  The truncation
// ideal is the monomial-support closure of {degree > c} under the left
// multiplications and derivation actions: the plain degree cutoff is only
// action-stable up to class 2, while iterated bracket corrections in deeper
// algebras can push a product back below the cutoff.  Closure members all
// have weight >= c+1, so the empty monomial and the generators always stay
// in the basis; for class <= 2 nothing is absorbed and the dimension is
// exactly C(k+c, c).
struct EnvelopingModule {
  Monomials mono;
  int maxdeg = 0;
  long weight_cap = 0;
  std::vector<std::vector<int>> exps;      // quotient basis, ordered
  std::map<std::vector<int>, int> index;
  std::vector<RatMatrix> left_mult;   // one per generator
  std::vector<RatMatrix> der_action;  // one per derivation

  void apply_left(int gen, const std::vector<int>& e, const LieAlgebra& alg,
                  std::map<std::vector<int>, Rat>& acc) const {
    std::vector<int> word = mono.word_of(e);
    word.insert(word.begin(), gen);
    straighten(word, Rat(1), alg, mono, weight_cap, acc);
  }

  void apply_der(const RatMatrix& d, const std::vector<int>& e,
                 const LieAlgebra& alg,
                 std::map<std::vector<int>, Rat>& acc) const {
    std::vector<int> word = mono.word_of(e);
    for (size_t p = 0; p < word.size(); ++p)
      for (int t = 0; t < mono.k; ++t) {
        Rat f = d.at(t, word[p]);
        if (f.is_zero()) continue;
        std::vector<int> replaced = word;
        replaced[p] = t;
        straighten(replaced, f, alg, mono, weight_cap, acc);
      }
  }

  EnvelopingModule(const LieAlgebra& adapted, const std::vector<int>& levels,
                   const std::vector<RatMatrix>& adapted_ders, int c,
                   int size_bound) {
    int k = adapted.dim();
    mono = Monomials{k, levels};
    maxdeg = c;

    // Weight cap: the largest weight among degree <= c monomials, i.e. c
    // factors of the deepest level.
    int deepest = 1;
    for (int l : levels) deepest = std::max(deepest, l);
    weight_cap = static_cast<long>(c) * deepest;

    std::vector<std::vector<int>> universe;
    {
      std::vector<int> e(k, 0);
      mono.enumerate_by_weight(e, 0, weight_cap, universe);
    }
    if (static_cast<int>(universe.size()) > 4 * size_bound)
      throw SizeError("enveloping closure universe exceeds " +
                      std::to_string(4 * size_bound) + " monomials");

    // Mark the truncation ideal: start from degree > c, close under the
    // actions, recording every degree <= c monomial that gets hit.
    std::map<std::vector<int>, bool> marked;
    std::vector<std::vector<int>> worklist;
    for (const auto& e : universe)
      if (mono.degree(e) > maxdeg) worklist.push_back(e);
    auto absorb = [&](const std::map<std::vector<int>, Rat>& acc) {
      for (const auto& [e, q] : acc) {
        (void)q;
        if (mono.degree(e) > maxdeg || marked.count(e)) continue;
        marked[e] = true;
        worklist.push_back(e);
      }
    };
    while (!worklist.empty()) {
      std::vector<int> e = std::move(worklist.back());
      worklist.pop_back();
      for (int gen = 0; gen < k; ++gen) {
        std::map<std::vector<int>, Rat> acc;
        apply_left(gen, e, adapted, acc);
        absorb(acc);
      }
      for (const RatMatrix& d : adapted_ders) {
        std::map<std::vector<int>, Rat> acc;
        apply_der(d, e, adapted, acc);
        absorb(acc);
      }
    }

    for (const auto& e : universe)
      if (mono.degree(e) <= maxdeg && !marked.count(e)) exps.push_back(e);
    std::sort(exps.begin(), exps.end(),
              [this](const std::vector<int>& a, const std::vector<int>& b) {
                long wa = mono.weight(a), wb = mono.weight(b);
                if (wa != wb) return wa > wb;
                for (int i = mono.k - 1; i >= 0; --i)
                  if (a[i] != b[i]) return a[i] > b[i];
                return false;
              });
    for (size_t i = 0; i < exps.size(); ++i)
      index[exps[i]] = static_cast<int>(i);

    int dim = static_cast<int>(exps.size());
    auto reduce_into = [&](const std::map<std::vector<int>, Rat>& acc,
                           RatMatrix& m, int col) {
      for (const auto& [e, q] : acc) {
        auto it = index.find(e);
        if (it != index.end()) m.at(it->second, col) = q;
      }
    };
    for (int gen = 0; gen < k; ++gen) {
      RatMatrix m(dim, dim);
      for (int col = 0; col < dim; ++col) {
        std::map<std::vector<int>, Rat> acc;
        apply_left(gen, exps[col], adapted, acc);
        reduce_into(acc, m, col);
      }
      left_mult.push_back(std::move(m));
    }
    for (const RatMatrix& d : adapted_ders) {
      RatMatrix m(dim, dim);
      for (int col = 0; col < dim; ++col) {
        std::map<std::vector<int>, Rat> acc;
        apply_der(d, exps[col], adapted, acc);
        reduce_into(acc, m, col);
      }
      der_action.push_back(std::move(m));
    }
  }
};

// ---------------------------------------------------------------------------
// Tiers.
// ---------------------------------------------------------------------------

Representation pure_diagonal_rep(const LieAlgebra& g) {
  Representation rep;
  rep.target_dim = g.dim();
  rep.tier = RepTier::AdPlusCharacters;
  for (int j = 0; j < g.dim(); ++j) {
    RatMatrix m(g.dim(), g.dim());
    m.at(j, j) = Rat(1);
    rep.matrices.push_back(std::move(m));
  }
  finish_flags(g, rep);
  return rep;
}

Representation ad_plus_characters(const LieAlgebra& g, const Subspace& center,
                                  const Subspace& derived) {
  Flag flag = complete_flag(g, FlagMode::Exact);
  Representation ad_rep = triangularize_ad(g, flag);
  int n = g.dim(), z = center.dim();

  // Coordinates adapted to center + derived + standard complement; the
  // character block is the center coordinate, which kills the derived
  // algebra and separates the center.
  Subspace zd = center.sum(derived);
  std::vector<bool> used(n, false);
  for (int p : zd.pivots()) used[p] = true;
  RatMatrix b(n, n);
  int col = 0;
  for (int i = 0; i < z; ++i, ++col)
    for (int t = 0; t < n; ++t) b.at(t, col) = center.basis().at(i, t);
  for (int i = 0; i < derived.dim(); ++i, ++col)
    for (int t = 0; t < n; ++t) b.at(t, col) = derived.basis().at(i, t);
  for (int t = 0; t < n; ++t)
    if (!used[t]) {
      b.at(t, col) = Rat(1);
      ++col;
    }
  if (col != n) throw Error("internal: character basis is not complete");
  RatMatrix binv = inverse(b);

  Representation rep;
  rep.target_dim = n + z;
  rep.tier = RepTier::AdPlusCharacters;
  for (int j = 0; j < n; ++j) {
    RatMatrix m(n + z, n + z);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = ad_rep.matrices[j].at(r, c);
    for (int t = 0; t < z; ++t) m.at(n + t, n + t) = binv.at(t, j);
    rep.matrices.push_back(std::move(m));
  }
  finish_flags(g, rep);
  return rep;
}

Representation enveloping_rep(const LieAlgebra& g, const Subspace& nilradical,
                              const std::vector<RatVec>& complement,
                              RepTier tier, int size_bound) {
  int n = g.dim();
  LieAlgebra nn = subalgebra(g, nilradical);
  int k = nn.dim();
  int c = nn.nilpotency_class();
  if (k > 0 && binomial_capped(k + c, c, size_bound) > size_bound)
    throw SizeError("enveloping representation dimension exceeds " +
                    std::to_string(size_bound));

  // Derivation action of the complement on the nilradical, echelon coords.
  std::vector<RatMatrix> ders;
  for (const RatVec& w : complement) {
    RatMatrix d(k, k);
    for (int j = 0; j < k; ++j) {
      RatVec img = nilradical.coordinates(
          g.bracket(w, nilradical.basis().row(j)));
      for (int t = 0; t < k; ++t) d.at(t, j) = img[t];
    }
    ders.push_back(std::move(d));
  }

  AdaptedGenerators adapted = adapted_generators(nn, ders);
  LieAlgebra nn_adapted = change_basis(nn, adapted.columns);
  RatMatrix ginv = inverse(adapted.columns);
  std::vector<RatMatrix> ders_adapted;
  for (const RatMatrix& d : ders)
    ders_adapted.push_back(ginv * d * adapted.columns);

  EnvelopingModule module(nn_adapted, adapted.levels, ders_adapted, c,
                          size_bound);

  // Split every algebra basis vector into complement + nilradical parts.
  int q = static_cast<int>(complement.size());
  RatMatrix split(n, n);
  for (int j = 0; j < q; ++j)
    for (int t = 0; t < n; ++t) split.at(t, j) = complement[j][t];
  for (int j = 0; j < k; ++j) {
    // nilradical generator j in ambient coordinates
    RatVec gen(n, Rat(0));
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < n; ++t)
        gen[t] += adapted.columns.at(s, j) * nilradical.basis().at(s, t);
    for (int t = 0; t < n; ++t) split.at(t, q + j) = gen[t];
  }
  RatMatrix split_inv = inverse(split);

  Representation rep;
  rep.target_dim = static_cast<int>(module.exps.size());
  rep.tier = tier;
  for (int j = 0; j < n; ++j) {
    RatMatrix m(rep.target_dim, rep.target_dim);
    for (int t = 0; t < q; ++t) {
      Rat f = split_inv.at(t, j);
      if (!f.is_zero()) m = m + module.der_action[t] * f;
    }
    for (int t = 0; t < k; ++t) {
      Rat f = split_inv.at(q + t, j);
      if (!f.is_zero()) m = m + module.left_mult[t] * f;
    }
    rep.matrices.push_back(std::move(m));
  }
  finish_flags(g, rep);
  return rep;
}

// Abelian complement subalgebra to the nilradical: try the plain coordinate
// complement, then the linearized correction inside the nilradical.
std::vector<RatVec> nilradical_complement(const LieAlgebra& g,
                                          const Subspace& nilradical) {
  int n = g.dim(), k = nilradical.dim(), q = n - k;
  std::vector<bool> is_pivot(n, false);
  for (int p : nilradical.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  auto brackets_vanish = [&](const std::vector<RatVec>& ws) {
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b)
        if (!is_zero(g.bracket(ws[a], ws[b]))) return false;
    return true;
  };

  std::vector<RatVec> plain;
  for (int f : free_cols) plain.push_back(g.basis_element(f));
  if (brackets_vanish(plain)) return plain;

  // Solve the linearized closure equations for corrections u_f in the
  // nilradical and accept only if the exact equations then hold.
  int pairs = q * (q - 1) / 2;
  RatMatrix sys(pairs * n, q * k);
  RatVec rhs(pairs * n, Rat(0));
  int row0 = 0;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      RatVec base = g.bracket_basis(free_cols[a], free_cols[b]);
      for (int t = 0; t < n; ++t) rhs[row0 + t] = -base[t];
      for (int s = 0; s < k; ++s) {
        RatVec ns = nilradical.basis().row(s);
        RatVec ea_ns = g.bracket(plain[a], ns);   // [e_a, u_b] term
        RatVec ns_eb = g.bracket(ns, plain[b]);   // [u_a, e_b] term
        for (int t = 0; t < n; ++t) {
          sys.at(row0 + t, b * k + s) += ea_ns[t];
          sys.at(row0 + t, a * k + s) += ns_eb[t];
        }
      }
      row0 += n;
    }
  RatVec correction;
  try {
    correction = solve(sys, rhs);
  } catch (const InvalidInput&) {
    throw UnsupportedAdoCase(
        "no abelian complement to the nilradical was found");
  }
  std::vector<RatVec> corrected = plain;
  for (int a = 0; a < q; ++a)
    for (int s = 0; s < k; ++s) {
      Rat f = correction[a * k + s];
      if (f.is_zero()) continue;
      RatVec ns = nilradical.basis().row(s);
      for (int t = 0; t < n; ++t) corrected[a][t] += f * ns[t];
    }
  if (!brackets_vanish(corrected))
    throw UnsupportedAdoCase(
        "the linearized complement correction does not close exactly");
  return corrected;
}

}  // namespace

Representation triangularize_ad(const LieAlgebra& g, const Flag& flag) {
  if (flag.mode != FlagMode::Exact)
    throw InvalidInput("exact triangularization rejects numeric flags");
  if (!verify_exact_flag(g, flag))
    throw InvalidInput("not an exact complete flag of this algebra");
  int n = g.dim();
  RatMatrix t(n, n);
  for (int i = 1; i <= n; ++i) {
    // the basis row of F_i whose pivot is new relative to F_{i-1}
    std::vector<bool> prev(n, false);
    for (int p : flag.exact[i - 1].pivots()) prev[p] = true;
    int found = -1;
    for (int r = 0; r < i; ++r)
      if (!prev[flag.exact[i].pivots()[r]]) {
        found = r;
        break;
      }
    if (found < 0) throw Error("internal: flag pivots are not nested");
    for (int c = 0; c < n; ++c)
      t.at(c, i - 1) = flag.exact[i].basis().at(found, c);
  }
  RatMatrix tinv = inverse(t);
  Representation rep;
  rep.target_dim = n;
  rep.tier = RepTier::AdCenterless;
  for (int j = 0; j < n; ++j)
    rep.matrices.push_back(tinv * g.ad_basis(j) * t);
  finish_flags(g, rep);
  return rep;
}

Representation faithful_triangular_rep(const LieAlgebra& g, int size_bound) {
  SolvabilityVerdict verdict = is_completely_solvable(g);
  if (!verdict.completely_solvable())
    throw NotCompletelySolvable(
        "faithful triangular representations require a completely solvable "
        "algebra, got " + to_string(verdict.kind));
  if (g.dim() == 0) {
    Representation rep;
    rep.target_dim = 0;
    rep.tier = RepTier::AdPlusCharacters;
    rep.is_triangular = true;
    rep.is_faithful = true;
    return rep;
  }

  Subspace center = g.center();
  Subspace derived = g.bracket_space(g.full_space(), g.full_space());

  Representation rep;
  if (center.dim() == 0) {
    Flag flag = complete_flag(g, FlagMode::Exact);
    rep = triangularize_ad(g, flag);
  } else if (center.intersect(derived).dim() == 0) {
    rep = derived.dim() == 0 ? pure_diagonal_rep(g)
                             : ad_plus_characters(g, center, derived);
  } else if (g.is_nilpotent()) {
    rep = enveloping_rep(g, g.full_space(), {}, RepTier::NilpotentPBW,
                         size_bound);
  } else {
    Subspace nilradical = nilradical_completely_solvable(g);
    std::vector<RatVec> complement = nilradical_complement(g, nilradical);
    rep = enveloping_rep(g, nilradical, complement,
                         RepTier::SplitOverNilradical, size_bound);
  }
  if (!rep.is_faithful)
    throw Error("internal: constructed representation is not faithful");
  return rep;
}

}  // namespace solvcert
