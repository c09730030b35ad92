#include "cartankit/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartankit {

void Chain::add_term(const ChainKey& k, const ExactScalar& c) {
  if (is_zero_scalar(c)) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (is_zero_scalar(it->second)) terms.erase(it);
}

ChainComplex::ChainComplex(int n) : basis_(n) {
  m_dim_ = n + basis_.pair_count();
  for (int i = 0; i < n; ++i) m_to_g_.push_back(basis_.index_p1(i));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) m_to_g_.push_back(basis_.index_p2(j, k));

  // Diagonal torus weights: every basis element is a simultaneous eigenvector
  // of ad(E_aa) for the diagonal grade-zero generators.
  const int d = basis_.dim();
  g_weights_.assign(d, std::vector<int>(n, 0));
  std::vector<LieElement> diag;
  for (int a = 0; a < n; ++a) diag.push_back(basis_.element(basis_.index_0(a, a)));
  for (int f = 0; f < d; ++f) {
    for (int a = 0; a < n; ++a) {
      Vec c = basis_.coordinates(bracket(diag[a], basis_.element(f)));
      for (int g = 0; g < d; ++g)
        if (g != f && !is_zero(c[g]))
          throw std::runtime_error("basis element is not a torus weight vector");
      ExactScalar lambda = c[f];
      if (lambda.get_den() != 1) throw std::runtime_error("non-integral torus weight");
      g_weights_[f][a] = static_cast<int>(lambda.get_num().get_si());
    }
  }

  auto sparse = [&](const Vec& coords) {
    std::vector<std::pair<int, ExactScalar>> out;
    for (int g = 0; g < d; ++g)
      if (!is_zero(coords[g])) out.emplace_back(g, coords[g]);
    return out;
  };

  mm_.assign(m_dim_, std::vector<std::vector<std::pair<int, ExactScalar>>>(m_dim_));
  mg_.assign(m_dim_, std::vector<std::vector<std::pair<int, ExactScalar>>>(d));
  for (int i = 0; i < m_dim_; ++i) {
    const LieElement& pi = basis_.element(m_to_g_[i]);
    for (int j = 0; j < m_dim_; ++j) {
      Vec c = basis_.coordinates(bracket(pi, basis_.element(m_to_g_[j])));
      std::vector<std::pair<int, ExactScalar>> in_m;
      for (int g = 0; g < d; ++g) {
        if (is_zero(c[g])) continue;
        auto it = std::find(m_to_g_.begin(), m_to_g_.end(), g);
        if (it == m_to_g_.end())
          throw std::runtime_error("bracket of nilradical elements left the nilradical");
        in_m.emplace_back(static_cast<int>(it - m_to_g_.begin()), c[g]);
      }
      mm_[i][j] = std::move(in_m);
    }
    for (int f = 0; f < d; ++f)
      mg_[i][f] = sparse(basis_.coordinates(bracket(pi, basis_.element(f))));
  }
}

int ChainComplex::homogeneity(const ChainKey& k) const {
  int h = basis_.grade_of(k.value);
  for (int u : k.wedge) h += m_grade(u);
  return h;
}

std::vector<int> ChainComplex::torus_weight(const ChainKey& k) const {
  std::vector<int> w = g_weights_[k.value];
  for (int u : k.wedge)
    for (int a = 0; a < basis_.n(); ++a) w[a] += g_weights_[m_to_g_[u]][a];
  return w;
}

Chain ChainComplex::codifferential(const Chain& c) const {
  Chain out;
  for (const auto& [key, coeff] : c.terms) {
    const auto& w = key.wedge;
    const int deg = static_cast<int>(w.size());

    // Pair contractions: positions j < k (1-based signs), bracket in front.
    for (int jj = 0; jj < deg; ++jj)
      for (int kk = jj + 1; kk < deg; ++kk) {
        int sign_jk = ((jj + kk) % 2 == 0) ? 1 : -1;  // (-1)^{(jj+1)+(kk+1)}
        for (const auto& [midx, sc] : mm_[w[jj]][w[kk]]) {
          std::vector<int> rest;
          rest.reserve(deg - 1);
          rest.push_back(midx);
          bool repeat = false;
          for (int t = 0; t < deg; ++t) {
            if (t == jj || t == kk) continue;
            if (w[t] == midx) repeat = true;
            rest.push_back(w[t]);
          }
          if (repeat) continue;
          // Move the front element into sorted position.
          int displaced = 0;
          while (displaced + 1 < static_cast<int>(rest.size()) && rest[displaced + 1] < rest[0])
            ++displaced;
          std::vector<int> sorted = rest;
          std::sort(sorted.begin(), sorted.end());
          int sign_sort = (displaced % 2 == 0) ? 1 : -1;
          out.add_term({std::move(sorted), key.value},
                       coeff * sc * ExactScalar(sign_jk * sign_sort));
        }
      }

    // Action on the value slot: position j, 1-based sign (-1)^j.
    for (int jj = 0; jj < deg; ++jj) {
      int sign_j = (jj % 2 == 0) ? -1 : 1;  // (-1)^{jj+1}
      for (const auto& [gidx, sc] : mg_[w[jj]][key.value]) {
        std::vector<int> rest;
        rest.reserve(deg - 1);
        for (int t = 0; t < deg; ++t)
          if (t != jj) rest.push_back(w[t]);
        out.add_term({std::move(rest), gidx}, coeff * sc * ExactScalar(sign_j));
      }
    }
  }
  return out;
}

Chain ChainComplex::basis_chain(std::vector<int> wedge, int value) const {
  if (!std::is_sorted(wedge.begin(), wedge.end()))
    throw std::invalid_argument("basis_chain: wedge indices must be increasing");
  Chain c;
  c.add_term({std::move(wedge), value}, ExactScalar(1));
  return c;
}

Chain ChainComplex::random_chain(int degree, RationalSampler& rng, int nterms) const {
  Chain c;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> wedge;
    while (static_cast<int>(wedge.size()) < degree) {
      int pick = static_cast<int>(rng.integer(0, m_dim_ - 1));
      if (std::find(wedge.begin(), wedge.end(), pick) == wedge.end()) wedge.push_back(pick);
    }
    std::sort(wedge.begin(), wedge.end());
    int value = static_cast<int>(rng.integer(0, basis_.dim() - 1));
    c.add_term({std::move(wedge), value}, rng.nonzero_rational());
  }
  return c;
}

std::vector<ChainKey> ChainComplex::all_keys(int degree) const {
  std::vector<ChainKey> keys;
  std::vector<int> combo(degree);
  auto rec = [&](auto&& self, int start, int slot) -> void {
    if (slot == degree) {
      for (int v = 0; v < basis_.dim(); ++v) keys.push_back({combo, v});
      return;
    }
    for (int u = start; u < m_dim_; ++u) {
      combo[slot] = u;
      self(self, u + 1, slot + 1);
    }
  };
  rec(rec, 0, 0);
  return keys;
}

bool codifferential_squares_to_zero(int n, int c) {
  ChainComplex cx(n);
  for (const ChainKey& k : cx.all_keys(c)) {
    Chain one;
    one.add_term(k, ExactScalar(1));
    if (!cx.codifferential(cx.codifferential(one)).is_zero()) return false;
  }
  return true;
}

HomologyResult homology_analysis(int n) {
  ChainComplex cx(n);
  HomologyResult res;
  res.n = n;
  res.claimed_homogeneity = (n <= 3) ? 3 : 1;
  res.claimed_value_grade = (n <= 3) ? 0 : -2;

  using BlockId = std::pair<int, std::vector<int>>;
  std::map<BlockId, std::vector<ChainKey>> b1, b2, b3;
  for (const auto& k : cx.all_keys(1)) b1[{cx.homogeneity(k), cx.torus_weight(k)}].push_back(k);
  for (const auto& k : cx.all_keys(2)) b2[{cx.homogeneity(k), cx.torus_weight(k)}].push_back(k);
  for (const auto& k : cx.all_keys(3)) b3[{cx.homogeneity(k), cx.torus_weight(k)}].push_back(k);

  for (const auto& [bid, keys2] : b2) {
    std::map<ChainKey, int> row1, col2;
    const std::vector<ChainKey> empty;
    const std::vector<ChainKey>& keys1 = b1.count(bid) ? b1.at(bid) : empty;
    const std::vector<ChainKey>& keys3 = b3.count(bid) ? b3.at(bid) : empty;
    for (size_t i = 0; i < keys1.size(); ++i) row1[keys1[i]] = static_cast<int>(i);
    for (size_t i = 0; i < keys2.size(); ++i) col2[keys2[i]] = static_cast<int>(i);

    auto column = [&](const ChainKey& k, const std::map<ChainKey, int>& rows) {
      Chain one;
      one.add_term(k, ExactScalar(1));
      Chain d = cx.codifferential(one);
      Vec col(rows.size(), ExactScalar(0));
      for (const auto& [tk, tc] : d.terms) {
        auto it = rows.find(tk);
        if (it == rows.end()) throw std::runtime_error("codifferential left its block");
        col[it->second] = tc;
      }
      return col;
    };

    DenseMatrix d2(static_cast<int>(keys1.size()), static_cast<int>(keys2.size()));
    for (size_t c = 0; c < keys2.size(); ++c) {
      Vec col = column(keys2[c], row1);
      for (size_t r = 0; r < keys1.size(); ++r) d2.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    std::vector<Vec> im3;
    for (const auto& k3 : keys3) im3.push_back(column(k3, col2));

    int rank2 = matrix_rank(d2);
    int ker2 = static_cast<int>(keys2.size()) - rank2;
    int rank3 = rank_of_vectors(im3);
    int dim = ker2 - rank3;

    std::vector<Vec> ker_basis = kernel_basis(d2);
    SpanAccumulator ker_span(static_cast<int>(keys2.size()));
    for (auto& v : ker_basis) ker_span.add(v);
    for (const auto& v : im3)
      if (!ker_span.contains(v)) res.image_contained_in_kernel = false;

    if (dim == 0) continue;
    res.dim_by_homogeneity[bid.first] += dim;

    HomologyBlockReport rep;
    rep.homogeneity = bid.first;
    rep.weight = bid.second;
    rep.dim = dim;
    for (const auto& k2 : keys2) {
      std::array<int, 3> shape = {cx.m_grade(k2.wedge[0]), cx.m_grade(k2.wedge[1]),
                                  cx.basis().grade_of(k2.value)};
      if (std::find(rep.shapes.begin(), rep.shapes.end(), shape) == rep.shapes.end())
        rep.shapes.push_back(shape);
    }
    res.nonzero_blocks.push_back(rep);

    // Representability: kernel vectors supported on the claimed shape,
    // together with the image, must fill the whole kernel.
    std::vector<int> claimed_cols;
    for (size_t c = 0; c < keys2.size(); ++c) {
      const ChainKey& k2 = keys2[c];
      bool slots_ok = cx.m_grade(k2.wedge[0]) + cx.m_grade(k2.wedge[1]) == 3;
      bool value_ok = cx.basis().grade_of(k2.value) == res.claimed_value_grade;
      if (slots_ok && value_ok && bid.first == res.claimed_homogeneity)
        claimed_cols.push_back(static_cast<int>(c));
    }
    DenseMatrix d2w(static_cast<int>(keys1.size()), static_cast<int>(claimed_cols.size()));
    for (size_t c = 0; c < claimed_cols.size(); ++c)
      for (size_t r = 0; r < keys1.size(); ++r)
        d2w.at(static_cast<int>(r), static_cast<int>(c)) =
            d2.at(static_cast<int>(r), claimed_cols[c]);
    SpanAccumulator rep_span(static_cast<int>(keys2.size()));
    for (const auto& v : im3) rep_span.add(v);
    for (const auto& kv : kernel_basis(d2w)) {
      Vec lifted(keys2.size(), ExactScalar(0));
      for (size_t c = 0; c < claimed_cols.size(); ++c) lifted[claimed_cols[c]] = kv[c];
      rep_span.add(lifted);
    }
    if (rep_span.dim() != ker2) res.representable_in_claimed_shape = false;
  }

  res.value_grade_nonnegative = res.claimed_value_grade >= 0;
  return res;
}

}  // namespace cartankit
