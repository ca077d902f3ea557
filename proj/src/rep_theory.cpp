#include "liepic/rep_theory.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "liepic/error.hpp"

namespace liepic {

IrrepLabel::IrrepLabel(WeightVec highest_weight) : hw_(std::move(highest_weight)) {
  if (!hw_.is_dominant())
    raise(ErrorKind::Domain, "highest weight " + hw_.to_string() + " is not dominant");
}

std::int64_t WeightSystem::multiplicity(const WeightVec& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

void WeightSystem::add(const WeightVec& w, std::int64_t mult) {
  if (w.size() != rank_) raise(ErrorKind::Shape, "weight length does not match weight-system rank");
  if (mult == 0) return;
  auto& m = entries_[w];
  m += mult;
  if (m == 0) entries_.erase(w);
}

mpz_class WeightSystem::total_multiplicity() const {
  mpz_class total = 0;
  for (const auto& [w, m] : entries_) total += mpz_class(static_cast<long>(m));
  return total;
}

namespace {

void check_rank(const RootDatum& d, const WeightVec& w) {
  if (w.size() != d.rank())
    raise(ErrorKind::Shape, "weight " + w.to_string() + " does not match rank " + std::to_string(d.rank()));
}

mpz_class as_integer(const mpq_class& q, const std::string& what) {
  ensure(q.get_den() == 1, what + " is not integral: " + q.get_str());
  return q.get_num();
}

// Integer Gram matrix of the fundamental weights scaled by a common denominator.
struct ScaledForm {
  std::int64_t scale = 1;
  Matrix<std::int64_t> gram;

  explicit ScaledForm(const RootDatum& d) {
    const std::size_t k = d.rank();
    mpz_class den = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.weight_form()(i, j).get_den_mpz_t());
    scale = den.get_si();
    gram = Matrix<std::int64_t>(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        mpq_class v = d.weight_form()(i, j) * den;
        gram(i, j) = v.get_num().get_si();
      }
  }

  std::int64_t operator()(const WeightVec& x, const WeightVec& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < y.size(); ++j) row += gram(i, j) * y[j];
      s += x[i] * row;
    }
    return s;
  }
};

}  // namespace

mpz_class weyl_dim(const RootDatum& d, const IrrepLabel& lambda) {
  const auto& lam = lambda.highest_weight();
  check_rank(d, lam);
  const WeightVec shifted = lam + d.rho();
  mpq_class dim = 1;
  for (const auto& alpha : d.positive_roots()) dim *= pairing(d, shifted, alpha) / pairing(d, d.rho(), alpha);
  auto n = as_integer(dim, "Weyl dimension");
  ensure(n >= 1, "Weyl dimension must be positive");
  return n;
}

mpz_class dynkin_index(const RootDatum& d, const IrrepLabel& lambda) {
  const auto& lam = lambda.highest_weight();
  check_rank(d, lam);
  const WeightVec lam_2rho = lam + 2 * d.rho();
  mpq_class idx = mpq_class(weyl_dim(d, lambda)) * pairing(d, lam, lam_2rho) / d.dimension();
  return as_integer(idx, "Dynkin index of " + lam.to_string() + " in " + d.lie().name());
}

WeightSystem freudenthal_weights(const RootDatum& d, const IrrepLabel& lambda, std::int64_t dim_limit) {
  const auto& lam = lambda.highest_weight();
  check_rank(d, lam);
  const mpz_class dim = weyl_dim(d, lambda);
  if (dim > dim_limit)
    raise(ErrorKind::Resource, "Freudenthal oracle refused: dim V" + lam.to_string() + " = " + dim.get_str() +
                                   " exceeds the limit " + std::to_string(dim_limit));

  const std::size_t k = d.rank();
  const ScaledForm ip(d);
  std::vector<WeightVec> roots;
  std::vector<int> heights;
  for (const auto& a : d.positive_roots()) {
    roots.push_back(d.to_weight_basis(a));
    heights.push_back(a.height());
  }
  std::vector<WeightVec> simple;
  for (std::size_t i = 0; i < k; ++i) {
    RootVec a(k);
    a[i] = 1;
    simple.push_back(d.to_weight_basis(a));
  }

  const WeightVec rho = d.rho();
  const std::int64_t top = ip(lam + rho, lam + rho);

  std::unordered_map<WeightVec, std::int64_t, CoordsHash> mult;
  mult.emplace(lam, 1);
  std::vector<WeightVec> layer{lam};
  for (int depth = 1; !layer.empty(); ++depth) {
    std::vector<WeightVec> candidates;
    for (const auto& mu : layer)
      for (const auto& a : simple) candidates.push_back(mu - a);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<WeightVec> next;
    for (const auto& nu : candidates) {
      std::int64_t num = 0;
      for (std::size_t r = 0; r < roots.size(); ++r) {
        WeightVec x = nu;
        // Weights of V lie within `depth` simple-root steps of lambda.
        for (int j = 1; j * heights[r] <= depth; ++j) {
          x += roots[r];
          auto it = mult.find(x);
          if (it != mult.end()) num += it->second * ip(x, roots[r]);
        }
      }
      const std::int64_t den = top - ip(nu + rho, nu + rho);
      if (num == 0) continue;
      ensure(den > 0 && (2 * num) % den == 0,
             "Freudenthal recursion produced a non-integral multiplicity at " + nu.to_string());
      const std::int64_t m = 2 * num / den;
      ensure(m > 0, "Freudenthal recursion produced a negative multiplicity");
      mult.emplace(nu, m);
      next.push_back(nu);
    }
    layer = std::move(next);
  }

  WeightSystem ws(k);
  for (const auto& [w, m] : mult) ws.add(w, m);
  ensure(ws.total_multiplicity() == dim, "Freudenthal total multiplicity differs from the Weyl dimension");
  return ws;
}

mpz_class index_via_weights(const WeightSystem& ws, const RootDatum& d) {
  if (ws.rank() != d.rank()) raise(ErrorKind::Shape, "weight system rank does not match root datum");
  // <omega_j, theta> = a_j^vee, so <mu, theta> is an integer.
  const auto& comarks = d.comarks();
  mpz_class sum = 0;
  for (const auto& [mu, m] : ws.entries()) {
    std::int64_t t = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) t += static_cast<std::int64_t>(mu[j]) * comarks[j];
    sum += mpz_class(static_cast<long>(m)) * t * t;
  }
  ensure(mpz_even_p(sum.get_mpz_t()), "trace-form index is not integral");
  return sum / 2;
}

WeightSystem tensor_weight_system(const WeightSystem& v, const WeightSystem& w) {
  if (v.rank() != w.rank()) raise(ErrorKind::Shape, "tensor product of weight systems of different rank");
  const std::size_t k = v.rank();
  WeightSystem out(k);
  if (v.entries().empty() || w.entries().empty()) return out;

  // Bounding box of all pairwise sums; dense accumulation when it is small.
  std::vector<int> lo(k, 0), hi(k, 0);
  auto extent = [&](const WeightSystem& s, std::vector<int>& l, std::vector<int>& h) {
    l.assign(k, 0);
    h.assign(k, 0);
    bool first = true;
    for (const auto& [mu, m] : s.entries()) {
      for (std::size_t i = 0; i < k; ++i) {
        l[i] = first ? mu[i] : std::min(l[i], mu[i]);
        h[i] = first ? mu[i] : std::max(h[i], mu[i]);
      }
      first = false;
    }
  };
  std::vector<int> vl, vh, wl, wh;
  extent(v, vl, vh);
  extent(w, wl, wh);
  std::vector<std::size_t> stride(k, 1);
  std::size_t cells = 1;
  bool dense = true;
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = vl[i] + wl[i];
    hi[i] = vh[i] + wh[i];
    stride[i] = cells;
    cells *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (cells > (std::size_t{1} << 22)) {
      dense = false;
      break;
    }
  }

  if (dense) {
    std::vector<std::int64_t> acc(cells, 0);
    std::vector<std::pair<std::size_t, std::int64_t>> wv;
    wv.reserve(w.entries().size());
    for (const auto& [nu, m] : w.entries()) {
      std::size_t off = 0;
      for (std::size_t i = 0; i < k; ++i) off += static_cast<std::size_t>(nu[i] - wl[i]) * stride[i];
      wv.emplace_back(off, m);
    }
    for (const auto& [mu, m] : v.entries()) {
      std::size_t base = 0;
      for (std::size_t i = 0; i < k; ++i) base += static_cast<std::size_t>(mu[i] - vl[i]) * stride[i];
      for (const auto& [off, n] : wv) acc[base + off] += m * n;
    }
    WeightVec x(k);
    for (std::size_t c = 0; c < cells; ++c) {
      if (acc[c] == 0) continue;
      std::size_t rem = c;
      for (std::size_t i = k; i-- > 0;) {
        x[i] = lo[i] + static_cast<int>(rem / stride[i]);
        rem %= stride[i];
      }
      out.add(x, acc[c]);
    }
    return out;
  }

  std::unordered_map<WeightVec, std::int64_t, CoordsHash> acc;
  for (const auto& [mu, m] : v.entries())
    for (const auto& [nu, n] : w.entries()) acc[mu + nu] += m * n;
  for (const auto& [x, m] : acc) out.add(x, m);
  return out;
}

mpz_class lcm_of_comarks(const RootDatum& d) {
  mpz_class l = 1;
  for (int c : d.comarks()) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(c));
  return l;
}

OmegaD omega_d(const RootDatum& d) {
  const std::size_t k = d.rank();
  std::vector<mpz_class> idx;
  for (std::size_t i = 0; i < k; ++i) idx.push_back(dynkin_index(d, IrrepLabel(WeightVec::fundamental(k, i))));
  OmegaD out;
  out.m_G = lcm_of_comarks(d);
  for (std::size_t i = 0; i < k; ++i) {
    const bool divides_all = std::all_of(idx.begin(), idx.end(), [&](const mpz_class& m) {
      return mpz_divisible_p(m.get_mpz_t(), idx[i].get_mpz_t()) != 0;
    });
    if (divides_all) {
      ensure(idx[i] == out.m_G, "index of omega_" + std::to_string(i + 1) + " (" + idx[i].get_str() +
                                    ") differs from lcm of comarks (" + out.m_G.get_str() + ") in " +
                                    d.lie().name());
      out.indices.push_back(static_cast<int>(i + 1));
    }
  }
  ensure(!out.indices.empty(), "no fundamental weight has minimal Dynkin index in " + d.lie().name());
  return out;
}

std::vector<WeightVec> dominant_weights_up_to_dim(const RootDatum& d, const mpz_class& max_dim) {
  const std::size_t k = d.rank();
  std::vector<WeightVec> out;
  WeightVec cur(k);
  // weyl_dim is strictly increasing in every coordinate.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 0;; ++v) {
      cur[pos] = v;
      for (std::size_t j = pos + 1; j < k; ++j) cur[j] = 0;
      if (weyl_dim(d, IrrepLabel(cur)) > max_dim) break;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace liepic
