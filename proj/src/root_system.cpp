#include "liepic/root_system.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "liepic/error.hpp"

namespace liepic {

namespace {

struct DynkinDiagram {
  std::vector<mpq_class> lengths;  // <alpha_i, alpha_i>, long roots = 2
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Bourbaki, Planches I-IX. Indices are 0-based here.
DynkinDiagram diagram(const LieType& lie) {
  const auto k = static_cast<std::size_t>(lie.rank());
  DynkinDiagram dd;
  dd.lengths.assign(k, mpq_class(2));
  for (std::size_t i = 0; i + 1 < k; ++i) dd.edges.emplace_back(i, i + 1);
  switch (lie.series()) {
    case Series::A: break;
    case Series::B: dd.lengths[k - 1] = 1; break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < k; ++i) dd.lengths[i] = 1;
      break;
    case Series::D:
      dd.edges.pop_back();
      dd.edges.emplace_back(k - 3, k - 1);
      break;
    case Series::E:
      // 1 - 3 - 4 - 5 - ... with 2 attached to 4.
      dd.edges = {{0, 2}, {2, 3}, {1, 3}};
      for (std::size_t i = 3; i + 1 < k; ++i) dd.edges.emplace_back(i, i + 1);
      break;
    case Series::F:
      dd.lengths[2] = 1;
      dd.lengths[3] = 1;
      break;
    case Series::G: dd.lengths[0] = mpq_class(2, 3); break;
  }
  return dd;
}

Matrix<mpq_class> inverse(Matrix<mpq_class> a) {
  const std::size_t n = a.rows();
  Matrix<mpq_class> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    ensure(p < n, "singular Cartan matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    const mpq_class piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const mpq_class f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Sylvester's criterion over the rationals.
bool positive_definite(const Matrix<mpq_class>& g) {
  const std::size_t n = g.rows();
  Matrix<mpq_class> a = g;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return true;
}

// Closure of the simple roots under adding simple roots, decided by root strings.
std::vector<RootVec> generate_positive_roots(const Matrix<int>& cartan) {
  const std::size_t k = cartan.rows();
  std::set<RootVec> seen;
  std::vector<RootVec> frontier;
  for (std::size_t i = 0; i < k; ++i) {
    RootVec r(k);
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::set<RootVec> next;
    for (const auto& b : frontier) {
      for (std::size_t i = 0; i < k; ++i) {
        int q = 0;
        RootVec down = b;
        for (;;) {
          down[i] -= 1;
          if (!seen.contains(down)) break;
          ++q;
        }
        int coroot_pairing = 0;  // <b, alpha_i^vee>
        for (std::size_t j = 0; j < k; ++j) coroot_pairing += b[j] * cartan(j, i);
        if (q - coroot_pairing > 0) {
          RootVec up = b;
          up[i] += 1;
          if (!seen.contains(up)) next.insert(up);
        }
      }
    }
    seen.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
  }
  std::vector<RootVec> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const RootVec& a, const RootVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  return roots;
}

}  // namespace

std::size_t expected_positive_root_count(const LieType& lie) {
  const auto k = static_cast<std::size_t>(lie.rank());
  switch (lie.series()) {
    case Series::A: return k * (k + 1) / 2;
    case Series::B:
    case Series::C: return k * k;
    case Series::D: return k * (k - 1);
    case Series::E: return k == 6 ? 36 : k == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

RootDatum RootDatum::build(const LieType& lie) {
  RootDatum d(lie);
  const auto dd = diagram(lie);
  const std::size_t k = dd.lengths.size();

  d.form_ = Matrix<mpq_class>(k, k);
  for (std::size_t i = 0; i < k; ++i) d.form_(i, i) = dd.lengths[i];
  for (auto [i, j] : dd.edges) {
    // Simple bond between roots of lengths L_i, L_j: <alpha_i, alpha_j> = -max(L_i, L_j) / 2.
    mpq_class v = -std::max(dd.lengths[i], dd.lengths[j]) / 2;
    d.form_(i, j) = v;
    d.form_(j, i) = v;
  }

  d.cartan_ = Matrix<int>(k, k);
  Matrix<mpq_class> cartan_q(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class a = 2 * d.form_(i, j) / d.form_(j, j);
      ensure(a.get_den() == 1, "non-integral Cartan entry for " + lie.name());
      cartan_q(i, j) = a;
      d.cartan_(i, j) = static_cast<int>(a.get_num().get_si());
    }
  for (std::size_t i = 0; i < k; ++i) {
    ensure(d.cartan_(i, i) == 2, "Cartan diagonal must be 2");
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) {
        ensure(d.cartan_(i, j) <= 0, "Cartan off-diagonal must be non-positive");
        ensure((d.cartan_(i, j) == 0) == (d.cartan_(j, i) == 0), "Cartan zero pattern must be symmetric");
      }
  }
  ensure(positive_definite(d.form_), "invariant form is not positive definite");

  // omega_i = sum_m (A^{-1})_{im} alpha_m, hence <omega_i, omega_j> = (A^{-1})_{ij} L_j / 2.
  const auto cinv = inverse(cartan_q);
  d.weight_form_ = Matrix<mpq_class>(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d.weight_form_(i, j) = cinv(i, j) * dd.lengths[j] / 2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      ensure(d.weight_form_(i, j) == d.weight_form_(j, i), "weight Gram matrix is not symmetric");
  ensure(positive_definite(d.weight_form_), "weight Gram matrix is not positive definite");

  d.positive_roots_ = generate_positive_roots(d.cartan_);
  ensure(d.positive_roots_.size() == expected_positive_root_count(lie),
         "positive root count mismatch for " + lie.name());
  const RootVec& theta = d.positive_roots_.back();
  ensure(d.positive_roots_.size() == 1 ||
             d.positive_roots_[d.positive_roots_.size() - 2].height() < theta.height(),
         "highest root is not unique");
  ensure(pairing(d, theta, theta) == 2, "<theta, theta> != 2 for " + lie.name());

  d.marks_.assign(theta.coords.begin(), theta.coords.end());
  int comark_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mpq_class c = d.marks_[i] * dd.lengths[i] / 2;
    ensure(c.get_den() == 1 && c > 0, "comark is not a positive integer");
    d.comarks_.push_back(static_cast<int>(c.get_num().get_si()));
    comark_sum += d.comarks_.back();
  }
  d.dual_coxeter_ = 1 + comark_sum;
  ensure(pairing(d, d.rho(), theta) + 1 == d.dual_coxeter_, "h != <rho, theta> + 1");

  d.index_P_over_Qlg_ = sublattice_index(d.long_roots_in_weight_basis(), k).get_si();
  return d;
}

bool RootDatum::is_long(const RootVec& root) const { return pairing(*this, root, root) == 2; }

WeightVec RootDatum::to_weight_basis(const RootVec& root) const {
  const std::size_t k = rank();
  if (root.size() != k) raise(ErrorKind::Shape, "root has wrong length");
  WeightVec w(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) w[j] += root[i] * cartan_(i, j);
  return w;
}

std::vector<WeightVec> RootDatum::long_roots_in_weight_basis() const {
  std::vector<WeightVec> out;
  for (const auto& r : positive_roots_)
    if (is_long(r)) out.push_back(to_weight_basis(r));
  return out;
}

namespace {

void check_shape(const RootDatum& d, std::size_t a, std::size_t b) {
  if (a != d.rank() || b != d.rank())
    raise(ErrorKind::Shape, "pairing: vector length does not match rank " + std::to_string(d.rank()));
}

}  // namespace

mpq_class pairing(const RootDatum& d, const WeightVec& x, const WeightVec& y) {
  check_shape(d, x.size(), y.size());
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * y[j] * d.weight_form()(i, j);
  return s;
}

mpq_class pairing(const RootDatum& d, const WeightVec& x, const RootVec& y) {
  check_shape(d, x.size(), y.size());
  // <omega_i, alpha_j> = delta_ij <alpha_j, alpha_j> / 2.
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i] * d.simple_root_length(i);
  return s / 2;
}

mpq_class pairing(const RootDatum& d, const RootVec& x, const WeightVec& y) { return pairing(d, y, x); }

mpq_class pairing(const RootDatum& d, const RootVec& x, const RootVec& y) {
  check_shape(d, x.size(), y.size());
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * y[j] * d.form()(i, j);
  return s;
}

}  // namespace liepic
