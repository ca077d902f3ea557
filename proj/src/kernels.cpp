#include "liepic/kernels.hpp"

#include <omp.h>

#include "liepic/error.hpp"

namespace liepic::kernels {

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

BigFloat verlinde_term(const VerlindeProblem& p, const std::vector<BigFloat>& table, const WeightVec& mu) {
  BigFloat prod(1L, p.precision);
  for (const auto& w : p.root_weights) {
    long m = 0;
    for (std::size_t j = 0; j < w.size(); ++j) m += (mu[j] + 1) * w[j];
    ensure(m > 0 && m < p.denominator, "sine argument outside (0, pi) at mu = " + mu.to_string());
    prod *= table[static_cast<std::size_t>(m)];
  }
  return pow(std::move(prod), 2 - 2 * static_cast<long>(p.genus));
}

struct PhaseTable {
  std::vector<BigFloat> cos;
  std::vector<BigFloat> sin;
};

PhaseTable phase_table(long n, mpfr_prec_t precision) {
  PhaseTable t;
  t.cos.reserve(static_cast<std::size_t>(n));
  t.sin.reserve(static_cast<std::size_t>(n));
  for (long m = 0; m < n; ++m) {
    t.cos.push_back(cos_pi_ratio(2 * m, n, precision));
    t.sin.push_back(sin_pi_ratio(2 * m, n, precision));
  }
  return t;
}

BigComplex alternating_entry(const AlternatingSumProblem& p, const PhaseTable& t, std::size_t a, std::size_t b) {
  BigComplex acc(p.precision);
  const auto& col = p.columns[b];
  for (const auto& pt : p.orbits[a]) {
    long n = 0;
    for (std::size_t j = 0; j < col.size(); ++j) n += static_cast<long>(pt.weight[j]) * col[j];
    n %= p.denominator;
    if (n < 0) n += p.denominator;
    const auto idx = static_cast<std::size_t>(n);
    // exp(-2 pi i n / N) = cos - i sin
    if (pt.sign > 0) {
      acc.re += t.cos[idx];
      acc.im -= t.sin[idx];
    } else {
      acc.re -= t.cos[idx];
      acc.im += t.sin[idx];
    }
  }
  return acc;
}

}  // namespace

std::vector<BigFloat> sine_table(long denominator, mpfr_prec_t precision, Backend backend, int jobs) {
  std::vector<BigFloat> table(static_cast<std::size_t>(denominator), BigFloat(precision));
  if (backend == Backend::Serial) {
    for (long m = 0; m < denominator; ++m) {
      table[static_cast<std::size_t>(m)] = sin_pi_ratio(m, denominator, precision);
      mpfr_mul_2ui(table[static_cast<std::size_t>(m)].get(), table[static_cast<std::size_t>(m)].get(), 1, MPFR_RNDN);
    }
    return table;
  }
#pragma omp parallel for schedule(static) num_threads(thread_count(jobs))
  for (long m = 0; m < denominator; ++m) {
    table[static_cast<std::size_t>(m)] = sin_pi_ratio(m, denominator, precision);
    mpfr_mul_2ui(table[static_cast<std::size_t>(m)].get(), table[static_cast<std::size_t>(m)].get(), 1, MPFR_RNDN);
  }
  return table;
}

std::vector<BigFloat> verlinde_terms_serial(const VerlindeProblem& p) {
  const auto table = sine_table(p.denominator, p.precision, Backend::Serial, 1);
  std::vector<BigFloat> terms;
  terms.reserve(p.alcove.size());
  for (const auto& mu : p.alcove) terms.push_back(verlinde_term(p, table, mu));
  return terms;
}

std::vector<BigFloat> verlinde_terms_openmp(const VerlindeProblem& p, int jobs) {
  const auto table = sine_table(p.denominator, p.precision, Backend::OpenMP, jobs);
  std::vector<BigFloat> terms(p.alcove.size(), BigFloat(p.precision));
  const auto n = static_cast<std::ptrdiff_t>(p.alcove.size());
  // Exceptions must not escape the parallel region.
  std::string failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      terms[static_cast<std::size_t>(i)] = verlinde_term(p, table, p.alcove[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
#pragma omp critical(liepic_kernel_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) raise(ErrorKind::Consistency, failure);
  return terms;
}

std::vector<BigFloat> verlinde_terms(const VerlindeProblem& p, Backend backend, int jobs) {
  return backend == Backend::Serial ? verlinde_terms_serial(p) : verlinde_terms_openmp(p, jobs);
}

BigFloat tree_sum(std::vector<BigFloat> values, mpfr_prec_t precision) {
  if (values.empty()) return BigFloat(precision);
  while (values.size() > 1) {
    std::vector<BigFloat> next;
    next.reserve((values.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) next.push_back(values[i] + values[i + 1]);
    if (values.size() % 2) next.push_back(std::move(values.back()));
    values = std::move(next);
  }
  return std::move(values.front());
}

std::vector<BigComplex> alternating_sums_serial(const AlternatingSumProblem& p) {
  const auto table = phase_table(p.denominator, p.precision);
  std::vector<BigComplex> out;
  out.reserve(p.orbits.size() * p.columns.size());
  for (std::size_t a = 0; a < p.orbits.size(); ++a)
    for (std::size_t b = 0; b < p.columns.size(); ++b) out.push_back(alternating_entry(p, table, a, b));
  return out;
}

std::vector<BigComplex> alternating_sums_openmp(const AlternatingSumProblem& p, int jobs) {
  const auto table = phase_table(p.denominator, p.precision);
  const std::size_t cols = p.columns.size();
  std::vector<BigComplex> out(p.orbits.size() * cols, BigComplex(p.precision));
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = alternating_entry(p, table, u / cols, u % cols);
  }
  return out;
}

std::vector<BigComplex> alternating_sums(const AlternatingSumProblem& p, Backend backend, int jobs) {
  return backend == Backend::Serial ? alternating_sums_serial(p) : alternating_sums_openmp(p, jobs);
}

}  // namespace liepic::kernels
