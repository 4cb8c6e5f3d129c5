#include "torusjet/extend.hpp"

#include <cmath>

#include "torusjet/error.hpp"
#include "torusjet/parallel.hpp"

namespace torusjet {

double bump_eval(double t, int s) {
  const double a = std::abs(t);
  if (a >= 1.0) return 0.0;
  return std::pow(1.0 - a * a, s + 1);
}

std::vector<PartitionWeight> partition_weights(const LatticeSpec& spec, std::span<const double> y,
                                               int s) {
  const std::size_t d = spec.dim();
  if (y.size() != d) throw InvalidInput("dimension mismatch");
  std::vector<long> low(d);
  std::vector<double> w0(d), w1(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double z = y[i] * spec.resolution(i);
    low[i] = static_cast<long>(std::floor(z));
    const double t = z - static_cast<double>(low[i]);
    w0[i] = bump_eval(t, s);
    w1[i] = bump_eval(1.0 - t, s);
  }
  std::vector<PartitionWeight> out;
  double total = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint p{low};
    double w = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++p.j[i];
        w *= w1[i];
      } else {
        w *= w0[i];
      }
    }
    if (w > 0.0) {
      out.push_back({std::move(p), w});
      total += w;
    }
  }
  for (auto& pw : out) pw.weight /= total;
  return out;
}

double extend_eval(const LatticeFunction& f, std::span<const Jet> jets, std::span<const double> y,
                   int s) {
  const auto& spec = f.spec();
  if (jets.size() != spec.site_count()) throw InvalidInput("one jet per site required");
  double value = 0.0;
  for (const auto& pw : partition_weights(spec, y, s)) {
    const auto canon = canonicalize(pw.site, spec);
    const Jet p = rebase(jets[spec.canonical_index(canon)], canon, pw.site, spec);
    value += pw.weight * poly_eval(p, y);
  }
  return value;
}

Extension::Extension(LatticeFunction f, int top_degree, ExtensionConfig cfg)
    : f_(std::move(f)), s_(cfg.s == 0 ? top_degree + 1 : cfg.s) {
  if (top_degree < 0) throw InvalidInput("top degree must be nonnegative");
  if (s_ < 1 || s_ < top_degree) throw InvalidInput("bump smoothness must be >= max(1, K)");
  jets_ = build_all_jets(f_, top_degree);
}

double Extension::operator()(std::span<const double> y) const {
  return extend_eval(f_, jets_, y, s_);
}

namespace {

LatticeSpec refine(const LatticeSpec& spec, int N) {
  std::vector<int> m = spec.m();
  for (auto& mi : m) mi *= N;
  return LatticeSpec(std::move(m));
}

}  // namespace

double fine_grid_lipschitz(const FieldOracle& F, int k, const LatticeSpec& spec, int N,
                           bool periodic, std::vector<FineGridRow>* rows) {
  if (N < 2) throw InvalidInput("N must be at least 2");
  if (k < 0) throw InvalidInput("order must be nonnegative");
  const LatticeSpec fine = refine(spec, N);
  const auto sites = site_list(fine);
  const auto multis = basic_multivectors(fine, k);

  std::optional<LatticeFunction> tab;
  if (periodic) {
    std::vector<double> table(sites.size());
    parallel_for(sites.size(), [&](std::size_t i) { table[i] = F(fine.real_coords(sites[i])); });
    tab.emplace(fine, std::move(table));
  }
  auto field = [&](const LatticePoint& p) { return tab ? (*tab)(p) : F(fine.real_coords(p)); };

  // per-site best over u, reduced serially in site order
  std::vector<double> best(sites.size(), 0.0);
  std::vector<std::vector<double>> quotients(rows ? sites.size() : 0);
  parallel_for(sites.size(), [&](std::size_t i) {
    for (const auto& u : multis) {
      const double q = std::abs(delta_k(field, std::span<const LatticeVector>(u), sites[i])) /
                       multi_norm(u, fine);
      best[i] = std::max(best[i], q);
      if (rows) quotients[i].push_back(q);
    }
  });
  double value = 0.0;
  for (double b : best) value = std::max(value, b);
  if (rows) {
    for (std::size_t t = 0; t < multis.size(); ++t)
      for (std::size_t i = 0; i < sites.size(); ++i)
        rows->push_back({multis[t], sites[i], quotients[i][t]});
  }
  return value;
}

TheoremAReport theorem_a_report(const LatticeFunction& f, int k, ExtensionConfig cfg,
                                std::vector<FineGridRow>* rows) {
  if (k < 1) throw InvalidInput("order k must be at least 1");
  TheoremAReport report;
  report.seminorm = seminorm(f, k).value;
  if (report.seminorm == 0.0)
    throw DegenerateInput("zero seminorm: f is a polynomial lattice sample; ratio undefined");
  const Extension ext(f, k - 1, cfg);
  report.lip = fine_grid_lipschitz(ext, k, f.spec(), cfg.N, true, rows);
  report.ratio = report.lip / report.seminorm;
  report.N = cfg.N;
  report.s = ext.smoothness();
  return report;
}

}  // namespace torusjet
