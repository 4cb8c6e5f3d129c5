#include "torusjet/whitney.hpp"

#include <cmath>

#include "torusjet/error.hpp"
#include "torusjet/parallel.hpp"

namespace torusjet {

namespace {

std::vector<RealVector> unit_directions(const MultiIndex& idx, int dim) {
  std::vector<RealVector> u;
  for (int axis : idx) {
    RealVector v(static_cast<std::size_t>(dim), 0.0);
    v[static_cast<std::size_t>(axis)] = 1.0;
    u.push_back(std::move(v));
  }
  return u;
}

JetBuild build_jet_impl(const LatticeFunction& f, const LatticePoint& x, int top_degree,
                        std::span<const SiteSet> sigmas, bool diagnose) {
  if (top_degree < 0) throw InvalidInput("top degree must be nonnegative");
  const auto& spec = f.spec();
  ResidualField g(f, Jet::zero(spec.real_coords(x), top_degree));
  for (int s = top_degree; s >= 0; --s) g = subtract_jet_step(g, x, s).residual;

  JetBuild out{g.subtracted(), g, {}};
  if (!diagnose) return out;

  auto& diag = out.diagnostics;
  for (int i = 0; i <= top_degree; ++i)
    diag.max_theta_residual =
        std::max(diag.max_theta_residual, tensor_norm(theta(g, spec, x, i)));
  const auto sites = site_list(spec);
  diag.top_seminorm_f = seminorm(f, spec, top_degree + 1, sites).value;
  diag.top_seminorm_g = seminorm(g, spec, top_degree + 1, sites).value;
  for (const auto& sigma : sigmas) {
    if (sigma.empty()) continue;
    const double r = radius(sigma, x, spec);
    if (r == 0.0 || diag.top_seminorm_f == 0.0) continue;
    for (int i = 0; i <= top_degree; ++i) {
      const double num = seminorm(g, spec, i, sigma).value;
      const double ratio = num / (std::pow(r, top_degree - i + 1) * diag.top_seminorm_f);
      diag.radius_bounds.push_back({r, i, ratio});
      diag.max_radius_ratio = std::max(diag.max_radius_ratio, ratio);
    }
  }
  return out;
}

}  // namespace

ResidualField::ResidualField(LatticeFunction f, Jet subtracted)
    : f_(std::move(f)), h_(std::move(subtracted)) {
  if (h_.base.size() != f_.spec().dim()) throw InvalidInput("dimension mismatch");
}

double ResidualField::operator()(const LatticePoint& p) const {
  return f_(p) - poly_eval(h_, f_.spec().real_coords(p));
}

JetStep subtract_jet_step(const ResidualField& g, const LatticePoint& x0, int s) {
  if (s < 0) throw InvalidInput("degree must be nonnegative");
  const auto& spec = g.spec();
  if (g.subtracted().base != spec.real_coords(x0))
    throw InvalidInput("residual jet must be based at x0");
  if (g.subtracted().top_degree() < s) throw InvalidInput("residual jet degree too small");
  SymTensor part = theta(g, spec, x0, s);
  part *= 1.0 / factorial(s);
  Jet h = g.subtracted();
  h.parts[static_cast<std::size_t>(s)] += part;
  return {std::move(part), ResidualField(g.function(), std::move(h))};
}

JetBuild build_jet(const LatticeFunction& f, const LatticePoint& x, int top_degree,
                   std::span<const SiteSet> sigmas) {
  return build_jet_impl(f, x, top_degree, sigmas, true);
}

Jet closed_form_jet(const LatticeFunction& f, const LatticePoint& x, int top_degree) {
  if (top_degree < 0) throw InvalidInput("top degree must be nonnegative");
  Jet jet = Jet::zero(f.spec().real_coords(x), top_degree);
  for (int m = 0; m <= top_degree; ++m) {
    SymTensor t = theta(f, x, m);
    t *= 1.0 / factorial(m);
    jet.parts[static_cast<std::size_t>(m)] = std::move(t);
  }
  return jet;
}

std::vector<SiteSet> default_balls(const LatticePoint& x, const LatticeSpec& spec) {
  const double w = width(spec);
  return {ball(x, w, spec), ball(x, 2 * w, spec), ball(x, 4 * w, spec)};
}

std::vector<Jet> build_all_jets(const LatticeFunction& f, int top_degree, JetBuilder builder) {
  const auto& spec = f.spec();
  std::vector<std::optional<Jet>> slots(spec.site_count());
  parallel_for(slots.size(), [&](std::size_t i) {
    const auto x = spec.site(i);
    slots[i] = builder == JetBuilder::recursive
                   ? build_jet_impl(f, x, top_degree, {}, false).jet
                   : closed_form_jet(f, x, top_degree);
  });
  std::vector<Jet> jets;
  jets.reserve(slots.size());
  for (auto& s : slots) jets.push_back(std::move(*s));
  return jets;
}

LatticePoint nearest_image(const LatticePoint& y, const LatticePoint& x, const LatticeSpec& spec) {
  LatticePoint out = y;
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    const long m = spec.resolution(i);
    // candidate with y_i + t m in [x_i - m/2, x_i + m/2]; smaller wins a tie
    long c = y.j[i] + m * static_cast<long>(std::floor(static_cast<double>(x.j[i] - y.j[i]) / m));
    // c <= x_i < c + m
    const long up = c + m;
    out.j[i] = (x.j[i] - c <= up - x.j[i]) ? c : up;
  }
  return out;
}

Jet rebase(const Jet& jet, const LatticePoint& canonical, const LatticePoint& rep,
           const LatticeSpec& spec) {
  Jet out = jet;
  const auto shift = spec.real_coords(rep - canonical);
  for (std::size_t i = 0; i < out.base.size(); ++i) out.base[i] += shift[i];
  return out;
}

namespace {

struct SiteResult {
  double m1 = 0.0;
  bool exact = true;
  std::optional<WhitneyWitness> w2, w3;
  std::vector<WhitneyRow> rows;
};

void consider(std::optional<WhitneyWitness>& best, const WhitneyWitness& cand) {
  if (!best || cand.quotient > best->quotient) best = cand;
}

}  // namespace

WhitneyReport whitney_check(const LatticeFunction& f, int r, JetBuilder builder,
                            std::vector<WhitneyRow>* rows) {
  if (r < 1) throw InvalidInput("order r must be at least 1");
  const auto& spec = f.spec();
  const int d = static_cast<int>(spec.dim());
  const int top = r - 1;
  const auto jets = build_all_jets(f, top, builder);

  std::vector<std::vector<MultiIndex>> dirs;
  std::vector<std::vector<std::vector<RealVector>>> units;
  for (int m = 0; m <= top; ++m) {
    dirs.push_back(SymTensor(m, d).sorted_indices());
    units.emplace_back();
    for (const auto& idx : dirs.back()) units.back().push_back(unit_directions(idx, d));
  }

  const bool want_rows = rows != nullptr;
  std::vector<SiteResult> results(spec.site_count());
  parallel_for(results.size(), [&](std::size_t xi) {
    SiteResult& res = results[xi];
    const auto x = spec.site(xi);
    const auto xr = spec.real_coords(x);
    const Jet& px = jets[xi];

    const double p_at_x = poly_eval(px, xr);
    res.exact = (p_at_x == f(x));
    res.m1 = std::abs(p_at_x - f(x));
    if (want_rows) res.rows.push_back({1, x, x, 0, {}, res.m1});

    std::vector<std::vector<double>> own(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
      const auto mu = static_cast<std::size_t>(m);
      for (std::size_t t = 0; t < dirs[mu].size(); ++t) {
        const double v = poly_directional_derivative(px, m, units[mu][t], xr);
        own[mu].push_back(v);
        const WhitneyWitness w{x, x, m, dirs[mu][t], std::abs(v)};
        consider(res.w2, w);
        if (want_rows) res.rows.push_back({2, x, x, m, dirs[mu][t], w.quotient});
      }
    }

    for (std::size_t yi = 0; yi < spec.site_count(); ++yi) {
      if (yi == xi) continue;
      const auto y = spec.site(yi);
      const auto yrep = nearest_image(y, x, spec);
      const Jet py = rebase(jets[yi], y, yrep, spec);
      const double dist = sum_norm(x - yrep, spec);
      for (int m = 0; m <= top; ++m) {
        const auto mu = static_cast<std::size_t>(m);
        const double scale = std::pow(dist, r - m);
        for (std::size_t t = 0; t < dirs[mu].size(); ++t) {
          const double v = poly_directional_derivative(py, m, units[mu][t], xr);
          const WhitneyWitness w{x, yrep, m, dirs[mu][t], std::abs(own[mu][t] - v) / scale};
          consider(res.w3, w);
          if (want_rows) res.rows.push_back({3, x, yrep, m, dirs[mu][t], w.quotient});
        }
      }
    }
  });

  WhitneyReport report;
  report.r = r;
  for (auto& res : results) {
    report.condition1_exact = report.condition1_exact && res.exact;
    if (!report.witness1 || res.m1 > report.m1) {
      report.m1 = res.m1;
      const auto& any = res.w2 ? *res.w2 : WhitneyWitness{};
      report.witness1 = WhitneyWitness{any.x, any.x, 0, {}, res.m1};
    }
    if (res.w2) consider(report.witness2, *res.w2);
    if (res.w3) consider(report.witness3, *res.w3);
    if (want_rows) rows->insert(rows->end(), res.rows.begin(), res.rows.end());
  }
  report.m2 = report.witness2 ? report.witness2->quotient : 0.0;
  report.m3 = report.witness3 ? report.witness3->quotient : 0.0;
  report.m_emp = report.m1;
  report.worst_condition = 1;
  if (report.m2 > report.m_emp) {
    report.m_emp = report.m2;
    report.worst_condition = 2;
  }
  if (report.m3 > report.m_emp) {
    report.m_emp = report.m3;
    report.worst_condition = 3;
  }
  report.seminorm = seminorm(f, r).value;
  if (report.seminorm > 0.0) report.ratio = report.m_emp / report.seminorm;
  return report;
}

double constant_report(const LatticeFunction& f, int r) {
  const auto report = whitney_check(f, r);
  if (!report.ratio) throw DegenerateInput("f is a polynomial lattice sample; ratio undefined");
  return *report.ratio;
}

}  // namespace torusjet
