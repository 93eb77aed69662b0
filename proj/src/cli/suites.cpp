#include <algorithm>
#include <functional>
#include <vector>

#include "renyi/cli.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/exponents.hpp"
#include "renyi/transport.hpp"

namespace renyi::cli {

namespace {

using Check = std::function<EpiReport()>;

struct Entry {
  CheckKind kind;
  std::string label;
  Check check;
};

std::vector<Density1D> density_suite() {
  return {Density1D::normal(1.0), Density1D::normal(4.0), Density1D::uniform(0.0, 1.0), Density1D::exponential(1.0),
          Density1D::laplace(1.0)};
}

// A test density for the information inequality at each order. For p < 1 the
// expectation of phi^{1/p'} needs phi to have heavier tails than f.
Density1D info_phi(double p) {
  if (p < 1.0) return Density1D::laplace(3.0);
  if (p < 2.5) return Density1D::normal(1.0);
  return Density1D::laplace(1.0);
}

EpiReport failed(CheckKind kind, const std::string& inputs, const std::exception& e) {
  EpiReport rep = make_report(kind, 0.0, 0.0, 0.0, inputs);
  rep.pass = false;
  rep.lhs = rep.rhs = rep.gap = std::numeric_limits<double>::quiet_NaN();
  rep.notes.push_back(std::string("error: ") + e.what());
  return rep;
}

void add(std::vector<Entry>& checks, CheckKind kind, std::string label, Check check) {
  checks.push_back(Entry{kind, std::move(label), std::move(check)});
}

void info_checks(std::vector<Entry>& checks, const std::vector<Density1D>& suite,
                 const VerifyConfig& cfg, std::vector<double> orders) {
  for (const Density1D& f : suite) {
    for (double p : orders) {
      add(checks, CheckKind::InfoIneq, f.describe(), [=] { return info_inequality_gap(f, info_phi(p), p, cfg); });
      add(checks, CheckKind::InfoIneq, f.describe() + ";escort", [=] {
        EpiReport rep = info_inequality_gap(f, escort(f, p), p, cfg);
        // Equality case: the gap must also be small from above.
        if (rep.gap > cfg.info_tol) {
          rep.pass = false;
          rep.notes.push_back("equality case exceeds tolerance from above");
        }
        return rep;
      });
    }
  }
}

void dct_checks(std::vector<Entry>& checks, const std::vector<Density1D>& suite,
                const VerifyConfig& cfg, std::vector<double> rs, std::vector<double> lambdas) {
  for (double r : rs) {
    for (double lam : lambdas) {
      const ExponentTriple t = triple_for(Exponent(r), lam);
      for (const Density1D& x : suite) {
        for (const Density1D& y : suite) {
          add(checks, CheckKind::DCT, x.describe() + y.describe(), [=] {
            EpiReport rep = dct_gap(x, y, t, cfg);
            const bool iid_normal = x.family() == Density1D::Family::Normal && x.describe() == y.describe();
            if (iid_normal && rep.gap > cfg.entropy_tol) {
              rep.pass = false;
              rep.notes.push_back("i.i.d. normal pair is not at equality");
            }
            return rep;
          });
        }
      }
    }
  }
}

void dct_m_checks(std::vector<Entry>& checks, const VerifyConfig& cfg) {
  const std::vector<std::vector<Density1D>> triples = {
      {Density1D::normal(1.0), Density1D::normal(1.0), Density1D::normal(1.0)},
      {Density1D::uniform(0.0, 1.0), Density1D::uniform(0.0, 1.0), Density1D::uniform(0.0, 1.0)},
      {Density1D::normal(1.0), Density1D::uniform(0.0, 1.0), Density1D::exponential(1.0)},
      {Density1D::laplace(1.0), Density1D::normal(4.0), Density1D::exponential(1.0)},
  };
  // r' = 2 with r'_i = 6, and r' = -1 with r'_i = -3.
  for (double rc : {2.0, -1.0}) {
    const Exponent r = Exponent::from_conjugate(rc);
    const std::vector<Exponent> orders(3, Exponent::from_conjugate(3.0 * rc));
    for (const auto& parts : triples) {
      std::string label;
      for (const auto& d : parts) label += d.describe();
      add(checks, CheckKind::DCT_m, label + std::to_string(rc), [=] { return dct_gap_m(parts, r, orders, cfg); });
    }
  }
}

void form_checks(std::vector<Entry>& checks, const std::vector<Density1D>& suite,
                 const VerifyConfig& cfg, std::vector<double> r_high, std::vector<double> r_low) {
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t j = i; j < suite.size(); ++j) {
      const std::vector<Density1D> parts{suite[i], suite[j]};
      const std::string label = suite[i].describe() + suite[j].describe();
      for (double rv : r_high) {
        const Exponent r(rv);
        add(checks, CheckKind::CForm, label, [=] {
          return epi_form_check(parts, r, ram_sason_constant(r, 2), 1.0, CheckKind::CForm, cfg);
        });
        add(checks, CheckKind::AlphaForm, label, [=] {
          return epi_form_check(parts, r, 1.0, li_exponent(r), CheckKind::AlphaForm, cfg);
        });
        add(checks, CheckKind::GeneralForm, label, [=] {
          return epi_form_check(parts, r, general_constant(r, 2, 0.5), 0.5, CheckKind::GeneralForm, cfg);
        });
      }
      for (double rv : r_low) {
        const Exponent r(rv);
        add(checks, CheckKind::CForm, label, [=] {
          return epi_form_check(parts, r, logconcave_constant(r, 2), 1.0, CheckKind::CForm, cfg);
        });
        add(checks, CheckKind::AlphaForm, label, [=] {
          return epi_form_check(parts, r, 1.0, logconcave_exponent(r), CheckKind::AlphaForm, cfg);
        });
        add(checks, CheckKind::GeneralForm, label, [=] {
          return epi_form_check(parts, r, logconcave_general_constant(r, 2, 0.5), 0.5, CheckKind::GeneralForm, cfg);
        });
      }
    }
  }
}

void order_checks(std::vector<Entry>& checks, const std::vector<Density1D>& suite,
                  const VerifyConfig& cfg, const std::vector<double>& orders) {
  for (const Density1D& d : suite) {
    for (std::size_t k = 0; k + 1 < orders.size(); ++k) {
      const double p = orders[k], q = orders[k + 1];
      add(checks, CheckKind::Monotonicity, d.describe(), [=] { return monotonicity_check(d, p, q, cfg.numerics); });
      add(checks, CheckKind::ShiftedMonotonicity, d.describe(),
          [=] { return shifted_monotonicity_check(d, p, q, cfg.numerics); });
    }
  }
}

void equivalence_checks(std::vector<Entry>& checks, const VerifyConfig& cfg) {
  const Exponent r(2.0);
  const std::vector<std::vector<Density1D>> pairs = {
      {Density1D::normal(1.0), Density1D::normal(1.0)},
      {Density1D::normal(0.01), Density1D::normal(100.0)},
      {Density1D::uniform(0.0, 1.0), Density1D::exponential(1.0)},
  };
  for (const auto& parts : pairs) {
    const std::string label = parts[0].describe() + parts[1].describe();
    add(checks, CheckKind::Equivalence, label + "c",
        [=] { return equivalence_probe(parts, r, ram_sason_constant(r, 2), 1.0, std::nullopt, cfg); });
    add(checks, CheckKind::Equivalence, label + "alpha",
        [=] { return equivalence_probe(parts, r, 1.0, li_exponent(r), std::nullopt, cfg); });
  }
}

void transport_checks(std::vector<Entry>& checks) {
  for (const Density1D& target : density_suite()) {
    add(checks, CheckKind::Pushforward, target.describe(),
        [=] { return pushforward_check(monotone_transport(target, 1.0)); });
  }
}

std::vector<EpiReport> execute(std::vector<Entry>& checks) {
  std::vector<EpiReport> out;
  out.reserve(checks.size());
  for (Entry& e : checks) {
    try {
      out.push_back(e.check());
    } catch (const std::exception& ex) {
      out.push_back(failed(e.kind, to_string(e.kind) + ";" + e.label, ex));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EpiReport& a, const EpiReport& b) { return a.inputs_digest < b.inputs_digest; });
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"default", "smoke"}; }

std::vector<EpiReport> run_suite(const std::string& name, const VerifyConfig& cfg) {
  std::vector<Entry> checks;
  const std::vector<Density1D> suite = density_suite();
  if (name == "default") {
    info_checks(checks, suite, cfg, {0.5, 2.0, 3.0});
    dct_checks(checks, suite, cfg, {0.5, 2.0}, {0.25, 0.5, 0.75});
    dct_m_checks(checks, cfg);
    form_checks(checks, suite, cfg, {2.0}, {0.3, 0.5, 0.8});
    order_checks(checks, suite, cfg, {0.3, 0.5, 0.8, 1.5, 2.0, 3.0});
    equivalence_checks(checks, cfg);
    transport_checks(checks);
  } else if (name == "smoke") {
    const std::vector<Density1D> small{Density1D::normal(1.0), Density1D::uniform(0.0, 1.0)};
    info_checks(checks, small, cfg, {2.0});
    dct_checks(checks, small, cfg, {2.0}, {0.5});
    form_checks(checks, small, cfg, {2.0}, {0.5});
  } else {
    throw UsageError("unknown suite \"" + name + "\"");
  }
  return execute(checks);
}

}  // namespace renyi::cli
