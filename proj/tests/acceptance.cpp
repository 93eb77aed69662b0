#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/epi_verify.hpp"
#include "renyi/exponents.hpp"
#include "renyi/optimizer.hpp"
#include "renyi/transport.hpp"

using namespace renyi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += o.pass ? 0 : 1;
  std::printf("%s  %2d  %-38s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Density1D> suite() {
  return {Density1D::normal(1.0), Density1D::normal(4.0), Density1D::uniform(0.0, 1.0), Density1D::exponential(1.0),
          Density1D::laplace(1.0)};
}

std::vector<double> twenty_orders() {
  std::vector<double> out;
  for (int k = 0; k < 20; ++k) out.push_back(std::pow(10.0, -1.0 + 2.0 * k / 19.0));
  return out;
}

Density1D info_phi(double p) {
  if (p < 1.0) return Density1D::laplace(3.0);
  if (p < 2.5) return Density1D::normal(1.0);
  return Density1D::laplace(1.0);
}

}  // namespace

int main() {
  const VerifyConfig cfg;

  criterion(1, "normal entropy closed form", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double s2 : {0.25, 1.0, 4.0}) {
      for (double p : {0.5, 2.0, 3.0, 10.0}) {
        const double h = renyi_entropy(Density1D::normal(s2), p).nats;
        worst = std::max(worst, std::abs(h - normal_entropy_closed_form(s2, 1, p).nats));
      }
    }
    const double dt = seconds_since(t0);
    return Outcome{worst < 1e-6 && dt < 1.0, fmt("max err %.2e nats, %.3f s", worst, dt)};
  });

  criterion(2, "uniform flatness", [] {
    double worst = 0.0;
    for (double p : twenty_orders()) {
      worst = std::max(worst, std::abs(renyi_entropy(Density1D::uniform(0.0, 2.0), p).nats - std::log(2.0)));
    }
    return Outcome{worst < 1e-8, fmt("max |h_p - log 2| %.2e over 20 orders", worst)};
  });

  criterion(3, "monotonicity in the order", [] {
    double worst = INFINITY;
    const auto orders = twenty_orders();
    for (const Density1D& d : suite()) {
      for (std::size_t k = 0; k + 1 < orders.size(); ++k) {
        worst = std::min(worst, monotonicity_check(d, orders[k], orders[k + 1]).gap);
      }
    }
    return Outcome{worst >= -1e-8, fmt("min h_p - h_q %.3e", worst)};
  });

  criterion(4, "derivative identity", [] {
    double worst = 0.0;
    for (const Density1D& d : {Density1D::normal(1.0), Density1D::exponential(1.0), Density1D::laplace(1.0)}) {
      for (double p : {0.5, 2.0, 3.0}) worst = std::max(worst, derivative_identity_gap(d, p).gap);
    }
    const double kl = kl_divergence(escort(Density1D::normal(1.0), 2.0), Density1D::normal(1.0));
    const double closed = 0.5 * (1.0 / 2.0 - 1.0 + std::log(2.0));
    const double kl_err = std::abs(kl - closed);
    return Outcome{worst < 1e-4 && kl_err < 1e-8 && std::abs(kl - 0.09657) < 1e-5,
                   fmt("max gap %.2e, D(f_2||f) = %.10f (err %.1e)", worst, kl, kl_err)};
  });

  criterion(5, "information inequality", [&] {
    double worst = INFINITY, equality = 0.0;
    int n = 0;
    for (const Density1D& f : suite()) {
      for (double p : {0.5, 2.0, 3.0}) {
        worst = std::min(worst, info_inequality_gap(f, info_phi(p), p, cfg).gap);
        equality = std::max(equality, std::abs(info_inequality_gap(f, escort(f, p), p, cfg).gap));
        ++n;
      }
    }
    return Outcome{worst >= -1e-6 && equality <= 1e-6 && n == 15,
                   fmt("%g combos, min gap %.3e, max |gap| at escort %.2e", n, worst, equality)};
  });

  criterion(6, "transformational invariance", [] {
    double worst = 0.0;
    for (const Density1D& f : {Density1D::normal(1.0), Density1D::exponential(1.0), Density1D::uniform(0.0, 1.0)}) {
      for (double p : {0.5, 2.0}) {
        for (const Density1D& phi : {escort(f, p), Density1D::laplace(2.0), Density1D::laplace(5.0)}) {
          worst = std::max(worst, invariance_gap(f, phi, p, 1.0).gap);
        }
      }
    }
    return Outcome{worst < 1e-3, fmt("max relative gap %.2e", worst)};
  });

  criterion(7, "two-variable EPI, entropy form", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = INFINITY, iid = 0.0;
    int n = 0;
    const auto ds = suite();
    for (double r : {0.5, 2.0}) {
      for (double l : {0.25, 0.5, 0.75}) {
        const ExponentTriple t = triple_for(Exponent(r), l);
        for (const Density1D& x : ds) {
          for (const Density1D& y : ds) {
            const double g = dct_gap(x, y, t, cfg).gap;
            worst = std::min(worst, g);
            if (x.family() == Density1D::Family::Normal && x.describe() == y.describe()) {
              iid = std::max(iid, std::abs(g));
            }
            ++n;
          }
        }
      }
    }
    const double dt = seconds_since(t0);
    return Outcome{worst >= -1e-4 && iid <= 1e-4 && dt < 30.0,
                   fmt("%g checks, min gap %.3e, iid normal |gap| %.2e", n, worst, iid) + fmt(", %.1f s", dt)};
  });

  criterion(8, "m-variable EPI", [&] {
    const std::vector<std::vector<Density1D>> triples = {
        {Density1D::normal(1.0), Density1D::normal(1.0), Density1D::normal(1.0)},
        {Density1D::uniform(0.0, 1.0), Density1D::uniform(0.0, 1.0), Density1D::uniform(0.0, 1.0)},
        {Density1D::normal(1.0), Density1D::uniform(0.0, 1.0), Density1D::exponential(1.0)},
        {Density1D::laplace(1.0), Density1D::normal(4.0), Density1D::exponential(1.0)},
    };
    double worst = INFINITY, iid = 0.0;
    for (double rc : {2.0, -1.0}) {
      const Exponent r = Exponent::from_conjugate(rc);
      const std::vector<Exponent> orders(3, Exponent::from_conjugate(3.0 * rc));
      for (std::size_t i = 0; i < triples.size(); ++i) {
        const double g = dct_gap_m(triples[i], r, orders, cfg).gap;
        worst = std::min(worst, g);
        if (i == 0) iid = std::max(iid, std::abs(g));
      }
    }
    return Outcome{worst >= -1e-4 && iid <= 1e-4, fmt("min gap %.3e, iid normal |gap| %.2e", worst, iid)};
  });

  criterion(9, "constants from optimisation", [] {
    double gap_err = 0.0, ratio_err = 0.0;
    for (double r : {1.5, 2.0, 4.0}) {
      for (int m : {2, 3}) {
        gap_err = std::max(gap_err, std::abs(minimize_gap(Exponent(r), m).value -
                                             std::log(ram_sason_constant(Exponent(r), m))));
      }
      ratio_err = std::max(ratio_err, std::abs(minimize_gap_over_entropy(Exponent(r), 2).value -
                                               (1.0 / li_exponent(Exponent(r)) - 1.0)));
    }
    const SimplexSearchResult three = minimize_gap_over_entropy(Exponent(2.0), 3);
    int zeros = 0;
    for (double l : three.argmin.values()) zeros += l == 0.0 ? 1 : 0;
    const bool boundary = zeros == 1 && std::abs(three.value - (1.0 / li_exponent(Exponent(2.0)) - 1.0)) < 2e-3;
    return Outcome{gap_err < 1e-6 && ratio_err < 2e-3 && boundary,
                   fmt("A err %.1e, A/H err %.1e, m=3 minimiser zeros %g", gap_err, ratio_err, zeros)};
  });

  criterion(10, "closed-form spot values", [] {
    const bool rs = ram_sason_constant(Exponent(2.0), 2) == 0.84375;
    const double bc = std::abs(bobkov_chistyakov_constant(Exponent(2.0)) - 2.0 / std::exp(1.0));
    const double li = std::abs(li_exponent(Exponent(2.0)) - 1.32470);
    double forms = 0.0;
    for (double r : {1.2, 2.0, 5.0, 10.0}) {
      forms = std::max(forms, std::abs(li_exponent(Exponent(r)) - li_exponent_two_variable(Exponent(r))));
    }
    return Outcome{rs && bc < 1e-12 && li < 1e-5 && forms < 1e-12,
                   fmt("c(2,2) exact, BC err %.1e, alpha err %.1e, forms agree to %.1e", bc, li, forms)};
  });

  criterion(11, "EPI forms end to end", [&] {
    const auto ds = suite();
    int n = 0, failed = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i; j < ds.size(); ++j) {
        const std::vector<Density1D> parts{ds[i], ds[j]};
        auto run = [&](const Exponent& r, double c, double a, CheckKind k) {
          ++n;
          failed += epi_form_check(parts, r, c, a, k, cfg).pass ? 0 : 1;
        };
        for (double rv : {1.5, 2.0, 4.0}) {
          const Exponent r(rv);
          run(r, ram_sason_constant(r, 2), 1.0, CheckKind::CForm);
          run(r, 1.0, li_exponent(r), CheckKind::AlphaForm);
          run(r, general_constant(r, 2, 0.5), 0.5, CheckKind::GeneralForm);
        }
        for (double rv : {0.3, 0.5, 0.8}) {
          const Exponent r(rv);
          run(r, logconcave_constant(r, 2), 1.0, CheckKind::CForm);
          run(r, 1.0, logconcave_exponent(r), CheckKind::AlphaForm);
          run(r, logconcave_general_constant(r, 2, 0.5), 0.5, CheckKind::GeneralForm);
        }
      }
    }
    return Outcome{failed == 0, fmt("%g checks, %g failed", n, failed)};
  });

  criterion(12, "varentropy bound", [] {
    double worst = -INFINITY, normal_err = 0.0;
    for (const Density1D& d : suite()) {
      for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const Varentropy v = varentropy(d, p);
        worst = std::max(worst, v.value - v.bound);
        if (d.family() == Density1D::Family::Normal) {
          normal_err = std::max(normal_err, std::abs(v.value - 1.0 / (2.0 * p * p)));
        }
      }
    }
    return Outcome{worst <= 1e-8 && normal_err < 1e-6,
                   fmt("max value - 1/p^2 %.3e, normal err %.1e", worst, normal_err)};
  });

  criterion(13, "concavity scan, shifted monotonicity", [] {
    std::vector<double> orders;
    for (int k = 3; k <= 30; ++k) orders.push_back(k / 10.0);
    double worst = -INFINITY, shifted = INFINITY;
    for (const Density1D& d : suite()) {
      worst = std::max(worst, concavity_scan(d, orders, 1e-6).worst_second_difference);
      std::vector<double> off;
      for (double p : orders) {
        if (p != 1.0) off.push_back(p);
      }
      for (std::size_t k = 0; k + 1 < off.size(); ++k) {
        shifted = std::min(shifted, shifted_monotonicity_check(d, off[k], off[k + 1]).gap);
      }
    }
    return Outcome{worst <= 1e-6 && shifted >= -1e-8,
                   fmt("max second difference %.2e, min shifted gap %.2e", worst, shifted)};
  });

  criterion(14, "monotone transport", [] {
    const TransportMap1D m = monotone_transport(Density1D::normal(4.0), 1.0);
    double slope = 0.0;
    for (double s : m.slopes()) slope = std::max(slope, std::abs(s - 2.0));
    const EpiReport push = pushforward_check(monotone_transport(Density1D::exponential(1.0), 1.0));
    int rotations = 0;
    for (double l : {0.1, 0.25, 0.5, 0.75, 0.9}) rotations += normal_rotation_check(l, 1.0).pass ? 1 : 0;
    return Outcome{slope < 1e-8 && push.pass && push.rhs < 1e-3 && rotations == 5,
                   fmt("slope err %.1e, CDF distance %.1e, rotations %g/5", slope, push.rhs, rotations)};
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
