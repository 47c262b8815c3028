#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "cases.hpp"
#include "charboole/characters.hpp"
#include "charboole/errors.hpp"
#include "charboole/hbsums.hpp"
#include "charboole/lfunc.hpp"
#include "charboole/summation.hpp"

namespace charboole::verify {

namespace {

using Builder = std::vector<Case> (*)(const SuiteConfig&);

std::vector<long> moduli_or(const SuiteConfig& cfg, std::vector<long> def) {
  return cfg.moduli.empty() ? def : cfg.moduli;
}
std::vector<int> orders_or(const SuiteConfig& cfg, std::vector<int> def) {
  return cfg.orders.empty() ? def : cfg.orders;
}
double tol_or(const SuiteConfig& cfg, double def) { return cfg.tol ? *cfg.tol : def; }
int pmax_or(const SuiteConfig& cfg, int def) { return cfg.pmax > 0 ? cfg.pmax : def; }
long bcmax_or(const SuiteConfig& cfg, long def) { return cfg.bcmax > 0 ? cfg.bcmax : def; }

std::vector<DirichletCharacter> real_chars(const std::vector<long>& moduli) {
  std::vector<DirichletCharacter> out;
  for (long k : moduli) {
    if (auto c = real_primitive_character(k)) out.push_back(*c);
  }
  return out;
}

std::vector<DirichletCharacter> all_primitive(const std::vector<long>& moduli) {
  std::vector<DirichletCharacter> out;
  for (long k : moduli) {
    for (auto& c : primitive_characters(k)) out.push_back(c);
  }
  return out;
}

std::string show(Complex z) { return z.imag() == 0.0 ? format_double(z.real()) : format_complex(z); }

CaseResult numeric_case(Complex lhs, Complex rhs, double tol) {
  CaseResult r;
  r.lhs = show(lhs);
  r.rhs = show(rhs);
  r.defect = std::abs(lhs - rhs);
  r.pass = std::isfinite(r.defect) && r.defect < tol;
  r.route_meta["tol"] = tol;
  return r;
}

// ---------------------------------------------------------------- summation

struct TestFunction {
  const char* name;
  SmoothFunction (*make)();
};

const TestFunction kFunctions[] = {
    {"exp(x/10)", [] { return SmoothFunction::exponential(0.1); }},
    {"x^4", [] { return SmoothFunction::monomial(4); }},
    {"1/(x+2)", [] { return SmoothFunction::reciprocal(2.0); }},
};

CaseResult summation_case(const SummationReport& r, double tol) {
  CaseResult c = numeric_case(r.lhs, r.rhs_boundary + r.rhs_integral, tol);
  c.defect = std::abs(r.defect);
  c.pass = std::isfinite(c.defect) && c.defect < tol;
  c.route_meta["formula"] = r.formula;
  c.route_meta["rhs_boundary"] = show(r.rhs_boundary);
  c.route_meta["rhs_integral"] = show(r.rhs_integral);
  c.route_meta["quad_error"] = r.quad_error;
  c.route_meta["quad_evaluations"] = r.quad_evaluations;
  return c;
}

std::vector<Case> boole_cases(const SuiteConfig& cfg) {
  const double tol = tol_or(cfg, 1e-10);
  std::vector<Case> out;
  for (long k : moduli_or(cfg, {3, 5})) {
    for (auto [lo, hi] : {std::pair{0L, 2 * k}, std::pair{0L, 4 * k}, std::pair{1L, 2 * k + 1}}) {
      for (const auto& tf : kFunctions) {
        for (int l : orders_or(cfg, {1, 2, 3, 4})) {
          if (l < 1) continue;
          Json p{{"f", tf.name}, {"alpha", lo}, {"beta", hi}, {"l", l}};
          out.push_back({p, [=, &tf] { return summation_case(boole_sum(tf.make(), lo, hi, l), tol); }});
        }
      }
    }
  }
  return out;
}

template <class Engine>
std::vector<Case> char_summation_cases(const SuiteConfig& cfg, Engine engine) {
  const double tol = tol_or(cfg, 1e-10);
  std::vector<Case> out;
  for (const auto& chi : real_chars(moduli_or(cfg, {3, 5}))) {
    const double k = static_cast<double>(chi.modulus());
    for (auto [lo, hi] : {std::pair{0.0, 2 * k}, std::pair{0.0, 4 * k}, std::pair{0.5, 2 * k + 0.5}}) {
      for (const auto& tf : kFunctions) {
        for (int l : orders_or(cfg, {1, 2, 3, 4})) {
          Json p{{"chi", chi.label()}, {"f", tf.name}, {"alpha", lo}, {"beta", hi}, {"l", l}};
          out.push_back({p, [=, &tf] { return summation_case(engine(chi, tf.make(), lo, hi, l), tol); }});
        }
      }
    }
  }
  return out;
}

std::vector<Case> cem_cases(const SuiteConfig& cfg) {
  return char_summation_cases(cfg, [](const DirichletCharacter& chi, const SmoothFunction& f, double a, double b,
                                      int l) { return char_euler_maclaurin(chi, f, a, b, l); });
}

std::vector<Case> char_boole_cases(const SuiteConfig& cfg) {
  return char_summation_cases(cfg, [](const DirichletCharacter& chi, const SmoothFunction& f, double a, double b,
                                      int l) { return char_boole_sum(chi, f, a, b, l); });
}

// ---------------------------------------------------------------- lfunc

std::vector<Case> lfunc_routes_cases(const SuiteConfig& cfg) {
  const double tol = tol_or(cfg, 1e-8);
  const auto chars = real_chars(moduli_or(cfg, {3, 5}));
  std::vector<Case> out;
  for (const auto& chi : chars) {
    for (double s : {0.5, 1.0, 2.0, -0.5}) {
      for (double a : {0.25, 1.0}) {
        Json p{{"check", "routes"}, {"chi", chi.label()}, {"s", s}, {"a", a}};
        out.push_back({p, [=] {
                         const Complex h = ell({s, a, chi, LMethod::hurwitz});
                         const Complex in = ell({s, a, chi, LMethod::integral, 3});
                         double d = std::abs(h - in);
                         CaseResult r = numeric_case(h, in, tol);
                         r.route_meta["hurwitz"] = show(h);
                         r.route_meta["integral"] = show(in);
                         if (s > 0) {
                           const Complex se = ell({s, a, chi, LMethod::series});
                           d = std::max({d, std::abs(h - se), std::abs(se - in)});
                           r.route_meta["series"] = show(se);
                         } else {
                           r.route_meta["series"] = "outside Re(s) > 0";
                         }
                         r.defect = d;
                         r.pass = std::isfinite(d) && d < tol;
                         return r;
                       }});
      }
    }
  }

  struct Partial {
    double x;
    double s;
    double a;
    long k;
    int l;
  };
  const Partial partials[] = {{5.5, 0.5, 0.25, 3, 2}, {6.0, 0.0, 1.0, 3, 1},  {0.0, 0.5, 0.5, 3, 2},
                              {7.25, 1.0, 0.5, 3, 2}, {10.0, 2.0, 0.25, 5, 3}, {12.5, 0.5, 1.0, 5, 2},
                              {3.5, 1.5, 0.75, 5, 3}, {9.0, -0.5, 0.3, 3, 1},  {15.75, 0.25, 2.0, 5, 1},
                              {4.0, 2.5, 0.6, 3, 3}};
  const double ptol = tol_or(cfg, 1e-9);
  for (const auto& c : partials) {
    Json p{{"check", "partial"}, {"x", c.x}, {"s", c.s}, {"a", c.a}, {"chi", "real mod " + std::to_string(c.k)},
           {"l", c.l}};
    out.push_back({p, [=] {
                     const auto chi = *real_primitive_character(c.k);
                     return numeric_case(ell_partial(c.x, c.s, c.a, chi, c.l), ell_partial_literal(c.x, c.s, c.a, chi),
                                         ptol);
                   }});
  }

  const double stol = tol_or(cfg, 1e-9);
  for (const auto& chi : chars) {
    for (int pp = 1; pp <= pmax_or(cfg, 4); ++pp) {
      for (const Rational& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        Json p{{"check", "negint"}, {"chi", chi.label()}, {"p", pp}, {"a", a.str()}};
        out.push_back({p, [=] {
                         const ExactOrComplex e = ell_special_negint(pp, a, chi);
                         const Complex in = ell({Complex(1.0 - pp, 0.0), a.to_double(), chi, LMethod::integral});
                         CaseResult r = numeric_case(e.value, in, stol);
                         r.lhs = format_value(e);
                         return r;
                       }});
      }
    }
  }
  return out;
}

std::vector<Case> closed_form_cases(const SuiteConfig& cfg) {
  const double tol = tol_or(cfg, 1e-9);
  const Complex target{-2.0 * std::sqrt(3.0) * kPi / 9.0, 0.0};
  const auto chi = *real_primitive_character(3);
  auto one = [&](const char* route, std::function<Complex()> f) {
    Json p{{"chi", chi.label()}, {"route", route}};
    return Case{p, [=] {
                  CaseResult r = numeric_case(f(), target, tol);
                  r.route_meta["target"] = "-2 sqrt(3) pi / 9";
                  return r;
                }};
  };
  std::vector<Case> out;
  out.push_back(one("cot", [chi] { return ell_cot(1, chi); }));
  out.push_back(one("digamma a=0", [chi] { return ell({1.0, 0.0, chi, LMethod::hurwitz}); }));
  out.push_back(one("digamma a->0+", [chi] {
    // Richardson on -ψ*(h) for h = h0 / 2^i; ψ* is analytic at 0.
    std::vector<Complex> t;
    for (int i = 0; i < 5; ++i) t.push_back(-psi_star(1e-2 / std::pow(2.0, i), chi));
    for (int j = 1; j < 5; ++j) {
      const double f = std::pow(2.0, j);
      for (int i = 4; i >= j; --i) t[i] = (f * t[i] - t[i - 1]) / (f - 1.0);
    }
    return t[4];
  }));
  out.push_back(one("series", [chi] { return ell({1.0, 0.0, chi, LMethod::series}); }));
  return out;
}

std::vector<Case> lerch_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  for (const auto& chi : real_chars(moduli_or(cfg, {3, 5, 7}))) {
    for (double a : {0.25, 0.5, 1.5}) {
      out.push_back({Json{{"check", "lerch"}, {"chi", chi.label()}, {"a", a}}, [=] {
                       // ℓ'(0,a,χ) and ℓ'(0,χ) from their integral forms, Γ* from ordinary gamma.
                       const Derivative0 d = ell_derivative0(a, chi);
                       const double g = gamma_star({a, chi, GammaRoute::quotient});
                       const Complex p0 = ell_prime0_integral(chi);
                       CaseResult r = numeric_case(d.integral, g + p0, tol_or(cfg, 1e-8));
                       r.route_meta["gamma_sum"] = show(d.gamma_sum);
                       r.route_meta["ell_prime0"] = show(ell_prime0(chi));
                       return r;
                     }});
      out.push_back({Json{{"check", "quotient vs log_formula"}, {"chi", chi.label()}, {"a", a}}, [=] {
                       return numeric_case(gamma_star({a, chi, GammaRoute::quotient}),
                                           gamma_star({a, chi, GammaRoute::log_formula}), tol_or(cfg, 1e-8));
                     }});
      out.push_back({Json{{"check", "quotient vs partial_product"}, {"chi", chi.label()}, {"a", a}, {"N", 100000}},
                     [=] {
                       return numeric_case(gamma_star({a, chi, GammaRoute::quotient}),
                                           gamma_star({a, chi, GammaRoute::partial_product, 100000}), 1e-4);
                     }});
      out.push_back({Json{{"check", "weierstrass"}, {"chi", chi.label()}, {"s", a}, {"N", 100000}}, [=] {
                       return numeric_case(gamma_star({a, chi, GammaRoute::quotient}),
                                           weierstrass_partial(a, chi, 100000), 1e-4);
                     }});
    }
    out.push_back({Json{{"check", "a=0"}, {"chi", chi.label()}}, [=] {
                     double m = 0.0;
                     for (auto route : {GammaRoute::quotient, GammaRoute::partial_product, GammaRoute::log_formula}) {
                       m = std::max(m, std::abs(gamma_star({0.0, chi, route, 1000})));
                     }
                     m = std::max(m, std::abs(weierstrass_partial(0.0, chi, 1000)));
                     return numeric_case(m, 0.0, 1e-15);
                   }});
  }
  return out;
}

std::vector<Case> lfunc_identity_cases(const SuiteConfig& cfg) {
  const auto chars = real_chars(moduli_or(cfg, {3, 5}));
  std::vector<Case> out;
  for (const auto& chi : chars) {
    out.push_back({Json{{"check", "taylor"}, {"chi", chi.label()}, {"a", 1.0}, {"z", 0.4}, {"M", 25}}, [=] {
                     Complex acc{0.0, 0.0};
                     for (int m = 2; m <= 25; ++m) acc += ell({double(m), 1.0, chi}) * std::pow(0.4, m - 1);
                     return numeric_case(acc, psi_star(1.0, chi) - psi_star(0.6, chi), tol_or(cfg, 1e-8));
                   }});
    for (double a : {0.1, 0.3}) {
      out.push_back({Json{{"check", "cot reflection"}, {"chi", chi.label()}, {"a", a}}, [=] {
                       const long k2 = 2 * chi.modulus();
                       const Complex lhs = ell({1.0, a, chi, LMethod::series}) -
                                           double(chi.at_minus_one()) * ell({1.0, -a, chi, LMethod::series});
                       double acc = 0.0;
                       for (long n = 1; n < k2; ++n) {
                         acc += ((n % 2) ? -1.0 : 1.0) * chi.sign(n) / std::tan(kPi * (n + a) / double(k2));
                       }
                       return numeric_case(lhs, kPi / double(k2) * acc, tol_or(cfg, 1e-9));
                     }});
    }
    for (double a : {0.3, 0.5}) {
      out.push_back({Json{{"check", "psi* = -ell(1)"}, {"chi", chi.label()}, {"a", a}}, [=] {
                       return numeric_case(-psi_star(a, chi), ell({1.0, a, chi, LMethod::series}), tol_or(cfg, 1e-10));
                     }});
    }
    for (int m = 1; m <= 3; ++m) {
      out.push_back({Json{{"check", "psi* derivative"}, {"chi", chi.label()}, {"m", m}, {"a", 0.8}}, [=] {
                       const double sgn = (m % 2) ? 1.0 : -1.0;
                       return numeric_case(psi_star_derivative(m, 0.8, chi),
                                           sgn * std::tgamma(m + 1.0) * ell({double(m + 1), 0.8, chi}),
                                           tol_or(cfg, 1e-10));
                     }});
    }
    out.push_back({Json{{"check", "psi* finite difference"}, {"chi", chi.label()}, {"a", 0.8}}, [=] {
                     const double h = 1e-5;
                     const Complex fd = (psi_star(0.8 + h, chi) - psi_star(0.8 - h, chi)) / (2 * h);
                     return numeric_case(fd, ell({2.0, 0.8, chi}), 1e-5);
                   }});
    out.push_back({Json{{"check", "derivative0 routes"}, {"chi", chi.label()}, {"a", 0.5}}, [=] {
                     const Derivative0 d = ell_derivative0(0.5, chi);
                     return numeric_case(d.gamma_sum, d.integral, tol_or(cfg, 1e-8));
                   }});
    out.push_back({Json{{"check", "derivative0 at a=2k"}, {"chi", chi.label()}}, [=] {
                     const long k2 = 2 * chi.modulus();
                     double logs = 0.0;
                     for (long n = 1; n < k2; ++n) logs += ((n % 2) ? -1.0 : 1.0) * chi.sign(n) * std::log(double(n));
                     return numeric_case(ell_derivative0(double(k2), chi).gamma_sum, ell_prime0(chi) + logs,
                                         tol_or(cfg, 1e-10));
                   }});
    out.push_back({Json{{"check", "d/da derivative0"}, {"chi", chi.label()}, {"a", 0.7}}, [=] {
                     const double h = 1e-5;
                     const Complex fd =
                         (ell_derivative0(0.7 + h, chi).gamma_sum - ell_derivative0(0.7 - h, chi).gamma_sum) / (2 * h);
                     return numeric_case(fd, -ell({1.0, 0.7, chi}), 1e-6);
                   }});
    for (int m = 1; m <= 6; ++m) {
      if (chi.at_minus_one() * ((m % 2) ? -1 : 1) != 1) continue;
      out.push_back({Json{{"check", "ell_cot"}, {"chi", chi.label()}, {"m", m}}, [=] {
                       return numeric_case(ell_cot(m, chi), ell({double(m), 0.0, chi}), tol_or(cfg, 1e-10));
                     }});
    }
  }
  for (const auto& chi : all_primitive(moduli_or(cfg, {3, 5}))) {
    if (chi.is_real()) continue;
    for (Complex s : {Complex(2.0, 0.5), Complex(0.5, 1.0), Complex(-0.5, 0.25)}) {
      out.push_back({Json{{"check", "conjugation"}, {"chi", chi.label()}, {"s", show(s)}, {"a", 0.5}}, [=] {
                       return numeric_case(ell({s, 0.5, chi.conjugate()}), std::conj(ell({std::conj(s), 0.5, chi})),
                                           tol_or(cfg, 1e-12));
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- hbsums

std::vector<Case> recip2_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const long bcmax = bcmax_or(cfg, 6);
  for (const auto& chi : real_chars(moduli_or(cfg, {3, 5, 7}))) {
    for (int p = 1; p <= pmax_or(cfg, 5); ++p) {
      if (chi.at_minus_one() * ((p % 2 == 0) ? 1 : -1) != 1) continue;
      for (long b = 1; b <= bcmax; ++b) {
        for (long c = 1; c <= bcmax; ++c) {
          if ((b + c) % 2 == 0) continue;
          Json params{{"chi", chi.label()}, {"p", p}, {"b", b}, {"c", c}, {"convention", "proof"}};
          out.push_back({params, [=] {
                           const ReciprocityReport rep = recip2_defect({p, b, c, chi});
                           CaseResult r;
                           r.lhs = format_value(rep.lhs);
                           r.rhs = format_value(rep.rhs);
                           r.defect = rep.defect;
                           r.pass = rep.pass;
                           r.route_meta["exact"] = rep.exact;
                           r.route_meta["form"] = rep.form;
                           return r;
                         }});
        }
      }
    }
  }
  return out;
}

std::vector<Case> recip1_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const long bcmax = bcmax_or(cfg, 5);
  for (const auto& chi : all_primitive(moduli_or(cfg, {3, 5, 9}))) {
    for (int p = 3; p <= pmax_or(cfg, 7); p += 2) {
      for (long b = 1; b <= bcmax; ++b) {
        for (long c = 1; c <= bcmax; ++c) {
          if ((b + c) % 2 == 0) continue;
          Json params{{"chi", chi.label()}, {"p", p}, {"b", b}, {"c", c}};
          const double tol = tol_or(cfg, 1e-10);
          out.push_back({params, [=] {
                           const HBParams q{p, b, c, chi};
                           const ReciprocityReport rep = recip1_defect(q, Recip1Form::corrected, false, tol);
                           const ReciprocityReport mod = recip1_defect(q, Recip1Form::corrected, true, tol);
                           const ReciprocityReport printed = recip1_defect(q, Recip1Form::printed, false, tol);
                           HBParams qf = q;
                           qf.float_path = true;
                           const ReciprocityReport fl = recip1_defect(qf, Recip1Form::corrected, false, tol);
                           CaseResult r;
                           r.lhs = format_value(rep.lhs);
                           r.rhs = format_value(rep.rhs);
                           r.defect = rep.defect;
                           r.pass = rep.pass && mod.pass;
                           r.route_meta["exact"] = rep.exact;
                           r.route_meta["form"] = rep.form;
                           r.route_meta["lhs_value"] = format_complex(rep.lhs.value);
                           r.route_meta["modified_form_defect"] = mod.defect;
                           r.route_meta["printed_form_defect"] = printed.defect;
                           r.route_meta["float_path_relative_defect"] =
                               fl.defect / std::max(1.0, std::abs(fl.lhs.value));
                           return r;
                         }});
        }
      }
    }
  }
  return out;
}

std::vector<Case> integral_cases(const SuiteConfig& cfg) {
  struct P {
    int l, p;
    long b, c;
  };
  const std::vector<P> zero = {{1, 5, 1, 3}, {0, 3, 1, 1}, {2, 5, 2, 4}, {1, 7, 3, 5}, {0, 3, 2, 6}, {3, 7, 1, 5}};
  const std::vector<P> odd = {{0, 2, 1, 2}, {1, 4, 2, 3}, {0, 4, 1, 4}, {2, 4, 3, 2}, {1, 6, 1, 2}, {0, 6, 5, 2}};
  const std::vector<P> even = {{1, 4, 1, 5}, {2, 4, 1, 1}, {0, 2, 1, 3}, {0, 4, 1, 3},
                               {2, 6, 3, 1}, {1, 4, 3, 5}, {0, 2, 3, 1}};
  std::vector<Case> out;
  for (const auto& chi : all_primitive(moduli_or(cfg, {3, 5}))) {
    for (const auto* group : {&zero, &odd, &even}) {
      const double tol = tol_or(cfg, group == &zero ? 1e-10 : 1e-8);
      for (const auto& c : *group) {
        Json params{{"chi", chi.label()}, {"l", c.l}, {"p", c.p}, {"b", c.b}, {"c", c.c}};
        out.push_back({params, [=] {
                         const IntegralCheck ic = euler_integral_closed(c.l, c.p, c.b, c.c, chi);
                         CaseResult r = numeric_case(ic.value, ic.closed_form, tol);
                         r.route_meta["branch"] = ic.branch;
                         return r;
                       }});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- gf

std::vector<Case> gf_cases(const SuiteConfig& cfg) {
  const double tol = tol_or(cfg, 1e-10);
  std::vector<Case> out;
  for (const auto& chi : real_chars(moduli_or(cfg, {3, 5}))) {
    for (auto kernel : {GfKernel::exp, GfKernel::cos, GfKernel::sin, GfKernel::cosh, GfKernel::sinh}) {
      Json params{{"chi", chi.label()}, {"kernel", to_string(kernel)}, {"J", 8}};
      out.push_back({params, [=] {
                       const GfResult g = gf_coefficients(kernel, chi, 8);
                       CaseResult r;
                       Json got = Json::array(), want = Json::array();
                       for (std::size_t j = 0; j < g.coefficients.size(); ++j) {
                         r.defect = std::max(r.defect, std::abs(g.coefficients[j] - g.expected[j]));
                         got.push_back(show(g.coefficients[j]));
                         want.push_back(show(g.expected[j]));
                       }
                       r.lhs = got.dump();
                       r.rhs = want.dump();
                       r.pass = std::isfinite(r.defect) && r.defect < tol;
                       r.route_meta["form"] = g.form;
                       return r;
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- identities

// Ē_{m,χ} / B̄_{m,χ} exactly in Q(ζ_d).
Cyclotomic cp(PolyKind kind, int m, const DirichletCharacter& chi, const Rational& x, Limit lim) {
  return CharPeriodic(kind, m, chi).cyclotomic(x, chi.value_order(), lim);
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> xs = {Rational(0),    Rational(1, 7), Rational(1, 3), Rational(1, 2),
                                           Rational(2, 3), Rational(1),    Rational(5, 4), Rational(7, 3),
                                           Rational(3),    Rational(9, 2), Rational(-5, 6)};
  return xs;
}

// Accumulates exact defects; a nonzero one fails the case.
struct ExactTally {
  double max_abs = 0.0;
  long checked = 0;
  long nonzero = 0;
  void add(const Cyclotomic& d) {
    ++checked;
    if (!d.is_zero()) {
      ++nonzero;
      max_abs = std::max(max_abs, std::abs(d.to_complex()));
    }
  }
  void add(const Rational& d) {
    ++checked;
    if (!d.is_zero()) {
      ++nonzero;
      max_abs = std::max(max_abs, std::abs(d.to_double()));
    }
  }
  CaseResult result() const {
    CaseResult r;
    r.lhs = std::to_string(checked) + " evaluations";
    r.rhs = std::to_string(nonzero) + " nonzero defects";
    r.defect = max_abs;
    r.pass = nonzero == 0;
    r.route_meta["exact"] = true;
    return r;
  }
};

std::vector<Case> identity_cases(const SuiteConfig& cfg) {
  const auto chars = all_primitive(moduli_or(cfg, {3, 5, 7}));
  std::vector<Case> out;
  for (const auto& chi : chars) {
    const long k = chi.modulus();
    for (int m = 0; m <= 6; ++m) {
      out.push_back({Json{{"identity", "reflection"}, {"chi", chi.label()}, {"m", m}}, [=] {
                       // Ē_{m,χ}(-x) = (-1)^{m-1} χ(-1) Ē_{m,χ}(x)
                       ExactTally t;
                       const Rational sgn((m % 2 == 1 ? 1 : -1) * chi.at_minus_one());
                       for (const auto& x : sample_points()) {
                         Cyclotomic rhs = cp(PolyKind::euler, m, chi, x, Limit::average);
                         rhs *= sgn;
                         t.add(cp(PolyKind::euler, m, chi, -x, Limit::average) - rhs);
                       }
                       return t.result();
                     }});
      out.push_back({Json{{"identity", "antiperiodicity"}, {"chi", chi.label()}, {"m", m}}, [=] {
                       // Ē_{m,χ}(x + nk) = (-1)^n Ē_{m,χ}(x)
                       ExactTally t;
                       for (const auto& x : sample_points()) {
                         const Cyclotomic base = cp(PolyKind::euler, m, chi, x, Limit::standard);
                         for (long n = -2; n <= 2; ++n) {
                           Cyclotomic rhs = base;
                           if (n % 2 != 0) rhs = -rhs;
                           t.add(cp(PolyKind::euler, m, chi, x + Rational(n * k), Limit::standard) - rhs);
                         }
                       }
                       return t.result();
                     }});
    }
    for (int m = 1; m <= 6; ++m) {
      out.push_back({Json{{"identity", "half-argument"}, {"chi", chi.label()}, {"m", m}}, [=] {
                       // B̄_{m,χ}(x/2) + B̄_{m,χ}((x+k)/2) = 2^{1-m} χ(2) B̄_{m,χ}(x)
                       ExactTally t;
                       const int d = chi.value_order();
                       for (const auto& x : sample_points()) {
                         const Cyclotomic lhs = cp(PolyKind::bernoulli, m, chi, x / Rational(2), Limit::standard) +
                                                cp(PolyKind::bernoulli, m, chi, (x + Rational(k)) / Rational(2),
                                                   Limit::standard);
                         Cyclotomic rhs = chi.cyclotomic(2, d) * cp(PolyKind::bernoulli, m, chi, x, Limit::standard);
                         rhs *= pow(Rational(2), 1 - m);
                         t.add(lhs - rhs);
                       }
                       return t.result();
                     }});
      if (chi.is_real()) {
        out.push_back({Json{{"identity", "duplication"}, {"chi", chi.label()}, {"m", m}}, [=] {
                         // 2^m χ(2) B̄_{m,χ̄}(x/2) - B̄_{m,χ̄}(x) = -(m/2) Ē_{m-1,χ̄}(x)
                         ExactTally t;
                         const DirichletCharacter cb = chi.conjugate();
                         const CharPeriodic B(PolyKind::bernoulli, m, cb);
                         const CharPeriodic E(PolyKind::euler, m - 1, cb);
                         for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)}) {
                           const Rational lhs = pow(Rational(2), m) * Rational(chi.sign(2)) *
                                                    B.exact(x / Rational(2), Limit::average) -
                                                B.exact(x, Limit::average);
                           t.add(lhs + Rational(m, 2) * E.exact(x, Limit::average));
                         }
                         return t.result();
                       }});
      }
    }
    for (auto kind : {PolyKind::bernoulli, PolyKind::euler}) {
      for (int m = 2; m <= 5; ++m) {
        Json params{{"identity", kind == PolyKind::euler ? "euler derivative" : "bernoulli derivative"},
                    {"chi", chi.label()},
                    {"m", m},
                    {"h", "1/1000000"}};
        out.push_back({params, [=] {
                         // (F_m(x+h) - F_m(x-h)) / 2h against m F_{m-1}(x), exactly
                         const Rational h(1, 1000000);
                         const int d = chi.value_order();
                         const CharPeriodic F(kind, m, chi), G(kind, m - 1, chi);
                         double worst = 0.0;
                         for (int i = 0; i < 8; ++i) {
                           const Rational x = Rational(k * (2 * i + 1), 16) + Rational(1, 1000);
                           Cyclotomic diff = F.cyclotomic(x + h, d) - F.cyclotomic(x - h, d);
                           diff *= Rational(1) / (Rational(2) * h);
                           Cyclotomic rhs = G.cyclotomic(x, d);
                           rhs *= Rational(m);
                           worst = std::max(worst, std::abs((diff - rhs).to_complex()));
                         }
                         CaseResult r;
                         r.lhs = "central difference";
                         r.rhs = "m F_{m-1}";
                         r.defect = worst;
                         r.pass = worst < 1e-6;
                         r.route_meta["tol"] = 1e-6;
                         return r;
                       }});
      }
    }
    for (int l = 1; l <= 5; ++l) {
      out.push_back({Json{{"identity", "magnitude bound"}, {"chi", chi.label()}, {"l", l}, {"samples", 1000}}, [=] {
                       const double kd = static_cast<double>(k);
                       const double bound = 4.0 * std::tgamma(l + 1.0) * hurwitz_zeta(l + 1.0, 1.0).real() /
                                            std::pow(kPi / kd, l + 1);
                       const CharPeriodic E(PolyKind::euler, l, chi);
                       std::mt19937_64 rng(20240 + 97 * k + l);
                       std::uniform_real_distribution<double> u(0.0, 2.0 * kd);
                       double worst = 0.0;
                       for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(E(u(rng))));
                       CaseResult r;
                       r.lhs = format_double(worst);
                       r.rhs = format_double(bound);
                       r.defect = std::max(0.0, worst - bound);
                       r.pass = worst <= bound;
                       r.route_meta["ratio"] = worst / bound;
                       return r;
                     }});
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (long r = 1; r <= 6; ++r) {
      out.push_back({Json{{"identity", "multiplication"}, {"n", n}, {"r", r}}, [=] {
                       // r^{n-1} Σ_{j<r} B̄_n(x + j/r) = B̄_n(rx)
                       ExactTally t;
                       for (const auto& x : sample_points()) {
                         Rational acc(0);
                         for (long j = 0; j < r; ++j) acc += periodic_eval(PolyKind::bernoulli, n, x + Rational(j, r));
                         t.add(pow(Rational(r), n - 1) * acc - periodic_eval(PolyKind::bernoulli, n, Rational(r) * x));
                       }
                       return t.result();
                     }});
      if (r % 2 != 0) continue;
      out.push_back({Json{{"identity", "alternating multiplication"}, {"n", n}, {"r", r}}, [=] {
                       // r^{n-1} Σ_{j<r} (-1)^j B̄_n((x + j)/r) = -(n/2) Ē_{n-1}(x)
                       ExactTally t;
                       for (const auto& x : sample_points()) {
                         Rational acc(0);
                         for (long j = 0; j < r; ++j) {
                           const Rational v = periodic_eval(PolyKind::bernoulli, n, (x + Rational(j)) / Rational(r));
                           acc += (j % 2 == 0) ? v : -v;
                         }
                         t.add(pow(Rational(r), n - 1) * acc +
                               Rational(n, 2) * periodic_eval(PolyKind::euler, n - 1, x, Limit::average));
                       }
                       return t.result();
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- asymptotics

std::vector<Case> asymptotic_cases(const SuiteConfig& cfg) {
  std::vector<Case> out;
  const double factor = 10.0;
  for (const auto& chi : real_chars(moduli_or(cfg, {3, 5}))) {
    for (double a : {10.0, 20.0}) {
      Json params{{"check", "stirling"}, {"chi", chi.label()}, {"J", 6}, {"a", a}, {"a2", 2 * a}};
      out.push_back({params, [=] {
                       auto defect = [&](double x) {
                         return std::abs(gamma_star({x, chi, GammaRoute::quotient}) -
                                         stirling_log_gamma_star(x, chi, 6).partial);
                       };
                       const double d1 = defect(a), d2 = defect(2 * a);
                       const double proxy = stirling_log_gamma_star(a, chi, 6).error_proxy;
                       CaseResult r;
                       r.lhs = format_double(d1);
                       r.rhs = format_double(d2);
                       r.defect = d2;
                       r.pass = d1 >= factor * d2 && d1 <= proxy;
                       r.route_meta["reduction"] = d1 / d2;
                       r.route_meta["error_proxy"] = proxy;
                       return r;
                     }});
    }
    const int J = chi.is_even() ? 4 : 3;
    for (double t : {30.5}) {
      Json params{{"check", "log-mean"}, {"chi", chi.label()}, {"J", J}, {"t", t}, {"t2", 2 * t - 0.5}};
      out.push_back({params, [=] {
                       const double d1 = log_mean_defect(t, chi, J).defect;
                       const double d2 = log_mean_defect(2 * t - 0.5, chi, J).defect;
                       CaseResult r;
                       r.lhs = format_double(d1);
                       r.rhs = format_double(d2);
                       r.defect = d2;
                       r.pass = d1 >= factor * d2;
                       r.route_meta["reduction"] = d1 / d2;
                       return r;
                     }});
    }
  }
  return out;
}

struct Entry {
  SuiteInfo info;
  Builder build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"boole", 1, "classical Boole summation defects"}, boole_cases},
      {{"cem", 1, "character Euler-Maclaurin summation defects"}, cem_cases},
      {{"char-boole", 1, "character Boole summation defects"}, char_boole_cases},
      {{"lfunc-routes", 1, "series/hurwitz/integral agreement, partial sums, negative-integer values"},
       lfunc_routes_cases},
      {{"closed-form", 1, "l(1, chi_3) = -2 sqrt(3) pi / 9 by independent routes"}, closed_form_cases},
      {{"lerch", 1, "Lerch-type identity and Gamma* route agreement"}, lerch_cases},
      {{"lfunc-identities", 1, "Taylor, reflection, conjugation and derivative identities of l and psi*"},
       lfunc_identity_cases},
      {{"recip1", 1, "reciprocity of S_p(b,c:chi)"}, recip1_cases},
      {{"recip2", 1, "reciprocity of S^(1), S^(2)"}, recip2_cases},
      {{"integrals", 1, "closed forms of products of character Euler functions"}, integral_cases},
      {{"gf", 1, "generating-function coefficients of the character Euler numbers"}, gf_cases},
      {{"identities", 1, "exact identities of Bernoulli/Euler and character periodic functions"}, identity_cases},
      {{"asymptotics", 1, "decay of the Stirling and log-mean expansions"}, asymptotic_cases},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> s = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return s;
}

std::vector<Case> build_cases(const SuiteConfig& cfg) {
  for (const auto& e : registry()) {
    if (e.info.name == cfg.suite) return e.build(cfg);
  }
  throw ConfigError("unknown suite '" + cfg.suite + "'");
}

}  // namespace charboole::verify
