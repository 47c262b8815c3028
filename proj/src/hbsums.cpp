#include "charboole/hbsums.hpp"

#include <cmath>
#include <numeric>

#include "charboole/errors.hpp"
#include "charboole/quadrature.hpp"

namespace charboole {

const char* to_string(HBConvention c) { return c == HBConvention::proof ? "proof" : "definition"; }
const char* to_string(Recip1Form f) { return f == Recip1Form::corrected ? "corrected" : "printed"; }

long hardy_S(long b, long c) {
  if (b < 1 || c < 1) throw DomainError("hardy_S: b and c must be >= 1");
  long acc = 0;
  for (long n = 1; n < c; ++n) {
    const long e = n + 1 + (b * n) / c;
    acc += (e % 2 == 0) ? 1 : -1;
  }
  return acc;
}

namespace {

void require_params(const HBParams& q, int min_p) {
  if (!q.chi.is_primitive() || q.chi.modulus() < 2 || q.chi.modulus() % 2 == 0) {
    throw HypothesisError("Hardy-Berndt sums need a primitive character with odd modulus k > 1");
  }
  if (q.p < min_p) throw DomainError("Hardy-Berndt sums: p must be >= " + std::to_string(min_p));
  if (q.b < 1 || q.c < 1) throw DomainError("Hardy-Berndt sums: b and c must be >= 1");
}

// Arithmetic backends: Rational for real χ, Q(ζ_d) for complex χ, doubles on request.
struct RationalField {
  using T = Rational;
  T lift(const Rational& r) const { return r; }
  T chi(const DirichletCharacter& x, long n) const { return Rational(x.sign(n)); }
  T fn(const CharPeriodic& f, const Rational& v) const { return f.exact(v); }
  T conj(const T& v) const { return v; }
  ExactOrComplex wrap(const T& v) const { return {v, std::nullopt, {v.to_double(), 0.0}}; }
  T get(const ExactOrComplex& v) const { return *v.exact; }
};

struct CyclotomicField {
  using T = Cyclotomic;
  int d;
  T lift(const Rational& r) const { return Cyclotomic(d, r); }
  T chi(const DirichletCharacter& x, long n) const { return x.cyclotomic(n, d); }
  T fn(const CharPeriodic& f, const Rational& v) const { return f.cyclotomic(v, d); }
  T conj(const T& v) const { return v.conj(); }
  ExactOrComplex wrap(const T& v) const {
    const Cyclotomic r = v.reduced();
    return {std::nullopt, r, r.to_complex()};
  }
  T get(const ExactOrComplex& v) const { return *v.cyclotomic; }
};

struct ComplexField {
  using T = Complex;
  T lift(const Rational& r) const { return {r.to_double(), 0.0}; }
  T chi(const DirichletCharacter& x, long n) const { return x.complex(n); }
  T fn(const CharPeriodic& f, const Rational& v) const { return f.value(v); }
  T conj(const T& v) const { return std::conj(v); }
  ExactOrComplex wrap(const T& v) const { return {std::nullopt, std::nullopt, v}; }
  T get(const ExactOrComplex& v) const { return v.value; }
};

template <class F>
typename F::T alt(const F& f, long n) { return f.lift(Rational((n % 2 == 0) ? 1 : -1)); }

// Runs body(field) on the backend the parameters select.
template <class B>
ExactOrComplex dispatch(const HBParams& q, B&& body) {
  if (q.float_path) {
    ComplexField f;
    return f.wrap(body(f));
  }
  if (q.chi.is_real()) {
    RationalField f;
    return f.wrap(body(f));
  }
  CyclotomicField f{q.chi.value_order()};
  return f.wrap(body(f));
}

// Σ_{n=1}^{ck} χ(n) B̄_{p,χ̄}(n·scale)
template <class F>
typename F::T bernoulli_sum(const F& f, const HBParams& q, const Rational& scale) {
  const CharPeriodic B(PolyKind::bernoulli, q.p, q.chi.conjugate());
  const long N = q.c * q.chi.modulus();
  auto acc = f.lift(Rational(0));
  for (long n = 1; n <= N; ++n) {
    if (q.chi(n).is_zero()) continue;
    acc += f.chi(q.chi, n) * f.fn(B, Rational(n) * scale);
  }
  return acc;
}

// Σ_{n=1}^{ck} (-1)^n χ(n) Ē_{m,χ̄}(bn/c)
template <class F>
typename F::T euler_char_sum(const F& f, const HBParams& q, int m) {
  const CharPeriodic E(PolyKind::euler, m, q.chi.conjugate());
  const long N = q.c * q.chi.modulus();
  auto acc = f.lift(Rational(0));
  for (long n = 1; n <= N; ++n) {
    if (q.chi(n).is_zero()) continue;
    acc += alt(f, n) * f.chi(q.chi, n) * f.fn(E, Rational(q.b * n, q.c));
  }
  return acc;
}

ReciprocityReport finish(ExactOrComplex lhs, ExactOrComplex rhs, double tol, std::string form) {
  ReciprocityReport r;
  r.form = std::move(form);
  if (lhs.exact && rhs.exact) {
    r.exact = true;
    r.exact_defect = *lhs.exact - *rhs.exact;
    r.defect = std::abs(r.exact_defect->to_double());
    r.pass = r.exact_defect->is_zero();
  } else if (lhs.cyclotomic && rhs.cyclotomic) {
    r.exact = true;
    const Cyclotomic d = (*lhs.cyclotomic - *rhs.cyclotomic).reduced();
    r.defect = std::abs(d.to_complex());
    r.pass = d.is_zero();
  } else {
    r.defect = std::abs(lhs.value - rhs.value);
    r.pass = r.defect < tol;
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

SChiResult S_chi(const HBParams& q) {
  require_params(q, 1);
  const long k = q.chi.modulus();
  SChiResult out;
  out.definition = dispatch(q, [&](const auto& f) {
    return bernoulli_sum(f, q, Rational(q.b + q.c * k, 2 * q.c));
  });
  if (q.p >= 2) {
    const bool closed = q.chi.is_real() && std::gcd(q.b, q.c) == 1;
    out.closed_form_used = closed;
    out.modified = dispatch(q, [&](const auto& f) {
      using T = typename std::decay_t<decltype(f)>::T;
      T U = f.lift(Rational(0));
      if (closed) {
        // Σ_{n=1}^{ck} χ(n) B̄_{p,χ}(bn/c) = χ(c) χ(-b) c^{1-p} (k^p - 1) B_p
        const Rational u = Rational(q.chi.sign(q.c) * q.chi.sign(-q.b)) * pow(Rational(q.c), 1 - q.p) *
                           (pow(Rational(k), q.p) - Rational(1)) * bernoulli_number(q.p);
        U = f.lift(u);
      } else {
        U = bernoulli_sum(f, q, Rational(q.b, q.c));
      }
      const T conj2 = f.conj(f.chi(q.chi, 2));
      return conj2 * f.lift(pow(Rational(2), -q.p)) * U -
             f.lift(Rational(q.p) / pow(Rational(2), q.p + 1)) * conj2 * euler_char_sum(f, q, q.p - 1);
    });
  }
  return out;
}

ExactOrComplex S1(const HBParams& q) {
  require_params(q, 0);
  return dispatch(q, [&](const auto& f) {
    const CharPeriodic E(PolyKind::euler, q.p, q.chi.conjugate());
    const long N = q.c * q.chi.modulus();
    const bool proof = q.convention == HBConvention::proof;
    auto acc = f.lift(Rational(0));
    for (long n = proof ? 0 : 1; n <= N; ++n) acc += alt(f, n) * f.fn(E, Rational(q.b * n, q.c));
    return proof ? f.lift(Rational(2)) * acc : acc;
  });
}

ExactOrComplex S2(const HBParams& q) {
  require_params(q, 0);
  return dispatch(q, [&](const auto& f) {
    const long N = q.c * q.chi.modulus();
    auto acc = f.lift(Rational(0));
    for (long n = 1; n <= N; ++n) {
      if (q.chi(n).is_zero()) continue;
      acc += alt(f, n) * f.chi(q.chi, n) * f.lift(periodic_eval(PolyKind::euler, q.p, Rational(q.b * n, q.c)));
    }
    return q.convention == HBConvention::proof ? f.lift(Rational(2)) * acc : acc;
  });
}

ReciprocityReport recip2_defect(const HBParams& q, double tol) {
  require_params(q, 0);
  if ((q.b + q.c) % 2 == 0) throw HypothesisError("recip2: b + c must be odd");
  if (q.chi.at_minus_one() * ((q.p % 2 == 0) ? 1 : -1) != 1) {
    throw HypothesisError("recip2: needs chi(-1)(-1)^p = 1");
  }
  HBParams q1 = q;
  q1.chi = q.chi.conjugate();
  HBParams q2 = q;
  q2.b = q.c;
  q2.c = q.b;
  const ExactOrComplex s1 = S1(q1);
  const ExactOrComplex s2 = S2(q2);
  const DirichletCharacter cb = q.chi.conjugate();
  ExactOrComplex lhs = dispatch(q, [&](const auto& f) {
    return f.lift(pow(Rational(q.c), q.p)) * f.get(s1) + f.lift(pow(Rational(q.b), q.p)) * f.get(s2);
  });
  ExactOrComplex rhs = dispatch(q, [&](const auto& f) {
    auto acc = f.lift(Rational(0));
    for (int j = 0; j <= q.p; ++j) {
      const CharPeriodic E(PolyKind::euler, j, cb);
      const Rational w = Rational(binomial(q.p, j)) * pow(Rational(q.c), j) * pow(Rational(q.b), q.p - j) *
                         poly_coeffs(PolyKind::euler, q.p - j).coeffs[0];
      acc += f.lift(w) * f.fn(E, Rational(0));
    }
    return f.lift(Rational(2)) * acc;
  });
  return finish(std::move(lhs), std::move(rhs), tol, std::string("recip2/") + to_string(q.convention));
}

ReciprocityReport recip1_defect(const HBParams& q, Recip1Form form, bool use_modified, double tol) {
  require_params(q, 2);
  if (q.p % 2 == 0) throw HypothesisError("recip1: p must be odd and > 1");
  if ((q.b + q.c) % 2 == 0) throw HypothesisError("recip1: b + c must be odd");
  const DirichletCharacter& chi = q.chi;
  const DirichletCharacter cb = chi.conjugate();

  auto sp = [&](long b, long c, const DirichletCharacter& x) {
    HBParams r = q;
    r.b = b;
    r.c = c;
    r.chi = x;
    SChiResult s = S_chi(r);
    return use_modified ? *s.modified : s.definition;
  };
  const bool printed = form == Recip1Form::printed;
  const ExactOrComplex sbc = sp(q.b, q.c, chi);
  const ExactOrComplex scb = sp(q.c, q.b, printed ? cb : chi);

  ExactOrComplex lhs = dispatch(q, [&](const auto& f) {
    const auto chim2 = f.chi(chi, -2);
    const auto t1 = f.lift(Rational(q.b) * pow(Rational(q.c), q.p)) * f.get(sbc);
    const auto t2 = f.lift(Rational(q.c) * pow(Rational(q.b), q.p)) * f.get(scb);
    if (printed) return f.conj(chim2) * t1 + chim2 * t2;
    return chim2 * (t1 + t2);
  });
  ExactOrComplex rhs = dispatch(q, [&](const auto& f) {
    auto acc = f.lift(Rational(0));
    for (int j = 1; j <= q.p; ++j) {
      const CharPeriodic Ea(PolyKind::euler, j - 1, printed ? chi : cb);
      const CharPeriodic Eb(PolyKind::euler, q.p - j, cb);
      const Rational w = Rational((j % 2 == 0) ? 1 : -1) * Rational(binomial(q.p - 1, j - 1)) *
                         pow(Rational(q.c), j) * pow(Rational(q.b), q.p + 1 - j);
      acc += f.lift(w) * f.fn(Ea, Rational(0)) * f.fn(Eb, Rational(0));
    }
    const Rational pre = Rational(q.p) / pow(Rational(2), q.p + 1);
    return f.lift(printed ? pre : -pre) * acc;
  });
  return finish(std::move(lhs), std::move(rhs), tol,
                std::string("recip1/") + to_string(form) + (use_modified ? "/modified" : "/definition"));
}

IntegralCheck euler_integral_closed(int l, int p, long b, long c, const DirichletCharacter& chi) {
  if (!chi.is_primitive() || chi.modulus() < 2 || chi.modulus() % 2 == 0) {
    throw HypothesisError("euler_integral_closed: needs a primitive character with odd modulus k > 1");
  }
  if (p < 2 || l < 0 || l > p - 2) throw DomainError("euler_integral_closed: needs 0 <= l <= p - 2");
  if (b < 1 || c < 1) throw DomainError("euler_integral_closed: b and c must be >= 1");
  const long k = chi.modulus();
  const DirichletCharacter cb = chi.conjugate();
  const bool p_even = p % 2 == 0;
  const bool bc_even = (b + c) % 2 == 0;
  if (!p_even && !bc_even) throw HypothesisError("euler_integral_closed: no closed form for p odd and b + c odd");
  if (p_even && bc_even && std::gcd(b, c) != 1) {
    throw HypothesisError("euler_integral_closed: the p even, b + c even form needs gcd(b, c) = 1");
  }

  IntegralCheck out;
  const CharPeriodic A(PolyKind::euler, l, cb);
  const CharPeriodic Bf(PolyKind::euler, p - 2 - l, chi);
  QuadratureSpec spec;
  spec.lower = 0.0;
  spec.upper = static_cast<double>(k);
  spec.add_lattice_breaks(b).add_lattice_breaks(c);
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-14;
  auto qr = integrate_piecewise(
      [&](double x) { return A(static_cast<double>(c) * x) * Bf(static_cast<double>(b) * x); }, spec);
  out.value = qr.value;

  const double bd = static_cast<double>(b);
  const double cd = static_cast<double>(c);
  const double binom = binomial(p - 2, l).get_d();
  if (!p_even) {
    out.branch = "p odd, b+c even";
    out.closed_form = 0.0;
  } else if (!bc_even) {
    out.branch = "p even, b+c odd";
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= l; ++j) {
      const Complex ej = CharPeriodic(PolyKind::euler, j, cb).value(Rational(0));
      const Complex ek = CharPeriodic(PolyKind::euler, p - 1 - j, chi).value(Rational(0));
      acc += ((j % 2 == 0) ? 1.0 : -1.0) * binomial(p - 1, j).get_d() * std::pow(bd / cd, j) * ej * ek;
    }
    out.closed_form = 2.0 * std::pow(-cd / bd, l + 1) / (cd * (p - 1) * binom) * acc;
  } else {
    out.branch = "p even, b+c even";
    const double e = poly_coeffs(PolyKind::euler, p - 1).coeffs_d[0];
    const Complex chis = chi.complex(c) * std::conj(chi.complex(b));
    const double kp = std::pow(static_cast<double>(k), p) - 1.0;
    out.closed_form = 2.0 * ((l % 2 == 0) ? -1.0 : 1.0) * chis / (std::pow(cd, p - l - 1) * std::pow(bd, l + 1)) *
                      kp / binom * e / static_cast<double>(p - 1);
  }
  out.defect = std::abs(out.value - out.closed_form);
  return out;
}

}  // namespace charboole
