// charboole: evaluate operations and run verification suites.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charboole/characters.hpp"
#include "charboole/errors.hpp"
#include "charboole/eulerfun.hpp"
#include "charboole/hbsums.hpp"
#include "charboole/lfunc.hpp"
#include "charboole/verify.hpp"

using namespace charboole;
namespace vf = charboole::verify;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct CharOpts {
  long modulus = 3;
  std::string spec = "quadratic";
};

void add_char_opts(CLI::App* app, CharOpts& o) {
  app->add_option("--modulus,-k", o.modulus, "character modulus")->capture_default_str();
  app->add_option("--char", o.spec, "'quadratic' (real primitive character) or an index vector like 1,0")
      ->capture_default_str();
}

DirichletCharacter resolve_char(const CharOpts& o) {
  if (o.modulus < 2) throw vf::ConfigError("--modulus must be >= 2");
  if (o.spec == "quadratic" || o.spec == "real") {
    auto c = real_primitive_character(o.modulus);
    if (!c) throw vf::ConfigError("no real primitive character mod " + std::to_string(o.modulus));
    return *c;
  }
  std::vector<long> idx = vf::parse_long_list(o.spec);
  if (idx.size() != generators(o.modulus).size()) {
    throw vf::ConfigError("--char needs " + std::to_string(generators(o.modulus).size()) + " exponents mod " +
                          std::to_string(o.modulus));
  }
  return DirichletCharacter(o.modulus, std::move(idx));
}

void print(const std::string& value, const std::string& route) {
  std::cout << value << "\n" << "route: " << route << "\n";
}

std::string show(Complex z) { return vf::format_complex(z); }

Limit parse_limit(const std::string& s) {
  if (s == "standard") return Limit::standard;
  if (s == "right") return Limit::right;
  if (s == "left") return Limit::left;
  if (s == "average") return Limit::average;
  throw vf::ConfigError("--limit must be standard|right|left|average");
}

HBConvention parse_convention(const std::string& s) {
  if (s == "proof") return HBConvention::proof;
  if (s == "definition") return HBConvention::definition;
  throw vf::ConfigError("--convention must be proof|definition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character Boole summation, alternating L-functions and Hardy-Berndt sums"};
  app.require_subcommand(1);

  // verify
  vf::SuiteConfig cfg;
  std::string format = "json", out_path, moduli, orders;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", cfg.suite, "suite name (see list-suites)")->required();
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--tol", cfg.tol, "override the suite tolerance");
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: CHARBOOLE_JOBS or hardware threads)");
  verify->add_option("--moduli", moduli, "comma list of character moduli, e.g. 3,5");
  verify->add_option("--pmax", cfg.pmax, "largest p in Hardy-Berndt grids");
  verify->add_option("--bcmax", cfg.bcmax, "largest b, c in Hardy-Berndt grids");
  verify->add_option("--orders", orders, "summation orders, e.g. 1..4");

  auto* list_suites = app.add_subcommand("list-suites", "list verification suites");
  long list_k = 0;
  auto* list_chars = app.add_subcommand("list-chars", "print every character mod k as JSON");
  list_chars->add_option("--modulus,-k", list_k, "modulus")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one operation");
  eval->require_subcommand(1);
  CharOpts co;
  double s_re = 0, s_im = 0, a = 0, x = 0;
  std::string method = "hurwitz", xr = "0", ar = "0", limit = "standard", convention = "proof", route = "quotient";
  int l = 0, m = 0, p = 1, n = 0;
  long b = 1, c = 1, N = 100000;
  double tol = 1e-12;

  auto* e_ell = eval->add_subcommand("ell", "l(s, a, chi)");
  e_ell->add_option("--s", s_re, "Re s")->required();
  e_ell->add_option("--sim", s_im, "Im s");
  e_ell->add_option("--a", a, "shift a");
  e_ell->add_option("--method", method, "series|hurwitz|integral")
      ->check(CLI::IsMember({"series", "hurwitz", "integral"}))
      ->capture_default_str();
  e_ell->add_option("--l", l, "integral route order (0: automatic)");
  e_ell->add_option("--tol", tol, "series route tolerance");
  add_char_opts(e_ell, co);

  auto* e_partial = eval->add_subcommand("ell-partial", "sum_{1<=n<=x} (-1)^n chi(n) (n+a)^s via the integral form");
  e_partial->add_option("--x", x)->required();
  e_partial->add_option("--s", s_re)->required();
  e_partial->add_option("--sim", s_im);
  e_partial->add_option("--a", a);
  e_partial->add_option("--l", l)->required();
  add_char_opts(e_partial, co);

  auto* e_negint = eval->add_subcommand("ell-negint", "l(1 - p, a, chi) exactly");
  e_negint->add_option("--p", p)->required();
  e_negint->add_option("--a", ar, "rational a in [0, 1)");
  add_char_opts(e_negint, co);

  auto* e_prime0 = eval->add_subcommand("ell-prime0", "l'(0, chi)");
  add_char_opts(e_prime0, co);

  auto* e_d0 = eval->add_subcommand("ell-derivative0", "l'(0, a, chi) by both routes");
  e_d0->add_option("--a", a)->required();
  add_char_opts(e_d0, co);

  auto* e_cot = eval->add_subcommand("ell-cot", "l(m, chi) from cotangent derivatives");
  e_cot->add_option("--m", m)->required();
  add_char_opts(e_cot, co);

  auto* e_gamma = eval->add_subcommand("gamma-star", "log Gamma*(a, chi)");
  e_gamma->add_option("--a", a)->required();
  e_gamma->add_option("--route", route, "quotient|partial_product|log_formula")
      ->check(CLI::IsMember({"quotient", "partial_product", "log_formula"}))
      ->capture_default_str();
  e_gamma->add_option("--N", N, "partial product length")->capture_default_str();
  add_char_opts(e_gamma, co);

  auto* e_psi = eval->add_subcommand("psi-star", "psi*(a, chi) or its m-th derivative");
  e_psi->add_option("--a", a)->required();
  e_psi->add_option("--m", m, "derivative order");
  add_char_opts(e_psi, co);

  auto* e_ce = eval->add_subcommand("char-euler", "character Euler function at a rational point");
  auto* e_cb = eval->add_subcommand("char-bernoulli", "character Bernoulli function at a rational point");
  for (auto* sc : {e_ce, e_cb}) {
    sc->add_option("--m", m, "order")->required();
    sc->add_option("--x", xr, "rational argument")->capture_default_str();
    sc->add_option("--limit", limit, "standard|right|left|average")->capture_default_str();
    add_char_opts(sc, co);
  }

  auto* e_bp = eval->add_subcommand("bernoulli-poly", "coefficients of B_n(x), ascending");
  auto* e_ep = eval->add_subcommand("euler-poly", "coefficients of E_n(x), ascending");
  for (auto* sc : {e_bp, e_ep}) sc->add_option("--n", n)->required();

  auto* e_hs = eval->add_subcommand("hardy-s", "S(b, c)");
  e_hs->add_option("--b", b)->required();
  e_hs->add_option("--c", c)->required();

  auto* e_sp = eval->add_subcommand("hb-s", "S_p(b, c : chi), definition and modified forms");
  auto* e_s1 = eval->add_subcommand("hb-s1", "S_p^(1)(b, c : chi)");
  auto* e_s2 = eval->add_subcommand("hb-s2", "S_p^(2)(b, c : chi)");
  auto* e_r1 = eval->add_subcommand("recip1", "reciprocity law of S_p");
  auto* e_r2 = eval->add_subcommand("recip2", "reciprocity law of S^(1), S^(2)");
  for (auto* sc : {e_sp, e_s1, e_s2, e_r1, e_r2}) {
    sc->add_option("--p", p)->required();
    sc->add_option("--b", b)->required();
    sc->add_option("--c", c)->required();
    sc->add_option("--convention", convention, "proof|definition")->capture_default_str();
    add_char_opts(sc, co);
  }

  auto* e_int = eval->add_subcommand("integral", "int_0^k E_{l,chibar}(cx) E_{p-2-l,chi}(bx) dx vs closed form");
  e_int->add_option("--l", l)->required();
  e_int->add_option("--p", p)->required();
  e_int->add_option("--b", b)->required();
  e_int->add_option("--c", c)->required();
  add_char_opts(e_int, co);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*list_suites) {
      for (const auto& s : vf::suites()) std::cout << s.name << "\tv" << s.version << "\t" << s.description << "\n";
      return 0;
    }
    if (*list_chars) {
      if (list_k < 2) throw vf::ConfigError("--modulus must be >= 2");
      for (const auto& chi : enumerate_characters(list_k)) std::cout << character_json(chi) << "\n";
      return 0;
    }
    if (*verify) {
      if (!moduli.empty()) cfg.moduli = vf::parse_long_list(moduli);
      if (!orders.empty()) cfg.orders = vf::parse_int_list(orders);
      cfg.validate();
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw vf::ConfigError("cannot open '" + out_path + "' for writing");
      }
      const vf::SuiteReport rep = vf::run_suite(cfg);
      std::ostream& os = out_path.empty() ? std::cout : file;
      os << rep.render(format == "csv" ? vf::Format::csv : vf::Format::json);
      os.flush();
      if (!os) {
        std::cerr << "error: writing the report failed\n";
        return kExitFail;
      }
      std::cerr << rep.suite << ": " << rep.cases.size() << " cases, " << rep.failures
                << " failures, max defect " << vf::format_double(rep.max_defect) << "\n";
      return rep.failures == 0 ? 0 : kExitFail;
    }

    // eval
    const Complex s{s_re, s_im};
    if (*e_ell) {
      const LQuery q{s, a, resolve_char(co), method == "series"    ? LMethod::series
                                             : method == "integral" ? LMethod::integral
                                                                    : LMethod::hurwitz,
                     l, tol};
      const LResult r = ell_eval(q);
      print(show(r.value), r.route + " (error estimate " + vf::format_double(r.error_estimate) + ")");
    } else if (*e_partial) {
      print(show(ell_partial(x, s, a, resolve_char(co), l)), "integral representation, order " + std::to_string(l));
    } else if (*e_negint) {
      print(vf::format_value(ell_special_negint(p, Rational::parse(ar), resolve_char(co))),
            "E_{p-1,chibar}(a)/2 from character Euler numbers");
    } else if (*e_prime0) {
      print(show(ell_prime0(resolve_char(co))), "log-gamma sum");
    } else if (*e_d0) {
      const Derivative0 d = ell_derivative0(a, resolve_char(co));
      print(show(d.gamma_sum), "log-gamma sum; integral form " + show(d.integral));
    } else if (*e_cot) {
      print(show(ell_cot(m, resolve_char(co))), "cotangent derivatives");
    } else if (*e_gamma) {
      const GammaRoute gr = route == "partial_product" ? GammaRoute::partial_product
                            : route == "log_formula"    ? GammaRoute::log_formula
                                                        : GammaRoute::quotient;
      print(vf::format_double(gamma_star({a, resolve_char(co), gr, N})), std::string(to_string(gr)));
    } else if (*e_psi) {
      const auto chi = resolve_char(co);
      if (m == 0) print(show(psi_star(a, chi)), "digamma combination");
      else print(show(psi_star_derivative(m, a, chi)), "polygamma combination, order " + std::to_string(m));
    } else if (*e_ce || *e_cb) {
      const auto chi = resolve_char(co);
      const CharPeriodic f(*e_ce ? PolyKind::euler : PolyKind::bernoulli, m, chi);
      const Rational xv = Rational::parse(xr);
      const Limit lim = parse_limit(limit);
      if (chi.is_real()) print(vf::format_rational(f.exact(xv, lim)), "exact rational");
      else print(show(f.value(xv, lim)), "exact in Q(zeta): " + f.cyclotomic(xv, chi.value_order(), lim).str());
    } else if (*e_bp || *e_ep) {
      const PolySpec& ps = poly_coeffs(*e_bp ? PolyKind::bernoulli : PolyKind::euler, n);
      std::ostringstream os;
      for (std::size_t i = 0; i < ps.coeffs.size(); ++i) os << (i ? " " : "") << ps.coeffs[i].str();
      print(os.str(), "exact coefficients, ascending powers");
    } else if (*e_hs) {
      print(std::to_string(hardy_S(b, c)), "direct sum");
    } else if (*e_sp || *e_s1 || *e_s2 || *e_r1 || *e_r2) {
      const HBParams q{p, b, c, resolve_char(co), parse_convention(convention)};
      if (*e_sp) {
        const SChiResult r = S_chi(q);
        print(vf::format_value(r.definition),
              r.modified ? "definition; modified form " + vf::format_value(*r.modified) +
                               (r.closed_form_used ? " (closed form)" : "")
                         : std::string("definition"));
      } else if (*e_s1) {
        print(vf::format_value(S1(q)), std::string("convention ") + to_string(q.convention));
      } else if (*e_s2) {
        print(vf::format_value(S2(q)), std::string("convention ") + to_string(q.convention));
      } else {
        const ReciprocityReport r = *e_r1 ? recip1_defect(q) : recip2_defect(q);
        print(vf::format_value(r.lhs), r.form + "; rhs " + vf::format_value(r.rhs) + "; defect " +
                                           vf::format_double(r.defect) + (r.pass ? " (pass)" : " (FAIL)"));
        return r.pass ? 0 : kExitFail;
      }
    } else if (*e_int) {
      const IntegralCheck r = euler_integral_closed(l, p, b, c, resolve_char(co));
      print(show(r.value), r.branch + "; closed form " + show(r.closed_form) + "; defect " +
                               vf::format_double(r.defect));
    }
    return 0;
  } catch (const vf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
