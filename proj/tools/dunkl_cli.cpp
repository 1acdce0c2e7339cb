#include <dunkl/dunkl.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace dunkl;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadFlags = 2, kDegenerate = 3, kDomain = 4, kAccuracy = 5 };

struct BadFlag : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw BadFlag("not a number: " + s);
  }
  if (used != s.size()) throw BadFlag("not a number: " + s);
  return v;
}

// "a", "bi", "a+bi", "a-bi"; real parts may be "p/q".
cplx parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw BadFlag("empty complex number");
  if (s.back() != 'i') return parse_real(s);
  s.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  auto imag = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (cut == std::string::npos) return cplx(0, imag(s));
  return cplx(parse_real(s.substr(0, cut)), imag(s.substr(cut)));
}

CVec parse_cvec(const std::string& s) {
  CVec v;
  for (auto& t : split(s, ',')) v.push_back(parse_complex(t));
  return v;
}

// Exact rational from "p/q", an integer or a plain decimal.
Q parse_exact(const std::string& s) {
  try {
    if (s.find('/') != std::string::npos) return parse_rational(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    return parse_rational(digits + "/" + den);
  } catch (const std::invalid_argument&) {
    throw BadFlag("not a rational: " + s);
  }
}

std::vector<int> parse_index(const std::string& s) {
  std::vector<int> out;
  for (auto& t : split(s, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw BadFlag("bad index entry: " + t);
    }
    if (used != t.size() || v < 0) throw BadFlag("bad index entry: " + t);
    out.push_back(v);
  }
  return out;
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

struct JackArgs {
  int n = 1;
  std::string k = "0";
  std::string kind = "E";
  std::string index;
  bool as_json = false;
};

int cmd_jack(const JackArgs& a) {
  Params prm{a.n, parse_exact(a.k), Q(1, 2)};
  auto idx = parse_index(a.index);
  if (static_cast<int>(idx.size()) != a.n) throw BadFlag("--index must have n entries");
  bool sym = a.kind == "P" || a.kind == "C";
  if (sym && !is_partition(idx)) throw BadFlag("--kind " + a.kind + " needs a partition index");
  MPoly p = a.kind == "E"   ? nonsymmetric_jack(idx, prm)
            : a.kind == "L" ? jack_L(idx, prm)
            : a.kind == "P" ? symmetric_jack(idx, prm)
                            : jack_C(idx, prm);
  if (!a.as_json) {
    std::cout << p.to_string() << "\n";
    return kOk;
  }
  json terms = json::object();
  for (auto& [e, c] : p.terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    terms[key] = c.get_str();
  }
  json out{{"n", a.n}, {"k", prm.k.get_str()}, {"kind", a.kind}, {"index", idx}, {"text", p.to_string()},
           {"terms", terms}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

struct EvalArgs {
  std::string object;
  int n = 1;
  std::string k = "0";
  std::string nu, alpha, w, z;
  int degree = 0;
  int quad_points = 80;
  double tol = 1e-6;
  std::string oracle;
};

int cmd_eval(const EvalArgs& a) {
  const Q k = parse_exact(a.k);
  const int n = a.n;
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw BadFlag(std::string("--object ") + a.object + " needs " + flag);
    return v;
  };
  auto vec = [&](const std::string& v, const char* flag) {
    CVec r = parse_cvec(need(v, flag));
    if (static_cast<int>(r.size()) != n) throw BadFlag(std::string(flag) + " must have n entries");
    return r;
  };
  json echo{{"object", a.object}, {"n", n}, {"k", k.get_str()}};
  if (!a.nu.empty()) echo["nu"] = a.nu;
  if (!a.alpha.empty()) echo["alpha"] = a.alpha;
  if (!a.w.empty()) echo["w"] = a.w;
  if (!a.z.empty()) echo["z"] = a.z;
  echo["degree"] = a.degree;
  echo["quad_points"] = a.quad_points;
  echo["tol"] = a.tol;

  cplx value = 0;
  double diag = 0;
  bool budget_met = true;
  json extra = json::object();
  const QuadratureSpec spec{a.quad_points};

  auto series = [&](const SeriesValue& s) {
    value = s.value;
    diag = s.last_layer / std::max(std::abs(s.value), 1e-300);
    budget_met = s.tail_reached && diag <= a.tol;
    extra["degree_used"] = s.degree_used;
  };
  auto quad = [&](const QuadResult& r) {
    value = r.value;
    diag = r.diagnostic / std::max(std::abs(r.value), 1e-300);
    budget_met = diag <= a.tol;
    extra["evaluations"] = r.evaluations;
  };

  if (a.object == "dunkl_kernel") {
    Params prm{n, k, Q(1, 2)};
    series(dunkl_kernel_A(vec(a.w, "--w"), vec(a.z, "--z"), TruncationConfig{a.degree ? a.degree : 30, 1e-16}, prm));
  } else if (a.object == "bessel_E" || a.object == "bessel_J") {
    Params prm{n, k, Q(1, 2)};
    cplx nu = parse_complex(need(a.nu, "--nu"));
    series(bessel_kernel(a.object == "bessel_E" ? BesselKind::E : BesselKind::J, nu, vec(a.w, "--w"), vec(a.z, "--z"),
                         TruncationConfig{a.degree ? a.degree : 30, 1e-16}, prm));
  } else if (a.object == "kbessel") {
    Params prm{n, k, Q(1, 2)};
    cplx nu = parse_complex(need(a.nu, "--nu"));
    CVec w = vec(a.w, "--w"), z = vec(a.z, "--z");
    quad(kbessel(nu, w, z, spec, prm));
    if (a.oracle == "classical") {
      if (n != 1 || nu.imag() != 0 || w[0].imag() != 0 || z[0].imag() != 0)
        throw BadFlag("--oracle classical needs n = 1 and real nu, w, z");
      double wr = w[0].real(), zr = z[0].real(), nr = nu.real();
      extra["oracle"] = cjson(2 * std::pow(zr / wr, nr / 2) * boost::math::cyl_bessel_k(nr, 2 * std::sqrt(wr * zr)));
    }
  } else if (a.object == "hankel") {
    Params prm{n, k, Q(1, 2)};
    cplx nu = parse_complex(need(a.nu, "--nu"));
    CVec z = vec(a.z, "--z"), w = vec(a.w, "--w");
    TruncationConfig tr{a.degree ? a.degree : default_series_degree(n), 1e-16};
    quad(hankel(kernel_family(z, prm), nu, w, spec, tr, prm));
    extra["transformed"] = "e_z(x) = E^A(x, -z)";
  } else if (a.object == "gamma_n") {
    CVec z = !a.z.empty() ? vec(a.z, "--z") : CVec(n, parse_complex(need(a.alpha, "--alpha or --z")));
    value = gamma_n(z, k.get_d());
  } else if (a.object == "zeta") {
    Q nu = a.nu.empty() ? k * (n - 1) + 1 : parse_exact(a.nu);
    Params prm{n, k, nu};
    cplx alpha = parse_complex(need(a.alpha, "--alpha"));
    GaussPoly g = GaussPoly::gaussian(n);
    extra["function"] = "exp(-|x|^2)";
    if (alpha.real() > prm.mu0d()) {
      auto r = zeta_integral(g, alpha, spec, prm);
      quad(r);
      extra["normalized"] = cjson(r.value / gamma_n(alpha, n, prm.kd()));
    } else {
      auto r = zeta_distribution(g, alpha, -1, spec, prm);
      cplx G = gamma_n(alpha, n, prm.kd());
      value = r.value * G;
      diag = r.diagnostic / std::max(std::abs(r.value), 1e-300);
      budget_met = diag <= a.tol;
      extra["normalized"] = cjson(r.value);
      extra["m_used"] = r.m_used;
    }
  } else {
    throw BadFlag("unknown --object " + a.object);
  }

  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw IllConditioned("non-finite value");
  json out{{"value", cjson(value)}, {"diagnostic", diag}};
  for (auto& [key, v] : extra.items()) out[key] = v;
  out["config_echo"] = echo;
  std::cout << out.dump(2) << "\n";
  return budget_met ? kOk : kAccuracy;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int n = 0;
  std::string k;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.suite = a.suite;
  opt.seed = a.seed;
  opt.n = a.n;
  if (!a.k.empty()) opt.k = parse_exact(a.k);
  auto results = run_suite(opt);
  json checks = json::array();
  for (auto& r : results) {
    json c{{"check_id", r.check_id},   {"paper_anchor", r.paper_anchor}, {"status", r.status},
           {"residual", r.residual}, {"tolerance", r.tolerance}};
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(c);
  }
  json report{{"schema", 1}, {"suite", a.suite}, {"seed", a.seed}, {"n", a.n}, {"k", opt.k ? opt.k->get_str() : ""},
              {"checks", checks}};
  const std::string text = report.dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw BadFlag("cannot write " + a.out);
    f << text;
  }
  return all_passed(results) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials, Dunkl kernels and zeta distributions on the positive orthant"};
  app.require_subcommand(1);

  JackArgs ja;
  auto* jack = app.add_subcommand("jack", "print a Jack polynomial");
  jack->add_option("--n", ja.n, "number of variables")->required()->check(CLI::Range(1, 8));
  jack->add_option("--k", ja.k, "multiplicity as p/q");
  jack->add_option("--kind", ja.kind, "E, P, C or L")->check(CLI::IsMember({"E", "P", "C", "L"}));
  jack->add_option("--index", ja.index, "composition or partition, comma separated")->required();
  jack->add_flag("--json", ja.as_json, "emit exponent to coefficient JSON");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel, transform or constant");
  eval->add_option("--object", ea.object, "object to evaluate")
      ->required()
      ->check(CLI::IsMember({"dunkl_kernel", "bessel_E", "bessel_J", "kbessel", "hankel", "gamma_n", "zeta"}));
  eval->add_option("--n", ea.n, "number of variables")->check(CLI::Range(1, 8));
  eval->add_option("--k", ea.k, "multiplicity as p/q");
  eval->add_option("--nu", ea.nu, "index, complex a+bi (zeta: rational)");
  eval->add_option("--alpha", ea.alpha, "zeta or gamma argument, complex a+bi");
  eval->add_option("--w", ea.w, "comma separated complex vector");
  eval->add_option("--z", ea.z, "comma separated complex vector");
  eval->add_option("--degree", ea.degree, "series truncation degree")->check(CLI::NonNegativeNumber);
  eval->add_option("--quad-points", ea.quad_points, "quadrature points per axis")->check(CLI::Range(4, 400));
  eval->add_option("--tol", ea.tol, "accuracy budget")->check(CLI::PositiveNumber);
  eval->add_option("--oracle", ea.oracle, "independent reference value")->check(CLI::IsMember({"classical"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the verification suite and print a JSON report");
  verify->add_option("--suite", va.suite, "symbolic, quadrature, zeta or all")
      ->check(CLI::IsMember({"symbolic", "quadrature", "zeta", "all"}));
  verify->add_option("--seed", va.seed, "seed for the random rational draws");
  verify->add_option("--n", va.n, "restrict to one rank")->check(CLI::Range(1, 3));
  verify->add_option("--k", va.k, "fixed multiplicity as p/q");
  verify->add_option("--out", va.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  try {
    if (*jack) return cmd_jack(ja);
    if (*eval) return cmd_eval(ea);
    return cmd_verify(va);
  } catch (const DegenerateMultiplicity& e) {
    std::cerr << "degenerate multiplicity: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "accuracy budget unmet: " << e.what() << "\n";
    return kAccuracy;
  }
}
