#include "univalence/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "univalence/rational.hpp"

namespace univalence {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return value;
}

long long parse_integer(const std::string& text) {
  const double x = parse_double(text);
  if (x != std::floor(x) || std::abs(x) > 1e15) throw ConfigError("not an integer: '" + text + "'");
  return static_cast<long long>(x);
}

std::complex<double> parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ConfigError("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  const std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
  std::string im = cut == std::string::npos ? body : body.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re), parse_double(im)};
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

const char* status_text(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "true";
    case RowStatus::Fail: return "false";
    default: return "skip";
  }
}

ReportRow measured_row(std::vector<double> params, std::string quantity, double bound,
                       double attained, double margin) {
  ReportRow row{std::move(params), std::move(quantity), bound, attained, margin, RowStatus::Fail};
  row.status = margin >= -kMarginTolerance ? RowStatus::Pass : RowStatus::Fail;
  return row;
}

ReportRow skipped_row(std::vector<double> params, const std::string& what, const std::string& why) {
  return {std::move(params), what + " skipped: " + why, std::nullopt, std::nullopt, std::nullopt,
          RowStatus::Skip};
}

ReportRow report_row(std::vector<double> params, const CriterionReport& r) {
  return {std::move(params), r.criterion_name, r.threshold, r.attained, r.margin,
          r.passed ? RowStatus::Pass : RowStatus::Fail};
}

template <typename T>
std::vector<T> axis(const std::optional<std::vector<T>>& given, std::vector<T> fallback) {
  return given ? *given : std::move(fallback);
}

void sort_rows(Report& report) {
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.params < b.params; });
}

// Base tuple shared by every sweep: (v, b, d, lambda, gamma, n).
struct BaseTuple {
  double v, b;
  std::complex<double> d;
  double lambda, gamma;
  int n;

  std::vector<double> params(int m_index) const {
    return {v, b, d.real(), d.imag(), lambda, gamma, static_cast<double>(n),
            static_cast<double>(m_index)};
  }
};

const std::vector<std::string> kBaseNames = {"v",      "b",     "d_re", "d_im",
                                             "lambda", "gamma", "n",    "m_index"};

void for_each_base(const RunConfig& cfg, const std::vector<double>& v_default,
                   const std::vector<int>& n_default, const std::vector<double>& lambda_default,
                   const std::vector<double>& gamma_default,
                   const std::function<void(const BaseTuple&)>& fn) {
  for (const int n : axis(cfg.n, n_default))
    for (const double lambda : axis(cfg.lambda, lambda_default))
      for (const double gamma : axis(cfg.gamma, gamma_default))
        for (const double b : axis(cfg.b, {1.0}))
          for (const auto d : axis(cfg.d, {{1.0, 0.0}}))
            for (const double v : axis(cfg.v, v_default)) fn({v, b, d, lambda, gamma, n});
}

std::vector<double> with(std::vector<double> base, std::initializer_list<double> extra) {
  base.insert(base.end(), extra);
  return base;
}

std::vector<std::string> names_with(std::initializer_list<const char*> extra) {
  std::vector<std::string> names = kBaseNames;
  names.insert(names.end(), extra.begin(), extra.end());
  return names;
}

struct GridStats {
  double ratio_sup = 0.0, ratio_inf = kInf, diff_sup = 0.0, logderiv_sup = 0.0,
         deriv_sup = 0.0, deriv_inf = kInf, second_sup = 0.0;
};

GridStats sample(const NormalizedSeries& f, const DiskGrid& grid) {
  GridStats s;
  for (const cplx z : grid.points()) {
    const EvaluationResult e = evaluate(f, z);
    const cplx over = evaluate_over_z(f, z);
    const double ratio = std::abs(over);
    s.ratio_sup = std::max(s.ratio_sup, ratio);
    s.ratio_inf = std::min(s.ratio_inf, ratio);
    s.diff_sup = std::max(s.diff_sup, std::abs(e.first_derivative - over));
    const double ld = e.value == 0.0 ? kInf : std::abs(z * e.first_derivative / e.value - 1.0);
    s.logderiv_sup = std::max(s.logderiv_sup, ld);
    s.deriv_sup = std::max(s.deriv_sup, std::abs(z * e.first_derivative));
    s.deriv_inf = std::min(s.deriv_inf, std::abs(e.first_derivative));
    s.second_sup = std::max(s.second_sup, std::abs(z * z * e.second_derivative));
  }
  return s;
}

std::vector<BesselParams> bessel_list(const std::vector<double>& vs, double b, cplx d) {
  std::vector<BesselParams> out;
  for (const double v : vs) out.emplace_back(v, b, d);
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

bool Report::all_passed() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ReportRow& r) { return r.status == RowStatus::Fail; });
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const auto range = split(item, ':');
    if (range.size() == 1) {
      out.push_back(parse_double(item));
      continue;
    }
    if (range.size() != 3) throw ConfigError("range must be start:stop:step, got '" + item + "'");
    const double start = parse_double(range[0]), stop = parse_double(range[1]),
                 step = parse_double(range[2]);
    if (!(step > 0.0)) throw ConfigError("range step must be positive in '" + item + "'");
    for (long i = 0;; ++i) {
      double x = start + static_cast<double>(i) * step;
      if (x > stop + 1e-9 * step) break;
      x = std::round(x * 1e12) / 1e12;
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) {
    if (item.find(':') != std::string::npos) {
      for (const double x : parse_real_list(item)) out.emplace_back(x, 0.0);
    } else {
      out.push_back(parse_complex(item));
    }
  }
  return out;
}

std::multimap<std::string, std::string> parse_config_text(const std::string& text) {
  std::multimap<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(number) + ": empty key");
    out.emplace(key, trim(line.substr(eq + 1)));
  }
  return out;
}

const std::vector<std::string>& option_keys() {
  static const std::vector<std::string> keys = {
      "which", "v",     "b",      "d",          "lambda",    "gamma",     "n",
      "mu",    "eta",   "c",      "zeta",       "m-index",   "order",     "radii",
      "angles", "max-radius", "nodes", "tolerance", "max-depth", "seed", "pairs",
      "format", "out"};
  return keys;
}

void set_option(RunConfig& cfg, const std::string& key, const std::vector<std::string>& values) {
  auto joined = [&] {
    std::string all;
    for (std::size_t i = 0; i < values.size(); ++i) all += (i ? "," : "") + values[i];
    return all;
  };
  auto single = [&]() -> const std::string& {
    if (values.size() != 1) throw ConfigError("option '" + key + "' takes exactly one value");
    return values.front();
  };
  auto reals = [&] {
    std::vector<double> out;
    for (const auto& v : values) {
      const auto part = parse_real_list(v);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  auto complexes = [&] {
    std::vector<std::complex<double>> out;
    for (const auto& v : values) {
      const auto part = parse_complex_list(v);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  auto grid = [&]() -> DiskGrid& {
    if (!cfg.grid) cfg.grid = DiskGrid{};
    return *cfg.grid;
  };

  if (key == "which") {
    const std::string w = single();
    if (w != "H" && w != "F" && w != "G" && w != "direct") {
      throw ConfigError("--which must be one of H, F, G, direct");
    }
    cfg.which = w;
  } else if (key == "v") {
    cfg.v = reals();
  } else if (key == "b") {
    cfg.b = reals();
  } else if (key == "lambda") {
    cfg.lambda = reals();
  } else if (key == "gamma") {
    cfg.gamma = reals();
  } else if (key == "n") {
    std::vector<int> ns;
    for (const double x : reals()) {
      if (x != std::floor(x) || x < 0) throw ConfigError("n must be a nonnegative integer");
      ns.push_back(static_cast<int>(x));
    }
    cfg.n = ns;
  } else if (key == "d") {
    cfg.d = complexes();
  } else if (key == "mu") {
    cfg.mu = complexes();
  } else if (key == "eta") {
    cfg.eta = complexes();
  } else if (key == "c") {
    cfg.c = complexes();
  } else if (key == "zeta") {
    cfg.zeta = complexes();
  } else if (key == "m-index") {
    cfg.m_index = static_cast<int>(parse_integer(single()));
    if (cfg.m_index < 1) throw ConfigError("m-index must be >= 1");
  } else if (key == "order") {
    cfg.order = static_cast<int>(parse_integer(single()));
    if (cfg.order < 2) throw ConfigError("order must be >= 2");
  } else if (key == "radii") {
    grid().radii = static_cast<int>(parse_integer(single()));
    if (grid().radii < 1) throw ConfigError("radii must be >= 1");
  } else if (key == "angles") {
    grid().angles = static_cast<int>(parse_integer(single()));
    if (grid().angles < 1) throw ConfigError("angles must be >= 1");
  } else if (key == "max-radius") {
    grid().max_radius = parse_double(single());
    if (!(grid().max_radius > 0.0 && grid().max_radius < 1.0)) {
      throw ConfigError("max-radius must lie in (0, 1)");
    }
  } else if (key == "nodes") {
    cfg.quad.nodes = static_cast<int>(parse_integer(single()));
    if (cfg.quad.nodes < 1) throw ConfigError("nodes must be >= 1");
  } else if (key == "tolerance") {
    cfg.quad.tolerance = parse_double(single());
    if (!(cfg.quad.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  } else if (key == "max-depth") {
    cfg.quad.max_depth = static_cast<int>(parse_integer(single()));
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_integer(single()));
  } else if (key == "pairs") {
    cfg.pair_budget = static_cast<std::uint64_t>(parse_integer(single()));
  } else if (key == "format") {
    cfg.format = single();
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
  } else if (key == "out") {
    cfg.out_path = single();
  } else {
    throw ConfigError("unknown option '" + key + "' (values: " + joined() + ")");
  }
}

Report run_constants() {
  Report report{{"n", "k", "d", "m"}, {}};
  auto exact_row = [&](const Rational& k, const Rational& abs_d, const Rational& expected,
                       bool reciprocal, const std::string& name) {
    const auto q = compute_quantities<Rational>(k, abs_d, Rational(1), Rational(0), 0, 1);
    const Rational bound = logderiv_bound(q);
    const Rational value = reciprocal ? Rational(1) / bound : bound;
    const double e = static_cast<double>(expected), a = static_cast<double>(value);
    ReportRow row{{0.0, static_cast<double>(k), static_cast<double>(abs_d), 1.0},
                  name + " (exact " + to_string(value) + ")",
                  e,
                  a,
                  0.0 - std::abs(e - a),
                  value == expected ? RowStatus::Pass : RowStatus::Fail};
    report.rows.push_back(std::move(row));
  };
  exact_row(Rational(5, 2), Rational(1), Rational(28, 233), false, "logderiv_bound");
  exact_row(Rational(3, 2), Rational(1), Rational(20, 89), false, "logderiv_bound");
  exact_row(Rational(3, 2), Rational(1), Rational(89, 20), true, "F_threshold_factor");

  auto radius_row = [&](double v, cplx d, double expected) {
    const OperatorParams op(0.0, 0.0, 0);
    const BesselParams bessel(v, 1.0, d);
    const double value = exponential_radius(compute_quantities(bessel, op));
    const double gap = std::abs(value - expected);
    report.rows.push_back({{0.0, bessel.k(), d.real(), 1.0},
                           "G_radius",
                           expected,
                           value,
                           0.0 - gap,
                           gap <= 1e-4 ? RowStatus::Pass : RowStatus::Fail});
  };
  radius_row(0.5, 1.0, 1.8959);
  radius_row(-0.5, -1.0, 1.1809);
  return report;
}

Report run_bounds_verify(const RunConfig& cfg) {
  Report report{kBaseNames, {}};
  const DiskGrid grid = cfg.grid.value_or(DiskGrid{});
  for_each_base(cfg, {-0.5, 0.5, 1.5}, {0, 1, 2}, {0.0, 0.5, 1.0}, {0.0, 0.5},
                [&](const BaseTuple& t) {
    const std::vector<double> params = t.params(cfg.m_index);
    std::optional<AdmissibleParams> adm;
    try {
      const BesselParams bessel(t.v, t.b, t.d);
      const OperatorParams op(t.lambda, t.gamma, t.n);
      Admissibility a = check_admissible(bessel, op, cfg.m_index);
      if (!a) {
        report.rows.push_back(skipped_row(params, "tuple", a.reason));
        return;
      }
      adm = std::move(a.params);
    } catch (const DomainError& e) {
      report.rows.push_back(skipped_row(params, "tuple", e.what()));
      return;
    }
    const NormalizedSeries f = operator_phi(adm->bessel, adm->op, cfg.order);
    const GridStats s = sample(f, grid);
    const BoundQuantities& q = adm->bounds;

    auto upper = [&](const char* name, double (*bound)(const BoundQuantities&), double sup) {
      try {
        const double b = bound(q);
        report.rows.push_back(measured_row(params, name, b, sup, b - sup));
      } catch (const DomainError& e) {
        report.rows.push_back(skipped_row(params, name, e.what()));
      }
    };
    auto lower = [&](const char* name, double (*bound)(const BoundQuantities&), double inf) {
      try {
        const double b = bound(q);
        report.rows.push_back(measured_row(params, name, b, inf, inf - b));
      } catch (const DomainError& e) {
        report.rows.push_back(skipped_row(params, name, e.what()));
      }
    };
    upper("ratio_upper", ratio_upper_bound<double>, s.ratio_sup);
    lower("ratio_lower", ratio_lower_bound<double>, s.ratio_inf);
    upper("diff", diff_bound<double>, s.diff_sup);
    upper("logderiv", logderiv_bound<double>, s.logderiv_sup);
    upper("deriv_upper", deriv_upper_bound<double>, s.deriv_sup);
    lower("deriv_lower", deriv_lower_bound<double>, s.deriv_inf);
    upper("second_deriv", second_deriv_bound<double>, s.second_sup);
  });
  sort_rows(report);
  return report;
}

Report run_scan(const RunConfig& cfg) {
  Report report;
  const auto mus = axis(cfg.mu, {{1.0, 0.0}});
  const auto etas = axis(cfg.eta, {{1.0, 0.0}});
  const auto cs = axis(cfg.c, {{0.0, 0.0}});
  const auto zetas = axis(cfg.zeta, {{1.0, 0.0}});
  if (cfg.which == "H") {
    report.param_names = names_with({"c_re", "c_im", "eta_re", "eta_im", "mu_re", "mu_im"});
  } else if (cfg.which == "F") {
    report.param_names = names_with({"mu_re", "mu_im"});
  } else if (cfg.which == "G") {
    report.param_names = names_with({"zeta_re", "zeta_im"});
  } else {
    throw ConfigError("scan supports --which H, F or G");
  }

  for_each_base(cfg, {0.5}, {0}, {0.0}, {0.0}, [&](const BaseTuple& t) {
    const auto base = t.params(cfg.m_index);
    auto attempt = [&](std::vector<double> params, const std::function<CriterionReport()>& run) {
      try {
        report.rows.push_back(report_row(params, run()));
      } catch (const DomainError& e) {
        report.rows.push_back(skipped_row(std::move(params), cfg.which, e.what()));
      }
    };
    if (cfg.which == "H") {
      for (const cplx c : cs)
        for (const cplx eta : etas)
          for (const cplx mu : mus)
            attempt(with(base, {c.real(), c.imag(), eta.real(), eta.imag(), mu.real(), mu.imag()}),
                    [&] {
                      return criterion_H({{BesselParams(t.v, t.b, t.d)},
                                          OperatorParams(t.lambda, t.gamma, t.n),
                                          {mu}, eta, c, cfg.m_index});
                    });
    } else if (cfg.which == "F") {
      for (const cplx mu : mus)
        attempt(with(base, {mu.real(), mu.imag()}), [&] {
          return criterion_F({{BesselParams(t.v, t.b, t.d)},
                              OperatorParams(t.lambda, t.gamma, t.n), mu, cfg.m_index});
        });
    } else {
      for (const cplx zeta : zetas)
        attempt(with(base, {zeta.real(), zeta.imag()}), [&] {
          return criterion_G({BesselParams(t.v, t.b, t.d),
                              OperatorParams(t.lambda, t.gamma, t.n), zeta, cfg.m_index});
        });
    }
  });
  sort_rows(report);
  return report;
}

Report run_criteria(const RunConfig& cfg) {
  Report report;
  const std::vector<double> vs = axis(cfg.v, {0.5});
  if (vs.empty()) throw ConfigError("criteria needs at least one order v");
  const auto first = [](const auto& list, const char* name) {
    if (list.empty()) throw ConfigError(std::string("criteria needs a value for ") + name);
    return list.front();
  };
  const double b = first(axis(cfg.b, {1.0}), "b");
  const cplx d = first(axis(cfg.d, {{1.0, 0.0}}), "d");
  const double lambda = first(axis(cfg.lambda, {0.0}), "lambda");
  const double gamma = first(axis(cfg.gamma, {0.0}), "gamma");
  const int n = first(axis(cfg.n, {0}), "n");
  const OperatorParams op(lambda, gamma, n);
  const double v_min = *std::min_element(vs.begin(), vs.end());
  const std::vector<double> base =
      BaseTuple{v_min, b, d, lambda, gamma, n}.params(cfg.m_index);

  if (cfg.which == "direct") {
    report.param_names = kBaseNames;
    const DiskGrid grid = cfg.grid.value_or(DiskGrid{});
    for (const double v : vs) {
      const auto params = BaseTuple{v, b, d, lambda, gamma, n}.params(1);
      for (const auto& r : direct_criteria_check(BesselParams(v, b, d), op, grid, cfg.order)) {
        report.rows.push_back(report_row(params, r));
      }
    }
  } else if (cfg.which == "H") {
    report.param_names = names_with({"m", "c_re", "c_im", "eta_re", "eta_im"});
    std::vector<cplx> mus = axis(cfg.mu, {{1.0, 0.0}});
    if (mus.size() == 1) mus.assign(vs.size(), mus.front());
    if (mus.size() != vs.size()) throw ConfigError("--mu needs one value or one per --v");
    const cplx eta = first(axis(cfg.eta, {{1.0, 0.0}}), "eta");
    const cplx c = first(axis(cfg.c, {{0.0, 0.0}}), "c");
    const auto r = criterion_H({bessel_list(vs, b, d), op, mus, eta, c, cfg.m_index});
    report.rows.push_back(report_row(
        with(base, {static_cast<double>(vs.size()), c.real(), c.imag(), eta.real(), eta.imag()}),
        r));
  } else if (cfg.which == "F") {
    report.param_names = names_with({"m", "mu_re", "mu_im"});
    const cplx mu = first(axis(cfg.mu, {{1.0, 0.0}}), "mu");
    const auto r = criterion_F({bessel_list(vs, b, d), op, mu, cfg.m_index});
    report.rows.push_back(
        report_row(with(base, {static_cast<double>(vs.size()), mu.real(), mu.imag()}), r));
  } else {
    report.param_names = names_with({"zeta_re", "zeta_im"});
    const cplx zeta = first(axis(cfg.zeta, {{1.0, 0.0}}), "zeta");
    const auto r = criterion_G({BesselParams(v_min, b, d), op, zeta, cfg.m_index});
    report.rows.push_back(report_row(with(base, {zeta.real(), zeta.imag()}), r));
  }
  sort_rows(report);
  return report;
}

Report run_injectivity(const RunConfig& cfg) {
  const std::vector<double> vs = axis(cfg.v, {1.5});
  if (vs.empty()) throw ConfigError("injectivity needs at least one order v");
  const auto first = [](const auto& list, const char* name) {
    if (list.empty()) throw ConfigError(std::string("injectivity needs a value for ") + name);
    return list.front();
  };
  const double b = first(axis(cfg.b, {1.0}), "b");
  const cplx d = first(axis(cfg.d, {{1.0, 0.0}}), "d");
  const OperatorParams op(first(axis(cfg.lambda, {0.0}), "lambda"),
                          first(axis(cfg.gamma, {0.0}), "gamma"), first(axis(cfg.n, {0}), "n"));
  const double v_min = *std::min_element(vs.begin(), vs.end());
  const DiskGrid grid = cfg.grid.value_or(DiskGrid{32, 64, 0.999});

  std::function<cplx(cplx)> op_value;
  std::vector<double> extra;
  if (cfg.which == "H") {
    std::vector<cplx> mus = axis(cfg.mu, {{1.0, 0.0}});
    if (mus.size() == 1) mus.assign(vs.size(), mus.front());
    if (mus.size() != vs.size()) throw ConfigError("--mu needs one value or one per --v");
    const cplx eta = first(axis(cfg.eta, {{1.0, 0.0}}), "eta");
    const HParams p{bessel_list(vs, b, d), op, mus, eta, {0.0, 0.0}, cfg.m_index};
    op_value = [p, &cfg](cplx z) { return integral_H(p, z, cfg.quad, cfg.order).value; };
    extra = {eta.real(), eta.imag()};
  } else if (cfg.which == "F") {
    const cplx mu = first(axis(cfg.mu, {{1.0, 0.0}}), "mu");
    const FParams p{bessel_list(vs, b, d), op, mu, cfg.m_index};
    op_value = [p, &cfg](cplx z) { return integral_F(p, z, cfg.quad, cfg.order).value; };
    extra = {mu.real(), mu.imag()};
  } else if (cfg.which == "G") {
    const cplx zeta = first(axis(cfg.zeta, {{1.0, 0.0}}), "zeta");
    const GParams p{BesselParams(v_min, b, d), op, zeta, cfg.m_index};
    op_value = [p, &cfg](cplx z) { return integral_G(p, z, cfg.quad, cfg.order).value; };
    extra = {zeta.real(), zeta.imag()};
  } else {
    throw ConfigError("injectivity supports --which H, F or G");
  }

  const InjectivityReport inj = empirical_injectivity(op_value, grid, cfg.pair_budget, cfg.seed);
  Report report{names_with({"m", "param_re", "param_im"}), {}};
  auto params = BaseTuple{v_min, b, d, op.lambda(), op.gamma_order(), op.n()}.params(cfg.m_index);
  params.push_back(static_cast<double>(vs.size()));
  params.insert(params.end(), extra.begin(), extra.end());
  report.rows.push_back({params, cfg.which + "_min_difference_ratio", kCollisionThreshold,
                         inj.min_ratio, inj.min_ratio - kCollisionThreshold,
                         inj.collision ? RowStatus::Fail : RowStatus::Pass});
  return report;
}

Report run_command(const RunConfig& cfg) {
  if (cfg.command == "constants") return run_constants();
  if (cfg.command == "bounds-verify") return run_bounds_verify(cfg);
  if (cfg.command == "criteria") return run_criteria(cfg);
  if (cfg.command == "scan") return run_scan(cfg);
  if (cfg.command == "injectivity") return run_injectivity(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

void write_csv(const Report& report, std::ostream& out) {
  for (const auto& name : report.param_names) out << csv_field(name) << ',';
  out << "quantity,bound,attained,margin,pass\n";
  for (const auto& row : report.rows) {
    for (const double p : row.params) out << format_number(p) << ',';
    out << csv_field(row.quantity) << ',' << optional_number(row.bound) << ','
        << optional_number(row.attained) << ',' << optional_number(row.margin) << ','
        << status_text(row.status) << '\n';
  }
}

void write_json(const Report& report, std::ostream& out) {
  auto rows = nlohmann::ordered_json::array();
  auto number = [](const std::optional<double>& x) -> nlohmann::ordered_json {
    if (!x) return nullptr;
    if (!std::isfinite(*x)) return format_number(*x);
    return *x;
  };
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < report.param_names.size(); ++i) {
      obj[report.param_names[i]] = row.params[i];
    }
    obj["quantity"] = row.quantity;
    obj["bound"] = number(row.bound);
    obj["attained"] = number(row.attained);
    obj["margin"] = number(row.margin);
    obj["pass"] = status_text(row.status);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

Report parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  std::vector<std::string> header = csv_split(line);
  constexpr std::size_t kFixed = 5;
  if (header.size() < kFixed) throw ConfigError("CSV header too short");
  Report report;
  report.param_names.assign(header.begin(), header.end() - kFixed);
  const std::size_t np = report.param_names.size();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = csv_split(line);
    if (f.size() != header.size()) throw ConfigError("CSV row has wrong field count");
    ReportRow row;
    for (std::size_t i = 0; i < np; ++i) row.params.push_back(parse_double(f[i]));
    row.quantity = f[np];
    auto opt = [](const std::string& s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return parse_double(s);
    };
    row.bound = opt(f[np + 1]);
    row.attained = opt(f[np + 2]);
    row.margin = opt(f[np + 3]);
    const std::string& st = f[np + 4];
    row.status = st == "true" ? RowStatus::Pass : st == "false" ? RowStatus::Fail : RowStatus::Skip;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace univalence
