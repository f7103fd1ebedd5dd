#include "hypercross/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "hypercross/algebra.hpp"
#include "hypercross/cross.hpp"
#include "hypercross/errors.hpp"
#include "hypercross/hurwitz.hpp"
#include "hypercross/rotation.hpp"
#include "hypercross/verify.hpp"

namespace hypercross::cli {

using json = nlohmann::json;

Eigen::VectorXd parse_vector(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  int position = 1;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    char* end = nullptr;
    const double v = token.empty() ? 0.0 : std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw ParseError("malformed vector '" + text + "': component " +
                       std::to_string(position) + " ('" + token + "') is not a number");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
    ++position;
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<long>(values.size()));
}

std::string format_number(double x, int precision) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

namespace {

struct Output {
  std::ostream& out;
  bool as_json = false;
  int precision = 12;

  std::string vec(const Eigen::VectorXd& v) const {
    std::string s;
    for (long i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += format_number(v(i), precision);
    }
    return s;
  }

  void vector(const Eigen::VectorXd& v) const { out << vec(v) << '\n'; }

  void matrix(const Eigen::MatrixXd& m) const {
    for (long i = 0; i < m.rows(); ++i) out << vec(m.row(i).transpose()) << '\n';
  }

  void emit(const json& j) const { out << j.dump() << '\n'; }
};

json to_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) rows.push_back(to_json(Eigen::VectorXd(m.row(i).transpose())));
  return rows;
}

void require_size(const Eigen::VectorXd& v, long n, const std::string& what) {
  if (v.size() != n) {
    throw DimensionError(what + " has " + std::to_string(v.size()) +
                         " components, expected " + std::to_string(n));
  }
}

Hypercomplex to_element(int level, const Eigen::VectorXd& v, const std::string& what) {
  require_size(v, 1L << level, what);
  return Hypercomplex(level, std::vector<double>(v.data(), v.data() + v.size()));
}

std::uint64_t default_seed() {
  const char* env = std::getenv("HYPERCROSS_SEED");
  if (env == nullptr || *env == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw ParseError(std::string("HYPERCROSS_SEED is not an integer: ") + env);
  return v;
}

void print_basis_table(const Output& o, int level) {
  const BasisTable t = basis_table(level);
  const std::string convention =
      "e_i e_j = sign * e_index; doubling (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))";
  if (o.as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.dim(); ++j) {
        row.push_back({{"sign", t(i, j).sign}, {"index", t(i, j).index}});
      }
      rows.push_back(row);
    }
    o.emit({{"command", "table"}, {"level", level}, {"convention", convention}, {"table", rows}});
    return;
  }
  o.out << "# " << convention << '\n';
  const int width = t.dim() > 10 ? 5 : 4;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const std::string cell = to_string(t(i, j));
      o.out << std::string(width - std::min<int>(width, cell.size()), ' ') << cell;
    }
    o.out << '\n';
  }
}

void print_cross_table(const Output& o, int n) {
  const std::string convention = "cross(e_i, e_j) = V(e_j) e_i = e_i x e_j";
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd c = cross(Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
      std::string cell = "0";
      for (int k = 0; k < n; ++k) {
        if (c(k) != 0.0) cell = (c(k) > 0 ? "+e" : "-e") + std::to_string(k + 1);
      }
      cells[i][j] = cell;
    }
  }
  if (o.as_json) {
    o.emit({{"command", "table"}, {"cross", n}, {"convention", convention}, {"table", cells}});
    return;
  }
  o.out << "# " << convention << '\n';
  for (const auto& row : cells) {
    for (const auto& cell : row) o.out << std::string(4 - cell.size(), ' ') << cell;
    o.out << '\n';
  }
}

template <class Clock = std::chrono::steady_clock>
double ns_per_call(std::size_t iters, const std::function<void()>& body) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < iters; ++i) body();
  const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start);
  return elapsed.count() / static_cast<double>(std::max<std::size_t>(iters, 1));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition-algebra arithmetic, cross products and Hurwitz transformations",
               "hypercross"};
  app.require_subcommand(1);
  app.fallthrough();

  Output o{out};
  app.add_flag("--json", o.as_json, "Emit one JSON object instead of plain text");
  app.add_option("--precision", o.precision, "Significant digits for plain output")
      ->check(CLI::Range(1, 17));

  // mul
  int mul_level = 2;
  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand("mul", "Cayley-Dickson product a * b");
  mul->add_option("-k,--level", mul_level, "Algebra level (0..5)")->required();
  mul->add_option("a", mul_a, "Left factor, 2^k comma-separated coefficients")->required();
  mul->add_option("b", mul_b, "Right factor")->required();

  // table
  int table_level = 2;
  int table_cross = 0;
  auto* table = app.add_subcommand("table", "Basis multiplication table");
  auto* table_k = table->add_option("-k,--level", table_level, "Algebra level (0..5)");
  auto* table_c = table->add_option("--cross", table_cross, "Cross-product basis table (3 or 7)");
  table_k->excludes(table_c);

  // cross, crossmat
  int cross_n = 3;
  std::string cross_a, cross_b;
  auto* cross_cmd = app.add_subcommand("cross", "Cross product a x b");
  cross_cmd->add_option("-n", cross_n, "Dimension (3 or 7)")->required();
  cross_cmd->add_option("a", cross_a)->required();
  cross_cmd->add_option("b", cross_b)->required();

  std::string crossmat_r;
  auto* crossmat = app.add_subcommand("crossmat", "Cross-product matrix V_n(r)");
  crossmat->add_option("-n", cross_n, "Dimension (3 or 7)")->required();
  crossmat->add_option("r", crossmat_r)->required();

  // inertia
  std::string inertia_r;
  auto* inertia = app.add_subcommand("inertia", "Inertia matrix |r|^2 I - r r^t");
  inertia->add_option("r", inertia_r)->required();

  // hurwitz
  int hurwitz_m = 4;
  std::string hurwitz_u;
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz matrix H_m(u)");
  hurwitz->add_option("-m", hurwitz_m, "Size (2, 4, 8 or 16)")->required();
  hurwitz->add_option("u", hurwitz_u)->required();

  // transform
  std::string transform_kind, transform_u;
  auto* transform_cmd = app.add_subcommand("transform", "Hurwitz transformation of u");
  transform_cmd->add_option("--kind", transform_kind, "lc, ks, r8r5 or r16r9")
      ->required()
      ->check(CLI::IsMember({"lc", "ks", "r8r5", "r16r9"}));
  transform_cmd->add_option("u", transform_u)->required();

  // rotate
  int rotate_n = 3;
  std::string rotate_axis, rotate_v;
  double rotate_theta = 0.0;
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate v by theta about axis");
  rotate_cmd->add_option("-n", rotate_n, "Dimension (3 or 7)")->required();
  rotate_cmd->add_option("--axis", rotate_axis)->required();
  rotate_cmd->add_option("--theta", rotate_theta, "Angle in radians")->required();
  rotate_cmd->add_option("v", rotate_v)->required();

  // dims
  int dims_max = 100;
  auto* dims = app.add_subcommand("dims", "Admissible cross-product dimensions");
  dims->add_option("--max", dims_max)->required()->check(CLI::PositiveNumber);

  // verify
  std::vector<std::string> verify_suites;
  std::size_t verify_samples = 1000;
  double verify_tol = 0.0;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", verify_suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--samples", verify_samples, "Random samples per identity")
      ->check(CLI::PositiveNumber);
  auto* tol_opt = verify->add_option("--tol", verify_tol, "Override tolerances");
  auto* seed_opt = verify->add_option("--seed", verify_seed, "Sampler seed");

  // bench
  int bench_level = 3;
  std::size_t bench_iters = 100000;
  auto* bench = app.add_subcommand("bench", "Table-driven vs recursive multiply timing");
  bench->add_option("--level", bench_level, "Algebra level (0..5)");
  bench->add_option("--iters", bench_iters, "Multiplications per strategy");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mul) {
      const Hypercomplex a = to_element(mul_level, parse_vector(mul_a), "a");
      const Hypercomplex b = to_element(mul_level, parse_vector(mul_b), "b");
      const Hypercomplex p = cd_multiply(a, b);
      const Eigen::VectorXd v =
          Eigen::Map<const Eigen::VectorXd>(p.coeffs().data(), static_cast<long>(p.dim()));
      if (o.as_json) {
        o.emit({{"command", "mul"}, {"level", mul_level}, {"result", to_json(v)}});
      } else {
        o.vector(v);
      }
    } else if (*table) {
      if (table_c->count() > 0) {
        if (table_cross != 3 && table_cross != 7) {
          throw DimensionError("--cross must be 3 or 7");
        }
        print_cross_table(o, table_cross);
      } else {
        print_basis_table(o, table_level);
      }
    } else if (*cross_cmd) {
      const Eigen::VectorXd a = parse_vector(cross_a), b = parse_vector(cross_b);
      require_size(a, cross_n, "a");
      require_size(b, cross_n, "b");
      const Eigen::VectorXd c = cross(a, b);
      if (o.as_json) {
        o.emit({{"command", "cross"}, {"n", cross_n}, {"result", to_json(c)}});
      } else {
        o.vector(c);
      }
    } else if (*crossmat) {
      const Eigen::VectorXd r = parse_vector(crossmat_r);
      require_size(r, cross_n, "r");
      const Eigen::MatrixXd m = cross_matrix(r).entries;
      if (o.as_json) {
        o.emit({{"command", "crossmat"}, {"n", cross_n}, {"matrix", to_json(m)}});
      } else {
        o.matrix(m);
      }
    } else if (*inertia) {
      const Eigen::MatrixXd m = inertia_tensor(parse_vector(inertia_r)).entries;
      if (o.as_json) {
        o.emit({{"command", "inertia"}, {"matrix", to_json(m)}});
      } else {
        o.matrix(m);
      }
    } else if (*hurwitz) {
      const Eigen::VectorXd u = parse_vector(hurwitz_u);
      require_size(u, hurwitz_m, "u");
      const Eigen::MatrixXd m = hurwitz_matrix(u).entries;
      if (o.as_json) {
        o.emit({{"command", "hurwitz"}, {"m", hurwitz_m}, {"matrix", to_json(m)}});
      } else {
        o.matrix(m);
      }
    } else if (*transform_cmd) {
      const TransformKind kind = parse_transform_kind(transform_kind);
      const TransformResult r = transform(kind, parse_vector(transform_u));
      if (o.as_json) {
        o.emit({{"command", "transform"},
                {"kind", transform_kind},
                {"z", to_json(r.z)},
                {"zeros", r.zeros}});
      } else {
        o.vector(r.z);
      }
    } else if (*rotate_cmd) {
      const Eigen::VectorXd axis = parse_vector(rotate_axis), v = parse_vector(rotate_v);
      require_size(axis, rotate_n, "axis");
      require_size(v, rotate_n, "v");
      const Eigen::VectorXd r = rotate(v, axis, rotate_theta);
      if (o.as_json) {
        o.emit({{"command", "rotate"}, {"n", rotate_n}, {"result", to_json(r)}});
      } else {
        o.vector(r);
      }
    } else if (*dims) {
      const std::vector<int> d = admissible_dimensions(dims_max);
      if (o.as_json) {
        o.emit({{"command", "dims"}, {"max", dims_max}, {"dims", d}});
      } else {
        for (std::size_t i = 0; i < d.size(); ++i) o.out << (i ? " " : "") << d[i];
        o.out << '\n';
      }
    } else if (*verify) {
      VerifyOptions options;
      options.samples = verify_samples;
      options.seed = seed_opt->count() > 0 ? verify_seed : default_seed();
      if (tol_opt->count() > 0) options.tolerance = verify_tol;
      const std::vector<VerifyReport> reports = run_suites(verify_suites, options);
      const auto failed = std::count_if(reports.begin(), reports.end(),
                                        [](const VerifyReport& r) { return !r.passed; });
      if (o.as_json) {
        json list = json::array();
        for (const VerifyReport& r : reports) {
          list.push_back({{"identity", r.identity_name},
                          {"samples", r.samples},
                          {"max_residual", r.max_residual},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed}});
        }
        o.emit({{"command", "verify"},
                {"seed", options.seed},
                {"samples", options.samples},
                {"reports", list},
                {"passed", failed == 0}});
      } else {
        char line[256];
        for (const VerifyReport& r : reports) {
          std::snprintf(line, sizeof line, "%-36s samples=%-6zu max_residual=%.3e tol=%.1e %s\n",
                        r.identity_name.c_str(), r.samples, r.max_residual, r.tolerance,
                        r.passed ? "PASS" : "FAIL");
          o.out << line;
        }
        o.out << (reports.size() - failed) << "/" << reports.size() << " identities passed\n";
      }
      return failed == 0 ? 0 : 1;
    } else if (*bench) {
      SampleRng rng(default_seed());
      const long n = 1L << bench_level;
      const BasisTable& t = cached_basis_table(bench_level);
      const Eigen::VectorXd va = rng.vector(n), vb = rng.vector(n);
      const Hypercomplex a(bench_level, std::vector<double>(va.data(), va.data() + n));
      const Hypercomplex b(bench_level, std::vector<double>(vb.data(), vb.data() + n));
      double checksum = 0.0;
      const double table_ns =
          ns_per_call(bench_iters, [&] { checksum += table_multiply(a, b, t).real(); });
      const double rec_ns = ns_per_call(bench_iters, [&] { checksum += cd_multiply(a, b).real(); });
      if (o.as_json) {
        o.emit({{"command", "bench"},
                {"level", bench_level},
                {"iters", bench_iters},
                {"table_ns_per_mul", table_ns},
                {"recursive_ns_per_mul", rec_ns},
                {"checksum", checksum}});
      } else {
        o.out << "level " << bench_level << ", " << bench_iters << " iterations\n"
              << "table_multiply: " << format_number(table_ns, 4) << " ns/mul\n"
              << "cd_multiply:    " << format_number(rec_ns, 4) << " ns/mul\n"
              << "checksum: " << format_number(checksum, o.precision) << '\n';
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace hypercross::cli
