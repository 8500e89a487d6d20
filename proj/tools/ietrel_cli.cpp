#include "ietrel_cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <thread>

#include "CLI11.hpp"
#include "ietrel/aiet.hpp"
#include "ietrel/errors.hpp"
#include "ietrel/iet.hpp"
#include "ietrel/json_io.hpp"
#include "ietrel/neighborhoods.hpp"
#include "ietrel/random.hpp"
#include "ietrel/rational_tools.hpp"
#include "ietrel/relation.hpp"
#include "svg_plot.hpp"

namespace ietrel::cli {

namespace {

using io::json;

struct Options {
  bool decimal = false;

  std::string file;
  std::string file_b;
  std::string point;
  std::int64_t exponent = 1;
  long q = 0;

  int n = 3;
  std::uint64_t seed = 0;
  bool cubic = false;

  std::string s_file;
  std::string t0_file;
  std::string out_file;

  long q_min = 20;
  long q_max = 2000;
  std::string svg_dir;
  unsigned threads = 0;

  std::string check_file;
  bool standard = false;
  bool print_input = false;
};

json decimals(const std::vector<Scalar>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_decimal());
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Scalar parse_point(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return io::scalar_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("bad scalar: ") + e.what());
    }
  }
  try {
    return Scalar::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw FormatError("bad point '" + text + "': " + e.what());
  }
}

json point_set_json(const PointSet& p, bool decimal) {
  json j = io::to_json(p);
  if (!decimal) return j;
  return {{"exact", j}, {"decimal", decimals(p.points())}};
}

int iet_info(const Options& o, std::ostream& out) {
  const Iet t = io::iet_from_json(io::read_json_file(o.file));
  json j = io::to_json(t);
  j["n"] = t.size();
  j["breakpoints"] = io::to_json(PointSet(t.breakpoints()));
  j["translations"] = json::array();
  for (const auto& x : t.translations()) j["translations"].push_back(io::to_json(x));
  j["inverse_breakpoints"] = io::to_json(PointSet(inverse(t).breakpoints()));
  if (o.decimal) {
    j["lengths_decimal"] = decimals(t.lengths());
    j["translations_decimal"] = decimals(t.translations());
  }
  emit(out, j);
  return kOk;
}

int iet_eval(const Options& o, std::ostream& out) {
  const Iet t = io::iet_from_json(io::read_json_file(o.file));
  const Scalar x = parse_point(o.point);
  Scalar y;
  try {
    y = t(x);
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }
  json j = io::to_json(y);
  if (o.decimal) j = {{"exact", j}, {"decimal", y.to_decimal()}};
  emit(out, j);
  return kOk;
}

int iet_compose(const Options& o, std::ostream& out) {
  const Iet a = io::iet_from_json(io::read_json_file(o.file));
  const Iet b = io::iet_from_json(io::read_json_file(o.file_b));
  emit(out, io::to_json(compose(a, b)));
  return kOk;
}

int iet_power(const Options& o, std::ostream& out) {
  const Iet t = io::iet_from_json(io::read_json_file(o.file));
  emit(out, io::to_json(power(t, o.exponent)));
  return kOk;
}

int iet_xq(const Options& o, std::ostream& out) {
  const Iet t = io::iet_from_json(io::read_json_file(o.file));
  const Scalar alpha = alpha_q(t, o.q);
  json j = {{"q", o.q},
            {"X", point_set_json(x_q(t, o.q), o.decimal)},
            {"Y", point_set_json(y_q(t, o.q), o.decimal)},
            {"Z", point_set_json(z_q(t, o.q), o.decimal)},
            {"alpha", io::to_json(alpha)},
            {"inverse_discontinuities_distinct", inverse_discontinuities_distinct_mod_q(t, o.q)},
            {"discontinuities_distinct", discontinuities_distinct_mod_q(t, o.q)}};
  if (o.decimal) j["alpha_decimal"] = alpha.to_decimal();
  emit(out, j);
  return kOk;
}

int iet_random(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  emit(out, io::to_json(random_iet(rng, o.n, o.cubic)));
  return kOk;
}

int relation_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const Iet s = io::iet_from_json(io::read_json_file(o.s_file));
  const Iet t0 = io::iet_from_json(io::read_json_file(o.t0_file));
  const Certificate cert = certify_relation(s, t0, o.q);
  std::ostream& report = o.out_file.empty() ? err : out;
  if (o.out_file.empty()) {
    emit(out, io::to_json(cert));
  } else {
    io::write_json_file(o.out_file, io::to_json(cert));
  }
  for (const auto& c : cert.checks) report << (c.passed ? "ok     " : "FAILED ") << c.name << '\n';
  report << "k = " << cert.k << ", word length " << cert.word.length()
         << (cert.commuting ? " (U is the identity; word is u)" : "") << '\n';
  return cert.all_passed() ? kOk : kCheckFailed;
}

int relation_verify(const Options& o, std::ostream& out) {
  const Certificate cert = io::certificate_from_json(io::read_json_file(o.file));
  bool all = true;
  for (const auto& c : verify_certificate(cert)) {
    out << (c.passed ? "ok     " : "FAILED ") << c.name << '\n';
    all = all && c.passed;
  }
  out << (all ? "certificate verified" : "certificate rejected") << '\n';
  return all ? kOk : kCheckFailed;
}

int rational_nearest(const Options& o, std::ostream& out) {
  const Iet s = io::iet_from_json(io::read_json_file(o.file));
  const auto approx = nearest_q_rational(s, o.q);
  json j = {{"t0", io::to_json(approx.t0)}, {"delta", io::to_json(approx.delta)}};
  if (o.decimal) j["delta_decimal"] = approx.delta.to_decimal();
  emit(out, j);
  return kOk;
}

int rational_order(const Options& o, std::ostream& out) {
  const Iet t = io::iet_from_json(io::read_json_file(o.file));
  if (!is_q_rational(t, o.q)) throw FormatError("IET is not " + std::to_string(o.q) + "-rational");
  const GridPermutation g = grid_permutation(t, o.q);
  emit(out, {{"q", o.q}, {"order", g.order().get_str()}, {"cycles", g.cycles()}});
  return kOk;
}

double log10_mpz(const mpz_class& z) {
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log10(d) + static_cast<double>(exp2) * std::log10(2.0);
}

int ay_sweep_cmd(const Options& o, std::ostream& out) {
  if (o.q_min < 7 || o.q_max < o.q_min) throw FormatError("need 7 <= qmin <= qmax");
  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) throw std::runtime_error("cannot write " + o.out_file);
  }
  std::ostream& csv = o.out_file.empty() ? out : file;
  const unsigned threads = o.threads ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  csv << "q,delta_exact,delta_decimal,order,bound_exact,bound_decimal,bound_lt_1\n";
  ScatterPlot delta_plot{"delta(q)", "q", "delta", {}};
  ScatterPlot order_plot{"order of T0", "q", "log10 order", {}};
  ScatterPlot bound_plot{"40 q (o + 2) delta", "q", "log10 bound", {}};
  // Chunks keep the output streaming while workers share each chunk.
  constexpr long chunk = 256;
  for (long lo = o.q_min; lo <= o.q_max; lo += chunk) {
    const long hi = std::min(o.q_max, lo + chunk - 1);
    for (const auto& row : ay_sweep(lo, hi, threads)) {
      csv << row.q << ',' << row.delta.to_string() << ',' << row.delta.to_decimal() << ',' << row.order.get_str()
          << ',' << row.bound.to_string() << ',' << row.bound.to_decimal() << ','
          << (row.bound_below_one() ? "true" : "false") << '\n';
      const auto qd = static_cast<double>(row.q);
      const double delta = row.delta.to_double();
      delta_plot.points.emplace_back(qd, delta);
      order_plot.points.emplace_back(qd, log10_mpz(row.order));
      bound_plot.points.emplace_back(qd, std::log10(40.0 * qd) + log10_mpz(row.order + 2) + std::log10(delta));
    }
    csv.flush();
  }
  if (!o.svg_dir.empty()) {
    std::filesystem::create_directories(o.svg_dir);
    const std::filesystem::path dir(o.svg_dir);
    write_scatter_svg((dir / "delta.svg").string(), delta_plot);
    write_scatter_svg((dir / "order.svg").string(), order_plot);
    write_scatter_svg((dir / "bound.svg").string(), bound_plot);
  }
  return kOk;
}

int aiet_pingpong(const Options& o, std::ostream& out) {
  if (o.standard == !o.check_file.empty()) throw FormatError("give exactly one of --check FILE or --standard");
  io::PingPongInput input;
  if (o.standard) {
    auto pair = standard_pingpong_pair();
    input = {std::move(pair.f), std::move(pair.g), std::move(pair.sets)};
  } else {
    input = io::pingpong_from_json(io::read_json_file(o.check_file));
  }
  if (o.print_input) emit(out, io::to_json(input));
  const bool holds = pingpong_check(input.f, input.g, input.sets);
  out << (holds ? "ping-pong hypotheses hold: f and g generate a free group" : "ping-pong hypotheses fail") << '\n';
  return holds ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact interval exchange toolkit: IET algebra, relation certificates, rational sweeps, ping-pong"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  auto bind = [&](CLI::App* cmd, std::function<int()> f) { cmd->callback([&action, f] { action = f; }); };

  auto* iet = app.add_subcommand("iet", "IET algebra")->require_subcommand(1);
  {
    auto* c = iet->add_subcommand("info", "canonical form, breakpoints and translations");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_flag("--decimal", o.decimal, "also print decimals");
    bind(c, [&] { return iet_info(o, out); });
  }
  {
    auto* c = iet->add_subcommand("eval", "image of a point");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_option("x", o.point, "point: p/q or a JSON scalar")->required();
    c->add_flag("--decimal", o.decimal, "also print a decimal");
    bind(c, [&] { return iet_eval(o, out); });
  }
  {
    auto* c = iet->add_subcommand("compose", "a o b");
    c->add_option("a", o.file, "IET JSON")->required();
    c->add_option("b", o.file_b, "IET JSON")->required();
    bind(c, [&] { return iet_compose(o, out); });
  }
  {
    auto* c = iet->add_subcommand("power", "t^k");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_option("k", o.exponent, "exponent, may be negative")->required();
    bind(c, [&] { return iet_power(o, out); });
  }
  {
    auto* c = iet->add_subcommand("xq", "X_q, Y_q, Z_q and alpha_q");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_option("--q", o.q, "grid size")->required()->check(CLI::PositiveNumber);
    c->add_flag("--decimal", o.decimal, "also print decimals");
    bind(c, [&] { return iet_xq(o, out); });
  }
  {
    auto* c = iet->add_subcommand("random", "seeded random IET");
    c->add_option("--n", o.n, "number of intervals")->check(CLI::Range(1, 64));
    c->add_option("--seed", o.seed, "mt19937_64 seed")->required();
    c->add_flag("--cubic", o.cubic, "lengths in Q(a)");
    bind(c, [&] { return iet_random(o, out); });
  }

  auto* rel = app.add_subcommand("relation", "relation certificates")->require_subcommand(1);
  {
    auto* c = rel->add_subcommand("certify", "build a certificate for (S, T0, q)");
    c->add_option("--s", o.s_file, "S as IET JSON")->required();
    c->add_option("--t0", o.t0_file, "q-rational T0 as IET JSON")->required();
    c->add_option("--q", o.q, "grid size")->required()->check(CLI::PositiveNumber);
    c->add_option("--out", o.out_file, "certificate path (stdout if omitted)");
    bind(c, [&] { return relation_certify(o, out, err); });
  }
  {
    auto* c = rel->add_subcommand("verify", "recompute and compare a certificate");
    c->add_option("file", o.file, "certificate JSON")->required();
    bind(c, [&] { return relation_verify(o, out); });
  }

  auto* rat = app.add_subcommand("rational", "q-rational IETs")->require_subcommand(1);
  {
    auto* c = rat->add_subcommand("nearest", "closest q-rational IET with the same permutation");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_option("--q", o.q, "grid size")->required()->check(CLI::PositiveNumber);
    c->add_flag("--decimal", o.decimal, "also print a decimal");
    bind(c, [&] { return rational_nearest(o, out); });
  }
  {
    auto* c = rat->add_subcommand("order", "order and cycles of a q-rational IET");
    c->add_option("file", o.file, "IET JSON")->required();
    c->add_option("--q", o.q, "grid size")->required()->check(CLI::PositiveNumber);
    bind(c, [&] { return rational_order(o, out); });
  }

  auto* ay = app.add_subcommand("ay", "Arnoux-Yoccoz computations")->require_subcommand(1);
  {
    auto* c = ay->add_subcommand("sweep", "delta, order and bound for q in [qmin, qmax]");
    c->add_option("--qmin", o.q_min, "first q (>= 7)");
    c->add_option("--qmax", o.q_max, "last q");
    c->add_option("--out", o.out_file, "CSV path (stdout if omitted)");
    c->add_option("--svg", o.svg_dir, "directory for delta.svg, order.svg, bound.svg");
    c->add_option("--threads", o.threads, "worker threads (0: hardware)");
    bind(c, [&] { return ay_sweep_cmd(o, out); });
  }

  auto* aiet = app.add_subcommand("aiet", "affine IETs")->require_subcommand(1);
  {
    auto* c = aiet->add_subcommand("pingpong", "check the ping-pong hypotheses");
    c->add_option("--check", o.check_file, "ping-pong JSON");
    c->add_flag("--standard", o.standard, "use the built-in pair");
    c->add_flag("--print", o.print_input, "echo the input as JSON");
    bind(c, [&] { return aiet_pingpong(o, out); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return action ? action() : kBadInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const MathError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ietrel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ietrel::cli
