#include "hsd/cli.hpp"

#include "hsd/error.hpp"
#include "hsd/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace hsd::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

std::string show(const Rational& q, int decimals) {
  if (decimals < 0) return to_string(q);
  return to_string(q) + " (~" + to_decimal(q, decimals) + ")";
}

Scope scope_from(bool real, const std::vector<std::string>& interval) {
  if (real == !interval.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of --real or --interval A B");
  if (real) return Scope::real();
  return Scope::on(parse_rational(interval.at(0)), parse_rational(interval.at(1)));
}

std::string scope_label(const Scope& s) {
  if (s.is_real()) return "R";
  return "[" + to_string(s.interval->first) + ", " + to_string(s.interval->second) + "]";
}

Json scope_json(const Scope& s) {
  if (s.is_real()) return "real";
  return Json::array({to_string(s.interval->first), to_string(s.interval->second)});
}

Scope scope_from_json(const Json& doc) {
  if (doc.is_string() && doc.get<std::string>() == "real") return Scope::real();
  if (doc.is_array() && doc.size() == 2 && doc[0].is_string() && doc[1].is_string()) {
    return Scope::on(parse_rational(doc[0].get<std::string>()), parse_rational(doc[1].get<std::string>()));
  }
  throw Error(ErrorCode::ParseError, "\"scope\" must be \"real\" or [a, b]");
}

void describe(std::ostream& out, const Verdict& v, int decimals) {
  if (v.holds) return;
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, PointwiseViolation>) {
          out << "  pointwise violation at eta = " << show(w.eta, decimals)
              << ": F_Y - F_X = " << show(w.gap, decimals) << " < 0\n";
        } else if constexpr (std::is_same_v<T, BoundaryViolation>) {
          out << "  boundary condition k = " << w.k << ": E[(b-X)^" << w.k - 1 << "] = " << show(w.lhs, decimals)
              << " > E[(b-Y)^" << w.k - 1 << "] = " << show(w.rhs, decimals) << " (difference "
              << show(Rational(w.lhs - w.rhs), decimals) << ")\n";
        } else {
          out << "  moment equality k = " << w.k << " fails: " << show(w.lhs, decimals)
              << " != " << show(w.rhs, decimals) << "\n";
        }
      },
      *v.witness);
}

void write_pair(const ConstructedPair& pair, const fs::path& dir, std::ostream& out) {
  fs::create_directories(dir);
  io::write_file(dir / "X.json", io::to_json(pair.x));
  io::write_file(dir / "Y.json", io::to_json(pair.y));
  io::write_file(dir / "params.json", io::params_json(pair));
  out << "wrote " << (dir / "X.json").string() << ", " << (dir / "Y.json").string() << ", "
      << (dir / "params.json").string() << "\n";
  for (const auto& [k, v] : pair.params) out << "  " << k << " = " << to_string(v) << "\n";
}

ConstructedPair read_pair(const std::string& xpath, const std::string& ypath) {
  return {io::read_distribution(xpath), io::read_distribution(ypath), {}, "files"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact higher-order stochastic dominance checks for discrete distributions", "hsd"};
  app.require_subcommand(1);

  // check
  unsigned order = 0;
  unsigned mpres = 0;
  bool real = false;
  std::vector<std::string> interval;
  bool as_json = false;
  int decimals = -1;
  std::vector<std::string> files;
  auto* check_cmd = app.add_subcommand("check", "Decide (n,m)-stochastic dominance of X over Y");
  check_cmd->add_option("--order", order, "Dominance order n >= 1")->required();
  check_cmd->add_option("--mpres", mpres, "Number m of preserved moments (0 = plain nSD)");
  auto* real_flag = check_cmd->add_flag("--real", real, "Compare on the whole real line");
  auto* iv_opt = check_cmd->add_option("--interval", interval, "Reference interval A B")->expected(2);
  real_flag->excludes(iv_opt);
  check_cmd->add_flag("--json", as_json, "Print the verdict as JSON");
  check_cmd->add_option("--decimal", decimals, "Annotate rationals with a decimal approximation");
  check_cmd->add_option("files", files, "X.json Y.json")->required()->expected(2);

  // boundary
  std::string at;
  auto* boundary_cmd = app.add_subcommand("boundary", "Print E[(b-X)^(k-1)] and E[(b-Y)^(k-1)] for k = 1..n");
  boundary_cmd->add_option("--order", order)->required();
  boundary_cmd->add_option("--at", at, "Right endpoint b")->required();
  boundary_cmd->add_option("--decimal", decimals);
  boundary_cmd->add_flag("--json", as_json);
  boundary_cmd->add_option("files", files, "X.json Y.json")->required()->expected(2);

  // construct
  std::string out_dir = ".";
  std::string eps_text, m_text, c_text, d_text;
  std::vector<std::string> from, to;
  auto* construct_cmd = app.add_subcommand("construct", "Write one of the built-in distribution pairs");
  construct_cmd->require_subcommand(1);
  construct_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
  auto* ex_cmd = construct_cmd->add_subcommand("example1", "Example pair on [0,1]");
  ex_cmd->add_option("--eps", eps_text)->required();
  auto* lemma_cmd = construct_cmd->add_subcommand("lemma", "Lemma sequence pair on [0,9]");
  lemma_cmd->add_option("--m", m_text)->required();
  auto* rescale_cmd = construct_cmd->add_subcommand("rescale", "Map a pair affinely from [a,b] onto [c,d]");
  rescale_cmd->add_option("--from", from)->required()->expected(2);
  rescale_cmd->add_option("--to", to)->required()->expected(2);
  rescale_cmd->add_option("files", files, "X.json Y.json")->required()->expected(2);
  auto* gamma_cmd = construct_cmd->add_subcommand("gamma", "Scale a pair so the [0,d] order-3 boundary binds");
  gamma_cmd->add_option("--c", c_text)->required();
  gamma_cmd->add_option("--d", d_text)->required();
  gamma_cmd->add_option("files", files, "X.json Y.json")->required()->expected(2);
  auto* theorem_cmd = construct_cmd->add_subcommand("theorem", "Pair failing 4SD on [0,c] but holding on [0,d]");
  theorem_cmd->add_option("--c", c_text)->required();
  theorem_cmd->add_option("--d", d_text)->required();
  for (auto* sub : {ex_cmd, lemma_cmd, rescale_cmd, gamma_cmd, theorem_cmd}) {
    sub->add_option("--out", out_dir, "Output directory");
  }

  // eval
  std::string mixture_path;
  bool curve = false;
  std::string curve_from, curve_to;
  unsigned steps = 64;
  auto* eval_cmd = app.add_subcommand("eval", "Exact expected utility, or a sampled difference curve");
  eval_cmd->add_option("--mixture", mixture_path, "Utility mixture JSON");
  eval_cmd->add_flag("--curve", curve, "Print CSV samples of F_Y^[n] - F_X^[n]");
  eval_cmd->add_option("--order", order);
  eval_cmd->add_option("--from", curve_from);
  eval_cmd->add_option("--to", curve_to);
  eval_cmd->add_option("--steps", steps);
  eval_cmd->add_option("--decimal", decimals);
  eval_cmd->add_option("files", files, "X.json [Y.json]")->required();

  // scan
  std::string config_path, csv_path, json_path;
  bool serial = false;
  auto* scan_cmd = app.add_subcommand("scan", "Run a seeded consistency experiment");
  scan_cmd->add_option("--config", config_path)->required();
  scan_cmd->add_option("--csv", csv_path, "Write the count table as CSV");
  scan_cmd->add_option("--json", json_path, "Write the full report as JSON");
  scan_cmd->add_option("--witness-dir", out_dir, "Write discrepancy pairs here");
  scan_cmd->add_flag("--serial", serial, "Use the single-threaded reference path");

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "Re-verify a JSON verdict against its pair");
  witness_cmd->add_option("files", files, "verdict.json X.json Y.json")->required()->expected(3);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check_cmd) {
      const Scope scope = scope_from(real, interval);
      const auto x = io::read_distribution(files[0]);
      const auto y = io::read_distribution(files[1]);
      const Verdict v = check(x, y, order, mpres, scope);
      if (as_json) {
        Json doc = io::to_json(v);
        doc["order"] = order;
        doc["m"] = mpres;
        doc["scope"] = scope_json(scope);
        out << doc.dump() << "\n";
      } else {
        out << "(" << order << "," << mpres << ")-SD on " << scope_label(scope) << ": "
            << (v.holds ? "holds" : "fails") << "\n";
        describe(out, v, decimals);
      }
      return v.holds ? kHolds : kFails;
    }

    if (*boundary_cmd) {
      const auto x = io::read_distribution(files[0]);
      const auto y = io::read_distribution(files[1]);
      const Rational b = parse_rational(at);
      const auto rows = boundary_table(x, y, order, b);
      if (as_json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back({{"k", r.k}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)},
                         {"diff", to_string(Rational(r.lhs - r.rhs))}});
        }
        out << Json{{"b", to_string(b)}, {"rows", arr}}.dump() << "\n";
      } else {
        out << "k\tE[(b-X)^(k-1)]\tE[(b-Y)^(k-1)]\tdifference\n";
        for (const auto& r : rows) {
          out << r.k << "\t" << show(r.lhs, decimals) << "\t" << show(r.rhs, decimals) << "\t"
              << show(Rational(r.lhs - r.rhs), decimals) << "\n";
        }
      }
      return kHolds;
    }

    if (*construct_cmd) {
      ConstructedPair pair = [&] {
        if (*ex_cmd) return example_counter_pair(parse_rational(eps_text));
        if (*lemma_cmd) return lemma_sequence_pair(parse_rational(m_text));
        if (*rescale_cmd) {
          return rescale_pair(read_pair(files[0], files[1]), parse_rational(from[0]), parse_rational(from[1]),
                              parse_rational(to[0]), parse_rational(to[1]));
        }
        if (*gamma_cmd) {
          return gamma_scaled_pair(read_pair(files[0], files[1]), parse_rational(c_text), parse_rational(d_text));
        }
        return interval_counter_pair(parse_rational(c_text), parse_rational(d_text));
      }();
      write_pair(pair, out_dir, out);
      return kHolds;
    }

    if (*eval_cmd) {
      if (curve) {
        if (files.size() != 2 || order < 2) {
          throw Error(ErrorCode::InvalidArgument, "--curve needs --order n >= 2 and X.json Y.json");
        }
        const auto x = io::read_distribution(files[0]);
        const auto y = io::read_distribution(files[1]);
        const Rational lo = curve_from.empty() ? std::min(x.support().min, y.support().min) : parse_rational(curve_from);
        const Rational hi = curve_to.empty() ? std::max(x.support().max, y.support().max) + 1 : parse_rational(curve_to);
        if (!(lo < hi) || steps < 1) throw Error(ErrorCode::InvalidArgument, "need from < to and steps >= 1");
        const PiecewisePolynomial d = difference_pp(x, y, order);
        out << "eta,D,D_decimal\n";
        for (unsigned i = 0; i <= steps; ++i) {
          const Rational eta = lo + (hi - lo) * make_rational(i, steps);
          const Rational v = d(eta);
          out << to_string(eta) << "," << to_string(v) << "," << to_decimal(v, decimals < 0 ? 12 : decimals) << "\n";
        }
        return kHolds;
      }
      if (mixture_path.empty() || files.size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "eval needs --mixture u.json X.json (or --curve)");
      }
      const auto u = io::mixture_from_json(io::read_file(mixture_path));
      const auto x = io::read_distribution(files[0]);
      out << show(mixture_eu(x, u), decimals) << "\n";
      return kHolds;
    }

    if (*scan_cmd) {
      const ExperimentConfig cfg = io::config_from_json(io::read_file(config_path));
      const ConsistencyReport report = serial ? consistency_experiment_serial(cfg) : consistency_experiment(cfg);
      const std::string csv = io::to_csv(report);
      out << csv;
      if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        f << csv;
      }
      if (!json_path.empty()) io::write_file(json_path, io::to_json(report));
      if (out_dir != "." && !report.discrepancies.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < report.discrepancies.size(); ++i) {
          const auto& d = report.discrepancies[i];
          const std::string stem = "witness_" + std::to_string(i);
          io::write_file(fs::path(out_dir) / (stem + "_X.json"), io::to_json(d.x));
          io::write_file(fs::path(out_dir) / (stem + "_Y.json"), io::to_json(d.y));
        }
      }
      return kHolds;
    }

    if (*witness_cmd) {
      const Json doc = io::read_file(files[0]);
      const Verdict claimed = io::verdict_from_json(doc);
      if (!doc.contains("order") || !doc.contains("scope")) {
        throw Error(ErrorCode::ParseError, "verdict must carry \"order\" and \"scope\" (use check --json)");
      }
      const unsigned n = doc["order"].get<unsigned>();
      const unsigned m = doc.contains("m") ? doc["m"].get<unsigned>() : 0U;
      const Scope scope = scope_from_json(doc["scope"]);
      const auto x = io::read_distribution(files[1]);
      const auto y = io::read_distribution(files[2]);
      const Verdict fresh = check(x, y, n, m, scope);
      bool ok = fresh.holds == claimed.holds;
      if (ok && !claimed.holds) ok = witness_reproduces(x, y, n, scope, *claimed.witness);
      out << (ok ? "verified" : "NOT verified") << "\n";
      return ok ? kHolds : kFails;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace hsd::cli
