#include "hsd/io.hpp"

#include "hsd/error.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace hsd::io {

Json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> seen;
  std::string duplicate;
  Json::parser_callback_t cb = [&](int /*depth*/, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        seen.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        if (!seen.empty()) seen.pop_back();
        break;
      case Json::parse_event_t::key:
        if (!seen.empty() && !seen.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end(), cb);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!duplicate.empty()) throw Error(ErrorCode::ParseError, "duplicate key \"" + duplicate + "\"");
  return doc;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_strict(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_field(const Json& v) {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, "rationals must be JSON strings, got " + v.dump());
  return parse_rational(v.get<std::string>());
}

unsigned unsigned_field(const Json& v) {
  if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, "expected a nonnegative integer, got " + v.dump());
  return v.get<unsigned>();
}

}  // namespace

Json to_json(const DiscreteDistribution& d) {
  Json atoms = Json::array();
  for (const auto& a : d.atoms()) atoms.push_back({{"x", to_string(a.x)}, {"p", to_string(a.p)}});
  return {{"atoms", atoms}};
}

DiscreteDistribution distribution_from_json(const Json& doc) {
  const Json& atoms = field(doc, "atoms");
  if (!atoms.is_array()) throw Error(ErrorCode::ParseError, "\"atoms\" must be an array");
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& a : atoms) pairs.emplace_back(rational_field(field(a, "x")), rational_field(field(a, "p")));
  if (pairs.empty()) throw Error(ErrorCode::Empty, "\"atoms\" is empty");
  return DiscreteDistribution::from_pairs(pairs);
}

DiscreteDistribution read_distribution(const std::filesystem::path& path) {
  return distribution_from_json(read_file(path));
}

Json to_json(const Verdict& v) {
  Json w = nullptr;
  if (v.witness) {
    w = std::visit(
        [](const auto& x) -> Json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PointwiseViolation>) {
            return {{"kind", "pointwise"}, {"eta", to_string(x.eta)}, {"gap", to_string(x.gap)}};
          } else if constexpr (std::is_same_v<T, BoundaryViolation>) {
            return {{"kind", "boundary"}, {"k", x.k}, {"lhs", to_string(x.lhs)}, {"rhs", to_string(x.rhs)}};
          } else {
            return {{"kind", "moment"}, {"k", x.k}, {"lhs", to_string(x.lhs)}, {"rhs", to_string(x.rhs)}};
          }
        },
        *v.witness);
  }
  return {{"holds", v.holds}, {"witness", w}};
}

Verdict verdict_from_json(const Json& doc) {
  const Json& holds = field(doc, "holds");
  if (!holds.is_boolean()) throw Error(ErrorCode::ParseError, "\"holds\" must be a boolean");
  const Json& w = field(doc, "witness");
  if (holds.get<bool>()) {
    if (!w.is_null()) throw Error(ErrorCode::ParseError, "a holding verdict carries no witness");
    return Verdict::pass();
  }
  const Json& kind = field(w, "kind");
  if (kind == "pointwise") {
    return Verdict::fail(PointwiseViolation{rational_field(field(w, "eta")), rational_field(field(w, "gap"))});
  }
  if (kind == "boundary") {
    return Verdict::fail(BoundaryViolation{unsigned_field(field(w, "k")), rational_field(field(w, "lhs")),
                                           rational_field(field(w, "rhs"))});
  }
  if (kind == "moment") {
    return Verdict::fail(MomentMismatch{unsigned_field(field(w, "k")), rational_field(field(w, "lhs")),
                                        rational_field(field(w, "rhs"))});
  }
  throw Error(ErrorCode::ParseError, "unknown witness kind " + kind.dump());
}

Json to_json(const UtilityMixture& u) {
  Json terms = Json::array();
  for (const auto& t : u.terms()) terms.push_back({{"w", to_string(t.weight)}, {"eta", to_string(t.eta)}});
  return {{"order", u.order()}, {"terms", terms}, {"affine", {{"c0", to_string(u.c0())}, {"c1", to_string(u.c1())}}}};
}

UtilityMixture mixture_from_json(const Json& doc) {
  const unsigned order = unsigned_field(field(doc, "order"));
  std::vector<UtilityMixture::Term> terms;
  if (doc.contains("terms")) {
    const Json& ts = doc["terms"];
    if (!ts.is_array()) throw Error(ErrorCode::ParseError, "\"terms\" must be an array");
    for (const auto& t : ts) terms.push_back({rational_field(field(t, "w")), rational_field(field(t, "eta"))});
  }
  Rational c0(0), c1(0);
  if (doc.contains("affine")) {
    const Json& af = doc["affine"];
    if (af.contains("c0")) c0 = rational_field(af["c0"]);
    if (af.contains("c1")) c1 = rational_field(af["c1"]);
  }
  return UtilityMixture(order, std::move(terms), std::move(c0), std::move(c1));
}

Json to_json(const ExperimentConfig& cfg) {
  Json doc = {{"seed", cfg.seed},
              {"trials", cfg.trials},
              {"max_atoms", cfg.max_atoms},
              {"denominator_bound", cfg.denominator_bound},
              {"interval", {to_string(cfg.a), to_string(cfg.b)}},
              {"extended_right", to_string(cfg.extended())},
              {"orders", cfg.orders},
              {"degrees", cfg.degrees},
              {"equalize_means", cfg.equalize_means},
              {"injection_rate", to_string(cfg.injection_rate)},
              {"max_witnesses", cfg.max_witnesses}};
  return doc;
}

ExperimentConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  static const std::set<std::string> known = {"seed",    "trials",  "max_atoms",      "denominator_bound",
                                              "interval", "extended_right", "orders", "degrees",
                                              "equalize_means", "injection_rate", "max_witnesses"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw Error(ErrorCode::ParseError, "unknown config field \"" + key + "\"");
  }
  ExperimentConfig cfg;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"seed\" must be a nonnegative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("trials")) cfg.trials = unsigned_field(doc["trials"]);
  if (doc.contains("max_atoms")) cfg.max_atoms = unsigned_field(doc["max_atoms"]);
  if (doc.contains("denominator_bound")) cfg.denominator_bound = unsigned_field(doc["denominator_bound"]);
  if (doc.contains("interval")) {
    const Json& iv = doc["interval"];
    if (!iv.is_array() || iv.size() != 2) throw Error(ErrorCode::ParseError, "\"interval\" must be [a, b]");
    cfg.a = rational_field(iv[0]);
    cfg.b = rational_field(iv[1]);
  }
  if (doc.contains("extended_right")) cfg.extended_right = rational_field(doc["extended_right"]);
  auto list = [](const Json& v) {
    if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected an array of integers");
    std::vector<unsigned> out;
    for (const auto& e : v) out.push_back(unsigned_field(e));
    return out;
  };
  if (doc.contains("orders")) cfg.orders = list(doc["orders"]);
  if (doc.contains("degrees")) cfg.degrees = list(doc["degrees"]);
  if (doc.contains("equalize_means")) {
    if (!doc["equalize_means"].is_boolean()) throw Error(ErrorCode::ParseError, "\"equalize_means\" must be boolean");
    cfg.equalize_means = doc["equalize_means"].get<bool>();
  }
  if (doc.contains("injection_rate")) cfg.injection_rate = rational_field(doc["injection_rate"]);
  if (doc.contains("max_witnesses")) cfg.max_witnesses = unsigned_field(doc["max_witnesses"]);
  cfg.validate();
  return cfg;
}

Json to_json(const ConsistencyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"m", r.m},
                    {"comparison", std::string(to_string(r.comparison))},
                    {"both_hold", r.both_hold},
                    {"both_fail", r.both_fail},
                    {"narrow_only", r.narrow_only},
                    {"wide_only", r.wide_only},
                    {"mean_violations", r.mean_violations}});
  }
  Json witnesses = Json::array();
  for (const auto& d : report.discrepancies) {
    witnesses.push_back({{"trial", d.trial},
                         {"n", d.n},
                         {"m", d.m},
                         {"comparison", std::string(to_string(d.comparison))},
                         {"injected", d.injected},
                         {"narrow_holds", d.narrow_holds},
                         {"wide_holds", d.wide_holds},
                         {"X", to_json(d.x)},
                         {"Y", to_json(d.y)}});
  }
  return {{"config", to_json(report.config)},
          {"injected_trials", report.injected_trials},
          {"rows", rows},
          {"discrepancies", witnesses}};
}

std::string to_csv(const ConsistencyReport& report) {
  std::ostringstream os;
  os << "n,m,comparison,both_hold,both_fail,narrow_only,wide_only,mean_violations\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.m << ',' << to_string(r.comparison) << ',' << r.both_hold << ',' << r.both_fail << ','
       << r.narrow_only << ',' << r.wide_only << ',' << r.mean_violations << '\n';
  }
  return os.str();
}

Json params_json(const ConstructedPair& pair) {
  Json params = Json::object();
  for (const auto& [k, v] : pair.params) params[k] = to_string(v);
  return {{"provenance", pair.provenance}, {"params", params}};
}

}  // namespace hsd::io
