#include "regulus/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "regulus/homext.hpp"
#include "regulus/json_io.hpp"
#include "regulus/kronecker.hpp"
#include "regulus/localization.hpp"
#include "regulus/suites.hpp"
#include "regulus/tilting.hpp"

namespace regulus::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "text";
  std::string config_path;
  std::vector<std::string> tube_specs;  // "id:rank"
  std::string pair_path;
  std::vector<std::string> segments;
  std::string quasi_simple;
  int chain_n = 1;
  std::vector<std::string> restrict_tubes;
  std::vector<int> ranks{2, 3, 4};
  int len_bound_mult = 3;
  int hom_max_length = 12;
  std::vector<std::string> suites;
  int max_index = 3;
  std::vector<std::string> points;
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <typename T>
std::string join_named(const std::vector<T>& v, const char* sep = ", ") {
  std::vector<std::string> names;
  for (const auto& x : v) names.push_back(to_string(x));
  return "{" + join(names, sep) + "}";
}

std::optional<TubeConfig> load_config(const Options& o) {
  std::vector<TubeSpec> specs;
  if (!o.config_path.empty()) specs = io::parse_tube_config(io::read_json_file(o.config_path)).tubes();
  for (const auto& t : o.tube_specs) {
    const auto colon = t.rfind(':');
    if (colon == std::string::npos) throw ConfigError("--tube expects id:rank, got '" + t + "'");
    int rank = 0;
    try {
      rank = std::stoi(t.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tube expects id:rank, got '" + t + "'");
    }
    specs.push_back({t.substr(0, colon), rank});
  }
  if (specs.empty()) return std::nullopt;
  return TubeConfig(std::move(specs));
}

TubeConfig require_config(const Options& o) {
  auto c = load_config(o);
  if (!c) throw ConfigError("a tube configuration is required (--config or --tube)");
  return *c;
}

Pair load_pair(const Options& o) {
  if (o.pair_path.empty()) throw ConfigError("--pair is required");
  return io::parse_pair(io::read_json_file(o.pair_path), load_config(o));
}

void emit(std::ostream& out, const Options& o, const Json& body, const std::function<void()>& text) {
  if (o.format == "json")
    out << io::with_schema(body).dump(2) << '\n';
  else
    text();
}

int cmd_homext(const Options& o, bool ext, std::ostream& out) {
  const auto config = require_config(o);
  if (o.segments.size() != 2) throw ConfigError("expected two segments");
  const auto x = parse_segment(config, o.segments[0]);
  const auto y = parse_segment(config, o.segments[1]);
  const int v = ext ? ext_dim(x, y) : hom_dim(x, y);
  emit(out, o, Json{{ext ? "ext" : "hom", v}, {"X", to_string(x)}, {"Y", to_string(y)}},
       [&] { out << v << '\n'; });
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  if (o.pair_path.empty()) throw ConfigError("--pair is required");
  const auto doc = io::read_json_file(o.pair_path);
  const auto config = doc.contains("tubes") ? io::parse_tube_config(doc) : require_config(o);
  std::vector<Segment> y;
  for (const auto& s : doc.value("Y", Json::array())) y.push_back(parse_segment(config, s.get<std::string>()));
  const auto check = check_branch_module(y);
  emit(out, o, Json{{"branch_module", check.ok}, {"diagnostic", check.diagnostic}}, [&] {
    out << (check.ok ? "branch module" : "not a branch module: " + check.diagnostic) << '\n';
  });
  return check.ok ? kOk : kVerificationFailure;
}

int cmd_tilting(const Options& o, std::ostream& out) {
  const auto d = build_tilting(load_pair(o));
  emit(out, o, io::to_json(d), [&] {
    std::vector<std::string> parts;
    for (const auto& p : d.parts) parts.push_back(to_string(p));
    out << "V = " << join_named(d.V) << '\n'
        << "U = " << join_named(d.U) << '\n'
        << "T = " << join(parts, " + ") << '\n'
        << "minimal: " << (is_minimal_tilting(d) ? "yes" : "no") << '\n';
  });
  return kOk;
}

int cmd_cotilting(const Options& o, std::ostream& out) {
  const auto d = build_cotilting(load_pair(o));
  emit(out, o, io::to_json(d), [&] {
    std::vector<std::string> parts;
    for (const auto& p : d.parts) parts.push_back(to_string(p));
    out << "pruefer = " << join_named(d.pruefer_set) << '\n'
        << "adic = " << join_named(d.adic_set) << '\n'
        << "C = " << join(parts, " + ") << '\n'
        << "minimal: " << (is_minimal_cotilting(d) ? "yes" : "no") << '\n';
  });
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto config = require_config(o);
  std::optional<std::vector<std::string>> restrict;
  if (!o.restrict_tubes.empty()) {
    for (const auto& t : o.restrict_tubes) config.rank(t);
    restrict = o.restrict_tubes;
  }
  const auto all = enumerate_branch_modules(config, restrict);
  Json list = Json::array();
  for (const auto& y : all) {
    Json s = Json::array();
    for (const auto& a : y.summands) s.push_back(to_string(a));
    list.push_back(s);
  }
  emit(out, o, Json{{"count", all.size()}, {"branch_modules", list}}, [&] {
    for (const auto& y : all) out << join_named(y.summands) << '\n';
    out << "count: " << all.size() << '\n';
  });
  return kOk;
}

int cmd_localize(const Options& o, std::ostream& out) {
  const auto pair = load_pair(o);
  const auto q = q_set(pair);
  const auto wide = wide_description(q);
  emit(out, o, Json{{"qset", io::to_json(q)}, {"wide", io::to_json(wide)}}, [&] {
    out << "Q = {" << join(q.q_tubes()) << "}\n";
    for (const auto& t : q.tubes) {
      out << "tube " << t.tube << " (rank " << t.rank << (t.in_P ? ", in P" : "") << ")";
      if (t.whole_tube) {
        out << ": whole tube\n";
        continue;
      }
      out << '\n';
      std::vector<Segment> roots;
      for (const auto& w : t.wings) roots.push_back(w.root());
      out << "  wings: " << join_named(roots) << '\n' << "  X = " << join_named(t.x_set) << '\n';
      if (t.in_P) {
        const auto parts = r_set_parts(t.rank, t.wings);
        for (std::size_t j = 0; j < parts.size(); ++j) out << "  R_" << j + 1 << " = " << join_named(parts[j]) << '\n';
      }
      out << "  Q = " << join_named(t.q_set) << '\n';
    }
    for (const auto& t : wide.tubes) {
      out << "M in " << t.tube << ": simples " << join_named(t.simples) << ", rays " << join_named(t.full_rays)
          << ", caps {";
      for (std::size_t i = 0; i < t.caps.size(); ++i)
        out << (i ? ", " : "") << to_string(t.caps[i].first) << "[<=" << t.caps[i].second << "]";
      out << "}\n";
    }
  });
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto pair = load_pair(o);
  const auto s = parse_quasi_simple(pair.config, o.quasi_simple);
  const auto u = compute_U(pair);
  if (!std::binary_search(u.begin(), u.end(), s)) throw ValidationError(to_string(s) + " is not in U");
  const auto q = q_set(pair);
  auto w = prop6_witness(s, q);
  if (o.chain_n > 1) w = pruefer_chain(w, o.chain_n);
  const auto check = verify_witness(w, q);
  if (!check) throw InvariantViolation("witness rejected: " + check.diagnostic);
  emit(out, o, io::to_json(w), [&] {
    out << "target " << to_string(w.target) << '\n';
    if (w.steps.empty()) out << "  generator\n";
    for (const auto& st : w.steps)
      out << "  0 -> " << to_string(st.sub) << " -> " << to_string(st.mid) << " -> " << to_string(st.quot)
          << " -> 0\n";
  });
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.len_bound_mult < 1) throw ConfigError("--len-bound-mult must be >= 1");
  for (int r : o.ranks)
    if (r < 1) throw ConfigError("ranks must be >= 1");
  for (const auto& s : o.suites) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) throw ConfigError("unknown suite " + s);
  }
  VerifyOptions vo;
  vo.ranks = o.ranks;
  vo.len_bound_mult = o.len_bound_mult;
  vo.hom_max_length = o.hom_max_length;
  vo.only = o.suites;
  const auto report = run_verification(vo);
  Json suites = Json::array();
  for (const auto& s : report.suites)
    suites.push_back({{"name", s.name},
                      {"passed", s.passed},
                      {"failed", s.failed},
                      {"failures", s.failures},
                      {"seconds", s.seconds}});
  emit(out, o, Json{{"ok", report.ok()}, {"suites", suites}}, [&] {
    for (const auto& s : report.suites) {
      out << std::left << std::setw(12) << s.name << (s.ok() ? "PASS " : "FAIL ") << s.passed << " passed, "
          << s.failed << " failed, " << std::fixed << std::setprecision(2) << s.seconds << " s\n";
      for (const auto& f : s.failures) out << "    " << f << '\n';
    }
  });
  return report.ok() ? kOk : kVerificationFailure;
}

int cmd_kronecker(const Options& o, std::ostream& out) {
  if (o.max_index < 1) throw ConfigError("--max-index must be >= 1");
  const auto epis = kronecker::epiclass_catalog(o.max_index, o.points);
  const auto silting = kronecker::silting_catalog(o.max_index, o.points);
  Json ejson = Json::array();
  for (const auto& e : epis) ejson.push_back({{"name", e.name()}, {"bireflective", e.bireflective.name()}});
  Json sjson = Json::array();
  std::vector<std::vector<bool>> table;
  for (const auto& t : silting) {
    std::vector<bool> row;
    for (const auto& e : epis) row.push_back(kronecker::extension_check(t, e).value);
    const bool all = kronecker::extends_along_all(t, epis);
    sjson.push_back({{"name", t.name()},
                     {"gen_class", t.gen_class.name()},
                     {"tilting", t.tilting},
                     {"minimal", t.minimal},
                     {"note", t.note},
                     {"row", row},
                     {"extends_along_all", all}});
    table.push_back(std::move(row));
  }
  emit(out, o, Json{{"epiclasses", ejson}, {"silting", sjson}}, [&] {
    std::size_t w = 0;
    for (const auto& t : silting) w = std::max(w, t.name().size());
    for (std::size_t c = 0; c < epis.size(); ++c)
      out << "e" << std::left << std::setw(3) << c + 1 << epis[c].name() << " -> " << epis[c].bireflective.name()
          << '\n';
    out << std::string(w + 2, ' ');
    for (std::size_t c = 0; c < epis.size(); ++c) out << std::right << std::setw(4) << ("e" + std::to_string(c + 1));
    out << "   all\n";
    for (std::size_t r = 0; r < silting.size(); ++r) {
      out << std::left << std::setw(w + 2) << silting[r].name();
      for (bool b : table[r]) out << std::right << std::setw(4) << (b ? "y" : ".");
      out << "   " << (sjson[r]["extends_along_all"].get<bool>() ? "yes" : "no") << '\n';
    }
  });
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tubes, branch modules and minimal tilting modules over tame hereditary algebras", "regulus"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto with_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "Tube configuration JSON")->check(CLI::ExistingFile);
    sub->add_option("--tube", o.tube_specs, "Tube given as id:rank (repeatable)");
  };
  auto with_pair = [&](CLI::App* sub) {
    with_config(sub);
    sub->add_option("--pair", o.pair_path, "Pair JSON")->required()->check(CLI::ExistingFile);
  };

  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y)");
  with_config(hom);
  hom->add_option("segments", o.segments, "Two segments, e.g. t1:S1[2] t1:S2[1]")->expected(2)->required();
  auto* ext = app.add_subcommand("ext", "dim Ext^1(X, Y)");
  with_config(ext);
  ext->add_option("segments", o.segments, "Two segments")->expected(2)->required();

  auto* validate = app.add_subcommand("validate-branch", "Check that Y is a branch module");
  with_pair(validate);
  auto* tilt = app.add_subcommand("build-tilting", "Tilting descriptor of a pair");
  with_pair(tilt);
  auto* cotilt = app.add_subcommand("build-cotilting", "Cotilting descriptor of a pair");
  with_pair(cotilt);

  auto* enumerate = app.add_subcommand("enumerate-branch", "List all branch modules");
  with_config(enumerate);
  enumerate->add_option("--tubes", o.restrict_tubes, "Restrict to these tubes")->delimiter(',');

  auto* localize = app.add_subcommand("localize", "Generator set Q and the wide subcategory M");
  with_pair(localize);

  auto* witness = app.add_subcommand("witness", "Filtration witness for S[r] in M");
  with_pair(witness);
  witness->add_option("--quasi-simple", o.quasi_simple, "Element of U, e.g. t1:S1")->required();
  witness->add_option("--n", o.chain_n, "Extend to S[nr]")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify->add_option("--ranks", o.ranks, "Tube ranks")->delimiter(',');
  verify->add_option("--len-bound-mult", o.len_bound_mult, "Test lengths up to this multiple of the rank");
  verify->add_option("--hom-max-length", o.hom_max_length, "Longest segment in the Hom/Ext suite");
  verify->add_option("--suite", o.suites, "Run only these suites")->delimiter(',');

  auto* kron = app.add_subcommand("kronecker", "Kronecker algebra rule table");
  auto* table = kron->add_subcommand("table", "Extension matrix of silting modules against epiclasses");
  kron->require_subcommand(1);
  table->add_option("--max-index", o.max_index, "Largest preprojective/preinjective index");
  table->add_option("--points", o.points, "Regular point labels")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    if (hom->parsed()) return cmd_homext(o, false, out);
    if (ext->parsed()) return cmd_homext(o, true, out);
    if (validate->parsed()) return cmd_validate(o, out);
    if (tilt->parsed()) return cmd_tilting(o, out);
    if (cotilt->parsed()) return cmd_cotilting(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (localize->parsed()) return cmd_localize(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_kronecker(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const WitnessSearchFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace regulus::cli
