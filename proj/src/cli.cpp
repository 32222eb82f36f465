#include "chaintutte/cli.hpp"

#include <CLI11.hpp>

#include "chaintutte/chain_tutte.hpp"
#include "chaintutte/error.hpp"
#include "chaintutte/g_invariant.hpp"
#include "chaintutte/invariants.hpp"
#include "chaintutte/io.hpp"
#include "chaintutte/valuation.hpp"

namespace chaintutte::cli {

namespace {

struct Settings {
  std::string matroid;
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t max_chains = ComputeOptions{}.max_chains;
  std::uint64_t max_perms = ComputeOptions{}.max_perms;

  int k = -1;
  bool recursive = false;
  bool whitney = false;
  bool universal = false;
  std::string point;
  std::string invariant_name;
  std::string nerve;

  ComputeOptions options() const {
    ComputeOptions o;
    o.threads = threads;
    o.max_chains = max_chains;
    o.max_perms = max_perms;
    return o;
  }
  bool text() const { return format == "text"; }
};

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

std::string g_text(const GInvariant& g) {
  std::string s;
  for (const auto& [key, c] : g.counts) {
    std::string k;
    for (std::size_t i = 0; i < key.size(); ++i) k += (i ? "," : "") + std::to_string(key[i]);
    s += "U(" + k + "): " + c.get_str() + "\n";
  }
  return s;
}

const char* coords_name(Coordinates c) {
  switch (c) {
    case Coordinates::Tutte: return "tutte";
    case Coordinates::Whitney: return "whitney";
    case Coordinates::Universal: return "universal";
  }
  return "tutte";
}

Matroid load_matroid(const Settings& s) { return matroid_from_json(load_json_source(s.matroid)); }

void cmd_chain_tutte(const Settings& s, std::ostream& out) {
  const Matroid m = load_matroid(s);
  const ComputeOptions opts = s.options();
  ChainTuttePoly p;
  if (s.universal) {
    p = universal_chain_tutte(m, s.k, opts);
  } else if (s.recursive) {
    p = chain_tutte_recursive(m, s.k, opts);
    if (s.whitney) {
      p.poly = tutte_to_whitney(p.poly, s.k);
      p.coords = Coordinates::Whitney;
    }
  } else {
    p = s.whitney ? chain_whitney(m, s.k, opts) : chain_tutte(m, s.k, opts);
  }
  if (s.text()) {
    out << p.poly.to_string() << '\n';
    return;
  }
  emit(out, {{"k", p.k},
             {"n", p.n},
             {"rank", p.matroid_rank},
             {"coordinates", coords_name(p.coords)},
             {"poly", p.poly.to_json()}});
}

void cmd_evaluate(const Settings& s, std::ostream& out) {
  nlohmann::json point_json;
  try {
    point_json = nlohmann::json::parse(s.point);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid --point JSON: ") + e.what());
  }
  if (!point_json.is_object()) throw Error(ErrorKind::Parse, "--point must be a JSON object");
  std::map<Variable, mpq_class> point;
  for (const auto& [name, v] : point_json.items()) {
    mpq_class q;
    if (v.is_number_integer()) {
      q = v.get<long>();
    } else if (v.is_string()) {
      if (q.set_str(v.get<std::string>(), 10) != 0)
        throw Error(ErrorKind::Parse, "bad rational \"" + v.get<std::string>() + "\"");
      q.canonicalize();
    } else {
      throw Error(ErrorKind::Parse, "point values must be integers or rational strings");
    }
    point[Variable::parse(name)] = q;
  }
  const Matroid m = load_matroid(s);
  const mpq_class value = chain_tutte(m, s.k, s.options()).poly.evaluate(point);
  if (s.text())
    out << value.get_str() << '\n';
  else
    emit(out, {{"k", s.k}, {"value", value.get_str()}});
}

void cmd_invariant(const Settings& s, std::ostream& out) {
  const Matroid m = load_matroid(s);
  const ComputeOptions opts = s.options();
  const std::string& name = s.invariant_name;
  if (name == "expected-codim") {
    const long long ec = expected_codim(m);
    if (s.text())
      out << ec << '\n';
    else
      emit(out, {{"invariant", name}, {"value", std::to_string(ec)}});
    return;
  }
  if (name == "g-invariant") {
    const GInvariant g = g_invariant(m, opts);
    if (s.text())
      out << g_text(g);
    else
      emit(out, {{"invariant", name}, {"value", g.to_json()}});
    return;
  }
  LaurentPoly p;
  if (name == "mobius-poly")
    p = mobius_poly(m);
  else if (name == "char-poly")
    p = characteristic_poly(m, opts);
  else if (name == "opp-char-poly")
    p = opposite_char_poly(m);
  else if (name == "j-mobius")
    p = j_mobius_poly(m);
  else
    p = ford_s_poly(m);
  if (s.text())
    out << p.to_string() << '\n';
  else
    emit(out, {{"invariant", name}, {"value", p.to_json()}});
}

void cmd_check_valuation(const Settings& s, std::ostream& out) {
  const NerveInput in = nerve_from_json(load_json_source(s.nerve));
  const ValuationReport report = check_valuation(s.invariant_name, in.big, in.nerve, s.k, s.options());
  if (!s.text()) {
    emit(out, report.to_json());
    return;
  }
  out << (report.equal ? "equal" : "not equal") << '\n';
  for (const auto* side : {&report.lhs, &report.rhs}) {
    if (const auto* p = std::get_if<LaurentPoly>(side))
      out << p->to_string() << '\n';
    else
      out << g_text(std::get<GInvariant>(*side));
  }
}

void cmd_validate(const Settings& s, std::ostream& out) {
  const Matroid m = load_matroid(s);
  // Re-checks the axioms on the materialised table, whatever the source.
  if (m.size() <= Matroid::kDenseRankLimit) (void)make_from_rank_table(m.size(), m.rank_table());
  const char* kind = m.is_matroid() ? "matroid" : "polymatroid";
  if (s.text())
    out << "valid " << kind << " on " << m.size() << " elements of rank " << m.rank() << '\n';
  else
    emit(out, {{"valid", true}, {"kind", kind}, {"n", m.size()}, {"rank", m.rank()}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Chain Tutte polynomials of matroids and derived invariants", "chaintutte"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--matroid", s.matroid, "matroid JSON, inline or a file path");
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", s.threads, "worker threads (0 = all cores)");
  app.add_option("--max-chains", s.max_chains, "chain enumeration budget");
  app.add_option("--max-perms", s.max_perms, "permutation budget for the G-invariant");

  auto* chain = app.add_subcommand("chain-tutte", "chain Tutte polynomial T^k");
  chain->add_option("-k", s.k, "chain length")->required()->check(CLI::NonNegativeNumber);
  auto* rec = chain->add_flag("--recursive", s.recursive, "use the deletion/contraction recursion");
  auto* whit = chain->add_flag("--whitney", s.whitney, "Whitney coordinates a_i, b_i");
  auto* uni = chain->add_flag("--universal", s.universal, "universal form in u_i, v_i");
  whit->excludes(uni);
  rec->excludes(uni);

  auto* eval = app.add_subcommand("evaluate", "evaluate T^k at a point");
  eval->add_option("-k", s.k, "chain length")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--point", s.point, "JSON object such as {\"x1\":2,\"y1\":\"1/2\"}")->required();

  auto* inv = app.add_subcommand("invariant", "derived invariant");
  inv->add_option("--name", s.invariant_name, "invariant name")
      ->required()
      ->check(CLI::IsMember({"mobius-poly", "char-poly", "opp-char-poly", "j-mobius", "ford-s",
                             "expected-codim", "g-invariant"}));

  auto* val = app.add_subcommand("check-valuation", "check inclusion-exclusion on a subdivision");
  val->add_option("--nerve", s.nerve, "nerve JSON, inline or a file path")->required();
  val->add_option("--invariant", s.invariant_name, "invariant id")->required();
  val->add_option("-k", s.k, "chain length for chain-tutte / chain-whitney")->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate", "check the rank axioms");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const bool needs_matroid = !val->parsed();
  if (needs_matroid && s.matroid.empty()) {
    err << "--matroid is required for this subcommand\n";
    return 2;
  }

  try {
    if (chain->parsed())
      cmd_chain_tutte(s, out);
    else if (eval->parsed())
      cmd_evaluate(s, out);
    else if (inv->parsed())
      cmd_invariant(s, out);
    else if (val->parsed())
      cmd_check_valuation(s, out);
    else if (validate->parsed())
      cmd_validate(s, out);
  } catch (const Error& e) {
    emit(err, {{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}});
    return 1;
  } catch (const std::bad_alloc&) {
    emit(err, {{"error", {{"kind", "out-of-memory"}, {"message", "allocation failed"}}}});
    return 1;
  }
  return 0;
}

}  // namespace chaintutte::cli
