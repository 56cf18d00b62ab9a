#include "aarp/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "aarp/closure.hpp"
#include "aarp/errors.hpp"

namespace aarp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Rational spec_rational(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw ParseError("theory", e.what());
  }
}

Point spec_point(const std::string& s) {
  Point p;
  for (const auto& part : split(s, ',')) p.push_back(spec_rational(part));
  return p;
}

std::pair<std::string, std::string> head_body(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

Json verdict_report(const Verdict& v, const Universe& u) { return verdict_to_json(v, u); }

Relation random_relation(std::mt19937_64& rng, std::size_t n) {
  Relation r = Relation::diagonal(n);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (coin(rng)) r.insert(x, y);
  return r;
}

std::vector<Transform> sample_elements(const Theory& t, std::size_t samples, std::mt19937_64& rng) {
  std::vector<Transform> out;
  if (t.enumerable()) {
    out = t.elements();
    std::shuffle(out.begin(), out.end(), rng);
    if (out.size() > samples) out.resize(samples);
    return out;
  }
  std::uniform_int_distribution<long> num(1, 12), den(1, 6), signed_num(-12, 12);
  for (std::size_t i = 0; i < samples; ++i) {
    Rational v = t.kind() == TheoryKind::Scaling ? Rational(num(rng), static_cast<unsigned long>(den(rng)))
                                                 : Rational(signed_num(rng), static_cast<unsigned long>(den(rng)));
    v.canonicalize();
    if (t.kind() == TheoryKind::Scaling) out.push_back(Scaling{v});
    else out.push_back(Translation{v});
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Theory parse_theory(const std::string& spec) {
  const auto [name, body] = head_body(spec);
  if (name == "trivial" || name == "identity") {
    if (!body.empty()) throw ParseError("theory", "trivial takes no parameters");
    return Theory::trivial();
  }
  if (name == "permutation") {
    if (body.empty()) throw ParseError("theory", "permutation needs generators, e.g. permutation:1,0,2");
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& g : split(body, ';')) {
      std::vector<std::size_t> image;
      for (const auto& v : split(g, ',')) {
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("theory", "bad permutation entry \"" + v + "\"");
        image.push_back(std::stoul(v));
      }
      gens.push_back(std::move(image));
    }
    try {
      return Theory::permutation(gens.front().size(), gens);
    } catch (const InvalidData& e) {
      throw ParseError("theory", e.what());
    }
  }
  if (name == "scaling" || name == "translation") {
    std::optional<std::vector<Rational>> grid;
    if (!body.empty()) {
      grid.emplace();
      for (const auto& v : split(body, ',')) grid->push_back(spec_rational(v));
    }
    try {
      return name == "scaling" ? Theory::scaling(grid) : Theory::translation(grid);
    } catch (const InvalidData& e) {
      throw ParseError("theory", e.what());
    }
  }
  if (name == "affine") {
    try {
      return Theory::affine(parse_affine_elements(spec));
    } catch (const InvalidData& e) {
      throw ParseError("theory", e.what());
    }
  }
  throw ParseError("theory", "unknown theory \"" + name + "\"");
}

std::vector<AffineMap> parse_affine_elements(const std::string& spec) {
  const auto [name, body] = head_body(spec);
  if (name != "affine") throw ParseError("theory", "expected an affine theory");
  if (body.empty()) throw ParseError("theory", "affine needs an element list, e.g. affine:2@0,0");
  std::vector<AffineMap> out;
  for (const auto& e : split(body, ';')) {
    const auto at = e.find('@'), plus = e.find('+');
    if (at == std::string::npos && plus == std::string::npos)
      throw ParseError("theory", "affine element \"" + e + "\" needs alpha@z or alpha+offset");
    const auto sep = at != std::string::npos ? at : plus;
    const Rational alpha = spec_rational(e.substr(0, sep));
    if (alpha <= 0) throw ParseError("theory", "alpha must be positive");
    const Point v = spec_point(e.substr(sep + 1));
    out.push_back(at != std::string::npos ? AffineMap::mixing(alpha, v) : AffineMap{alpha, v});
  }
  return out;
}

Json run_check(const DataSet& d, const CheckOptions& o) {
  const Universe& u = d.universe();
  const SearchLimits limits{o.max_states};
  if (o.axiom == "sarp") return verdict_report(check_sarp(d), u);
  if (o.axiom == "harp" || o.axiom == "qarp") {
    if (!d.all_linear()) throw InvalidData(o.axiom + " requires linear budgets");
    return verdict_report(o.axiom == "harp" ? check_harp(d) : check_qarp(d), u);
  }
  if (o.axiom == "iarp") return verdict_report(check_iarp(d, parse_affine_elements(o.theory), limits), u);
  const Theory t = parse_theory(o.theory);
  t.check_compatible(u);
  if (o.axiom == "waarp") return verdict_report(check_waarp(d, t), u);
  if (o.axiom == "saarp") return verdict_report(check_saarp_generic(d, t, limits), u);
  if (o.axiom == "regular") return regularity_to_json(is_regular(d, t), u);
  const BehavioralLimits blimits{o.max_candidates, limits};
  if (o.axiom == "s-saarp") {
    const Theory t2 = parse_theory(o.theory2);
    t2.check_compatible(u);
    return verdict_report(check_s_saarp(d, t, t2, blimits), u);
  }
  if (o.axiom == "ge-saarp") return verdict_report(check_ge_saarp(d, t, o.k, blimits), u);
  throw ParseError("axiom", "unknown axiom \"" + o.axiom + "\"");
}

Json run_complete(const DataSet& d, const std::string& theory, const std::string& closure) {
  const Universe& u = d.universe();
  const Theory t = parse_theory(theory);
  t.check_compatible(u);
  Closure::Kind kind;
  if (closure == "theory") kind = Closure::Kind::Theory;
  else if (closure == "transitive") kind = Closure::Kind::TransitiveTheory;
  else if (closure == "ordered") kind = Closure::Kind::TransitiveOrderedTheory;
  else throw ParseError("closure", "expected theory, transitive or ordered");
  const Closure close(kind, t, u);
  Json out;
  out["axiom"] = "complete";
  out["closure"] = closure;
  try {
    out["certificate"] = relation_to_json(extend_to_complete(revealed_relation(d), close), u);
    out["outcome"] = "pass";
  } catch (const PreconditionFailure& e) {
    out["outcome"] = "violation";
    out["notes"] = Json::array({e.what()});
  }
  return out;
}

Json run_oracle(const DataSet& d, const std::string& theory, const OracleFlags& flags, std::size_t cap) {
  const Theory t = parse_theory(theory);
  t.check_compatible(d.universe());
  const OracleResult r = brute_force_rationalizable(d, t, flags, cap);
  Json out;
  out["axiom"] = "oracle";
  out["outcome"] = r.rationalizable ? "pass" : "violation";
  out["transitive"] = flags.require_transitive;
  out["complete"] = flags.require_complete;
  if (r.certificate) out["certificate"] = relation_to_json(*r.certificate, d.universe());
  out["notes"] = r.notes;
  return out;
}

Json run_laws(const DataSet& d, const std::string& theory, std::size_t samples, std::uint64_t seed) {
  const Universe& u = d.universe();
  const Theory t = parse_theory(theory);
  t.check_compatible(u);
  std::mt19937_64 rng(seed);
  const auto elements = sample_elements(t, samples, rng);
  std::vector<Bundle> points;
  for (std::size_t i = 0; i < u.size(); ++i) points.push_back(u.bundle(i));

  std::size_t checks = 0;
  Json failures = Json::array();
  Json notes = Json::array();
  auto absorb = [&](const LawReport& rep) {
    checks += rep.checks;
    for (const auto& f : rep.failures) failures.push_back({{"law", f.law}, {"detail", f.detail}});
  };
  const GroupOps ops = group_ops(t, u);
  absorb(verify_group_laws(ops, elements, points));
  if (t.ordered()) absorb(verify_ordered_group_laws(ops, elements));

  auto law = [&](bool ok, const std::string& name, const std::string& closure) {
    ++checks;
    if (!ok) failures.push_back({{"law", closure + " " + name}, {"detail", "closure law fails on a sampled relation"}});
  };
  try {
    std::vector<Relation> rels{revealed_relation(d)};
    for (std::size_t i = 0; i < std::min<std::size_t>(samples, 50); ++i) rels.push_back(random_relation(rng, u.size()));
    for (int ordered = 0; ordered < (t.ordered() ? 2 : 1); ++ordered) {
      const std::string name = ordered ? "ordered closure" : "closure";
      auto close = [&](const Relation& r) { return ordered ? ordered_theory_closure(r, t, u) : theory_closure(r, t, u); };
      for (std::size_t i = 0; i < rels.size(); ++i) {
        const Relation c = close(rels[i]);
        law(rels[i].subset_of(c), "increasing", name);
        law(close(c) == c, "idempotent", name);
        Relation bigger = rels[i];
        bigger |= rels[(i + 1) % rels.size()];
        law(c.subset_of(close(bigger)), "monotone", name);
      }
    }
  } catch (const OrbitEscape& e) {
    notes.push_back(std::string("closure laws skipped: ") + e.what());
  }
  Json out;
  out["axiom"] = "laws";
  out["theory"] = theory;
  out["outcome"] = failures.empty() ? "pass" : "violation";
  out["checks"] = checks;
  out["failures"] = failures;
  out["notes"] = notes;
  return out;
}

int exit_code(const Json& report) { return report.value("outcome", std::string()) == "pass" ? 0 : 1; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic revealed preference tests on exact rational data"};
  app.require_subcommand(1);
  std::string input, theory = "trivial", theory2 = "trivial", format = "human", out_path;
  CheckOptions check;
  std::string closure = "transitive";
  OracleFlags flags;
  std::size_t cap = kOracleDefaultCap, samples = 40;
  std::uint64_t seed = 1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", input, "data set JSON file")->required();
    sub->add_option("--theory", theory, "theory spec (trivial, permutation:..., scaling[:grid], translation[:grid], affine:...)");
    sub->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
  };
  auto* c = app.add_subcommand("check", "test an axiom");
  common(c);
  c->add_option("--axiom", check.axiom)
      ->required()
      ->check(CLI::IsMember({"waarp", "saarp", "sarp", "harp", "qarp", "iarp", "s-saarp", "ge-saarp", "regular"}));
  c->add_option("--theory2", theory2, "second theory for s-saarp");
  c->add_option("--k", check.k, "k for ge-saarp")->check(CLI::PositiveNumber);
  c->add_option("--max-states", check.max_states, "product-graph states per start");
  c->add_option("--cap", check.max_candidates, "behavioral search candidates");
  auto* comp = app.add_subcommand("complete", "extend R_E to a complete closed relation");
  common(comp);
  comp->add_option("--closure", closure)->check(CLI::IsMember({"theory", "transitive", "ordered"}));
  auto* orc = app.add_subcommand("oracle", "brute-force rationalizability");
  common(orc);
  orc->add_flag("--transitive", flags.require_transitive);
  orc->add_flag("--complete", flags.require_complete);
  orc->add_option("--cap", cap, "maximum universe size (at most 5)");
  auto* laws = app.add_subcommand("laws", "group and closure law checks");
  common(laws);
  laws->add_option("--samples", samples);
  laws->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Json report;
  try {
    const DataSet d = dataset_from_text(read_file(input));
    if (c->parsed()) {
      check.theory = theory;
      check.theory2 = theory2;
      report = run_check(d, check);
    } else if (comp->parsed()) {
      report = run_complete(d, theory, closure);
    } else if (orc->parsed()) {
      report = run_oracle(d, theory, flags, cap);
    } else {
      report = run_laws(d, theory, samples, seed);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = format == "json" ? report.dump(2) + "\n" : render_human(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << text;
  }
  return exit_code(report);
}

}  // namespace aarp
