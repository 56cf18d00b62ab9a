#include "aarp/json_io.hpp"

#include <sstream>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (!j.is_string()) throw ParseError(path, "expected a rational as a string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Point point(const Json& j, const std::string& path) {
  array(j, path);
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(rational(j[i], at(path, i)));
  return p;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_string(v));
  return out;
}

std::size_t count_field(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// Reference to a universe member: label, point, or index.
std::size_t reference(const Json& j, const Universe& u, const std::string& path) {
  if (j.is_string()) {
    if (auto i = u.find_label(j.get<std::string>())) return *i;
    throw ParseError(path, "unknown alternative \"" + j.get<std::string>() + "\"");
  }
  if (j.is_array()) {
    const Point p = point(j, path);
    if (auto i = u.find_point(p)) return *i;
    throw ParseError(path, "point " + to_string(p) + " is not in the universe");
  }
  if (j.is_number_integer()) {
    const auto i = count_field(j, path);
    if (i >= u.size()) throw ParseError(path, "index out of range");
    return i;
  }
  throw ParseError(path, "expected a label, a point, or an index");
}

std::vector<std::size_t> references(const Json& j, const Universe& u, const std::string& path) {
  array(j, path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(reference(j[i], u, at(path, i)));
  return out;
}

Json reference_json(std::size_t i, const Universe& u) {
  const auto& alt = u[i];
  if (alt.has_label()) return alt.label;
  return point_json(alt.point);
}

Json references_json(const std::vector<std::size_t>& xs, const Universe& u) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(reference_json(x, u));
  return out;
}

Universe universe_from(const Json& j, const std::string& path) {
  array(j, path);
  std::vector<Alternative> alts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = at(path, i);
    const Json& e = j[i];
    if (e.is_string()) {
      alts.push_back({e.get<std::string>(), {}});
    } else if (e.is_array()) {
      alts.push_back({{}, point(e, p)});
    } else if (e.is_object()) {
      Alternative a;
      if (e.contains("label")) {
        if (!e["label"].is_string()) throw ParseError(at(p, "label"), "expected a string");
        a.label = e["label"].get<std::string>();
      }
      if (e.contains("point")) a.point = point(e["point"], at(p, "point"));
      alts.push_back(std::move(a));
    } else {
      throw ParseError(p, "expected a label, a point, or an object");
    }
  }
  try {
    return Universe(std::move(alts));
  } catch (const InvalidData& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

DataSet dataset_from_json(const Json& j) {
  const Universe u = universe_from(field(j, "universe", ""), "universe");
  const Json& obs = array(field(j, "observations", ""), "observations");
  std::vector<Observation> out;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const auto p = at("observations", i);
    const Json& b = field(obs[i], "budget", p);
    const auto bp = at(p, "budget");
    std::optional<Budget> budget;
    if (b.is_object() && b.contains("explicit")) {
      budget = Budget(ExplicitBudget{references(b["explicit"], u, at(bp, "explicit"))});
    } else if (b.is_object() && b.contains("linear")) {
      const auto lp = at(bp, "linear");
      const Json& l = b["linear"];
      budget = Budget(LinearBudget{point(field(l, "p", lp), at(lp, "p")), rational(field(l, "m", lp), at(lp, "m"))});
    } else {
      throw ParseError(bp, "expected {\"explicit\": [...]} or {\"linear\": {...}}");
    }
    const auto cp = at(p, "chosen");
    out.push_back(Observation{*budget, references(field(obs[i], "chosen", p), u, cp)});
  }
  try {
    return DataSet(u, std::move(out));
  } catch (const InvalidData& e) {
    throw ParseError("observations", e.what());
  }
}

DataSet dataset_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return dataset_from_json(j);
}

Json dataset_to_json(const DataSet& d) {
  const auto& u = d.universe();
  Json out;
  Json uni = Json::array();
  for (const auto& alt : u.alternatives()) {
    if (alt.has_label() && alt.has_point()) uni.push_back({{"label", alt.label}, {"point", point_json(alt.point)}});
    else if (alt.has_label()) uni.push_back(alt.label);
    else uni.push_back(point_json(alt.point));
  }
  out["universe"] = uni;
  Json obs = Json::array();
  for (const auto& o : d.observations()) {
    Json b;
    if (o.budget.is_explicit()) {
      b["explicit"] = references_json(o.budget.as_explicit().members, u);
    } else {
      const auto& l = o.budget.as_linear();
      b["linear"] = {{"p", point_json(l.prices)}, {"m", to_string(l.income)}};
    }
    obs.push_back({{"budget", b}, {"chosen", references_json(o.chosen, u)}});
  }
  out["observations"] = obs;
  return out;
}

Json transform_to_json(const Transform& f) {
  if (std::holds_alternative<Identity>(f)) return {{"identity", true}};
  if (const auto* p = std::get_if<Permutation>(&f)) return {{"permutation", p->image}};
  if (const auto* s = std::get_if<Scaling>(&f)) return {{"alpha", to_string(s->alpha)}};
  if (const auto* t = std::get_if<Translation>(&f)) return {{"t", to_string(t->t)}};
  const auto& a = std::get<AffineMap>(f);
  if (auto z = a.mixing_point()) return {{"alpha", to_string(a.alpha)}, {"z", point_json(*z)}};
  return {{"alpha", to_string(a.alpha)}, {"offset", point_json(a.offset)}};
}

Transform transform_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (j.contains("identity")) return Identity{};
  if (j.contains("permutation")) {
    const auto pp = at(path, "permutation");
    array(j["permutation"], pp);
    Permutation p;
    for (std::size_t i = 0; i < j["permutation"].size(); ++i) p.image.push_back(count_field(j["permutation"][i], at(pp, i)));
    return p;
  }
  if (j.contains("t")) return Translation{rational(j["t"], at(path, "t"))};
  if (j.contains("alpha")) {
    const Rational alpha = rational(j["alpha"], at(path, "alpha"));
    if (alpha <= 0) throw ParseError(at(path, "alpha"), "alpha must be positive");
    if (j.contains("z")) return AffineMap::mixing(alpha, point(j["z"], at(path, "z")));
    if (j.contains("offset")) return AffineMap{alpha, point(j["offset"], at(path, "offset"))};
    return Scaling{alpha};
  }
  throw ParseError(path, "unrecognized transformation");
}

Json bundle_to_json(const Bundle& b, const Universe& u) {
  Json out;
  if (b.index) {
    out["index"] = *b.index;
    if (u[*b.index].has_label()) out["label"] = u[*b.index].label;
  }
  if (!b.point.empty()) out["point"] = point_json(b.point);
  return out;
}

Bundle bundle_from_json(const Json& j, const Universe& u, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (j.contains("index")) {
    const auto i = count_field(j["index"], at(path, "index"));
    if (i >= u.size()) throw ParseError(at(path, "index"), "index out of range");
    return u.bundle(i);
  }
  if (j.contains("point")) return u.bundle(point(j["point"], at(path, "point")));
  throw ParseError(path, "expected \"index\" or \"point\"");
}

Json verdict_to_json(const Verdict& v, const Universe& u) {
  Json out;
  out["axiom"] = v.axiom;
  out["outcome"] = v.pass ? "pass" : "violation";
  out["exhaustive"] = v.exhaustive;
  if (v.witness) {
    const auto& w = *v.witness;
    Json wj;
    wj["observations"] = w.observations;
    Json chosen = Json::array();
    for (const auto& b : w.chosen) chosen.push_back(bundle_to_json(b, u));
    wj["chosen"] = chosen;
    Json transforms = Json::array();
    for (const auto& f : w.transforms) transforms.push_back(transform_to_json(f));
    wj["transforms"] = transforms;
    wj["landing"] = bundle_to_json(w.landing, u);
    if (!w.cycle_weights.empty()) {
      Json weights = Json::array();
      for (const auto& c : w.cycle_weights) weights.push_back(c ? to_string(*c) : std::string("inf"));
      wj["cycle_weights"] = weights;
    }
    out["witness"] = wj;
  }
  if (v.selection) {
    Json sel = Json::array();
    for (const auto& s : *v.selection) sel.push_back(references_json(s, u));
    out["selection"] = sel;
  }
  out["notes"] = v.notes;
  return out;
}

Verdict verdict_from_json(const Json& j, const Universe& u) {
  Verdict v;
  const Json& axiom = field(j, "axiom", "");
  if (!axiom.is_string()) throw ParseError("axiom", "expected a string");
  v.axiom = axiom.get<std::string>();
  const Json& outcome = field(j, "outcome", "");
  if (outcome != "pass" && outcome != "violation") throw ParseError("outcome", "expected \"pass\" or \"violation\"");
  v.pass = outcome == "pass";
  if (j.contains("exhaustive")) {
    if (!j["exhaustive"].is_boolean()) throw ParseError("exhaustive", "expected a boolean");
    v.exhaustive = j["exhaustive"].get<bool>();
  }
  if (j.contains("witness")) {
    const Json& wj = j["witness"];
    Witness w;
    const Json& obs = array(field(wj, "observations", "witness"), "witness.observations");
    for (std::size_t i = 0; i < obs.size(); ++i) w.observations.push_back(count_field(obs[i], at("witness.observations", i)));
    const Json& chosen = array(field(wj, "chosen", "witness"), "witness.chosen");
    for (std::size_t i = 0; i < chosen.size(); ++i) w.chosen.push_back(bundle_from_json(chosen[i], u, at("witness.chosen", i)));
    const Json& tr = array(field(wj, "transforms", "witness"), "witness.transforms");
    for (std::size_t i = 0; i < tr.size(); ++i) w.transforms.push_back(transform_from_json(tr[i], at("witness.transforms", i)));
    w.landing = bundle_from_json(field(wj, "landing", "witness"), u, "witness.landing");
    if (wj.contains("cycle_weights")) {
      const Json& cw = array(wj["cycle_weights"], "witness.cycle_weights");
      for (std::size_t i = 0; i < cw.size(); ++i) {
        if (cw[i] == "inf") w.cycle_weights.emplace_back(std::nullopt);
        else w.cycle_weights.emplace_back(rational(cw[i], at("witness.cycle_weights", i)));
      }
    }
    v.witness = std::move(w);
  }
  if (j.contains("selection")) {
    const Json& sel = array(j["selection"], "selection");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < sel.size(); ++i) out.push_back(references(sel[i], u, at("selection", i)));
    v.selection = std::move(out);
  }
  if (j.contains("notes")) {
    const Json& notes = array(j["notes"], "notes");
    for (std::size_t i = 0; i < notes.size(); ++i) {
      if (!notes[i].is_string()) throw ParseError(at("notes", i), "expected a string");
      v.notes.push_back(notes[i].get<std::string>());
    }
  }
  return v;
}

Json relation_to_json(const Relation& r, const Universe& u) {
  Json pairs = Json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back(Json::array({reference_json(x, u), reference_json(y, u)}));
  return {{"pairs", pairs}};
}

Relation relation_from_json(const Json& j, const Universe& u) {
  const Json& pairs = array(field(j, "pairs", ""), "pairs");
  Relation r(u.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto p = at("pairs", i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw ParseError(p, "expected a pair");
    r.insert(reference(pairs[i][0], u, at(p, 0)), reference(pairs[i][1], u, at(p, 1)));
  }
  return r;
}

Json regularity_to_json(const RegularityReport& r, const Universe& u) {
  Json out;
  out["axiom"] = "regular";
  out["outcome"] = r.regular ? "pass" : "violation";
  if (!r.regular) {
    Json w;
    w["condition"] = r.condition;
    w["observation"] = r.observation;
    if (r.point) w["point"] = bundle_to_json(*r.point, u);
    if (r.lower) w["lower"] = transform_to_json(*r.lower);
    if (r.upper) w["upper"] = transform_to_json(*r.upper);
    w["detail"] = r.detail;
    out["witness"] = w;
  }
  out["notes"] = Json::array({std::string("regularity reading: ") + kRegularityReading});
  return out;
}

namespace {

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + text_of(j[i]);
    return s + ")";
  }
  if (j.is_object()) {
    if (j.contains("identity")) return "identity";
    if (j.contains("label")) return j["label"].get<std::string>();
    if (j.contains("point")) return text_of(j["point"]);
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + text_of(it.value());
    return s;
  }
  return j.dump();
}

}  // namespace

std::string render_human(const Json& v) {
  std::ostringstream out;
  out << v.value("axiom", std::string("?")) << ": " << v.value("outcome", std::string("?"));
  if (v.contains("exhaustive") && !v["exhaustive"].get<bool>()) out << " (search incomplete)";
  out << "\n";
  if (v.contains("witness")) {
    const Json& w = v["witness"];
    if (w.contains("observations")) {
      out << "  cycle:";
      for (const auto& i : w["observations"]) out << " " << i.get<std::size_t>() + 1;
      out << "\n  chosen:";
      for (const auto& b : w["chosen"]) out << " " << text_of(b);
      out << "\n  transforms:";
      for (const auto& f : w["transforms"]) out << " [" << text_of(f) << "]";
      out << "\n  landing: " << text_of(w["landing"]) << "\n";
      if (w.contains("cycle_weights")) {
        out << "  cycle weights:";
        for (const auto& c : w["cycle_weights"]) out << " " << text_of(c);
        out << "\n";
      }
    } else {
      for (auto it = w.begin(); it != w.end(); ++it) out << "  " << it.key() << ": " << text_of(it.value()) << "\n";
    }
  }
  if (v.contains("selection")) {
    out << "  selection:\n";
    std::size_t i = 0;
    for (const auto& s : v["selection"]) out << "    observation " << ++i << ": " << text_of(s) << "\n";
  }
  if (v.contains("certificate")) out << "  certificate: " << text_of(v["certificate"]["pairs"]) << "\n";
  if (v.contains("checks")) out << "  checks: " << v["checks"].get<std::size_t>() << "\n";
  if (v.contains("failures"))
    for (const auto& f : v["failures"]) out << "  failure: " << text_of(f["law"]) << ": " << text_of(f["detail"]) << "\n";
  if (v.contains("notes"))
    for (const auto& n : v["notes"]) out << "  note: " << n.get<std::string>() << "\n";
  return out.str();
}

}  // namespace aarp
