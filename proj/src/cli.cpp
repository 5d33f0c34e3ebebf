#include "catmates/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>

#include "catmates/error.hpp"
#include "catmates/leibniz.hpp"

namespace catmates::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct Globals {
  std::string out = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_size;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violations: return "violations";
    case Status::Error: return "error";
  }
  return "error";
}

// Payload with the status first, then the verb's fields in insertion order.
CommandResult make(Status s, const Json& fields) {
  CommandResult r;
  r.status = s;
  r.payload = Json::object();
  r.payload["status"] = status_name(s);
  for (const auto& [k, v] : fields.items()) r.payload[k] = v;
  return r;
}

CommandResult from_report(const Report& rep, Json fields) {
  fields["report"] = io::to_json(rep);
  return make(rep.ok() ? Status::Ok : Status::Violations, fields);
}

std::string render_text(const Json& payload) {
  std::string s;
  for (const auto& [k, v] : payload.items()) {
    if (k == "report") {
      s += "checked: " + std::to_string(v.at("checked").get<std::size_t>()) + "\n";
      s += "violations: " + std::to_string(v.at("violations").get<std::size_t>()) + "\n";
      for (const auto& w : v.at("witnesses"))
        s += "  " + w.at("law").get<std::string>() + ": " + w.at("witness").get<std::string>() + "\n";
    } else if (v.is_string()) {
      s += k + ": " + v.get<std::string>() + "\n";
    } else if (v.is_primitive()) {
      s += k + ": " + v.dump() + "\n";
    } else {
      s += k + ":\n" + v.dump(2) + "\n";
    }
  }
  return s;
}

std::pair<Json, fs::path> open_document(io::Loader& L, const std::string& file) {
  fs::path p(file);
  return {L.read(p), p.parent_path()};
}

// A morphism named by id, or by its stored index when no morphism has that id.
MorId morphism_arg(const FinCategory& c, const std::string& s) {
  if (auto m = c.find_morphism(s)) return *m;
  std::size_t k = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (ec == std::errc() && end == s.data() + s.size() && k < c.morphism_count()) return static_cast<MorId>(k);
  fail(ErrorCode::ParseError, "no morphism " + s + " in " + c.name());
}

CommandResult validate(io::Loader& L, const std::string& file) {
  auto [doc, dir] = open_document(L, file);
  const std::string schema = io::schema_of(doc);
  Json fields{{"schema", schema}};
  try {
    if (schema == "fincat/1") {
      auto check = validate_category(L.raw_category(doc));
      if (!check.category) {
        Report rep;
        for (const auto& v : check.violations) rep.fail(v.law, v.witness);
        return from_report(rep, fields);
      }
      fields["name"] = check.category->name();
      fields["objects"] = check.category->object_count();
      fields["morphisms"] = check.category->morphism_count();
      return from_report(check_category_laws(*check.category), fields);
    }
    if (schema == "functor/1") {
      auto f = L.functor(doc, dir);
      fields["source"] = f.source->name();
      fields["target"] = f.target->name();
      return from_report(validate_functor(f), fields);
    }
    if (schema == "adj/1") return from_report(verify_mutual_left(L.adjunction(doc, dir)), fields);
    if (schema == "madj/1") {
      auto m = L.madj(doc, dir);
      fields["n"] = m->arity();
      Report rep = verify_cycle(*m);
      if (rep.ok()) rep.merge(check_triangles(*m), "triangles");
      return from_report(rep, fields);
    }
    if (schema == "twocell/1") {
      auto t = L.twocell(doc, dir);
      fields["n"] = t.arity();
      fields["anchor"] = t.anchor;
      return from_report(validate_two_cell(t), fields);
    }
    if (schema == "universe/1") {
      auto u = L.universe(doc, dir);
      fields["cats"] = u.cats.size();
      fields["functors"] = u.functors.size();
      fields["madjs"] = u.madjs.size();
      fields["twocells"] = u.cells.size();
      auto d = build_madj(std::move(u), {.anchors = L.anchors(doc)});
      return from_report(Report{}, fields);
    }
  } catch (const Error& e) {
    // Structural failures of well-formed documents are violations, not usage errors.
    if (e.code() == ErrorCode::ParseError) throw;
    Report rep;
    rep.fail(std::string(to_string(e.code())), e.what());
    return from_report(rep, fields);
  }
  fail(ErrorCode::ParseError, "unknown schema " + schema);
}

CommandResult adjoint_search_verb(io::Loader& L, const std::string& file) {
  auto [doc, dir] = open_document(L, file);
  auto F = L.functor(doc, dir);
  Report rep = validate_functor(F);
  if (!rep.ok()) return from_report(rep, Json::object());
  auto res = adjoint_search(F);
  if (res.adjunction) return make(Status::Ok, {{"adjunction", io::to_json(*res.adjunction)}});
  const auto B = opposite(F.target);
  return make(Status::Violations, {{"witness", B->object_name(*res.witness)},
                                   {"reason", "B(F-, b) is not representable at b = " + B->object_name(*res.witness)}});
}

CommandResult mate_verb(io::Loader& L, const std::string& file, std::size_t from, std::size_t to) {
  auto [doc, dir] = open_document(L, file);
  auto t = L.twocell(doc, dir);
  if (t.anchor != from)
    fail(ErrorCode::InvalidAnchor, "the cell is anchored at " + std::to_string(t.anchor) + ", not " + std::to_string(from));
  Report rep = validate_two_cell(t);
  if (!rep.ok()) return from_report(rep, Json::object());
  return make(Status::Ok, {{"twocell", io::to_json(mate_n(t, to))}});
}

CommandResult compose_verb(io::Loader& L, const std::string& gfile, const std::vector<std::string>& ffiles) {
  auto g = L.madj(gfile, ".");
  std::vector<MultiAdjunction> parts;
  for (const auto& f : ffiles) parts.push_back(*L.madj(f, "."));
  auto m = compose_multi(*g, parts);
  Json fields{{"madj", io::to_json(m)}};
  return from_report(verify_cycle(m), fields);
}

CommandResult cyclic_check(io::Loader& L, const Globals& G, const std::string& file, std::optional<std::size_t> bound,
                           std::size_t max_instances, const std::string& emit) {
  auto [doc, dir] = open_document(L, file);
  if (bound) doc["arity_bound"] = *bound;
  auto u = L.universe(doc, dir, G.seed);
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) fail(ErrorCode::ParseError, "cannot write " + emit);
    out << io::to_json(u).dump(1) << "\n";
  }
  Json fields{{"cats", u.cats.size()}, {"functors", u.functors.size()}, {"madjs", u.madjs.size()},
              {"twocells", u.cells.size()}, {"arity_bound", u.arity_bound}};
  auto d = build_madj(std::move(u), {.anchors = L.anchors(doc)});
  CheckOptions opt{.max_instances = max_instances, .seed = G.seed.value_or(1)};
  return from_report(check_category_object(d, opt), fields);
}

CommandResult leibniz_verb(io::Loader& L, const std::string& file, const std::vector<std::string>& mors) {
  auto [doc, dir] = open_document(L, file);
  auto F = L.functor(doc, dir);
  std::vector<CategoryPtr> factors;
  if (mors.size() == 1) {
    factors = {F.source};
  } else if (F.source->derivation() == Derivation::Product && F.source->parents().size() == mors.size()) {
    factors = F.source->parents();
  } else {
    fail(ErrorCode::BoundaryMismatch, "the functor's source is not a product of " + std::to_string(mors.size()) + " factors");
  }
  HatRequest req{F, factors, {}};
  for (std::size_t i = 0; i < mors.size(); ++i) req.fs.push_back(morphism_arg(*factors[i], mors[i]));
  auto r = hat_morphism(req);
  const FinCategory& A0 = *F.target;
  return make(Status::Ok, {{"morphism", A0.morphism_name(r.morphism)},
                           {"domain", A0.object_name(A0.src(r.morphism))},
                           {"codomain", A0.object_name(A0.tgt(r.morphism))},
                           {"colimit", A0.object_name(r.colimit.apex)}});
}

CommandResult error_result(std::string code, const std::string& message) {
  return make(Status::Error, {{"code", std::move(code)}, {"message", message}});
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Globals G;
  CLI::App app{"Finite multivariable adjunctions, mates and cyclic double multicategories", "catmates"};
  app.require_subcommand(1);
  app.add_option("--out", G.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", G.seed, "Seed for randomized universe generation and sampling");
  app.add_option("--max-size", G.max_size, "Bound on derived category sizes (default: MADJ_MAX_SIZE or 10^6)");

  std::string file, gfile;
  std::vector<std::string> rest;
  std::size_t from = 0, to = 0, max_instances = 5000;
  std::optional<std::size_t> bound;
  std::string emit;

  auto* v = app.add_subcommand("validate", "Validate a document of any schema");
  v->add_option("file", file)->required();
  auto* a = app.add_subcommand("adjoint-search", "Search for a mutual adjoint of F : A -> B^op");
  a->add_option("functor", file)->required();
  auto* m = app.add_subcommand("mate", "Move a 2-cell to another anchor");
  m->add_option("twocell", file)->required();
  m->add_option("--from", from)->required();
  m->add_option("--to", to)->required();
  auto* c = app.add_subcommand("compose", "Compose g with f_1 ... f_k");
  c->add_option("g", gfile)->required();
  c->add_option("f", rest);
  auto* y = app.add_subcommand("cyclic-check", "Check every law of the double multicategory on a universe");
  y->add_option("universe", file)->required();
  y->add_option("--arity-bound", bound);
  y->add_option("--max-instances", max_instances, "Per-law instance cap before sampling")->capture_default_str();
  y->add_option("--emit-universe", emit, "Write the expanded universe as a fixture");
  auto* l = app.add_subcommand("leibniz", "Obstruction map of F on a tuple of morphisms");
  l->add_option("functor", file)->required();
  l->add_option("morphisms", rest)->required();

  CommandResult r;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    const std::size_t saved = default_max_size();
    if (G.max_size) set_default_max_size(*G.max_size);
    io::Loader L;
    try {
      if (*v) r = validate(L, file);
      else if (*a) r = adjoint_search_verb(L, file);
      else if (*m) r = mate_verb(L, file, from, to);
      else if (*c) r = compose_verb(L, gfile, rest);
      else if (*y) r = cyclic_check(L, G, file, bound, max_instances, emit);
      else r = leibniz_verb(L, file, rest);
    } catch (...) {
      set_default_max_size(saved);
      throw;
    }
    set_default_max_size(saved);
  } catch (const CLI::CallForHelp&) {
    r = make(Status::Ok, Json::object());
    r.output = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    r = error_result("UsageError", e.what());
  } catch (const Error& e) {
    r = error_result(std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    r = error_result("InternalError", e.what());
  }
  r.output = G.out == "text" ? render_text(r.payload) : r.payload.dump(2) + "\n";
  return r;
}

}  // namespace catmates::cli
