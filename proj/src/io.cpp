#include "sposet/io.hpp"

#include <fstream>
#include <sstream>

#include "sposet/corpus.hpp"
#include "sposet/error.hpp"

namespace sposet::io {

namespace {

[[noreturn]] void schema(std::string_view ctx, std::string_view what) {
  throw Error(ErrorKind::SchemaViolation, std::string(ctx) + ": " + std::string(what));
}

const json& member(const json& obj, std::string_view key, std::string_view ctx) {
  if (!obj.is_object()) schema(ctx, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(ctx, "missing key \"" + std::string(key) + "\"");
  return *it;
}

const json* optional_member(const json& obj, std::string_view key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const json& v, std::string_view ctx) {
  if (!v.is_string()) schema(ctx, "expected a string");
  return v.get<std::string>();
}

/// Vertex labels may be written as numbers for convenience.
std::string as_label(const json& v, std::string_view ctx) {
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  return as_string(v, ctx);
}

std::int64_t as_int(const json& v, std::string_view ctx) {
  if (!v.is_number_integer()) schema(ctx, "expected an integer");
  return v.get<std::int64_t>();
}

bool as_bool(const json& v, std::string_view ctx) {
  if (!v.is_boolean()) schema(ctx, "expected a boolean");
  return v.get<bool>();
}

const json& as_array(const json& v, std::string_view ctx) {
  if (!v.is_array()) schema(ctx, "expected an array");
  return v;
}

std::vector<std::int64_t> int_vector(const json& v, const std::string& ctx) {
  std::vector<std::int64_t> out;
  std::size_t k = 0;
  for (const auto& x : as_array(v, ctx)) out.push_back(as_int(x, ctx + "[" + std::to_string(k++) + "]"));
  return out;
}

std::string format_of(const json& doc) {
  if (!doc.is_object()) schema("document", "expected a JSON object");
  return as_string(member(doc, "format", "document"), "format");
}

int rank_field(const json& doc, std::string_view ctx) {
  const auto n = as_int(member(doc, "n", ctx), std::string(ctx) + ".n");
  if (n < 1 || n > 64) schema(std::string(ctx) + ".n", "must lie in 1..64");
  return static_cast<int>(n);
}

Coefficients coeff_field(const json& doc, std::string_view ctx) {
  const json* f = optional_member(doc, "field");
  if (!f) return Coefficients::rationals();
  try {
    return Coefficients::parse(as_string(*f, std::string(ctx) + ".field"));
  } catch (const Error& e) {
    schema(std::string(ctx) + ".field", e.detail());
  }
}

CharFunction vectors_to_charfn(int n, const json& vectors, const std::string& ctx) {
  if (!vectors.is_object()) schema(ctx, "expected an object mapping vertex labels to vectors");
  std::map<std::string, std::vector<std::int64_t>> assignment;
  for (const auto& [label, vec] : vectors.items()) assignment.emplace(label, int_vector(vec, ctx + "." + label));
  return CharFunction(n, std::move(assignment));
}

json vec_json(const std::vector<std::int64_t>& v) { return json(v); }

}  // namespace

Document parse(const json& doc) {
  const auto format = format_of(doc);
  if (format == "sposet-v1" || format == "scomplex-v1") return poset_from_json(doc);
  if (format == "charfn-v1") return charfn_from_json(doc);
  if (format == "cone-v1" || format == "manifold-v1") return bundle_from_json(doc);
  throw Error(ErrorKind::UnknownFormat, "unrecognised format tag \"" + format + "\"");
}

Document parse_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    schema("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed JSON");
  }
  return parse(doc);
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

SimplicialPoset poset_from_json(const json& doc) {
  const auto format = format_of(doc);
  std::optional<int> n;
  if (optional_member(doc, "n")) n = rank_field(doc, format);
  if (format == "sposet-v1") {
    std::vector<ElementSpec> spec;
    const auto& elements = as_array(member(doc, "elements", format), "elements");
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const std::string ctx = "elements[" + std::to_string(k) + "]";
      const auto& e = elements[k];
      ElementSpec es;
      es.id = as_label(member(e, "id", ctx), ctx + ".id");
      for (const auto& v : as_array(member(e, "vertices", ctx), ctx + ".vertices")) {
        es.vertices.push_back(as_label(v, ctx + ".vertices"));
      }
      if (const json* f = optional_member(e, "facets")) {
        for (const auto& x : as_array(*f, ctx + ".facets")) es.facets.push_back(as_label(x, ctx + ".facets"));
      }
      spec.push_back(std::move(es));
    }
    return SimplicialPoset::from_face_lattice(spec, n);
  }
  if (format == "scomplex-v1") {
    std::vector<std::vector<std::string>> facets;
    const auto& list = as_array(member(doc, "facets", format), "facets");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string ctx = "facets[" + std::to_string(k) + "]";
      std::vector<std::string> f;
      for (const auto& v : as_array(list[k], ctx)) f.push_back(as_label(v, ctx));
      facets.push_back(std::move(f));
    }
    auto s = SimplicialPoset::from_facets(facets);
    return n ? s.with_rank(*n) : s;
  }
  throw Error(ErrorKind::UnknownFormat, "expected sposet-v1 or scomplex-v1, got \"" + format + "\"");
}

json poset_to_json(const SimplicialPoset& s, std::string_view name) {
  json elements = json::array();
  for (const auto& e : s.to_spec()) {
    elements.push_back(json{{"id", e.id}, {"vertices", e.vertices}, {"facets", e.facets}});
  }
  return json{{"format", "sposet-v1"}, {"name", name}, {"n", s.n()}, {"elements", std::move(elements)}};
}

json complex_to_json(const SimplicialPoset& s) {
  json facets = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto idx = static_cast<ElemIndex>(i);
    if (!s.cofacets(idx).empty()) continue;
    json f = json::array();
    for (auto v : s.element(idx).vertices) f.push_back(s.vertex_labels()[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(f));
  }
  return json{{"format", "scomplex-v1"}, {"n", s.n()}, {"facets", std::move(facets)}};
}

CharFunction charfn_from_json(const json& doc) {
  const auto format = format_of(doc);
  if (format != "charfn-v1") throw Error(ErrorKind::UnknownFormat, "expected charfn-v1, got \"" + format + "\"");
  return vectors_to_charfn(rank_field(doc, format), member(doc, "vectors", format), "vectors");
}

json charfn_to_json(const CharFunction& lambda) {
  json vectors = json::object();
  for (const auto& [label, vec] : lambda.assignment()) vectors[label] = vec;
  return json{{"format", "charfn-v1"}, {"n", lambda.n()}, {"vectors", std::move(vectors)}};
}

Bundle bundle_from_json(const json& doc) {
  const auto format = format_of(doc);
  QuotientKind kind;
  if (format == "cone-v1") {
    kind = QuotientKind::Cone;
  } else if (format == "manifold-v1") {
    kind = QuotientKind::Manifold;
  } else {
    throw Error(ErrorKind::UnknownFormat, "expected cone-v1 or manifold-v1, got \"" + format + "\"");
  }
  const int n = rank_field(doc, format);
  const auto& p = member(doc, "poset", format);
  std::string ref;
  std::optional<SimplicialPoset> poset;
  if (p.is_string()) {
    ref = p.get<std::string>();
    poset = corpus::poset(ref);
  } else {
    try {
      poset = poset_from_json(p);
    } catch (const Error& e) {
      throw Error(e.kind(), "poset: " + e.detail());
    }
  }
  std::optional<CharFunction> charfn;
  if (const json* c = optional_member(doc, "charfn")) {
    charfn = c->contains("format") ? charfn_from_json(*c) : vectors_to_charfn(n, *c, "charfn");
  }
  std::optional<ManifoldData> manifold;
  if (kind == QuotientKind::Manifold) {
    manifold = ManifoldData{int_vector(member(doc, "bettiQ", format), "bettiQ"),
                            int_vector(member(doc, "iota", format), "iota"),
                            as_bool(member(doc, "orientable", format), "orientable")};
  }
  return Bundle{kind, std::move(*poset), std::move(ref), n, coeff_field(doc, format), std::move(charfn),
                std::move(manifold)};
}

json bundle_to_json(const Bundle& b) {
  json doc{{"format", b.kind == QuotientKind::Cone ? "cone-v1" : "manifold-v1"}};
  doc["poset"] = b.poset_ref.empty() ? poset_to_json(b.poset, "") : json(b.poset_ref);
  doc["n"] = b.n;
  doc["field"] = b.coeff.to_string();
  if (b.manifold) {
    doc["bettiQ"] = b.manifold->betti_q;
    doc["iota"] = b.manifold->iota;
    doc["orientable"] = b.manifold->orientable;
  }
  if (b.charfn) doc["charfn"] = charfn_to_json(*b.charfn);
  return doc;
}

QuotientProblem to_problem(const Bundle& b) {
  return make_problem(b.kind, b.poset, b.n, b.coeff, b.charfn, b.manifold);
}

json betti_to_json(const BettiVector& b) {
  json torsion = json::array();
  for (const auto& factors : b.torsion) {
    json t = json::array();
    for (const auto& f : factors) t.push_back(f.get_str());
    torsion.push_back(std::move(t));
  }
  json doc{{"coeff", b.coeff.to_string()}, {"first_degree", -1}, {"reduced", b.reduced}};
  if (b.coeff.kind() == Coefficients::Kind::Integers) doc["torsion"] = std::move(torsion);
  return doc;
}

json classification_to_json(const SimplicialPoset& s, const Classification& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) {
    witnesses.push_back(json{{"property", w.property},
                             {"element", w.element.empty() ? json(nullptr) : json(w.element)},
                             {"degree", w.degree},
                             {"betti", w.betti},
                             {"detail", w.detail}});
  }
  return json{{"coeff", c.coeff.to_string()},
              {"n", s.n()},
              {"buchsbaum", c.buchsbaum},
              {"cohen_macaulay", c.cohen_macaulay},
              {"homology_manifold", c.homology_manifold},
              {"orientable_over_field", c.orientable_over_field},
              {"witnesses", std::move(witnesses)}};
}

json face_vectors_to_json(const FaceVectorReport& r) {
  return json{{"coeff", r.coeff.to_string()}, {"n", r.n},
              {"f", vec_json(r.f)},             {"h", vec_json(r.h)},
              {"ft", vec_json(r.ft)},           {"hprime", vec_json(r.hprime)},
              {"hdoubleprime", vec_json(r.hdoubleprime)}, {"chi", r.chi},
              {"chitilde", r.chitilde},         {"betti", betti_to_json(r.betti)}};
}

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::object();
  for (const auto& c : checks) out[c.name] = c.ok();
  return out;
}

namespace {

json check_details(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back(json{{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"note", c.note}});
  }
  return out;
}

}  // namespace

json charfn_check_to_json(const SimplicialPoset& s, const CharFunction& lambda, const CharFnCheck& c) {
  json simplices = json::array();
  for (const auto& v : c.verdicts) {
    json entry{{"id", s.element(v.element).id}, {"pass", v.pass}, {"rank", v.rank}};
    if (c.coeff.kind() == Coefficients::Kind::Integers) {
      json factors = json::array();
      for (const auto& f : v.factors) factors.push_back(f.get_str());
      entry["factors"] = std::move(factors);
    }
    simplices.push_back(std::move(entry));
  }
  return json{{"coeff", c.coeff.to_string()},
              {"n", lambda.n()},
              {"pass", c.pass},
              {"first_failure", c.first_failure ? json(s.element(*c.first_failure).id) : json(nullptr)},
              {"simplices", std::move(simplices)}};
}

json page_to_json(const PageTable& t) {
  json out = json::array();
  for (const auto& [pq, v] : t.cells) out.push_back(json{{"p", pq.first}, {"q", pq.second}, {"rank", v}});
  return out;
}

PageTable page_from_json(std::string label, const json& doc) {
  PageTable t{std::move(label), {}};
  for (const auto& c : as_array(doc, t.label)) {
    t.cells[{static_cast<int>(as_int(member(c, "p", t.label), "p")), static_cast<int>(as_int(member(c, "q", t.label), "q"))}] =
        as_int(member(c, "rank", t.label), "rank");
  }
  return t;
}

json bigraded_to_json(const BigradedTable& t) {
  json out = json::array();
  for (const auto& [ij, v] : t.cells) out.push_back(json{{"i", ij.first}, {"j", ij.second}, {"dim", v}});
  return out;
}

BigradedTable bigraded_from_json(int n, const json& cells, const json& totals) {
  BigradedTable t;
  t.n = n;
  for (const auto& c : as_array(cells, "bigraded")) {
    t.cells[{static_cast<int>(as_int(member(c, "i", "bigraded"), "i")),
             static_cast<int>(as_int(member(c, "j", "bigraded"), "j"))}] = as_int(member(c, "dim", "bigraded"), "dim");
  }
  t.totals = int_vector(totals, "totals");
  return t;
}

QuotientReport quotient_report(const Bundle& b, std::vector<std::uint64_t> lambda_seeds) {
  const auto prob = to_problem(b);
  const auto rep = verify(prob, std::move(lambda_seeds));
  return QuotientReport{bundle_to_json(b), e1_truncated(prob), pages(prob), bigraded_betti(prob), rep.checks,
                        rep.euler_x,       rep.f_top};
}

json report_to_json(const QuotientReport& r) {
  const int n = r.bigraded.n;
  json column = json::array();
  for (const auto& c : r.pages.column) {
    column.push_back(
        json{{"q1", c.q1}, {"q2", c.q2}, {"initial", c.initial}, {"killed", c.killed}, {"page", c.page}});
  }
  json tables{{"e1trunc", page_to_json(r.e1trunc)},   {"ea1", page_to_json(r.pages.ea1)},
              {"ea2", page_to_json(r.pages.ea2)},      {"eainf", page_to_json(r.pages.eainf)},
              {"column", std::move(column)},           {"bigraded", bigraded_to_json(r.bigraded)},
              {"totals", vec_json(r.bigraded.totals)}};
  json summary{{"n", n},
               {"ea1_diagonal", vec_json(r.pages.ea1.diagonal(n))},
               {"ea2_diagonal", vec_json(r.pages.ea2.diagonal(n))},
               {"eainf_diagonal", vec_json(r.pages.eainf.diagonal(n))},
               {"euler_x", r.euler_x},
               {"f_top", r.f_top}};
  return json{{"format", "report-v1"},
              {"inputs", r.inputs},
              {"tables", std::move(tables)},
              {"summary", std::move(summary)},
              {"checks", checks_to_json(r.checks)},
              {"check_details", check_details(r.checks)}};
}

QuotientReport report_from_json(const json& doc) {
  const auto format = format_of(doc);
  if (format != "report-v1") throw Error(ErrorKind::UnknownFormat, "expected report-v1, got \"" + format + "\"");
  const auto& tables = member(doc, "tables", format);
  const auto& summary = member(doc, "summary", format);
  const int n = static_cast<int>(as_int(member(summary, "n", "summary"), "summary.n"));
  QuotientReport r;
  r.inputs = member(doc, "inputs", format);
  r.e1trunc = page_from_json("e1trunc", member(tables, "e1trunc", "tables"));
  r.pages.ea1 = page_from_json("ea1", member(tables, "ea1", "tables"));
  r.pages.ea2 = page_from_json("ea2", member(tables, "ea2", "tables"));
  r.pages.eainf = page_from_json("eainf", member(tables, "eainf", "tables"));
  for (const auto& c : as_array(member(tables, "column", "tables"), "column")) {
    r.pages.column.push_back(ColumnComponent{static_cast<int>(as_int(member(c, "q1", "column"), "q1")),
                                             static_cast<int>(as_int(member(c, "q2", "column"), "q2")),
                                             as_int(member(c, "initial", "column"), "initial"),
                                             as_int(member(c, "killed", "column"), "killed"),
                                             static_cast<int>(as_int(member(c, "page", "column"), "page"))});
  }
  r.bigraded = bigraded_from_json(n, member(tables, "bigraded", "tables"), member(tables, "totals", "tables"));
  for (const auto& c : as_array(member(doc, "check_details", format), "check_details")) {
    r.checks.push_back(Check{as_string(member(c, "name", "check"), "name"),
                             as_bool(member(c, "applicable", "check"), "applicable"),
                             as_bool(member(c, "holds", "check"), "holds"), as_string(member(c, "note", "check"), "note")});
  }
  r.euler_x = as_int(member(summary, "euler_x", "summary"), "euler_x");
  r.f_top = as_int(member(summary, "f_top", "summary"), "f_top");
  return r;
}

}  // namespace sposet::io
