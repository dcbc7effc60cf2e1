#include "sposet/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "sposet/corpus.hpp"
#include "sposet/error.hpp"
#include "sposet/io.hpp"

namespace sposet::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string corpus;
  std::string field = "q";
  std::string coeff;
  std::string charfn;
  std::string emit_as = "sposet";
  int n = 0;
  std::uint64_t seed = 1;
  std::int64_t bound = 3;
  bool json = false;
  bool crosscheck = false;
};

std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Input {
  SimplicialPoset poset;
  std::string name;
  std::optional<io::Bundle> bundle;
};

Input load_input(const Options& o) {
  if (!o.corpus.empty() && !o.input.empty()) throw UsageError("give either an input file or --corpus, not both");
  if (!o.corpus.empty()) return Input{corpus::poset(o.corpus), o.corpus, std::nullopt};
  if (o.input.empty()) throw UsageError("an input file or --corpus is required");
  auto doc = io::parse_file(o.input);
  if (auto* s = std::get_if<SimplicialPoset>(&doc)) return Input{std::move(*s), o.input, std::nullopt};
  if (auto* b = std::get_if<io::Bundle>(&doc)) {
    auto poset = b->poset;
    return Input{std::move(poset), b->poset_ref.empty() ? o.input : b->poset_ref, std::move(*b)};
  }
  throw Error(ErrorKind::UnknownFormat, o.input + ": expected a poset or a quotient bundle");
}

Coefficients field_of(const Options& o) {
  auto c = Coefficients::parse(o.field);
  if (!c.is_field()) throw UsageError("--field takes q or fp:<p>; use --coeff z for integer coefficients");
  return c;
}

Coefficients coeff_of(const Options& o, Coefficients fallback) {
  if (!o.coeff.empty()) return Coefficients::parse(o.coeff);
  if (o.field != "q") return field_of(o);
  return fallback;
}

json envelope(std::string_view command, const Input& in) {
  return json{{"format", "report-v1"}, {"command", command}, {"inputs", json{{"poset", in.name}, {"n", in.poset.n()}}}};
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  out << "checks:\n";
  for (const auto& c : checks) {
    out << "  " << (!c.applicable ? "SKIP" : c.holds ? "PASS" : "FAIL") << " " << c.name;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
}

int cmd_stats(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const auto st = validate_stats(in.poset);
  if (o.json) {
    auto doc = envelope("stats", in);
    doc["results"] = json{{"elements", in.poset.size()}, {"vertices", in.poset.vertex_count()}, {"dim", st.dim},
                          {"pure", st.pure},            {"connected", st.connected},          {"f", st.f}};
    out << doc.dump(2) << "\n";
  } else {
    out << in.name << ": n = " << in.poset.n() << ", dim = " << st.dim << ", " << in.poset.size() << " elements\n"
        << "pure: " << yes_no(st.pure) << "\nconnected: " << yes_no(st.connected) << "\nf: " << vec_str(st.f) << "\n";
  }
  return kExitOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const auto coeff = coeff_of(o, Coefficients::rationals());
  const auto b = reduced_betti(in.poset, coeff);
  std::optional<bool> cross;
  if (o.crosscheck) cross = betti_crosscheck(in.poset, coeff);
  if (o.json) {
    auto doc = envelope("homology", in);
    doc["results"] = io::betti_to_json(b);
    if (cross) doc["results"]["crosscheck"] = *cross;
    out << doc.dump(2) << "\n";
  } else {
    out << "reduced homology of " << in.name << " over " << coeff.to_string() << "\n";
    for (int d = -1; d <= b.max_degree(); ++d) {
      out << "  degree " << d << ": rank " << b.at(d);
      if (!b.torsion.empty()) {
        for (const auto& t : b.torsion[static_cast<std::size_t>(d + 1)]) out << " + Z/" << t.get_str();
      }
      out << "\n";
    }
    if (cross) out << "barycentric crosscheck: " << (*cross ? "agrees" : "DISAGREES") << "\n";
  }
  return cross && !*cross ? kExitCheckFailed : kExitOk;
}

int cmd_fvec(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const auto r = face_vector_report(in.poset, field_of(o));
  if (o.json) {
    auto doc = envelope("fvec", in);
    doc["results"] = io::face_vectors_to_json(r);
    out << doc.dump(2) << "\n";
  } else {
    out << in.name << " over " << r.coeff.to_string() << ", n = " << r.n << "\n"
        << "f:   " << vec_str(r.f) << "\nh:   " << vec_str(r.h) << "\nft:  " << vec_str(r.ft)
        << "\nh':  " << vec_str(r.hprime) << "\nh'': " << vec_str(r.hdoubleprime) << "\nchi = " << r.chi
        << ", reduced chi = " << r.chitilde << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const auto c = classify(in.poset, field_of(o));
  if (o.json) {
    auto doc = envelope("classify", in);
    doc["results"] = io::classification_to_json(in.poset, c);
    out << doc.dump(2) << "\n";
  } else {
    out << in.name << " over " << c.coeff.to_string() << "\n"
        << "  Buchsbaum:          " << yes_no(c.buchsbaum) << "\n"
        << "  Cohen-Macaulay:     " << yes_no(c.cohen_macaulay) << "\n"
        << "  homology manifold:  " << yes_no(c.homology_manifold) << "\n"
        << "  orientable:         " << yes_no(c.orientable_over_field) << "\n";
    for (const auto& w : c.witnesses) {
      out << "  witness [" << w.property << "] " << (w.element.empty() ? "(whole poset)" : "link of " + w.element)
          << ": degree " << w.degree << ", rank " << w.betti;
      if (!w.detail.empty()) out << " (" << w.detail << ")";
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const auto rep = identity_report(in.poset, field_of(o));
  if (o.json) {
    auto doc = envelope("identities", in);
    doc["results"] = json{{"vectors", io::face_vectors_to_json(rep.vectors)},
                          {"buchsbaum", rep.buchsbaum},
                          {"homology_manifold", rep.homology_manifold},
                          {"orientable", rep.orientable}};
    doc["checks"] = io::checks_to_json(rep.checks);
    out << doc.dump(2) << "\n";
  } else {
    out << "face-vector identities for " << in.name << " over " << rep.vectors.coeff.to_string() << "\n";
    print_checks(out, rep.checks);
  }
  return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_charfn_check(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  CharFunction lambda = [&] {
    if (!o.charfn.empty()) {
      auto doc = io::parse_file(o.charfn);
      if (auto* c = std::get_if<CharFunction>(&doc)) return std::move(*c);
      throw Error(ErrorKind::UnknownFormat, o.charfn + ": expected charfn-v1");
    }
    if (in.bundle && in.bundle->charfn) return *in.bundle->charfn;
    throw UsageError("--charfn is required");
  }();
  const auto coeff = coeff_of(o, Coefficients::integers());
  const auto c = check(in.poset, lambda, coeff);
  if (o.json) {
    auto doc = envelope("charfn check", in);
    doc["results"] = io::charfn_check_to_json(in.poset, lambda, c);
    out << doc.dump(2) << "\n";
  } else {
    out << "characteristic function on " << in.name << " over " << coeff.to_string() << ": "
        << (c.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& v : c.verdicts) {
      if (v.pass) continue;
      out << "  simplex " << in.poset.element(v.element).id << ": rank " << v.rank;
      if (!v.factors.empty()) {
        out << ", invariant factors";
        for (const auto& f : v.factors) out << " " << f.get_str();
      }
      out << "\n";
    }
  }
  return c.pass ? kExitOk : kExitValidation;
}

int cmd_charfn_random(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  const int n = o.n > 0 ? o.n : in.poset.dim() + 1;
  const auto coeff = coeff_of(o, Coefficients::rationals());
  const auto lambda = random_charfn(in.poset, n, coeff, o.seed, o.bound);
  if (o.json) {
    out << io::charfn_to_json(lambda).dump(2) << "\n";
  } else {
    out << "# valid over " << coeff.to_string() << ", seed " << o.seed << ", bound " << o.bound << "\n";
    for (const auto& [label, vec] : lambda.assignment()) out << label << " " << vec_str(vec) << "\n";
  }
  return kExitOk;
}

void print_table(std::ostream& out, const std::string& title, const PageTable& t) {
  out << title << ":";
  for (const auto& [pq, v] : t.cells) {
    if (v != 0) out << " (" << pq.first << "," << pq.second << ")=" << v;
  }
  out << "\n";
}

int emit_quotient(const io::Bundle& bundle, const std::string& name, const Options& o, std::ostream& out) {
  const auto rep = io::quotient_report(bundle);
  if (o.json) {
    out << io::report_to_json(rep).dump(2) << "\n";
  } else {
    const int n = bundle.n;
    out << "quotient " << to_string(bundle.kind) << " over " << name << ", n = " << n << ", field "
        << bundle.coeff.to_string() << "\n";
    out << "E1 diagonal:   " << vec_str(rep.pages.ea1.diagonal(n)) << "\n"
        << "E2 diagonal:   " << vec_str(rep.pages.ea2.diagonal(n)) << "\n"
        << "Einf diagonal: " << vec_str(rep.pages.eainf.diagonal(n)) << "\n";
    print_table(out, "E1 nonzero cells", rep.pages.ea1);
    print_table(out, "Einf nonzero cells", rep.pages.eainf);
    out << "bigraded Betti numbers H_{i,j}:\n";
    for (int i = 0; i <= n; ++i) {
      out << "  i=" << i << ":";
      for (int j = 0; j <= n; ++j) out << " " << rep.bigraded.at(i, j);
      out << "\n";
    }
    out << "totals b_0..b_" << 2 * n << ": " << vec_str(rep.bigraded.totals) << "\n"
        << "chi(X) = " << rep.euler_x << ", f_{n-1}(S) = " << rep.f_top << "\n";
    print_checks(out, rep.checks);
  }
  return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_quotient_cone(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  if (in.bundle && in.bundle->kind != QuotientKind::Cone) throw UsageError("input is not a cone-v1 bundle");
  io::Bundle b = in.bundle ? *in.bundle
                           : io::Bundle{QuotientKind::Cone, in.poset, o.corpus, in.poset.dim() + 1,
                                        Coefficients::rationals(), std::nullopt, std::nullopt};
  if (o.n > 0) b.n = o.n;
  if (!in.bundle || o.field != "q") b.coeff = field_of(o);
  if (!o.charfn.empty()) {
    auto doc = io::parse_file(o.charfn);
    auto* c = std::get_if<CharFunction>(&doc);
    if (!c) throw Error(ErrorKind::UnknownFormat, o.charfn + ": expected charfn-v1");
    b.charfn = std::move(*c);
  }
  return emit_quotient(b, in.name, o, out);
}

int cmd_quotient_manifold(const Options& o, std::ostream& out) {
  const auto in = load_input(o);
  if (!in.bundle || in.bundle->kind != QuotientKind::Manifold) throw UsageError("expects a manifold-v1 bundle file");
  io::Bundle b = *in.bundle;
  if (o.field != "q") b.coeff = field_of(o);
  return emit_quotient(b, in.name, o, out);
}

int cmd_corpus_list(const Options& o, std::ostream& out) {
  json list = json::array();
  for (const auto& name : corpus::names()) {
    const auto e = corpus::entry(name);
    if (o.json) {
      list.push_back(json{{"name", e.name}, {"description", e.description}, {"expected", e.expected}});
    } else {
      out << e.name << "  " << e.description << "\n";
    }
  }
  if (o.json) out << list.dump(2) << "\n";
  return kExitOk;
}

int cmd_corpus_emit(const Options& o, std::ostream& out) {
  const auto e = corpus::entry(o.input);
  if (o.emit_as == "scomplex") {
    out << io::complex_to_json(e.poset).dump(2) << "\n";
  } else {
    out << io::poset_to_json(e.poset, e.name).dump(2) << "\n";
  }
  return kExitOk;
}

void report_error(const Error& e, std::ostream& out, std::ostream& err, bool as_json) {
  err << "error: " << e.what() << "\n";
  json witnesses = json::array();
  if (const auto* nb = dynamic_cast<const NotBuchsbaumError*>(&e)) {
    for (const auto& w : nb->witnesses()) {
      err << "  link of " << w.element << " has rank " << w.betti << " in degree " << w.degree << "\n";
      witnesses.push_back(json{{"element", w.element}, {"degree", w.degree}, {"betti", w.betti}});
    }
  }
  if (as_json) {
    json doc{{"format", "report-v1"},
             {"error", json{{"kind", to_string(e.kind())}, {"detail", e.detail()}, {"witnesses", witnesses}}}};
    out << doc.dump(2) << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact face-vector, homology and torus-quotient rank computations for simplicial posets", "sposet"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto input_opts = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "input JSON file");
    sub->add_option("--corpus", o.corpus, "built-in corpus entry instead of a file");
    sub->add_flag("--json", o.json, "machine-readable report");
  };
  auto field_opt = [&o](CLI::App* sub) {
    sub->add_option("--field", o.field, "coefficient field: q or fp:<p>")->capture_default_str();
  };
  auto on = [&action](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* stats = app.add_subcommand("stats", "dimension, purity, connectivity and f-vector");
  input_opts(stats);
  on(stats, cmd_stats);

  auto* homology = app.add_subcommand("homology", "reduced Betti numbers, with torsion over Z");
  input_opts(homology);
  field_opt(homology);
  homology->add_option("--coeff", o.coeff, "z, q or fp:<p>; overrides --field");
  homology->add_flag("--crosscheck", o.crosscheck, "compare with the barycentric subdivision");
  on(homology, cmd_homology);

  auto* fvec = app.add_subcommand("fvec", "f, h, ft, h' and h'' vectors");
  input_opts(fvec);
  field_opt(fvec);
  on(fvec, cmd_fvec);

  auto* cls = app.add_subcommand("classify", "Buchsbaum, Cohen-Macaulay and homology-manifold tests");
  input_opts(cls);
  field_opt(cls);
  on(cls, cmd_classify);

  auto* ids = app.add_subcommand("identities", "face-vector identity suite");
  input_opts(ids);
  field_opt(ids);
  on(ids, cmd_identities);

  auto* charfn = app.add_subcommand("charfn", "characteristic functions");
  charfn->require_subcommand(1);
  auto* cf_check = charfn->add_subcommand("check", "per-simplex unimodularity test");
  input_opts(cf_check);
  cf_check->add_option("--charfn", o.charfn, "charfn-v1 file");
  cf_check->add_option("--coeff", o.coeff, "z (default), q or fp:<p>");
  on(cf_check, cmd_charfn_check);
  auto* cf_random = charfn->add_subcommand("random", "seeded random valid assignment");
  input_opts(cf_random);
  cf_random->add_option("--coeff", o.coeff, "z, q (default) or fp:<p>");
  cf_random->add_option("--n", o.n, "torus rank (default dim + 1)");
  cf_random->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cf_random->add_option("--bound", o.bound, "entries lie in [-bound, bound]")->capture_default_str();
  on(cf_random, cmd_charfn_random);

  auto* quotient = app.add_subcommand("quotient", "spectral-sequence ranks and bigraded Betti numbers");
  quotient->require_subcommand(1);
  auto* cone = quotient->add_subcommand("cone", "orbit space is the cone over the poset");
  input_opts(cone);
  field_opt(cone);
  cone->add_option("--n", o.n, "torus rank (default dim + 1)");
  cone->add_option("--charfn", o.charfn, "charfn-v1 file, validated over the field");
  on(cone, cmd_quotient_cone);
  auto* manifold = quotient->add_subcommand("manifold", "orbit space given by a manifold-v1 bundle");
  input_opts(manifold);
  field_opt(manifold);
  on(manifold, cmd_quotient_manifold);

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in example posets");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "names and descriptions");
  list->add_flag("--json", o.json, "machine-readable list");
  on(list, cmd_corpus_list);
  auto* emit = corpus_cmd->add_subcommand("emit", "print an entry as JSON");
  emit->add_option("name", o.input, "corpus entry")->required();
  emit->add_option("--as", o.emit_as, "sposet or scomplex")->check(CLI::IsMember({"sposet", "scomplex"}));
  on(emit, cmd_corpus_emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    report_error(e, out, err, o.json);
    return kExitValidation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sposet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sposet::cli
