#include <unicx/cli.hpp>

#include <unicx/acceptance.hpp>
#include <unicx/bhargava.hpp>
#include <unicx/buchstaber.hpp>
#include <unicx/errors.hpp>
#include <unicx/homology.hpp>
#include <unicx/morse.hpp>
#include <unicx/report.hpp>
#include <unicx/shelling.hpp>
#include <unicx/universal_fp.hpp>
#include <unicx/zlattice.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace unicx {

namespace {

struct Common {
  std::string format = "json";
  bool timing = false;
  std::size_t budget = kDefaultSimplexBudget;
};

struct Source {
  std::string variant;
  std::int64_t p = 0;
  int n = 0;
  std::string complex_file;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--timing", c.timing, "include wall-clock seconds in the report");
  cmd->add_option("--budget", c.budget, "simplex budget")->capture_default_str();
}

void add_universal(CLI::App* cmd, Source& s, bool required) {
  auto* v = cmd->add_option("--variant", s.variant, "X or K");
  auto* p = cmd->add_option("--p", s.p, "prime");
  auto* n = cmd->add_option("--n", s.n, "ambient dimension");
  if (required) {
    v->required();
    p->required();
    n->required();
  }
}

UniversalKind kind_of(const Source& s) {
  if (s.variant.empty() || s.p == 0 || s.n == 0) throw InputError("--variant, --p and --n are required");
  if (s.n < 1) throw InputError("--n must be at least 1");
  return {parse_variant(s.variant), s.p, s.n};
}

Json kind_json(const UniversalKind& k) {
  return {{"variant", to_string(k.variant)}, {"p", num(k.p)}, {"n", num(k.n)}};
}

FacetList load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_facet_list(in);
}

/// A complex from --complex FILE or from --variant/--p/--n.
struct Loaded {
  SimplicialComplex complex;
  std::optional<UniversalKind> kind;
  std::vector<Simplex> file_order;
};

Loaded load(const Source& s, std::size_t budget, Json& params) {
  if (!s.complex_file.empty()) {
    FacetList f = load_complex(s.complex_file);
    params["complex"] = s.complex_file;
    return {std::move(f.complex), std::nullopt, std::move(f.facets_in_order)};
  }
  const UniversalKind kind = kind_of(s);
  params.update(kind_json(kind));
  return {build_universal(kind, budget), kind, {}};
}

Json sphere_json(const SphereCount& sc) { return {{"dimension", num(sc.dimension)}, {"count", num(sc.count)}}; }

Json simplex_list_json(const SimplicialComplex& k, const std::vector<Simplex>& list) {
  Json a = Json::array();
  for (const auto& s : list) a.push_back(simplex_json(k, s));
  return a;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void bind(CLI::App* cmd, Common& common, std::function<Report()> body) {
    cmd->callback([this, cmd, &common, body] {
      const auto t0 = std::chrono::steady_clock::now();
      Report r = body();
      r.command = cmd->get_name();
      if (common.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out_ << emit_report(r, parse_report_format(common.format));
    });
  }

  std::ostream& err() { return err_; }
  int status = kExitOk;

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal complexes of unimodular sets: construction and verification", "unicx"};
  app.set_version_flag("--version", artifact_version());
  app.require_subcommand(1);
  Runner run(out, err);

  // build
  Common build_c;
  Source build_s;
  std::string build_out;
  int z_max_norm = 0;
  auto* build = app.add_subcommand("build", "construct X or K over F_p (or a truncation over Z) and export facets");
  add_common(build, build_c);
  build->add_option("--variant", build_s.variant, "X or K")->required();
  build->add_option("--p", build_s.p, "prime (omit with --z-max-norm)");
  build->add_option("--n", build_s.n, "ambient dimension")->required();
  build->add_option("--z-max-norm", z_max_norm, "build the 1-norm truncation over Z instead");
  build->add_option("--output", build_out, "write the facet list to this file");
  run.bind(build, build_c, [&] {
    Report r;
    SimplicialComplex k;
    if (z_max_norm > 0) {
      const Variant v = parse_variant(build_s.variant);
      r.parameters = {{"variant", to_string(v)}, {"ring", "Z"}, {"n", num(build_s.n)}, {"max_norm", num(z_max_norm)}};
      k = build_truncated_universal_z(v, build_s.n, z_max_norm, build_c.budget);
    } else {
      const UniversalKind kind = kind_of(build_s);
      r.parameters = kind_json(kind);
      k = build_universal(kind, build_c.budget);
    }
    r.results["f_vector"] = f_vector_json(f_vector(k));
    r.results["facets"] = num(k.facets().size());
    if (!build_out.empty()) {
      std::ofstream f(build_out);
      if (!f) throw InputError("cannot write '" + build_out + "'");
      write_facet_list(f, k);
      r.parameters["output"] = build_out;
    }
    return r;
  });

  // fvector
  Common fv_c;
  Source fv_s;
  std::optional<int> fv_link;
  bool fv_enumerate = false;
  auto* fvector = app.add_subcommand("fvector", "closed-form f-vector and sphere count");
  add_common(fvector, fv_c);
  add_universal(fvector, fv_s, true);
  fvector->add_option("--link-dim", fv_link, "f-vector of the link of an i-simplex");
  fvector->add_flag("--enumerate", fv_enumerate, "also enumerate and compare");
  run.bind(fvector, fv_c, [&] {
    const UniversalKind kind = kind_of(fv_s);
    Report r;
    r.parameters = kind_json(kind);
    if (fv_link) r.parameters["link_dim"] = num(*fv_link);
    const FVector formula = formula_f_vector(kind, fv_link);
    r.results["f_vector"] = f_vector_json(formula);
    r.results["spheres"] = sphere_json(sphere_count(kind, fv_link));
    if (fv_enumerate) {
      const SimplicialComplex k = build_universal(kind, fv_c.budget);
      FVector got = f_vector(k);
      if (fv_link) {
        const auto layer = k.simplices(*fv_link);
        got = f_vector(link(k, layer.front()));
      }
      r.results["enumerated"] = f_vector_json(got);
      r.results["agrees"] = got == formula;
      if (got != formula) run.status = kExitVerification;
    }
    return r;
  });

  // homology
  Common hom_c;
  Source hom_s;
  bool hom_reisner = false;
  auto* homology = app.add_subcommand("homology", "reduced integral homology");
  add_common(homology, hom_c);
  add_universal(homology, hom_s, false);
  homology->add_option("--complex", hom_s.complex_file, "facet-list file");
  homology->add_flag("--reisner", hom_reisner, "also run Reisner's Cohen-Macaulay check");
  run.bind(homology, hom_c, [&] {
    Report r;
    const Loaded l = load(hom_s, hom_c.budget, r.parameters);
    HomologyOptions opt;
    opt.simplex_budget = hom_c.budget;
    const HomologyProfile h = reduced_homology(l.complex, opt);
    r.results["homology"] = homology_json(h);
    if (l.kind) {
      const SphereCount sc = sphere_count(*l.kind);
      r.results["spheres"] = sphere_json(sc);
      bool wedge = h.torsion_free() && h.betti_at(sc.dimension) == sc.count;
      for (int d = -1; d < sc.dimension; ++d) wedge = wedge && h.betti_at(d) == 0;
      r.results["wedge_of_spheres"] = wedge;
      if (!wedge) run.status = kExitVerification;
    }
    if (hom_reisner) {
      const ReisnerResult rc = reisner_check(l.complex, false, opt);
      Json j{{"cohen_macaulay", rc.cohen_macaulay}, {"links_checked", num(rc.links_checked)}};
      if (rc.witness_simplex) j["witness_simplex"] = simplex_json(l.complex, *rc.witness_simplex);
      if (rc.witness_degree) j["witness_degree"] = num(*rc.witness_degree);
      r.results["reisner"] = j;
    }
    return r;
  });

  // morse
  Common morse_c;
  Source morse_s;
  bool morse_cells = false;
  auto* morse = app.add_subcommand("morse", "greedy pivot matching and critical cells");
  add_common(morse, morse_c);
  add_universal(morse, morse_s, false);
  morse->add_option("--complex", morse_s.complex_file, "facet-list file (pivots: all vertices in order)");
  morse->add_flag("--cells", morse_cells, "list the critical cells");
  run.bind(morse, morse_c, [&] {
    Report r;
    const Loaded l = load(morse_s, morse_c.budget, r.parameters);
    std::vector<VertexId> pivots;
    MatchingFlavor flavor = MatchingFlavor::vector_flavor;
    if (l.kind) {
      pivots = standard_pivots(l.complex);
      if (l.kind->variant == Variant::K) flavor = MatchingFlavor::line_flavor;
    } else {
      for (VertexId v = 0; v < l.complex.vertex_count(); ++v) pivots.push_back(v);
    }
    const MorseSummary s = morse_summary(l.complex, pivots, flavor);
    r.results["acyclic"] = s.acyclic;
    r.results["pairs"] = num(s.pair_count);
    r.results["critical"] = census_json(s.census);
    r.results["euler_consistent"] = s.euler_consistent;
    r.results["vertex_plus_top"] = s.vertex_plus_top;
    if (l.kind) {
      r.results["spheres"] = sphere_json(sphere_count(*l.kind));
      r.results["pivot_avoiding_top"] = num(s.pivot_avoiding_top);
    }
    if (morse_cells) r.results["cells"] = simplex_list_json(l.complex, s.census.cells);
    return r;
  });

  // shelling
  Common sh_c;
  Source sh_s;
  bool sh_order = false;
  auto* shelling = app.add_subcommand("shelling", "construct and verify a shelling, or verify a file's facet order");
  add_common(shelling, sh_c);
  add_universal(shelling, sh_s, false);
  shelling->add_option("--complex", sh_s.complex_file, "facet-list file whose line order is checked");
  shelling->add_flag("--order", sh_order, "include the facet order");
  run.bind(shelling, sh_c, [&] {
    Report r;
    const Loaded l = load(sh_s, sh_c.budget, r.parameters);
    const std::vector<Simplex> order = l.kind ? construct_shelling_fp(*l.kind, l.complex) : l.file_order;
    const ShellingCheck c = verify_shelling(l.complex, order);
    r.results["facets"] = num(order.size());
    r.results["valid"] = c.valid;
    if (c.failing_index) r.results["failing_index"] = num(*c.failing_index);
    if (sh_order) r.results["order"] = simplex_list_json(l.complex, order);
    if (!c.valid) run.status = kExitVerification;
    return r;
  });

  // shifted
  Common shf_c;
  Source shf_s;
  std::size_t shf_max = 10;
  auto* shifted = app.add_subcommand("shifted", "decide whether a complex is shifted");
  add_common(shifted, shf_c);
  add_universal(shifted, shf_s, false);
  shifted->add_option("--complex", shf_s.complex_file, "facet-list file");
  shifted->add_option("--max-vertices", shf_max, "search size limit")->capture_default_str();
  run.bind(shifted, shf_c, [&] {
    Report r;
    const Loaded l = load(shf_s, shf_c.budget, r.parameters);
    const ShiftedResult s = is_shifted(l.complex, shf_max);
    r.results["shifted"] = s.shifted;
    if (s.shifted) {
      Json lab = Json::object();
      for (VertexId v = 0; v < l.complex.vertex_count(); ++v)
        lab[label_to_string(l.complex.label(v))] = num(s.labelling[v]);
      r.results["labelling"] = lab;
    }
    return r;
  });

  // buchstaber
  Common bu_c;
  std::string bu_file;
  std::int64_t bu_p = 2;
  std::optional<std::int64_t> bu_q;
  std::optional<int> bu_n;
  SearchLimits bu_limits;
  auto* buchstaber = app.add_subcommand("buchstaber", "Buchstaber invariant bounds, or ζ/θ bounds with --q and --n");
  add_common(buchstaber, bu_c);
  buchstaber->add_option("--complex", bu_file, "facet-list file");
  buchstaber->add_option("--p", bu_p, "prime")->capture_default_str();
  buchstaber->add_option("--q", bu_q, "second prime for ζ/θ bounds");
  buchstaber->add_option("--n", bu_n, "dimension for ζ/θ bounds");
  buchstaber->add_option("--max-vertices", bu_limits.max_vertices, "exact search size limit")->capture_default_str();
  buchstaber->add_option("--max-rank", bu_limits.max_rank, "exact search rank limit")->capture_default_str();
  run.bind(buchstaber, bu_c, [&] {
    Report r;
    r.parameters["p"] = num(bu_p);
    if (bu_q || bu_n) {
      if (!bu_q || !bu_n) throw InputError("ζ/θ bounds need both --q and --n");
      const ZetaThetaBounds b = zeta_theta_bounds(bu_p, *bu_q, *bu_n);
      r.parameters["q"] = num(*bu_q);
      r.parameters["n"] = num(*bu_n);
      r.results["zeta"] = Json::array({num(b.zeta_lower), num(b.zeta_upper)});
      r.results["theta"] = Json::array({num(b.theta_lower), num(b.theta_upper)});
      r.results["monotone"] = b.monotone;
      return r;
    }
    if (bu_file.empty()) throw InputError("buchstaber needs --complex or --q/--n");
    r.parameters["complex"] = bu_file;
    const FacetList f = load_complex(bu_file);
    const BuchstaberReport b = buchstaber_bounds(f.complex, bu_p, bu_limits);
    r.results["m"] = num(b.m);
    r.results["gamma"] = num(b.gamma);
    r.results["lower"] = num(b.lower);
    r.results["upper"] = num(b.upper);
    r.results["coloring_upper"] = num(b.coloring_upper);
    r.results["method"] = b.method;
    if (b.s_fp) r.results["s_fp"] = num(*b.s_fp);
    return r;
  });

  // zcheck
  Common z_c;
  std::string z_pair, z_vectors;
  std::optional<int> z_lines_n;
  int z_norm = 3;
  auto* zcheck = app.add_subcommand("zcheck", "unimodularity over Z, quasitoric pairs, line enumeration");
  add_common(zcheck, z_c);
  zcheck->add_option("--pair", z_pair, "quasitoric pair file");
  zcheck->add_option("--vectors", z_vectors, "vectors as \"1,0,2;0,1,1\"");
  zcheck->add_option("--lines", z_lines_n, "enumerate lines of Z^n");
  zcheck->add_option("--max-norm", z_norm, "1-norm bound for --lines")->capture_default_str();
  run.bind(zcheck, z_c, [&] {
    Report r;
    if (!z_pair.empty()) {
      std::ifstream in(z_pair);
      if (!in) throw InputError("cannot open '" + z_pair + "'");
      const QuasitoricPair pair = read_quasitoric_pair(in);
      const QuasitoricCheck c = validate_quasitoric_pair(pair);
      r.parameters["pair"] = z_pair;
      r.results["valid"] = c.valid;
      if (c.failing_facet) {
        r.results["failing_facet"] = simplex_json(pair.dual_complex, *c.failing_facet);
        r.results["failing_determinant"] = num(c.failing_determinant);
      }
      if (!c.valid) run.status = kExitVerification;
    } else if (!z_vectors.empty()) {
      std::vector<ZVector> rows;
      std::stringstream all(z_vectors);
      std::string row;
      while (std::getline(all, row, ';')) {
        std::vector<BigInt> coords;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
          try {
            coords.emplace_back(tok);
          } catch (const std::exception&) {
            throw InputError("not an integer: '" + tok + "'");
          }
        }
        rows.emplace_back(std::move(coords));
      }
      r.parameters["vectors"] = z_vectors;
      r.results["unimodular"] = is_unimodular_z(rows);
    } else if (z_lines_n) {
      r.parameters["n"] = num(*z_lines_n);
      r.parameters["max_norm"] = num(z_norm);
      Json a = Json::array();
      for (const auto& l : enumerate_z_lines(*z_lines_n, z_norm)) a.push_back(label_to_string(Label{l}));
      r.results["lines"] = a;
    } else {
      throw InputError("zcheck needs --pair, --vectors or --lines");
    }
    return r;
  });

  // bhargava
  Common bh_c;
  std::string bh_set = "integers";
  std::size_t bh_k = 1;
  std::optional<std::int64_t> bh_p;
  std::size_t bh_seed = 0;
  bool bh_identities = false;
  auto* bhargava = app.add_subcommand("bhargava", "generalized factorials and p-orderings");
  add_common(bhargava, bh_c);
  bhargava->add_option("--set", bh_set, "integers, geometric:a:q or list:x,y,...")->capture_default_str();
  bhargava->add_option("--k", bh_k, "index k")->capture_default_str();
  bhargava->add_option("--p", bh_p, "report the p-ordering at this prime");
  bhargava->add_option("--seed", bh_seed, "position of the first element")->capture_default_str();
  bhargava->add_flag("--identities", bh_identities, "check k!_{geometric(1,p)} = k! f_{k-1}(X(F_p^k)) (needs --p)");
  run.bind(bhargava, bh_c, [&] {
    Report r;
    const GroundSet s = GroundSet::parse(bh_set);
    r.parameters = {{"set", s.describe()}, {"k", num(bh_k)}};
    r.results["factorial"] = num(generalized_factorial(s, bh_k));
    if (bh_p) {
      r.parameters["p"] = num(*bh_p);
      r.parameters["seed"] = num(bh_seed);
      r.results["nu"] = num(nu_k(s, *bh_p, bh_k, bh_seed));
      const std::size_t budget =
          s.kind() == GroundSet::Kind::explicit_list ? s.elements().size() : std::max<std::size_t>(8 * bh_k + 1, bh_seed + 1);
      const POrdering o = p_ordering(s, *bh_p, bh_k, budget, bh_seed);
      Json el = Json::array();
      for (const auto& e : o.elements) el.push_back(num(e));
      r.results["ordering"] = el;
    }
    if (bh_identities) {
      if (!bh_p) throw InputError("--identities needs --p");
      const IdentityCheck c = check_identities(*bh_p, bh_k);
      r.results["identities"] = {{"geometric_factorial", num(c.geometric_factorial)},
                                 {"factorial", num(c.factorial)},
                                 {"top_faces", num(c.top_faces)},
                                 {"product_identity", c.product_identity},
                                 {"divisibility", c.divisibility}};
      if (!c.product_identity || !c.divisibility) run.status = kExitVerification;
    }
    return r;
  });

  // verify-all
  Common va_c;
  va_c.format = "text";
  auto* verify_all = app.add_subcommand("verify-all", "run every acceptance criterion");
  add_common(verify_all, va_c);
  run.bind(verify_all, va_c, [&] {
    Report r;
    const auto results = run_acceptance();
    Json crit = Json::object();
    bool all = true;
    for (const auto& c : results) {
      char key[8];
      std::snprintf(key, sizeof key, "%02d", c.id);
      crit[key] = {{"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
      if (va_c.timing) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << c.seconds;
        crit[key]["seconds"] = os.str();
      }
      run.err() << (c.passed ? "PASS " : "FAIL ") << key << "  " << c.title << '\n';
      all = all && c.passed;
    }
    r.results["criteria"] = crit;
    r.results["all_passed"] = all;
    if (!all) run.status = kExitVerification;
    return r;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return run.status;
}

}  // namespace unicx
