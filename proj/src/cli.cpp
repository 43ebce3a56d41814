#include "shortres/cli.hpp"

#include "shortres/algebra_file.hpp"
#include "shortres/laws.hpp"
#include "shortres/survey.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>

namespace shortres {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string law;
  std::string module = "k";
  unsigned N = 6, J = 10;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  SurveyConfig survey;
  std::string out_path;
};

Caps caps_of(const Options& o) { return Caps{o.N, o.J}; }

SearchOptions search_of(const Options& o) {
  SearchOptions s;
  s.seed = o.seed;
  s.budget = o.budget;
  return s;
}

GradedAlgebra require_graded(BuiltAlgebra built, const std::string& what) {
  if (auto* g = std::get_if<GradedAlgebra>(&built)) return std::move(*g);
  throw UsageError(what + " needs a graded algebra (local = false)");
}

std::vector<Poly> parse_list(const std::string& text, const std::vector<std::string>& names, const PrimeField& F) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    auto piece = text.substr(start, comma - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(piece, names, F));
    start = comma + 1;
  }
  return out;
}

// "k", "R", or generators of an ideal I in R's variables, giving R/I.
GradedModule module_over(const GradedAlgebra& R, const std::string& desc, unsigned J) {
  if (desc == "k") return residue_field(R, J);
  if (desc == "R") return cyclic_module(R, {}, J);
  return cyclic_module(R, parse_list(desc, R.names(), R.field()), J);
}

// The same over R/aR, with generators pushed into the quotient coordinates.
GradedModule module_over(const GradedQuotient& q, const GradedAlgebra& R, const std::string& desc, unsigned J) {
  if (desc == "k" || desc == "R") return module_over(q.algebra, desc, J);
  std::vector<Poly> gens;
  for (const auto& f : parse_list(desc, R.names(), R.field())) gens.push_back(q.push(f));
  return cyclic_module(q.algebra, gens, J);
}

json inspect(const BuiltAlgebra& built) {
  json j;
  if (const auto* R = std::get_if<GradedAlgebra>(&built)) {
    auto H = R->hilbert();
    j["algebra"] = algebra_hash(*R);
    j["kind"] = "graded";
    auto hf = R->hilbert_function();
    if (R->top()) hf.resize(*R->top() + 1);
    j["hilbert"] = hf;
    j["hilbert_exact"] = H.exact;
    j["mu_powers"] = hf;
    j["balanced"] = H.exact ? json(is_balanced(H.series)) : json();
    if (!R->is_artinian()) {
      j["gorenstein"] = nullptr;
      j["socle_dim"] = nullptr;
      j["note"] = "R_cap is nonzero; local invariants need an artinian algebra";
      return j;
    }
    const auto& L = R->local();
    auto S = socle(L);
    j["length"] = L.length();
    j["gorenstein"] = is_gorenstein(L);
    j["socle_dim"] = S.space.dim();
    json soc = json::array();
    for (const auto& v : S.space.basis()) soc.push_back(L.show(v));
    j["socle"] = soc;
    return j;
  }
  const auto& L = std::get<LocalAlgebra>(built);
  auto S = socle(L);
  j["algebra"] = algebra_hash(L);
  j["kind"] = "local";
  j["hilbert"] = L.hilbert_function();
  j["length"] = L.length();
  std::vector<std::size_t> mus;
  for (unsigned i = 0; i <= L.trunc(); ++i) mus.push_back(mu(L, maximal_power(L, i)));
  j["mu_powers"] = mus;
  j["balanced"] = is_balanced(L.hilbert());
  j["gorenstein"] = is_gorenstein(L);
  j["socle_dim"] = S.space.dim();
  json soc = json::array();
  for (const auto& v : S.space.basis()) soc.push_back(L.show(v));
  j["socle"] = soc;
  return j;
}

const LocalAlgebra& local_of(const BuiltAlgebra& built) {
  if (const auto* R = std::get_if<GradedAlgebra>(&built)) {
    if (!R->is_artinian()) throw UsageError("the algebra is not artinian within its cap");
    return R->local();
  }
  return std::get<LocalAlgebra>(built);
}

json ezd(const BuiltAlgebra& built, const SearchOptions& opt) {
  const auto& L = local_of(built);
  auto s = find_exact_pair(L, opt);
  json j{{"found", s.certificate.has_value()}, {"trials", s.trials}};
  if (s.certificate) j["certificate"] = json::parse(certificate_json(L, *s.certificate));
  else j["report"] = s.report;
  return j;
}

VerificationReport no_pair(const std::string& law, const PairSearch& s) {
  VerificationReport r;
  r.law = law;
  r.withhold("no exact zero divisor found: " + s.report);
  return r;
}

VerificationReport verify(const Options& o, const BuiltAlgebra& built) {
  const auto caps = caps_of(o);
  const auto opt = search_of(o);
  const std::string& law = o.law;
  if (law == "initial-forms") {
    const auto& L = local_of(built);
    auto s = find_exact_pair(L, opt);
    if (!s.certificate) return no_pair(law, s);
    return verify_initial_forms(L, s.certificate->a, s.certificate->b);
  }
  auto R = require_graded(built, "verify " + law);
  if (law == "complete-intersection") return verify_complete_intersection(R, caps);
  if (law == "koszul-socle-bound") return verify_koszul_socle_bound(R, caps, opt);
  if (law == "gorenstein-poincare") {
    std::vector<GradedModule> mods{residue_field(R, caps.J)};
    if (o.module != "k") mods.push_back(module_over(R, o.module, caps.J));
    return verify_gorenstein_poincare(R, mods, caps, opt);
  }
  if (!R.is_artinian()) throw UsageError("the algebra is not artinian within its cap");
  const auto& L = R.local();
  auto s = find_exact_pair(L, opt);
  if (!s.certificate) return no_pair(law, s);
  const auto& cert = *s.certificate;
  const Poly a = L.to_poly(cert.a), b = L.to_poly(cert.b);
  if (law == "periodic") return verify_periodic_resolution(R, a, b, caps);
  if (law == "poincare-product" || law == "graded-poincare-product") {
    auto q = quotient_by(R, a);
    auto M = module_over(q, R, o.module, caps.J);
    return law == "poincare-product" ? verify_poincare_product(R, a, b, q, M, caps)
                                     : verify_graded_poincare_product(R, a, b, q, M, caps);
  }
  if (law == "golod") {
    auto c = find_conca(L, cert, opt);
    if (!c.c) {
      VerificationReport r;
      r.law = law;
      r.withhold("no Conca generator over F_p; a field extension is possibly required");
      return r;
    }
    try {
      return verify_golod(R, construct_ci_cover(R, a, b, L.to_poly(*c.c), caps.J), caps);
    } catch (const std::runtime_error& ex) {
      VerificationReport r;
      r.law = law;
      r.refute(std::string("complete-intersection cover: ") + ex.what());
      return r;
    }
  }
  throw UsageError("unknown law '" + law + "'");
}

void write_jsonl(std::ostream& os, const std::vector<json>& records) {
  for (const auto& r : records) os << r.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact zero divisors and short resolutions over finite-field algebras", "shortres"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* c) {
    c->add_option("--capN", o.N, "homological cap")->check(CLI::Range(1u, 64u));
    c->add_option("--capJ", o.J, "internal degree cap")->check(CLI::Range(1u, 64u));
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "search seed");
    c->add_option("--budget", o.budget, "random linear forms tried");
  };

  auto* inspect_cmd = app.add_subcommand("inspect", "Hilbert function, socle, Gorenstein and balanced flags");
  inspect_cmd->add_option("file", o.file)->required();

  auto* betti_cmd = app.add_subcommand("betti", "Betti table of a module through the caps");
  betti_cmd->add_option("file", o.file)->required();
  betti_cmd->add_option("--module", o.module, "k, R, or ideal generators f1, f2, ... for R/(f)");
  add_caps(betti_cmd);

  auto* ezd_cmd = app.add_subcommand("ezd", "search for an exact zero divisor");
  ezd_cmd->add_option("file", o.file)->required();
  add_search(ezd_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check one law on an algebra");
  verify_cmd->add_option("law", o.law)->required()->check(CLI::IsMember(law_names()));
  verify_cmd->add_option("file", o.file)->required();
  verify_cmd->add_option("--module", o.module, "k, R, or ideal generators for R/(f)");
  add_caps(verify_cmd);
  add_search(verify_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "seeded survey over random cubics; JSONL records");
  survey_cmd->add_option("--e", o.survey.e, "embedding dimension")->check(CLI::Range(1, 8));
  survey_cmd->add_option("--p", o.survey.p, "prime");
  survey_cmd->add_option("--samples", o.survey.samples);
  survey_cmd->add_option("--seed", o.survey.seed);
  survey_cmd->add_option("--budget", o.survey.budget);
  survey_cmd->add_option("--module", o.survey.modules, "random cyclic modules per sample");
  survey_cmd->add_option("--jobs", o.survey.jobs)->check(CLI::Range(1u, 256u));
  survey_cmd->add_option("--out", o.out_path, "JSONL output file (default stdout)");
  survey_cmd->add_flag("--timings", o.survey.timings, "add wall-clock timings to each record");
  add_caps(survey_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*survey_cmd) {
      auto& cfg = o.survey;
      cfg.caps = caps_of(o);
      PrimeField check(cfg.p);  // throws on composite p
      auto records = run_survey(cfg);
      if (o.out_path.empty()) {
        write_jsonl(out, records);
      } else {
        std::ofstream f(o.out_path);
        if (!f) throw UsageError("cannot write " + o.out_path);
        write_jsonl(f, records);
      }
      err << summarize(cfg, records);
      return 0;
    }

    auto built = build_algebra(load_algebra(o.file));
    if (*inspect_cmd) {
      out << inspect(built).dump() << "\n";
      return 0;
    }
    if (*ezd_cmd) {
      out << ezd(built, search_of(o)).dump() << "\n";
      return 0;
    }
    if (*betti_cmd) {
      auto R = require_graded(std::move(built), "betti");
      ResolutionOptions ro;
      ro.N = o.N;
      ro.J = o.J;
      auto B = minimal_resolution(R, module_over(R, o.module, o.J), ro);
      json j = json::parse(B.to_json());
      json warnings = json::array();
      for (unsigned i = 0; i <= B.N(); ++i)
        if (!B.complete(i))
          warnings.push_back("beta_" + std::to_string(i) + " may have generators beyond degree " + std::to_string(B.J()));
      j["module"] = o.module;
      j["warnings"] = warnings;
      out << j.dump() << "\n";
      return 0;
    }
    auto report = verify(o, built);
    report.inputs["algebra"] = std::visit([](const auto& A) { return algebra_hash(A); }, built);
    report.inputs["seed"] = o.seed;
    report.inputs["module"] = o.module;
    out << report.to_json().dump() << "\n";
    if (!report.notes.empty())
      for (const auto& n : report.notes) err << n << "\n";
    return report.refuted() ? 1 : 0;
  } catch (const AlgebraFileError& e) {
    err << o.file << ": " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "module: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace shortres
