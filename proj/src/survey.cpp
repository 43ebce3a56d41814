#include "shortres/survey.hpp"

#include "shortres/algebra_file.hpp"
#include "shortres/invsys.hpp"
#include "shortres/random.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace shortres {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json brief(const VerificationReport& r) {
  json j{{"outcome", to_string(r.outcome)}};
  if (r.refuted()) j["witness"] = r.witness;
  if (r.outcome == Outcome::inapplicable) j["reason"] = r.reason;
  return j;
}

Poly random_quadric(const PrimeField& F, std::size_t nvars, std::mt19937_64& rng) {
  Poly f(F, nvars);
  while (f.is_zero())
    for (const auto& m : monomial_basis(nvars, 2)) f.add_term(m, draw_residue(rng, F.p()));
  return f;
}

json run_sample(const SurveyConfig& cfg, std::size_t index) {
  auto rng = derive_stream(cfg.seed, index);
  const PrimeField F(cfg.p);
  const long long e = static_cast<long long>(cfg.e);
  json rec;
  rec["seed"] = cfg.seed;
  rec["sample"] = index;
  rec["e"] = cfg.e;
  rec["p"] = cfg.p;
  json timings = json::object();
  auto t0 = Clock::now();
  auto lap = [&](const char* stage) {
    auto t1 = Clock::now();
    timings[stage] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    t0 = t1;
  };
  auto finish = [&](json& r) -> json {
    if (cfg.timings) r["timings_ms"] = timings;
    return r;
  };

  Poly cubic = random_cubic(F, cfg.e, rng);
  const unsigned cap = std::max(cfg.caps.J, 4u);
  auto R = apolar_algebra(cubic, default_var_names(cfg.e), cap);
  auto H = R.hilbert();
  rec["cubic"] = to_string(cubic, R.names());
  rec["hilbert"] = to_int64(H.series.coeffs());
  const bool shape = H.exact && H.series == IntPoly{1, e, e, 1};
  rec["hilbert_shape"] = shape;
  if (cfg.e < 3) rec["below_e3"] = true;
  lap("algebra");
  if (cfg.hilbert_only || !shape) return finish(rec);

  const auto& L = R.local();
  SearchOptions opt;
  opt.seed = rng();
  opt.budget = cfg.budget;
  auto pair = find_exact_pair(L, opt);
  rec["ezd_found"] = pair.certificate.has_value();
  rec["ezd_trials"] = pair.trials;
  lap("ezd");
  if (!pair.certificate) {
    rec["ezd_report"] = pair.report;
    return finish(rec);
  }
  const auto& cert = *pair.certificate;
  rec["certificate_hash"] = text_hash(certificate_json(L, cert));
  rec["pair"] = {{"a", L.show(cert.a)}, {"b", L.show(cert.b)}, {"phase", cert.phase}};
  const Poly a = L.to_poly(cert.a), b = L.to_poly(cert.b);

  auto conca = find_conca(L, cert, opt);
  rec["conca_found"] = conca.c.has_value();
  if (conca.c) rec["conca"] = L.show(*conca.c);
  lap("conca");

  json laws;
  laws["periodic"] = brief(verify_periodic_resolution(R, a, b, cfg.caps));

  auto ks = verify_koszul_socle_bound(R, cfg.caps, opt);
  laws["koszul-socle-bound"] = brief(ks);
  rec["socle"] = ks.payload.value("s", json());
  if (!conca.c && ks.verified() && !ks.notes.empty()) rec["note"] = "extension possibly required for a Conca generator";

  std::vector<GradedModule> mods{residue_field(R, cfg.caps.J)};
  for (std::size_t m = 0; m < cfg.modules; ++m) mods.push_back(cyclic_module(R, {random_quadric(F, cfg.e, rng)}, cfg.caps.J));
  auto gp = verify_gorenstein_poincare(R, mods, cfg.caps, opt);
  laws["gorenstein-poincare"] = brief(gp);
  if (gp.payload.contains("P_k")) rec["P_k"] = gp.payload["P_k"];
  if (gp.payload.contains("modules")) {
    json windows = json::array();
    for (const auto& m : gp.payload["modules"]) windows.push_back({{"window", m["window"]}, {"product", m["product"]}});
    rec["module_products"] = windows;
  }
  lap("koszul");

  auto q = quotient_by(R, a);
  const auto& Rbar = q.algebra;
  std::vector<std::pair<std::string, GradedModule>> over_bar{
      {"k", residue_field(Rbar, cfg.caps.J)},
      {"R/aR", cyclic_module(Rbar, {}, cfg.caps.J)},
      {"cyclic", cyclic_module(Rbar, {random_quadric(F, Rbar.nvars(), rng)}, cfg.caps.J)}};
  json pp = json::object();
  for (const auto& [name, M] : over_bar) pp[name] = brief(verify_poincare_product(R, a, b, q, M, cfg.caps));
  laws["poincare-product"] = pp;
  lap("poincare");

  if (conca.c) {
    try {
      auto cover = construct_ci_cover(R, a, b, L.to_poly(*conca.c), cfg.caps.J);
      auto g = verify_golod(R, cover, cfg.caps);
      laws["golod"] = brief(g);
      laws["golod"]["case"] = cover.case_no;
      json series = json::object();
      for (const char* key : {"P_k_R", "P_R_Q", "P_k_Q"})
        if (g.payload.contains(key)) series[key] = g.payload[key];
      rec["golod_series"] = series;
    } catch (const std::runtime_error& ex) {
      laws["golod"] = {{"outcome", "refuted"}, {"witness", std::string("cover: ") + ex.what()}};
    }
    lap("golod");
  }
  rec["laws"] = laws;
  return finish(rec);
}

}  // namespace

std::vector<json> run_survey(const SurveyConfig& cfg) {
  std::vector<json> out(cfg.samples);
  if (cfg.samples == 0) return out;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cfg.samples;) out[i] = run_sample(cfg, i);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.samples)));
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::string summarize(const SurveyConfig& cfg, const std::vector<json>& records) {
  std::size_t shape = 0, ezd = 0, conca = 0, golod = 0;
  std::map<std::string, std::size_t> verified;
  for (const auto& r : records) {
    shape += r.value("hilbert_shape", false);
    ezd += r.value("ezd_found", false);
    conca += r.value("conca_found", false);
    if (!r.contains("laws")) continue;
    for (const auto& [name, v] : r["laws"].items()) {
      if (name == "poincare-product") {
        bool all = true;
        for (const auto& [m, w] : v.items()) all = all && w["outcome"] == "verified_to_caps";
        verified[name] += all;
      } else {
        verified[name] += v["outcome"] == "verified_to_caps";
      }
    }
    golod += r.contains("laws") && r["laws"].contains("golod");
  }
  const std::size_t n = records.size();
  auto rate = [&](std::size_t k, std::size_t of) {
    std::ostringstream s;
    s << k << "/" << of;
    if (of) s << " (" << (100.0 * k / of) << "%)";
    return s.str();
  };
  std::ostringstream s;
  s << "survey e=" << cfg.e << " p=" << cfg.p << " seed=" << cfg.seed << " samples=" << n << "\n";
  s << "  hilbert 1+et+et^2+t^3: " << rate(shape, n) << "\n";
  s << "  exact zero divisor found: " << rate(ezd, shape) << "\n";
  s << "  Conca generator found: " << rate(conca, ezd) << "\n";
  for (const auto& [name, k] : verified)
    s << "  " << name << " verified: " << rate(k, name == "golod" ? golod : ezd) << "\n";
  return s.str();
}

}  // namespace shortres
