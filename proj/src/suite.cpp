#include "fidl/suite.hpp"

#include "fidl/io.hpp"

namespace fidl {

namespace {

bool contained(const Subset& a, const Subset& b) { return a.is_subset_of(b); }

Partition meet(const Partition& p, const Partition& q) {
  std::vector<Element> block(p.size());
  std::map<std::pair<Element, Element>, Element> ids;
  for (Element x = 0; x < p.size(); ++x) {
    auto [it, fresh] = ids.try_emplace({p.block(x), q.block(x)}, static_cast<Element>(ids.size()));
    block[x] = it->second;
  }
  return Partition(std::move(block));
}

void filter_extension_closure(SuiteReport& r, const std::string& name, const FidlModule& m) {
  const auto fa = enumerate_filters(m.a()), fb = enumerate_filters(m.b());
  for (ExtensionMode mode : {ExtensionMode::fusion, ExtensionMode::implication})
    for (const Subset& g : fa)
      for (const Subset& h : fb) {
        const Subset e = filter_extension(m, mode, g, h);
        if (!is_filter(m.a(), e)) {
          r.record(name, "filter_extension", false,
                   {{"mode", mode == ExtensionMode::fusion ? "fusion" : "implication"},
                    {"G", g.elements()}, {"H", h.elements()}, {"extension", e.elements()}});
          return;
        }
      }
  r.record(name, "filter_extension", true);
}

void prime_extension(SuiteReport& r, const std::string& name, const FidlModule& m) {
  const auto fa = enumerate_filters(m.a()), fb = enumerate_filters(m.b());
  const Spectrum sa = spectrum(m.a()), sb = spectrum(m.b());
  for (ExtensionMode mode : {ExtensionMode::fusion, ExtensionMode::implication})
    for (const Subset& g : fa)
      for (const Subset& h : fb) {
        const Subset e = filter_extension(m, mode, g, h);
        for (const Subset& p : sa.points) {
          if (!contained(e, p)) continue;
          const auto w = extend_to_primes(m, mode, g, h, p, sa, sb);
          const bool ok = w && contained(g, sa.points[w->q]) && contained(h, sb.points[w->r]) &&
                          contained(filter_extension(m, mode, sa.points[w->q], sb.points[w->r]), p);
          if (!ok) {
            r.record(name, "prime_extension", false,
                     {{"mode", mode == ExtensionMode::fusion ? "fusion" : "implication"},
                      {"G", g.elements()}, {"H", h.elements()}, {"P", p.elements()}});
            return;
          }
        }
      }
  r.record(name, "prime_extension", true);
}

void membership(SuiteReport& r, const std::string& name, const FidlModule& m, const CanonicalFrame& c) {
  for (Element x = 0; x < m.a().size(); ++x)
    for (Element b = 0; b < m.b().size(); ++b)
      for (Element p = 0; p < c.spec_a.size(); ++p)
        if (!membership_check(m, c, x, b, p).agrees()) {
          r.record(name, "membership", false, {{"x", x}, {"b", b}, {"P", p}});
          return;
        }
  r.record(name, "membership", true);
}

}  // namespace

void SuiteReport::record(const std::string& document, const std::string& property, bool ok, nlohmann::json witness) {
  auto& t = properties[property];
  if (ok) {
    ++t.pass;
    return;
  }
  ++t.fail;
  failures.push_back({document, property, std::move(witness)});
}

Verdict verdict_of(const FidlModule& m, const std::vector<FidlCongruence>& con) {
  if (m.is_trivial()) return Verdict::trivial;
  if (con.size() == 2) return Verdict::simple;
  const FidlCongruence delta{Partition::identity(m.a().size()), Partition::identity(m.b().size())};
  FidlCongruence monolith{Partition::total(m.a().size()), Partition::total(m.b().size())};
  for (const auto& c : con)
    if (!(c == delta)) monolith = {meet(monolith.theta_a, c.theta_a), meet(monolith.theta_b, c.theta_b)};
  return monolith == delta ? Verdict::not_si : Verdict::si_not_simple;
}

void check_module(SuiteReport& r, const std::string& name, const FidlModule& m, const SuiteLimits& limits) {
  const auto violations = FidlModule::check_axioms(m.a(), m.b(), m.fusion_table(), m.implication_table());
  r.record(name, "axioms", violations.empty(),
           violations.empty() ? json(nullptr) : json{{"axiom", violations.front().axiom}, {"witness", violations.front().witness}});

  const auto mono = monotonicity_failure(m);
  r.record(name, "monotonicity", !mono, mono ? *mono : json(nullptr));
  filter_extension_closure(r, name, m);

  if (m.a().size() <= limits.prime_a && m.b().size() <= limits.prime_b) prime_extension(r, name, m);
  else r.skip("prime_extension");

  const CanonicalFrame c = canonical_frame(m);
  membership(r, name, m, c);

  try {
    const RepresentationReport rep = representation_iso(m);
    r.record(name, "representation", rep.iso);
  } catch (const Error& e) {
    r.record(name, "representation", false, e.to_json());
  }

  if (m.a().size() <= limits.congruence_a && m.b().size() <= limits.congruence_b) {
    const AntiIsoReport anti = anti_isomorphism_check(m);
    r.record(name, "anti_isomorphism", anti.pass(), anti.pass() ? json(nullptr) : to_json(anti));

    const ClassifyReport cls = classify(m);
    const Verdict direct = verdict_of(m, congruences_by_spectra(m, Compatibility::both));
    r.record(name, "classification", cls.verdict == direct,
             {{"classify", to_string(cls.verdict)}, {"direct", to_string(direct)}});
    for (const auto& d : cls.discrepancies) r.discrepancies.push_back({{"document", name}, {"kind", d.kind}});
  } else {
    r.skip("anti_isomorphism");
    r.skip("classification");
  }
}

nlohmann::json to_json(const SuiteReport& r) {
  json props = json::object();
  for (const auto& [name, t] : r.properties) props[name] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"document", f.document}, {"property", f.property}, {"witness", f.witness}});
  return {{"properties", props}, {"failures", failures}, {"discrepancies", r.discrepancies}, {"pass", r.pass()}};
}

}  // namespace fidl
