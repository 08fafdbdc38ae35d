#include "fidl/congruence.hpp"

#include <algorithm>

#include "fidl/io.hpp"

namespace fidl {

namespace {

std::vector<Partition> lattice_congruences(const FiniteLattice& l) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(l.size()))
    if (is_lattice_congruence(l, p)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> spectral_congruences(const FiniteLattice& l) {
  const Spectrum s = spectrum(l);
  std::vector<Partition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask)
    out.push_back(theta_from_closed(l, s, Subset::from_mask(s.size(), mask)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FidlCongruence> compatible_pairs(const FidlModule& m, const std::vector<Partition>& ca,
                                             const std::vector<Partition>& cb, Compatibility which) {
  std::vector<FidlCongruence> out;
  for (const auto& a : ca)
    for (const auto& b : cb) {
      FidlCongruence c{a, b};
      if (!compatibility_failure(m, c, which)) out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Compatibility compatibility_of(ClosedKind k) {
  switch (k) {
    case ClosedKind::r_closed: return Compatibility::fusion;
    case ClosedKind::t_closed: return Compatibility::implication;
    case ClosedKind::strongly_closed: return Compatibility::both;
  }
  return Compatibility::both;
}

bool pair_subset(const ClosedPair& a, const ClosedPair& b) {
  return a.z1.is_subset_of(b.z1) && a.z2.is_subset_of(b.z2);
}

json congruence_list(const std::vector<FidlCongruence>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(congruence_to_json(c));
  return out;
}

json closed_list(const std::vector<ClosedPair>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(closed_pair_to_json(z));
  return out;
}

}  // namespace

bool refines(const FidlCongruence& lhs, const FidlCongruence& rhs) {
  return lhs.theta_a.refines(rhs.theta_a) && lhs.theta_b.refines(rhs.theta_b);
}

std::string_view to_string(Compatibility c) {
  switch (c) {
    case Compatibility::fusion: return "fusion";
    case Compatibility::implication: return "implication";
    case Compatibility::both: return "both";
  }
  return "both";
}

std::optional<nlohmann::json> compatibility_failure(const FidlModule& m, const FidlCongruence& c,
                                                    Compatibility which) {
  const auto na = static_cast<Element>(m.a().size()), nb = static_cast<Element>(m.b().size());
  const bool check_f = which != Compatibility::implication;
  const bool check_i = which != Compatibility::fusion;
  for (Element a = 0; a < na; ++a)
    for (Element cc = 0; cc < na; ++cc) {
      if (!c.theta_a.related(a, cc)) continue;
      for (Element b = 0; b < nb; ++b)
        for (Element d = 0; d < nb; ++d) {
          if (!c.theta_b.related(b, d)) continue;
          if (check_f && !c.theta_a.related(m.f(a, b), m.f(cc, d)))
            return json{{"condition", "C1"}, {"a", a}, {"c", cc}, {"b", b}, {"d", d}};
          if (check_i && !c.theta_a.related(m.i(b, a), m.i(d, cc)))
            return json{{"condition", "C2"}, {"a", a}, {"c", cc}, {"b", b}, {"d", d}};
        }
    }
  return std::nullopt;
}

std::vector<FidlCongruence> congruences_by_partitions(const FidlModule& m, Compatibility which) {
  const Budget budget = Budget::current();
  require_budget(m.a().size() <= budget.partition_max_a, "partition oracle, sort A", m.a().size(),
                 budget.partition_max_a);
  require_budget(m.b().size() <= budget.partition_max_b, "partition oracle, sort B", m.b().size(),
                 budget.partition_max_b);
  return compatible_pairs(m, lattice_congruences(m.a()), lattice_congruences(m.b()), which);
}

std::vector<FidlCongruence> congruences_by_spectra(const FidlModule& m, Compatibility which) {
  const Budget budget = Budget::current();
  const std::size_t points = spectrum(m.a()).size() + spectrum(m.b()).size();
  require_budget(points <= budget.closed_pair_max_points, "spectral oracle", points, budget.closed_pair_max_points);
  return compatible_pairs(m, spectral_congruences(m.a()), spectral_congruences(m.b()), which);
}

std::vector<FidlCongruence> congruences(const FidlModule& m, Compatibility which) {
  const Budget budget = Budget::current();
  if (m.a().size() <= budget.partition_max_a && m.b().size() <= budget.partition_max_b)
    return congruences_by_partitions(m, which);
  return congruences_by_spectra(m, which);
}

Subset r1_set(const FiFrame& f, Element y, Element z) {
  Subset s(f.x.size());
  for (Element x = 0; x < f.x.size(); ++x)
    if (f.r.contains(x, y, z)) s.insert(x);
  return f.x.maximal_in(s);
}

Subset r2_set(const FiFrame& f, Element x, Element z) {
  Subset s(f.y.size());
  for (Element y = 0; y < f.y.size(); ++y)
    if (f.r.contains(x, y, z)) s.insert(y);
  return f.y.maximal_in(s);
}

Subset t1_set(const FiFrame& f, Element x, Element z) {
  Subset s(f.y.size());
  for (Element y = 0; y < f.y.size(); ++y)
    if (f.t.contains(y, x, z)) s.insert(y);
  return f.y.maximal_in(s);
}

Subset t3_set(const FiFrame& f, Element y, Element x) { return f.x.minimal_in(f.t.third(y, x)); }

std::vector<std::pair<Element, Element>> max_r_inverse(const FiFrame& f, Element z) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < f.x.size(); ++x)
    for (Element y = 0; y < f.y.size(); ++y)
      if (r1_set(f, y, z).contains(x) && r2_set(f, x, z).contains(y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<Element, Element>> d_set(const FiFrame& f, Element x) {
  std::vector<std::pair<Element, Element>> out;
  for (Element y = 0; y < f.y.size(); ++y)
    for (Element z = 0; z < f.x.size(); ++z)
      if (t1_set(f, x, z).contains(y) && t3_set(f, y, x).contains(z)) out.emplace_back(y, z);
  return out;
}

ClosedPairTester::ClosedPairTester(const FiFrame& f) : nx_{f.x.size()}, ny_{f.y.size()} {
  for (Element p = 0; p < nx_; ++p) {
    Subset mx(nx_), my(ny_), dy(ny_), dz(nx_);
    for (const auto& [x, y] : max_r_inverse(f, p)) {
      mx.insert(x);
      my.insert(y);
    }
    for (const auto& [y, z] : d_set(f, p)) {
      dy.insert(y);
      dz.insert(z);
    }
    max_first_.push_back(std::move(mx));
    max_second_.push_back(std::move(my));
    d_first_.push_back(std::move(dy));
    d_second_.push_back(std::move(dz));
  }
}

ClosedPair ClosedPairTester::evaluate(const Subset& z1, const Subset& z2) const {
  ClosedPair out{z1, z2, true, true};
  z1.for_each([&](std::size_t p) {
    out.r_closed = out.r_closed && max_first_[p].is_subset_of(z1) && max_second_[p].is_subset_of(z2);
    out.t_closed = out.t_closed && d_first_[p].is_subset_of(z2) && d_second_[p].is_subset_of(z1);
  });
  return out;
}

ClosedPair ClosedPairTester::closure(Subset z1, Subset z2) const {
  for (bool changed = true; changed;) {
    changed = false;
    const Subset before1 = z1, before2 = z2;
    before1.for_each([&](std::size_t p) {
      z1 |= max_first_[p];
      z2 |= max_second_[p];
      z2 |= d_first_[p];
      z1 |= d_second_[p];
    });
    changed = !(z1 == before1) || !(z2 == before2);
  }
  return evaluate(z1, z2);
}

std::vector<ClosedPair> enumerate_closed_pairs(const FiFrame& f, ClosedKind kind) {
  const std::size_t nx = f.x.size(), ny = f.y.size();
  const std::size_t limit = Budget::current().closed_pair_max_points;
  require_budget(nx + ny <= limit, "closed-pair enumeration", nx + ny, limit);
  const ClosedPairTester tester(f);
  std::vector<ClosedPair> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nx + ny)); ++mask) {
    ClosedPair z = tester.evaluate(Subset::from_mask(nx, mask & ((std::uint64_t{1} << nx) - 1)),
                                   Subset::from_mask(ny, mask >> nx));
    const bool keep = kind == ClosedKind::r_closed   ? z.r_closed
                      : kind == ClosedKind::t_closed ? z.t_closed
                                                     : z.strongly_closed();
    if (keep) out.push_back(std::move(z));
  }
  return out;
}

std::vector<ClosedPair> enumerate_strongly_closed(const FiFrame& f) {
  return enumerate_closed_pairs(f, ClosedKind::strongly_closed);
}

ClosedPair closure_strongly_closed(const FiFrame& f, const Subset& seed1, const Subset& seed2) {
  const std::size_t limit = Budget::current().closed_pair_max_points;
  require_budget(f.x.size() + f.y.size() <= limit, "strongly closed closure", f.x.size() + f.y.size(), limit);
  return ClosedPairTester(f).closure(seed1, seed2);
}

FidlCongruence theta_of(const FidlModule& m, const CanonicalFrame& c, const Subset& z1, const Subset& z2) {
  return {theta_from_closed(m.a(), c.spec_a, z1), theta_from_closed(m.b(), c.spec_b, z2)};
}

FidlCongruence theta_pair(const FidlModule& m, const CanonicalFrame& c, const ClosedPair& z) {
  const ClosedPair checked = ClosedPairTester(c.frame).evaluate(z.z1, z.z2);
  if (!checked.strongly_closed())
    throw Error(ErrorCode::not_strongly_closed, "pair is not strongly closed",
                {{"pair", closed_pair_to_json(checked)}});
  FidlCongruence out = theta_of(m, c, z.z1, z.z2);
  if (auto w = compatibility_failure(m, out, Compatibility::both))
    throw Error(ErrorCode::condition_violation, "theta of a strongly closed pair is not compatible", *w);
  return out;
}

bool AntiIsoReport::pass() const {
  if (partition_oracle_ran && !oracles_agree) return false;
  for (const auto& p : pairings)
    if (!p.pass()) return false;
  return true;
}

AntiIsoReport anti_isomorphism_check(const FidlModule& m) {
  AntiIsoReport out;
  const CanonicalFrame c = canonical_frame(m);
  const Budget budget = Budget::current();
  out.partition_oracle_ran = m.a().size() <= budget.partition_max_a && m.b().size() <= budget.partition_max_b;
  for (ClosedKind kind : {ClosedKind::r_closed, ClosedKind::t_closed, ClosedKind::strongly_closed}) {
    const Compatibility which = compatibility_of(kind);
    PairingReport rep;
    rep.name = std::string(to_string(which));
    const auto closed = enumerate_closed_pairs(c.frame, kind);
    const auto spectral = congruences_by_spectra(m, which);
    if (out.partition_oracle_ran && congruences_by_partitions(m, which) != spectral) out.oracles_agree = false;
    rep.closed_count = closed.size();
    rep.congruence_count = spectral.size();

    std::vector<FidlCongruence> image;
    rep.into = true;
    for (const auto& z : closed) {
      image.push_back(theta_of(m, c, z.z1, z.z2));
      if (!std::binary_search(spectral.begin(), spectral.end(), image.back())) {
        rep.into = false;
        if (rep.discrepancies.size() < 8)
          rep.discrepancies.push_back({{"kind", "not_a_congruence"}, {"pair", closed_pair_to_json(z)}});
      }
    }
    std::vector<FidlCongruence> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.bijective = distinct && sorted == spectral;
    if (!rep.bijective) {
      for (const auto& cg : spectral)
        if (!std::binary_search(sorted.begin(), sorted.end(), cg) && rep.discrepancies.size() < 8)
          rep.discrepancies.push_back({{"kind", "missed_congruence"}, {"congruence", congruence_to_json(cg)}});
      if (!distinct) rep.discrepancies.push_back({{"kind", "not_injective"}});
    }
    rep.order_reversing = true;
    for (std::size_t p = 0; p < closed.size(); ++p)
      for (std::size_t q = 0; q < closed.size(); ++q)
        if (pair_subset(closed[p], closed[q]) != refines(image[q], image[p])) {
          if (rep.order_reversing)
            rep.discrepancies.push_back({{"kind", "order"},
                                         {"first", closed_pair_to_json(closed[p])},
                                         {"second", closed_pair_to_json(closed[q])}});
          rep.order_reversing = false;
        }
    out.pairings.push_back(std::move(rep));
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "trivial";
    case Verdict::simple: return "simple";
    case Verdict::si_not_simple: return "subdirectly_irreducible_not_simple";
    case Verdict::not_si: return "not_SI";
  }
  return "unknown";
}

std::size_t ClassifyReport::count(std::string_view kind) const {
  return static_cast<std::size_t>(
      std::count_if(discrepancies.begin(), discrepancies.end(), [&](const Discrepancy& d) { return d.kind == kind; }));
}

ClassifyReport classify(const FidlModule& m) {
  ClassifyReport out;
  const CanonicalFrame c = canonical_frame(m);
  out.con = congruences(m, Compatibility::both);
  out.con_size = out.con.size();
  out.strongly_closed = enumerate_strongly_closed(c.frame);
  out.strongly_closed_count = out.strongly_closed.size();
  if (m.is_trivial()) {
    out.verdict = Verdict::trivial;
    out.subdirectly_irreducible = true;
    return out;
  }

  const FidlCongruence delta{Partition::identity(m.a().size()), Partition::identity(m.b().size())};
  std::optional<FidlCongruence> minimum;
  for (const auto& cand : out.con) {
    if (cand == delta) continue;
    bool below_all = true;
    for (const auto& other : out.con)
      if (!(other == delta) && !refines(cand, other)) below_all = false;
    if (below_all) minimum = cand;
  }
  if (out.con_size == 2) out.verdict = Verdict::simple;
  else if (minimum) out.verdict = Verdict::si_not_simple;
  else out.verdict = Verdict::not_si;
  out.subdirectly_irreducible = out.verdict != Verdict::not_si;

  const std::size_t nx = c.spec_a.size(), ny = c.spec_b.size();
  auto base_record = [&]() {
    return json{{"module", module_to_json(m)},
                {"frame", frame_to_json(c.frame)},
                {"congruences", congruence_list(out.con)},
                {"stronglyClosed", closed_list(out.strongly_closed)}};
  };

  const Subset empty_x(nx), empty_y(ny), full_x = Subset::full(nx), full_y = Subset::full(ny);
  bool closed_simple = out.strongly_closed.size() == 2;
  for (const auto& z : out.strongly_closed)
    closed_simple = closed_simple && ((z.z1 == empty_x && z.z2 == empty_y) || (z.z1 == full_x && z.z2 == full_y));
  if (closed_simple != (out.verdict == Verdict::simple)) {
    json rec = base_record();
    rec["criterion"] = closed_simple;
    rec["authoritative"] = std::string(to_string(out.verdict));
    out.discrepancies.push_back({"closed_pairs_simple", std::move(rec)});
  }

  const ClosedPairTester tester(c.frame);
  json j_set = json::array();
  std::optional<std::pair<Element, Element>> not_full;
  for (Element p = 0; p < nx; ++p)
    for (Element q = 0; q < ny; ++q) {
      Subset s1(nx), s2(ny);
      s1.insert(p);
      s2.insert(q);
      const ClosedPair cl = tester.closure(s1, s2);
      if (cl.z1.is_full() && cl.z2.is_full()) j_set.push_back({p, q});
      else if (!not_full) not_full = std::make_pair(p, q);
    }
  out.point_closure_simple = !not_full.has_value();
  out.point_closure_si = !j_set.empty() && j_set.size() != nx * ny;

  if (*out.point_closure_simple != (out.verdict == Verdict::simple)) {
    json rec = base_record();
    rec["criterion"] = *out.point_closure_simple;
    rec["authoritative"] = std::string(to_string(out.verdict));
    if (not_full) {
      rec["pair"] = {not_full->first, not_full->second};
    } else {
      for (const auto& z : out.strongly_closed)
        if (!(z.z1 == empty_x && z.z2 == empty_y) && !(z.z1 == full_x && z.z2 == full_y)) {
          rec["pair"] = closed_pair_to_json(z);
          break;
        }
    }
    out.discrepancies.push_back({"point_closure_simple", std::move(rec)});
  }
  if (*out.point_closure_si != (out.verdict == Verdict::si_not_simple)) {
    json rec = base_record();
    rec["criterion"] = *out.point_closure_si;
    rec["authoritative"] = std::string(to_string(out.verdict));
    rec["J"] = j_set;
    out.discrepancies.push_back({"point_closure_si", std::move(rec)});
  }
  return out;
}

nlohmann::json congruence_to_json(const FidlCongruence& c) {
  return {{"thetaA", c.theta_a.block_lists()}, {"thetaB", c.theta_b.block_lists()}};
}

nlohmann::json closed_pair_to_json(const ClosedPair& z) {
  return {{"Z1", z.z1.elements()}, {"Z2", z.z2.elements()}, {"rClosed", z.r_closed}, {"tClosed", z.t_closed}};
}

nlohmann::json to_json(const ClassifyReport& r) {
  json d = json::array();
  for (const auto& x : r.discrepancies) {
    json rec = x.record;
    rec["kind"] = x.kind;
    d.push_back(std::move(rec));
  }
  json diag = json::object();
  diag["pointClosureSimple"] = r.point_closure_simple ? json(*r.point_closure_simple) : json(nullptr);
  diag["pointClosureSI"] = r.point_closure_si ? json(*r.point_closure_si) : json(nullptr);
  return {{"verdict", std::string(to_string(r.verdict))},
          {"subdirectlyIrreducible", r.subdirectly_irreducible},
          {"conLatticeSize", r.con_size},
          {"stronglyClosedCount", r.strongly_closed_count},
          {"diagnostics", diag},
          {"discrepancies", d}};
}

nlohmann::json to_json(const AntiIsoReport& r) {
  json pairings = json::array();
  for (const auto& p : r.pairings)
    pairings.push_back({{"name", p.name},
                        {"closedCount", p.closed_count},
                        {"congruenceCount", p.congruence_count},
                        {"into", p.into},
                        {"bijective", p.bijective},
                        {"orderReversing", p.order_reversing},
                        {"discrepancies", p.discrepancies}});
  return {{"pairings", pairings},
          {"oraclesAgree", r.oracles_agree},
          {"partitionOracleRan", r.partition_oracle_ran},
          {"pass", r.pass()}};
}

}  // namespace fidl
