#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "fidl/dot.hpp"
#include "fidl/fuzz.hpp"
#include "fidl/io.hpp"
#include "fidl/suite.hpp"

namespace fs = std::filesystem;
using namespace fidl;

namespace {

constexpr int kPass = 0, kProperty = 1, kMalformed = 2, kBudget = 3;

void emit(const json& j) { std::cout << canonical_dump(j); }

int fail(const json& report) {
  emit(report);
  return kProperty;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    switch (classify(e.code())) {
      case ErrorClass::property:
        emit(e.to_json());
        return kProperty;
      case ErrorClass::budget:
        std::cerr << canonical_dump(e.to_json());
        return kBudget;
      case ErrorClass::malformed:
        std::cerr << canonical_dump(e.to_json());
        return kMalformed;
    }
  } catch (const json::exception& e) {
    std::cerr << canonical_dump({{"error", "malformed"}, {"message", e.what()}});
    return kMalformed;
  }
  return kMalformed;
}

InstanceDocument expect(const std::string& path, DocumentKind kind) {
  InstanceDocument d = read_document(path);
  if (d.kind != kind)
    throw Error(ErrorCode::kind_mismatch, "expected a " + std::string(to_string(kind)) + " document",
                {{"expected", to_string(kind)}, {"actual", to_string(d.kind)}});
  return d;
}

FidlModule read_module(const std::string& path) { return module_from_json(expect(path, DocumentKind::module).payload); }

const json& context_entry(const InstanceDocument& d, const char* key) {
  if (!d.context.is_object() || !d.context.contains(key))
    throw Error(ErrorCode::malformed, std::string("document needs a context with \"") + key + "\"", {{"missing", key}});
  return d.context[key];
}

FidlModule context_module(const InstanceDocument& d, const char* key) {
  return module_from_json(payload_of(context_entry(d, key), DocumentKind::module));
}

json sizes(const FidlModule& m) { return {{"A", m.a().size()}, {"B", m.b().size()}}; }

int check_hom(const FidlModule& src, const FidlModule& tgt, const json& maps) {
  auto [alpha, gamma] = hom_maps_from_json(maps);
  if (auto e = hom_failure(src, tgt, alpha, gamma)) return fail({{"kind", "hom"}, {"valid", false}, {"error", e->to_json()}});
  const IsoReport iso = is_iso(validate_hom(src, tgt, std::move(alpha), std::move(gamma)));
  emit({{"kind", "hom"}, {"valid", true}, {"iso", iso.iso}});
  return kPass;
}

int check_subalgebra(const FidlModule& m, const json& carriers) {
  const SubalgebraCandidate c = candidate_from_json(carriers, m);
  require_sublattices(m, c);
  const SubalgebraVerdict direct = validate_subalgebra_direct(m, c);
  const SubalgebraVerdict relational = validate_subalgebra_relational(m, c);
  const bool agree = direct.fusion_closed == relational.fusion_closed &&
                     direct.implication_closed == relational.implication_closed;
  json report = {{"kind", "subalgebra"},
                 {"valid", direct.subalgebra()},
                 {"fusionClosed", direct.fusion_closed},
                 {"implicationClosed", direct.implication_closed},
                 {"relational", {{"fusionClosed", relational.fusion_closed},
                                 {"implicationClosed", relational.implication_closed}}},
                 {"checkersAgree", agree},
                 {"fusionWitness", direct.fusion_witness},
                 {"implicationWitness", direct.implication_witness}};
  if (!direct.subalgebra() || !agree) return fail(report);
  emit(report);
  return kPass;
}

int check_congruence(const FidlModule& m, const json& payload) {
  const FidlCongruence c{partition_from_blocks(payload.at("thetaA"), m.a().size()),
                         partition_from_blocks(payload.at("thetaB"), m.b().size())};
  if (!is_lattice_congruence(m.a(), c.theta_a) || !is_lattice_congruence(m.b(), c.theta_b))
    return fail({{"kind", "congruence"}, {"valid", false},
                 {"witness", {{"latticeCongruenceA", is_lattice_congruence(m.a(), c.theta_a)},
                              {"latticeCongruenceB", is_lattice_congruence(m.b(), c.theta_b)}}}});
  if (auto w = compatibility_failure(m, c, Compatibility::both))
    return fail({{"kind", "congruence"}, {"valid", false}, {"witness", *w}});
  emit({{"kind", "congruence"}, {"valid", true}});
  return kPass;
}

int cmd_check(const std::string& path) {
  const InstanceDocument d = read_document(path);
  switch (d.kind) {
    case DocumentKind::lattice: {
      const FiniteLattice l = lattice_from_json(d.payload);
      emit({{"kind", "lattice"}, {"valid", true}, {"size", l.size()}});
      return kPass;
    }
    case DocumentKind::module: {
      const FidlModule m = module_from_json(d.payload);
      emit({{"kind", "module"}, {"valid", true}, {"sizes", sizes(m)}});
      return kPass;
    }
    case DocumentKind::frame: {
      const FiFrame f = frame_from_json(d.payload);
      emit({{"kind", "frame"}, {"valid", true}, {"sizes", {{"X", f.x.size()}, {"Y", f.y.size()}}}});
      return kPass;
    }
    case DocumentKind::hom:
      return check_hom(context_module(d, "source"), context_module(d, "target"), d.payload);
    case DocumentKind::subalgebra:
      return check_subalgebra(context_module(d, "module"), d.payload);
    case DocumentKind::congruence:
      return check_congruence(context_module(d, "module"), d.payload);
  }
  return kMalformed;
}

int cmd_dualize(const std::string& path, const std::string& to, bool roundtrip) {
  InstanceDocument out;
  out.meta = {{"source", fs::path(path).filename().string()}};
  json verdict;
  if (to == "frame") {
    const FidlModule m = read_module(path);
    out.kind = DocumentKind::frame;
    out.payload = frame_to_json(canonical_frame(m).frame);
    if (roundtrip) verdict = {{"map", "beta"}, {"iso", representation_iso(m).iso}};
  } else {
    const FiFrame f = frame_from_json(expect(path, DocumentKind::frame).payload);
    out.kind = DocumentKind::module;
    out.payload = module_to_json(complex_module(f).module);
    if (roundtrip) verdict = {{"map", "epsilon"}, {"iso", counit_iso(f).iso}};
  }
  if (!roundtrip) {
    emit(document_to_json(out));
    return kPass;
  }
  emit({{"document", document_to_json(out)}, {"roundtrip", verdict}});
  return verdict["iso"].get<bool>() ? kPass : kProperty;
}

int cmd_congruences(const std::string& path) {
  const FidlModule m = read_module(path);
  const CanonicalFrame c = canonical_frame(m);
  const ClassifyReport cls = classify(m);
  const AntiIsoReport anti = anti_isomorphism_check(m);
  json con = json::array(), closed = json::array(), table = json::array();
  for (const auto& k : cls.con) con.push_back(congruence_to_json(k));
  for (const auto& z : cls.strongly_closed) {
    closed.push_back(closed_pair_to_json(z));
    table.push_back({{"pair", closed_pair_to_json(z)}, {"congruence", congruence_to_json(theta_pair(m, c, z))}});
  }
  json report = {{"congruences", con}, {"stronglyClosed", closed}, {"bijection", table},
                 {"antiIsomorphism", to_json(anti)}, {"classification", to_json(cls)}};
  if (!anti.pass()) return fail(report);
  emit(report);
  return kPass;
}

int cmd_classify(const std::string& path) {
  emit(to_json(classify(read_module(path))));
  return kPass;
}

int cmd_subalg(const std::string& module_path, const std::string& carriers_path) {
  const FidlModule m = read_module(module_path);
  return check_subalgebra(m, expect(carriers_path, DocumentKind::subalgebra).payload);
}

int cmd_hom(const std::string& src, const std::string& tgt, const std::string& maps) {
  return check_hom(read_module(src), read_module(tgt), expect(maps, DocumentKind::hom).payload);
}

int cmd_fuzz(FuzzConfig config, const std::string& out_dir) {
  validate_config(config);
  const Corpus corpus = generate_corpus(config);
  fs::create_directories(out_dir);
  SuiteReport suite;
  for (const auto& d : corpus.documents) {
    const std::string name = d.meta["name"].get<std::string>();
    std::ofstream(fs::path(out_dir) / (name + ".json")) << canonical_dump(document_to_json(d));
    check_module(suite, name, module_from_json(d.payload));
  }
  json summary = to_json(suite);
  summary["config"] = {{"seed", config.seed}, {"count", config.count}, {"strategy", to_string(config.strategy)},
                       {"maxA", config.max_a}, {"maxB", config.max_b}, {"generator", kGeneratorVersion}};
  if (config.strategy == Strategy::random_tables)
    summary["generator"] = {{"generated", corpus.stats.generated}, {"accepted", corpus.stats.accepted}};
  std::ofstream(fs::path(out_dir) / "summary.json") << canonical_dump(summary);
  emit(summary);
  return suite.pass() ? kPass : kProperty;
}

int cmd_export_dot(const std::string& path) {
  const InstanceDocument d = read_document(path);
  switch (d.kind) {
    case DocumentKind::lattice: std::cout << lattice_to_dot(lattice_from_json(d.payload)); break;
    case DocumentKind::module: std::cout << module_to_dot(module_from_json(d.payload)); break;
    case DocumentKind::frame: std::cout << frame_to_dot(frame_from_json(d.payload)); break;
    default:
      throw Error(ErrorCode::kind_mismatch, "export-dot takes a lattice, module or frame document",
                  {{"actual", to_string(d.kind)}});
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite FIDL-module and FI-frame laboratory"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, second, third, direction = "frame";
  bool roundtrip = false;

  auto* check = app.add_subcommand("check", "Validate a document");
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  auto* dualize = app.add_subcommand("dualize", "Canonical frame of a module or complex module of a frame");
  dualize->add_option("file", file)->required();
  dualize->add_option("--to", direction)->check(CLI::IsMember({"frame", "module"}))->required();
  dualize->add_flag("--roundtrip", roundtrip, "Also check the representation isomorphism");
  dualize->callback([&] { action = [&] { return cmd_dualize(file, direction, roundtrip); }; });

  auto* congr = app.add_subcommand("congruences", "Congruences, strongly closed pairs and the bijection");
  congr->add_option("file", file)->required();
  congr->callback([&] { action = [&] { return cmd_congruences(file); }; });

  auto* cls = app.add_subcommand("classify", "Simple / subdirectly irreducible verdict");
  cls->add_option("file", file)->required();
  cls->callback([&] { action = [&] { return cmd_classify(file); }; });

  auto* sub = app.add_subcommand("subalg", "Check a pair of carriers");
  sub->add_option("module", file)->required();
  sub->add_option("carriers", second)->required();
  sub->callback([&] { action = [&] { return cmd_subalg(file, second); }; });

  auto* hom = app.add_subcommand("hom", "Check a homomorphism");
  hom->add_option("source", file)->required();
  hom->add_option("target", second)->required();
  hom->add_option("maps", third)->required();
  hom->callback([&] { action = [&] { return cmd_hom(file, second, third); }; });

  FuzzConfig config;
  std::string strategy = "heyting-power", out_dir = "corpus";
  auto* fuzz = app.add_subcommand("fuzz", "Generate a corpus and run the property suite");
  fuzz->add_option("--seed", config.seed);
  fuzz->add_option("--count", config.count);
  fuzz->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"heyting-power", "modal", "product", "random-tables"}));
  fuzz->add_option("--max-a", config.max_a);
  fuzz->add_option("--max-b", config.max_b);
  fuzz->add_option("--out", out_dir);
  fuzz->callback([&] {
    action = [&] {
      config.strategy = strategy_from_string(strategy);
      return cmd_fuzz(config, out_dir);
    };
  });

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a lattice, module or frame");
  dot->add_option("file", file)->required();
  dot->callback([&] { action = [&] { return cmd_export_dot(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kMalformed;
  }
  return guarded(action);
}
