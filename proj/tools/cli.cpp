#include "cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foursq/constructive.hpp"
#include "foursq/errors.hpp"
#include "foursq/quad_enum.hpp"
#include "foursq/scanner.hpp"
#include "foursq/sequences.hpp"
#include "foursq/ternary.hpp"

namespace foursq::cli {

namespace {

using json = nlohmann::ordered_json;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path checkpoint_location(const std::string& given, std::uint64_t digest) {
  const char* dir = std::getenv("FOURSQ_CHECKPOINT_DIR");
  std::filesystem::path p = given;
  if (p.empty()) {
    if (!dir || !*dir) return {};
    char name[40];
    std::snprintf(name, sizeof name, "scan-%016llx.ckpt", static_cast<unsigned long long>(digest));
    p = name;
  }
  if (dir && *dir && p.is_relative()) p = std::filesystem::path(dir) / p;
  return p;
}

std::array<Int, 4> parse_rep(const std::string& text) {
  std::array<Int, 4> v{};
  std::istringstream in(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 4) throw Usage("--rep takes four comma-separated integers");
    try {
      v[i++] = std::stoll(item);
    } catch (const std::logic_error&) {
      throw Usage("--rep takes four comma-separated integers");
    }
  }
  if (i != 4) throw Usage("--rep takes four comma-separated integers");
  return v;
}

// Smallest n covered by each hypothesis's claim.
Int claim_start(Hypothesis h) { return h == Hypothesis::Ramanujan11_10 ? 2720 : 0; }

struct Options {
  bool json = false;
  unsigned workers = 0;
  std::string family, spec, dedup = "ordered", checkpoint, exclude, form, name, rep, sequence;
  Int n = -1, bound = 0, from = 0, to = -1, chunk = 10000;
  std::uint64_t max_chunks = 0;
  bool progress = false;
};

int decompose(const Options& o, std::ostream& out) {
  const TheoremFamily f = TheoremFamily::parse(o.family);
  const Construction c = construct(f, o.n);
  std::string branches;
  for (const auto& b : c.branches) branches += (branches.empty() ? "" : ",") + b;
  if (o.json) {
    json j{{"family", f.to_string()}, {"n", o.n}, {"coords", c.coords}, {"depth", c.depth},
           {"branches", c.branches}};
    if (f.four_square()) j["witness"] = describe(c.witness, f.spec());
    out << j.dump() << '\n';
    return kOk;
  }
  out << format_construction(f, o.n, c) << '\n';
  if (f.four_square()) out << "witness: " << describe(c.witness, f.spec()) << '\n';
  out << "branches: " << branches << '\n';
  return kOk;
}

int verify(const Options& o, std::ostream& out) {
  if (!o.family.empty()) {
    const TheoremFamily f = TheoremFamily::parse(o.family);
    const ValidationReport r = batch_validate(f, o.bound);
    const auto missing = r.missing_branches(f);
    if (o.json) {
      json fails = json::array();
      for (const auto& x : r.failures) fails.push_back({{"n", x.n}, {"reason", x.reason}});
      out << json{{"family", f.to_string()}, {"bound", o.bound}, {"checked", r.checked},
                  {"failures", fails}, {"branch_hits", r.branch_hits}, {"missing_branches", missing},
                  {"max_depth", r.max_depth}}
                 .dump()
          << '\n';
    } else {
      out << f.to_string() << ": checked " << r.checked << ", failures " << r.failures.size()
          << ", max depth " << r.max_depth << '\n';
      for (const auto& x : r.failures) out << "  n=" << x.n << ": " << x.reason << '\n';
      for (const auto& [b, k] : r.branch_hits) out << "  branch " << b << ": " << k << '\n';
      for (const auto& b : missing) out << "  branch " << b << ": never taken\n";
    }
    return r.failures.empty() && missing.empty() ? kOk : kFound;
  }
  if (o.spec.empty() || o.rep.empty() || o.n < 0) {
    throw Usage("verify needs --family and --bound, or --spec, --n and --rep");
  }
  const ConstraintSpec spec = parse_constraint(o.spec);
  std::optional<Witness> w;
  std::string reason;
  try {
    w = satisfies(Representation(o.n, parse_rep(o.rep), spec.domains), spec);
    if (!w) reason = "constraint not satisfied";
  } catch (const std::invalid_argument& e) {
    reason = e.what();
  }
  if (o.json) {
    json j{{"n", o.n}, {"rep", parse_rep(o.rep)}, {"ok", w.has_value()}};
    j[w ? "witness" : "reason"] = w ? describe(*w, spec) : reason;
    out << j.dump() << '\n';
  } else {
    out << (w ? "ok: " + describe(*w, spec) : "fail: " + reason) << '\n';
  }
  return w ? kOk : kFound;
}

ScanOptions scan_options(const Options& o, std::ostream& err) {
  ScanOptions so;
  so.workers = o.workers;
  if (o.max_chunks) so.max_chunks = o.max_chunks;
  so.cancel = &g_interrupted;
  if (o.progress) {
    so.progress = [&err](std::uint64_t done, std::uint64_t total) {
      err << "chunks " << done << "/" << total << '\n';
    };
  }
  return so;
}

int report(const ScanReport& r, std::ostream& out, std::ostream& err) {
  out << r.to_json();
  err << "elapsed_ms " << static_cast<long long>(r.elapsed_ms) << (r.complete ? "" : " (incomplete)")
      << '\n';
  return r.counterexamples.empty() ? kOk : kFound;
}

int scan_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.spec.empty() == o.family.empty()) throw Usage("scan needs exactly one of --spec or --family");
  if (o.to < 0) throw Usage("scan needs --to");
  ScanConfig config;
  if (!o.family.empty()) {
    const NamedFamily& f = find_named_family(o.family);
    config = family_config(f, o.to, o.chunk);
    config.lo = std::max(config.lo, std::min(o.from, o.to));
    if (!o.exclude.empty()) config.exclusion = Exclusion::parse(o.exclude);
  } else {
    config.spec = parse_constraint(o.spec);
    config.lo = o.from;
    config.hi = o.to;
    config.chunk = o.chunk;
    config.exclusion = Exclusion::parse(o.exclude);
  }
  return report(scan(config, checkpoint_location(o.checkpoint, config.digest()), scan_options(o, err)), out,
                err);
}

int resume_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.checkpoint.empty()) throw Usage("resume needs --checkpoint");
  return report(resume(checkpoint_location(o.checkpoint, 0), scan_options(o, err)), out, err);
}

int count_cmd(const Options& o, std::ostream& out) {
  if (!o.sequence.empty()) {
    const auto catalog = load_catalog(default_catalog_path());
    const CatalogEntry& e = find_entry(catalog, o.sequence);
    const Int hi = o.to >= 0 ? o.to : (o.n >= 0 ? o.n + 1 : -1);
    if (hi < 0) throw Usage("count --sequence needs --to or --n");
    const auto rows = generate(e.def(), o.n >= 0 && o.to < 0 ? o.n : o.from, hi, o.workers);
    if (o.json) {
      json j = json::array();
      for (const auto& [n, a] : rows) j.push_back({n, a});
      out << json{{"sequence", e.id}, {"verified", e.verified}, {"rows", j}}.dump() << '\n';
    } else {
      emit_bfile(rows, out);
    }
    return kOk;
  }
  if (o.spec.empty() || o.n < 0) throw Usage("count needs --spec and --n, or --sequence");
  const ConstraintSpec spec = parse_constraint(o.spec);
  const DedupRule dedup = DedupRule::parse(o.dedup);
  const auto k = count_constrained(o.n, spec, dedup);
  if (o.json) {
    out << json{{"spec", spec.to_string()}, {"n", o.n}, {"dedup", dedup.to_string()}, {"count", k}}.dump()
        << '\n';
  } else {
    out << k << '\n';
  }
  return kOk;
}

int exceptions_cmd(const Options& o, std::ostream& out) {
  if (o.form.empty() || o.n < 0) throw Usage("exceptions needs --form and --n");
  const TernaryForm form = TernaryForm::parse(o.form);
  const std::string m = to_string(exception_membership(form, o.n));
  if (o.json) {
    out << json{{"form", form.to_string()}, {"n", o.n}, {"membership", m}}.dump() << '\n';
  } else {
    out << m << '\n';
  }
  return kOk;
}

int hypothesis_cmd(const Options& o, std::ostream& out) {
  const Hypothesis h = parse_hypothesis(o.name);
  const auto ex = verify_hypothesis(h, o.bound);
  bool violated = false;
  for (Int n : ex) violated |= n >= claim_start(h);
  if (o.json) {
    out << json{{"name", std::string(to_string(h))}, {"bound", o.bound}, {"exceptions", ex},
                {"violated", violated}}
               .dump()
        << '\n';
  } else {
    out << to_string(h) << " up to " << o.bound << ": " << ex.size() << " exceptions";
    for (Int n : ex) out << ' ' << n;
    out << '\n';
  }
  return violated ? kFound : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained four-square representations"};
  app.require_subcommand(1);
  Options o;

  auto* dec = app.add_subcommand("decompose", "Build a representation by a theorem's construction");
  dec->add_option("--family", o.family, "Family, e.g. t11:a=1,m=4")->required();
  dec->add_option("--n", o.n, "Target integer")->required()->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "Validate a family up to a bound, or check one representation");
  ver->add_option("--family", o.family, "Family to validate");
  ver->add_option("--bound", o.bound, "Largest n validated")->check(CLI::NonNegativeNumber);
  ver->add_option("--spec", o.spec, "Constraint DSL");
  ver->add_option("--n", o.n, "Target integer");
  ver->add_option("--rep", o.rep, "x,y,z,w");

  auto* sc = app.add_subcommand("scan", "Exhaustively search a range for counterexamples");
  sc->add_option("--spec", o.spec, "Constraint DSL");
  sc->add_option("--family", o.family, "Named conjecture family");
  sc->add_option("--from", o.from, "First n")->check(CLI::NonNegativeNumber);
  sc->add_option("--to", o.to, "One past the last n")->required()->check(CLI::NonNegativeNumber);
  sc->add_option("--chunk", o.chunk, "Chunk size")->check(CLI::PositiveNumber);
  sc->add_option("--exclude", o.exclude, "Exclusion templates, e.g. 2^(6k+3)*7");
  sc->add_option("--checkpoint", o.checkpoint, "Checkpoint file");
  sc->add_option("--max-chunks", o.max_chunks, "Stop after this many chunks");

  auto* res = app.add_subcommand("resume", "Continue a checkpointed scan");
  res->add_option("--checkpoint", o.checkpoint, "Checkpoint file")->required();
  res->add_option("--max-chunks", o.max_chunks, "Stop after this many chunks");

  for (auto* s : {sc, res}) {
    s->add_option("--workers", o.workers, "Worker threads (0: all cores)");
    s->add_flag("--progress", o.progress, "Report chunk progress on stderr");
  }

  auto* cnt = app.add_subcommand("count", "Count satisfying representations");
  cnt->add_option("--spec", o.spec, "Constraint DSL");
  cnt->add_option("--n", o.n, "Target integer")->check(CLI::NonNegativeNumber);
  cnt->add_option("--dedup", o.dedup, "ordered | unordered | canonical:<conditions>");
  cnt->add_option("--sequence", o.sequence, "Catalog A-number; prints a b-file");
  cnt->add_option("--from", o.from, "First n for --sequence")->check(CLI::NonNegativeNumber);
  cnt->add_option("--to", o.to, "One past the last n for --sequence")->check(CLI::NonNegativeNumber);
  cnt->add_option("--workers", o.workers, "Worker threads for --sequence");

  auto* exc = app.add_subcommand("exceptions", "Exception-set membership for a ternary form");
  exc->add_option("--form", o.form, "a,b,c")->required();
  exc->add_option("--n", o.n, "Query integer")->required()->check(CLI::NonNegativeNumber);

  auto* hyp = app.add_subcommand("hypothesis", "Check a numeric hypothesis up to a bound");
  hyp->add_option("--name", o.name, "ramanujan_1_1_10 | thm13iii_form | containment_1_4")->required();
  hyp->add_option("--bound", o.bound, "Largest n checked")->required()->check(CLI::NonNegativeNumber);

  for (auto* s : {dec, ver, sc, res, cnt, exc, hyp}) s->add_flag("--json", o.json, "Machine-readable output");

  std::vector<const char*> argv{"foursq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dec) return decompose(o, out);
    if (*ver) return verify(o, out);
    if (*sc) {
      g_interrupted = false;
      auto prev = std::signal(SIGINT, on_sigint);
      const int code = scan_cmd(o, out, err);
      std::signal(SIGINT, prev);
      return code;
    }
    if (*res) return resume_cmd(o, out, err);
    if (*cnt) return count_cmd(o, out);
    if (*exc) return exceptions_cmd(o, out);
    if (*hyp) return hypothesis_cmd(o, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisFailure& e) {
    err << "hypothesis failed: " << e.what() << '\n';
    return kFound;
  } catch (const CheckpointMismatch& e) {
    err << "checkpoint mismatch: " << e.what() << '\n';
    return kFound;
  } catch (const CorruptCheckpoint& e) {
    err << "corrupt checkpoint: " << e.what() << '\n';
    return kInternal;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegreeError& e) {
    err << "degree error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownFormError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace foursq::cli
