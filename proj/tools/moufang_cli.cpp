#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "moufang/birep.hpp"
#include "moufang/catalog.hpp"
#include "moufang/cayley.hpp"
#include "moufang/classify.hpp"
#include "moufang/errors.hpp"
#include "moufang/quotient.hpp"
#include "moufang/reconstruct.hpp"
#include "moufang/report.hpp"

namespace {

using nlohmann::json;
using namespace moufang;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::size_t max_closure = 1000000;
  bool quiet = false;

  bool json_output() const { return format == "json"; }
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.quiet) return;
  if (opt.json_output())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::set<element_t> parse_divisor(const std::string& csv, int order) {
  std::set<element_t> divisor;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size() || v < 0 || v >= order)
      throw std::invalid_argument("divisor element '" + item + "' out of range");
    divisor.insert(v);
  }
  if (divisor.empty()) throw std::invalid_argument("divisor list is empty");
  return divisor;
}

int run_classify(const Options& opt, const std::string& path) {
  const CayleyTable table = load_file(path);
  const AlgebraClass cls = classify(table);
  emit(opt, to_json(cls), render_class_text(cls, table.order()));
  return kExitOk;
}

int run_verify(const Options& opt, const std::string& path, bool swap) {
  const CayleyTable table = load_file(path);
  const AlgebraClass cls = classify(table);

  json out{{"input", path}, {"order", table.order()}, {"class", to_json(cls)}};
  std::vector<std::string> lines;
  lines.push_back(render_class_text(cls, table.order()));

  if (!cls.is_moufang) {
    out["ok"] = false;
    out["reports"] = json::array();
    lines.push_back("not a Moufang loop; nothing to verify");
    emit(opt, out, [&] {
      std::string s;
      for (const auto& l : lines) s += l + "\n";
      s.pop_back();
      return s;
    }());
    return kExitVerificationFailed;
  }

  const int n = table.order();
  std::vector<Permutation> S, T;
  for (int g = 0; g < n; ++g) {
    S.push_back(swap ? right_translation(table, g) : left_translation(table, g));
    T.push_back(swap ? left_translation(table, g) : right_translation(table, g));
  }

  std::vector<RelationReport> reports = validate_birepresentation(table, S, T);
  bool defining_ok = true;
  for (const auto& r : reports) defining_ok = defining_ok && r.ok();

  if (defining_ok) {
    Birepresentation birep(table, S, T);
    TrialityTriple triple = quadratic_family(birep);
    reports.push_back(inverse_map_check(birep));
    reports.push_back(commutation_check(birep));
    for (auto& r : shifted_relation_check(triple)) reports.push_back(std::move(r));
    for (auto& r : division_expression_check(triple)) reports.push_back(std::move(r));
    for (auto& r : triple_closure_check(triple)) reports.push_back(std::move(r));
    for (auto& r : minimality_check(triple)) reports.push_back(std::move(r));

    static const char* kPairNames[6] = {"(S,T)",      "(T^-1,S^-1)", "(T,P)",
                                        "(P^-1,T^-1)", "(P,S)",       "(S^-1,P^-1)"};
    const std::vector<Birepresentation> pairs = triality_pairs(triple);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (auto& r : validate_birepresentation(table, pairs[i].s_family(),
                                               pairs[i].t_family())) {
        r.relation = std::string("pair ") + kPairNames[i] + ": " + r.relation;
        reports.push_back(std::move(r));
      }
  }

  bool all_ok = true;
  json jreports = json::array();
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    jreports.push_back(to_json(r));
    lines.push_back(render_report_text(r));
  }
  out["reports"] = jreports;
  out["ok"] = all_ok;
  lines.push_back(all_ok ? "all relations hold" : "verification FAILED");

  std::string text;
  for (const auto& l : lines) text += l + "\n";
  text.pop_back();
  emit(opt, out, text);
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int run_kernel(const Options& opt, const std::string& path,
               const std::string& divisor_csv) {
  const CayleyTable table = load_file(path);
  const Birepresentation birep =
      divisor_csv.empty()
          ? regular_birepresentation(table)
          : pulled_back_birepresentation(table,
                                         parse_divisor(divisor_csv, table.order()));
  const std::set<element_t> k = kernel(birep);
  const bool faithful = is_faithful(birep);

  json jk = json::array();
  for (element_t g : k) jk.push_back(g);
  std::ostringstream text;
  text << "kernel {";
  bool first = true;
  for (element_t g : k) {
    if (!first) text << ", ";
    text << table.label(g);
    first = false;
  }
  text << "}, " << (faithful ? "faithful" : "not faithful");
  emit(opt, json{{"kernel", jk}, {"faithful", faithful}}, text.str());
  return kExitOk;
}

int run_envelope(const Options& opt, const std::string& path,
                 std::size_t max_closure) {
  const CayleyTable table = load_file(path);
  const Birepresentation birep = regular_birepresentation(table);
  const PermGroup group = enveloping_group(birep, max_closure);
  std::ostringstream text;
  text << "degree " << group.degree << ", " << group.generators.size()
       << " generators, order " << group.order();
  emit(opt,
       json{{"degree", group.degree},
            {"generators", group.generators.size()},
            {"order", group.order()}},
       text.str());
  return kExitOk;
}

int run_quotient(const Options& opt, const std::string& path,
                 const std::string& divisor_csv, bool list) {
  const CayleyTable table = load_file(path);
  if (list) {
    json out = json::array();
    std::ostringstream text;
    for (const auto& divisor : normal_divisors(table)) {
      json jd = json::array();
      text << "{";
      bool first = true;
      for (element_t g : divisor) {
        jd.push_back(g);
        if (!first) text << ", ";
        text << table.label(g);
        first = false;
      }
      text << "}\n";
      out.push_back(jd);
    }
    std::string s = text.str();
    if (!s.empty()) s.pop_back();
    emit(opt, out, s);
    return kExitOk;
  }

  const std::set<element_t> divisor = parse_divisor(divisor_csv, table.order());
  const QuotientStructure q = quotient(table, divisor);
  const Birepresentation pulled = pulled_back_birepresentation(table, divisor);
  const InducedBirepresentation induced = induced_birepresentation(pulled);
  const bool faithful = is_faithful(induced.birep);

  std::ostringstream text;
  text << "quotient of order " << q.quotient_table.order() << " ("
       << q.cosets.size() << " cosets), induced birepresentation "
       << (faithful ? "faithful" : "NOT faithful");
  emit(opt, quotient_report_json(q, faithful), text.str());
  return kExitOk;
}

int run_triality(const Options& opt, const std::string& path,
                 const std::string& sub_name) {
  const CayleyTable table = load_file(path);
  TrialityTriple triple = quadratic_family(regular_birepresentation(table));

  if (!sub_name.empty()) {
    TrialitySub sub = TrialitySub::identity;
    bool found = false;
    for (TrialitySub candidate : kAllTrialitySubs)
      if (to_string(candidate) == sub_name) {
        sub = candidate;
        found = true;
      }
    if (!found)
      throw std::invalid_argument("unknown substitution '" + sub_name + "'");
    triple = triality_substitute(triple, sub);
  }

  static const char* kPairNames[6] = {"(S,T)",      "(T^-1,S^-1)", "(T,P)",
                                      "(P^-1,T^-1)", "(P,S)",       "(S^-1,P^-1)"};
  json jpairs = json::array();
  std::ostringstream text;
  const std::vector<Birepresentation> pairs = triality_pairs(triple);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool ok = true;
    for (const auto& r : validate_birepresentation(table, pairs[i].s_family(),
                                                   pairs[i].t_family()))
      ok = ok && r.ok();
    jpairs.push_back({{"pair", kPairNames[i]}, {"valid", ok}});
    text << kPairNames[i] << (ok ? " valid" : " INVALID") << "\n";
  }
  std::string s = text.str();
  s.pop_back();
  emit(opt, json{{"substitution", sub_name.empty() ? "1" : sub_name},
                 {"pairs", jpairs}},
       s);
  return kExitOk;
}

int run_reconstruct(const Options& opt, const std::string& path) {
  const CayleyTable table = load_file(path);
  const ReconstructionInput input = forge_translation_input(table);
  const ReconstructionVerdict verdict = check_conditions(input);

  std::ostringstream text;
  if (verdict.is_moufang_loop) {
    text << "Moufang loop certified: unit " << table.label(*verdict.unit)
         << ", inverses [";
    for (int g = 0; g < table.order(); ++g) {
      if (g) text << ' ';
      text << verdict.inverse_map[static_cast<std::size_t>(g)];
    }
    text << "]";
  } else {
    text << "not certified: condition " << verdict.failed->condition
         << " fails at g=" << verdict.failed->g;
    if (verdict.failed->h >= 0) text << ", h=" << verdict.failed->h;
    text << " (" << verdict.failed->detail << ")";
  }
  emit(opt, to_json(verdict), text.str());
  return verdict.is_moufang_loop ? kExitOk : kExitVerificationFailed;
}

int run_catalog(const Options& opt, const std::string& name, bool do_emit,
                std::string out_dir) {
  if (do_emit) {
    if (out_dir.empty()) {
      const char* env = std::getenv("MOUFANG_DATA_DIR");
      out_dir = env && *env ? env : "data";
    }
    for (const auto& entry : builtin_catalog()) {
      if (!name.empty() && entry.name != name) continue;
      save_file(entry.table, out_dir + "/" + entry.name + ".tbl");
    }
    if (!opt.quiet) std::cout << "wrote tables to " << out_dir << "\n";
    return kExitOk;
  }
  if (!name.empty()) {
    std::cout << format_cayley_table(catalog_entry(name).table);
    return kExitOk;
  }
  json jout = json::array();
  std::ostringstream text;
  for (const auto& entry : builtin_catalog()) {
    jout.push_back({{"name", entry.name}, {"order", entry.table.order()}});
    text << entry.name << "  (order " << entry.table.order() << ")\n";
  }
  std::string s = text.str();
  if (!s.empty()) s.pop_back();
  emit(opt, jout, s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moufang loop classification and birepresentation checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-closure", opt.max_closure, "Closure element cap")
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "Suppress report output");

  std::string path, divisor_csv, sub_name, catalog_name, out_dir;
  bool swap = false, list = false, do_emit = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a Cayley table");
  classify_cmd->add_option("file", path, "Cayley table file")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "Run the full relation battery on (L,R,P)");
  verify_cmd->add_option("file", path, "Cayley table file")->required();
  verify_cmd->add_flag("--swap-translations", swap,
                       "Use (R,L) instead of (L,R) (negative control)");

  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel of a birepresentation");
  kernel_cmd->add_option("file", path, "Cayley table file")->required();
  kernel_cmd->add_option("--divisor", divisor_csv,
                         "Pull back along this normal divisor (comma-separated)");

  auto* envelope_cmd =
      app.add_subcommand("envelope", "Enveloping group of the regular birepresentation");
  envelope_cmd->add_option("file", path, "Cayley table file")->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a normal divisor");
  quotient_cmd->add_option("file", path, "Cayley table file")->required();
  quotient_cmd->add_option("--divisor", divisor_csv, "Comma-separated element ids");
  quotient_cmd->add_flag("--list", list, "List normal divisors instead");

  auto* triality_cmd = app.add_subcommand("triality", "Triality pairs and substitutions");
  triality_cmd->add_option("file", path, "Cayley table file")->required();
  triality_cmd->add_option("--sub", sub_name,
                           "Apply a substitution first (1, tau, rho, rho2, rho.tau, rho2.tau)");

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Decide the reconstruction hypotheses");
  reconstruct_cmd->add_option("file", path, "Cayley table file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit built-in tables");
  catalog_cmd->add_option("name", catalog_name, "Entry name, e.g. M_S3_2");
  catalog_cmd->add_flag("--emit", do_emit, "Write .tbl files instead of listing");
  catalog_cmd->add_option("--out", out_dir,
                          "Emit directory (default: $MOUFANG_DATA_DIR, else data)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(opt, path);
    if (verify_cmd->parsed()) return run_verify(opt, path, swap);
    if (kernel_cmd->parsed()) return run_kernel(opt, path, divisor_csv);
    if (envelope_cmd->parsed()) return run_envelope(opt, path, opt.max_closure);
    if (quotient_cmd->parsed()) {
      if (!list && divisor_csv.empty())
        throw std::invalid_argument("quotient requires --divisor or --list");
      return run_quotient(opt, path, divisor_csv, list);
    }
    if (triality_cmd->parsed()) return run_triality(opt, path, sub_name);
    if (reconstruct_cmd->parsed()) return run_reconstruct(opt, path);
    if (catalog_cmd->parsed())
      return run_catalog(opt, catalog_name, do_emit || !out_dir.empty(), out_dir);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
