// wtn: command-line front end.
//
//   wtn table   --family F --rank r [--char p] [--json] [--cap N] [--no-cache]
//   wtn element --family F --rank r [--isogeny ad|sc] (--word W | --cycle C | --signed S | --partition P) [--char p] [--json]
//   wtn count   --family F --rank r [--isogeny ad|sc] (--word W | ...) --order k [--char p] [--json]
//   wtn verify  --suite linalg|weyl|tits|counts|tables|oracle|all [--heavy]
//   wtn cache build --family F --rank r [--cap N] [--out FILE]
//   wtn cache read  (--family F --rank r | --file FILE)
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wtn/cache.hpp"
#include "wtn/classical.hpp"
#include "wtn/component_counter.hpp"
#include "wtn/tables.hpp"
#include "wtn/tits_lift.hpp"
#include "wtn/verify.hpp"

namespace {

using namespace wtn;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct TypeArgs {
  std::string family;
  int rank = 0;
  RootSystemType type() const { return {parse_family(family), rank}; }
};

struct ElementArgs {
  TypeArgs t;
  std::string isogeny = "ad";
  std::string word;
  std::string cycle;
  std::string signed_perm;
  std::string partition;
  unsigned characteristic = 0;
  bool json = false;
};

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// "(1,2)(3,4,5)" -> {{1,2},{3,4,5}}
std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycles look like (1,2)(3,4,5)");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in '" + text + "'");
    cycles.push_back(parse_ints(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  return cycles;
}

WeylElement element_from(const ElementArgs& a, const DatumPtr& datum) {
  const int given = !a.word.empty() + !a.cycle.empty() + !a.signed_perm.empty() + !a.partition.empty();
  if (given != 1) throw std::invalid_argument("give exactly one of --word, --cycle, --signed, --partition");
  if (!a.word.empty()) return WeylElement::from_word(datum, parse_word(a.word, datum->rank));
  if (!a.cycle.empty()) return from_cycles(datum, parse_cycles(a.cycle));
  if (!a.signed_perm.empty()) return from_signed_permutation(datum, parse_ints(a.signed_perm));
  return from_negative_cycles(datum, parse_ints(a.partition));
}

void add_type_options(CLI::App* cmd, TypeArgs& t) {
  cmd->add_option("--family", t.family, "Root system family A-G")->required();
  cmd->add_option("--rank", t.rank, "Rank")->required();
}

void add_element_options(CLI::App* cmd, ElementArgs& a) {
  add_type_options(cmd, a.t);
  cmd->add_option("--isogeny", a.isogeny, "ad (adjoint) or sc (simply connected)")->check(CLI::IsMember({"ad", "sc"}));
  cmd->add_option("--word", a.word, "Word in simple reflections, 1-based, comma separated (e for identity)");
  cmd->add_option("--cycle", a.cycle, "Type A permutation in cycle notation, e.g. (1,2)(3,4,5)");
  cmd->add_option("--signed", a.signed_perm, "Signed permutation images, e.g. 2,-1,3 (B, C, D)");
  cmd->add_option("--partition", a.partition, "Product of negative cycles with these lengths (B, C, D)");
  cmd->add_option("--char", a.characteristic, "Field characteristic (0 or prime)");
  cmd->add_flag("--json", a.json, "Emit JSON");
}

std::string torus_string(const TorusMod2& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int run_table(const TypeArgs& t, unsigned ch, bool json, std::uint64_t cap, bool no_cache) {
  TableOptions opt;
  opt.characteristic = FieldChar(ch);
  opt.cap = cap;
  opt.use_cache = !no_cache;
  const TableReport rep = build_table(t.type(), opt);
  if (json)
    std::cout << to_json(rep).dump(2) << '\n';
  else
    std::cout << render_text(rep);
  return kOk;
}

int run_element(const ElementArgs& a) {
  const auto datum = build_datum(a.t.type(), parse_isogeny(a.isogeny));
  const WeylElement w = element_from(a, datum);
  const FieldChar ch(a.characteristic);
  const LiftOrderReport lift = minimal_lift_order(w, ch);
  const int s = sigma(w);
  ordered_json j;
  j["datum"] = datum->name();
  j["char"] = ch.value();
  j["word"] = format_word(w.word());
  j["length"] = w.length();
  j["order"] = lift.ord_w;
  j["sigma"] = s;
  j["elliptic"] = s == 0;
  j["reflection_length"] = reflection_length(w);
  j["m"] = m_of(w, ch).str();
  j["tau"] = s == 0 ? ordered_json(tau(w, ch).str()) : ordered_json(nullptr);
  j["t0"] = ch.value() == 2 ? ordered_json(nullptr) : ordered_json(torus_string(lift_power(w)));
  j["lift_order"] = lift.d_w;
  if (a.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << datum->name() << " (char " << ch.value() << ")\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "datum" || it.key() == "char") continue;
      std::cout << "  " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->is_null() ? "-" : it->dump()) << '\n';
    }
    std::cout << "  matrix on characters:\n" << w.matrix();
  }
  return kOk;
}

int run_count(const ElementArgs& a, std::uint64_t k) {
  const auto datum = build_datum(a.t.type(), parse_isogeny(a.isogeny));
  const WeylElement w = element_from(a, datum);
  const OrderCountReport rep = count_components(w, k, FieldChar(a.characteristic));
  ordered_json j;
  j["datum"] = datum->name();
  j["word"] = format_word(w.word());
  j["k"] = rep.k;
  j["char"] = rep.characteristic.value();
  j["case"] = to_string(rep.count_case);
  j["s"] = rep.s ? ordered_json(*rep.s) : ordered_json(nullptr);
  j["components"] = rep.num_components.str();
  j["component_dim"] = rep.component_dim;
  j["m"] = rep.m_w.str();
  j["sigma"] = rep.sigma_w;
  j["ord"] = rep.ord_w;
  j["d"] = rep.d_w;
  if (!rep.note.empty()) j["note"] = rep.note;
  if (a.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << datum->name() << " w = " << format_word(w.word()) << ", k = " << rep.k << " (char " << rep.characteristic.value()
              << ")\n";
    std::cout << "  case " << to_string(rep.count_case) << ": " << rep.num_components << " component(s) of dimension "
              << rep.component_dim << '\n';
    std::cout << "  ord(w) = " << rep.ord_w << ", d(w) = " << rep.d_w << ", sigma(w) = " << rep.sigma_w << ", m(w) = " << rep.m_w;
    if (rep.s) std::cout << ", s = " << *rep.s;
    std::cout << '\n';
    if (!rep.note.empty()) std::cout << "  note: " << rep.note << '\n';
  }
  return kOk;
}

int run_verify(const std::string& suite, bool heavy) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, heavy);
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << r.failures.size()
              << " failures)\n";
    const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "  " << r.failures[i] << '\n';
    if (r.failures.size() > shown) std::cout << "  ... " << r.failures.size() - shown << " more\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kVerifyFailed;
}

int run_cache_build(const TypeArgs& t, std::uint64_t cap, const std::string& out) {
  const RootSystemType type = t.type();
  if (type.family == Family::E && type.rank == 8)
    throw std::invalid_argument("W(E8) has 696729600 elements; class caches are limited to enumerable groups");
  const ClassCache cache = build_cache(type, cap);
  const std::filesystem::path path = out.empty() ? cache_path(type) : std::filesystem::path(out);
  save_cache(cache, path);
  std::cout << "wrote " << cache.records.size() << " classes to " << path.string() << '\n';
  return kOk;
}

int run_cache_read(const TypeArgs& t, const std::string& file) {
  std::filesystem::path path;
  if (!file.empty())
    path = file;
  else if (!t.family.empty())
    path = cache_path(t.type());
  else
    throw std::invalid_argument("give --file or --family/--rank");
  const auto cache = load_cache(path);
  if (!cache) throw std::invalid_argument("cannot read " + path.string());
  std::cout << cache_to_string(*cache);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-order elements in torus normalizers of semisimple groups"};
  app.require_subcommand(1);

  TypeArgs table_type;
  unsigned table_char = 0;
  bool table_json = false, table_no_cache = false;
  std::uint64_t table_cap = kDefaultEnumerationCap;
  auto* table = app.add_subcommand("table", "Coxeter and elliptic class data for one type");
  add_type_options(table, table_type);
  table->add_option("--char", table_char, "Field characteristic (0 or prime)");
  table->add_flag("--json", table_json, "Emit JSON");
  table->add_option("--cap", table_cap, "Largest group order to enumerate");
  table->add_flag("--no-cache", table_no_cache, "Ignore class caches");

  ElementArgs element_args;
  auto* element = app.add_subcommand("element", "Invariants of one Weyl group element");
  add_element_options(element, element_args);

  ElementArgs count_args;
  std::uint64_t count_k = 0;
  auto* count = app.add_subcommand("count", "Components of the order-k locus in N_w");
  add_element_options(count, count_args);
  count->add_option("--order", count_k, "Target order k")->required()->check(CLI::PositiveNumber);

  std::string suite;
  bool heavy = false;
  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("--suite", suite, "linalg, weyl, tits, counts, tables, oracle or all")
      ->required()
      ->check(CLI::IsMember({"linalg", "weyl", "tits", "counts", "tables", "oracle", "all"}));
  verify->add_flag("--heavy", heavy, "Include E7 (about three million elements)");

  auto* cache = app.add_subcommand("cache", "Build or read class-data caches");
  cache->require_subcommand(1);
  TypeArgs build_type;
  std::uint64_t build_cap = kDefaultEnumerationCap;
  std::string build_out;
  auto* build = cache->add_subcommand("build", "Enumerate a group and write its class cache");
  add_type_options(build, build_type);
  build->add_option("--cap", build_cap, "Largest group order to enumerate");
  build->add_option("--out", build_out, "Output file (default: $WTN_CACHE_DIR/<type>.wtncache)");
  TypeArgs read_type;
  std::string read_file;
  auto* read = cache->add_subcommand("read", "Validate and print a class cache");
  read->add_option("--family", read_type.family, "Root system family");
  read->add_option("--rank", read_type.rank, "Rank");
  read->add_option("--file", read_file, "Cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return run_table(table_type, table_char, table_json, table_cap, table_no_cache);
    if (*element) return run_element(element_args);
    if (*count) return run_count(count_args, count_k);
    if (*verify) return run_verify(suite, heavy);
    if (*build) return run_cache_build(build_type, build_cap, build_out);
    if (*read) return run_cache_read(read_type, read_file);
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
