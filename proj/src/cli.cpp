#include "tropirep/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropirep/characters.hpp"
#include "tropirep/cyclotomic.hpp"
#include "tropirep/enumeration.hpp"
#include "tropirep/errors.hpp"
#include "tropirep/matroids.hpp"
#include "tropirep/realization.hpp"
#include "tropirep/numtheory.hpp"

namespace tropirep {

namespace {

using nlohmann::json;

FiniteGroup parse_cyclic_part(const std::string& part) {
  if (part.size() < 2 || part[0] != 'C')
    throw ParseError("group spec: expected C<n>, got '" + part + "'");
  for (std::size_t i = 1; i < part.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(part[i])))
      throw ParseError("group spec: bad cyclic order in '" + part + "'");
  const long long n = std::stoll(part.substr(1));
  if (n < 1) throw ParseError("group spec: cyclic order must be positive");
  if (n > kMaxGroupOrder)
    throw CapacityError("group spec: order " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(kMaxGroupOrder));
  return make_cyclic(static_cast<int>(n));
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
  if (spec.empty()) throw ParseError("group spec: empty");
  if (spec[0] == '@') {
    std::ifstream in(spec.substr(1), std::ios::binary);
    if (!in) throw ParseError("group spec: cannot open file '" + spec.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cayley_file(buf.str());
  }
  if (spec == "S3") return make_dihedral(3);
  if (spec[0] == 'D') {
    for (std::size_t i = 1; i < spec.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(spec[i])))
        throw ParseError("group spec: bad dihedral parameter in '" + spec + "'");
    if (spec.size() < 2) throw ParseError("group spec: missing dihedral parameter");
    const long long m = std::stoll(spec.substr(1));
    if (m < 1) throw ParseError("group spec: dihedral parameter must be positive");
    if (2 * m > kMaxGroupOrder)
      throw CapacityError("group spec: order " + std::to_string(2 * m) +
                          " exceeds maximum " + std::to_string(kMaxGroupOrder));
    return make_dihedral(static_cast<int>(m));
  }
  if (spec[0] == 'C') {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
      if (ch == 'x') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    FiniteGroup g = parse_cyclic_part(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = make_product(g, parse_cyclic_part(parts[i]));
    return g;
  }
  throw ParseError("group spec: unrecognized spec '" + spec + "'");
}

namespace {

int orbit_cap_from_env() {
  if (const char* env = std::getenv("TROPIREP_MAX_ORBITS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap <= 30) return cap;
    } catch (const std::exception&) {
    }
    throw ParseError("TROPIREP_MAX_ORBITS must be an integer in [1,30]");
  }
  return kDefaultOrbitCap;
}

json subset_json(const std::vector<int>& s) { return json(s); }

json bases_json(const Matroid& m) {
  json arr = json::array();
  for (const auto& b : m.bases()) arr.push_back(subset_json(b));
  return arr;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

struct EnumerateArgs {
  std::string group;
  int dim = 0;
  bool indecomposable = false;
  bool realizable = false;
  bool character = false;
};

std::string cmd_enumerate(const EnumerateArgs& a) {
  const FiniteGroup g = parse_group_spec(a.group);
  EnumerationOptions opts;
  opts.orbit_cap = orbit_cap_from_env();

  std::vector<TropicalRep> reps = enumerate_reps(g, a.dim, opts);

  std::map<int, std::vector<TropicalRep>> by_dim;
  if (a.indecomposable)
    for (int d1 = 1; d1 < a.dim; ++d1) by_dim[d1] = enumerate_reps(g, d1, opts);

  const RealizabilityClassification cls =
      a.realizable ? classify_realizable(g, a.dim) : RealizabilityClassification{};

  const SubsetAction action = build_action(g, a.dim);
  const OrbitDecomposition dec = orbit_decomposition(action);

  json doc;
  doc["group"] = a.group;
  doc["n"] = g.order();
  doc["d"] = a.dim;
  doc["labels"] = g.labels();
  json orbits = json::array();
  for (const BitMultivector& orbit : dec.orbits) {
    json one = json::array();
    for (std::uint64_t i = 0; i < orbit.codec.count(); ++i)
      if (orbit.bits[i]) one.push_back(subset_json(orbit.codec.unrank(i)));
    orbits.push_back(std::move(one));
  }
  doc["orbits"] = std::move(orbits);

  ConjugacyClasses classes;
  if (a.character) {
    classes = conjugacy_classes(g);
    doc["class_reps"] = classes.representatives;
  }

  json rep_arr = json::array();
  for (TropicalRep& rep : reps) {
    json r;
    r["orbit_mask"] = rep.orbit_mask;
    r["bases"] = bases_json(rep.matroid);
    r["uniform"] = rep.is_uniform;
    if (a.indecomposable) r["indecomposable"] = is_indecomposable(rep, by_dim);
    if (a.realizable) {
      const auto* witnesses = cls.find(rep.matroid);
      r["realizable"] = witnesses != nullptr;
      json w = json::array();
      if (witnesses)
        for (const auto& subset : *witnesses) w.push_back(subset_json(subset));
      r["witnesses"] = std::move(w);
    }
    if (a.character) r["character"] = tropical_character(g, rep.matroid);
    rep_arr.push_back(std::move(r));
  }
  doc["reps"] = std::move(rep_arr);
  return doc.dump(2) + "\n";
}

std::string cmd_character_table(const std::string& spec, int max_dim, bool csv) {
  const FiniteGroup g = parse_group_spec(spec);
  EnumerationOptions opts;
  opts.orbit_cap = orbit_cap_from_env();
  const CharacterTable table = character_table(g, max_dim, opts);

  if (csv) {
    std::ostringstream out;
    out << "dim,orbit_mask,uniform";
    for (int rep : table.classes.representatives) out << "," << csv_quote(g.label(rep));
    out << "\n";
    for (const CharacterRow& row : table.rows) {
      out << row.dim << "," << row.orbit_mask << "," << (row.is_uniform ? 1 : 0);
      for (std::uint8_t v : row.values) out << "," << static_cast<int>(v);
      out << "\n";
    }
    return out.str();
  }

  json doc;
  doc["group"] = spec;
  doc["n"] = g.order();
  doc["labels"] = g.labels();
  doc["classes"] = table.classes.classes;
  doc["class_reps"] = table.classes.representatives;
  json rows = json::array();
  for (const CharacterRow& row : table.rows) {
    json r;
    r["dim"] = row.dim;
    r["orbit_mask"] = row.orbit_mask;
    r["uniform"] = row.is_uniform;
    r["values"] = row.values;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

json mo_report_json(const MoReport& r) {
  json doc;
  doc["p"] = r.p;
  doc["orbit_of_one"] = r.orbit_of_one;
  doc["transitive"] = r.transitive;
  doc["cond_primitive_root"] = r.cond_primitive_root;
  doc["cond_7mod8_halforder"] = r.cond_7mod8_halforder;
  return doc;
}

std::string cmd_lemma_mo(long long prime, long long scan) {
  if (prime > 0) return mo_report_json(mo_report(prime)).dump(2) + "\n";
  json doc;
  long long checked = 0;
  for (long long p = 3; p <= scan; p += 2) {
    if (!is_prime(p)) continue;
    mo_report(p);  // throws on an equivalence violation
    ++checked;
  }
  doc["scan_limit"] = scan;
  doc["primes_checked"] = checked;
  doc["violations"] = json::array();
  return doc.dump(2) + "\n";
}

std::string cmd_tropicalize(const std::string& path, const std::string& group_spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("tropicalize: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const CycloMatrix mat = parse_matrix_json(buf.str());
  const Matroid m = tropicalize_matrix(mat);

  json doc;
  doc["n"] = m.ground_size();
  doc["d"] = m.rank();
  doc["bases"] = bases_json(m);
  if (!group_spec.empty()) {
    const FiniteGroup g = parse_group_spec(group_spec);
    if (g.order() != m.ground_size())
      throw ContractError("tropicalize: group order does not match column count");
    const SubsetAction action = build_action(g, m.rank());
    doc["is_invariant_under"] = group_spec;
    doc["invariant"] = is_invariant(action, m.plucker());
  }
  return doc.dump(2) + "\n";
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"tropical subrepresentations of Boolean regular representations"};
  app.require_subcommand(1);
  int seed = 0;  // reserved for future randomized features
  app.add_option("--seed", seed, "seed for randomized features (currently unused)");

  EnumerateArgs en;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate the invariant matroids of a given rank");
  enumerate->add_option("--group", en.group, "group spec (C<n>, C<a>xC<b>, D<m>, S3, @file)")
      ->required();
  enumerate->add_option("--dim", en.dim, "rank of the enumerated matroids")->required();
  enumerate->add_flag("--indecomposable", en.indecomposable,
                      "mark matroids that are no wedge of smaller invariant ones");
  enumerate->add_flag("--realizable", en.realizable,
                      "classify character-subset realizability (abelian groups only)");
  enumerate->add_flag("--character", en.character, "include cocircuit character rows");

  std::string ct_group;
  int ct_max_dim = -1;
  bool ct_csv = false;
  CLI::App* ctable =
      app.add_subcommand("character-table", "character rows of all invariant matroids");
  ctable->add_option("--group", ct_group, "group spec")->required();
  ctable->add_option("--max-dim", ct_max_dim, "largest dimension (default |G|-1)");
  ctable->add_flag("--csv", ct_csv, "emit CSV instead of JSON");

  long long mo_prime = 0;
  long long mo_scan = 0;
  CLI::App* lemma = app.add_subcommand(
      "lemma-mo", "halving-permutation transitivity and its order conditions");
  CLI::Option* opt_prime = lemma->add_option("--prime", mo_prime, "odd prime to report on");
  CLI::Option* opt_scan =
      lemma->add_option("--scan", mo_scan, "verify the equivalence for all odd primes <= N");
  opt_prime->excludes(opt_scan);

  std::string tr_file;
  std::string tr_group;
  CLI::App* trop = app.add_subcommand(
      "tropicalize", "matroid of a cyclotomic matrix given as JSON");
  trop->add_option("matrix-file", tr_file, "path to the matrix JSON")->required();
  trop->add_option("--group", tr_group, "check invariance under this group");

  CliResult result;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (enumerate->parsed()) {
      result.out = cmd_enumerate(en);
    } else if (ctable->parsed()) {
      result.out = cmd_character_table(ct_group, ct_max_dim, ct_csv);
    } else if (lemma->parsed()) {
      if (mo_prime == 0 && mo_scan == 0)
        throw ParseError("lemma-mo: provide --prime or --scan");
      result.out = cmd_lemma_mo(mo_prime, mo_scan);
    } else if (trop->parsed()) {
      result.out = cmd_tropicalize(tr_file, tr_group);
    }
    result.exit_code = kExitOk;
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    result.exit_code = kExitOk;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitParse;
  } catch (const ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitParse;
  } catch (const ContractError& e) {
    // a violated precondition reaching the CLI is bad user input
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitParse;
  } catch (const CapacityError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitCapacity;
  } catch (const UnsupportedError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitUnsupported;
  } catch (const RankDeficientError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitRankDeficient;
  } catch (const std::exception& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kExitInternal;
  }
  return result;
}

}  // namespace tropirep
