// unitposet: command-line front end.
//
//   unitposet classify POSET
//   unitposet canon BLOCKMATRIX
//   unitposet isometric SYSTEM_A SYSTEM_B
//   unitposet wild POSET X
//   unitposet random POSET --rows M --widths N1,N2,... [--planted]
//   unitposet form POSET [--kind u|q] [--vector Z0,Z1,...] [--search-bound B]
//
// Exit status: 0 on success, 2 when the poset is not a semichain where a
// canonical form is required, 1 on any input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "unitposet/canon.hpp"
#include "unitposet/errors.hpp"
#include "unitposet/json_io.hpp"
#include "unitposet/qform.hpp"
#include "unitposet/random.hpp"
#include "unitposet/systems.hpp"
#include "unitposet/wildness.hpp"

using namespace unitposet;
using Json = nlohmann::json;
namespace uj = unitposet::json;

namespace {

struct RunConfig {
  double tol_rank = kDefaultRankTol;
  double tol_sigma = kDefaultSigmaTol;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  std::vector<std::string> inputs;
  // random
  int rows = -1;
  std::vector<int> widths;
  bool planted = false;
  int max_summands = 6;
  // form
  std::string kind = "u";
  std::vector<std::int64_t> vector;
  int search_bound = 0;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void warn_reindex(const IngestedPoset& in, const std::string& path) {
  if (!in.reindexed) return;
  std::cerr << "note: " << path << ": elements renumbered to an admissible order (old -> new:";
  for (std::size_t i = 0; i < in.new_index.size(); ++i) std::cerr << " " << i + 1 << "->" << in.new_index[i] + 1;
  std::cerr << ")\n";
}

IngestedPoset load_poset(const std::string& path) {
  auto in = uj::poset_from_json(read_json(path));
  warn_reindex(in, path);
  return in;
}

std::string blocks_text(const SemichainBlocks& b) {
  std::ostringstream os;
  os << "[";
  bool first_block = true;
  for (const auto& block : b.blocks) {
    if (block.size() < 2) continue;
    if (!first_block) os << ", ";
    first_block = false;
    os << "{" << block[0] + 1 << "," << block[1] + 1 << "}";
  }
  os << "]";
  return os.str();
}

Json blocks_json(const SemichainBlocks& b) {
  Json out = Json::array();
  for (const auto& block : b.blocks) {
    Json j = Json::array();
    for (int x : block) j.push_back(x + 1);
    out.push_back(j);
  }
  return out;
}

std::string summands_text(const std::vector<Summand>& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " + " : "") << to_string(s[i]);
  return os.str();
}

std::string classify(const RunConfig& cfg) {
  auto in = load_poset(cfg.inputs.at(0));
  const Poset& p = in.poset;
  auto unitary = classify_unitary(p);
  auto classical = classical_type(p);
  const auto u_def = definiteness(u_form(p));
  const auto q_def = definiteness(q_form(p));

  if (cfg.format == "text") {
    std::ostringstream os;
    os << "unitary: " << to_string(unitary.type);
    if (unitary.type == RepType::Tame) os << " (semichain, blocks " << blocks_text(*unitary.blocks) << ")";
    if (unitary.type == RepType::Wild) {
      const auto& t = *unitary.triple;
      os << " (triple " << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")";
    }
    os << "\nclassical: " << to_string(classical.type);
    if (classical.witness) {
      os << " (contains " << classical.witness->name << " at {";
      for (std::size_t i = 0; i < classical.witness->embedding.size(); ++i)
        os << (i ? "," : "") << classical.witness->embedding[i] + 1;
      os << "})";
    }
    os << "\nu_P: " << to_string(u_def) << "\nq_P: " << to_string(q_def) << "\n";
    return os.str();
  }

  Json ju{{"type", to_string(unitary.type)}};
  if (unitary.blocks) ju["blocks"] = blocks_json(*unitary.blocks);
  if (unitary.triple) ju["triple"] = {(*unitary.triple)[0] + 1, (*unitary.triple)[1] + 1, (*unitary.triple)[2] + 1};
  Json jc{{"type", to_string(classical.type)}};
  if (classical.witness) {
    Json emb = Json::array();
    for (int x : classical.witness->embedding) emb.push_back(x + 1);
    jc["witness"] = {{"name", classical.witness->name}, {"embedding", emb}};
  }
  Json out{{"poset", uj::to_json(p)},
           {"unitary", ju},
           {"classical", jc},
           {"u_P", to_string(u_def)},
           {"q_P", to_string(q_def)}};
  if (in.reindexed) {
    Json map = Json::array();
    for (int x : in.new_index) map.push_back(x + 1);
    out["relabel"] = map;
  }
  return out.dump(2) + "\n";
}

std::string canon(const RunConfig& cfg) {
  const auto& path = cfg.inputs.at(0);
  auto a = uj::block_matrix_from_json(read_json(path));
  auto d = decompose(a, cfg.tol_rank);
  if (cfg.format == "text") return summands_text(d.summands()) + "\n";
  return uj::to_json(d).dump(2) + "\n";
}

std::string isometric_cmd(const RunConfig& cfg) {
  auto u = uj::subspace_system_from_json(read_json(cfg.inputs.at(0)));
  auto v = uj::subspace_system_from_json(read_json(cfg.inputs.at(1)));
  u.check_inclusions(cfg.tol_rank);
  v.check_inclusions(cfg.tol_rank);
  auto res = isometric(u, v, cfg.tol_rank, cfg.tol_sigma);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << (res.isometric ? "isometric" : "not isometric") << "\n";
    for (const auto* list : {&res.first_summands, &res.second_summands}) {
      os << "  ";
      if (list->empty()) os << "0";
      for (std::size_t i = 0; i < list->size(); ++i) os << (i ? " + " : "") << to_string((*list)[i]);
      os << "\n";
    }
    return os.str();
  }
  Json first = Json::array(), second = Json::array();
  for (const auto& s : res.first_summands) first.push_back(uj::to_json(s));
  for (const auto& s : res.second_summands) second.push_back(uj::to_json(s));
  return Json{{"isometric", res.isometric}, {"first", first}, {"second", second}}.dump(2) + "\n";
}

std::string wild(const RunConfig& cfg) {
  auto in = load_poset(cfg.inputs.at(0));
  auto x = uj::cmatrix_from_json(read_json(cfg.inputs.at(1)));
  return uj::to_json(wild_witness(in.poset, x)).dump(2) + "\n";
}

std::string random_cmd(const RunConfig& cfg) {
  auto in = load_poset(cfg.inputs.at(0));
  const Poset& p = in.poset;
  std::mt19937_64 rng(cfg.seed);
  if (cfg.planted) {
    if (!semichain_blocks(p)) throw WildPoset("planted instances need a semichain");
    auto inst = plant(p, random_summands(p, cfg.max_summands, 0.1, 10.0, rng), rng);
    if (cfg.format == "text") return summands_text(inst.summands) + "\n";
    Json out = uj::to_json(inst.disguised);
    Json planted = Json::array();
    for (const auto& s : inst.summands) planted.push_back(uj::to_json(s));
    out["planted"] = planted;
    return out.dump(2) + "\n";
  }
  if (cfg.rows < 0) throw ParseError("--rows is required unless --planted");
  if (cfg.widths.size() != static_cast<std::size_t>(p.size()))
    throw ParseError("--widths needs " + std::to_string(p.size()) + " entries");
  std::vector<int> widths(cfg.widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (cfg.widths[i] < 0) throw ParseError("--widths entries must be non-negative");
    widths[static_cast<std::size_t>(in.new_index[i])] = cfg.widths[i];
  }
  return uj::to_json(random_block_matrix(p, cfg.rows, widths, rng)).dump(2) + "\n";
}

std::string form(const RunConfig& cfg) {
  auto in = load_poset(cfg.inputs.at(0));
  if (cfg.kind != "u" && cfg.kind != "q") throw ParseError("--kind must be u or q");
  const auto f = cfg.kind == "u" ? u_form(in.poset) : q_form(in.poset);
  Json out = uj::to_json(f);
  out["kind"] = cfg.kind;
  out["definiteness"] = to_string(definiteness(f));
  out["principal_minor_sums"] = principal_minor_sums(f);
  if (!cfg.vector.empty()) {
    if (cfg.vector.size() != static_cast<std::size_t>(f.n_vars()))
      throw DimensionMismatch("--vector needs " + std::to_string(f.n_vars()) + " entries");
    // Coordinates 1..t follow the elements through any renumbering.
    std::vector<std::int64_t> z(cfg.vector.size());
    z[0] = cfg.vector[0];
    for (std::size_t i = 1; i < z.size(); ++i)
      z[static_cast<std::size_t>(in.new_index[i - 1] + 1)] = cfg.vector[i];
    out["value"] = evaluate(f, z);
  }
  if (cfg.search_bound > 0) {
    auto hit = weak_counterexample(f, cfg.search_bound);
    out["weak_counterexample"] = hit ? Json(*hit) : Json(nullptr);
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << cfg.kind << "_P: " << out["definiteness"].get<std::string>() << "\n";
    if (out.contains("value")) os << "value: " << out["value"].get<std::int64_t>() << "\n";
    return os.str();
  }
  return out.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary representations of posets: classification, canonical forms, wildness gadgets"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol-rank", cfg.tol_rank, "Relative rank tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-sigma", cfg.tol_sigma, "Absolute tolerance when comparing sigma values")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", cfg.output, "Write the result here instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Unitary and classical type of a poset, form definiteness");
  classify_cmd->add_option("poset", cfg.inputs, "Poset JSON")->required()->expected(1);
  auto* canon_cmd = app.add_subcommand("canon", "Canonical decomposition of a block matrix");
  canon_cmd->add_option("matrix", cfg.inputs, "Block matrix JSON")->required()->expected(1);
  auto* iso_cmd = app.add_subcommand("isometric", "Decide whether two P-systems are isometric");
  iso_cmd->add_option("systems", cfg.inputs, "Two subspace system JSON files")->required()->expected(2);
  auto* wild_cmd = app.add_subcommand("wild", "Wildness gadget A(M) for a square matrix X");
  wild_cmd->add_option("files", cfg.inputs, "Poset JSON and matrix JSON")->required()->expected(2);
  auto* random_sub = app.add_subcommand("random", "Random block matrix over a poset");
  random_sub->add_option("poset", cfg.inputs, "Poset JSON")->required()->expected(1);
  random_sub->add_option("--rows", cfg.rows, "Row count");
  random_sub->add_option("--widths", cfg.widths, "Strip widths")->delimiter(',');
  random_sub->add_flag("--planted", cfg.planted, "Disguised direct sum of random summands");
  random_sub->add_option("--max-summands", cfg.max_summands, "Summand count bound for --planted")
      ->check(CLI::NonNegativeNumber);
  auto* form_cmd = app.add_subcommand("form", "Gram matrix, definiteness and values of u_P or q_P");
  form_cmd->add_option("poset", cfg.inputs, "Poset JSON")->required()->expected(1);
  form_cmd->add_option("--kind", cfg.kind, "u or q")->check(CLI::IsMember({"u", "q"}));
  form_cmd->add_option("--vector", cfg.vector, "Evaluate at this vector")->delimiter(',');
  form_cmd->add_option("--search-bound", cfg.search_bound, "Search {0..B}^n for a weak counterexample")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string text;
    if (classify_cmd->parsed()) text = classify(cfg);
    else if (canon_cmd->parsed()) text = canon(cfg);
    else if (iso_cmd->parsed()) text = isometric_cmd(cfg);
    else if (wild_cmd->parsed()) text = wild(cfg);
    else if (random_sub->parsed()) text = random_cmd(cfg);
    else text = form(cfg);

    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw ParseError("cannot write " + cfg.output);
      out << text;
    }
    return 0;
  } catch (const WildPoset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
