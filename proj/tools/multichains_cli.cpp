// Command-line front end: batch analysis of multichain complexes, exact
// certificates and homology reports over a poset file.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "multichains/edgewise.hpp"
#include "multichains/graph.hpp"
#include "multichains/homology.hpp"
#include "multichains/homotopy.hpp"
#include "multichains/multichain.hpp"
#include "multichains/poset.hpp"
#include "multichains/subdivision.hpp"

namespace mc = multichains;

namespace {

struct Options {
  std::string poset_file;
  int r = 2;
  std::string iota = "all";
  std::string kappa;
  std::string relation = "iota";
  std::string format = "json";
  std::string output;
  unsigned seed = 2024;
  bool oracle = false;
  std::size_t max_faces = 100000;
  std::uint64_t max_triples = 100000000ull;
};

mc::Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--poset", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return mc::Poset::parse(buf.str());
}

std::vector<mc::IndexMap> select_iotas(const Options& opt) {
  if (opt.iota == "all") return mc::enumerate_all_maps(opt.r);
  if (opt.iota == "all-reflexive") return mc::enumerate_script_I(opt.r);
  return {mc::IndexMap::parse(opt.iota)};
}

void render_text(const nlohmann::json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << k << ": " << v.dump() << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << v.dump() << '\n';
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

void emit(const Options& opt, const nlohmann::json& j) {
  std::ostringstream buf;
  if (opt.format == "text")
    render_text(j, buf);
  else
    buf << j.dump(2) << '\n';
  if (opt.output.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(opt.output);
    out << buf.str();
  }
}

int cmd_classify(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  nlohmann::json rows = nlohmann::json::array();
  bool diffs = false;
  for (const auto& iota : mc::enumerate_all_maps(opt.r)) {
    nlohmann::json row;
    row["iota"] = iota.to_string();
    row["reflexive"] = mc::is_reflexive_map(iota);
    row["transitive"] = mc::is_transitive_map(iota);
    row["partial_order"] = mc::is_partial_order_map(iota);
    if (opt.oracle) {
      const auto rep = mc::oracle_check_axioms(P, opt.r, iota, opt.max_triples);
      row["oracle"] = {{"reflexive", rep.reflexive},
                       {"antisymmetric", rep.antisymmetric},
                       {"transitive", rep.transitive}};
      // The closed-form predicates characterize behaviour on posets with a
      // 2-chain; on antichains the oracle is vacuously true for every iota.
      const bool has_two_chain = P.longest_chain_length() >= 1;
      if (has_two_chain &&
          (rep.reflexive != mc::is_reflexive_map(iota) ||
           rep.transitive != mc::is_transitive_map(iota) || !rep.antisymmetric))
        diffs = true;
      row["diff"] = has_two_chain &&
                    (rep.reflexive != mc::is_reflexive_map(iota) ||
                     rep.transitive != mc::is_transitive_map(iota));
    }
    rows.push_back(row);
  }
  nlohmann::json j;
  j["r"] = opt.r;
  j["rows"] = rows;
  if (opt.oracle) j["oracle_diffs"] = diffs;
  emit(opt, j);
  return diffs ? 1 : 0;
}

mc::SimplicialComplex build_complex(const mc::Poset& P, const Options& opt,
                                    const mc::IndexMap& iota) {
  if (opt.relation == "muhle") {
    return mc::clique_complex(
        P, mc::multichain_graph(P, opt.r,
                                mc::make_relation(P, mc::RelationKind::muhle,
                                                  std::nullopt, std::nullopt)));
  }
  if (opt.relation == "general") {
    if (opt.kappa.empty()) throw CLI::ValidationError("--kappa", "required for --relation general");
    auto kappa = mc::KappaMap::parse(opt.kappa);
    return mc::clique_complex(
        P, mc::multichain_graph(P, opt.r,
                                mc::make_relation(P, mc::RelationKind::general, iota, kappa)));
  }
  // iota and iota-prime induce the same comparability graph
  return mc::clique_complex(P, opt.r, iota);
}

int cmd_complex(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  const auto iotas = select_iotas(opt);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iota : iotas) {
    const auto K = build_complex(P, opt, iota);
    nlohmann::json j = K.to_json();
    j["iota"] = iota.to_string();
    j["f_vector"] = K.f_vector(opt.max_faces);
    j["dimension"] = K.dimension();
    j["pure"] = K.is_pure();
    j["euler_characteristic"] = K.euler_characteristic(opt.max_faces);
    out.push_back(j);
  }
  emit(opt, out.size() == 1 ? out[0] : out);
  return 0;
}

int cmd_homology(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  const auto iotas = select_iotas(opt);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iota : iotas) {
    const auto K = build_complex(P, opt, iota);
    nlohmann::json j = mc::reduced_homology(K, opt.max_faces).to_json();
    j["iota"] = iota.to_string();
    out.push_back(j);
  }
  emit(opt, out.size() == 1 ? out[0] : out);
  return 0;
}

int cmd_certify(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  bool all_ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iota : select_iotas(opt)) {
    const auto cert = mc::subdivision_certificate(P, opt.r, iota, opt.max_faces);
    nlohmann::json j = cert.to_json(P);
    j["iota"] = iota.to_string();
    if (cert.applicable) all_ok = all_ok && cert.certified;
    out.push_back(j);
  }
  emit(opt, out.size() == 1 ? out[0] : out);
  return all_ok ? 0 : 1;
}

int cmd_count_graphs(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  nlohmann::json j;
  j["r"] = opt.r;
  j["distinct_graphs"] = mc::count_distinct_graphs(P, opt.r);
  j["script_I_size"] = static_cast<int>(mc::enumerate_script_I(opt.r).size());
  emit(opt, j);
  return 0;
}

// Sweep (iota, kappa) pairs and compare homology against Delta(P); purely
// observational output, no conjecture is asserted.
int cmd_explore(const Options& opt) {
  const auto P = load_poset(opt.poset_file);
  const auto base = mc::reduced_homology(P.order_complex(), opt.max_faces);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& iota : mc::enumerate_all_maps(opt.r)) {
    const int ell = iota.num_b_blocks();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ell); ++mask) {
      std::vector<int> kv;
      for (int i = 0; i < ell; ++i) kv.push_back((mask >> i) & 1);
      mc::KappaMap kappa(kv);
      auto g = mc::multichain_graph(
          P, opt.r, mc::make_relation(P, mc::RelationKind::general, iota, kappa));
      const auto K = mc::clique_complex(P, g);
      const auto h = mc::reduced_homology(K, opt.max_faces);
      nlohmann::json row;
      row["iota"] = iota.to_string();
      std::string ks;
      for (int i = 0; i < ell; ++i) ks += (i ? "," : "") + std::to_string(kv[i]);
      row["kappa"] = ks;
      row["betti"] = h.betti;
      row["matches_order_complex"] = (h == base);
      rows.push_back(row);
    }
  }
  nlohmann::json j;
  j["poset_betti"] = base.betti;
  j["rows"] = rows;
  emit(opt, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multichain complexes of finite posets: construction, "
               "classification, exact certificates and integer homology"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_iota) {
    sub->add_option("--poset", opt.poset_file, "poset file (lines `a < b`)")->required();
    sub->add_option("--r", opt.r, "multichain length r")->check(CLI::PositiveNumber);
    if (needs_iota)
      sub->add_option("--iota", opt.iota, "comma list, `all` or `all-reflexive`");
    sub->add_option("--kappa", opt.kappa, "comma list of 0/1 per block");
    sub->add_option("--relation", opt.relation, "iota|iota-prime|muhle|general")
        ->check(CLI::IsMember({"iota", "iota-prime", "muhle", "general"}));
    sub->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", opt.output, "write report to file");
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
    sub->add_option("--max-faces", opt.max_faces, "face expansion guard");
    sub->add_option("--max-triples", opt.max_triples, "oracle triple guard");
    return sub;
  };

  auto* classify = add_common(app.add_subcommand("classify", "predicate table over all iota"), false);
  classify->add_flag("--oracle", opt.oracle, "re-derive by brute force and diff");
  auto* complex = add_common(app.add_subcommand("complex", "build and export the clique complex"), true);
  auto* homology = add_common(app.add_subcommand("homology", "reduced integer homology"), true);
  auto* certify = add_common(app.add_subcommand("certify", "subdivision certificate / dichotomy"), true);
  auto* count = add_common(app.add_subcommand("count-graphs", "distinct graphs over script-I"), false);
  auto* explore = add_common(app.add_subcommand("explore", "sweep (iota, kappa) homology table"), false);

  CLI11_PARSE(app, argc, argv);
  try {
    if (classify->parsed()) return cmd_classify(opt);
    if (complex->parsed()) return cmd_complex(opt);
    if (homology->parsed()) return cmd_homology(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (count->parsed()) return cmd_count_graphs(opt);
    if (explore->parsed()) return cmd_explore(opt);
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = e.what();
    std::cerr << err.dump() << '\n';
    return 2;
  }
  return 0;
}
