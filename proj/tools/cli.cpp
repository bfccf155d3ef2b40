#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "hcb/errors.hpp"
#include "hcb/hc_model.hpp"
#include "hcb/partitions.hpp"
#include "hcb/principal_block.hpp"
#include "hcb/serialization.hpp"
#include "hcb/symgroup.hpp"

namespace hcb::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

CherednikParameter parse_parameter(const std::string& text) {
  if (text == "irrational") return CherednikParameter::irrational(false);
  if (text == "-irrational") return CherednikParameter::irrational(true);
  return CherednikParameter::parse(text);
}

json labels_json(const std::vector<Partition>& labels) {
  json out = json::array();
  for (const auto& p : labels) out.push_back(p.to_string());
  return out;
}

json size_matrix_json(const std::vector<std::vector<std::size_t>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const NotFiniteDimensional*>(&e)) return "NotFiniteDimensional";
  if (dynamic_cast<const NonAdmissible*>(&e)) return "NonAdmissible";
  if (dynamic_cast<const ParameterError*>(&e)) return "ParameterError";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  return "Error";
}

int report_error(const std::exception& e, int code, std::ostream& out, std::ostream& err) {
  json j = {{"schema", kSchema}, {"status", "error"}, {"kind", error_kind(e)}, {"message", e.what()}};
  out << j.dump() << '\n';
  err << "hc: " << e.what() << '\n';
  return code;
}

QuiverRep named_block_object(const BlockModel& block, const std::string& name) {
  if (name == "H") return block.regular;
  if (name == "D") return block.wall_crossing;
  if (name.rfind("S_", 0) == 0) {
    const auto v = block.algebra.quiver()->vertex_index(name);
    return simple_rep(block.algebra, v);
  }
  throw InputError("unknown block object '" + name + "' (expected H, D or S_<i>)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harish-Chandra bimodule classification data for rational Cherednik algebras of S_n", "hc"};
  app.require_subcommand(1);

  std::function<json()> action;

  // decompose
  std::string lambda_text;
  int m = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split lambda = mu + m*nu with mu m-restricted");
  decompose_cmd->add_option("--lambda", lambda_text, "Partition, comma separated")->required();
  decompose_cmd->add_option("--m", m, "Modulus m >= 2")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const auto d = decompose(Partition::parse(lambda_text), m);
      return json{{"schema", kSchema}, {"mu", d.mu.to_string()}, {"nu", d.nu.to_string()}};
    };
  });

  // simples / classify
  int n = 0;
  std::string c_text;
  auto* simples_cmd = app.add_subcommand("simples", "Labels of the simple HC bimodules");
  simples_cmd->add_option("--n", n)->required();
  simples_cmd->add_option("--c", c_text, "Parameter p/q, an integer, or 'irrational'")->required();
  simples_cmd->callback([&] {
    action = [&] {
      const auto s = simple_labels(n, parse_parameter(c_text));
      return json{{"schema", kSchema},
                  {"class", to_json(s.parameter)},
                  {"labels", labels_json(s.labels)},
                  {"count", s.labels.size()},
                  {"sign_twisted", s.sign_twisted}};
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Classify a parameter relative to n");
  classify_cmd->add_option("--n", n)->required();
  classify_cmd->add_option("--c", c_text)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const auto c = parse_parameter(c_text);
      return json{{"schema", kSchema}, {"c", c.to_string()}, {"class", to_json(classify_parameter(c, n))}};
    };
  });

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "The chain of two-sided ideals and their supports");
  chain_cmd->add_option("--n", n)->required();
  auto* chain_m = chain_cmd->add_option("--m", m);
  auto* chain_c = chain_cmd->add_option("--c", c_text);
  chain_m->excludes(chain_c);
  chain_cmd->callback([&] {
    action = [&] {
      if (!*chain_m && !*chain_c) throw InputError("chain needs --m or --c");
      const IdealChain chain = *chain_m ? ideal_chain(n, m) : ideal_chain(n, parse_parameter(c_text));
      json j = {{"schema", kSchema}};
      j.update(to_json(chain));
      return j;
    };
  });

  // block
  std::string dot_path;
  bool want_ext = false, want_k1 = false;
  auto* block_cmd = app.add_subcommand("block", "The principal block at c = r/m");
  block_cmd->add_option("--n", n)->required();
  block_cmd->add_option("--m", m)->required();
  block_cmd->add_option("--dot", dot_path, "Write the block quiver as DOT to this path");
  block_cmd->add_flag("--ext", want_ext, "Include the Ext^1 matrix of the simples");
  block_cmd->add_flag("--indecomposables-for-k1", want_k1, "Count indecomposables (requires floor(n/m) = 1)");
  block_cmd->callback([&] {
    action = [&] {
      const BlockModel block = build_block(n, m);
      json j = {{"schema", kSchema}};
      j.update(block_to_json(block));
      if (want_ext) j["ext1"] = size_matrix_json(ext1_simples_matrix(block.algebra));
      if (want_k1) {
        if (block.k != 1) throw ParameterError("--indecomposables-for-k1 needs floor(n/m) = 1");
        const StringModules sm = block_indecomposables(block);
        if (sm.truncated) throw DomainError("string enumeration truncated");
        j["indecomposables"] = sm.modules.size();
        j["strings"] = sm.strings;
      }
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw InputError("cannot write '" + dot_path + "'");
        f << block_to_dot(block);
        j["dot"] = dot_path;
      }
      return j;
    };
  });

  // duality
  std::string rep_path, object_name;
  auto* duality_cmd = app.add_subcommand("duality", "Apply the duality of the principal block to a representation");
  duality_cmd->add_option("--n", n)->required();
  duality_cmd->add_option("--m", m)->required();
  auto* dual_rep = duality_cmd->add_option("--rep", rep_path, "Representation file");
  auto* dual_obj = duality_cmd->add_option("--object", object_name, "H, D or S_<i>");
  dual_rep->excludes(dual_obj);
  duality_cmd->callback([&] {
    action = [&] {
      const BlockModel block = build_block(n, m);
      const Quiver& q = *block.algebra.quiver();
      QuiverRep rep;
      if (*dual_rep)
        rep = parse_rep(q, read_json_file(rep_path));
      else if (*dual_obj)
        rep = named_block_object(block, object_name);
      else
        throw InputError("duality needs --rep or --object");
      return json{{"schema", kSchema}, {"rep", rep_to_json(q, duality(block, rep))}};
    };
  });

  // branch
  std::string blocks_text, taus_text;
  auto* branch_cmd = app.add_subcommand("branch", "Restriction of an irreducible to a Young subgroup");
  branch_cmd->add_option("--lambda", lambda_text)->required();
  branch_cmd->add_option("--blocks", blocks_text, "Composition, comma separated")->required();
  branch_cmd->add_option("--taus", taus_text, "One partition per block, separated by ';'");
  branch_cmd->callback([&] {
    action = [&] {
      const Partition lambda = Partition::parse(lambda_text);
      std::vector<int> blocks;
      for (const auto& b : split(blocks_text, ',')) blocks.push_back(std::stoi(b));
      const YoungSubgroup sub(blocks);
      json j = {{"schema", kSchema},
                {"lambda", lambda.to_string()},
                {"blocks", blocks},
                {"dim", dim_irrep(lambda).get_str()}};
      if (!taus_text.empty()) {
        std::vector<Partition> taus;
        for (const auto& t : split(taus_text, ';')) taus.push_back(Partition::parse(t));
        j["multiplicity"] = branching_multiplicity(lambda, sub, taus);
      } else {
        j["k0"] = to_json(restrict_standard_k0(lambda, sub));
      }
      return j;
    };
  });

  // quiver
  std::string spec_path, kill_text, from_path, to_path;
  auto* quiver_cmd = app.add_subcommand("quiver", "Finite-dimensional quiver algebras from a spec file");
  quiver_cmd->require_subcommand(1);
  auto* qbuild = quiver_cmd->add_subcommand("build", "Path basis and structure constants");
  qbuild->add_option("spec", spec_path)->required();
  qbuild->callback([&] {
    action = [&] {
      const auto spec = parse_quiver_spec(read_json_file(spec_path));
      const FDAlgebra alg = build_algebra(spec.quiver, spec.relations);
      json j = {{"schema", kSchema}};
      j.update(algebra_to_json(alg));
      j["ext1_simples"] = size_matrix_json(ext1_simples_matrix(alg));
      return j;
    };
  });
  auto* qquot = quiver_cmd->add_subcommand("quotient", "Serre quotient eAe killing the given vertices");
  qquot->add_option("spec", spec_path)->required();
  qquot->add_option("--kill", kill_text, "Vertex names, comma separated");
  qquot->callback([&] {
    action = [&] {
      const auto spec = parse_quiver_spec(read_json_file(spec_path));
      const FDAlgebra alg = build_algebra(spec.quiver, spec.relations);
      std::vector<std::size_t> kill;
      for (const auto& v : split(kill_text, ',')) kill.push_back(spec.quiver.vertex_index(v));
      json j = {{"schema", kSchema}};
      j.update(serre_quotient_to_json(serre_quotient(alg, kill)));
      return j;
    };
  });
  auto* qext = quiver_cmd->add_subcommand("ext", "dim Hom and dim Ext^1 between two representations");
  qext->add_option("spec", spec_path)->required();
  qext->add_option("--from", from_path)->required();
  qext->add_option("--to", to_path)->required();
  qext->callback([&] {
    action = [&] {
      const auto spec = parse_quiver_spec(read_json_file(spec_path));
      const FDAlgebra alg = build_algebra(spec.quiver, spec.relations);
      const QuiverRep a = parse_rep(spec.quiver, read_json_file(from_path));
      const QuiverRep b = parse_rep(spec.quiver, read_json_file(to_path));
      validate_rep(alg, a);
      validate_rep(alg, b);
      return json{{"schema", kSchema}, {"hom", hom_dim(alg, a, b)}, {"ext1", ext1(alg, a, b)}};
    };
  });

  // twoparam
  std::string cprime_text;
  auto* two_cmd = app.add_subcommand("twoparam", "Is HC(c, c') nonzero, and what is it");
  two_cmd->add_option("--c", c_text)->required();
  two_cmd->add_option("--cprime", cprime_text)->required();
  two_cmd->add_option("--n", n)->required();
  two_cmd->callback([&] {
    action = [&] {
      const auto cls = two_param_class(parse_parameter(c_text), parse_parameter(cprime_text), n);
      json j = {{"schema", kSchema}, {"case", to_string(cls.kind)}};
      if (cls.kind == TwoParamCase::RepOfSymmetricGroup) {
        j["group_rank"] = cls.group_rank;
        j["simple_count"] = cls.simple_count;
      }
      return j;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    out << action().dump() << '\n';
    return kOk;
  } catch (const InputError& e) {
    return report_error(e, kInputError, out, err);
  } catch (const DomainError& e) {
    return report_error(e, kDomainError, out, err);
  } catch (const std::invalid_argument& e) {
    return report_error(e, kInputError, out, err);
  } catch (const std::out_of_range& e) {
    return report_error(e, kInputError, out, err);
  }
}

}  // namespace hcb::cli
