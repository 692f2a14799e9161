#include "operforge/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "operforge/weyl.hpp"

namespace operforge::cli {

namespace {

using io::Json;

Vec parse_lambda(const std::string& text, int rank) {
  if (text.empty()) throw PreconditionError("--lambda is required");
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item, "--lambda[" + std::to_string(v.size()) + "]"));
  if (int(v.size()) != rank)
    throw ParseError("--lambda", "expected " + std::to_string(rank) + " coordinates, found " + std::to_string(v.size()));
  return v;
}

bool needs_singular_precision(const JobConfig& c) {
  if (c.group == "oper") return c.command == "residue" || c.command == "nilp-form" || c.command == "order";
  if (c.group == "miura") return c.command == "invert" || c.command == "classify" || c.command == "diagram";
  return false;
}

Canonicalization canonical_input(const Algebra& alg, const Json& doc, int N) {
  std::string kind = io::kind_of(doc, "$");
  if (kind == "canonical_oper") return {io::canonical_from_json(alg, doc, "$", N), GaugeElement::identity()};
  if (kind == "raw_oper") return canonicalize(alg, io::raw_from_json(alg, doc, "$", N));
  if (kind == "connection") {
    if (!doc.contains("A")) throw ParseError("$", "missing member \"A\"");
    return canonicalize_connection(alg, io::lie_from_json(doc["A"], "g", alg.dim(), "$.A", N));
  }
  throw ParseError("$.kind", "expected canonical_oper, raw_oper or connection, found \"" + kind + "\"");
}

HConnection hconn_input(const Algebra& alg, const Json& doc, int N) {
  std::string kind = io::kind_of(doc, "$");
  if (kind != "h_connection") throw ParseError("$.kind", "expected h_connection, found \"" + kind + "\"");
  return io::hconn_from_json(alg, doc, "$", N);
}

Json word_json(const std::vector<int>& word) {
  Json j = Json::array();
  for (int i : word) j.push_back(i + 1);
  return j;
}

Json oper_command(const JobConfig& c, const Algebra& alg, const Json& in) {
  const int N = c.precision;
  auto can = canonical_input(alg, in, N);
  const auto& C = can.oper;
  if (c.command == "canonicalize") {
    Json out = io::to_json(alg, C);
    if (c.emit_witness) out["gauge"] = io::to_json(can.gauge);
    return out;
  }
  if (c.command == "order") {
    Json poles = Json::array();
    for (const auto& s : C.v) poles.push_back(pole_order(s));
    return Json{{"kind", "singularity_order"}, {"order", singularity_order(alg, C)}, {"pole_orders", poles}};
  }
  if (c.command == "residue") {
    Json out = io::to_json(res_rs(alg, C));
    if (c.emit_witness) {
      auto d = res_rs_direct(alg, C);
      out["direct_residue"] = io::to_json(d.residue);
      out["direct_point"] = io::to_json(d.point.coords);
    }
    return out;
  }
  if (c.command == "nilp-form") {
    NilpOperForm nf = c.lambda.empty() ? nilp_normal_form(alg, C) : lambda_nilp_form(alg, C, parse_lambda(c.lambda, alg.rank()));
    auto inv = res_nilp(alg, nf);
    Json out = Json::object();
    out["kind"] = "nilp_form";
    out["lambda"] = io::to_json(nf.lambda);
    out["q"] = io::to_json(nf.q, "g");
    out["residue_n"] = io::to_json(nf.residue_n);
    out["levi_element"] = io::to_json(nf.levi_element);
    out["ad_ranks"] = inv.ad_ranks;
    if (!inv.jordan.empty()) out["jordan"] = inv.jordan;
    if (c.emit_witness) out["gauge"] = io::to_json(compose(nf.gauge, can.gauge));
    return out;
  }
  if (c.command == "horiz") {
    int depth = c.depth < 0 ? 8 : c.depth;
    auto sols = horizontal_sections(alg, C, depth);
    std::vector<Vec> initial;
    Json list = Json::array();
    for (const auto& s : sols) {
      initial.push_back(s.coeff(0));
      list.push_back(io::to_json(s, "g"));
    }
    Json out = Json::object();
    out["kind"] = "horizontal_sections";
    out["depth"] = depth;
    out["dimension"] = rank(Matrix::from_columns(initial, alg.dim()));
    out["sections"] = list;
    return out;
  }
  throw PreconditionError("unknown command oper " + c.command);
}

Json miura_command(const JobConfig& c, const Algebra& alg, const Json& in) {
  const int N = c.precision;
  if (c.command == "invert") {
    Vec lambda = parse_lambda(c.lambda, alg.rank());
    auto chi = miura_inverse_dominant(alg, canonical_input(alg, in, N).oper, lambda);
    Json out = io::to_json(chi);
    out["residue"] = io::to_json(chi.residue());
    return out;
  }
  HConnection chi = hconn_input(alg, in, N);
  if (c.command == "transform") {
    auto can = miura_transform_full(alg, chi);
    Json out = io::to_json(alg, can.oper);
    if (c.emit_witness) out["gauge"] = io::to_json(can.gauge);
    return out;
  }
  if (c.command == "diagram") {
    auto d = check_residue_diagram(alg, chi);
    return Json{{"kind", "residue_diagram"},
                {"residue", io::to_json(chi.residue())},
                {"lhs", io::to_json(d.lhs)},
                {"rhs", io::to_json(d.rhs)},
                {"equal", d.equal}};
  }
  if (c.command == "classify") {
    auto mc = classify_miura_nilp(alg, chi);
    Json out = Json::object();
    out["kind"] = "miura_class";
    out["residue"] = io::to_json(chi.residue());
    out["w"] = Json{{"word", word_json(mc.w.word)}, {"length", mc.w.length()}, {"on_h", io::to_json(mc.w.on_h)}};
    out["verified"] = mc.verified;
    if (mc.verified) {
      out["limit_flag"] = io::to_json(mc.limit_flag);
      out["position"] = mc.position;
      out["residue_in_flag"] = mc.residue_in_flag;
      out["generic_away_from_zero"] = mc.generic_away_from_zero;
    } else {
      out["status"] = "unverified";
    }
    return out;
  }
  throw PreconditionError("unknown command miura " + c.command);
}

Json kk_command(const JobConfig& c) {
  auto alg = build_algebra(c.family, c.rank);
  const auto& rd = alg->root;
  Vec lambda = parse_lambda(c.lambda, rd.rank);
  if (c.command == "check") {
    int depth = c.depth < 0 ? kDefaultChainDepth : c.depth;
    Json out = Json::object();
    out["kind"] = "kk_check";
    out["lambda"] = io::to_json(lambda);
    out["antidominant"] = is_antidominant_weight(rd, lambda);
    out["verma_irreducible"] = verma_irreducible_critical(rd, lambda);
    out["chain_submodule_found"] = chain_finds_submodule(rd, lambda, depth);
    out["central_character"] = io::to_json(central_character(c.family, c.rank, lambda));
    return out;
  }
  if (c.command == "chain") {
    int depth = c.depth < 0 ? kDefaultChainDepth : c.depth;
    AffineWeight start{parse_rational(c.delta, "--delta"), lambda};
    auto ws = kk_chain_search(rd, start, depth);
    Json list = Json::array();
    for (const auto& w : ws) list.push_back(io::to_json(w));
    Json out = Json::object();
    out["kind"] = "kk_chain";
    out["start"] = io::to_json(start);
    out["depth"] = depth;
    out["weights"] = list;
    if (c.emit_witness) {
      // one predecessor per weight: the first weight with a step onto it
      Json steps = Json::array();
      Rational bound = start.n + depth;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] == start) continue;
        for (std::size_t p = 0; p < ws.size(); ++p) {
          auto next = kk_steps(rd, ws[p], bound);
          if (std::find(next.begin(), next.end(), ws[i]) != next.end()) {
            steps.push_back(Json::array({p, i}));
            break;
          }
        }
      }
      out["steps"] = steps;
    }
    return out;
  }
  if (c.command == "character") {
    int depth = c.depth < 0 ? 2 : c.depth;
    int height = c.height < 0 ? depth : c.height;
    auto t = verma_character(rd, lambda, depth, height, c.loop_only);
    Json entries = Json::array();
    for (const auto& [key, d] : t.dims) {
      Vec mu = lambda;
      Vec b = root_to_weight(rd, key.second);
      for (int i = 0; i < rd.rank; ++i) mu[i] -= b[i];
      entries.push_back(Json{{"delta", key.first}, {"beta", key.second}, {"weight", io::to_json(mu)}, {"dim", d}});
    }
    Json totals = Json::array();
    for (int n = 0; n <= depth; ++n) totals.push_back(t.total_at_degree(n));
    Json out = Json::object();
    out["kind"] = "character";
    out["lambda"] = io::to_json(lambda);
    out["depth"] = depth;
    out["height"] = height;
    out["loop_only"] = c.loop_only;
    out["entries"] = entries;
    out["totals"] = totals;
    return out;
  }
  throw PreconditionError("unknown command kk " + c.command);
}

Json read_document(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, "cannot open the input file");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + " at byte " + std::to_string(e.byte), "malformed JSON");
  }
}

bool takes_input(const JobConfig& c) { return c.group == "oper" || c.group == "miura"; }

JobResult guarded(const std::function<Json()>& body, const std::string& where) {
  JobResult r;
  auto fail = [&](int code, const std::string& msg) {
    r.exit_code = code;
    r.error = where.empty() || msg.rfind(where, 0) == 0 ? msg : where + ": " + msg;
  };
  try {
    r.doc = body();
  } catch (const ParseError& e) {
    fail(1, e.what());
  } catch (const PrecisionError& e) {
    fail(3, e.what());
  } catch (const Error& e) {
    fail(2, e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(1, e.what());
  } catch (const std::exception& e) {
    fail(2, e.what());
  }
  return r;
}

}  // namespace

JobResult run(const JobConfig& cfg, const Json& input) {
  return guarded([&]() -> Json {
    if (cfg.group == "kk") return kk_command(cfg);
    auto alg = build_algebra(cfg.family, cfg.rank);
    if (needs_singular_precision(cfg) && cfg.precision < 2 * alg->coxeter())
      throw PreconditionError("precision " + std::to_string(cfg.precision) + " is below the required minimum " +
                              std::to_string(2 * alg->coxeter()) + " (twice the Coxeter number)");
    if (cfg.precision < 1) throw PreconditionError("precision must be positive");
    if (cfg.group == "alg") {
      if (cfg.command != "info") throw PreconditionError("unknown command alg " + cfg.command);
      return io::algebra_info(*alg);
    }
    if (cfg.group == "oper") return oper_command(cfg, *alg, input);
    if (cfg.group == "miura") return miura_command(cfg, *alg, input);
    throw PreconditionError("unknown command group " + cfg.group);
  }, cfg.input);
}

JobResult run(const JobConfig& cfg) {
  if (!takes_input(cfg)) return run(cfg, Json());
  Json doc;
  JobResult r = guarded([&]() -> Json {
    doc = read_document(cfg.input);
    return Json();
  }, "");
  if (r.exit_code != 0) return r;
  return run(cfg, doc);
}

std::string render_text(const Json& doc) {
  std::string out;
  if (!doc.is_object()) return doc.dump() + "\n";
  for (const auto& [k, v] : doc.items()) out += k + " = " + v.dump() + "\n";
  return out;
}

int main(int argc, char** argv) {
  CLI::App app{"operforge: opers, Miura opers and critical-level linkage over exact rationals"};
  app.require_subcommand(1);
  JobConfig base;
  std::string type = "A";
  int precision = -1, jobs = 1;
  bool json = false;
  std::string output;
  std::vector<std::string> inputs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Cartan type letter (A-G)");
    sub->add_option("--rank", base.rank, "rank");
    sub->add_option("--precision", precision, "series precision N");
    sub->add_flag("--json", json, "pretty-printed JSON output");
    sub->add_flag("--emit-witness", base.emit_witness, "include gauges, predecessors and other witnesses");
    sub->add_option("--jobs", jobs, "worker threads for several inputs")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", output, "write the output to a file");
  };
  struct Cmd {
    std::string group, name;
    bool input, lambda, depth;
  };
  const std::vector<Cmd> cmds = {
      {"alg", "info", false, false, false},        {"oper", "canonicalize", true, false, false},
      {"oper", "residue", true, false, false},     {"oper", "nilp-form", true, true, false},
      {"oper", "order", true, false, false},       {"oper", "horiz", true, false, true},
      {"miura", "transform", true, false, false},  {"miura", "invert", true, true, false},
      {"miura", "classify", true, false, false},   {"miura", "diagram", true, false, false},
      {"kk", "check", false, true, true},          {"kk", "chain", false, true, true},
      {"kk", "character", false, true, true},
  };
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Cmd*>> leaves;
  for (const auto& c : cmds) {
    if (!groups.count(c.group)) {
      groups[c.group] = app.add_subcommand(c.group, c.group + " commands");
      groups[c.group]->require_subcommand(1);
    }
    CLI::App* sub = groups[c.group]->add_subcommand(c.name, c.group + " " + c.name);
    add_common(sub);
    if (c.input) sub->add_option("inputs", inputs, "input documents")->required()->check(CLI::ExistingFile);
    if (c.lambda) sub->add_option("--lambda", base.lambda, "comma-separated coordinates");
    if (c.depth) sub->add_option("--depth", base.depth, "depth bound");
    if (c.group == "kk" && c.name == "chain") sub->add_option("--delta", base.delta, "delta-degree of the start");
    if (c.group == "kk" && c.name == "character") {
      sub->add_option("--height", base.height, "bound on the height of lambda - mu");
      sub->add_flag("--loop-only", base.loop_only, "only factors from g t^-1 C[t^-1]");
    }
    leaves.push_back({sub, &c});
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  for (const auto& [sub, c] : leaves)
    if (sub->parsed()) {
      base.group = c->group;
      base.command = c->name;
    }
  if (type.size() != 1) {
    std::cerr << "operforge: error: --type must be a single letter\n";
    return 1;
  }
  base.family = char(std::toupper(static_cast<unsigned char>(type[0])));
  base.precision = kDefaultPrecision;
  if (const char* env = std::getenv("OPERFORGE_PRECISION")) {
    try {
      std::size_t used = 0;
      base.precision = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "operforge: error: OPERFORGE_PRECISION is not an integer\n";
      return 1;
    }
  }
  if (precision >= 0) base.precision = precision;

  std::vector<JobConfig> configs;
  if (inputs.empty()) {
    configs.push_back(base);
  } else {
    for (const auto& in : inputs) {
      configs.push_back(base);
      configs.back().input = in;
    }
  }
  std::vector<JobResult> results(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) results[i] = run(configs[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(jobs, int(configs.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  std::string text;
  if (results.size() == 1) {
    const auto& r = results[0];
    code = r.exit_code;
    if (code == 0) text = json ? r.doc.dump(2) + "\n" : render_text(r.doc);
    else std::cerr << "operforge: error: " << r.error << "\n";
  } else {
    Json all = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      code = std::max(code, r.exit_code);
      if (r.exit_code != 0) std::cerr << "operforge: error: " << r.error << "\n";
      Json entry = Json{{"input", configs[i].input}, {"exit", r.exit_code}};
      if (r.exit_code == 0) entry["result"] = r.doc;
      else entry["error"] = r.error;
      all.push_back(entry);
      if (!json) {
        text += "# " + configs[i].input + "\n";
        text += r.exit_code == 0 ? render_text(r.doc) : "error = " + Json(r.error).dump() + "\n";
      }
    }
    if (json) text = all.dump(2) + "\n";
  }
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) {
      std::cerr << "operforge: error: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return code;
}

}  // namespace operforge::cli
