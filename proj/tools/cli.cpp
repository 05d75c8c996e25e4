/*
 * Copyright (c) 2026, The BitSim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "bitsim/engine.hpp"
#include "bitsim/error.hpp"
#include "bitsim/oracle.hpp"
#include "bitsim/properties.hpp"

namespace bitsim::cli {
namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

TBox load_tbox(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file: " + path);
  std::stringstream text;
  text << in.rdbuf();
  TBox tbox = parse_tbox(text.str());
  validate(tbox);
  return tbox;
}

SimilarityConfig similarity_config(const CliConfig& cfg) {
  SimilarityConfig s;
  s.chunk_size = cfg.chunk_size;
  s.generativity_penalty = cfg.generativity_penalty;
  return s;
}

ConceptPtr parse_operand(const std::string& text, const TBox& tbox) {
  ConceptPtr e = parse_expr(text);
  tbox.check_names(*e);
  return e;
}

BitCode code_of(const std::string& text, const EncodingContext& ctx, const CliConfig& cfg) {
  if (cfg.raw) return deserialize(text, ctx);
  return encode(*parse_operand(text, ctx.tbox), ctx);
}

std::vector<std::string> all_names(const TBox& tbox) {
  std::vector<std::string> names = tbox.concepts;
  for (const auto& [name, def] : tbox.definitions) names.push_back(name);
  return names;
}

std::vector<BitCode> codes_of(const std::vector<std::string>& names, const EncodingContext& ctx) {
  std::vector<BitCode> codes;
  codes.reserve(names.size());
  for (const auto& n : names) codes.push_back(encode(*atom(n), ctx));
  return codes;
}

const char* score_text(const BitScore& s) {
  switch (s.kind) {
    case BitScore::Kind::Ignored: return "ignored";
    case BitScore::Kind::Undefined: return "undefined";
    case BitScore::Kind::Score: break;
  }
  return nullptr;
}

int cmd_encode(const CliConfig& cfg, const std::vector<std::string>& names, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  std::vector<std::string> lines;
  for (const auto& n : names) lines.push_back(n + '\t' + serialize(code_of(n, ctx, cfg)));
  for (const auto& l : lines) out << l << '\n';
  return kOk;
}

int cmd_sim(const CliConfig& cfg, const std::vector<std::string>& ops, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  const BitCode a = code_of(ops[0], ctx, cfg);
  const BitCode b = code_of(ops[1], ctx, cfg);
  const SimilarityReport r = sigma_hat(a, b, similarity_config(cfg));
  if (cfg.verbose) {
    out << "a\t" << serialize(a) << "\nb\t" << serialize(b) << '\n';
    if (r.code_level) out << "code-level\t" << (r.defined() ? "equal" : "differ") << '\n';
    for (const auto& p : r.per_position) {
      const char* text = score_text(p.score);
      out << "position\t" << p.position << '\t' << to_char(p.a) << '\t' << to_char(p.b) << '\t'
          << (text ? text : fixed6(p.score.value)) << '\n';
    }
    for (const auto& s : r.segments) {
      out << "segment\t" << s.key << '\t' << (s.matched ? "matched" : "unmatched") << '\t'
          << (s.score ? fixed6(*s.score) : std::string("undefined")) << '\n';
    }
    if (r.fcg_pair) out << "fcg\t" << r.fcg_pair->first << '\t' << r.fcg_pair->second << '\n';
  }
  if (!r.defined()) {
    out << "undefined\n";
    return kUndefined;
  }
  out << fixed6(*r.score) << '\n';
  return kOk;
}

int cmd_jaccard(const CliConfig& cfg, const std::vector<std::string>& ops, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  SimilarityReport r;
  if (cfg.raw) {
    const BitCode a = deserialize(ops[0], ctx);
    const BitCode b = deserialize(ops[1], ctx);
    r = sigma_hat(combine(Op::Meet, a, b), combine(Op::Join, a, b), similarity_config(cfg));
  } else {
    r = bitsim_jaccard(*parse_operand(ops[0], ctx.tbox), *parse_operand(ops[1], ctx.tbox), ctx,
                       similarity_config(cfg));
  }
  if (!r.defined()) {
    out << "undefined\n";
    return kUndefined;
  }
  out << fixed6(*r.score) << '\n';
  return kOk;
}

int cmd_subsume(const CliConfig& cfg, const std::vector<std::string>& ops, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  out << to_string(subsumes(code_of(ops[0], ctx, cfg), code_of(ops[1], ctx, cfg))) << '\n';
  return kOk;
}

int cmd_lcs(const CliConfig& cfg, const std::vector<std::string>& ops, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  const BitCode code = lcs_atomic(ops[0], ops[1], ctx);
  out << serialize(code) << '\t' << atomic_name_of(code, ctx).value_or("-") << '\n';
  return kOk;
}

int cmd_fcg(const CliConfig& cfg, const std::string& operand, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  out << fcg(code_of(operand, ctx, cfg)) << '\n';
  return kOk;
}

int cmd_matrix(const CliConfig& cfg, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  const auto names = all_names(ctx.tbox);
  ChunkCache cache;
  const Matrix m = all_pairs(codes_of(names, ctx), similarity_config(cfg), &cache, cfg.threads);
  write_matrix_tsv(out, m, names);
  return kOk;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
  const TBox tbox = load_tbox(cfg.tbox_path);
  const PropertyReport r = check_properties(tbox, similarity_config(cfg), cfg.seed, cfg.trials);
  r.write_tsv(out);
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_crosscheck(const CliConfig& cfg, std::ostream& out) {
  const TBox tbox = load_tbox(cfg.tbox_path);
  const CrossCheckReport r = cross_check(tbox, cfg.trials, cfg.seed);
  r.write_tsv(out);
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
  const EncodingContext ctx = build_context(load_tbox(cfg.tbox_path));
  const auto codes = codes_of(all_names(ctx.tbox), ctx);
  const double pairs = static_cast<double>(codes.size() * (codes.size() + 1) / 2);
  out << "chunk\tpairs\tns-per-pair\tcache-hit-rate\n";
  for (int chunk : {1, 8, 64, 256}) {
    SimilarityConfig s = similarity_config(cfg);
    s.chunk_size = chunk;
    ChunkCache cache;
    const auto start = std::chrono::steady_clock::now();
    all_pairs(codes, s, &cache, cfg.threads);
    const std::chrono::duration<double, std::nano> elapsed =
        std::chrono::steady_clock::now() - start;
    const CacheStats st = cache.stats();
    const double lookups = static_cast<double>(st.hits + st.misses);
    out << chunk << '\t' << static_cast<std::uint64_t>(pairs) << '\t'
        << fixed6(elapsed.count() / std::max(pairs, 1.0)) << '\t'
        << fixed6(lookups > 0 ? static_cast<double>(st.hits) / lookups : 0.0) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bit-code encoding and similarity of description logic concepts", "bitsim"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::vector<std::string> operands;
  std::string single;

  auto command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("tbox", cfg.tbox_path, "TBox file")->required();
    sub->add_option("--chunk", cfg.chunk_size, "chunk size in positions")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--penalty", cfg.generativity_penalty, "apply the code-generativity penalty");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "randomized trials")->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
    sub->add_flag("-v,--verbose", cfg.verbose, "per-position breakdown");
    sub->add_flag("--raw", cfg.raw, "operands are serialized codes");
    return sub;
  };

  CLI::App* encode_cmd = command("encode", "print the code of each concept");
  encode_cmd->add_option("concepts", operands, "names or expressions")->required();
  CLI::App* sim_cmd = command("sim", "similarity of two concepts");
  sim_cmd->add_option("concepts", operands)->required()->expected(2);
  CLI::App* jaccard_cmd = command("jaccard", "similarity of the meet and the join");
  jaccard_cmd->add_option("concepts", operands)->required()->expected(2);
  CLI::App* subsume_cmd = command("subsume", "does the first concept fall under the second");
  subsume_cmd->add_option("concepts", operands)->required()->expected(2);
  CLI::App* lcs_cmd = command("lcs", "least common subsumer of two atomic concepts");
  lcs_cmd->add_option("concepts", operands)->required()->expected(2);
  CLI::App* fcg_cmd = command("fcg", "code-generativity of a concept");
  fcg_cmd->add_option("concept", single)->required();
  CLI::App* matrix_cmd = command("matrix", "all-pairs similarity matrix");
  CLI::App* check_cmd = command("check", "randomized similarity property checks");
  CLI::App* crosscheck_cmd = command("crosscheck", "compare against the model enumerator");
  CLI::App* bench_cmd = command("bench", "time all-pairs at several chunk sizes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(cfg, operands, out);
    if (sim_cmd->parsed()) return cmd_sim(cfg, operands, out);
    if (jaccard_cmd->parsed()) return cmd_jaccard(cfg, operands, out);
    if (subsume_cmd->parsed()) return cmd_subsume(cfg, operands, out);
    if (lcs_cmd->parsed()) return cmd_lcs(cfg, operands, out);
    if (fcg_cmd->parsed()) return cmd_fcg(cfg, single, out);
    if (matrix_cmd->parsed()) return cmd_matrix(cfg, out);
    if (check_cmd->parsed()) return cmd_check(cfg, out);
    if (crosscheck_cmd->parsed()) return cmd_crosscheck(cfg, out);
    if (bench_cmd->parsed()) return cmd_bench(cfg, out);
  } catch (const std::exception& e) {
    err << "bitsim: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace bitsim::cli
