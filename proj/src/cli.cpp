#include "guardprompt/cli.hpp"

#include <iostream>
#include <sstream>
#include <json.hpp>

#include "guardprompt/adversary.hpp"
#include "guardprompt/repl.hpp"
#include "guardprompt/semantics.hpp"
#include "guardprompt/synthesizer.hpp"
#include "guardprompt/verifier.hpp"

namespace guardprompt {

using json = nlohmann::json;

set_template parse_template(const std::string& text) {
  const question q = parse("restrict(" + text + ", weight)");
  return *q.templ();
}

namespace {

verify_options options_for(const scenario& sc, const cli_flags& flags) {
  return {sc.mode, sc.guard_count, flags.asked_guard};
}

json outcome_json(const outcome& o) {
  json j{{"world", o.world}, {"roles", o.assignment.to_string()}, {"answer", o.answer}};
  if (o.behavior) j["strategy"] = o.behavior->to_string();
  return j;
}

json counterexample_json(const counterexample& c) {
  if (const auto* col = std::get_if<collision>(&c)) {
    return {{"kind", "collision"},
            {"answer", col->answer},
            {"first", outcome_json(col->first)},
            {"second", outcome_json(col->second)}};
  }
  const auto& s = std::get<stuck>(c);
  json j{{"kind", "stuck"},
         {"world", s.world},
         {"roles", s.assignment.to_string()},
         {"question", print(s.at)},
         {"reason", s.reason}};
  if (s.behavior) j["strategy"] = s.behavior->to_string();
  return j;
}

json domain_json(const world_domain& d) {
  json excluded = json::array();
  for (const auto& e : d.excluded) excluded.push_back({{"world", e.world}, {"reason", e.reason}});
  return {{"valid", d.valid}, {"excluded", excluded}};
}

std::string describe_domain(const world_domain& d) {
  std::string out = "valid worlds: " + answer_set(d.valid).to_string();
  if (!d.excluded.empty()) {
    std::vector<value_t> ex;
    for (const auto& e : d.excluded) ex.push_back(e.world);
    out += "\nexcluded worlds: " + answer_set(ex).to_string() + " (first: " +
           d.excluded.front().reason + ")";
  }
  return out;
}

int run_verify(const scenario& sc, const cli_flags& flags, std::ostream& out) {
  const verdict v = verify(sc.space, sc.liar, *sc.prompt, options_for(sc, flags));
  int code = exit_code::error;
  if (flags.format == output_format::machine) {
    json j{{"prompt", print(*sc.prompt)},
           {"liar", describe(sc.liar)},
           {"domain", domain_json(v.domain)},
           {"assumptions", v.assumptions}};
    if (const auto* w = v.win()) {
      json table = json::array();
      for (const auto& [a, world] : w->dec.table()) table.push_back({a, world});
      j["verdict"] = "winning";
      j["decoder"] = {{"closed_form", w->dec.closed_form()}, {"table", table}};
      j["outcomes"] = w->outcome_count;
      code = exit_code::success;
    } else if (const auto* c = v.cex()) {
      j["verdict"] = "not_winning";
      j["counterexample"] = counterexample_json(*c);
      code = exit_code::not_winning;
    } else {
      j["verdict"] = "invalid";
      j["reason"] = std::get<invalid>(v.result).reason;
    }
    out << j.dump(2) << '\n';
    return code;
  }

  if (const auto* w = v.win()) {
    const std::string form = w->dec.closed_form();
    out << "WINNING, decoder: " << (form == "identity" || form == "table" ? form : "w = " + form)
        << ", " << w->outcome_count << " outcomes\n";
    if (form == "table") {
      for (const auto& [a, world] : w->dec.table()) out << "  " << a << " -> " << world << '\n';
    }
    code = exit_code::success;
  } else if (const auto* c = v.cex()) {
    out << "NOT WINNING: " << to_string(*c) << '\n';
    code = exit_code::not_winning;
  } else {
    out << "INVALID: " << std::get<invalid>(v.result).reason << '\n';
  }
  out << describe_domain(v.domain) << '\n';
  for (const auto& a : v.assumptions) out << "assumes: " << a << '\n';
  return code;
}

std::string agent_name(const eval_context& ctx) {
  std::string who = std::string(to_string(ctx.respondent_role())) + " ";
  return who + (ctx.hypothetical ? "(hypothetical, in place of guard " : "(guard ") +
         std::to_string(ctx.respondent) + ")";
}

int run_eval(const scenario& sc, const cli_flags& flags, std::ostream& out) {
  const question& prompt = *sc.prompt;
  if (prompt.contains_self_reference()) {
    throw self_reference_unsupported("could(self) has no direct evaluation; use fixpoint");
  }
  value_t w = sc.space.min();
  if (flags.world) {
    w = *flags.world;
    if (!sc.space.contains(w)) throw validation_error("world " + std::to_string(w) + " is not in S");
  }
  if (flags.asked_guard >= sc.guard_count) throw validation_error("no such guard");

  std::ostringstream text;
  json report = json::array();
  for (const auto& roles : enumerate_assignments(sc.guard_count, sc.mode)) {
    const eval_context ctx{sc.space, world{w}, roles, sc.liar, flags.asked_guard,
                           false, std::nullopt, nullptr};
    json entry{{"roles", roles.to_string()}, {"world", w}};
    text << "world " << w << ", roles " << roles.to_string() << ", asking guard "
        << flags.asked_guard << '\n';
    try {
      if (is_adversarial(sc.liar)) {
        json branches = json::array();
        answer_set reachable;
        for (const auto& b : explore_behaviors(sc.space, world{w}, roles, prompt,
                                               flags.asked_guard)) {
          json jb{{"strategy", b.witness.to_string()}};
          if (b.root_support) {
            reachable = reachable | *b.root_support;
            jb["support"] = b.root_support->values();
            text << "  " << b.witness.to_string() << " -> " << b.root_support->to_string() << '\n';
          } else {
            jb["stuck"] = b.stuck_reason;
            text << "  " << b.witness.to_string() << " -> stuck at " << print(*b.stuck_at)
                << ": " << b.stuck_reason << '\n';
          }
          branches.push_back(jb);
        }
        text << "  reachable answers: " << reachable.to_string() << '\n';
        entry["behaviors"] = branches;
        entry["reachable"] = reachable.values();
      } else {
        json nodes = json::array();
        for (const auto& nf : evaluation_frames(ctx, prompt)) {
          json jn{{"question", print(nf.node)}, {"agent", agent_name(nf.ctx)},
                  {"permissible", nf.reply_set.values()}};
          text << "  " << print(nf.node) << "  [" << agent_name(nf.ctx) << ", P = "
              << nf.reply_set.to_string() << "]\n";
          try {
            const auto t = truthful_set(nf.ctx, nf.node);
            const auto s = response_support(nf.ctx, nf.node);
            text << "    truthful " << t.to_string() << ", support " << s.to_string() << '\n';
            jn["truthful"] = t.values();
            jn["support"] = s.values();
          } catch (const eval_error& e) {
            text << "    " << e.what() << '\n';
            jn["error"] = e.what();
          }
          nodes.push_back(jn);
        }
        entry["nodes"] = nodes;
      }
    } catch (const eval_error& e) {
      text << "  " << e.what() << '\n';
      entry["error"] = e.what();
    }
    report.push_back(entry);
  }
  if (flags.format == output_format::machine) {
    out << report.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return exit_code::success;
}

int run_synth(const scenario& sc, const cli_flags& flags, std::ostream& out) {
  const auto report = synthesize(sc.space, sc.liar, flags.max_depth, flags.templates,
                                 options_for(sc, flags));
  if (flags.format == output_format::machine) {
    json j{{"examined", report.examined}};
    j["winning"] = json::array();
    for (const auto& c : report.winning) {
      j["winning"].push_back(
          {{"prompt", print(c.prompt)}, {"decoder", c.decoder_summary}, {"outcomes", c.outcome_count}});
    }
    j["failing"] = json::array();
    for (const auto& c : report.failing) {
      j["failing"].push_back({{"prompt", print(c.prompt)}, {"kind", c.kind}});
    }
    j["diagnostic"] = json::array();
    for (const auto& c : report.diagnostic) {
      j["diagnostic"].push_back({{"prompt", print(c.prompt)}, {"notes", c.notes}});
    }
    out << j.dump(2) << '\n';
    return exit_code::success;
  }
  out << "examined " << report.examined << " candidates (depth <= " << flags.max_depth << ", "
      << describe(sc.liar) << ")\n";
  out << "winning (" << report.winning.size() << "):\n";
  for (const auto& c : report.winning) {
    out << "  " << print(c.prompt) << "  [decoder " << c.decoder_summary << ", "
        << c.outcome_count << " outcomes]\n";
  }
  out << "failing (" << report.failing.size() << "):\n";
  for (const auto& c : report.failing) out << "  " << print(c.prompt) << "  [" << c.kind << "]\n";
  out << "diagnostic only (" << report.diagnostic.size() << "):\n";
  for (const auto& c : report.diagnostic) {
    out << "  " << print(c.prompt) << '\n';
    for (const auto& n : c.notes) out << "    " << n << '\n';
  }
  return exit_code::success;
}

int run_fixpoint(const scenario& sc, const cli_flags& flags, std::ostream& out) {
  const role_assignment roles{{role::truth_teller, role::liar}};
  const value_t w = flags.world.value_or(sc.space.min());
  json j = json::object();
  for (std::size_t g = 0; g < 2; ++g) {
    const std::string who = to_string(roles.at(g));
    std::string line;
    if (roles.at(g) == role::liar && is_adversarial(sc.liar)) {
      const bool none =
          enumerate_strategies(sc.space, world{w}, roles, question::could_self(), g).empty();
      line = none ? "NO FIXPOINT: no falsity-consistent strategy exists"
                  : "consistent strategies exist";
    } else {
      const eval_context ctx{sc.space, world{w}, roles, sc.liar, g, false, std::nullopt, nullptr};
      line = to_string(solve_self_reference(ctx), sc.space.values(), "S");
    }
    j[who] = line;
    if (flags.format == output_format::human) out << who << ": " << line << '\n';
  }
  if (flags.format == output_format::machine) out << j.dump(2) << '\n';
  return exit_code::success;
}

int run_play(const scenario& sc, std::istream& in, std::ostream& out) {
  session s(sc);
  out << s.banner() << '\n';
  std::string line;
  while (!s.finished()) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << s.step(line).text << '\n';
  }
  return exit_code::success;
}

}  // namespace

int run(const std::string& command, const scenario& sc, const cli_flags& flags,
        std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const bool needs_prompt = command == "verify" || command == "eval";
    if (needs_prompt && !sc.prompt) {
      err << "error: " << command << " needs a prompt in the scenario\n";
      return exit_code::error;
    }
    if (command == "verify") return run_verify(sc, flags, out);
    if (command == "eval") return run_eval(sc, flags, out);
    if (command == "synth") return run_synth(sc, flags, out);
    if (command == "fixpoint") return run_fixpoint(sc, flags, out);
    if (command == "play") return run_play(sc, in, out);
    err << "error: unknown command '" << command
        << "' (expected verify, eval, synth, fixpoint or play)\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_code::error;
}

}  // namespace guardprompt
