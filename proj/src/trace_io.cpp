#include "diagre/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "diagre/measures.hpp"
#include "diagre/textio.hpp"

namespace diagre {

namespace {

constexpr const char* kHeader = "diagre-trace v1";

std::string chomp(const std::string& s) {
  std::string out = s;
  while (!out.empty() && (out.back() == '\r' || out.back() == '\n'))
    out.pop_back();
  return out;
}

bool take_prefix(const std::string& line, const std::string& prefix,
                 std::string& rest) {
  if (line.rfind(prefix, 0) != 0) return false;
  rest = line.substr(prefix.size());
  return true;
}

}  // namespace

void write_trace(std::ostream& out, const RewriteTrace& trace, Mode mode,
                 const Signature& sig) {
  out << kHeader << "\n";
  out << "mode: " << mode_name(mode) << "\n";
  for (const auto& [name, e] : sig.entries())
    out << "gen: " << name << " " << e.dom << " " << e.cod << "\n";
  out << "initial: " << print_term(trace.initial) << "\n";
  for (const RewriteStep& s : trace.steps)
    out << "step: " << rule_name(s.rule) << " @" << position_digits(s.position)
        << " " << print_term(s.after) << "\n";
  out << "final: " << print_term(trace.final_term) << "\n";
}

TraceDocument read_trace(std::istream& in) {
  TraceDocument doc;
  std::string line;
  std::size_t lineno = 0;

  auto bad = [&](const std::string& why) {
    return ParseError("trace line " + std::to_string(lineno) + ": " + why,
                      lineno);
  };

  if (!std::getline(in, line) || chomp(line) != kHeader)
    throw ParseError("missing trace header", 1);
  lineno = 1;

  bool have_initial = false, have_final = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = chomp(line);
    if (line.empty()) continue;
    std::string rest;
    if (take_prefix(line, "mode: ", rest)) {
      auto m = mode_from_name(rest);
      if (!m) throw bad("unknown mode " + rest);
      doc.mode = *m;
    } else if (take_prefix(line, "gen: ", rest)) {
      std::istringstream gs(rest);
      std::string name;
      int dom, cod;
      if (!(gs >> name >> dom >> cod)) throw bad("malformed generator entry");
      doc.sig.add(name, dom, cod);
    } else if (take_prefix(line, "initial: ", rest)) {
      doc.trace.initial = parse_term(rest, doc.sig);
      have_initial = true;
    } else if (take_prefix(line, "step: ", rest)) {
      if (!have_initial) throw bad("step before initial term");
      std::size_t sp1 = rest.find(' ');
      if (sp1 == std::string::npos) throw bad("malformed step");
      std::size_t sp2 = rest.find(' ', sp1 + 1);
      if (sp2 == std::string::npos) throw bad("malformed step");
      auto rule = rule_from_name(rest.substr(0, sp1));
      if (!rule) throw bad("unknown rule " + rest.substr(0, sp1));
      std::string pos_text = rest.substr(sp1 + 1, sp2 - sp1 - 1);
      if (pos_text.empty() || pos_text[0] != '@')
        throw bad("position must start with @");
      RewriteStep step;
      step.rule = *rule;
      step.position = position_from_digits(pos_text.substr(1));
      step.before = doc.trace.steps.empty() ? doc.trace.initial
                                            : doc.trace.steps.back().after;
      step.after = parse_term(rest.substr(sp2 + 1), doc.sig);
      doc.trace.steps.push_back(std::move(step));
    } else if (take_prefix(line, "final: ", rest)) {
      doc.trace.final_term = parse_term(rest, doc.sig);
      have_final = true;
    } else {
      throw bad("unrecognized line");
    }
  }
  if (!have_initial) throw ParseError("trace has no initial term", lineno);
  if (!have_final) throw ParseError("trace has no final term", lineno);
  return doc;
}

TraceCheck check_trace(const TraceDocument& doc) {
  TraceCheck result;
  TermPtr cur = doc.trace.initial;
  for (std::size_t i = 0; i < doc.trace.steps.size(); ++i) {
    const RewriteStep& recorded = doc.trace.steps[i];
    RewriteStep replayed;
    try {
      replayed = apply_step(cur, recorded.position, recorded.rule, doc.mode);
    } catch (const Error& e) {
      result.failure =
          "step " + std::to_string(i + 1) + ": " + e.what();
      return result;
    }
    if (!equal(replayed.after, recorded.after)) {
      result.failure = "step " + std::to_string(i + 1) +
                       ": recorded result differs from replayed result";
      return result;
    }
    DecreaseReport rep = verify_decrease(replayed, doc.mode);
    result.step_lines.push_back(report_line(rep));
    if (!rep.ok) {
      result.failure =
          "step " + std::to_string(i + 1) + ": " + rep.detail;
      return result;
    }
    cur = replayed.after;
  }
  if (!equal(cur, doc.trace.final_term)) {
    result.failure = "final term does not match the replayed result";
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace diagre
