#include "mg/processor.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mg {

StateDescription merge_star(const StateDescription& w) {
  if (w.size() < 2) throw UnderflowError();
  StateDescription out(w.begin(), w.end() - 2);
  out.push_back(merge(w[w.size() - 2], w[w.size() - 1]));
  return out;
}

StateDescription move_star(const StateDescription& w) {
  if (w.empty()) throw UnderflowError();
  StateDescription out(w.begin(), w.end() - 1);
  out.push_back(mg::move(w.back()));
  return out;
}

StateDescription permute(const StateDescription& w, const std::vector<int>& pi) {
  const std::size_t m = w.size();
  if (pi.size() != m) throw NotAPermutationError();
  std::vector<bool> seen(m, false);
  StateDescription out;
  out.reserve(m);
  for (int p : pi) {
    if (p < 1 || static_cast<std::size_t>(p) > m || seen[p - 1]) throw NotAPermutationError();
    seen[p - 1] = true;
    out.push_back(w[p - 1]);
  }
  return out;
}

std::optional<StepChoice> find_step(const StateDescription& w) {
  const int m = static_cast<int>(w.size());
  for (int i = m; i >= 1; --i) {
    for (int j = 1; j <= m; ++j) {
      if (j == i) continue;
      if (in_dom_merge(w[i - 1], w[j - 1]))
        return StepChoice{DerivationStep::Op::Merge, i, j};
      if (in_dom_merge(w[j - 1], w[i - 1]))
        return StepChoice{DerivationStep::Op::Merge, j, i};
    }
  }
  for (int i = m; i >= 1; --i) {
    if (in_dom_move(w[i - 1])) return StepChoice{DerivationStep::Op::Move, i, 0};
  }
  return std::nullopt;
}

std::vector<int> step_permutation(const StepChoice& choice, std::size_t m) {
  std::vector<int> pi;
  pi.reserve(m);
  for (int p = 1; p <= static_cast<int>(m); ++p) {
    if (p == choice.i || p == choice.j) continue;
    pi.push_back(p);
  }
  if (choice.op == DerivationStep::Op::Merge) {
    pi.push_back(choice.i);
    pi.push_back(choice.j);
  } else {
    pi.push_back(choice.i);
  }
  return pi;
}

DerivationTrace derive(const Lexicon& lex) {
  DerivationTrace trace;
  StateDescription w;
  for (const LexEntry& e : lex.entries()) w.push_back(e.as_tree());
  trace.states.push_back(w);

  while (true) {
    std::optional<StepChoice> choice = find_step(w);
    if (!choice) break;

    DerivationStep step;
    step.op = choice->op;
    step.pi = step_permutation(*choice, w.size());
    step.trigger = feat(w[choice->i - 1]);

    StateDescription arranged = permute(w, step.pi);
    if (choice->op == DerivationStep::Op::Merge) {
      step.i = choice->i;
      step.j = choice->j;
      w = merge_star(arranged);
    } else {
      step.i = choice->i;
      w = move_star(arranged);
    }
    trace.steps.push_back(std::move(step));
    trace.states.push_back(w);
  }

  trace.status = DerivationTrace::Status::Stuck;
  if (w.size() == 1) {
    const FeatureString lab = std::get<FeatureString>(label(head(w[0]), w[0]));
    if (!lab.empty() && first(lab) == lex.complementizer())
      trace.status = DerivationTrace::Status::Success;
  }
  return trace;
}

namespace {

std::string render_state(const StateDescription& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += " | ";
    out += render(w[k]);
  }
  return out;
}

std::string render_pi(const std::vector<int>& pi) {
  std::string out = "[";
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(pi[k]);
  }
  return out + "]";
}

std::string render_step(std::size_t k, const DerivationStep& s) {
  std::ostringstream out;
  out << k << ": ";
  if (s.op == DerivationStep::Op::Merge)
    out << "merge(" << s.i << "," << s.j << ") trigger=" << to_string(s.trigger);
  else
    out << "move(" << s.i << ") trigger=" << to_string(s.trigger);
  out << " pi=" << render_pi(s.pi);
  return out.str();
}

}  // namespace

std::string render(const DerivationTrace& trace) {
  std::ostringstream out;
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    out << "state " << (k + 1) << ": " << render_state(trace.states[k]) << "\n";
    if (k < trace.steps.size()) out << render_step(k + 1, trace.steps[k]) << "\n";
  }
  out << "status: "
      << (trace.status == DerivationTrace::Status::Success ? "success" : "stuck") << "\n";
  return out.str();
}

std::string render_json(const DerivationTrace& trace) {
  nlohmann::json j;
  j["status"] = trace.status == DerivationTrace::Status::Success ? "success" : "stuck";
  j["states"] = nlohmann::json::array();
  for (const StateDescription& w : trace.states) {
    nlohmann::json st = nlohmann::json::array();
    for (const TreePtr& t : w) st.push_back(render(t));
    j["states"].push_back(st);
  }
  j["steps"] = nlohmann::json::array();
  for (const DerivationStep& s : trace.steps) {
    nlohmann::json js;
    js["op"] = s.op == DerivationStep::Op::Merge ? "merge" : "move";
    js["i"] = s.i;
    if (s.op == DerivationStep::Op::Merge) js["j"] = s.j;
    js["trigger"] = to_string(s.trigger);
    js["pi"] = s.pi;
    j["steps"].push_back(js);
  }
  return j.dump(2);
}

}  // namespace mg
