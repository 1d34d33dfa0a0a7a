#include "diagre/oracle.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "diagre/measures.hpp"
#include "diagre/normal_form.hpp"
#include "diagre/permutation.hpp"
#include "diagre/textio.hpp"

namespace diagre {

std::vector<TermPtr> enumerate_terms(const OracleOptions& opts) {
  const int W = opts.max_wires;
  // by_atoms[a] = all distinct terms with exactly a atoms
  std::vector<std::vector<TermPtr>> by_atoms(
      static_cast<std::size_t>(opts.max_atoms) + 1);
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> seen;

  auto emit = [&](int atoms, const TermPtr& t) {
    if (t->dom() > W || t->cod() > W) return;
    if (seen.insert(t).second)
      by_atoms[static_cast<std::size_t>(atoms)].push_back(t);
  };

  for (int n = 0; n <= W; ++n) emit(1, id_term(n));
  if (opts.mode == Mode::Perm) {
    for (int n = 0; n <= W; ++n)
      for (int m = 0; n + m <= W; ++m) emit(1, swap_term(n, m));
  } else {
    for (const auto& [name, e] : opts.sig.entries())
      if (e.dom <= W && e.cod <= W) emit(1, gen_term(name, e.dom, e.cod));
  }

  for (int a = 2; a <= opts.max_atoms; ++a) {
    for (int a1 = 1; a1 < a; ++a1) {
      int a2 = a - a1;
      for (const TermPtr& u : by_atoms[static_cast<std::size_t>(a1)]) {
        for (const TermPtr& v : by_atoms[static_cast<std::size_t>(a2)]) {
          if (u->cod() == v->dom()) emit(a, seq(u, v));
          if (u->dom() + v->dom() <= W && u->cod() + v->cod() <= W)
            emit(a, par(u, v));
        }
      }
    }
  }

  std::vector<TermPtr> out;
  for (auto& bucket : by_atoms)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

namespace {

struct GraphCheck {
  long long nodes = 0;
  long long edges = 0;
  std::optional<std::string> failure;
};

// Full rewrite-graph search from `start`, asserting per-edge soundness
// and a unique irreducible form equal to `expected`.
GraphCheck check_graph(const TermPtr& start, Mode mode,
                       const TermPtr& expected, long long node_budget) {
  GraphCheck result;
  auto fail = [&](const std::string& why) { result.failure = why; };

  std::optional<Permutation> start_perm;
  TermPtr start_nf;
  if (mode == Mode::Perm)
    start_perm = interpret(start);
  else
    start_nf = nf(start);

  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> visited;
  std::deque<TermPtr> queue;
  std::vector<TermPtr> irreducible;
  visited.insert(start);
  queue.push_back(start);

  while (!queue.empty()) {
    TermPtr u = queue.front();
    queue.pop_front();
    ++result.nodes;
    if (result.nodes > node_budget) {
      fail("rewrite graph exceeded the node budget");
      return result;
    }

    // Per-node semantic invariants (every node is reachable by steps).
    if (mode == Mode::Perm) {
      if (!(interpret(u) == *start_perm)) {
        fail("interpretation not preserved while rewriting " +
             print_term(start));
        return result;
      }
    } else {
      if (!equal(nf(u), start_nf)) {
        fail("normal-form map not preserved while rewriting " +
             print_term(start));
        return result;
      }
    }

    auto redexes = applicable(u, mode);
    if (redexes.empty()) {
      irreducible.push_back(u);
      continue;
    }
    for (const auto& [pos, rule] : redexes) {
      RewriteStep step = apply_step(u, pos, rule, mode);
      ++result.edges;
      if (step.after->dom() != u->dom() || step.after->cod() != u->cod()) {
        fail(std::string("typing broken by ") + rule_name(rule) + " on " +
             print_term(u));
        return result;
      }
      DecreaseReport rep = verify_decrease(step, mode);
      if (!rep.ok) {
        fail(std::string(rule_name(rule)) + " on " + print_term(u) + ": " +
             rep.detail);
        return result;
      }
      if (visited.insert(step.after).second) queue.push_back(step.after);
    }
  }

  if (irreducible.size() != 1) {
    fail("expected exactly one irreducible form for " + print_term(start) +
         ", found " + std::to_string(irreducible.size()));
    return result;
  }
  if (!equal(irreducible.front(), expected)) {
    fail("irreducible form of " + print_term(start) +
         " differs from the direct oracle: " +
         print_term(irreducible.front()) + " vs " + print_term(expected));
    return result;
  }
  return result;
}

std::optional<std::string> check_perm_size(int n, long long& perms_checked) {
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> images;
  long long count = 0;
  do {
    Permutation p = Permutation::from_images(base);
    TermPtr image = cf(p);
    ++count;
    ++perms_checked;
    if (!is_canonical_form(image))
      return "cf(" + print_permutation(p) + ") is not canonical";
    if (!(interpret(image) == p))
      return "cf(" + print_permutation(p) + ") does not interpret back";
    if (!images.insert(image).second)
      return "cf is not injective at " + print_permutation(p);
  } while (std::next_permutation(base.begin(), base.end()));
  long long expected = 1;
  for (int i = 2; i <= n; ++i) expected *= i;
  if (count != expected)
    return "enumerated " + std::to_string(count) + " permutations of size " +
           std::to_string(n);
  return std::nullopt;
}

}  // namespace

OracleReport run_oracle(const OracleOptions& opts, std::ostream* log) {
  OracleReport report;

  std::vector<TermPtr> raw = enumerate_terms(opts);
  report.terms_enumerated = static_cast<long long>(raw.size());

  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> starts;
  for (const TermPtr& t : raw) starts.insert(preprocess(t));
  report.start_terms = static_cast<long long>(starts.size());

  long long done = 0;
  for (const TermPtr& p : starts) {
    TermPtr expected =
        opts.mode == Mode::Perm ? cf(interpret(p)) : nf(p);
    GraphCheck g = check_graph(p, opts.mode, expected, opts.max_graph_nodes);
    report.graph_nodes += g.nodes;
    report.edges_checked += g.edges;
    if (g.failure) {
      ++report.failures;
      if (report.first_failure.empty()) report.first_failure = *g.failure;
    }
    ++done;
    if (log && done % 2000 == 0)
      *log << "checked " << done << "/" << report.start_terms << " terms\n";
  }

  if (opts.perm_size) {
    auto err = check_perm_size(*opts.perm_size, report.perms_checked);
    if (err) {
      ++report.failures;
      if (report.first_failure.empty()) report.first_failure = *err;
    }
  }
  return report;
}

std::string format_report(const OracleReport& report,
                          const OracleOptions& opts) {
  std::ostringstream out;
  out << "mode " << mode_name(opts.mode) << ", max-atoms " << opts.max_atoms
      << ", max-wires " << opts.max_wires << "\n";
  out << "enumerated " << report.terms_enumerated << " terms, "
      << report.start_terms << " distinct after preprocessing\n";
  out << "searched " << report.graph_nodes << " graph nodes, checked "
      << report.edges_checked << " edges\n";
  if (opts.perm_size)
    out << "checked " << report.perms_checked << " permutations of size "
        << *opts.perm_size << " for canonical-map bijectivity\n";
  out << report.failures << " failures";
  if (report.failures > 0) out << "\nfirst failure: " << report.first_failure;
  return out.str();
}

}  // namespace diagre
