#include "ccsp/lts.hpp"

#include <deque>
#include <unordered_map>

namespace ccsp {

namespace {

struct AnyTermHash {
  std::size_t operator()(const AnyTerm& t) const noexcept {
    return std::visit([](const auto& x) { return x.hash(); }, t) ^ t.index();
  }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Lts build_lts(const AnyTerm& term, std::size_t state_cap) {
  Lts lts;
  std::unordered_map<AnyTerm, std::size_t, AnyTermHash> ids;
  std::deque<std::size_t> queue;

  auto intern = [&](AnyTerm t) {
    auto [it, inserted] = ids.try_emplace(t, lts.nodes.size());
    if (inserted) {
      if (lts.nodes.size() >= state_cap) throw StateCapExceeded(state_cap);
      lts.nodes.push_back(std::move(t));
      queue.push_back(it->second);
    }
    return it->second;
  };

  lts.root = intern(term);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    AnyTerm node = lts.nodes[id];
    if (const auto* p = std::get_if<StdTerm>(&node)) {
      if (p->is_null()) continue;
      for (auto& s : step_standard(*p)) {
        std::size_t to = intern(std::move(s.successor));
        lts.edges.push_back({id, std::move(s.label), to});
      }
    } else {
      for (auto& s : step_compensable(std::get<CompTerm>(node))) {
        std::size_t to = std::visit([&](auto& t) { return intern(std::move(t)); }, s.successor);
        lts.edges.push_back({id, std::move(s.label), to});
      }
    }
  }
  return lts;
}

std::string to_dot(const Lts& lts) {
  std::string out = "digraph lts {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lts.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + escape(pretty_print(lts.nodes[i])) + "\"";
    if (i == lts.root) out += ", penwidth=2";
    out += "];\n";
  }
  for (const auto& e : lts.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + escape(e.label.text()) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ccsp
