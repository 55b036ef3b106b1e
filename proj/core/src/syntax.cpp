#include "ccsp/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsp {

namespace detail {

struct TermAccess {
  static StdTerm wrap(std::shared_ptr<detail::StdNode> n) {
    return StdTerm(std::shared_ptr<const detail::StdNode>(std::move(n)));
  }
  static CompTerm wrap(std::shared_ptr<detail::CompNode> n) {
    return CompTerm(std::shared_ptr<const detail::CompNode>(std::move(n)));
  }
  static const void* identity(const StdTerm& t) { return t.node_.get(); }
  static const void* identity(const CompTerm& t) { return t.node_.get(); }
  static const StdNode& node(const StdTerm& t) { return *t.node_; }
  static const CompNode& node(const CompTerm& t) { return *t.node_; }
};

}  // namespace detail

namespace {

using detail::TermAccess;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<detail::StdNode> std_node(StdKind kind) {
  auto n = std::make_shared<detail::StdNode>();
  n->kind = kind;
  n->hash = mix(0x5eed, static_cast<std::size_t>(kind));
  return n;
}

std::shared_ptr<detail::CompNode> comp_node(CompKind kind) {
  auto n = std::make_shared<detail::CompNode>();
  n->kind = kind;
  n->hash = mix(0xc0de, static_cast<std::size_t>(kind));
  return n;
}

StdTerm std_leaf(StdKind kind, std::size_t weight) {
  auto n = std_node(kind);
  n->weight = weight;
  return TermAccess::wrap(std::move(n));
}

StdTerm std_binary(StdKind kind, StdTerm p, StdTerm q) {
  auto n = std_node(kind);
  n->hash = mix(mix(n->hash, p.hash()), q.hash());
  n->weight = 1 + p.weight() + q.weight();
  n->lhs = std::move(p);
  n->rhs = std::move(q);
  return TermAccess::wrap(std::move(n));
}

CompTerm comp_binary(CompKind kind, CompTerm pp, CompTerm qq) {
  auto n = comp_node(kind);
  n->hash = mix(mix(n->hash, pp.hash()), qq.hash());
  n->weight = 1 + pp.weight() + qq.weight();
  n->lhs = std::move(pp);
  n->rhs = std::move(qq);
  return TermAccess::wrap(std::move(n));
}

[[noreturn]] void wrong_kind(std::string_view accessor, std::string_view kind) {
  throw std::logic_error(std::string(accessor) + "() called on " + std::string(kind) + " term");
}

}  // namespace

// --- construction ------------------------------------------------------------

StdTerm StdTerm::atom(Event e) {
  auto n = std_node(StdKind::Atom);
  n->hash = mix(n->hash, std::hash<std::string>{}(e.name()));
  n->weight = 2;
  n->event = std::move(e);
  return TermAccess::wrap(std::move(n));
}

StdTerm StdTerm::skip() {
  static const StdTerm leaf = std_leaf(StdKind::Skip, 1);
  return leaf;
}

StdTerm StdTerm::throw_() {
  static const StdTerm leaf = std_leaf(StdKind::Throw, 1);
  return leaf;
}

StdTerm StdTerm::yield() {
  static const StdTerm leaf = std_leaf(StdKind::Yield, 1);
  return leaf;
}

StdTerm StdTerm::null() {
  static const StdTerm leaf = std_leaf(StdKind::Null, 0);
  return leaf;
}

StdTerm StdTerm::seq(StdTerm p, StdTerm q) { return std_binary(StdKind::Seq, std::move(p), std::move(q)); }
StdTerm StdTerm::choice(StdTerm p, StdTerm q) { return std_binary(StdKind::Choice, std::move(p), std::move(q)); }
StdTerm StdTerm::par(StdTerm p, StdTerm q) { return std_binary(StdKind::Par, std::move(p), std::move(q)); }
StdTerm StdTerm::interrupt(StdTerm p, StdTerm q) {
  return std_binary(StdKind::Interrupt, std::move(p), std::move(q));
}

StdTerm StdTerm::block(CompTerm body) {
  auto n = std_node(StdKind::Block);
  n->hash = mix(n->hash, body.hash());
  n->weight = 1 + body.weight();
  n->body = std::move(body);
  return TermAccess::wrap(std::move(n));
}

CompTerm CompTerm::pair(StdTerm forward, StdTerm compensation) {
  auto n = comp_node(CompKind::Pair);
  n->hash = mix(mix(n->hash, forward.hash()), compensation.hash());
  n->weight = 1 + forward.weight() + compensation.weight();
  n->first = std::move(forward);
  n->second = std::move(compensation);
  return TermAccess::wrap(std::move(n));
}

CompTerm CompTerm::seq(CompTerm pp, CompTerm qq) { return comp_binary(CompKind::Seq, std::move(pp), std::move(qq)); }
CompTerm CompTerm::choice(CompTerm pp, CompTerm qq) {
  return comp_binary(CompKind::Choice, std::move(pp), std::move(qq));
}
CompTerm CompTerm::par(CompTerm pp, CompTerm qq) { return comp_binary(CompKind::Par, std::move(pp), std::move(qq)); }

CompTerm CompTerm::aux(CompTerm running, StdTerm stored) {
  auto n = comp_node(CompKind::Aux);
  n->hash = mix(mix(n->hash, running.hash()), stored.hash());
  n->weight = 1 + running.weight() + stored.weight();
  n->lhs = std::move(running);
  n->first = std::move(stored);
  return TermAccess::wrap(std::move(n));
}

// --- access ------------------------------------------------------------------

bool StdTerm::is_leaf() const noexcept {
  switch (kind()) {
    case StdKind::Atom:
    case StdKind::Skip:
    case StdKind::Throw:
    case StdKind::Yield:
    case StdKind::Null:
      return true;
    default:
      return false;
  }
}

bool StdTerm::is_binary() const noexcept {
  switch (kind()) {
    case StdKind::Seq:
    case StdKind::Choice:
    case StdKind::Par:
    case StdKind::Interrupt:
      return true;
    default:
      return false;
  }
}

const Event& StdTerm::event() const {
  if (kind() != StdKind::Atom) wrong_kind("event", kind_name(kind()));
  return *node_->event;
}

const StdTerm& StdTerm::lhs() const {
  if (!is_binary()) wrong_kind("lhs", kind_name(kind()));
  return node_->lhs;
}

const StdTerm& StdTerm::rhs() const {
  if (!is_binary()) wrong_kind("rhs", kind_name(kind()));
  return node_->rhs;
}

const CompTerm& StdTerm::body() const {
  if (kind() != StdKind::Block) wrong_kind("body", kind_name(kind()));
  return node_->body;
}

bool CompTerm::is_binary() const noexcept {
  return kind() == CompKind::Seq || kind() == CompKind::Choice || kind() == CompKind::Par;
}

const StdTerm& CompTerm::forward() const {
  if (kind() != CompKind::Pair) wrong_kind("forward", kind_name(kind()));
  return node_->first;
}

const StdTerm& CompTerm::compensation() const {
  if (kind() != CompKind::Pair) wrong_kind("compensation", kind_name(kind()));
  return node_->second;
}

const CompTerm& CompTerm::lhs() const {
  if (!is_binary()) wrong_kind("lhs", kind_name(kind()));
  return node_->lhs;
}

const CompTerm& CompTerm::rhs() const {
  if (!is_binary()) wrong_kind("rhs", kind_name(kind()));
  return node_->rhs;
}

const CompTerm& CompTerm::running() const {
  if (kind() != CompKind::Aux) wrong_kind("running", kind_name(kind()));
  return node_->lhs;
}

const StdTerm& CompTerm::stored() const {
  if (kind() != CompKind::Aux) wrong_kind("stored", kind_name(kind()));
  return node_->first;
}

// --- equality and ordering -----------------------------------------------------

bool operator==(const StdTerm& a, const StdTerm& b) {
  if (TermAccess::identity(a) == TermAccess::identity(b)) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  const auto& x = TermAccess::node(a);
  const auto& y = TermAccess::node(b);
  switch (a.kind()) {
    case StdKind::Atom:
      return *x.event == *y.event;
    case StdKind::Block:
      return x.body == y.body;
    case StdKind::Seq:
    case StdKind::Choice:
    case StdKind::Par:
    case StdKind::Interrupt:
      return x.lhs == y.lhs && x.rhs == y.rhs;
    default:
      return true;
  }
}

std::strong_ordering operator<=>(const StdTerm& a, const StdTerm& b) {
  if (TermAccess::identity(a) == TermAccess::identity(b)) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& x = TermAccess::node(a);
  const auto& y = TermAccess::node(b);
  switch (a.kind()) {
    case StdKind::Atom:
      return *x.event <=> *y.event;
    case StdKind::Block:
      return x.body <=> y.body;
    case StdKind::Seq:
    case StdKind::Choice:
    case StdKind::Par:
    case StdKind::Interrupt:
      if (auto c = x.lhs <=> y.lhs; c != 0) return c;
      return x.rhs <=> y.rhs;
    default:
      return std::strong_ordering::equal;
  }
}

bool operator==(const CompTerm& a, const CompTerm& b) {
  if (TermAccess::identity(a) == TermAccess::identity(b)) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  const auto& x = TermAccess::node(a);
  const auto& y = TermAccess::node(b);
  switch (a.kind()) {
    case CompKind::Pair:
      return x.first == y.first && x.second == y.second;
    case CompKind::Aux:
      return x.lhs == y.lhs && x.first == y.first;
    default:
      return x.lhs == y.lhs && x.rhs == y.rhs;
  }
}

std::strong_ordering operator<=>(const CompTerm& a, const CompTerm& b) {
  if (TermAccess::identity(a) == TermAccess::identity(b)) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& x = TermAccess::node(a);
  const auto& y = TermAccess::node(b);
  switch (a.kind()) {
    case CompKind::Pair:
      if (auto c = x.first <=> y.first; c != 0) return c;
      return x.second <=> y.second;
    case CompKind::Aux:
      if (auto c = x.lhs <=> y.lhs; c != 0) return c;
      return x.first <=> y.first;
    default:
      if (auto c = x.lhs <=> y.lhs; c != 0) return c;
      return x.rhs <=> y.rhs;
  }
}

std::string_view kind_name(StdKind k) noexcept {
  switch (k) {
    case StdKind::Atom: return "Atom";
    case StdKind::Skip: return "Skip";
    case StdKind::Throw: return "Throw";
    case StdKind::Yield: return "Yield";
    case StdKind::Seq: return "Seq";
    case StdKind::Choice: return "Choice";
    case StdKind::Par: return "Par";
    case StdKind::Interrupt: return "Interrupt";
    case StdKind::Block: return "Block";
    case StdKind::Null: return "Null";
  }
  return "?";
}

std::string_view kind_name(CompKind k) noexcept {
  switch (k) {
    case CompKind::Pair: return "Pair";
    case CompKind::Seq: return "CSeq";
    case CompKind::Choice: return "CChoice";
    case CompKind::Par: return "CPar";
    case CompKind::Aux: return "Aux";
  }
  return "?";
}

// --- measures ----------------------------------------------------------------

std::size_t op_count(const StdTerm& t) {
  if (t.is_leaf()) return 0;
  if (t.kind() == StdKind::Block) return 1 + op_count(t.body());
  return 1 + op_count(t.lhs()) + op_count(t.rhs());
}

std::size_t op_count(const CompTerm& t) {
  switch (t.kind()) {
    case CompKind::Pair:
      return op_count(t.forward()) + op_count(t.compensation());
    case CompKind::Aux:
      return 1 + op_count(t.running()) + op_count(t.stored());
    default:
      return 1 + op_count(t.lhs()) + op_count(t.rhs());
  }
}

std::size_t op_count(const AnyTerm& t) {
  return std::visit([](const auto& x) { return op_count(x); }, t);
}

std::size_t depth(const StdTerm& t) {
  if (t.is_leaf()) return 1;
  if (t.kind() == StdKind::Block) return 1 + depth(t.body());
  return 1 + std::max(depth(t.lhs()), depth(t.rhs()));
}

std::size_t depth(const CompTerm& t) {
  switch (t.kind()) {
    case CompKind::Pair:
      return std::max(depth(t.forward()), depth(t.compensation()));
    case CompKind::Aux:
      return 1 + std::max(depth(t.running()), depth(t.stored()));
    default:
      return 1 + std::max(depth(t.lhs()), depth(t.rhs()));
  }
}

std::size_t depth(const AnyTerm& t) {
  return std::visit([](const auto& x) { return depth(x); }, t);
}

// --- validation ----------------------------------------------------------------

namespace {

struct Walker {
  const Alphabet* alphabet;
  std::vector<Violation>* out;
  Alphabet* collected;

  void visit(const StdTerm& t, const std::string& path) {
    switch (t.kind()) {
      case StdKind::Null:
        out->push_back({Violation::Kind::NullNode, path, "null process"});
        return;
      case StdKind::Atom:
        if (collected) collected->push_back(t.event());
        if (alphabet && !std::binary_search(alphabet->begin(), alphabet->end(), t.event())) {
          out->push_back({Violation::Kind::UnknownEvent, path, "event '" + t.event().name() + "'"});
        }
        return;
      case StdKind::Block:
        visit(t.body(), path + ".body");
        return;
      default:
        if (t.is_binary()) {
          visit(t.lhs(), path + ".lhs");
          visit(t.rhs(), path + ".rhs");
        }
        return;
    }
  }

  void visit(const CompTerm& t, const std::string& path) {
    switch (t.kind()) {
      case CompKind::Pair:
        visit(t.forward(), path + ".forward");
        visit(t.compensation(), path + ".compensation");
        return;
      case CompKind::Aux:
        out->push_back({Violation::Kind::AuxNode, path, "auxiliary construct"});
        visit(t.running(), path + ".running");
        visit(t.stored(), path + ".stored");
        return;
      default:
        visit(t.lhs(), path + ".lhs");
        visit(t.rhs(), path + ".rhs");
        return;
    }
  }
};

}  // namespace

std::string Violation::message() const {
  std::string what;
  switch (kind) {
    case Kind::NullNode: what = "Null"; break;
    case Kind::AuxNode: what = "Aux node"; break;
    case Kind::UnknownEvent: what = "event outside alphabet"; break;
  }
  return what + " at " + path + " (" + detail + ")";
}

std::vector<Violation> validate_user_term(const AnyTerm& t) {
  std::vector<Violation> out;
  Walker w{nullptr, &out, nullptr};
  std::visit([&](const auto& x) { w.visit(x, "root"); }, t);
  return out;
}

std::vector<Violation> validate_user_term(const AnyTerm& t, const Alphabet& alphabet) {
  Alphabet sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Violation> out;
  Walker w{&sorted, &out, nullptr};
  std::visit([&](const auto& x) { w.visit(x, "root"); }, t);
  return out;
}

Alphabet infer_alphabet(const AnyTerm& t) {
  std::vector<Violation> ignored;
  Alphabet out;
  Walker w{nullptr, &ignored, &out};
  std::visit([&](const auto& x) { w.visit(x, "root"); }, t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompTerm desugar_alias(std::string_view name) {
  if (name == "SKIPP") return CompTerm::pair(StdTerm::skip(), StdTerm::skip());
  if (name == "YIELDD") return CompTerm::pair(StdTerm::yield(), StdTerm::skip());
  if (name == "THROWW") return CompTerm::pair(StdTerm::throw_(), StdTerm::skip());
  throw std::invalid_argument("unknown compensable alias '" + std::string(name) + "'");
}

// --- printing ----------------------------------------------------------------
//
// A binary operand is parenthesised unless it is the left operand of the same
// (left-associative) operator. That is more than the precedence table
// requires but keeps mixed-operator terms readable.

namespace {

std::string_view symbol(StdKind k) {
  switch (k) {
    case StdKind::Seq: return " ; ";
    case StdKind::Choice: return " [] ";
    case StdKind::Par: return " || ";
    case StdKind::Interrupt: return " |> ";
    default: return " ? ";
  }
}

std::string_view symbol(CompKind k) {
  switch (k) {
    case CompKind::Seq: return " ; ";
    case CompKind::Choice: return " [] ";
    case CompKind::Par: return " || ";
    default: return " ? ";
  }
}

void print(const StdTerm& t, std::string& out);
void print(const CompTerm& t, std::string& out);

template <typename Term, typename Kind>
void print_operand(const Term& operand, Kind parent, bool left, std::string& out) {
  bool wrap = operand.is_binary() && !(left && operand.kind() == parent);
  if (wrap) out += '(';
  print(operand, out);
  if (wrap) out += ')';
}

void print(const StdTerm& t, std::string& out) {
  switch (t.kind()) {
    case StdKind::Atom: out += t.event().name(); return;
    case StdKind::Skip: out += "SKIP"; return;
    case StdKind::Throw: out += "THROW"; return;
    case StdKind::Yield: out += "YIELD"; return;
    case StdKind::Null: out += "0"; return;
    case StdKind::Block:
      out += "[ ";
      print(t.body(), out);
      out += " ]";
      return;
    default:
      print_operand(t.lhs(), t.kind(), true, out);
      out += symbol(t.kind());
      print_operand(t.rhs(), t.kind(), false, out);
      return;
  }
}

void print_pair_operand(const StdTerm& t, std::string& out) {
  if (t.is_binary()) out += '(';
  print(t, out);
  if (t.is_binary()) out += ')';
}

void print(const CompTerm& t, std::string& out) {
  switch (t.kind()) {
    case CompKind::Pair: {
      const auto& fwd = t.forward();
      const auto& comp = t.compensation();
      if (comp.kind() == StdKind::Skip) {
        if (fwd.kind() == StdKind::Skip) { out += "SKIPP"; return; }
        if (fwd.kind() == StdKind::Throw) { out += "THROWW"; return; }
        if (fwd.kind() == StdKind::Yield) { out += "YIELDD"; return; }
      }
      print_pair_operand(fwd, out);
      out += " % ";
      print_pair_operand(comp, out);
      return;
    }
    case CompKind::Aux:
      out += "<";
      print(t.running(), out);
      out += " , ";
      print(t.stored(), out);
      out += ">";
      return;
    default:
      print_operand(t.lhs(), t.kind(), true, out);
      out += symbol(t.kind());
      print_operand(t.rhs(), t.kind(), false, out);
      return;
  }
}

}  // namespace

std::string pretty_print(const StdTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string pretty_print(const CompTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string pretty_print(const AnyTerm& t) {
  return std::visit([](const auto& x) { return pretty_print(x); }, t);
}

}  // namespace ccsp
