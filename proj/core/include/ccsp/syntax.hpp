#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccsp/trace.hpp"

namespace ccsp {

enum class StdKind : std::uint8_t { Atom, Skip, Throw, Yield, Seq, Choice, Par, Interrupt, Block, Null };
enum class CompKind : std::uint8_t { Pair, Seq, Choice, Par, Aux };

std::string_view kind_name(StdKind k) noexcept;
std::string_view kind_name(CompKind k) noexcept;

namespace detail {
struct StdNode;
struct CompNode;
struct TermAccess;
}  // namespace detail

class CompTerm;

/// Immutable standard process term with structural equality. Copies share
/// the underlying node.
class StdTerm {
 public:
  static StdTerm atom(Event e);
  static StdTerm atom(std::string name) { return atom(Event(std::move(name))); }
  static StdTerm skip();
  static StdTerm throw_();
  static StdTerm yield();
  /// Terminated process. Only reachable as the target of a terminal step.
  static StdTerm null();
  static StdTerm seq(StdTerm p, StdTerm q);
  static StdTerm choice(StdTerm p, StdTerm q);
  static StdTerm par(StdTerm p, StdTerm q);
  static StdTerm interrupt(StdTerm p, StdTerm q);
  static StdTerm block(CompTerm body);

  StdKind kind() const noexcept;
  bool is_null() const noexcept { return kind() == StdKind::Null; }
  bool is_leaf() const noexcept;
  bool is_binary() const noexcept;

  const Event& event() const;
  const StdTerm& lhs() const;
  const StdTerm& rhs() const;
  const CompTerm& body() const;

  std::size_t hash() const noexcept;
  /// Strictly decreases along every transition.
  std::size_t weight() const noexcept;

  friend bool operator==(const StdTerm& a, const StdTerm& b);
  friend std::strong_ordering operator<=>(const StdTerm& a, const StdTerm& b);

 private:
  friend struct detail::StdNode;
  friend struct detail::CompNode;
  friend struct detail::TermAccess;
  StdTerm() = default;
  explicit StdTerm(std::shared_ptr<const detail::StdNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::StdNode> node_;
};

/// Immutable compensable process term.
class CompTerm {
 public:
  static CompTerm pair(StdTerm forward, StdTerm compensation);
  static CompTerm seq(CompTerm pp, CompTerm qq);
  static CompTerm choice(CompTerm pp, CompTerm qq);
  static CompTerm par(CompTerm pp, CompTerm qq);
  /// Runtime-only state: `running` still executes while `stored` is the
  /// compensation already accumulated by a finished predecessor.
  static CompTerm aux(CompTerm running, StdTerm stored);

  CompKind kind() const noexcept;
  bool is_binary() const noexcept;

  const StdTerm& forward() const;       // Pair
  const StdTerm& compensation() const;  // Pair
  const CompTerm& lhs() const;          // Seq, Choice, Par
  const CompTerm& rhs() const;          // Seq, Choice, Par
  const CompTerm& running() const;      // Aux
  const StdTerm& stored() const;        // Aux

  std::size_t hash() const noexcept;
  std::size_t weight() const noexcept;

  friend bool operator==(const CompTerm& a, const CompTerm& b);
  friend std::strong_ordering operator<=>(const CompTerm& a, const CompTerm& b);

 private:
  friend struct detail::StdNode;
  friend struct detail::CompNode;
  friend struct detail::TermAccess;
  CompTerm() = default;
  explicit CompTerm(std::shared_ptr<const detail::CompNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::CompNode> node_;
};

namespace detail {

struct StdNode {
  StdKind kind;
  std::size_t hash = 0;
  std::size_t weight = 0;
  std::optional<Event> event;
  StdTerm lhs;
  StdTerm rhs;
  CompTerm body;
};

struct CompNode {
  CompKind kind;
  std::size_t hash = 0;
  std::size_t weight = 0;
  CompTerm lhs;  // Seq/Choice/Par left, Aux running
  CompTerm rhs;
  StdTerm first;   // Pair forward, Aux stored
  StdTerm second;  // Pair compensation
};

}  // namespace detail

inline StdKind StdTerm::kind() const noexcept { return node_->kind; }
inline std::size_t StdTerm::hash() const noexcept { return node_->hash; }
inline std::size_t StdTerm::weight() const noexcept { return node_->weight; }
inline CompKind CompTerm::kind() const noexcept { return node_->kind; }
inline std::size_t CompTerm::hash() const noexcept { return node_->hash; }
inline std::size_t CompTerm::weight() const noexcept { return node_->weight; }

using AnyTerm = std::variant<StdTerm, CompTerm>;

enum class TermKind { Standard, Compensable };

/// Operator nodes, not counting compensation pairs: a pair is the atom of the
/// compensable grammar and contributes only its operands' counts.
std::size_t op_count(const StdTerm& t);
std::size_t op_count(const CompTerm& t);
std::size_t op_count(const AnyTerm& t);

/// Tree depth with leaves at depth 1. Pairs are transparent, like op_count.
std::size_t depth(const StdTerm& t);
std::size_t depth(const CompTerm& t);
std::size_t depth(const AnyTerm& t);

/// Sorted set of events occurring in atoms.
Alphabet infer_alphabet(const AnyTerm& t);

struct Violation {
  enum class Kind { NullNode, AuxNode, UnknownEvent };
  Kind kind;
  std::string path;  // e.g. "root", "root.lhs.body"
  std::string detail;

  std::string message() const;
};

/// Problems that exclude a term from user input. Empty means valid.
std::vector<Violation> validate_user_term(const AnyTerm& t);
std::vector<Violation> validate_user_term(const AnyTerm& t, const Alphabet& alphabet);

/// SKIPP, THROWW and YIELDD. Throws std::invalid_argument otherwise.
CompTerm desugar_alias(std::string_view name);

/// Concrete syntax accepted by the parser. Null renders as `0` and the
/// runtime-only auxiliary state as `<QQ , P>`; neither parses back.
std::string pretty_print(const StdTerm& t);
std::string pretty_print(const CompTerm& t);
std::string pretty_print(const AnyTerm& t);

}  // namespace ccsp

template <>
struct std::hash<ccsp::StdTerm> {
  std::size_t operator()(const ccsp::StdTerm& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<ccsp::CompTerm> {
  std::size_t operator()(const ccsp::CompTerm& t) const noexcept { return t.hash(); }
};
