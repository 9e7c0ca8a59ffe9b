#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperop/hypergraph.hpp"

namespace hyperop {

/// Unary atoms. Zero is the constant map to ∅. Nbd/NbdInv are the
/// neighbourhood operators; they are not generated by Δ, δ, γ.
enum class Atom { Delta, delta, gamma, Zero, Nbd, NbdInv };

enum class Combinator { Join, Meet };  // + (union), ∧ (intersection)

const char* atomName(Atom a);

/// An operator word: a tree of unary atoms and binary combinators over
/// argument slots. Slots are filled left to right; arity = number of slots.
///
/// Words are immutable values; subtrees are shared.
class OperatorWord {
 public:
  /// The identity word (a bare slot), arity 1.
  OperatorWord();

  static OperatorWord identity() { return {}; }
  static OperatorWord atom(Atom a);
  /// Atoms applied right to left: chain({Delta, gamma}) is Δγ = Δ∘γ.
  static OperatorWord chain(std::span<const Atom> atoms);
  static OperatorWord chain(std::initializer_list<Atom> atoms) {
    return chain(std::span<const Atom>(atoms.begin(), atoms.size()));
  }

  static OperatorWord ext();       // Δγδγ
  static OperatorWord interior();  // δγΔγ
  static OperatorWord alpha();     // Δγ
  static OperatorWord beta();      // δγ

  /// outer ∘ inner. A copy of inner is substituted into every slot of outer.
  static OperatorWord compose(const OperatorWord& outer, const OperatorWord& inner);
  /// k-fold self-composition, k >= 1; requires arity 1.
  static OperatorWord power(const OperatorWord& w, int k);
  static OperatorWord join(const OperatorWord& a, const OperatorWord& b);
  static OperatorWord meet(const OperatorWord& a, const OperatorWord& b);

  std::size_t arity() const;
  /// When the word is a pure unary chain, its atoms outermost first.
  std::optional<std::vector<Atom>> atoms() const;
  bool isChain() const { return atoms().has_value(); }

  /// Textual form in the expression grammar, e.g. "Delta.gamma" or "(Delta + delta)".
  std::string toString() const;

  struct Node;
  const Node& root() const { return *root_; }

  bool operator==(const OperatorWord& other) const;

 private:
  explicit OperatorWord(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

struct OperatorWord::Node {
  enum class Kind { Slot, Apply, Combine };
  Kind kind = Kind::Slot;
  Atom atom = Atom::Delta;
  Combinator combinator = Combinator::Join;
  std::shared_ptr<const Node> lhs;  // Apply: the operand; Combine: left
  std::shared_ptr<const Node> rhs;  // Combine: right
};

/// Applies one atom.
Hypergraph applyAtom(Atom a, const Hypergraph& h);

/// Evaluates w on args (|args| must equal arity, same ambient). No rewriting.
Hypergraph evalWord(const OperatorWord& w, std::span<const Hypergraph> args);
inline Hypergraph evalWord(const OperatorWord& w, const Hypergraph& h) {
  return evalWord(w, std::span<const Hypergraph>(&h, 1));
}

}  // namespace hyperop
