#include "hyperop/word.hpp"

#include <functional>

#include "hyperop/errors.hpp"
#include "hyperop/metric.hpp"
#include "hyperop/operators.hpp"

namespace hyperop {

using Node = OperatorWord::Node;
using NodePtr = std::shared_ptr<const Node>;

namespace {

NodePtr slot() {
  static const NodePtr s = std::make_shared<const Node>();
  return s;
}

NodePtr applyNode(Atom a, NodePtr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Apply;
  n->atom = a;
  n->lhs = std::move(operand);
  return n;
}

NodePtr combineNode(Combinator c, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Combine;
  n->combinator = c;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

NodePtr substitute(const NodePtr& outer, const NodePtr& inner) {
  switch (outer->kind) {
    case Node::Kind::Slot:
      return inner;
    case Node::Kind::Apply:
      return applyNode(outer->atom, substitute(outer->lhs, inner));
    case Node::Kind::Combine:
      return combineNode(outer->combinator, substitute(outer->lhs, inner),
                         substitute(outer->rhs, inner));
  }
  return inner;
}

std::size_t countSlots(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Slot:
      return 1;
    case Node::Kind::Apply:
      return countSlots(*n.lhs);
    case Node::Kind::Combine:
      return countSlots(*n.lhs) + countSlots(*n.rhs);
  }
  return 0;
}

bool equalNodes(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Node::Kind::Slot:
      return true;
    case Node::Kind::Apply:
      return a.atom == b.atom && equalNodes(*a.lhs, *b.lhs);
    case Node::Kind::Combine:
      return a.combinator == b.combinator && equalNodes(*a.lhs, *b.lhs) &&
             equalNodes(*a.rhs, *b.rhs);
  }
  return false;
}

// Printing: Apply chains print as "A.B.C", a chain ending in a combination as
// "A.(x + y)". The identity prints as "id".
std::string print(const Node& n, bool top) {
  switch (n.kind) {
    case Node::Kind::Slot:
      return "id";
    case Node::Kind::Apply: {
      std::string s = atomName(n.atom);
      const Node* cur = n.lhs.get();
      while (cur->kind == Node::Kind::Apply) {
        s += '.';
        s += atomName(cur->atom);
        cur = cur->lhs.get();
      }
      if (cur->kind == Node::Kind::Combine) s += "." + print(*cur, false);
      return s;
    }
    case Node::Kind::Combine: {
      const char* op = n.combinator == Combinator::Join ? " + " : " /\\ ";
      std::string s = print(*n.lhs, false) + op + print(*n.rhs, false);
      return top ? s : "(" + s + ")";
    }
  }
  return {};
}

}  // namespace

const char* atomName(Atom a) {
  switch (a) {
    case Atom::Delta:
      return "Delta";
    case Atom::delta:
      return "delta";
    case Atom::gamma:
      return "gamma";
    case Atom::Zero:
      return "Zero";
    case Atom::Nbd:
      return "Nbd";
    case Atom::NbdInv:
      return "NbdInv";
  }
  return "?";
}

OperatorWord::OperatorWord() : root_(slot()) {}

OperatorWord OperatorWord::atom(Atom a) { return OperatorWord(applyNode(a, slot())); }

OperatorWord OperatorWord::chain(std::span<const Atom> atoms) {
  NodePtr n = slot();
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) n = applyNode(*it, n);
  return OperatorWord(n);
}

OperatorWord OperatorWord::ext() {
  return chain({Atom::Delta, Atom::gamma, Atom::delta, Atom::gamma});
}
OperatorWord OperatorWord::interior() {
  return chain({Atom::delta, Atom::gamma, Atom::Delta, Atom::gamma});
}
OperatorWord OperatorWord::alpha() { return chain({Atom::Delta, Atom::gamma}); }
OperatorWord OperatorWord::beta() { return chain({Atom::delta, Atom::gamma}); }

OperatorWord OperatorWord::compose(const OperatorWord& outer, const OperatorWord& inner) {
  return OperatorWord(substitute(outer.root_, inner.root_));
}

OperatorWord OperatorWord::power(const OperatorWord& w, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (w.arity() != 1) throw std::invalid_argument("power of a non-unary word");
  OperatorWord out = w;
  for (int i = 1; i < k; ++i) out = compose(out, w);
  return out;
}

OperatorWord OperatorWord::join(const OperatorWord& a, const OperatorWord& b) {
  return OperatorWord(combineNode(Combinator::Join, a.root_, b.root_));
}

OperatorWord OperatorWord::meet(const OperatorWord& a, const OperatorWord& b) {
  return OperatorWord(combineNode(Combinator::Meet, a.root_, b.root_));
}

std::size_t OperatorWord::arity() const { return countSlots(*root_); }

std::optional<std::vector<Atom>> OperatorWord::atoms() const {
  std::vector<Atom> out;
  const Node* cur = root_.get();
  while (cur->kind == Node::Kind::Apply) {
    out.push_back(cur->atom);
    cur = cur->lhs.get();
  }
  if (cur->kind != Node::Kind::Slot) return std::nullopt;
  return out;
}

std::string OperatorWord::toString() const { return print(*root_, true); }

bool OperatorWord::operator==(const OperatorWord& other) const {
  return equalNodes(*root_, *other.root_);
}

Hypergraph applyAtom(Atom a, const Hypergraph& h) {
  switch (a) {
    case Atom::Delta:
      return closureDelta(h);
    case Atom::delta:
      return interiorDelta(h);
    case Atom::gamma:
      return complementGamma(h);
    case Atom::Zero:
      return Hypergraph::empty(h.ambient());
    case Atom::Nbd:
      return nbd(h);
    case Atom::NbdInv:
      return nbdInv(h);
  }
  return h;
}

Hypergraph evalWord(const OperatorWord& w, std::span<const Hypergraph> args) {
  if (args.size() != w.arity()) throw ArityMismatch(w.arity(), args.size());
  for (const auto& a : args) requireSameAmbient(a, args.front());
  std::size_t next = 0;
  std::function<Hypergraph(const Node&)> eval = [&](const Node& n) -> Hypergraph {
    switch (n.kind) {
      case Node::Kind::Slot:
        return args[next++];
      case Node::Kind::Apply:
        return applyAtom(n.atom, eval(*n.lhs));
      case Node::Kind::Combine: {
        Hypergraph l = eval(*n.lhs);
        Hypergraph r = eval(*n.rhs);
        return n.combinator == Combinator::Join ? unionH(l, r) : intersectH(l, r);
      }
    }
    return args.front();
  };
  return eval(w.root());
}

}  // namespace hyperop
