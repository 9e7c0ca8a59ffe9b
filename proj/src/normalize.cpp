#include "hyperop/normalize.hpp"

#include <algorithm>

namespace hyperop {

namespace {

struct Rule {
  std::vector<Atom> lhs;
  std::vector<Atom> rhs;
};

const std::vector<Rule>& rules() {
  using A = Atom;
  static const std::vector<Rule> r = {
      {{A::gamma, A::gamma}, {}},
      {{A::Delta, A::delta}, {A::delta}},
      {{A::delta, A::Delta}, {A::Delta}},
      {{A::Delta, A::Delta}, {A::Delta}},
      {{A::delta, A::delta}, {A::delta}},
      {{A::Delta, A::gamma, A::Delta, A::gamma, A::Delta, A::gamma, A::Delta, A::gamma},
       {A::Delta, A::gamma, A::Delta, A::gamma}},
      {{A::delta, A::gamma, A::delta, A::gamma, A::delta, A::gamma, A::delta, A::gamma},
       {A::delta, A::gamma, A::delta, A::gamma}},
  };
  return r;
}

bool rewriteOnce(std::vector<Atom>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (const auto& rule : rules()) {
      if (i + rule.lhs.size() > atoms.size()) continue;
      if (!std::equal(rule.lhs.begin(), rule.lhs.end(), atoms.begin() + static_cast<long>(i)))
        continue;
      atoms.erase(atoms.begin() + static_cast<long>(i),
                  atoms.begin() + static_cast<long>(i + rule.lhs.size()));
      atoms.insert(atoms.begin() + static_cast<long>(i), rule.rhs.begin(), rule.rhs.end());
      return true;
    }
  }
  return false;
}

OperatorWord rebuild(const OperatorWord::Node& n) {
  using Kind = OperatorWord::Node::Kind;
  if (n.kind == Kind::Combine) {
    OperatorWord l = rebuild(*n.lhs);
    OperatorWord r = rebuild(*n.rhs);
    return n.combinator == Combinator::Join ? OperatorWord::join(l, r) : OperatorWord::meet(l, r);
  }
  std::vector<Atom> chain;
  const OperatorWord::Node* cur = &n;
  while (cur->kind == Kind::Apply) {
    chain.push_back(cur->atom);
    cur = cur->lhs.get();
  }
  chain = normalizeChain(std::move(chain));
  OperatorWord tail = cur->kind == Kind::Slot ? OperatorWord::identity() : rebuild(*cur);
  if (chain.empty()) return tail;
  return OperatorWord::compose(OperatorWord::chain(chain), tail);
}

}  // namespace

std::vector<Atom> normalizeChain(std::vector<Atom> atoms) {
  while (rewriteOnce(atoms)) {
  }
  return atoms;
}

OperatorWord normalizeWord(const OperatorWord& w) { return rebuild(w.root()); }

}  // namespace hyperop
