#include "hyperop/expression.hpp"

#include <cctype>
#include <charconv>

#include "hyperop/errors.hpp"

namespace hyperop {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OperatorWord parse() {
    OperatorWord w = sum();
    skipSpace();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return w;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skipSpace();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  OperatorWord sum() {
    OperatorWord lhs = comp();
    while (true) {
      if (accept("+")) {
        lhs = OperatorWord::join(lhs, comp());
      } else if (accept("/\\")) {
        lhs = OperatorWord::meet(lhs, comp());
      } else {
        return lhs;
      }
    }
  }

  OperatorWord comp() {
    OperatorWord lhs = power();
    while (accept(".")) lhs = OperatorWord::compose(lhs, power());
    return lhs;
  }

  OperatorWord power() {
    const std::size_t start = (skipSpace(), pos_);
    OperatorWord base = primary();
    while (accept("^")) {
      skipSpace();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative power", at);
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_) throw ParseError("expected an integer power", at);
      int k = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, k);
      if (ec != std::errc() || ptr != text_.data() + end) throw ParseError("power out of range", at);
      if (k == 0) throw ParseError("zero power", at);
      if (base.arity() != 1) throw ParseError("power of a word with more than one slot", start);
      pos_ = end;
      base = OperatorWord::power(base, k);
    }
    return base;
  }

  OperatorWord primary() {
    skipSpace();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", at);
    if (text_[pos_] == '(') {
      ++pos_;
      OperatorWord inner = sum();
      if (!accept(")")) throw ParseError("unbalanced '('", at);
      return inner;
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view name = text_.substr(pos_, end - pos_);
    if (name.empty()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", at);
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", at);
    }
    pos_ = end;
    if (name == "Delta") return OperatorWord::atom(Atom::Delta);
    if (name == "delta") return OperatorWord::atom(Atom::delta);
    if (name == "gamma") return OperatorWord::atom(Atom::gamma);
    if (name == "Ext") return OperatorWord::ext();
    if (name == "Int") return OperatorWord::interior();
    if (name == "Nbd") return OperatorWord::atom(Atom::Nbd);
    if (name == "NbdInv") return OperatorWord::atom(Atom::NbdInv);
    if (name == "alpha") return OperatorWord::alpha();
    if (name == "beta") return OperatorWord::beta();
    if (name == "id") return OperatorWord::identity();
    if (name == "Zero") return OperatorWord::atom(Atom::Zero);
    throw ParseError("unknown token '" + std::string(name) + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpression parseExpression(std::string_view text) {
  return {std::string(text), Parser(text).parse()};
}

}  // namespace hyperop
