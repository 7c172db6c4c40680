#ifndef SHIFTLAB_REGEX_HPP
#define SHIFTLAB_REGEX_HPP

#include <memory>
#include <vector>

#include "shiftlab/automaton.hpp"
#include "shiftlab/symbol.hpp"

namespace shiftlab {

// Regular expression over finite symbol sets, assembled programmatically.
// Nodes are shared and immutable.
class Regex {
 public:
  enum class Kind { empty, epsilon, symbols, concat, alt, star };

  static Regex empty();
  static Regex epsilon();
  static Regex symbol(Symbol s);
  static Regex any_of(std::vector<Symbol> symbols);
  // Literal concatenation of the letters of `w`.
  static Regex word(const Word& w);

  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> parts);
  static Regex star(Regex r);
  static Regex plus(Regex r);

  Kind kind() const noexcept { return node_->kind; }

  // Thompson construction. Every symbol must belong to `alphabet`.
  Nfa to_nfa(const Alphabet& alphabet) const;

 private:
  struct Node {
    Kind kind;
    std::vector<Symbol> symbols;
    std::vector<Regex> children;
  };
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::pair<State, State> build(Nfa& nfa) const;

  std::shared_ptr<const Node> node_;
};

inline Nfa assemble(const Regex& r, const Alphabet& alphabet) { return r.to_nfa(alphabet); }

}  // namespace shiftlab

#endif
