#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "contralg/boolalg.hpp"
#include "contralg/contract.hpp"

namespace contralg {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Propositional syntax tree over constants, variables, !, &, | and ->.
struct Formula {
  enum class Kind { False, True, Var, Not, And, Or, Imp };
  Kind kind;
  std::string var;   // Kind::Var only
  FormulaPtr lhs;    // unary operand or left operand
  FormulaPtr rhs;
};

FormulaPtr f_false();
FormulaPtr f_true();
FormulaPtr f_var(std::string name);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);

bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

// Grammar: precedence ! > & > | > ->, with & and | left-associative and ->
// right-associative. Raises SyntaxError (with position and expected tokens)
// or UnknownToken.
FormulaPtr parse(std::string_view text);

// Minimal-parentheses canonical form; parse(to_string(f)) == f structurally.
std::string to_string(const FormulaPtr& f);

// An ordered variable list (at most 4) with its free Boolean algebra.
// The order fixes minterm numbering: minterm j assigns variable i the truth
// value of bit i of j.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const BoolAlgPtr& algebra() const { return alg_; }
  Mask var_mask(const std::string& name) const;  // UnboundVariable when absent
  std::string minterm_name(int j) const;

 private:
  std::vector<std::string> vars_;
  BoolAlgPtr alg_;
};

// Truth-table semantics; the result is the mask of satisfying minterms.
Mask eval(const FormulaPtr& f, const VarContext& ctx);

// `(<formula>, <formula>)`. With saturate the guarantee is widened to
// g \/ !a before the carrier check, so the check always passes; without it
// a \/ g != 1 raises NotAContract listing the uncovered minterms.
ContractPair parse_contract(std::string_view text, const VarContext& ctx, bool saturate = false);

// Canonical minterm-expansion rendering of an element ("0", "1", or a
// disjunction of full conjunctions).
std::string render_mask(const VarContext& ctx, Mask m);

}  // namespace contralg
