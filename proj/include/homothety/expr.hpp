#ifndef HOMOTHETY_EXPR_HPP
#define HOMOTHETY_EXPR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace homothety {

/// Node kinds of the expression tree. Numeric constants are exact: Integer
/// holds an arbitrary-precision integer, Rational a fraction in lowest terms
/// with positive denominator.
enum class Kind {
  Integer,
  Rational,
  Symbol,
  Sum,
  Product,
  Power,
  Exp,
  Ln,
  Sin,
  Cos,
  Tan,
  Cot,
  Csc,
  Negate,
};

class Expr;
using ExprList = std::vector<Expr>;

/// Immutable expression value. Copies are cheap (shared structure).
class Expr {
 public:
  Expr();  // the integer 0

  static Expr integer(long v);
  static Expr integer(mpz_class v);
  static Expr rational(mpq_class v);
  static Expr rational(long num, long den);
  static Expr symbol(std::string name);
  static Expr sum(ExprList terms);
  static Expr product(ExprList factors);
  static Expr power(Expr base, Expr exponent);
  static Expr exp(Expr arg);
  static Expr ln(Expr arg);
  static Expr sin(Expr arg);
  static Expr cos(Expr arg);
  static Expr tan(Expr arg);
  static Expr cot(Expr arg);
  static Expr csc(Expr arg);
  static Expr negate(Expr arg);

  Kind kind() const;
  bool is_number() const;
  const mpq_class& value() const;   // Integer / Rational only
  const std::string& name() const;  // Symbol only
  const ExprList& children() const;
  std::size_t hash() const;

  bool is_integer(long v) const;
  bool is_zero_literal() const { return is_integer(0); }
  bool is_one_literal() const { return is_integer(1); }

  std::set<std::string> free_symbols() const;
  bool depends_on(const std::string& symbol) const;

  /// Deterministic total order: node-kind rank, then value / symbol name,
  /// then children lexicographically. Independent of pointers and hashes.
  static int compare(const Expr& a, const Expr& b);

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  struct Less {
    bool operator()(const Expr& a, const Expr& b) const {
      return compare(a, b) < 0;
    }
  };

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind k, mpq_class value, std::string name, ExprList kids);
  const Node* raw() const { return node_.get(); }

  std::shared_ptr<const Node> node_;

  friend struct ExprAccess;
};

/// Internal accessor used by the canonicalizer for pointer-keyed memoization.
struct ExprAccess {
  static const void* id(const Expr& e) { return e.raw(); }
};

// Raw tree builders. These do not simplify; run simplify() on the result to
// reach canonical form.
Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr pow(Expr base, Expr exponent);

inline Expr operator+(Expr a, long b) { return std::move(a) + Expr::integer(b); }
inline Expr operator+(long a, Expr b) { return Expr::integer(a) + std::move(b); }
inline Expr operator-(Expr a, long b) { return std::move(a) - Expr::integer(b); }
inline Expr operator-(long a, Expr b) { return Expr::integer(a) - std::move(b); }
inline Expr operator*(Expr a, long b) { return std::move(a) * Expr::integer(b); }
inline Expr operator*(long a, Expr b) { return Expr::integer(a) * std::move(b); }
inline Expr operator/(Expr a, long b) { return std::move(a) / Expr::integer(b); }
inline Expr operator/(long a, Expr b) { return Expr::integer(a) / std::move(b); }
inline Expr pow(Expr base, long e) { return pow(std::move(base), Expr::integer(e)); }

}  // namespace homothety

#endif  // HOMOTHETY_EXPR_HPP
