#ifndef COC_MONOID_HPP
#define COC_MONOID_HPP

#include <string>
#include <utility>
#include <vector>

namespace coc {

/// Non-decreasing map of {0..d+1} into itself fixing 0 and d+1.
class MonoidFn {
 public:
  /// Throws Error(invalid_argument) if the table is not in the monoid.
  MonoidFn(int d, std::vector<int> table);
  static MonoidFn identity(int d);
  static bool valid_table(int d, const std::vector<int>& table);

  int d() const { return d_; }
  int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& table() const { return table_; }
  bool is_identity() const;
  int fixed_points() const;
  bool at_least_identity() const;
  bool at_most_identity() const;
  std::string str() const;  // "0,2,3,3"

  friend bool operator==(const MonoidFn&, const MonoidFn&) = default;

 private:
  int d_;
  std::vector<int> table_;
};

/// (g o f)(x) = g(f(x)). Throws on dimension mismatch.
MonoidFn compose(const MonoidFn& g, const MonoidFn& f);

struct BasicFn {
  enum class Kind { id, inc, dec };
  Kind kind = Kind::id;
  int i = 0;  // dec index, 1..d

  static BasicFn id() { return {Kind::id, 0}; }
  static BasicFn inc() { return {Kind::inc, 0}; }
  static BasicFn dec(int i) { return {Kind::dec, i}; }
  friend bool operator==(const BasicFn&, const BasicFn&) = default;
};

struct AdvancedFn {
  enum class Kind { inc_at, inc_range, dec_range };
  Kind kind = Kind::inc_at;
  int i = 0;
  int j = 0;

  static AdvancedFn inc_at(int i) { return {Kind::inc_at, i, 0}; }
  static AdvancedFn inc_range(int i, int j) { return {Kind::inc_range, i, j}; }
  static AdvancedFn dec_range(int i, int j) { return {Kind::dec_range, i, j}; }
  friend bool operator==(const AdvancedFn&, const AdvancedFn&) = default;
};

std::string to_string(const BasicFn& b);
std::string to_string(const AdvancedFn& a);

MonoidFn eval(const BasicFn& b, int d);
MonoidFn eval(const AdvancedFn& a, int d);

/// Composition of a list given in application order: fns[0] is applied first.
MonoidFn compose_in_order(const std::vector<BasicFn>& fns, int d);
MonoidFn compose_in_order(const std::vector<AdvancedFn>& fns, int d);

/// inc_i as at most d basic functions, in application order.
std::vector<BasicFn> decompose_inc_at(int i, int d);

/// Expansion of one advanced function into basic functions, application order.
std::vector<BasicFn> expand(const AdvancedFn& a, int d);

enum class Direction { plus, minus };

/// Advanced-function decomposition of f != id with f >= id (plus) or
/// f <= id (minus), in application order.
std::vector<AdvancedFn> decompose_monotone(const MonoidFn& f, Direction dir);

/// f = plus o minus, where plus keeps the values above the diagonal and
/// minus the values below it.
std::pair<MonoidFn, MonoidFn> split_plus_minus(const MonoidFn& f);

/// At most d^3 basic functions composing to f, in application order.
std::vector<BasicFn> decompose(const MonoidFn& f);

/// Every element of M_d, tables in lexicographic order.
std::vector<MonoidFn> enumerate_monoid(int d);

}  // namespace coc

#endif
