#include "coc/monoid.hpp"

#include <algorithm>

#include "coc/error.hpp"

namespace coc {

MonoidFn::MonoidFn(int d, std::vector<int> table) : d_(d), table_(std::move(table)) {
  if (!valid_table(d_, table_))
    throw Error(Errc::invalid_argument, "table is not a non-decreasing map of {0..d+1} fixing 0 and d+1");
}

MonoidFn MonoidFn::identity(int d) {
  std::vector<int> t(static_cast<std::size_t>(d) + 2);
  for (int x = 0; x <= d + 1; ++x) t[static_cast<std::size_t>(x)] = x;
  return MonoidFn(d, std::move(t));
}

bool MonoidFn::valid_table(int d, const std::vector<int>& t) {
  if (d < 1 || t.size() != static_cast<std::size_t>(d) + 2) return false;
  if (t.front() != 0 || t.back() != d + 1) return false;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x] < 0 || t[x] > d + 1) return false;
    if (x > 0 && t[x] < t[x - 1]) return false;
  }
  return true;
}

bool MonoidFn::is_identity() const { return fixed_points() == d_ + 2; }

int MonoidFn::fixed_points() const {
  int count = 0;
  for (int x = 0; x <= d_ + 1; ++x) count += (*this)(x) == x ? 1 : 0;
  return count;
}

bool MonoidFn::at_least_identity() const {
  for (int x = 0; x <= d_ + 1; ++x)
    if ((*this)(x) < x) return false;
  return true;
}

bool MonoidFn::at_most_identity() const {
  for (int x = 0; x <= d_ + 1; ++x)
    if ((*this)(x) > x) return false;
  return true;
}

std::string MonoidFn::str() const {
  std::string out;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(table_[x]);
  }
  return out;
}

MonoidFn compose(const MonoidFn& g, const MonoidFn& f) {
  if (g.d() != f.d()) throw Error(Errc::invalid_argument, "composing functions with different d");
  std::vector<int> t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(static_cast<int>(x)));
  return MonoidFn(f.d(), std::move(t));
}

std::string to_string(const BasicFn& b) {
  switch (b.kind) {
    case BasicFn::Kind::id: return "id";
    case BasicFn::Kind::inc: return "inc";
    case BasicFn::Kind::dec: return "dec(" + std::to_string(b.i) + ")";
  }
  return "?";
}

std::string to_string(const AdvancedFn& a) {
  switch (a.kind) {
    case AdvancedFn::Kind::inc_at: return "inc_at(" + std::to_string(a.i) + ")";
    case AdvancedFn::Kind::inc_range: return "inc_range(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
    case AdvancedFn::Kind::dec_range: return "dec_range(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
  }
  return "?";
}

MonoidFn eval(const BasicFn& b, int d) {
  auto t = MonoidFn::identity(d).table();
  switch (b.kind) {
    case BasicFn::Kind::id:
      break;
    case BasicFn::Kind::inc:
      for (int x = 1; x <= d; ++x) t[static_cast<std::size_t>(x)] = x + 1;
      break;
    case BasicFn::Kind::dec:
      if (b.i < 1 || b.i > d) throw Error(Errc::invalid_argument, "dec index out of range");
      t[static_cast<std::size_t>(b.i)] = b.i - 1;
      break;
  }
  return MonoidFn(d, std::move(t));
}

MonoidFn eval(const AdvancedFn& a, int d) {
  auto t = MonoidFn::identity(d).table();
  switch (a.kind) {
    case AdvancedFn::Kind::inc_at:
      if (a.i < 1 || a.i > d) throw Error(Errc::invalid_argument, "inc_at index out of range");
      t[static_cast<std::size_t>(a.i)] = a.i + 1;
      break;
    case AdvancedFn::Kind::inc_range:
      if (!(1 <= a.i && a.i < a.j && a.j <= d + 1)) throw Error(Errc::invalid_argument, "inc_range indices out of range");
      for (int x = a.i; x <= a.j; ++x) t[static_cast<std::size_t>(x)] = a.j;
      break;
    case AdvancedFn::Kind::dec_range:
      if (!(0 <= a.i && a.i < a.j && a.j <= d)) throw Error(Errc::invalid_argument, "dec_range indices out of range");
      for (int x = a.i; x <= a.j; ++x) t[static_cast<std::size_t>(x)] = a.i;
      break;
  }
  return MonoidFn(d, std::move(t));
}

MonoidFn compose_in_order(const std::vector<BasicFn>& fns, int d) {
  auto acc = MonoidFn::identity(d);
  for (const auto& b : fns) acc = compose(eval(b, d), acc);
  return acc;
}

MonoidFn compose_in_order(const std::vector<AdvancedFn>& fns, int d) {
  auto acc = MonoidFn::identity(d);
  for (const auto& a : fns) acc = compose(eval(a, d), acc);
  return acc;
}

std::vector<BasicFn> decompose_inc_at(int i, int d) {
  if (i < 1 || i > d) throw Error(Errc::invalid_argument, "inc_at index out of range");
  std::vector<BasicFn> out;
  // Pull i+1..d down by one, shift everything up, then pull 2..i back down.
  for (int j = i + 1; j <= d; ++j) out.push_back(BasicFn::dec(j));
  out.push_back(BasicFn::inc());
  for (int j = 2; j <= i; ++j) out.push_back(BasicFn::dec(j));
  return out;
}

std::vector<BasicFn> expand(const AdvancedFn& a, int d) {
  std::vector<BasicFn> out;
  switch (a.kind) {
    case AdvancedFn::Kind::inc_at:
      return decompose_inc_at(a.i, d);
    case AdvancedFn::Kind::inc_range:
      for (int x = a.i; x < a.j; ++x) {
        auto part = decompose_inc_at(x, d);
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    case AdvancedFn::Kind::dec_range:
      for (int x = a.j; x > a.i; --x) out.push_back(BasicFn::dec(x));
      break;
  }
  return out;
}

namespace {

// Maximal runs of {0..d+1} with equal image, as (min, max, image).
struct Fiber {
  int lo, hi, image;
};

std::vector<Fiber> fibers(const MonoidFn& f) {
  std::vector<Fiber> out;
  for (int x = 0; x <= f.d() + 1; ++x) {
    if (!out.empty() && out.back().image == f(x)) out.back().hi = x;
    else out.push_back({x, x, f(x)});
  }
  return out;
}

}  // namespace

std::vector<AdvancedFn> decompose_monotone(const MonoidFn& f, Direction dir) {
  if (f.is_identity()) throw Error(Errc::invalid_argument, "identity has no monotone decomposition");
  std::vector<AdvancedFn> out;
  auto classes = fibers(f);
  if (dir == Direction::plus) {
    if (!f.at_least_identity()) throw Error(Errc::invalid_argument, "function is not above the identity");
    // Largest image first, so later moves never disturb finished classes.
    std::reverse(classes.begin(), classes.end());
    for (const auto& c : classes)
      if (c.lo != c.image) out.push_back(AdvancedFn::inc_range(c.lo, c.image));
  } else {
    if (!f.at_most_identity()) throw Error(Errc::invalid_argument, "function is not below the identity");
    for (const auto& c : classes)
      if (c.hi != c.image) out.push_back(AdvancedFn::dec_range(c.image, c.hi));
  }
  return out;
}

std::pair<MonoidFn, MonoidFn> split_plus_minus(const MonoidFn& f) {
  std::vector<int> plus(f.table().size()), minus(f.table().size());
  for (int x = 0; x <= f.d() + 1; ++x) {
    plus[static_cast<std::size_t>(x)] = f(x) > x ? f(x) : x;
    minus[static_cast<std::size_t>(x)] = f(x) < x ? f(x) : x;
  }
  return {MonoidFn(f.d(), std::move(plus)), MonoidFn(f.d(), std::move(minus))};
}

std::vector<BasicFn> decompose(const MonoidFn& f) {
  if (f.is_identity()) return {BasicFn::id()};
  auto [plus, minus] = split_plus_minus(f);
  std::vector<AdvancedFn> advanced;
  if (!minus.is_identity()) {
    auto part = decompose_monotone(minus, Direction::minus);
    advanced.insert(advanced.end(), part.begin(), part.end());
  }
  if (!plus.is_identity()) {
    auto part = decompose_monotone(plus, Direction::plus);
    advanced.insert(advanced.end(), part.begin(), part.end());
  }
  std::vector<BasicFn> out;
  for (const auto& a : advanced) {
    auto part = expand(a, f.d());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MonoidFn> enumerate_monoid(int d) {
  std::vector<MonoidFn> out;
  std::vector<int> t(static_cast<std::size_t>(d) + 2, 0);
  t.back() = d + 1;
  // Odometer over non-decreasing values of positions 1..d.
  auto rec = [&](auto&& self, int x, int lo) -> void {
    if (x > d) {
      out.emplace_back(d, t);
      return;
    }
    for (int v = lo; v <= d + 1; ++v) {
      t[static_cast<std::size_t>(x)] = v;
      self(self, x + 1, v);
    }
  };
  rec(rec, 1, 0);
  return out;
}

}  // namespace coc
