#pragma once

// Consistent polycyclic presentations, words, and collection to normal form.
//
// Generators are indexed 0..n-1. Relative orders are stored as Int with 0
// meaning infinite. Rules: for finite order r_i a power word g_i^{r_i} = w
// over generators > i; for i < j conjugation words g_j^{g_i} (and g_j^{g_i^-1}
// when g_i has infinite order) over generators > i. Normal forms are exponent
// vectors with 0 <= e_i < r_i on the finite-order coordinates.
//
// Collection is organized recursively by depth: multiplying a syllable g_j^e
// into a normal form only ever spawns work on generators strictly beyond j,
// using that conjugation by g_j restricts to an automorphism of the tail
// subgroup <g_{j+1}, ..., g_n>.

#include "polytc/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace polytc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedWord : Error {
  using Error::Error;
};
struct InfiniteGroup : Error {
  using Error::Error;
};

struct Syllable {
  std::size_t gen;
  Int exp;
  bool operator==(const Syllable&) const = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Syllable> sy) {
    for (auto& s : sy) push(s.gen, s.exp);
  }
  void push(std::size_t gen, Int exp) {
    if (exp == 0) return;
    if (!syll_.empty() && syll_.back().gen == gen) {
      syll_.back().exp += exp;
      if (syll_.back().exp == 0) syll_.pop_back();
      return;
    }
    syll_.push_back({gen, std::move(exp)});
  }
  void append(const Word& w) {
    for (auto& s : w.syll_) push(s.gen, s.exp);
  }
  Word inverse() const {
    Word w;
    for (auto it = syll_.rbegin(); it != syll_.rend(); ++it)
      w.push(it->gen, -it->exp);
    return w;
  }
  const std::vector<Syllable>& syllables() const { return syll_; }
  bool empty() const { return syll_.empty(); }
  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syll_;
};

struct Element {
  IntVec e;
  bool is_identity() const {
    for (auto& x : e)
      if (x != 0) return false;
    return true;
  }
  // index of the first nonzero exponent, or e.size() for the identity
  std::size_t depth() const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) return i;
    return e.size();
  }
  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const { return e < o.e; }
};

struct ConsistencyViolation {
  std::string overlap;  // e.g. "a·a·b"
  Element lhs, rhs;
};

struct ConsistencyReport {
  std::vector<ConsistencyViolation> violations;
  bool ok() const { return violations.empty(); }
};

class PcPresentation {
 public:
  // orders[i] == 0 means infinite. Rule words may mention only generators > i
  // and are validated here; missing conjugation rules default to trivial.
  // Inverse conjugation rules are required for infinite-order generators that
  // act nontrivially and are derived automatically for finite-order ones.
  PcPresentation(IntVec orders, std::map<std::size_t, Word> power_rules,
                 std::map<std::pair<std::size_t, std::size_t>, Word> conj_rules,
                 std::map<std::pair<std::size_t, std::size_t>, Word> conj_inv_rules = {},
                 std::vector<std::string> names = {})
      : orders_(std::move(orders)), names_(std::move(names)) {
    n_ = orders_.size();
    if (names_.empty())
      for (std::size_t i = 0; i < n_; ++i)
        names_.push_back("g" + std::to_string(i + 1));
    if (names_.size() != n_) throw Error("generator name count mismatch");
    for (auto& o : orders_)
      if (o < 0 || o == 1) throw Error("relative orders must be >= 2 or 0");

    power_.assign(n_, Word{});
    conj_.assign(n_, std::vector<Word>(n_));
    conj_inv_.assign(n_, std::vector<Word>(n_));
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        conj_[i][j].push(j, 1);
        conj_inv_[i][j].push(j, 1);
      }
    for (auto& [i, w] : power_rules) {
      if (i >= n_ || orders_[i] == 0)
        throw Error("power rule on invalid generator");
      check_word_depth(w, i);
      power_[i] = w;
    }
    for (auto& [ij, w] : conj_rules) {
      auto [i, j] = ij;
      if (i >= j || j >= n_) throw Error("conjugation rule indices invalid");
      check_word_depth(w, i);
      conj_[i][j] = w;
    }
    for (auto& [ij, w] : conj_inv_rules) {
      auto [i, j] = ij;
      if (i >= j || j >= n_) throw Error("conjugation rule indices invalid");
      if (orders_[i] != 0)
        throw Error("inverse conjugation rule given for finite-order generator");
      check_word_depth(w, i);
      conj_inv_[i][j] = w;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (orders_[i] != 0) continue;
      for (std::size_t j = i + 1; j < n_; ++j) {
        bool fwd_trivial = conj_[i][j] == Word{{j, 1}};
        bool inv_given = conj_inv_rules.count({i, j}) > 0;
        if (!fwd_trivial && !inv_given)
          throw Error("missing inverse conjugation rule for " + names_[j] +
                      "^" + names_[i] + "-");
      }
    }
    build_caches();
  }

  std::size_t size() const { return n_; }
  const Int& order(std::size_t i) const { return orders_[i]; }
  bool finite_order(std::size_t i) const { return orders_[i] != 0; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const IntVec& orders() const { return orders_; }
  const Word& power_word(std::size_t i) const { return power_[i]; }
  const Word& conj_word(std::size_t i, std::size_t j) const {
    return conj_[i][j];
  }
  const Word& conj_inv_word(std::size_t i, std::size_t j) const {
    return conj_inv_[i][j];
  }

  bool all_orders_finite() const {
    for (auto& o : orders_)
      if (o == 0) return false;
    return true;
  }
  // group order; requires all relative orders finite
  Int group_order() const {
    Int p = 1;
    for (auto& o : orders_) {
      if (o == 0) throw InfiniteGroup("group has infinite order");
      p *= o;
    }
    return p;
  }

  Element id() const { return Element{IntVec(n_)}; }
  Element gen(std::size_t i) const {
    Element g = id();
    g.e[i] = 1;
    return g;
  }
  Element element(IntVec exps) const {
    if (exps.size() != n_) throw Error("exponent vector length mismatch");
    Element g = id();
    for (std::size_t i = 0; i < n_; ++i) g = mult_syllable(g, i, exps[i]);
    return g;
  }

  Element collect(const Word& w) const {
    Element r = id();
    for (auto& s : w.syllables()) {
      if (s.gen >= n_) throw MalformedWord("generator index out of range");
      r = mult_syllable(r, s.gen, s.exp);
    }
    return r;
  }

  Element mult(const Element& a, const Element& b) const {
    Element r = a;
    for (std::size_t j = 0; j < n_; ++j)
      if (b.e[j] != 0) r = mult_syllable(r, j, b.e[j]);
    return r;
  }

  Element inverse(const Element& a) const {
    std::size_t i = a.depth();
    if (i == n_) return a;
    Element rest = a;
    rest.e[i] = 0;
    return mult_syllable(inverse(rest), i, -a.e[i]);
  }

  Element power(const Element& a, const Int& k) const {
    if (k == 0) return id();
    if (k < 0) return power(inverse(a), -k);
    Element base = a, acc = id();
    Int m = k;
    while (m > 0) {
      if (mpz_odd_p(m.get_mpz_t())) acc = mult(acc, base);
      m >>= 1;
      if (m > 0) base = mult(base, base);
    }
    return acc;
  }

  // x^y = y^-1 x y
  Element conj(const Element& x, const Element& y) const {
    return mult(mult(inverse(y), x), y);
  }
  // [x, y] = x^-1 y^-1 x y
  Element comm(const Element& x, const Element& y) const {
    return mult(inverse(mult(y, x)), mult(x, y));
  }

  // order of an element; 0 means infinite
  Int element_order(const Element& a) const {
    std::size_t d = a.depth();
    if (d == n_) return 1;
    if (orders_[d] == 0) return 0;
    Int q = orders_[d] / gcd(a.e[d], orders_[d]);
    Int sub = element_order(power(a, q));
    return sub == 0 ? Int(0) : Int(q * sub);
  }

  // streams each element exactly once; all relative orders must be finite
  template <typename F>
  void enumerate_elements(F&& visit) const {
    if (!all_orders_finite())
      throw InfiniteGroup("cannot enumerate an infinite group");
    IntVec e(n_);
    for (;;) {
      visit(Element{e});
      std::size_t k = n_;
      while (k > 0) {
        --k;
        e[k] += 1;
        if (e[k] < orders_[k]) break;
        e[k] = 0;
        if (k == 0) return;
      }
      if (n_ == 0) return;
    }
  }
  std::vector<Element> all_elements() const {
    std::vector<Element> out;
    enumerate_elements([&](const Element& g) { out.push_back(g); });
    return out;
  }

  ConsistencyReport check_consistency() const {
    ConsistencyReport rep;
    auto add = [&](std::string label, const Element& l, const Element& r) {
      if (!(l == r)) rep.violations.push_back({std::move(label), l, r});
    };
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          Element lhs = mult(mult(gen(k), gen(j)), gen(i));
          Element rhs = mult(gen(k), mult(gen(j), gen(i)));
          add(names_[i] + "·" + names_[j] + "·" + names_[k], lhs, rhs);
        }
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (finite_order(j)) {
          // (g_j^{r_j}) g_i  vs  g_j^{r_j-1} (g_j g_i)
          Element lhs = mult(power_elem_[j], gen(i));
          Element rhs = mult(gen_power(j, orders_[j] - 1), mult(gen(j), gen(i)));
          add(power_label(i, 1, j, orders_[j]), lhs, rhs);
        }
        if (finite_order(i)) {
          // g_j (g_i^{r_i})  vs  (g_j g_i) g_i^{r_i-1}
          Element lhs = mult(gen(j), power_elem_[i]);
          Element rhs = mult(mult(gen(j), gen(i)), gen_power(i, orders_[i] - 1));
          add(power_label(i, orders_[i], j, 1), lhs, rhs);
        }
        if (!finite_order(i)) {
          Element gi_inv = inverse(gen(i));
          add(names_[i] + "-·" + names_[i] + "·" + names_[j],
              mult(mult(gen(j), gi_inv), gen(i)), gen(j));
          add(names_[i] + "·" + names_[i] + "-·" + names_[j],
              mult(mult(gen(j), gen(i)), gi_inv), gen(j));
          if (finite_order(j))
            add(power_label(i, 1, j, orders_[j]) + "-",
                mult(power_elem_[j], gi_inv),
                mult(gen_power(j, orders_[j] - 1), mult(gen(j), gi_inv)));
        }
      }
    for (std::size_t i = 0; i < n_; ++i)
      if (finite_order(i))
        add(power_label(i, orders_[i] + 1, i, 0),
            mult(power_elem_[i], gen(i)), mult(gen(i), power_elem_[i]));
    return rep;
  }

  std::string print_element(const Element& g) const {
    if (g.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (g.e[i] == 0) continue;
      if (!first) os << "*";
      os << names_[i];
      if (g.e[i] != 1) os << "^" << g.e[i].get_str();
      first = false;
    }
    return os.str();
  }
  std::string print_word(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& s : w.syllables()) {
      if (!first) os << "*";
      os << names_[s.gen];
      if (s.exp != 1) os << "^" << s.exp.get_str();
      first = false;
    }
    return os.str();
  }
  Word element_word(const Element& g) const {
    Word w;
    for (std::size_t i = 0; i < n_; ++i) w.push(i, g.e[i]);
    return w;
  }

 private:
  void check_word_depth(const Word& w, std::size_t i) const {
    for (auto& s : w.syllables())
      if (s.gen >= n_ || s.gen <= i)
        throw Error("rule word must use only later generators");
  }

  Element gen_power(std::size_t i, const Int& e) const {
    return mult_syllable(id(), i, e);
  }

  std::string power_label(std::size_t i, const Int& ci, std::size_t j,
                          const Int& cj) const {
    // letters in ascending generator order with multiplicity
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& nm, const Int& count) {
      if (count <= 3) {
        for (Int c = 0; c < count; ++c) {
          if (!first) os << "·";
          os << nm;
          first = false;
        }
      } else {
        if (!first) os << "·";
        os << nm << "^" << count.get_str();
        first = false;
      }
    };
    emit(names_[i], ci);
    if (i != j) emit(names_[j], cj);
    return os.str();
  }

  // ---- collection core ----

  // normal form of u * g_j^e
  Element mult_syllable(Element u, std::size_t j, const Int& e) const {
    if (e == 0) return u;
    Element tail = id();
    bool have_tail = false;
    for (std::size_t k = j + 1; k < n_; ++k) {
      if (u.e[k] == 0) continue;
      tail.e[k] = u.e[k];
      u.e[k] = 0;
      have_tail = true;
    }
    if (have_tail) tail = conj_by_gen_power(tail, j, e);
    Element corr = id();
    Int ne = u.e[j] + e;
    if (finite_order(j)) {
      Int q = fdiv(ne, orders_[j]);
      u.e[j] = ne - q * orders_[j];
      if (q != 0) corr = power(power_elem_[j], q);
    } else {
      u.e[j] = ne;
    }
    if (have_tail || !corr.is_identity()) {
      Element deep = mult(corr, tail);
      for (std::size_t k = j + 1; k < n_; ++k) u.e[k] = deep.e[k];
    }
    return u;
  }

  // x supported on generators > j; conjugate by g_j^e
  Element conj_by_gen_power(Element x, std::size_t j, Int e) const {
    int sign = e < 0 ? 1 : 0;
    Int count = abs(e);
    if (count <= 8) {
      for (Int c = 0; c < count; ++c) x = conj_by_gen(x, j, sign);
      return x;
    }
    std::vector<Element> aut, acc;
    for (std::size_t k = 0; k < n_; ++k) {
      aut.push_back(conj_cache_[sign][j][k]);
      acc.push_back(gen(k));
    }
    // binary powering of the automorphism given by images `aut`
    Int m = count;
    for (;;) {
      if (mpz_odd_p(m.get_mpz_t()))
        for (std::size_t k = j + 1; k < n_; ++k)
          acc[k] = apply_images(aut, acc[k]);
      m >>= 1;
      if (m == 0) break;
      std::vector<Element> sq = aut;
      for (std::size_t k = j + 1; k < n_; ++k)
        sq[k] = apply_images(aut, aut[k]);
      aut = std::move(sq);
    }
    return apply_images(acc, x);
  }

  Element apply_images(const std::vector<Element>& images,
                       const Element& x) const {
    Element r = id();
    for (std::size_t k = 0; k < n_; ++k)
      if (x.e[k] != 0) r = mult(r, power(images[k], x.e[k]));
    return r;
  }

  Element conj_by_gen(const Element& x, std::size_t j, int sign) const {
    Element r = id();
    for (std::size_t k = j + 1; k < n_; ++k)
      if (x.e[k] != 0) r = mult(r, power(conj_cache_[sign][j][k], x.e[k]));
    return r;
  }

  void build_caches() {
    power_elem_.assign(n_, Element{IntVec(n_)});
    conj_cache_[0].assign(n_, std::vector<Element>(n_, Element{IntVec(n_)}));
    conj_cache_[1].assign(n_, std::vector<Element>(n_, Element{IntVec(n_)}));
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j < n_; ++j)
        conj_cache_[0][i][j] = collect(conj_[i][j]);
      if (finite_order(i)) power_elem_[i] = collect(power_[i]);
      if (!finite_order(i)) {
        for (std::size_t j = i + 1; j < n_; ++j)
          conj_cache_[1][i][j] = collect(conj_inv_[i][j]);
      } else {
        // g_i^-1 = g_i^{r_i - 1} p_i^-1, so conjugation by g_i^-1 is
        // conjugation by g_i^{r_i-1} followed by conjugation by p_i^-1
        Element pinv = inverse(power_elem_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
          Element im = conj_by_gen_power(gen(j), i, orders_[i] - 1);
          conj_cache_[1][i][j] = conj(im, pinv);
        }
      }
    }
  }

  std::size_t n_;
  IntVec orders_;
  std::vector<std::string> names_;
  std::vector<Word> power_;
  std::vector<std::vector<Word>> conj_;
  std::vector<std::vector<Word>> conj_inv_;
  std::vector<Element> power_elem_;
  std::vector<std::vector<Element>> conj_cache_[2];
};

using PcPtr = std::shared_ptr<const PcPresentation>;

}  // namespace polytc
