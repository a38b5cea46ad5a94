#pragma once

// Subgroups of pc-presented groups as induced generating sequences (igs):
// at most one member per leading generator index, leading indices strictly
// increasing, leading exponents reduced (dividing the relative order on
// finite coordinates, positive on infinite ones), entries above deeper pivots
// reduced to canonical residues. Sifting through the igs decides membership
// and expresses members; the builder closes the sequence under conjugation
// and power folding so that sifting is complete.

#include "polytc/pcpresentation.hpp"

#include <functional>
#include <optional>

namespace polytc {

struct InfiniteIndex : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};

class Subgroup;

namespace detail {

class IgsBuilder {
 public:
  explicit IgsBuilder(PcPtr parent) : p_(std::move(parent)) {
    slots_.assign(p_->size(), std::nullopt);
  }

  void add(Element w) {
    work_.push_back(std::move(w));
    drain();
  }

  std::vector<Element> finish() {
    canonicalize();
    std::vector<Element> out;
    for (auto& s : slots_)
      if (s) out.push_back(*s);
    return out;
  }

 private:
  void drain() {
    while (!work_.empty()) {
      Element w = std::move(work_.back());
      work_.pop_back();
      sift_in(std::move(w));
    }
  }

  void sift_in(Element w) {
    for (;;) {
      std::size_t l = w.depth();
      if (l == p_->size()) return;
      if (!slots_[l]) {
        insert(l, normalized(l, std::move(w)));
        return;
      }
      Int a = slots_[l]->e[l];
      Int b = w.e[l];
      if (b % a == 0) {
        w = p_->mult(p_->power(*slots_[l], -(b / a)), w);
        continue;  // leading coordinate cleared, sift deeper
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      Element comb =
          p_->mult(p_->power(*slots_[l], s), p_->power(w, t));
      Element old = *slots_[l];
      insert(l, normalized(l, std::move(comb)));
      work_.push_back(std::move(old));
      work_.push_back(std::move(w));
      return;
    }
  }

  // reduce the leading exponent to gcd with the relative order (finite case)
  // or make it positive (infinite case)
  Element normalized(std::size_t l, Element w) {
    if (p_->finite_order(l)) {
      const Int& m = p_->order(l);
      Int a = w.e[l];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 m.get_mpz_t());
      if (g != a) {
        Element repl = p_->power(w, s);
        work_.push_back(std::move(w));
        return repl;
      }
      return w;
    }
    if (w.e[l] < 0) return p_->inverse(w);
    return w;
  }

  void insert(std::size_t l, Element w) {
    slots_[l] = std::move(w);
    const Element& u = *slots_[l];
    if (p_->finite_order(l))
      work_.push_back(p_->power(u, p_->order(l) / u.e[l]));
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (k == l || !slots_[k]) continue;
      const Element& v = *slots_[k];
      Element vi = p_->inverse(v);
      Element ui = p_->inverse(u);
      work_.push_back(p_->conj(u, v));
      work_.push_back(p_->conj(u, vi));
      work_.push_back(p_->conj(v, u));
      work_.push_back(p_->conj(v, ui));
    }
  }

  void canonicalize() {
    for (std::size_t l0 = 0; l0 < slots_.size(); ++l0) {
      if (!slots_[l0]) continue;
      Element u = *slots_[l0];
      for (std::size_t l = l0 + 1; l < slots_.size(); ++l) {
        if (!slots_[l]) continue;
        Int q = fdiv(u.e[l], slots_[l]->e[l]);
        if (q != 0) u = p_->mult(u, p_->power(*slots_[l], -q));
      }
      slots_[l0] = std::move(u);
    }
  }

  PcPtr p_;
  std::vector<std::optional<Element>> slots_;
  std::vector<Element> work_;
};

}  // namespace detail

class Subgroup {
 public:
  Subgroup(PcPtr parent, const std::vector<Element>& gens)
      : parent_(std::move(parent)) {
    detail::IgsBuilder b(parent_);
    for (auto& g : gens) b.add(g);
    igs_ = b.finish();
  }

  static Subgroup whole(PcPtr parent) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < parent->size(); ++i)
      gens.push_back(parent->gen(i));
    return Subgroup(std::move(parent), gens);
  }
  static Subgroup trivial(PcPtr parent) {
    return Subgroup(std::move(parent), {});
  }

  const PcPtr& parent() const { return parent_; }
  const std::vector<Element>& igs() const { return igs_; }
  bool is_trivial() const { return igs_.empty(); }

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && igs_ == o.igs_;
  }

  // residue of sifting g through the igs; identity iff g is a member
  Element sift(const Element& g) const {
    Element w = g;
    for (;;) {
      std::size_t l = w.depth();
      if (l == parent_->size()) return w;
      const Element* u = member_at(l);
      if (!u) return w;
      Int q = w.e[l] / u->e[l];
      if (q * u->e[l] != w.e[l]) return w;
      w = parent_->mult(parent_->power(*u, -q), w);
    }
  }

  bool contains(const Element& g) const { return sift(g).is_identity(); }

  // expression of g as a product of igs members, leading-first:
  // g == prod igs[t_i]^{q_i}
  std::optional<std::vector<std::pair<std::size_t, Int>>> express(
      const Element& g) const {
    std::vector<std::pair<std::size_t, Int>> expr;
    Element w = g;
    for (;;) {
      std::size_t l = w.depth();
      if (l == parent_->size()) return expr;
      const Element* u = member_at(l);
      if (!u) return std::nullopt;
      Int q = w.e[l] / u->e[l];
      if (q * u->e[l] != w.e[l]) return std::nullopt;
      expr.emplace_back(index_at(l), q);
      w = parent_->mult(parent_->power(*u, -q), w);
    }
  }

  bool contains_subgroup(const Subgroup& s) const {
    for (auto& u : s.igs_)
      if (!contains(u)) return false;
    return true;
  }

  // index in the parent group; 0 means infinite
  Int index() const {
    Int idx = 1;
    for (std::size_t l = 0; l < parent_->size(); ++l) {
      const Element* u = member_at(l);
      if (u) {
        idx *= u->e[l];
      } else if (parent_->finite_order(l)) {
        idx *= parent_->order(l);
      } else {
        return 0;
      }
    }
    return idx;
  }

  // group order of the subgroup; 0 means infinite
  Int order() const {
    Int o = 1;
    for (auto& u : igs_) {
      std::size_t l = u.depth();
      if (!parent_->finite_order(l)) return 0;
      o *= parent_->order(l) / u.e[l];
    }
    return o;
  }

  std::vector<Element> elements() const {
    Int o = order();
    if (o == 0) throw InfiniteGroup("cannot enumerate an infinite subgroup");
    std::vector<Element> out{parent_->id()};
    for (auto it = igs_.rbegin(); it != igs_.rend(); ++it) {
      std::size_t l = it->depth();
      Int rel = parent_->order(l) / it->e[l];
      std::vector<Element> next;
      Element pw = parent_->id();
      for (Int c = 0; c < rel; ++c) {
        for (auto& tail : out) next.push_back(parent_->mult(pw, tail));
        pw = parent_->mult(pw, *it);
      }
      out = std::move(next);
    }
    return out;
  }

  // one representative per coset g*S: the exponent box with pivot-slot
  // coordinates restricted to [0, pivot)
  std::vector<Element> left_transversal() const {
    std::vector<std::pair<std::size_t, Int>> ranges;
    for (std::size_t l = 0; l < parent_->size(); ++l) {
      const Element* u = member_at(l);
      Int r;
      if (u)
        r = u->e[l];
      else if (parent_->finite_order(l))
        r = parent_->order(l);
      else
        throw InfiniteIndex("subgroup has infinite index");
      if (r != 1) ranges.emplace_back(l, r);
    }
    std::vector<Element> out;
    IntVec e(parent_->size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == ranges.size()) {
        out.push_back(Element{e});
        return;
      }
      for (Int c = 0; c < ranges[k].second; ++c) {
        e[ranges[k].first] = c;
        rec(k + 1);
      }
      e[ranges[k].first] = 0;
    };
    rec(0);
    return out;
  }

  // one representative per coset S*r
  std::vector<Element> transversal() const {
    std::vector<Element> out;
    for (auto& b : left_transversal()) out.push_back(parent_->inverse(b));
    return out;
  }

  // canonical representative of the coset g*S: reducing slot by slot with
  // right multiplications keeps already-reduced coordinates fixed
  Element left_coset_rep(const Element& g) const {
    Element w = g;
    for (std::size_t l = 0; l < parent_->size(); ++l) {
      const Element* u = member_at(l);
      if (!u) continue;
      Int q = fdiv(w.e[l], u->e[l]);
      if (q != 0) w = parent_->mult(w, parent_->power(*u, -q));
    }
    return w;
  }
  // canonical representative of the coset S*g
  Element right_coset_rep(const Element& g) const {
    return parent_->inverse(left_coset_rep(parent_->inverse(g)));
  }

  const Element* member_at(std::size_t l) const {
    for (auto& u : igs_)
      if (u.depth() == l) return &u;
    return nullptr;
  }

 private:
  std::size_t index_at(std::size_t l) const {
    for (std::size_t t = 0; t < igs_.size(); ++t)
      if (igs_[t].depth() == l) return t;
    throw Error("no igs member at slot");
  }

  PcPtr parent_;
  std::vector<Element> igs_;
};

inline Subgroup subgroup(PcPtr g, const std::vector<Element>& gens) {
  return Subgroup(std::move(g), gens);
}

inline bool is_normal(const Subgroup& s) {
  const auto& p = s.parent();
  for (auto& u : s.igs())
    for (std::size_t i = 0; i < p->size(); ++i) {
      if (!s.contains(p->conj(u, p->gen(i)))) return false;
      if (!s.contains(p->conj(u, p->inverse(p->gen(i))))) return false;
    }
  return true;
}

inline Subgroup normal_closure(PcPtr g, const std::vector<Element>& gens) {
  Subgroup s(g, gens);
  for (;;) {
    std::vector<Element> extra;
    for (auto& u : s.igs())
      for (std::size_t i = 0; i < g->size(); ++i) {
        Element c1 = g->conj(u, g->gen(i));
        if (!s.contains(c1)) extra.push_back(c1);
        Element c2 = g->conj(u, g->inverse(g->gen(i)));
        if (!s.contains(c2)) extra.push_back(c2);
      }
    if (extra.empty()) return s;
    std::vector<Element> all = s.igs();
    all.insert(all.end(), extra.begin(), extra.end());
    s = Subgroup(g, all);
  }
}

// product NK of a normal subgroup with another subgroup
inline Subgroup subgroup_product(const Subgroup& n, const Subgroup& k) {
  std::vector<Element> gens = n.igs();
  gens.insert(gens.end(), k.igs().begin(), k.igs().end());
  return Subgroup(n.parent(), gens);
}

inline Subgroup conjugate_subgroup(const Subgroup& s, const Element& g) {
  std::vector<Element> gens;
  for (auto& u : s.igs()) gens.push_back(s.parent()->conj(u, g));
  return Subgroup(s.parent(), gens);
}

// ---- induced presentations ----

// A subgroup as a pc group in its own right: one generator per igs member,
// with rules obtained by expressing powers and conjugates through the deeper
// members.
struct InducedGroup {
  Subgroup sub;
  PcPtr pres;

  Element to_parent(const Element& x) const {
    const auto& p = sub.parent();
    Element g = p->id();
    for (std::size_t t = 0; t < sub.igs().size(); ++t)
      if (x.e[t] != 0) g = p->mult(g, p->power(sub.igs()[t], x.e[t]));
    return g;
  }

  Element from_parent(const Element& g) const {
    auto expr = sub.express(g);
    if (!expr) throw Error("element is not in the subgroup");
    IntVec e(sub.igs().size());
    for (auto& [t, q] : *expr) e[t] = q;
    return Element{std::move(e)};
  }
};

inline InducedGroup induced(const Subgroup& s) {
  const auto& p = s.parent();
  const auto& igs = s.igs();
  std::size_t k = igs.size();
  IntVec orders(k);
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t l = igs[t].depth();
    orders[t] = p->finite_order(l) ? Int(p->order(l) / igs[t].e[l]) : Int(0);
  }
  auto express_word = [&](const Element& g) {
    auto expr = s.express(g);
    if (!expr) throw Error("induced: closure violated");
    Word w;
    for (auto& [t, q] : *expr) w.push(t, q);
    return w;
  };
  std::map<std::size_t, Word> pows;
  std::map<std::pair<std::size_t, std::size_t>, Word> conjs, conj_invs;
  std::vector<std::string> names;
  for (std::size_t t = 0; t < k; ++t) {
    names.push_back("s" + std::to_string(t + 1));
    if (orders[t] != 0) pows[t] = express_word(p->power(igs[t], orders[t]));
    for (std::size_t j = t + 1; j < k; ++j) {
      conjs[{t, j}] = express_word(p->conj(igs[j], igs[t]));
      if (orders[t] == 0)
        conj_invs[{t, j}] = express_word(p->conj(igs[j], p->inverse(igs[t])));
    }
  }
  return InducedGroup{
      s, std::make_shared<PcPresentation>(orders, pows, conjs, conj_invs,
                                          names)};
}

// ---- quotients ----

// Data for G/N: a pc presentation on the surviving slots, the projection and
// a section choosing a canonical preimage per quotient element.
struct QuotientData {
  PcPtr parent;
  Subgroup n;                      // the kernel
  PcPtr quotient;
  std::vector<std::size_t> slots;  // original slot per quotient generator

  // canonical coset representative: pivot-slot exponents reduced
  Element coset_rep(const Element& g) const {
    Element w = g;
    for (std::size_t l = 0; l < parent->size(); ++l) {
      const Element* u = n.member_at(l);
      if (!u) continue;
      Int q = fdiv(w.e[l], u->e[l]);
      if (q != 0) w = parent->mult(w, parent->power(*u, -q));
    }
    return w;
  }

  Element project(const Element& g) const {
    Element rep = coset_rep(g);
    IntVec e(quotient->size());
    for (std::size_t t = 0; t < slots.size(); ++t) e[t] = rep.e[slots[t]];
    return Element{std::move(e)};
  }

  Element section(const Element& q) const {
    IntVec e(parent->size());
    for (std::size_t t = 0; t < slots.size(); ++t) e[slots[t]] = q.e[t];
    return Element{std::move(e)};
  }
};

inline QuotientData quotient(PcPtr g, const Subgroup& n) {
  if (n.parent() != g) throw Error("quotient: subgroup of a different group");
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");

  std::vector<std::size_t> slots;
  IntVec orders;
  std::vector<std::string> names;
  for (std::size_t l = 0; l < g->size(); ++l) {
    const Element* u = n.member_at(l);
    Int r = u ? u->e[l] : g->order(l);  // 0 = infinite
    if (u && u->e[l] == 1) continue;    // generator dies
    slots.push_back(l);
    orders.push_back(r);
    names.push_back(g->name(l));
  }

  auto rep = [&](Element w) {
    for (std::size_t l = 0; l < g->size(); ++l) {
      const Element* u = n.member_at(l);
      if (!u) continue;
      Int q = fdiv(w.e[l], u->e[l]);
      if (q != 0) w = g->mult(w, g->power(*u, -q));
    }
    return w;
  };
  auto to_word = [&](const Element& r) {
    Word w;
    for (std::size_t t = 0; t < slots.size(); ++t) w.push(t, r.e[slots[t]]);
    return w;
  };
  std::map<std::size_t, Word> pows;
  std::map<std::pair<std::size_t, std::size_t>, Word> conjs, conj_invs;
  for (std::size_t t = 0; t < slots.size(); ++t) {
    std::size_t l = slots[t];
    if (orders[t] != 0)
      pows[t] = to_word(rep(g->power(g->gen(l), orders[t])));
    for (std::size_t s = t + 1; s < slots.size(); ++s) {
      std::size_t l2 = slots[s];
      conjs[{t, s}] = to_word(rep(g->conj(g->gen(l2), g->gen(l))));
      if (orders[t] == 0)
        conj_invs[{t, s}] =
            to_word(rep(g->conj(g->gen(l2), g->inverse(g->gen(l)))));
    }
  }
  auto pres =
      std::make_shared<PcPresentation>(orders, pows, conjs, conj_invs, names);
  return QuotientData{g, n, std::move(pres), std::move(slots)};
}

}  // namespace polytc
