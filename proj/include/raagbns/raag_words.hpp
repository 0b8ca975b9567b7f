#pragma once

// Words in a right-angled Artin group A_Γ: free and commuting cancellation
// to a reduced word, then the lexicographically least rearrangement by
// commutations as a normal form. Also partial conjugations acting on words.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "raagbns/error.hpp"
#include "raagbns/graph.hpp"

namespace raagbns {

struct Letter {
  VertexId vertex = 0;
  int exponent = 1;  // +1 or -1

  /// Letter order: a < a^-1 < b < b^-1 < ... by vertex id.
  [[nodiscard]] std::size_t code() const { return 2 * vertex + (exponent < 0 ? 1 : 0); }
  [[nodiscard]] Letter inverse() const { return Letter{vertex, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word commutator_word(const Word& x, const Word& y) {
  return concat(concat(concat(x, y), inverse(x)), inverse(y));
}

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].code() != b[i].code()) return a[i].code() < b[i].code();
  return false;
}

inline void validate_word(const SimpleGraph& g, const Word& w) {
  for (const auto& l : w) {
    if (l.vertex >= g.size()) throw InputError("word letter is not a vertex of the graph");
    if (l.exponent != 1 && l.exponent != -1) throw InputError("word letters must have exponent +1 or -1");
  }
}

inline bool commute(const SimpleGraph& g, VertexId u, VertexId v) { return u != v && g.adjacent(u, v); }

/// Cancels x^ε ... x^-ε pairs whose middle commutes with x, letter by letter.
inline Word free_commuting_reduce(const SimpleGraph& g, const Word& w) {
  Word r;
  r.reserve(w.size());
  for (const Letter& x : w) {
    bool cancelled = false;
    for (std::size_t i = r.size(); i-- > 0;) {
      if (r[i].vertex == x.vertex) {
        if (r[i].exponent == -x.exponent) {
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
        }
        break;
      }
      if (!commute(g, r[i].vertex, x.vertex)) break;
    }
    if (!cancelled) r.push_back(x);
  }
  return r;
}

/// Lexicographically least word obtainable by swapping adjacent commuting
/// letters: the least topological order of the "earlier and non-commuting"
/// dependency relation.
inline Word lex_least_rearrangement(const SimpleGraph& g, const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> waiting(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(g, w[j].vertex, w[i].vertex)) ++waiting[i];
  Word out;
  out.reserve(n);
  constexpr std::size_t kDone = SIZE_MAX;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = kDone;
    for (std::size_t i = 0; i < n; ++i)
      if (waiting[i] == 0 && (best == kDone || w[i].code() < w[best].code())) best = i;
    waiting[best] = kDone;
    out.push_back(w[best]);
    for (std::size_t k = best + 1; k < n; ++k)
      if (waiting[k] != kDone && !commute(g, w[best].vertex, w[k].vertex)) --waiting[k];
  }
  return out;
}

/// Normal form: a reduced word, shortlex-least among all words for the same element.
inline Word reduce(const SimpleGraph& g, const Word& w) {
  validate_word(g, w);
  return lex_least_rearrangement(g, free_commuting_reduce(g, w));
}

inline bool word_eq(const SimpleGraph& g, const Word& u, const Word& v) { return reduce(g, u) == reduce(g, v); }

inline bool is_trivial(const SimpleGraph& g, const Word& w) { return reduce(g, w).empty(); }

/// Vertices occurring in the reduced form.
inline VertexMask support(const SimpleGraph& g, const Word& w) {
  VertexMask m = 0;
  for (const auto& l : reduce(g, w)) m |= bit(l.vertex);
  return m;
}

/// Whitespace-separated tokens "x", "x^-1" or "x^k" for an integer k.
inline Word parse_word(const SimpleGraph& g, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  Word out;
  while (in >> token) {
    std::string name = token;
    long power = 1;
    if (const auto caret = token.rfind('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exp = token.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(exp, &used);
      } catch (const std::exception&) {
        throw InputError("malformed exponent in '" + token + "'");
      }
      if (used != exp.size()) throw InputError("malformed exponent in '" + token + "'");
    }
    const VertexId v = g.index_of(name);
    const Letter l{v, power < 0 ? -1 : 1};
    for (long i = 0; i < std::labs(power); ++i) out.push_back(l);
  }
  return out;
}

inline std::string format_word(const SimpleGraph& g, const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += g.label(l.vertex);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

/// An endomorphism of A_Γ given by the image of every vertex.
struct AutomorphismTable {
  std::vector<Word> images;
  friend bool operator==(const AutomorphismTable&, const AutomorphismTable&) = default;
};

inline AutomorphismTable identity_table(const SimpleGraph& g) {
  AutomorphismTable t;
  for (VertexId v = 0; v < g.size(); ++v) t.images.push_back({Letter{v, 1}});
  return t;
}

/// x ↦ a^p x a^-p for x in `c` (p = ±1), fixing every other vertex.
inline AutomorphismTable partial_conjugation(const SimpleGraph& g, VertexId a, VertexMask c, int power = 1) {
  if (a >= g.size()) throw InputError("multiplier is not a vertex");
  if (c & g.star(a)) throw InputError("partial conjugation support meets the star of its multiplier");
  AutomorphismTable t = identity_table(g);
  for (VertexId v : members_of(c)) t.images[v] = {Letter{a, power}, Letter{v, 1}, Letter{a, -power}};
  return t;
}

inline Word apply(const SimpleGraph& g, const AutomorphismTable& t, const Word& w) {
  validate_word(g, w);
  Word out;
  for (const auto& l : w) {
    const Word& img = t.images.at(l.vertex);
    if (l.exponent > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(g, out);
}

/// f ∘ h.
inline AutomorphismTable compose(const SimpleGraph& g, const AutomorphismTable& f, const AutomorphismTable& h) {
  AutomorphismTable out;
  for (const auto& img : h.images) out.images.push_back(apply(g, f, img));
  return out;
}

inline bool is_identity(const SimpleGraph& g, const AutomorphismTable& t) {
  for (VertexId v = 0; v < g.size(); ++v)
    if (reduce(g, t.images.at(v)) != Word{Letter{v, 1}}) return false;
  return true;
}

/// A product p_1 p_2 ... p_k of partial conjugations (acting as composition,
/// p_k first), each given by multiplier, support and sign.
struct ConjugationFactor {
  VertexId multiplier = 0;
  VertexMask support = 0;
  int power = 1;
};

inline AutomorphismTable product_table(const SimpleGraph& g, const std::vector<ConjugationFactor>& factors) {
  AutomorphismTable t = identity_table(g);
  for (const auto& f : factors) t = compose(g, t, partial_conjugation(g, f.multiplier, f.support, f.power));
  return t;
}

/// [π^a_K, π^b_L] = π^a_K π^b_L (π^a_K)^-1 (π^b_L)^-1 as a vertex table.
inline AutomorphismTable commutator_table(const SimpleGraph& g, VertexId a, VertexMask k, VertexId b, VertexMask l) {
  return product_table(g, {{a, k, 1}, {b, l, 1}, {a, k, -1}, {b, l, -1}});
}

inline bool commutator_trivial_in_aut(const SimpleGraph& g, VertexId a, const Component& k, VertexId b,
                                      const Component& l) {
  return is_identity(g, commutator_table(g, a, k.members, b, l.members));
}

/// Which configuration of the dominating/shared classification a pair of
/// standard generators falls into.
enum class CommutationCase { commuting, dominating_dominating, dominating_shared, shared_dominating, same_shared };

inline CommutationCase commutation_case(const SimpleGraph& g, VertexId a, const Component& k, VertexId b,
                                        const Component& l) {
  if (a == b || g.adjacent(a, b)) return CommutationCase::commuting;
  const auto cls = classify_pair(g, a, b);
  const bool k_dom = k == cls.dominating_a;
  const bool l_dom = l == cls.dominating_b;
  const auto is_shared = [&](const Component& c) {
    return std::find(cls.shared.begin(), cls.shared.end(), c) != cls.shared.end();
  };
  if (k_dom && l_dom) return CommutationCase::dominating_dominating;
  if (k_dom && is_shared(l)) return CommutationCase::dominating_shared;
  if (l_dom && is_shared(k)) return CommutationCase::shared_dominating;
  if (k == l && is_shared(k)) return CommutationCase::same_shared;
  return CommutationCase::commuting;
}

inline const char* to_string(CommutationCase c) {
  switch (c) {
    case CommutationCase::commuting: return "commuting";
    case CommutationCase::dominating_dominating: return "dominating_dominating";
    case CommutationCase::dominating_shared: return "dominating_shared";
    case CommutationCase::shared_dominating: return "shared_dominating";
    case CommutationCase::same_shared: return "same_shared";
  }
  return "?";
}

enum class OutClass { trivial, nontrivial };

/// Out-level verdict from the classification alone: nontrivial exactly when
/// one of the non-commuting configurations holds and (a, b) is an SIL-pair.
inline OutClass commutator_class_out(const SimpleGraph& g, VertexId a, const Component& k, VertexId b,
                                     const Component& l) {
  if (commutation_case(g, a, k, b, l) == CommutationCase::commuting) return OutClass::trivial;
  return is_sil_pair(g, a, b) ? OutClass::nontrivial : OutClass::trivial;
}

/// Searches reduced words h with |h| ≤ max_len such that t(v) = h v h^-1 for
/// every vertex. Finding one proves t inner; not finding one proves nothing.
inline std::optional<Word> is_inner_bounded(const SimpleGraph& g, const AutomorphismTable& t, std::size_t max_len) {
  std::vector<Word> targets;
  for (const auto& img : t.images) targets.push_back(reduce(g, img));
  auto conjugates = [&](const Word& h) {
    const Word hinv = inverse(h);
    for (VertexId v = 0; v < g.size(); ++v) {
      Word w = h;
      w.push_back(Letter{v, 1});
      w.insert(w.end(), hinv.begin(), hinv.end());
      if (reduce(g, w) != targets[v]) return false;
    }
    return true;
  };
  std::optional<Word> found;
  Word h;
  std::function<void()> extend = [&] {
    if (found) return;
    if (conjugates(h)) {
      found = h;
      return;
    }
    if (h.size() == max_len) return;
    for (VertexId v = 0; v < g.size() && !found; ++v)
      for (int e : {1, -1}) {
        h.push_back(Letter{v, e});
        // Only extend words that are already in normal form, so each
        // element is visited once.
        if (reduce(g, h) == h) extend();
        h.pop_back();
        if (found) return;
      }
  };
  // Breadth by length keeps the conjugator as short as possible.
  for (std::size_t len = 0; len <= max_len && !found; ++len) {
    const std::size_t saved = max_len;
    max_len = len;
    h.clear();
    extend();
    max_len = saved;
  }
  return found;
}

}  // namespace raagbns
