#include "numsys/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "json.hpp"

namespace numsys {

State Nfa::add_state(bool accept) {
  edges.emplace_back();
  epsilon.emplace_back();
  accepting.push_back(accept);
  return static_cast<State>(edges.size() - 1);
}

State Nfa::absorb(const Nfa& other) {
  if (other.alphabet > alphabet) alphabet = other.alphabet;
  State off = static_cast<State>(size());
  for (std::size_t q = 0; q < other.size(); ++q) {
    State s = add_state(other.accepting[q]);
    for (const auto& e : other.edges[q]) edges[s].push_back({e.digit, e.to + off});
    for (State t : other.epsilon[q]) epsilon[s].push_back(t + off);
  }
  return off;
}

namespace {

using Subset = std::vector<State>;

struct SubsetHash {
  std::size_t operator()(const Subset& s) const {
    std::uint64_t h = 1469598103934665603ull ^ s.size();
    for (State q : s) h = (h ^ q) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

void close_sparse(const Nfa& n, Subset& s) {
  std::vector<State> stack(s.begin(), s.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<State> out = s;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State t : n.epsilon[q]) {
      auto it = std::lower_bound(out.begin(), out.end(), t);
      if (it != out.end() && *it == t) continue;
      out.insert(it, t);
      stack.push_back(t);
    }
  }
  s = std::move(out);
}

}  // namespace

bool Nfa::accepts(const FiniteWord& w) const {
  Subset cur = initial;
  close_sparse(*this, cur);
  for (Digit a : w.digits) {
    Subset nxt;
    for (State q : cur)
      for (const auto& e : edges[q])
        if (e.digit == a) nxt.push_back(e.to);
    close_sparse(*this, nxt);
    cur = std::move(nxt);
  }
  for (State q : cur)
    if (accepting[q]) return true;
  return false;
}

bool Dfa::accepts(const FiniteWord& w) const {
  State q = initial;
  for (Digit a : w.digits) {
    if (a >= alphabet) return false;
    q = next(q, a);
  }
  return accepting[q];
}

Integer Dfa::count(std::size_t n) const {
  // ways[q] = number of words of the remaining length leading from q to acceptance.
  std::vector<Integer> ways(size());
  for (std::size_t q = 0; q < size(); ++q) ways[q] = accepting[q] ? 1 : 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Integer> nxt(size());
    for (std::size_t q = 0; q < size(); ++q)
      for (Digit a = 0; a < alphabet; ++a) nxt[q] += ways[next(static_cast<State>(q), a)];
    ways = std::move(nxt);
  }
  return ways[initial];
}

std::vector<FiniteWord> Dfa::words_of_length(std::size_t n) const {
  // Prune states that cannot reach acceptance in exactly the remaining number of steps.
  std::vector<std::vector<bool>> live(n + 1, std::vector<bool>(size(), false));
  for (std::size_t q = 0; q < size(); ++q) live[0][q] = accepting[q];
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t q = 0; q < size(); ++q)
      for (Digit a = 0; a < alphabet && !live[r][q]; ++a) live[r][q] = live[r - 1][next(static_cast<State>(q), a)];
  std::vector<FiniteWord> out;
  if (!live[n][initial]) return out;
  std::vector<Digit> buf;
  auto rec = [&](auto&& self, State q, std::size_t rem) -> void {
    if (rem == 0) {
      out.emplace_back(buf);
      return;
    }
    for (Digit a = 0; a < alphabet; ++a) {
      State t = next(q, a);
      if (!live[rem - 1][t]) continue;
      buf.push_back(a);
      self(self, t, rem - 1);
      buf.pop_back();
    }
  };
  rec(rec, initial, n);
  return out;
}

Dfa determinize(const Nfa& n, std::size_t max_states) {
  Dfa d;
  d.alphabet = n.alphabet;
  std::unordered_map<Subset, State, SubsetHash> index;
  std::deque<Subset> queue;
  auto intern = [&](Subset s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    State id = static_cast<State>(index.size());
    if (max_states && index.size() >= max_states)
      throw StateLimitExceeded("subset construction passed " + std::to_string(max_states) + " states");
    index.emplace(s, id);
    bool acc = false;
    for (State q : s) acc = acc || n.accepting[q];
    d.accepting.push_back(acc);
    d.delta.resize(d.accepting.size() * d.alphabet, 0);
    queue.push_back(std::move(s));
    return id;
  };
  bool has_epsilon = false;
  for (const auto& e : n.epsilon) has_epsilon = has_epsilon || !e.empty();
  Subset start = n.initial;
  close_sparse(n, start);
  d.initial = intern(start);
  State cur = 0;
  // stamp[q] == tick when q is already in the successor being collected.
  std::vector<std::size_t> stamp(n.size() * n.alphabet, 0);
  std::size_t tick = 0;
  std::vector<Subset> by_digit(n.alphabet);
  while (!queue.empty()) {
    Subset s = std::move(queue.front());
    queue.pop_front();
    ++tick;
    for (auto& b : by_digit) b.clear();
    for (State q : s)
      for (const auto& e : n.edges[q]) {
        std::size_t& st = stamp[std::size_t(e.to) * n.alphabet + e.digit];
        if (st == tick) continue;
        st = tick;
        by_digit[e.digit].push_back(e.to);
      }
    for (Digit a = 0; a < n.alphabet; ++a) {
      Subset next = by_digit[a];
      if (has_epsilon) {
        close_sparse(n, next);
      } else {
        std::sort(next.begin(), next.end());
      }
      State t = intern(std::move(next));
      d.delta[std::size_t(cur) * d.alphabet + a] = t;
    }
    ++cur;
  }
  return d;
}

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.alphabet);
  for (std::size_t q = 0; q < d.size(); ++q) n.add_state(d.accepting[q]);
  for (std::size_t q = 0; q < d.size(); ++q)
    for (Digit a = 0; a < d.alphabet; ++a) n.add_edge(static_cast<State>(q), a, d.next(static_cast<State>(q), a));
  n.initial.push_back(d.initial);
  return n;
}

Nfa reverse(const Nfa& n) {
  Nfa r(n.alphabet);
  for (std::size_t q = 0; q < n.size(); ++q) r.add_state(false);
  for (State q : n.initial) r.accepting[q] = true;
  for (std::size_t q = 0; q < n.size(); ++q) {
    if (n.accepting[q]) r.initial.push_back(static_cast<State>(q));
    for (const auto& e : n.edges[q]) r.add_edge(e.to, e.digit, static_cast<State>(q));
    for (State t : n.epsilon[q]) r.add_epsilon(t, static_cast<State>(q));
  }
  return r;
}

Dfa reverse_determinize(const Dfa& d, std::size_t max_states) {
  return determinize(reverse(to_nfa(d)), max_states);
}

namespace {

// Hopcroft refinement of the reachable states into Myhill-Nerode classes. order[k] is the k-th reachable
// state and reach maps states back to k. Returns the block of each k.
std::vector<std::size_t> refine(const Dfa& d, const std::vector<State>& order, const std::vector<int>& reach) {
  const unsigned A = d.alphabet;
  const std::size_t n = order.size();
  // Predecessors per digit, CSR layout.
  std::vector<std::size_t> start(A * (n + 1) + 1, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (Digit a = 0; a < A; ++a) ++start[a * (n + 1) + std::size_t(reach[d.next(order[k], a)]) + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<std::size_t> pred(n * A), fill(start.begin(), start.end() - 1);
  for (std::size_t k = 0; k < n; ++k)
    for (Digit a = 0; a < A; ++a) pred[fill[a * (n + 1) + std::size_t(reach[d.next(order[k], a)])]++] = k;

  // Refinable partition: elems is a permutation, each block a contiguous range, marked states in front.
  std::vector<std::size_t> elems(n), loc(n), blk(n), first, end, mid;
  std::size_t pos = 0;
  for (bool acc : {false, true}) {
    std::size_t b = first.size(), f = pos;
    for (std::size_t k = 0; k < n; ++k)
      if (d.accepting[order[k]] == acc) {
        elems[pos] = k;
        loc[k] = pos++;
        blk[k] = b;
      }
    if (pos > f) {
      first.push_back(f);
      end.push_back(pos);
      mid.push_back(f);
    }
  }
  std::vector<char> waiting;
  std::vector<std::pair<std::size_t, Digit>> work;
  auto push = [&](std::size_t b, Digit a) {
    if (waiting.size() < (b + 1) * A) waiting.resize((b + 1) * A, 0);
    if (!waiting[b * A + a]) {
      waiting[b * A + a] = 1;
      work.emplace_back(b, a);
    }
  };
  for (std::size_t b = 0; b < first.size(); ++b)
    for (Digit a = 0; a < A; ++a) push(b, a);
  std::vector<std::size_t> splitter, touched;
  while (!work.empty()) {
    auto [B, a] = work.back();
    work.pop_back();
    waiting[B * A + a] = 0;
    splitter.assign(elems.begin() + std::ptrdiff_t(first[B]), elems.begin() + std::ptrdiff_t(end[B]));
    touched.clear();
    for (std::size_t t : splitter)
      for (std::size_t i = start[a * (n + 1) + t]; i < start[a * (n + 1) + t + 1]; ++i) {
        std::size_t p = pred[i], b = blk[p];
        if (loc[p] < mid[b]) continue;
        if (mid[b] == first[b]) touched.push_back(b);
        std::size_t q = elems[mid[b]];
        std::swap(elems[loc[p]], elems[mid[b]]);
        loc[q] = loc[p];
        loc[p] = mid[b]++;
      }
    for (std::size_t b : touched) {
      if (mid[b] == end[b]) {
        mid[b] = first[b];
        continue;
      }
      std::size_t nb = first.size();
      first.push_back(first[b]);
      end.push_back(mid[b]);
      mid.push_back(first[b]);
      first[b] = mid[b];
      for (std::size_t i = first[nb]; i < end[nb]; ++i) blk[elems[i]] = nb;
      for (Digit c = 0; c < A; ++c) {
        if (waiting.size() > b * A + c && waiting[b * A + c]) {
          push(nb, c);
        } else {
          push(end[nb] - first[nb] <= end[b] - first[b] ? nb : b, c);
        }
      }
    }
  }
  return blk;
}

}  // namespace

Dfa minimize(const Dfa& d) {
  const unsigned A = d.alphabet;
  // Reachable part.
  std::vector<int> reach(d.size(), -1);
  std::vector<State> order{d.initial};
  reach[d.initial] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (Digit a = 0; a < A; ++a) {
      State t = d.next(order[k], a);
      if (reach[t] < 0) {
        reach[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();
  std::vector<std::size_t> cls = refine(d, order, reach);
  const std::size_t classes = *std::max_element(cls.begin(), cls.end()) + 1;
  // Breadth-first renumbering over classes.
  std::vector<std::size_t> rep_of(classes, n);
  for (std::size_t k = 0; k < n; ++k)
    if (rep_of[cls[k]] == n) rep_of[cls[k]] = k;
  std::vector<int> id(classes, -1);
  std::vector<std::size_t> bfs{cls[0]};
  id[cls[0]] = 0;
  for (std::size_t k = 0; k < bfs.size(); ++k)
    for (Digit a = 0; a < A; ++a) {
      std::size_t c = cls[reach[d.next(order[rep_of[bfs[k]]], a)]];
      if (id[c] < 0) {
        id[c] = static_cast<int>(bfs.size());
        bfs.push_back(c);
      }
    }
  Dfa m;
  m.alphabet = A;
  m.initial = 0;
  m.accepting.resize(bfs.size());
  m.delta.resize(bfs.size() * A);
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    State src = order[rep_of[bfs[k]]];
    m.accepting[k] = d.accepting[src];
    for (Digit a = 0; a < A; ++a) m.delta[k * A + a] = static_cast<State>(id[cls[reach[d.next(src, a)]]]);
  }
  return m;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  c.accepting.flip();
  return c;
}

Dfa with_alphabet(const Dfa& d, unsigned alphabet) {
  if (alphabet == d.alphabet) return d;
  if (alphabet < d.alphabet) throw std::invalid_argument("with_alphabet: cannot shrink the alphabet");
  Dfa e;
  e.alphabet = alphabet;
  e.initial = d.initial;
  std::size_t sink = d.size();
  e.accepting = d.accepting;
  e.accepting.push_back(false);
  e.delta.assign((sink + 1) * alphabet, static_cast<State>(sink));
  for (std::size_t q = 0; q < sink; ++q)
    for (Digit a = 0; a < d.alphabet; ++a) e.delta[q * alphabet + a] = d.next(static_cast<State>(q), a);
  return e;
}

namespace {

template <class Op>
Dfa product(Dfa a, Dfa b, Op op) {
  unsigned A = std::max(a.alphabet, b.alphabet);
  a = with_alphabet(a, A);
  b = with_alphabet(b, A);
  Dfa p;
  p.alphabet = A;
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> states;
  auto intern = [&](State x, State y) {
    auto [it, fresh] = index.emplace((std::uint64_t(x) << 32) | y, static_cast<State>(states.size()));
    if (fresh) {
      states.emplace_back(x, y);
      p.accepting.push_back(op(a.accepting[x], b.accepting[y]));
    }
    return it->second;
  };
  p.initial = intern(a.initial, b.initial);
  for (std::size_t k = 0; k < states.size(); ++k) {
    auto [x, y] = states[k];
    for (Digit c = 0; c < A; ++c) {
      State t = intern(a.next(x, c), b.next(y, c));
      p.delta.push_back(t);
    }
  }
  return p;
}

}  // namespace

Dfa intersection(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}
Dfa union_of(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}
Dfa difference(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && !y; });
}

bool equivalent(const Dfa& a, const Dfa& b) {
  Dfa x = product(a, b, [](bool p, bool q) { return p != q; });
  // Accepting state reachable?
  std::vector<bool> seen(x.size(), false);
  std::vector<State> stack{x.initial};
  seen[x.initial] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (x.accepting[q]) return false;
    for (Digit c = 0; c < x.alphabet; ++c) {
      State t = x.next(q, c);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return true;
}

Dfa empty_language(unsigned alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.accepting = {false};
  d.delta.assign(alphabet, 0);
  return d;
}

Dfa single_word(const FiniteWord& w, unsigned alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  std::size_t n = w.size();
  State sink = static_cast<State>(n + 1);
  d.accepting.assign(n + 2, false);
  d.accepting[n] = true;
  d.delta.assign((n + 2) * alphabet, sink);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] >= alphabet) throw std::invalid_argument("single_word: digit outside the alphabet");
    d.delta[k * alphabet + w[k]] = static_cast<State>(k + 1);
  }
  return d;
}

Dfa strip_leading_zeros(const Dfa& d) {
  // ε ∪ [1..C]·A*
  Dfa g;
  g.alphabet = d.alphabet;
  g.accepting = {true, true, false};
  g.delta.assign(3 * d.alphabet, 1);
  g.delta[0] = 2;
  for (Digit a = 0; a < d.alphabet; ++a) g.delta[2 * d.alphabet + a] = 2;
  return minimize(intersection(d, g));
}

Dfa max_words_automaton(const Dfa& d) {
  const unsigned A = d.alphabet;
  const std::size_t Q = d.size();
  // B reads w along the first component and guesses a same-length word u ∈ L in the second;
  // the flag records whether u has already become lexicographically larger.
  auto id = [&](std::size_t p, std::size_t q, int larger) { return static_cast<State>((p * Q + q) * 2 + larger); };
  Nfa b(A);
  for (std::size_t k = 0; k < Q * Q * 2; ++k) b.add_state(false);
  for (std::size_t p = 0; p < Q; ++p)
    for (std::size_t q = 0; q < Q; ++q) {
      if (d.accepting[p] && d.accepting[q]) b.accepting[id(p, q, 1)] = true;
      for (Digit a = 0; a < A; ++a) {
        std::size_t p2 = d.next(static_cast<State>(p), a);
        for (Digit g = 0; g < A; ++g) {
          std::size_t q2 = d.next(static_cast<State>(q), g);
          if (g == a) b.add_edge(id(p, q, 0), a, id(p2, q2, 0));
          if (g > a) b.add_edge(id(p, q, 0), a, id(p2, q2, 1));
          b.add_edge(id(p, q, 1), a, id(p2, q2, 1));
        }
      }
    }
  b.initial.push_back(id(d.initial, d.initial, 0));
  return minimize(difference(d, determinize(b)));
}

std::string to_dot(const Dfa& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  start [shape=point];\n  start -> " << d.initial << ";\n";
  for (std::size_t q = 0; q < d.size(); ++q)
    if (d.accepting[q]) os << "  " << q << " [shape=doublecircle];\n";
  for (std::size_t q = 0; q < d.size(); ++q) {
    std::map<State, std::vector<Digit>> grouped;
    for (Digit a = 0; a < d.alphabet; ++a) grouped[d.next(static_cast<State>(q), a)].push_back(a);
    for (const auto& [t, ds] : grouped) {
      os << "  " << q << " -> " << t << " [label=\"";
      for (std::size_t k = 0; k < ds.size(); ++k) os << (k ? "," : "") << ds[k];
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const Dfa& d) {
  nlohmann::ordered_json j;
  j["alphabet"] = d.alphabet;
  j["states"] = d.size();
  j["initial"] = d.initial;
  auto acc = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < d.size(); ++q)
    if (d.accepting[q]) acc.push_back(q);
  j["accepting"] = acc;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t q = 0; q < d.size(); ++q)
    for (Digit a = 0; a < d.alphabet; ++a) edges.push_back({q, a, d.next(static_cast<State>(q), a)});
  j["edges"] = edges;
  return j.dump() + "\n";
}

std::string diff_with_oracle(const Dfa& d, const PositionalSystem& sys, std::size_t max_len) {
  std::vector<Integer> U = sys.terms(max_len + 1);
  // live[r][q]: some word of length r leads from q to acceptance.
  std::vector<std::vector<bool>> live(max_len + 1, std::vector<bool>(d.size()));
  for (std::size_t q = 0; q < d.size(); ++q) live[0][q] = d.accepting[q];
  for (std::size_t r = 1; r <= max_len; ++r)
    for (std::size_t q = 0; q < d.size(); ++q)
      for (Digit a = 0; a < d.alphabet && !live[r][q]; ++a) live[r][q] = live[r - 1][d.next(static_cast<State>(q), a)];

  // The padded greedy words of length r with value below B (B ≤ U_r) are, by the greedy algorithm, the
  // words a·s with a = ⌊x/U_{r−1}⌋ and s the padded greedy word of x − a·U_{r−1}. Check that the DFA
  // accepts exactly those from state q.
  std::map<std::tuple<State, std::size_t, Integer>, bool> memo;
  std::vector<Digit> path;
  std::string failure;
  auto check = [&](auto&& self, State q, std::size_t r, const Integer& B) -> bool {
    if (r == 0) {
      if (d.accepting[q] != (B > 0)) {
        failure = "word " + FiniteWord(path).display() + (d.accepting[q] ? " accepted but not greedy" : " greedy but rejected");
        return false;
      }
      return true;
    }
    auto key = std::make_tuple(q, r, B);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = true;
    const Integer& below = U[r - 1];
    for (Digit a = 0; ok; ++a) {
      Integer rest = B - Integer(a) * below;
      if (rest <= 0 && a >= d.alphabet) break;
      if (rest > below) rest = below;
      if (a >= d.alphabet) {
        path.push_back(a);
        failure = "greedy words starting with " + FiniteWord(path).display() + " use a digit outside the alphabet";
        ok = false;
        break;
      }
      State t = d.next(q, a);
      path.push_back(a);
      if (rest <= 0) {
        if (live[r - 1][t]) {
          failure = "some word with prefix " + FiniteWord(path).display() + " of length " +
                    std::to_string(path.size() + r - 1) + " is accepted but not greedy";
          ok = false;
        }
      } else {
        ok = self(self, t, r - 1, rest);
      }
      path.pop_back();
    }
    memo.emplace(key, ok);
    return ok;
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    path.clear();
    if (!check(check, d.initial, len, U[len])) return "length " + std::to_string(len) + ": " + failure;
  }
  return {};
}

}  // namespace numsys
