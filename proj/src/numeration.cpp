#include "numsys/numeration.hpp"

#include <algorithm>
#include <charconv>

namespace numsys {

FiniteWord FiniteWord::parse(std::string_view text) {
  FiniteWord w;
  if (text.empty() || text == "ε") return w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      if (dot == std::string_view::npos) dot = text.size();
      Digit d = 0;
      auto part = text.substr(pos, dot - pos);
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
        throw InvalidSystem("bad digit in word '" + std::string(text) + "'");
      w.digits.push_back(d);
      pos = dot + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidSystem("bad digit in word '" + std::string(text) + "'");
    w.digits.push_back(static_cast<Digit>(c - '0'));
  }
  return w;
}

FiniteWord FiniteWord::suffix(std::size_t n) const {
  n = std::min(n, digits.size());
  return FiniteWord(std::vector<Digit>(digits.end() - n, digits.end()));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  n = std::min(n, digits.size());
  return FiniteWord(std::vector<Digit>(digits.begin(), digits.begin() + n));
}

std::string FiniteWord::str() const {
  bool wide = std::any_of(digits.begin(), digits.end(), [](Digit d) { return d > 9; });
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wide) {
      if (i) s += '.';
      s += std::to_string(digits[i]);
    } else {
      s += static_cast<char>('0' + digits[i]);
    }
  }
  return s;
}

std::string FiniteWord::display() const { return empty() ? "ε" : str(); }

FiniteWord operator+(const FiniteWord& a, const FiniteWord& b) {
  FiniteWord r = a;
  r.digits.insert(r.digits.end(), b.digits.begin(), b.digits.end());
  return r;
}

FiniteWord power(const FiniteWord& w, std::size_t k) {
  FiniteWord r;
  for (std::size_t i = 0; i < k; ++i) r.digits.insert(r.digits.end(), w.digits.begin(), w.digits.end());
  return r;
}

FiniteWord zeros(std::size_t n) { return FiniteWord(std::vector<Digit>(n, 0)); }

PositionalSystem::PositionalSystem(std::vector<Integer> recurrence, std::vector<Integer> initial, std::string name)
    : recurrence_(std::move(recurrence)), initial_(std::move(initial)), name_(std::move(name)) {
  if (recurrence_.empty()) throw InvalidSystem("recurrence must have at least one coefficient");
  if (initial_.size() != recurrence_.size())
    throw InvalidSystem("initial must have exactly " + std::to_string(recurrence_.size()) + " terms");
  if (initial_[0] != 1) throw InvalidSystem("initial[0] must be 1");
  for (std::size_t i = 1; i < initial_.size(); ++i)
    if (initial_[i] <= initial_[i - 1]) throw NotIncreasing("initial terms must be strictly increasing");
  cache_ = initial_;
}

PositionalSystem::PositionalSystem(const PositionalSystem& o)
    : recurrence_(o.recurrence_), initial_(o.initial_), name_(o.name_) {
  std::lock_guard<std::mutex> g(*o.mu_);
  cache_ = o.cache_;
}

PositionalSystem& PositionalSystem::operator=(const PositionalSystem& o) {
  if (this == &o) return *this;
  std::vector<Integer> c;
  {
    std::lock_guard<std::mutex> g(*o.mu_);
    c = o.cache_;
  }
  recurrence_ = o.recurrence_;
  initial_ = o.initial_;
  name_ = o.name_;
  std::lock_guard<std::mutex> g(*mu_);
  cache_ = std::move(c);
  return *this;
}

IntPolynomial PositionalSystem::characteristic_polynomial() const {
  std::size_t m = order();
  std::vector<Integer> c(m + 1);
  c[m] = 1;
  for (std::size_t j = 0; j < m; ++j) c[j] = -recurrence_[m - 1 - j];
  return IntPolynomial(std::move(c));
}

void PositionalSystem::extend_locked(std::size_t n) const {
  std::size_t m = order();
  while (cache_.size() <= n) {
    std::size_t k = cache_.size();
    Integer v = 0;
    for (std::size_t j = 0; j < m; ++j) v += recurrence_[m - 1 - j] * cache_[k - m + j];
    if (v <= cache_.back())
      throw NotIncreasing("U_" + std::to_string(k) + " = " + v.get_str() + " is not larger than U_" +
                          std::to_string(k - 1));
    cache_.push_back(std::move(v));
  }
}

Integer PositionalSystem::term(std::size_t n) const {
  std::lock_guard<std::mutex> g(*mu_);
  extend_locked(n);
  return cache_[n];
}

std::vector<Integer> PositionalSystem::terms(std::size_t count) const {
  std::lock_guard<std::mutex> g(*mu_);
  if (count) extend_locked(count - 1);
  return std::vector<Integer>(cache_.begin(), cache_.begin() + count);
}

Integer val(const PositionalSystem& sys, const FiniteWord& w) {
  Integer v = 0;
  std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    Digit d = w[n - 1 - k];
    if (d) v += sys.term(k) * d;
  }
  return v;
}

FiniteWord rep(const PositionalSystem& sys, const Integer& x) {
  if (x < 0) throw OutOfRange("rep: negative argument");
  FiniteWord w;
  if (x == 0) return w;
  std::size_t len = 1;
  while (sys.term(len) <= x) ++len;
  Integer r = x;
  for (std::size_t n = len; n-- > 0;) {
    Integer u = sys.term(n);
    Integer a = r / u;
    r -= a * u;
    if (!a.fits_uint_p()) throw OutOfRange("rep: digit too large");
    w.digits.push_back(static_cast<Digit>(a.get_ui()));
  }
  return w;
}

bool is_greedy(const PositionalSystem& sys, const FiniteWord& w) {
  Integer v = 0;
  std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    Digit d = w[n - 1 - k];
    if (d) v += sys.term(k) * d;
    if (v >= sys.term(k + 1)) return false;
  }
  return true;
}

FiniteWord max_word(const PositionalSystem& sys, std::size_t n) {
  if (n == 0) return {};
  FiniteWord w = rep(sys, sys.term(n) - 1);
  return zeros(n - w.size()) + w;
}

FiniteWord rep_ic(const PositionalSystem& sys, unsigned p, unsigned i, const Integer& c, std::size_t n) {
  if (i >= p || n < 1) throw OutOfRange("rep_ic: need 0 <= i < p and n >= 1");
  std::size_t len = n * p - i;
  Integer u = sys.term(len);
  if (c < 1 || c > u) throw OutOfRange("rep_ic: c must lie in [1, U_{np-i}]");
  FiniteWord w = rep(sys, u - c);
  return zeros(len - w.size()) + w;
}

std::set<FiniteWord> oracle_language(const PositionalSystem& sys, std::size_t max_len) {
  std::set<FiniteWord> out;
  out.insert(FiniteWord{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    Integer top = sys.term(len);
    for (Integer x = 0; x < top; ++x) {
      FiniteWord w = rep(sys, x);
      out.insert(zeros(len - w.size()) + w);
    }
  }
  return out;
}

Digit alphabet_max(const PositionalSystem& sys, std::size_t horizon) {
  Digit best = 0;
  for (std::size_t n = 0; n < horizon; ++n) {
    Integer a = sys.term(n + 1), b = sys.term(n);
    Integer q = (a + b - 1) / b - 1;
    if (!q.fits_uint_p()) throw OutOfRange("alphabet bound too large");
    best = std::max<Digit>(best, static_cast<Digit>(q.get_ui()));
  }
  return best;
}

}  // namespace numsys
