#include "dilator/shift_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilator {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t(1) << 24;

constexpr const char* kSymbolChars = "0123456789abcdefghijklmnopqrstuvwxyz";

int symbol_from_char(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  throw std::invalid_argument(std::string("bad word symbol '") + c + "'");
}

}  // namespace

ShiftSystem::ShiftSystem(std::vector<int> alphabets) : alphabets_(std::move(alphabets)) {
  if (alphabets_.empty()) throw std::invalid_argument("shift system needs rank >= 1");
  for (int d : alphabets_) {
    if (d < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (d > 36) throw std::invalid_argument("alphabet size must be <= 36");
  }
}

Word::Word(std::vector<std::vector<int>> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("word needs rank >= 1");
}

Word Word::empty(int rank) {
  return Word(std::vector<std::vector<int>>(static_cast<std::size_t>(rank)));
}

LatticeElement Word::lengths() const {
  std::vector<long long> n;
  n.reserve(symbols_.size());
  for (const auto& f : symbols_) n.push_back(static_cast<long long>(f.size()));
  return LatticeElement(std::move(n));
}

Word Word::truncated(const LatticeElement& depth) const {
  if (depth.rank() != rank()) throw std::invalid_argument("word rank mismatch");
  std::vector<std::vector<int>> out(symbols_.size());
  for (int i = 0; i < rank(); ++i) {
    const auto& f = factor(i);
    const long long n = depth[i];
    if (n < 0 || n > static_cast<long long>(f.size()))
      throw std::invalid_argument("word too short for requested truncation");
    out[static_cast<std::size_t>(i)].assign(f.begin(), f.begin() + n);
  }
  return Word(std::move(out));
}

Word Word::dropped(const LatticeElement& t) const {
  if (t.rank() != rank()) throw std::invalid_argument("word rank mismatch");
  std::vector<std::vector<int>> out(symbols_.size());
  for (int i = 0; i < rank(); ++i) {
    const auto& f = factor(i);
    const long long n = t[i];
    if (n < 0 || n > static_cast<long long>(f.size()))
      throw std::invalid_argument("word too short to drop prefix");
    out[static_cast<std::size_t>(i)].assign(f.begin() + n, f.end());
  }
  return Word(std::move(out));
}

Word Word::prepended(int factor, int symbol) const {
  std::vector<std::vector<int>> out(symbols_);
  auto& f = out[static_cast<std::size_t>(factor)];
  f.insert(f.begin(), symbol);
  return Word(std::move(out));
}

Word Word::prepend_word(const Word& prefix) const {
  if (prefix.rank() != rank()) throw std::invalid_argument("word rank mismatch");
  std::vector<std::vector<int>> out(symbols_.size());
  for (int i = 0; i < rank(); ++i) {
    const auto& p = prefix.factor(i);
    const auto& f = factor(i);
    auto& o = out[static_cast<std::size_t>(i)];
    o.reserve(p.size() + f.size());
    o.insert(o.end(), p.begin(), p.end());
    o.insert(o.end(), f.begin(), f.end());
  }
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += '|';
    for (int s : factor(i)) out += kSymbolChars[static_cast<std::size_t>(s)];
  }
  return out;
}

Word Word::parse(const std::string& text, const ShiftSystem& sys) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(sys.rank()));
  int factor = 0;
  for (char c : text) {
    if (c == '|') {
      if (++factor >= sys.rank()) throw std::invalid_argument("word has too many factors");
      continue;
    }
    const int s = symbol_from_char(c);
    if (s >= sys.alphabet(factor))
      throw std::invalid_argument("word symbol out of alphabet range");
    out[static_cast<std::size_t>(factor)].push_back(s);
  }
  if (factor + 1 != sys.rank()) throw std::invalid_argument("word has too few factors");
  return Word(std::move(out));
}

WordSpace::WordSpace(const ShiftSystem& sys, LatticeElement lengths)
    : sys_(sys), lengths_(std::move(lengths)), size_(1) {
  if (lengths_.rank() != sys_.rank()) throw std::invalid_argument("lengths rank mismatch");
  if (!lengths_.is_semigroup()) throw std::invalid_argument("lengths must be >= 0");
  for (int i = 0; i < sys_.rank(); ++i) {
    for (long long j = 0; j < lengths_[i]; ++j) {
      size_ *= static_cast<std::size_t>(sys_.alphabet(i));
      if (size_ > kMaxTableSize) throw std::invalid_argument("word space too large");
    }
  }
}

Word WordSpace::word_at(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("word index out of range");
  std::vector<std::vector<int>> symbols(static_cast<std::size_t>(sys_.rank()));
  // Factor 0, position 0 is the most significant digit.
  for (int i = sys_.rank() - 1; i >= 0; --i) {
    const int d = sys_.alphabet(i);
    auto& f = symbols[static_cast<std::size_t>(i)];
    f.assign(static_cast<std::size_t>(lengths_[i]), 0);
    for (long long j = lengths_[i] - 1; j >= 0; --j) {
      f[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(d));
      index /= static_cast<std::size_t>(d);
    }
  }
  return Word(std::move(symbols));
}

std::size_t WordSpace::index_of(const Word& w) const {
  if (w.lengths() != lengths_) throw std::invalid_argument("word lengths mismatch");
  std::size_t index = 0;
  for (int i = 0; i < sys_.rank(); ++i) {
    const auto d = static_cast<std::size_t>(sys_.alphabet(i));
    for (int s : w.factor(i)) {
      if (s < 0 || static_cast<std::size_t>(s) >= d)
        throw std::invalid_argument("word symbol out of alphabet range");
      index = index * d + static_cast<std::size_t>(s);
    }
  }
  return index;
}

CylinderFunction::CylinderFunction(ShiftSystem sys, LatticeElement depth,
                                   std::vector<Rational> table)
    : sys_(std::move(sys)), depth_(std::move(depth)), table_(std::move(table)) {
  const WordSpace ws(sys_, depth_);
  if (table_.size() != ws.size())
    throw std::invalid_argument("cylinder table size does not match depth");
}

CylinderFunction CylinderFunction::constant(const ShiftSystem& sys, const Rational& value) {
  return CylinderFunction(sys, LatticeElement::zero(sys.rank()), {value});
}

CylinderFunction CylinderFunction::indicator(const ShiftSystem& sys, const Word& w) {
  const WordSpace ws(sys, w.lengths());
  std::vector<Rational> table(ws.size(), Rational(0));
  table[ws.index_of(w)] = 1;
  return CylinderFunction(sys, w.lengths(), std::move(table));
}

Rational CylinderFunction::evaluate(const Word& w) const {
  const WordSpace ws(sys_, depth_);
  return table_[ws.index_of(w.truncated(depth_))];
}

CylinderFunction CylinderFunction::raised(const LatticeElement& new_depth) const {
  if (new_depth == depth_) return *this;
  if (!depth_.leq(new_depth))
    throw std::invalid_argument("raised: new depth must dominate current depth");
  const WordSpace target(sys_, new_depth);
  std::vector<Rational> table(target.size());
  const WordSpace source(sys_, depth_);
  for (std::size_t i = 0; i < target.size(); ++i)
    table[i] = table_[source.index_of(target.word_at(i).truncated(depth_))];
  return CylinderFunction(sys_, new_depth, std::move(table));
}

CylinderFunction CylinderFunction::shift_pullback(const LatticeElement& t) const {
  if (!t.is_semigroup()) throw std::invalid_argument("shift_pullback needs a semigroup element");
  const LatticeElement new_depth = depth_ + t;
  const WordSpace target(sys_, new_depth);
  const WordSpace source(sys_, depth_);
  std::vector<Rational> table(target.size());
  for (std::size_t i = 0; i < target.size(); ++i)
    table[i] = table_[source.index_of(target.word_at(i).dropped(t).truncated(depth_))];
  return CylinderFunction(sys_, new_depth, std::move(table));
}

bool CylinderFunction::nonnegative() const {
  return std::all_of(table_.begin(), table_.end(), [](const Rational& v) { return v >= 0; });
}

bool CylinderFunction::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Rational& v) { return v == 0; });
}

CylinderFunction CylinderFunction::reduced() const {
  CylinderFunction cur = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < sys_.rank(); ++i) {
      if (cur.depth_[i] == 0) continue;
      std::vector<long long> lower_coords(cur.depth_.coords());
      --lower_coords[static_cast<std::size_t>(i)];
      const LatticeElement lower(lower_coords);
      const WordSpace lo(sys_, lower);
      const WordSpace hi(sys_, cur.depth_);
      std::vector<Rational> table(lo.size());
      bool constant_on_last = true;
      for (std::size_t j = 0; j < lo.size() && constant_on_last; ++j) {
        const Word base = lo.word_at(j);
        Rational first;
        for (int c = 0; c < sys_.alphabet(i); ++c) {
          std::vector<std::vector<int>> sym;
          sym.reserve(static_cast<std::size_t>(base.rank()));
          for (int f = 0; f < base.rank(); ++f) sym.push_back(base.factor(f));
          sym[static_cast<std::size_t>(i)].push_back(c);
          const Rational v = cur.table_[hi.index_of(Word(std::move(sym)))];
          if (c == 0) {
            first = v;
          } else if (v != first) {
            constant_on_last = false;
            break;
          }
        }
        table[j] = first;
      }
      if (constant_on_last) {
        cur = CylinderFunction(sys_, lower, std::move(table));
        changed = true;
      }
    }
  }
  return cur;
}

namespace {
void require_same_system(const CylinderFunction& f, const CylinderFunction& g) {
  if (!(f.system() == g.system()))
    throw std::invalid_argument("cylinder functions live on different shift systems");
}
}  // namespace

CylinderFunction& CylinderFunction::operator+=(const CylinderFunction& g) {
  require_same_system(*this, g);
  const LatticeElement d = join(depth_, g.depth());
  CylinderFunction a = raised(d);
  const CylinderFunction b = g.raised(d);
  for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] += b.table_[i];
  *this = std::move(a);
  return *this;
}

CylinderFunction& CylinderFunction::operator-=(const CylinderFunction& g) {
  require_same_system(*this, g);
  const LatticeElement d = join(depth_, g.depth());
  CylinderFunction a = raised(d);
  const CylinderFunction b = g.raised(d);
  for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] -= b.table_[i];
  *this = std::move(a);
  return *this;
}

CylinderFunction& CylinderFunction::operator*=(const CylinderFunction& g) {
  require_same_system(*this, g);
  const LatticeElement d = join(depth_, g.depth());
  CylinderFunction a = raised(d);
  const CylinderFunction b = g.raised(d);
  for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] *= b.table_[i];
  *this = std::move(a);
  return *this;
}

CylinderFunction& CylinderFunction::operator*=(const Rational& c) {
  for (auto& v : table_) v *= c;
  return *this;
}

bool CylinderFunction::operator==(const CylinderFunction& other) const {
  if (!(sys_ == other.sys_)) return false;
  const LatticeElement d = join(depth_, other.depth_);
  return raised(d).table_ == other.raised(d).table_;
}

bool independent_of_prefix(const CylinderFunction& f, const LatticeElement& t) {
  if (!t.is_semigroup()) throw std::invalid_argument("prefix length must be a semigroup element");
  const LatticeElement d = join(f.depth(), t);
  const CylinderFunction g = f.raised(d);
  const WordSpace ws(g.system(), d);
  const WordSpace suffixes(g.system(), d - t);
  std::vector<char> seen(suffixes.size(), 0);
  std::vector<Rational> value(suffixes.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const std::size_t j = suffixes.index_of(ws.word_at(i).dropped(t));
    if (!seen[j]) {
      seen[j] = 1;
      value[j] = g.table()[i];
    } else if (value[j] != g.table()[i]) {
      return false;
    }
  }
  return true;
}

std::optional<CylinderFunction> shift_preimage(const CylinderFunction& f, const LatticeElement& t) {
  if (!independent_of_prefix(f, t)) return std::nullopt;
  const LatticeElement d = join(f.depth(), t);
  const CylinderFunction g = f.raised(d);
  const WordSpace suffixes(g.system(), d - t);
  std::vector<Rational> table(suffixes.size());
  const WordSpace ws(g.system(), d);
  for (std::size_t j = 0; j < suffixes.size(); ++j) {
    // Any prefix works; take all-zero symbols.
    Word w = suffixes.word_at(j);
    for (int i = 0; i < g.system().rank(); ++i)
      for (long long p = 0; p < t[i]; ++p) w = w.prepended(i, 0);
    table[j] = g.table()[ws.index_of(w)];
  }
  return CylinderFunction(g.system(), d - t, std::move(table));
}

CylinderFunction pointwise_quotient(const CylinderFunction& f, const CylinderFunction& g) {
  if (!(f.system() == g.system()))
    throw std::invalid_argument("cylinder functions live on different shift systems");
  const LatticeElement d = join(f.depth(), g.depth());
  const CylinderFunction a = f.raised(d);
  const CylinderFunction b = g.raised(d);
  std::vector<Rational> table(a.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (b.table()[i] == 0) throw std::domain_error("pointwise quotient by a zero entry");
    table[i] = a.table()[i] / b.table()[i];
  }
  return CylinderFunction(f.system(), d, std::move(table));
}

std::vector<CylinderFunction> indicator_basis(const ShiftSystem& sys, const LatticeElement& depth) {
  const WordSpace ws(sys, depth);
  std::vector<CylinderFunction> out;
  out.reserve(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i)
    out.push_back(CylinderFunction::indicator(sys, ws.word_at(i)));
  return out;
}

}  // namespace dilator
