#include "nildist/word.hpp"

#include <cctype>
#include <limits>

#include "nildist/error.hpp"

namespace nildist {

WordExpr WordExpr::gen(std::size_t g) {
  WordExpr e;
  e.kind = Kind::Generator;
  e.generator = g;
  return e;
}

WordExpr WordExpr::inverse(WordExpr child) {
  WordExpr e;
  e.kind = Kind::Inverse;
  e.children.push_back(std::move(child));
  return e;
}

WordExpr WordExpr::power(WordExpr child, std::int64_t n) {
  WordExpr e;
  e.kind = Kind::Power;
  e.exponent = n;
  e.children.push_back(std::move(child));
  return e;
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
  WordExpr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return e;
}

WordExpr WordExpr::commutator(WordExpr left, WordExpr right) {
  WordExpr e;
  e.kind = Kind::Commutator;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Presentation& p) : text_(text), p_(p) {}

  WordExpr parse_all() {
    WordExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '(' ||
           ch == '[' || ch == '1';
  }

  WordExpr expr() {
    std::vector<WordExpr> factors;
    while (at_factor_start()) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    return WordExpr::product(std::move(factors));
  }

  WordExpr factor() {
    WordExpr a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return WordExpr::power(std::move(a), integer());
    }
    return a;
  }

  WordExpr atom() {
    skip_space();
    std::size_t start = pos_;
    char ch = text_[pos_];
    if (ch == '1') {
      ++pos_;
      return WordExpr::product();
    }
    if (ch == '(') {
      ++pos_;
      WordExpr inner = expr();
      expect(')');
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      std::vector<WordExpr> parts;
      parts.push_back(expr());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(expr());
        skip_space();
      }
      if (parts.size() < 2) {
        throw ParseError("commutator needs at least two entries", start);
      }
      expect(']');
      WordExpr acc = std::move(parts.back());
      for (std::size_t i = parts.size() - 1; i-- > 0;) {
        acc = WordExpr::commutator(std::move(parts[i]), std::move(acc));
      }
      return acc;
    }
    ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = p_.generator_index(name);
    if (!idx) {
      throw ParseError("unknown generator '" + std::string(name) + "'", start);
    }
    return WordExpr::gen(*idx);
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer exponent", pos_);
    }
    // Accumulate as a negative number so INT64_MIN is representable.
    std::int64_t value = 0;
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int digit = text_[pos_] - '0';
      if (value < (kMin + digit) / 10) {
        throw ParseError("exponent overflow", start);
      }
      value = value * 10 - digit;
      ++pos_;
    }
    if (negative) return value;
    if (value == kMin) throw ParseError("exponent overflow", start);
    return -value;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

void append_flat(const WordExpr& e, Word& out) {
  using Kind = WordExpr::Kind;
  switch (e.kind) {
    case Kind::Generator:
      out.push_back({e.generator, 1});
      return;
    case Kind::Inverse: {
      Word inner = flatten(e.children[0]);
      Word inv = inverse(inner);
      out.insert(out.end(), inv.begin(), inv.end());
      return;
    }
    case Kind::Power: {
      Word inner = flatten(e.children[0]);
      if (e.exponent < 0) inner = inverse(inner);
      std::uint64_t n = e.exponent < 0
                            ? static_cast<std::uint64_t>(-(e.exponent + 1)) + 1
                            : static_cast<std::uint64_t>(e.exponent);
      for (std::uint64_t i = 0; i < n; ++i) {
        out.insert(out.end(), inner.begin(), inner.end());
      }
      return;
    }
    case Kind::Product:
      for (const auto& child : e.children) append_flat(child, out);
      return;
    case Kind::Commutator: {
      Word x = flatten(e.children[0]);
      Word y = flatten(e.children[1]);
      Word xi = inverse(x);
      Word yi = inverse(y);
      out.insert(out.end(), xi.begin(), xi.end());
      out.insert(out.end(), yi.begin(), yi.end());
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
      return;
    }
  }
}

}  // namespace

WordExpr parse(std::string_view text, const Presentation& p) {
  return Parser(text, p).parse_all();
}

Word flatten(const WordExpr& e) {
  Word out;
  append_flat(e, out);
  return out;
}

std::string format(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long exponent = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += p.name(w[i].generator);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return out;
}

}  // namespace nildist
