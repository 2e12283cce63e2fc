#include "vkt/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vkt {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> children;
};

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name) || name == "true" || name == "false") {
    throw InputError("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}}));
}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Op::Top, {}, {}});
  return Formula(node);
}

Formula Formula::bot() {
  static const auto node = std::make_shared<const Node>(Node{Op::Bot, {}, {}});
  return Formula(node);
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Op::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Op::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::box(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Box, {}, {std::move(f)}}));
}

Formula Formula::diamond(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Diamond, {}, {std::move(f)}}));
}

Op Formula::op() const noexcept { return node_->op; }

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw Error("formula node has no child");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw Error("formula node has no right child");
  return node_->children[1];
}

bool Formula::is_unary() const noexcept {
  return op() == Op::Not || op() == Op::Box || op() == Op::Diamond;
}

bool Formula::is_binary() const noexcept { return op() == Op::And || op() == Op::Or; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Atom:
      return a.name() == b.name();
    case Op::Top:
    case Op::Bot:
      return true;
    case Op::Not:
    case Op::Box:
    case Op::Diamond:
      return a.lhs() == b.lhs();
    case Op::And:
    case Op::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

bool is_atom_name(std::string_view s) {
  if (s.empty()) return false;
  auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  return is_start(s.front()) && std::all_of(s.begin() + 1, s.end(), is_rest);
}

Formula conjunction(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::conj(*it, acc);
  return acc;
}

Formula disjunction(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::bot();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::disj(*it, acc);
  return acc;
}

Formula box_power(std::size_t n, Formula f) {
  for (std::size_t i = 0; i < n; ++i) f = Formula::box(std::move(f));
  return f;
}

// {{{ Parsing

namespace {

enum class Tok { Not, Box, Diamond, And, Or, LParen, RParen, True, False, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

struct Alias {
  std::string_view bytes;
  Tok kind;
};

constexpr Alias kAliases[] = {
    {"[]", Tok::Box},      {"<>", Tok::Diamond},   {"~", Tok::Not},
    {"&", Tok::And},       {"|", Tok::Or},         {"(", Tok::LParen},
    {")", Tok::RParen},    {"\xC2\xAC", Tok::Not},  // ¬
    {"\xE2\x96\xA1", Tok::Box},                     // □
    {"\xE2\x97\x87", Tok::Diamond},                 // ◇
    {"\xE2\x88\xA7", Tok::And},                     // ∧
    {"\xE2\x88\xA8", Tok::Or},                      // ∨
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t column = 1;
  while (pos < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (std::isspace(c)) {
      ++pos;
      ++column;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t end = pos + 1;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      std::string word(text.substr(pos, end - pos));
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      out.push_back({kind, std::move(word), column});
      column += end - pos;
      pos = end;
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (text.substr(pos).starts_with(alias.bytes)) {
        out.push_back({alias.kind, std::string(alias.bytes), column});
        pos += alias.bytes.size();
        column += static_cast<std::size_t>(std::count_if(
            alias.bytes.begin(), alias.bytes.end(),
            [](char b) { return (static_cast<unsigned char>(b) & 0xC0) != 0x80; }));
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t len = 1;
      if (c >= 0xF0) len = 4;
      else if (c >= 0xE0) len = 3;
      else if (c >= 0xC0) len = 2;
      throw ParseError("unknown token '" + std::string(text.substr(pos, len)) + "'", column);
    }
  }
  out.push_back({Tok::End, {}, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_or();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      advance();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Not:
        return Formula::negation(parse_unary());
      case Tok::Box:
        return Formula::box(parse_unary());
      case Tok::Diamond:
        return Formula::diamond(parse_unary());
      case Tok::True:
        return Formula::top();
      case Tok::False:
        return Formula::bot();
      case Tok::Ident:
        return Formula::atom(t.text);
      case Tok::LParen: {
        Formula f = parse_or();
        if (peek().kind != Tok::RParen) {
          throw ParseError(peek().kind == Tok::End ? "expected ')' before end of input"
                                                   : "expected ')' but found '" + peek().text + "'",
                           peek().column);
        }
        advance();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

// }}}

// {{{ Printing

namespace {

// Binding strength: Or < And < unary/atomic.
int level(const Formula& f) {
  switch (f.op()) {
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, int min_level, std::string& out) {
  const bool parens = level(f) < min_level;
  if (parens) out += '(';
  switch (f.op()) {
    case Op::Atom:
      out += f.name();
      break;
    case Op::Top:
      out += "true";
      break;
    case Op::Bot:
      out += "false";
      break;
    case Op::Not:
      out += '~';
      print(f.lhs(), 3, out);
      break;
    case Op::Box:
      out += "[]";
      print(f.lhs(), 3, out);
      break;
    case Op::Diamond:
      out += "<>";
      print(f.lhs(), 3, out);
      break;
    case Op::And:
      print(f.lhs(), 2, out);
      out += " & ";
      print(f.rhs(), 3, out);
      break;
    case Op::Or:
      print(f.lhs(), 1, out);
      out += " | ";
      print(f.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 1, out);
  return out;
}

// }}}

namespace {

class NnfBuilder {
 public:
  Formula run(const Formula& f, bool negated) {
    auto key = std::make_pair(f.id(), negated);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula out = build(f, negated);
    memo_.emplace(key, out);
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, bool>& k) const noexcept {
      return std::hash<const void*>{}(k.first) ^ static_cast<std::size_t>(k.second);
    }
  };

  Formula build(const Formula& f, bool negated) {
    switch (f.op()) {
      case Op::Atom:
        return negated ? Formula::negation(f) : f;
      case Op::Top:
        return negated ? Formula::bot() : f;
      case Op::Bot:
        return negated ? Formula::top() : f;
      case Op::Not:
        return run(f.lhs(), !negated);
      case Op::And:
      case Op::Or: {
        Formula l = run(f.lhs(), negated);
        Formula r = run(f.rhs(), negated);
        return (f.op() == Op::And) != negated ? Formula::conj(l, r) : Formula::disj(l, r);
      }
      case Op::Box:
      case Op::Diamond: {
        Formula c = run(f.lhs(), negated);
        return (f.op() == Op::Box) != negated ? Formula::box(c) : Formula::diamond(c);
      }
    }
    throw Error("unreachable formula kind");
  }

  std::unordered_map<std::pair<const void*, bool>, Formula, KeyHash> memo_;
};

template <typename T, typename Combine>
T fold_dag(const Formula& f, std::unordered_map<const void*, T>& memo, Combine combine) {
  if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
  T value;
  if (f.is_binary()) {
    value = combine(f, fold_dag(f.lhs(), memo, combine), fold_dag(f.rhs(), memo, combine));
  } else if (f.is_unary()) {
    value = combine(f, fold_dag(f.lhs(), memo, combine), T{});
  } else {
    value = combine(f, T{}, T{});
  }
  memo.emplace(f.id(), value);
  return value;
}

}  // namespace

Formula to_nnf(const Formula& f) { return NnfBuilder().run(f, false); }

std::size_t modal_depth(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  return fold_dag<std::size_t>(f, memo, [](const Formula& g, std::size_t l, std::size_t r) {
    switch (g.op()) {
      case Op::Box:
      case Op::Diamond:
        return l + 1;
      case Op::Not:
        return l;
      case Op::And:
      case Op::Or:
        return std::max(l, r);
      default:
        return std::size_t{0};
    }
  });
}

AtomSet atoms_of(const Formula& f) {
  AtomSet out;
  std::unordered_map<const void*, bool> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.emplace(g->id(), true).second) continue;
    if (g->op() == Op::Atom) out.insert(g->name());
    if (g->is_unary() || g->is_binary()) stack.push_back(&g->lhs());
    if (g->is_binary()) stack.push_back(&g->rhs());
  }
  return out;
}

std::size_t tree_size(const Formula& f) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::unordered_map<const void*, std::size_t> memo;
  return fold_dag<std::size_t>(f, memo, [](const Formula& g, std::size_t l, std::size_t r) {
    std::size_t sum = 1;
    for (std::size_t part : {l, r}) sum = part > kMax - sum ? kMax : sum + part;
    return g.is_unary() ? (l == kMax ? kMax : l + 1) : sum;
  });
}

}  // namespace vkt
