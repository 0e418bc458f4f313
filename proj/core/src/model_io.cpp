#include "isoimp/model_io.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "isoimp/error.hpp"

namespace isoimp {

const ApplicationSet& Model::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw DomainError("no set named " + name);
  return it->second;
}

ConstraintPtr Model::constraint(const std::string& name) const {
  auto it = catalog.find(name);
  if (it == catalog.end()) throw DomainError("no constraint named " + name);
  return it->second;
}

void Model::add_constraint(const ConstraintPtr& c) {
  auto [it, fresh] = catalog.emplace(c->name(), c);
  if (!fresh && !it->second->same_function(*c))
    throw DomainError("conflicting definitions for constraint " + c->name());
}

void Model::add_set(const std::string& name, const ApplicationSet& s) {
  for (const ConstraintPtr& c : s.constraints()) add_constraint(c);
  sets.insert_or_assign(name, s);
}

bool operator==(const Model& a, const Model& b) {
  if (a.catalog.size() != b.catalog.size() || a.sets != b.sets) return false;
  for (auto ia = a.catalog.begin(), ib = b.catalog.begin(); ia != a.catalog.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(*ia->second == *ib->second)) return false;
  return true;
}

namespace {

enum class Tok { Ident, Number, Equals, Comma, LBrace, RBrace, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '^' || c == '.';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, {}, line, column};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else {
      switch (c) {
        case '=': t.kind = Tok::Equals; break;
        case ',': t.kind = Tok::Comma; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        default:
          throw ParseError(ParseError::Kind::Syntax, line, column,
                           std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "end of input", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Model run() {
    while (peek().kind != Tok::End) {
      const Token& head = expect(Tok::Ident, "'constraint' or 'set'");
      if (head.text == "constraint")
        parse_constraint(head);
      else if (head.text == "set")
        parse_set(head);
      else
        fail(head, "expected 'constraint' or 'set', found '" + head.text + "'");
    }
    return std::move(model_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& message,
                         ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, t.line, t.column, message);
  }

  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = next();
    if (t.kind != kind) fail(t, "expected " + what + ", found '" + t.text + "'");
    return t;
  }

  void expect_key(const std::string& key) {
    const Token& t = expect(Tok::Ident, "'" + key + "'");
    if (t.text != key) fail(t, "expected '" + key + "', found '" + t.text + "'");
    expect(Tok::Equals, "'='");
  }

  void parse_constraint(const Token& head) {
    const Token& name = expect(Tok::Ident, "constraint name");
    if (model_.catalog.count(name.text))
      fail(name, "duplicate constraint " + name.text, ParseError::Kind::DuplicateName);
    expect_key("arity");
    const Token& arity_tok = expect(Tok::Number, "arity");
    if (arity_tok.text.size() > 2) fail(arity_tok, "arity too large");
    unsigned arity = static_cast<unsigned>(std::stoul(arity_tok.text));
    if (arity == 0 || arity > 24) fail(arity_tok, "arity must be between 1 and 24");
    expect_key("table");
    const Token& table = expect(Tok::Number, "table bits");
    for (char c : table.text)
      if (c != '0' && c != '1') fail(table, "table must consist of 0/1 digits");
    if (table.text.size() != (std::size_t{1} << arity))
      throw TableLengthError(table.line, table.column,
                             "table for " + name.text + " has " + std::to_string(table.text.size()) +
                                 " bits, arity " + std::to_string(arity) + " needs " +
                                 std::to_string(std::size_t{1} << arity));
    (void)head;
    model_.catalog.emplace(name.text, make_constraint(name.text, arity, table.text));
  }

  void parse_set(const Token& head) {
    (void)head;
    const Token& name = expect(Tok::Ident, "set name");
    if (model_.sets.count(name.text))
      fail(name, "duplicate set " + name.text, ParseError::Kind::DuplicateName);
    const Token& over = expect(Tok::Ident, "'over'");
    if (over.text != "over") fail(over, "expected 'over', found '" + over.text + "'");

    std::vector<std::string> universe;
    std::set<std::string> seen;
    if (peek().kind == Tok::Ident) {
      while (true) {
        const Token& v = expect(Tok::Ident, "variable name");
        if (!seen.insert(v.text).second)
          fail(v, "duplicate variable " + v.text, ParseError::Kind::DuplicateName);
        universe.push_back(v.text);
        if (peek().kind != Tok::Comma) break;
        next();
      }
    }
    expect(Tok::LBrace, "'{'");

    std::vector<Application> apps;
    while (peek().kind != Tok::RBrace) {
      const Token& cname = expect(Tok::Ident, "constraint name or '}'");
      auto it = model_.catalog.find(cname.text);
      if (it == model_.catalog.end())
        fail(cname, "unknown constraint " + cname.text, ParseError::Kind::UnknownConstraint);
      Application app{it->second, {}};
      expect(Tok::LParen, "'('");
      if (peek().kind != Tok::RParen) {
        while (true) {
          const Token& arg = next();
          if (arg.kind == Tok::Number && (arg.text == "0" || arg.text == "1")) {
            app.args.push_back(Argument::constant(arg.text == "1"));
          } else if (arg.kind == Tok::Ident) {
            std::optional<VarId> id;
            for (VarId v = 0; v < universe.size(); ++v)
              if (universe[v] == arg.text) id = v;
            if (!id)
              fail(arg, "variable " + arg.text + " is not declared in the universe of " + name.text,
                   ParseError::Kind::UnknownVariable);
            app.args.push_back(Argument::var(*id));
          } else {
            fail(arg, "expected variable or 0/1, found '" + arg.text + "'");
          }
          if (peek().kind != Tok::Comma) break;
          next();
        }
      }
      const Token& close = expect(Tok::RParen, "')'");
      if (app.args.size() != it->second->arity())
        fail(close,
             cname.text + " expects " + std::to_string(it->second->arity()) + " arguments, got " +
                 std::to_string(app.args.size()),
             ParseError::Kind::ArityMismatch);
      apps.push_back(std::move(app));
    }
    next();
    model_.sets.emplace(name.text, ApplicationSet(std::move(universe), std::move(apps)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Model model_;
};

}  // namespace

Model parse_model(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string serialize_model(const Model& model) {
  std::string out;
  for (const auto& [name, c] : model.catalog)
    out += "constraint " + name + " arity=" + std::to_string(c->arity()) + " table=" + c->bits() + "\n";
  for (const auto& [name, s] : model.sets) {
    out += "set " + name + " over ";
    for (std::size_t v = 0; v < s.universe().size(); ++v) {
      if (v) out += ",";
      out += s.universe()[v];
    }
    out += s.universe().empty() ? "{" : " {";
    for (const Application& app : s.apps()) out += " " + to_string(app, s);
    out += " }\n";
  }
  return out;
}

}  // namespace isoimp
