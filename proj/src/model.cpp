#include "relrisk/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace relrisk {
namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { kIdent, kNumber, kPunct, kArrow, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourcePos pos;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Diagnostic error_at(SourcePos pos, std::string message, std::optional<std::string> hint = {}) {
  return {Diagnostic::Severity::kError, pos, std::move(message), std::move(hint)};
}

std::vector<Token> lex(std::string_view text, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourcePos pos{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      Tok kind = Tok::kIdent;
      if (all_digits(text.substr(i, j - i)) && j + 1 < text.size() && text[j] == '.' &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        kind = Tok::kNumber;
      }
      out.push_back({kind, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", pos});
      advance(2);
    } else if (std::string_view("{}:;,<()").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), pos});
      advance(1);
    } else {
      std::optional<std::string> hint;
      if (c == '-' || c == '+' || c == '.') {
        hint = "probabilities are plain decimals such as 0.25; signs and exponents are not allowed";
      }
      std::string shown = static_cast<unsigned char>(c) < 0x80 ? std::string(1, c) : "non-ASCII byte";
      diags.push_back(error_at(pos, "unexpected character '" + shown + "'", std::move(hint)));
      advance(1);
    }
  }
  out.push_back({Tok::kEnd, "", {line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

struct SyntaxError {
  Diagnostic diagnostic;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kNumber: return "number '" + t.text + "'";
    case Tok::kIdent: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ModelFile parse() {
    ModelFile model;
    while (peek().kind != Tok::kEnd) {
      const Token& t = peek();
      if (is_word("poset")) model.posets.push_back(poset());
      else if (is_word("partition")) model.partitions.push_back(partition());
      else if (is_word("game")) model.games.push_back(game());
      else if (is_word("stoch")) model.stochs.push_back(stoch());
      else fail(t, "expected 'poset', 'partition', 'game' or 'stoch' but found " + describe(t));
    }
    return model;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() {
    Token t = tokens_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  bool is_word(std::string_view w) const {
    return peek().kind == Tok::kIdent && peek().text == w;
  }
  bool is_punct(char c) const {
    return peek().kind == Tok::kPunct && peek().text[0] == c;
  }

  [[noreturn]] void fail(const Token& at, std::string message,
                         std::optional<std::string> hint = {}) {
    throw SyntaxError{error_at(at.pos, std::move(message), std::move(hint))};
  }

  Token ident(std::string_view what) {
    if (peek().kind != Tok::kIdent) fail(peek(), "expected " + std::string(what) + " but found " + describe(peek()));
    return next();
  }
  void word(std::string_view w) {
    if (!is_word(w)) fail(peek(), "expected '" + std::string(w) + "' but found " + describe(peek()));
    next();
  }
  void punct(char c) {
    if (!is_punct(c)) {
      fail(peek(), "expected '" + std::string(1, c) + "' but found " + describe(peek()));
    }
    next();
  }
  void arrow() {
    if (peek().kind != Tok::kArrow) fail(peek(), "expected '->' but found " + describe(peek()));
    next();
  }

  std::vector<Token> ident_list(std::string_view what) {
    std::vector<Token> out{ident(what)};
    while (is_punct(',')) {
      next();
      out.push_back(ident(what));
    }
    return out;
  }

  std::size_t player_number() {
    Token t = ident("a player number");
    if (!all_digits(t.text) || t.text.size() > 6 || std::stoul(t.text) == 0) {
      fail(t, "player numbers are positive integers, found '" + t.text + "'");
    }
    return std::stoul(t.text);
  }

  PosetDecl poset() {
    PosetDecl d;
    d.pos = next().pos;
    d.name = ident("a poset name").text;
    punct('{');
    bool have_elements = false;
    while (!is_punct('}')) {
      if (is_word("elements")) {
        const Token kw = next();
        if (have_elements) fail(kw, "poset '" + d.name + "' declares its elements twice");
        have_elements = true;
        punct(':');
        for (const auto& t : ident_list("an element name")) {
          d.elements.push_back(t.text);
          d.element_pos.push_back(t.pos);
        }
        punct(';');
      } else if (is_word("covers")) {
        next();
        punct(':');
        if (!is_punct(';')) {
          for (;;) {
            Token lo = ident("an element name");
            punct('<');
            Token hi = ident("an element name");
            d.covers.emplace_back(lo.text, hi.text);
            d.cover_pos.emplace_back(lo.pos, hi.pos);
            if (!is_punct(',')) break;
            next();
          }
        }
        punct(';');
      } else {
        fail(peek(), "expected 'elements', 'covers' or '}' but found " + describe(peek()));
      }
    }
    if (!have_elements) fail(peek(), "poset '" + d.name + "' has no 'elements' clause");
    next();
    return d;
  }

  PartitionDecl partition() {
    PartitionDecl d;
    d.pos = next().pos;
    d.name = ident("a partition name").text;
    word("on");
    Token p = ident("a poset name");
    d.poset = p.text;
    d.poset_pos = p.pos;
    punct('{');
    word("blocks");
    punct(':');
    for (;;) {
      punct('(');
      std::vector<std::string> block;
      std::vector<SourcePos> where;
      for (const auto& t : ident_list("an element name")) {
        block.push_back(t.text);
        where.push_back(t.pos);
      }
      punct(')');
      d.blocks.push_back(std::move(block));
      d.block_pos.push_back(std::move(where));
      if (!is_punct(',')) break;
      next();
    }
    punct(';');
    punct('}');
    return d;
  }

  GameDecl game() {
    GameDecl d;
    d.pos = next().pos;
    d.name = ident("a game name").text;
    punct('{');
    std::map<std::size_t, PlayerDecl> players;
    std::map<std::size_t, bool> has_strategies;
    while (!is_punct('}')) {
      if (is_word("player")) {
        const Token kw = next();
        const std::size_t k = player_number();
        word("strategies");
        punct(':');
        PlayerDecl& player = players[k];
        if (has_strategies[k]) fail(kw, "strategies of player " + std::to_string(k) + " declared twice");
        has_strategies[k] = true;
        player.pos = kw.pos;
        for (const auto& t : ident_list("a strategy name")) player.strategies.push_back(t.text);
        punct(';');
      } else if (is_word("payoff")) {
        const Token kw = next();
        const std::size_t k = player_number();
        punct(':');
        word("poset");
        Token p = ident("a poset name");
        PlayerDecl& player = players[k];
        if (!player.payoff_poset.empty()) {
          fail(kw, "payoff of player " + std::to_string(k) + " declared twice");
        }
        player.payoff_poset = p.text;
        player.payoff_pos = p.pos;
        punct(';');
      } else if (is_word("outcome")) {
        OutcomeDecl o;
        o.pos = next().pos;
        punct('(');
        for (const auto& t : ident_list("a strategy name")) o.profile.push_back(t.text);
        punct(')');
        arrow();
        o.element = ident("an element name").text;
        punct(';');
        d.outcomes.push_back(std::move(o));
      } else {
        fail(peek(), "expected 'player', 'payoff', 'outcome' or '}' but found " + describe(peek()));
      }
    }
    const Token close = next();
    std::size_t expected = 1;
    for (auto& [k, player] : players) {
      if (k != expected) {
        fail(close, "game '" + d.name + "' is missing player " + std::to_string(expected));
      }
      if (!has_strategies[k]) {
        fail(close, "player " + std::to_string(k) + " of game '" + d.name + "' has no strategies");
      }
      if (player.payoff_poset.empty()) {
        fail(close, "player " + std::to_string(k) + " of game '" + d.name + "' has no payoff");
      }
      d.players.push_back(std::move(player));
      ++expected;
    }
    return d;
  }

  StochDecl stoch() {
    StochDecl d;
    d.pos = next().pos;
    d.name = ident("a model name").text;
    punct('{');
    bool have_states = false, have_decisions = false;
    while (!is_punct('}')) {
      if (is_word("states")) {
        const Token kw = next();
        if (have_states) fail(kw, "states declared twice");
        have_states = true;
        punct(':');
        for (;;) {
          Token name = ident("a state name");
          word("prob");
          const Token& num = peek();
          if (num.kind != Tok::kNumber && !(num.kind == Tok::kIdent && all_digits(num.text))) {
            std::optional<std::string> hint;
            if (num.kind == Tok::kIdent && (num.text.find('e') != std::string::npos ||
                                            num.text.find('E') != std::string::npos)) {
              hint = "scientific notation is not supported; write a plain decimal such as 0.001";
            }
            fail(num, "expected a decimal probability but found " + describe(num), hint);
          }
          d.states.push_back({name.text, parse_decimal(num.text), name.pos});
          next();
          if (!is_punct(',')) break;
          next();
        }
        punct(';');
      } else if (is_word("decisions")) {
        const Token kw = next();
        if (have_decisions) fail(kw, "decisions declared twice");
        have_decisions = true;
        punct(':');
        for (const auto& t : ident_list("a decision name")) {
          d.decisions.push_back(t.text);
          d.decision_pos.push_back(t.pos);
        }
        punct(';');
      } else if (is_word("outcomes")) {
        const Token kw = next();
        if (!d.outcome_poset.empty()) fail(kw, "outcomes declared twice");
        punct(':');
        word("poset");
        Token p = ident("a poset name");
        d.outcome_poset = p.text;
        d.outcome_poset_pos = p.pos;
        punct(';');
      } else if (is_word("map")) {
        MapDecl m;
        m.pos = next().pos;
        punct('(');
        m.decision = ident("a decision name").text;
        punct(',');
        m.state = ident("a state name").text;
        punct(')');
        arrow();
        m.element = ident("an element name").text;
        punct(';');
        d.map.push_back(std::move(m));
      } else {
        fail(peek(), "expected 'states', 'decisions', 'outcomes', 'map' or '}' but found " +
                         describe(peek()));
      }
    }
    const Token close = next();
    if (!have_states) fail(close, "model '" + d.name + "' has no 'states' clause");
    if (!have_decisions) fail(close, "model '" + d.name + "' has no 'decisions' clause");
    if (d.outcome_poset.empty()) fail(close, "model '" + d.name + "' has no 'outcomes' clause");
    return d;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Semantic checks

template <typename Decl>
void check_unique_names(const std::vector<Decl>& decls, std::string_view kind,
                        std::vector<Diagnostic>& diags) {
  std::set<std::string> seen;
  for (const auto& d : decls) {
    if (!seen.insert(d.name).second) {
      diags.push_back(error_at(d.pos, "duplicate " + std::string(kind) + " name '" + d.name + "'"));
    }
  }
}

std::string profile_text(const std::vector<std::string>& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ", ";
    out += profile[i];
  }
  return out + ")";
}

void check_poset(const PosetDecl& d, std::vector<Diagnostic>& diags) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    if (!seen.insert(d.elements[i]).second) {
      diags.push_back(error_at(d.element_pos[i], "duplicate element '" + d.elements[i] +
                                                     "' in poset '" + d.name + "'"));
    }
  }
  for (std::size_t i = 0; i < d.covers.size(); ++i) {
    const auto& [lo, hi] = d.covers[i];
    const auto& [lo_pos, hi_pos] = d.cover_pos[i];
    for (const auto& [e, pos] : {std::pair(lo, lo_pos), std::pair(hi, hi_pos)}) {
      if (!seen.count(e)) {
        diags.push_back(error_at(pos, "unknown element '" + e + "' in poset '" + d.name + "'",
                                 "declare it in the 'elements' clause"));
      }
    }
    if (lo == hi) {
      diags.push_back(error_at(lo_pos, "cover '" + lo + " < " + hi +
                                                   "' relates an element to itself"));
    }
  }
}

void check_partition(const PartitionDecl& d, const ModelFile& model,
                     std::vector<Diagnostic>& diags) {
  const PosetDecl* p = model.find_poset(d.poset);
  if (!p) {
    diags.push_back(error_at(d.poset_pos, "unknown poset '" + d.poset + "'"));
    return;
  }
  std::set<std::string> elements(p->elements.begin(), p->elements.end());
  std::set<std::string> used;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (std::size_t i = 0; i < d.blocks[b].size(); ++i) {
      const auto& e = d.blocks[b][i];
      if (!elements.count(e)) {
        diags.push_back(error_at(d.block_pos[b][i], "unknown element '" + e + "' in partition '" +
                                                        d.name + "'"));
      } else if (!used.insert(e).second) {
        diags.push_back(error_at(d.block_pos[b][i], "element '" + e +
                                                        "' appears in two blocks of partition '" +
                                                        d.name + "'"));
      }
    }
  }
  for (const auto& e : p->elements) {
    if (!used.count(e)) {
      diags.push_back(error_at(d.pos, "element '" + e + "' of poset '" + d.poset +
                                          "' is in no block of partition '" + d.name + "'"));
    }
  }
}

void check_game(GameDecl& d, const ModelFile& model, std::vector<Diagnostic>& diags) {
  const std::size_t n = d.players.size();
  if (n < 2) {
    diags.push_back(error_at(d.pos, "game '" + d.name + "' needs at least two players"));
    return;
  }
  bool dims_ok = true;
  std::vector<const PosetDecl*> posets;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& player = d.players[i];
    std::set<std::string> seen;
    for (const auto& s : player.strategies) {
      if (!seen.insert(s).second) {
        diags.push_back(error_at(player.pos, "duplicate strategy '" + s + "' for player " +
                                                 std::to_string(i + 1)));
        dims_ok = false;
      }
    }
    const PosetDecl* p = model.find_poset(player.payoff_poset);
    if (!p) diags.push_back(error_at(player.payoff_pos, "unknown poset '" + player.payoff_poset + "'"));
    posets.push_back(p);
  }
  if (!dims_ok) return;

  std::size_t total = 1;
  std::vector<std::size_t> radix;
  for (const auto& player : d.players) {
    radix.push_back(player.strategies.size());
    total *= player.strategies.size();
  }
  std::vector<const OutcomeDecl*> slot(total, nullptr);
  for (const auto& o : d.outcomes) {
    if (o.profile.size() != n) {
      diags.push_back(error_at(o.pos, "outcome profile " + profile_text(o.profile) + " has " +
                                          std::to_string(o.profile.size()) + " strategies, game '" +
                                          d.name + "' has " + std::to_string(n) + " players"));
      continue;
    }
    std::size_t flat = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& strategies = d.players[i].strategies;
      auto it = std::find(strategies.begin(), strategies.end(), o.profile[i]);
      if (it == strategies.end()) {
        diags.push_back(error_at(o.pos, "unknown strategy '" + o.profile[i] + "' for player " +
                                            std::to_string(i + 1)));
        ok = false;
        break;
      }
      flat = flat * radix[i] + static_cast<std::size_t>(it - strategies.begin());
    }
    if (!ok) continue;
    if (slot[flat]) {
      diags.push_back(error_at(o.pos, "duplicate mapping for outcome " + profile_text(o.profile),
                               "first mapped at line " + std::to_string(slot[flat]->pos.line)));
      continue;
    }
    slot[flat] = &o;
    for (std::size_t i = 0; i < n; ++i) {
      if (posets[i] && std::find(posets[i]->elements.begin(), posets[i]->elements.end(),
                                 o.element) == posets[i]->elements.end()) {
        diags.push_back(error_at(o.pos, "unknown element '" + o.element + "' in payoff poset '" +
                                            posets[i]->name + "' of player " + std::to_string(i + 1)));
      }
    }
  }
  std::vector<OutcomeDecl> ordered;
  for (std::size_t k = 0; k < total; ++k) {
    if (!slot[k]) {
      std::vector<std::string> profile(n);
      std::size_t rest = k;
      for (std::size_t i = n; i-- > 0;) {
        profile[i] = d.players[i].strategies[rest % radix[i]];
        rest /= radix[i];
      }
      diags.push_back(error_at(d.pos, "game '" + d.name + "' has no outcome for profile " +
                                          profile_text(profile)));
    } else {
      ordered.push_back(*slot[k]);
    }
  }
  if (ordered.size() == total) d.outcomes = std::move(ordered);
}

void check_stoch(StochDecl& d, const ModelFile& model, std::vector<Diagnostic>& diags) {
  std::map<std::string, std::size_t> states, decisions;
  Rational total = 0;
  for (const auto& s : d.states) {
    if (!states.emplace(s.name, states.size()).second) {
      diags.push_back(error_at(s.pos, "duplicate state '" + s.name + "'"));
    }
    total += s.probability;
  }
  if (total != 1) {
    diags.push_back(error_at(d.pos, "state probabilities of '" + d.name + "' sum to " +
                                        format_decimal(total) + ", expected exactly 1"));
  }
  for (std::size_t i = 0; i < d.decisions.size(); ++i) {
    if (!decisions.emplace(d.decisions[i], decisions.size()).second) {
      diags.push_back(error_at(d.decision_pos[i], "duplicate decision '" + d.decisions[i] + "'"));
    }
  }
  const PosetDecl* p = model.find_poset(d.outcome_poset);
  if (!p) diags.push_back(error_at(d.outcome_poset_pos, "unknown poset '" + d.outcome_poset + "'"));

  const std::size_t ns = d.states.size();
  std::vector<const MapDecl*> slot(d.decisions.size() * ns, nullptr);
  for (const auto& m : d.map) {
    auto di = decisions.find(m.decision);
    auto si = states.find(m.state);
    if (di == decisions.end()) {
      diags.push_back(error_at(m.pos, "unknown decision '" + m.decision + "'"));
      continue;
    }
    if (si == states.end()) {
      diags.push_back(error_at(m.pos, "unknown state '" + m.state + "'"));
      continue;
    }
    const std::size_t k = di->second * ns + si->second;
    if (k >= slot.size()) continue;
    if (slot[k]) {
      diags.push_back(error_at(m.pos, "duplicate mapping for (" + m.decision + ", " + m.state + ")",
                               "first mapped at line " + std::to_string(slot[k]->pos.line)));
      continue;
    }
    slot[k] = &m;
    if (p && std::find(p->elements.begin(), p->elements.end(), m.element) == p->elements.end()) {
      diags.push_back(error_at(m.pos, "unknown element '" + m.element + "' in poset '" + p->name + "'"));
    }
  }
  if (states.size() != ns || decisions.size() != d.decisions.size()) return;
  std::vector<MapDecl> ordered;
  for (std::size_t k = 0; k < slot.size(); ++k) {
    if (!slot[k]) {
      diags.push_back(error_at(d.pos, "model '" + d.name + "' has no mapping for (" +
                                          d.decisions[k / ns] + ", " + d.states[k % ns].name + ")"));
    } else {
      ordered.push_back(*slot[k]);
    }
  }
  if (ordered.size() == slot.size()) d.map = std::move(ordered);
}

template <typename Decl>
const Decl* find_named(const std::vector<Decl>& decls, std::string_view name) {
  for (const auto& d : decls) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

template <typename Decl>
const Decl& require(const Decl* d, std::string_view kind, std::string_view name) {
  if (!d) throw std::out_of_range("no " + std::string(kind) + " named '" + std::string(name) + "'");
  return *d;
}

std::string list_text(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_diagnostic(const Diagnostic& d, std::string_view source_name) {
  std::ostringstream os;
  if (!source_name.empty()) os << source_name << ':';
  os << d.pos.line << ':' << d.pos.column << ": "
     << (d.severity == Diagnostic::Severity::kError ? "error" : "warning") << ": " << d.message;
  if (d.hint) os << "\n  hint: " << *d.hint;
  return os.str();
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "parse error"
                                             : format_diagnostic(diagnostics.front())),
      diagnostics_(std::move(diagnostics)) {}

StructuralError::StructuralError(Diagnostic diagnostic)
    : std::runtime_error(format_diagnostic(diagnostic)), diagnostic_(std::move(diagnostic)) {}

const PosetDecl* ModelFile::find_poset(std::string_view name) const { return find_named(posets, name); }
const PartitionDecl* ModelFile::find_partition(std::string_view name) const {
  return find_named(partitions, name);
}
const GameDecl* ModelFile::find_game(std::string_view name) const { return find_named(games, name); }
const StochDecl* ModelFile::find_stoch(std::string_view name) const { return find_named(stochs, name); }

bool same_model(const ModelFile& a, const ModelFile& b) {
  auto same_posets = [](const PosetDecl& x, const PosetDecl& y) {
    return x.name == y.name && x.elements == y.elements && x.covers == y.covers;
  };
  auto same_partitions = [](const PartitionDecl& x, const PartitionDecl& y) {
    return x.name == y.name && x.poset == y.poset && x.blocks == y.blocks;
  };
  auto same_games = [](const GameDecl& x, const GameDecl& y) {
    if (x.name != y.name || x.players.size() != y.players.size() ||
        x.outcomes.size() != y.outcomes.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.players.size(); ++i) {
      if (x.players[i].strategies != y.players[i].strategies ||
          x.players[i].payoff_poset != y.players[i].payoff_poset) {
        return false;
      }
    }
    for (std::size_t i = 0; i < x.outcomes.size(); ++i) {
      if (x.outcomes[i].profile != y.outcomes[i].profile ||
          x.outcomes[i].element != y.outcomes[i].element) {
        return false;
      }
    }
    return true;
  };
  auto same_stochs = [](const StochDecl& x, const StochDecl& y) {
    if (x.name != y.name || x.decisions != y.decisions || x.outcome_poset != y.outcome_poset ||
        x.states.size() != y.states.size() || x.map.size() != y.map.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.states.size(); ++i) {
      if (x.states[i].name != y.states[i].name ||
          x.states[i].probability != y.states[i].probability) {
        return false;
      }
    }
    for (std::size_t i = 0; i < x.map.size(); ++i) {
      if (x.map[i].decision != y.map[i].decision || x.map[i].state != y.map[i].state ||
          x.map[i].element != y.map[i].element) {
        return false;
      }
    }
    return true;
  };
  return std::equal(a.posets.begin(), a.posets.end(), b.posets.begin(), b.posets.end(), same_posets) &&
         std::equal(a.partitions.begin(), a.partitions.end(), b.partitions.begin(),
                    b.partitions.end(), same_partitions) &&
         std::equal(a.games.begin(), a.games.end(), b.games.begin(), b.games.end(), same_games) &&
         std::equal(a.stochs.begin(), a.stochs.end(), b.stochs.begin(), b.stochs.end(), same_stochs);
}

ModelFile parse_model(std::string_view text) {
  std::vector<Diagnostic> diags;
  std::vector<Token> tokens = lex(text, diags);
  if (!diags.empty()) throw ParseError(std::move(diags));

  ModelFile model;
  try {
    model = Parser(std::move(tokens)).parse();
  } catch (const SyntaxError& e) {
    throw ParseError({e.diagnostic});
  }

  check_unique_names(model.posets, "poset", diags);
  check_unique_names(model.partitions, "partition", diags);
  check_unique_names(model.games, "game", diags);
  check_unique_names(model.stochs, "stoch", diags);
  for (const auto& p : model.posets) check_poset(p, diags);
  for (const auto& p : model.partitions) check_partition(p, model, diags);
  for (auto& g : model.games) check_game(g, model, diags);
  for (auto& s : model.stochs) check_stoch(s, model, diags);
  if (!diags.empty()) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::tie(a.pos.line, a.pos.column) < std::tie(b.pos.line, b.pos.column);
    });
    throw ParseError(std::move(diags));
  }
  return model;
}

std::string serialize(const ModelFile& model) {
  std::ostringstream os;
  bool first = true;
  auto separate = [&] {
    if (!first) os << '\n';
    first = false;
  };
  for (const auto& p : model.posets) {
    separate();
    os << "poset " << p.name << " {\n  elements: " << list_text(p.elements) << ";\n";
    if (!p.covers.empty()) {
      os << "  covers: ";
      for (std::size_t i = 0; i < p.covers.size(); ++i) {
        if (i) os << ", ";
        os << p.covers[i].first << " < " << p.covers[i].second;
      }
      os << ";\n";
    }
    os << "}\n";
  }
  for (const auto& p : model.partitions) {
    separate();
    os << "partition " << p.name << " on " << p.poset << " {\n  blocks: ";
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      if (i) os << ", ";
      os << '(' << list_text(p.blocks[i]) << ')';
    }
    os << ";\n}\n";
  }
  for (const auto& g : model.games) {
    separate();
    os << "game " << g.name << " {\n";
    for (std::size_t i = 0; i < g.players.size(); ++i) {
      os << "  player " << i + 1 << " strategies: " << list_text(g.players[i].strategies) << ";\n";
    }
    for (std::size_t i = 0; i < g.players.size(); ++i) {
      os << "  payoff " << i + 1 << ": poset " << g.players[i].payoff_poset << ";\n";
    }
    for (const auto& o : g.outcomes) {
      os << "  outcome " << profile_text(o.profile) << " -> " << o.element << ";\n";
    }
    os << "}\n";
  }
  for (const auto& s : model.stochs) {
    separate();
    os << "stoch " << s.name << " {\n  states: ";
    for (std::size_t i = 0; i < s.states.size(); ++i) {
      if (i) os << ", ";
      os << s.states[i].name << " prob " << format_decimal(s.states[i].probability);
    }
    os << ";\n  decisions: " << list_text(s.decisions) << ";\n";
    os << "  outcomes: poset " << s.outcome_poset << ";\n";
    for (const auto& m : s.map) {
      os << "  map (" << m.decision << ", " << m.state << ") -> " << m.element << ";\n";
    }
    os << "}\n";
  }
  return os.str();
}

std::vector<Diagnostic> structural_diagnostics(const ModelFile& model) {
  std::vector<Diagnostic> out;
  for (const auto& p : model.posets) {
    try {
      build_poset(model, p.name);
    } catch (const StructuralError& e) {
      out.push_back(e.diagnostic());
    }
  }
  return out;
}

Poset build_poset(const ModelFile& model, std::string_view name) {
  const PosetDecl& d = require(model.find_poset(name), "poset", name);
  try {
    return validate_order(StrictRelation::from_names(GroundSet(d.elements), d.covers));
  } catch (const CycleError& e) {
    std::string witness = list_text(e.names());
    throw StructuralError(error_at(d.pos, "poset '" + d.name + "': " + e.what(),
                                   "cycle witness: [" + witness + "]"));
  }
}

Partition build_partition(const ModelFile& model, std::string_view name) {
  const PartitionDecl& d = require(model.find_partition(name), "partition", name);
  const PosetDecl& p = require(model.find_poset(d.poset), "poset", d.poset);
  return Partition::from_names(GroundSet(p.elements), d.blocks);
}

OrdinalGame build_game(const ModelFile& model, std::string_view name) {
  const GameDecl& d = require(model.find_game(name), "game", name);
  std::vector<GroundSet> strategies;
  std::vector<Poset> posets;
  std::vector<std::vector<Element>> payoffs;
  for (const auto& player : d.players) {
    strategies.emplace_back(player.strategies);
    posets.push_back(build_poset(model, player.payoff_poset));
    std::vector<Element> table;
    for (const auto& o : d.outcomes) table.push_back(posets.back().at(o.element));
    payoffs.push_back(std::move(table));
  }
  return OrdinalGame(std::move(strategies), std::move(posets), std::move(payoffs));
}

DecisionModel build_stoch(const ModelFile& model, std::string_view name) {
  const StochDecl& d = require(model.find_stoch(name), "stoch", name);
  std::vector<std::string> state_names;
  std::vector<Rational> probs;
  for (const auto& s : d.states) {
    state_names.push_back(s.name);
    probs.push_back(s.probability);
  }
  Poset order = build_poset(model, d.outcome_poset);
  std::vector<Element> map;
  for (const auto& m : d.map) map.push_back(order.at(m.element));
  return DecisionModel(GroundSet(d.decisions),
                       FiniteProbabilitySpace(GroundSet(std::move(state_names)), std::move(probs)),
                       order.ground(), std::move(map), order);
}

}  // namespace relrisk
