#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "omega/automata.hpp"

namespace omega {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline std::uint64_t parse_num(const std::string& t, int line,
                               const char* what) {
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(line, std::string("expected ") + what + ", got '" + t +
                                "'");
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (errno || !end || *end) throw parse_error(line, "number out of range");
  return v;
}

// formula := term ('|' term)*; term := atom ('&' atom)*;
// atom := 'true' | 'false' | state | '(' formula ')'
struct formula_parser {
  const std::vector<std::string>& ts;
  std::size_t pos;
  int line;
  std::uint32_t n;

  formula parse() {
    formula f = parse_or();
    if (pos != ts.size())
      throw parse_error(line, "unexpected token '" + ts[pos] + "'");
    return f;
  }

  formula parse_or() {
    std::vector<formula> kids{parse_and()};
    while (pos < ts.size() && ts[pos] == "|") {
      ++pos;
      kids.push_back(parse_and());
    }
    return formula::disj(std::move(kids));
  }

  formula parse_and() {
    std::vector<formula> kids{parse_atom()};
    while (pos < ts.size() && ts[pos] == "&") {
      ++pos;
      kids.push_back(parse_atom());
    }
    return formula::conj(std::move(kids));
  }

  formula parse_atom() {
    if (pos >= ts.size()) throw parse_error(line, "formula ends early");
    const std::string& t = ts[pos];
    if (t == "(") {
      ++pos;
      formula f = parse_or();
      if (pos >= ts.size() || ts[pos] != ")")
        throw parse_error(line, "missing ')'");
      ++pos;
      return f;
    }
    ++pos;
    if (t == "true") return formula::tt();
    if (t == "false") return formula::ff();
    std::uint64_t v = parse_num(t, line, "state or constant");
    if (v >= n)
      throw parse_error(line, "state " + t + " out of range");
    return formula::state(static_cast<state_id>(v));
  }
};

// Splits '(' ')' '&' '|' into their own tokens.
inline std::vector<std::string> formula_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      flush();
    } else if (c == '(' || c == ')' || c == '&' || c == '|') {
      flush();
      out.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

inline void print_formula(std::ostream& os, const formula& f,
                          formula::kind parent) {
  using k = formula::kind;
  switch (f.node_kind()) {
    case k::tt:
      os << "true";
      return;
    case k::ff:
      os << "false";
      return;
    case k::state:
      os << f.var();
      return;
    case k::conj: {
      // parens keep the exact tree: a nested conj must not flatten
      bool paren = parent == k::conj;
      if (paren) os << "(";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) os << " & ";
        first = false;
        print_formula(os, c, k::conj);
      }
      if (paren) os << ")";
      return;
    }
    case k::disj: {
      // parens under conj (precedence) and under disj (no flattening)
      bool paren = parent == k::conj || parent == k::disj;
      if (paren) os << "(";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) os << " | ";
        first = false;
        print_formula(os, c, k::disj);
      }
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace detail

// Text form, sections in order: comments, type, alphabet, states, initial,
// accepting, then one transition per line ("s letter -> targets" for nbw,
// "s letter -> formula" for abw). Repeated (state, letter) lines merge by
// union / disjunction.
inline std::variant<nbw, abw> parse_automaton(std::istream& in) {
  int lineno = 0;
  std::string line;
  auto next_tokens = [&](std::vector<std::string>& out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      out = detail::tokens(line);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> ts;
  auto expect_section = [&](const char* key) -> std::vector<std::string> {
    if (!next_tokens(ts))
      throw parse_error(lineno + 1, std::string("missing '") + key +
                                        "' section");
    if (ts[0] != std::string(key) + ":")
      throw parse_error(lineno, std::string("expected '") + key +
                                    ":', got '" + ts[0] + "'");
    return {ts.begin() + 1, ts.end()};
  };

  auto type = expect_section("type");
  if (type.size() != 1 || (type[0] != "nbw" && type[0] != "abw"))
    throw parse_error(lineno, "type must be 'nbw' or 'abw'");
  const bool is_abw = type[0] == "abw";

  auto alphabet = expect_section("alphabet");
  if (alphabet.empty()) throw parse_error(lineno, "alphabet is empty");
  std::unordered_map<std::string, letter_id> letter_of;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (!letter_of.emplace(alphabet[i], static_cast<letter_id>(i)).second)
      throw parse_error(lineno, "duplicate letter '" + alphabet[i] + "'");

  auto states = expect_section("states");
  if (states.size() != 1) throw parse_error(lineno, "states needs one count");
  std::uint64_t n = detail::parse_num(states[0], lineno, "state count");
  if (n == 0 || n > 0x7fffffff)
    throw parse_error(lineno, "state count out of range");

  auto initial = expect_section("initial");
  if (initial.size() != 1) throw parse_error(lineno, "initial needs one id");
  std::uint64_t init = detail::parse_num(initial[0], lineno, "state id");
  if (init >= n) throw parse_error(lineno, "initial state out of range");

  auto accepting = expect_section("accepting");
  std::vector<state_id> acc;
  for (const auto& t : accepting) {
    std::uint64_t v = detail::parse_num(t, lineno, "state id");
    if (v >= n) throw parse_error(lineno, "accepting state out of range");
    acc.push_back(static_cast<state_id>(v));
  }

  nbw an(static_cast<std::uint32_t>(n), alphabet);
  abw ab(static_cast<std::uint32_t>(n), alphabet);
  an.initial = ab.initial = static_cast<state_id>(init);
  an.accepting = ab.accepting = acc;
  std::vector<char> seen(n * alphabet.size(), 0);

  while (next_tokens(ts)) {
    if (ts.size() < 3 || ts[2] != "->")
      throw parse_error(lineno, "expected 'state letter -> ...'");
    std::uint64_t s = detail::parse_num(ts[0], lineno, "state id");
    if (s >= n) throw parse_error(lineno, "state out of range");
    auto lit = letter_of.find(ts[1]);
    if (lit == letter_of.end())
      throw parse_error(lineno, "unknown letter '" + ts[1] + "'");
    const letter_id l = lit->second;
    const std::size_t slot = s * alphabet.size() + l;
    if (!is_abw) {
      for (std::size_t i = 3; i < ts.size(); ++i) {
        std::uint64_t t = detail::parse_num(ts[i], lineno, "state id");
        if (t >= n) throw parse_error(lineno, "target out of range");
        an.add_edge(static_cast<state_id>(s), l, static_cast<state_id>(t));
      }
    } else {
      std::vector<std::string> fts(ts.begin() + 3, ts.end());
      std::string joined;
      for (const auto& t : fts) {
        joined += t;
        joined += ' ';
      }
      auto toks = detail::formula_tokens(joined);
      if (toks.empty()) throw parse_error(lineno, "missing formula");
      detail::formula_parser fp{toks, 0, lineno,
                                static_cast<std::uint32_t>(n)};
      formula f = fp.parse();
      if (seen[slot])
        ab.succ(static_cast<state_id>(s), l) = formula::disj(
            {ab.succ(static_cast<state_id>(s), l), std::move(f)});
      else
        ab.succ(static_cast<state_id>(s), l) = std::move(f);
    }
    seen[slot] = 1;
  }

  if (is_abw) return ab;
  return an;
}

inline std::variant<nbw, abw> parse_automaton(const std::string& text) {
  std::istringstream is(text);
  return parse_automaton(is);
}

inline std::variant<nbw, abw> parse_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_automaton(in);
}

namespace detail {

template <class A>
void write_header(std::ostream& os, const A& a, const char* type,
                  const std::vector<std::string>& comments) {
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "type: " << type << "\n";
  os << "alphabet:";
  for (const auto& l : a.alphabet) os << " " << l;
  os << "\n";
  os << "states: " << a.n << "\n";
  os << "initial: " << a.initial << "\n";
  os << "accepting:";
  for (auto s : a.accepting) os << " " << s;
  os << "\n";
}

}  // namespace detail

inline void serialize(std::ostream& os, const nbw& a,
                      const std::vector<std::string>& comments = {}) {
  detail::write_header(os, a, "nbw", comments);
  for (state_id s = 0; s < a.n; ++s)
    for (letter_id l = 0; l < a.letters(); ++l) {
      const auto& ts = a.succ(s, l);
      if (ts.empty()) continue;
      os << s << " " << a.alphabet[l] << " ->";
      for (auto t : ts) os << " " << t;
      os << "\n";
    }
}

inline void serialize(std::ostream& os, const abw& a,
                      const std::vector<std::string>& comments = {}) {
  detail::write_header(os, a, "abw", comments);
  for (state_id s = 0; s < a.n; ++s)
    for (letter_id l = 0; l < a.letters(); ++l) {
      const formula& f = a.succ(s, l);
      if (f.node_kind() == formula::kind::ff && f.children().empty())
        continue;  // missing line means false
      os << s << " " << a.alphabet[l] << " -> ";
      detail::print_formula(os, f, formula::kind::tt);
      os << "\n";
    }
}

template <class A>
std::string to_text(const A& a, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  serialize(os, a, comments);
  return os.str();
}

}  // namespace omega
