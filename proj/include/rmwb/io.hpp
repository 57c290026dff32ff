#pragma once

#include <map>
#include <variant>

#include "relevant.hpp"

namespace rmwb {

// Line-oriented text formats. Names are whitespace-free tokens without
// '<', ':' or '#'. Everything after '#' is a comment.
//
//   algebra <name> profile <profile>
//   elements <e>...
//   covers <a<b>...
//   unit <e> | neg <a:b>... | const f|bot|top <e>
//   mult <row>: <values>...      arrow <row>: <values>...
//
//   space <name> flavor <flavor>
//   points <p>...
//   covers <a<b>...
//   designated <p>... | top <p> | Q <row>: <p>...
//
//   space <name> flavor Relevant
//   points, covers as above
//   prime <x:y>... | I <p>... | R <x> <y>: <z>...

using Document = std::variant<Algebra, StructuredSpace, RelevantSpace>;

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    Line l{number, {}};
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] inline void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Runs f, re-raising library errors as parse errors at `line`.
template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    parse_error(line, e.what());
  }
}

inline std::pair<std::string, std::string> split_on(const std::string& tok, char sep, int line) {
  auto i = tok.find(sep);
  if (i == std::string::npos || i == 0 || i + 1 == tok.size())
    parse_error(line, "expected x" + std::string(1, sep) + "y, got '" + tok + "'");
  return {tok.substr(0, i), tok.substr(i + 1)};
}

inline std::string row_label(const std::string& tok, int line) {
  if (tok.size() < 2 || tok.back() != ':') parse_error(line, "expected '<name>:', got '" + tok + "'");
  return tok.substr(0, tok.size() - 1);
}

struct Carrier {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  int names_line = 0, covers_line = 0;

  Poset build() const {
    if (!names_line) parse_error(1, "missing carrier declaration");
    return at_line(covers_line ? covers_line : names_line, [&] { return Poset::from_covers(names, covers); });
  }
};

inline bool carrier_line(Carrier& c, const Line& l, const char* names_kw) {
  const auto& k = l.tokens[0];
  if (k == names_kw) {
    if (c.names_line) parse_error(l.number, std::string("duplicate ") + names_kw);
    c.names.assign(l.tokens.begin() + 1, l.tokens.end());
    c.names_line = l.number;
    return true;
  }
  if (k == "covers") {
    if (c.covers_line) parse_error(l.number, "duplicate covers");
    for (std::size_t i = 1; i < l.tokens.size(); ++i) c.covers.push_back(split_on(l.tokens[i], '<', l.number));
    c.covers_line = l.number;
    return true;
  }
  return false;
}

inline int lookup(const Poset& p, const std::string& nm, int line) {
  auto i = p.find(nm);
  if (!i) parse_error(line, "unknown name '" + nm + "'");
  return *i;
}

struct Rows {
  std::map<std::string, std::pair<int, std::vector<std::string>>> rows;

  void add(const Line& l, std::size_t label_at) {
    if (l.tokens.size() <= label_at) parse_error(l.number, "missing row label");
    auto label = row_label(l.tokens[label_at], l.number);
    std::string key;
    for (std::size_t i = 1; i < label_at; ++i) key += l.tokens[i] + " ";
    key += label;
    if (rows.count(key)) parse_error(l.number, "duplicate row '" + key + "'");
    rows[key] = {l.number, {l.tokens.begin() + label_at + 1, l.tokens.end()}};
  }

  Table table(const Poset& p, const char* what) const {
    const int n = p.size();
    Table t(n, -1);
    for (const auto& [key, val] : rows) {
      int a = lookup(p, key, val.first);
      if (static_cast<int>(val.second.size()) != n)
        parse_error(val.first, std::string(what) + " row needs " + std::to_string(n) + " entries");
      for (int b = 0; b < n; ++b) t.at(a, b) = lookup(p, val.second[b], val.first);
    }
    if (static_cast<int>(rows.size()) != n) parse_error(rows.begin()->second.first, std::string(what) + " table is incomplete");
    return t;
  }
};

inline int header_line(const std::vector<Line>& lines) {
  if (lines.empty()) parse_error(1, "empty document");
  return lines[0].number;
}

inline Algebra parse_algebra(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  if (h.tokens.size() != 4 || h.tokens[2] != "profile") parse_error(h.number, "expected 'algebra <name> profile <profile>'");
  auto prof = parse_profile(h.tokens[3]);
  if (!prof) parse_error(h.number, "unknown profile '" + h.tokens[3] + "'");
  Carrier c;
  Rows mult, arrow;
  std::vector<const Line*> later;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (carrier_line(c, l, "elements")) continue;
    const auto& k = l.tokens[0];
    if (k == "mult") {
      mult.add(l, 1);
    } else if (k == "arrow") {
      arrow.add(l, 1);
    } else if (k == "unit" || k == "neg" || k == "const") {
      later.push_back(&l);
    } else {
      parse_error(l.number, "unknown keyword '" + k + "'");
    }
  }
  AlgebraParts p;
  p.name = h.tokens[1];
  p.profile = *prof;
  p.order = c.build();
  for (const Line* l : later) {
    const auto& k = l->tokens[0];
    if (k == "unit") {
      if (l->tokens.size() != 2) parse_error(l->number, "expected 'unit <e>'");
      p.unit = lookup(p.order, l->tokens[1], l->number);
    } else if (k == "neg") {
      std::vector<Elem> neg(p.order.size(), -1);
      for (std::size_t i = 1; i < l->tokens.size(); ++i) {
        auto [a, b] = split_on(l->tokens[i], ':', l->number);
        neg[lookup(p.order, a, l->number)] = lookup(p.order, b, l->number);
      }
      for (Elem e : neg)
        if (e < 0) parse_error(l->number, "neg is not total");
      p.neg = neg;
    } else {
      if (l->tokens.size() != 3) parse_error(l->number, "expected 'const f|bot|top <e>'");
      Elem e = lookup(p.order, l->tokens[2], l->number);
      if (l->tokens[1] == "f") p.f = e;
      else if (l->tokens[1] == "bot") p.bot = e;
      else if (l->tokens[1] == "top") p.top = e;
      else parse_error(l->number, "unknown constant '" + l->tokens[1] + "'");
    }
  }
  if (!mult.rows.empty()) p.mult = mult.table(p.order, "mult");
  if (!arrow.rows.empty()) p.arrow = arrow.table(p.order, "arrow");
  std::string name = p.name;
  try {
    return assemble(std::move(p));
  } catch (const Error& e) {
    throw Error(e.kind(), "algebra " + name + ": " + e.message());
  }
}

inline StructuredSpace parse_space(const std::vector<Line>& lines, Flavor flavor) {
  const Line& h = lines[0];
  Carrier c;
  Rows q;
  std::vector<const Line*> later;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (carrier_line(c, l, "points")) continue;
    const auto& k = l.tokens[0];
    if (k == "Q") q.add(l, 1);
    else if (k == "designated" || k == "top") later.push_back(&l);
    else parse_error(l.number, "unknown keyword '" + k + "'");
  }
  StructuredSpace X;
  X.name = h.tokens[1];
  X.flavor = flavor;
  X.order = c.build();
  for (const Line* l : later) {
    if (l->tokens[0] == "designated") {
      for (std::size_t i = 1; i < l->tokens.size(); ++i) X.D |= bit(lookup(X.order, l->tokens[i], l->number));
    } else {
      if (l->tokens.size() != 2) parse_error(l->number, "expected 'top <p>'");
      X.top = lookup(X.order, l->tokens[1], l->number);
    }
  }
  if (!q.rows.empty()) {
    std::vector<Bits> rows(X.size(), 0);
    for (const auto& [key, val] : q.rows) {
      int x = lookup(X.order, key, val.first);
      for (const auto& y : val.second) rows[x] |= bit(lookup(X.order, y, val.first));
    }
    X.Q = rows;
  } else if (is_kleene(flavor)) {
    X.Q = comparability(X.order);
  }
  return X;
}

inline RelevantSpace parse_relevant(const std::vector<Line>& lines) {
  const Line& h = lines[0];
  Carrier c;
  Rows R;
  std::vector<const Line*> later;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (carrier_line(c, l, "points")) continue;
    const auto& k = l.tokens[0];
    if (k == "R") R.add(l, 2);
    else if (k == "prime" || k == "I") later.push_back(&l);
    else parse_error(l.number, "unknown keyword '" + k + "'");
  }
  RelevantSpace X;
  X.name = h.tokens[1];
  X.order = c.build();
  const int n = X.size();
  X.prime = identity_map(n);
  X.R.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Line* l : later) {
    if (l->tokens[0] == "I") {
      for (std::size_t i = 1; i < l->tokens.size(); ++i) X.I |= bit(lookup(X.order, l->tokens[i], l->number));
    } else {
      std::vector<int> pr(n, -1);
      for (std::size_t i = 1; i < l->tokens.size(); ++i) {
        auto [a, b] = split_on(l->tokens[i], ':', l->number);
        pr[lookup(X.order, a, l->number)] = lookup(X.order, b, l->number);
      }
      for (int v : pr)
        if (v < 0) parse_error(l->number, "prime is not total");
      X.prime = pr;
    }
  }
  for (const auto& [key, val] : R.rows) {
    auto sp = key.find(' ');
    int x = lookup(X.order, key.substr(0, sp), val.first);
    int y = lookup(X.order, key.substr(sp + 1), val.first);
    for (const auto& z : val.second) X.R[static_cast<std::size_t>(x) * n + y] |= bit(lookup(X.order, z, val.first));
  }
  return X;
}

}  // namespace detail

inline Document parse_document(std::string_view text) {
  auto lines = detail::tokenize(text);
  const int first = detail::header_line(lines);
  const auto& h = lines[0].tokens;
  if (h[0] == "algebra") return detail::parse_algebra(lines);
  if (h[0] == "space") {
    if (h.size() != 4 || h[2] != "flavor") detail::parse_error(first, "expected 'space <name> flavor <flavor>'");
    if (h[3] == "Relevant") return detail::parse_relevant(lines);
    auto f = parse_flavor(h[3]);
    if (!f) detail::parse_error(first, "unknown flavor '" + h[3] + "'");
    return detail::parse_space(lines, *f);
  }
  detail::parse_error(first, "expected 'algebra' or 'space'");
}

namespace detail {

inline std::string join_names(const Poset& p, Bits s) {
  std::string out;
  for_each_bit(s, [&](int x) { out += " " + p.name(x); });
  return out;
}

inline std::string covers_line(const Poset& p) {
  std::string out = "covers";
  for (auto [a, b] : p.covers()) out += " " + p.name(a) + "<" + p.name(b);
  return out + "\n";
}

inline std::string carrier_block(const Poset& p, const char* kw) {
  return std::string(kw) + join_names(p, p.all()) + "\n" + covers_line(p);
}

}  // namespace detail

inline std::string emit(const Algebra& A) {
  std::string out = "algebra " + A.name + " profile " + profile_name(A.profile) + "\n";
  out += detail::carrier_block(A.order, "elements");
  if (A.unit && !is_brouwerian(A.profile)) out += "unit " + A.name_of(*A.unit) + "\n";
  if (A.neg) {
    out += "neg";
    for (int a = 0; a < A.size(); ++a) out += " " + A.name_of(a) + ":" + A.name_of(A.inv(a));
    out += "\n";
  }
  if (A.f) out += "const f " + A.name_of(*A.f) + "\n";
  if (A.bot && is_bounded(A.profile)) out += "const bot " + A.name_of(*A.bot) + "\n";
  if (A.top && is_bounded(A.profile)) out += "const top " + A.name_of(*A.top) + "\n";
  if (A.mult && !is_brouwerian(A.profile))
    for (int a = 0; a < A.size(); ++a) {
      out += "mult " + A.name_of(a) + ":";
      for (int b = 0; b < A.size(); ++b) out += " " + A.name_of((*A.mult)(a, b));
      out += "\n";
    }
  return out;
}

inline std::string emit(const StructuredSpace& X) {
  std::string out = "space " + X.name + " flavor " + flavor_name(X.flavor) + "\n";
  out += detail::carrier_block(X.order, "points");
  out += "designated" + detail::join_names(X.order, X.D) + "\n";
  if (X.top) out += "top " + X.order.name(*X.top) + "\n";
  if (X.Q && (X.flavor == Flavor::Kleene || X.flavor == Flavor::PointedKleene))
    for (int x = 0; x < X.size(); ++x) out += "Q " + X.order.name(x) + ":" + detail::join_names(X.order, (*X.Q)[x]) + "\n";
  return out;
}

inline std::string emit(const RelevantSpace& X) {
  std::string out = "space " + X.name + " flavor Relevant\n";
  out += detail::carrier_block(X.order, "points");
  out += "prime";
  for (int x = 0; x < X.size(); ++x) out += " " + X.order.name(x) + ":" + X.order.name(X.prime[x]);
  out += "\nI" + detail::join_names(X.order, X.I) + "\n";
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.prod(x, y))
        out += "R " + X.order.name(x) + " " + X.order.name(y) + ":" + detail::join_names(X.order, X.prod(x, y)) + "\n";
  return out;
}

inline std::string emit(const Document& d) {
  return std::visit([](const auto& v) { return emit(v); }, d);
}

// Structural equality, used for emit/parse round trips.
inline bool identical(const Algebra& A, const Algebra& B) {
  return A.name == B.name && A.profile == B.profile && A.order == B.order && A.meet == B.meet && A.join == B.join &&
         A.mult == B.mult && A.arrow == B.arrow && A.unit == B.unit && A.neg == B.neg && A.f == B.f &&
         A.bot == B.bot && A.top == B.top;
}

inline bool identical(const StructuredSpace& X, const StructuredSpace& Y) {
  auto q = [](const StructuredSpace& S) { return S.Q ? *S.Q : comparability(S.order); };
  return X.name == Y.name && X.flavor == Y.flavor && X.order == Y.order && X.D == Y.D && X.top == Y.top &&
         (!is_kleene(X.flavor) || q(X) == q(Y));
}

inline bool identical(const RelevantSpace& X, const RelevantSpace& Y) {
  return X.name == Y.name && X.order == Y.order && X.R == Y.R && X.prime == Y.prime && X.I == Y.I;
}

namespace detail {

inline std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string hasse(const std::string& name, const Poset& p, Bits doubled, const std::string& extra) {
  std::string out = "digraph " + dot_id(name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x)
    out += "  " + dot_id(p.name(x)) + (has(doubled, x) ? " [peripheries=2]" : "") + ";\n";
  for (auto [a, b] : p.covers()) out += "  " + dot_id(p.name(a)) + " -> " + dot_id(p.name(b)) + ";\n";
  return out + extra + "}\n";
}

}  // namespace detail

// Hasse diagram, bottom to top, covers only.
inline std::string render_dot(const Algebra& A) { return detail::hasse(A.name, A.order, 0, ""); }

inline std::string render_dot(const StructuredSpace& X) { return detail::hasse(X.name, X.order, X.D, ""); }

// Fixed points of ' are doubled; R is listed in a legend node, one line
// per nonempty product.
inline std::string render_dot(const RelevantSpace& X) {
  Bits fixed = 0;
  for (int x = 0; x < X.size(); ++x)
    if (X.prime[x] == x) fixed |= bit(x);
  std::string legend;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.prod(x, y)) {
        std::string row = X.order.name(x) + " . " + X.order.name(y) + " :" + detail::join_names(X.order, X.prod(x, y));
        std::string quoted = detail::dot_id(row);
        legend += quoted.substr(1, quoted.size() - 2) + "\\l";
      }
  std::string extra = "  subgraph cluster_legend {\n    label=\"R\";\n    legend [shape=box, label=\"" + legend +
                      "\"];\n  }\n";
  return detail::hasse(X.name, X.order, fixed, extra);
}

inline std::string render_dot(const Document& d) {
  return std::visit([](const auto& v) { return render_dot(v); }, d);
}

}  // namespace rmwb
