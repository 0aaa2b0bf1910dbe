#include "homconf/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "homconf/errors.hpp"

namespace homconf {

namespace {

// --- unicode aliases ---------------------------------------------------------

std::string normalize(std::string_view src) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"λ", "L"}, {"μ", "M"}, {"ν", "N"}, {"∂", "D"}, {"₁", "1"},
      {"₂", "2"}, {"₃", "3"}, {"₄", "4"}, {"·", "."}, {"−", "-"},
      {"⊗", "|"}};
  std::string out;
  out.reserve(src.size());
  for (std::size_t i = 0; i < src.size();) {
    bool hit = false;
    for (const auto& [from, to] : aliases) {
      if (src.substr(i, from.size()) == from) {
        out += to;
        i += from.size();
        hit = true;
        break;
      }
    }
    if (!hit) out += src[i++];
  }
  return out;
}

// --- polynomials -------------------------------------------------------------

class PolyParser {
 public:
  PolyParser(std::string_view s, int line, int column) : s_(s), line_(line), col0_(column) {}

  Poly parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = unary();
    for (;;) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        skip();
        std::size_t at = pos_;
        Rational q = integer();
        if (q == 0) {
          pos_ = at;
          fail("division by zero");
        }
        p *= Poly(Rational(1) / q);
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      Rational e = integer();
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    return base;
  }

  Rational integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Rational(std::string(s_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto v = Alphabet::standard().find(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable " + name);
      }
      return Poly::var(*v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

// --- definition files ----------------------------------------------------------

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  std::string text;
  int number;
};

class DefinitionParser {
 public:
  explicit DefinitionParser(std::string_view src) {
    std::istringstream in{normalize(src)};
    int n = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++n;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      std::string t = trim(raw);
      if (t.empty()) continue;
      auto close = t.find(']');
      if (t.front() == '[' && close != std::string::npos && close + 1 < t.size() &&
          t.find_first_of(",=") == std::string::npos) {
        // `[algebra X] rank 1 basis e` on one line.
        lines_.push_back({t.substr(0, close + 1), n});
        std::string cur;
        for (const auto& w : words(t.substr(close + 1))) {
          if ((w == "rank" || w == "basis" || w == "kind" || w == "algebra") && !cur.empty()) {
            lines_.push_back({cur, n});
            cur.clear();
          }
          cur += cur.empty() ? w : " " + w;
        }
        if (!cur.empty()) lines_.push_back({cur, n});
        continue;
      }
      lines_.push_back({t, n});
    }
  }

  DefinitionFile parse() {
    std::size_t i = 0;
    while (i < lines_.size()) {
      const Line& head = lines_[i];
      if (head.text.front() != '[' || head.text.back() != ']' || head.text.find(',') != std::string::npos) {
        fail(head, "expected a section header");
      }
      auto w = words(head.text.substr(1, head.text.size() - 2));
      std::size_t end = i + 1;
      while (end < lines_.size() && !is_header(lines_[end].text)) ++end;
      std::vector<Line> body(lines_.begin() + static_cast<long>(i) + 1, lines_.begin() + static_cast<long>(end));
      if (w.empty()) fail(head, "empty section header");
      const std::string& sec = w[0];
      if (sec == "tasks") {
        if (w.size() != 1) fail(head, "tasks section takes no name");
        for (const auto& l : body) {
          auto tw = words(l.text);
          out_.tasks.push_back({tw[0], {tw.begin() + 1, tw.end()}, l.number});
        }
      } else {
        if (w.size() != 2) fail(head, "section needs exactly one name");
        const std::string& name = w[1];
        if (!names_.insert(name).second) fail(head, "duplicate name " + name);
        if (sec == "algebra") {
          out_.algebras.push_back(algebra(name, body, head));
        } else if (sec == "form") {
          out_.forms.push_back(form(name, body, head));
        } else if (sec == "rep") {
          out_.reps.push_back(rep(name, body, head));
        } else if (sec == "tensor") {
          out_.tensors.push_back(tensor(name, body, head));
        } else if (sec == "coalgebra") {
          out_.coalgebras.push_back(coalgebra(name, body, head));
        } else if (sec == "pair") {
          out_.pairs.push_back(pair(name, body, head));
        } else {
          fail(head, "unknown section " + sec);
        }
      }
      i = end;
    }
    return std::move(out_);
  }

 private:
  static bool is_header(const std::string& t) {
    return t.front() == '[' && t.back() == ']' && t.find(',') == std::string::npos &&
           t.find('=') == std::string::npos;
  }

  [[noreturn]] static void fail(const Line& l, const std::string& what, int column = 1) {
    throw ParseError(what, l.number, column);
  }

  static int column_of(const Line& l, std::string_view needle) {
    auto at = l.text.find(needle);
    return at == std::string::npos ? 1 : static_cast<int>(at) + 1;
  }

  // Splits `lhs = rhs`; returns the column where rhs starts.
  static std::pair<std::string, std::string> split_eq(const Line& l, int& rhs_col) {
    auto eq = l.text.find('=');
    if (eq == std::string::npos) fail(l, "expected '='");
    std::size_t r = eq + 1;
    while (r < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[r]))) ++r;
    rhs_col = static_cast<int>(r) + 1;
    return {trim(l.text.substr(0, eq)), l.text.substr(r)};
  }

  static std::size_t label(const Line& l, const FreeModule& m, const std::string& name) {
    auto i = m.index_of(name);
    if (!i) fail(l, "undeclared basis label " + name, column_of(l, name));
    return *i;
  }

  // `c1*e1 + (L + D)*e2 - e3`: the last factor of every term is a basis label.
  static Element linear(const Line& l, const FreeModule& m, const std::string& rhs, int col) {
    Element x(m.rank());
    if (trim(rhs) == "0") return x;
    std::vector<std::pair<std::size_t, std::size_t>> terms;  // [begin, end)
    int depth = 0;
    std::size_t start = 0;
    char prev = 0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      char c = rhs[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      // A trailing '*' followed by a space ends a starred label such as `e*`.
      bool after_operand = prev != 0 && prev != '^' && prev != '(' && prev != '/' && prev != '+' && prev != '-' &&
                           (prev != '*' || std::isspace(static_cast<unsigned char>(rhs[i - 1])));
      if ((c == '+' || c == '-') && depth == 0 && after_operand) {
        terms.emplace_back(start, i);
        start = i;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
    }
    terms.emplace_back(start, rhs.size());
    std::vector<std::size_t> order(m.rank());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return m.label(a).size() > m.label(b).size(); });
    for (auto [b, e] : terms) {
      std::string t = trim(std::string_view(rhs).substr(b, e - b));
      int tcol = col + static_cast<int>(b);
      bool found = false;
      for (std::size_t k : order) {
        const std::string& lab = m.label(k);
        if (t.size() < lab.size() || t.compare(t.size() - lab.size(), lab.size(), lab) != 0) continue;
        std::string coef = trim(t.substr(0, t.size() - lab.size()));
        if (!coef.empty() && !(coef.back() == '*' || coef == "-" || coef == "+")) continue;
        Poly c(1);
        if (coef == "-") {
          c = Poly(-1);
        } else if (coef == "+" || coef.empty()) {
          c = Poly(1);
        } else {
          coef.pop_back();
          c = parse_poly(coef, l.number, tcol);
        }
        x.coeffs[k] += c;
        found = true;
        break;
      }
      if (!found) {
        std::size_t s = t.find_last_of("*+- )");
        std::string last = s == std::string::npos ? t : t.substr(s + 1);
        if (last.empty() || std::isdigit(static_cast<unsigned char>(last[0]))) {
          fail(l, "term does not end in a basis label: " + t, tcol);
        }
        fail(l, "undeclared basis label " + last, tcol);
      }
    }
    return x;
  }

  static std::vector<std::string> args_of(const Line& l, const std::string& s, char open, char close) {
    auto a = s.find(open);
    auto b = s.rfind(close);
    if (a == std::string::npos || b == std::string::npos || b < a) fail(l, "malformed left side");
    std::vector<std::string> out;
    std::string inner = s.substr(a + 1, b - a - 1);
    std::size_t from = 0;
    for (;;) {
      auto c = inner.find(',', from);
      out.push_back(trim(inner.substr(from, c == std::string::npos ? std::string::npos : c - from)));
      if (c == std::string::npos) break;
      from = c + 1;
    }
    return out;
  }

  static FreeModule basis_line(const Line& l, const std::vector<std::string>& w) {
    std::vector<std::string> labels(w.begin() + 1, w.end());
    std::set<std::string> seen;
    for (const auto& x : labels) {
      if (!seen.insert(x).second) fail(l, "duplicate basis label " + x, column_of(l, x));
      if (std::isdigit(static_cast<unsigned char>(x[0])) ||
          x.find_first_of("[](),.|=:+-/^") != std::string::npos) {
        fail(l, "invalid basis label " + x, column_of(l, x));
      }
    }
    return FreeModule(labels);
  }

  // Reads the `basis`, `rank` and `kind` header lines; returns the index of the first other line.
  struct Header {
    std::optional<FreeModule> module;
    std::optional<std::size_t> rank;
    std::optional<Kind> kind;
    std::optional<std::string> algebra;
  };

  void header_line(const Line& l, Header& h) {
    auto w = words(l.text);
    if (w[0] == "basis") {
      if (h.module) fail(l, "basis declared twice");
      h.module = basis_line(l, w);
      if (h.rank && *h.rank != h.module->rank()) fail(l, "rank mismatch: basis has " + std::to_string(h.module->rank()));
    } else if (w[0] == "rank") {
      if (w.size() != 2) fail(l, "rank takes one integer");
      h.rank = std::stoul(w[1]);
      if (h.module && *h.rank != h.module->rank()) fail(l, "rank mismatch: basis has " + std::to_string(h.module->rank()));
    } else if (w[0] == "kind") {
      if (w.size() != 2) fail(l, "kind takes one word");
      try {
        h.kind = kind_from_string(w[1]);
      } catch (const Error&) {
        fail(l, "unknown kind " + w[1], column_of(l, w[1]));
      }
    } else if (w[0] == "algebra") {
      if (w.size() != 2) fail(l, "algebra takes one name");
      if (!has_algebra(w[1])) fail(l, "undeclared algebra " + w[1], column_of(l, w[1]));
      h.algebra = w[1];
    }
  }

  static bool is_header_word(const std::string& t) {
    auto w = words(t);
    return w[0] == "basis" || w[0] == "rank" || w[0] == "kind" || w[0] == "algebra";
  }

  bool has_algebra(const std::string& n) const {
    return std::any_of(out_.algebras.begin(), out_.algebras.end(), [&](const Algebra& a) { return a.name == n; });
  }

  static const FreeModule& need_module(const Line& head, const Header& h) {
    if (!h.module) fail(head, "missing basis line");
    return *h.module;
  }

  // alpha/beta lines: `alpha e1 = RHS` sets column e1.
  static void twist_line(const Line& l, const FreeModule& m, std::vector<std::vector<Poly>>& mat,
                         std::set<std::size_t>& done) {
    int col = 1;
    auto [lhs, rhs] = split_eq(l, col);
    auto w = words(lhs);
    if (w.size() != 2) fail(l, "expected '" + w[0] + " LABEL = ...'");
    std::size_t j = label(l, m, w[1]);
    if (!done.insert(j).second) fail(l, "duplicate twist line for " + w[1]);
    Element img = linear(l, m, rhs, col);
    for (std::size_t r = 0; r < m.rank(); ++r) mat[r][j] = img.coeffs[r];
  }

  static std::vector<std::vector<Poly>> identity_matrix(std::size_t n) {
    return Endomorphism::identity(n).matrix();
  }

  Algebra algebra(const std::string& name, const std::vector<Line>& body, const Line& head) {
    Header h;
    std::size_t i = 0;
    for (; i < body.size() && is_header_word(body[i].text); ++i) header_line(body[i], h);
    if (!h.module) {
      if (h.rank && *h.rank == 0) h.module = FreeModule();
      need_module(head, h);
    }
    const FreeModule& m = *h.module;
    const std::size_t n = m.rank();
    StructureTable t(n);
    auto alpha = identity_matrix(n);
    std::set<std::size_t> alpha_done;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::optional<Kind> style;
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      if (is_header_word(l.text)) fail(l, "header lines must come first");
      if (l.text.rfind("alpha", 0) == 0 && l.text.size() > 5 && std::isspace(static_cast<unsigned char>(l.text[5]))) {
        twist_line(l, m, alpha, alpha_done);
        continue;
      }
      int col = 1;
      auto [lhs, rhs] = split_eq(l, col);
      std::string x, y;
      Kind k;
      if (!lhs.empty() && lhs.front() == '[') {
        auto a = args_of(l, lhs, '[', ']');
        if (a.size() != 2) fail(l, "bracket takes two labels");
        x = a[0];
        y = a[1];
        k = Kind::Lie;
      } else {
        auto dot = lhs.find(" . ");
        if (dot == std::string::npos) fail(l, "expected 'a . b = ...' or '[a, b] = ...'");
        x = trim(lhs.substr(0, dot));
        y = trim(lhs.substr(dot + 3));
        k = Kind::LeftSymmetric;
      }
      if (style && *style != k) fail(l, "mixed product styles");
      style = k;
      std::size_t xi = label(l, m, x), yi = label(l, m, y);
      if (!seen.insert({xi, yi}).second) fail(l, "duplicate product line for " + x + ", " + y);
      t.set(xi, yi, linear(l, m, rhs, col));
    }
    Kind kind = h.kind.value_or(style.value_or(Kind::LeftSymmetric));
    if (style && ((*style == Kind::Lie) != (kind == Kind::Lie))) fail(head, "product style does not match kind");
    return make_algebra(name, m, std::move(t), Endomorphism(alpha), kind);
  }

  NamedForm form(const std::string& name, const std::vector<Line>& body, const Line& head) {
    Header h;
    std::size_t i = 0;
    for (; i < body.size() && is_header_word(body[i].text); ++i) header_line(body[i], h);
    if (!h.algebra) fail(head, "form needs an 'algebra' line");
    const FreeModule& m = out_.algebra(*h.algebra).module;
    std::vector<std::vector<Poly>> w(m.rank(), std::vector<Poly>(m.rank()));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      int col = 1;
      auto [lhs, rhs] = split_eq(l, col);
      if (lhs.rfind("w(", 0) != 0) fail(l, "expected 'w(a, b) = ...'");
      auto a = args_of(l, lhs, '(', ')');
      if (a.size() != 2) fail(l, "w takes two labels");
      std::size_t x = label(l, m, a[0]), y = label(l, m, a[1]);
      if (!seen.insert({x, y}).second) fail(l, "duplicate form entry");
      w[x][y] = parse_poly(rhs, l.number, col);
    }
    return {name, *h.algebra, BilinearForm(w)};
  }

  // `name(x, y) = RHS` into a table with the given left/right/out modules.
  static bool table_line(const Line& l, const std::string& fn, const FreeModule& left, const FreeModule& right,
                         const FreeModule& out, StructureTable& t, std::set<std::pair<std::size_t, std::size_t>>& seen) {
    int col = 1;
    auto [lhs, rhs] = split_eq(l, col);
    if (lhs.rfind(fn + "(", 0) != 0) return false;
    auto a = args_of(l, lhs, '(', ')');
    if (a.size() != 2) fail(l, fn + " takes two labels");
    std::size_t x = label(l, left, a[0]), y = label(l, right, a[1]);
    if (!seen.insert({x, y}).second) fail(l, "duplicate " + fn + " line");
    t.set(x, y, linear(l, out, rhs, col));
    return true;
  }

  NamedRep rep(const std::string& name, const std::vector<Line>& body, const Line& head) {
    Header h;
    std::size_t i = 0;
    for (; i < body.size() && is_header_word(body[i].text); ++i) header_line(body[i], h);
    if (!h.algebra) fail(head, "rep needs an 'algebra' line");
    const Algebra& a = out_.algebra(*h.algebra);
    const FreeModule& m = need_module(head, h);
    StructureTable left(a.rank(), m.rank(), m.rank());
    StructureTable right(a.rank(), m.rank(), m.rank());
    auto beta = identity_matrix(m.rank());
    std::set<std::size_t> beta_done;
    std::set<std::pair<std::size_t, std::size_t>> seen_l, seen_r;
    const bool has_right = a.kind != Kind::Lie;
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      if (l.text.rfind("beta ", 0) == 0) {
        twist_line(l, m, beta, beta_done);
        continue;
      }
      if (table_line(l, "l", a.module, m, m, left, seen_l)) continue;
      if (table_line(l, "r", a.module, m, m, right, seen_r)) {
        if (!has_right) fail(l, "right action on a module over a Lie algebra");
        continue;
      }
      fail(l, "expected 'beta', 'l(a, m)' or 'r(a, m)'");
    }
    Representation r{name, m, Endomorphism(beta), left, std::nullopt};
    if (has_right) r.right = right;
    return {*h.algebra, r};
  }

  static Tensor::Index tensor_index(const Line& l, const std::string& lhs, const std::vector<const FreeModule*>& mods) {
    Tensor::Index idx;
    std::size_t from = 0;
    std::size_t leg = 0;
    for (;;) {
      auto bar = lhs.find('|', from);
      std::string lab = trim(lhs.substr(from, bar == std::string::npos ? std::string::npos : bar - from));
      if (leg >= mods.size()) fail(l, "too many tensor legs");
      idx.push_back(label(l, *mods[leg], lab));
      ++leg;
      if (bar == std::string::npos) break;
      from = bar + 1;
    }
    if (idx.size() != mods.size()) fail(l, "expected " + std::to_string(mods.size()) + " tensor legs");
    return idx;
  }

  NamedTensor tensor(const std::string& name, const std::vector<Line>& body, const Line& head) {
    Header h;
    std::size_t i = 0;
    for (; i < body.size() && is_header_word(body[i].text); ++i) header_line(body[i], h);
    if (!h.algebra) fail(head, "tensor needs an 'algebra' line");
    const FreeModule& m = out_.algebra(*h.algebra).module;
    std::optional<Tensor> t;
    std::set<Tensor::Index> seen;
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      int col = 1;
      auto [lhs, rhs] = split_eq(l, col);
      std::size_t arity = static_cast<std::size_t>(std::count(lhs.begin(), lhs.end(), '|')) + 1;
      if (!t) t = Tensor(std::vector<std::size_t>(arity, m.rank()));
      if (arity != t->arity()) fail(l, "tensor arity changes");
      auto idx = tensor_index(l, lhs, std::vector<const FreeModule*>(arity, &m));
      if (!seen.insert(idx).second) fail(l, "duplicate tensor entry");
      t->add_to(idx, parse_poly(rhs, l.number, col));
    }
    if (!t) t = Tensor({m.rank(), m.rank()});
    return {name, *h.algebra, *t};
  }

  Coalgebra coalgebra(const std::string& name, const std::vector<Line>& body, const Line& head) {
    Header h;
    std::size_t i = 0;
    for (; i < body.size() && is_header_word(body[i].text); ++i) header_line(body[i], h);
    const FreeModule& m = need_module(head, h);
    const std::size_t n = m.rank();
    auto alpha = identity_matrix(n);
    std::set<std::size_t> alpha_done;
    std::vector<Tensor> delta(n, Tensor({n, n}));
    std::set<Tensor::Index> seen;
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      if (l.text.rfind("alpha ", 0) == 0) {
        twist_line(l, m, alpha, alpha_done);
        continue;
      }
      if (l.text.rfind("delta ", 0) != 0) fail(l, "expected 'alpha' or 'delta'");
      int col = 1;
      auto [lhs, rhs] = split_eq(l, col);
      auto colon = lhs.find(':');
      if (colon == std::string::npos) fail(l, "expected 'delta e : a | b = ...'");
      std::size_t k = label(l, m, trim(lhs.substr(6, colon - 6)));
      auto idx = tensor_index(l, lhs.substr(colon + 1), {&m, &m});
      Tensor::Index key = {k, idx[0], idx[1]};
      if (!seen.insert(key).second) fail(l, "duplicate delta entry");
      delta[k].add_to(idx, parse_poly(rhs, l.number, col));
    }
    return Coalgebra{name, m, Endomorphism(alpha), delta};
  }

  NamedPair pair(const std::string& name, const std::vector<Line>& body, const Line& head) {
    NamedPair p;
    p.name = name;
    std::size_t i = 0;
    std::optional<Kind> kind;
    for (; i < body.size(); ++i) {
      auto w = words(body[i].text);
      if (w.size() == 2 && (w[0] == "a" || w[0] == "b")) {
        if (!has_algebra(w[1])) fail(body[i], "undeclared algebra " + w[1], column_of(body[i], w[1]));
        (w[0] == "a" ? p.a : p.b) = w[1];
      } else if (w.size() == 2 && w[0] == "kind") {
        try {
          kind = kind_from_string(w[1]);
        } catch (const Error&) {
          fail(body[i], "unknown kind " + w[1]);
        }
      } else {
        break;
      }
    }
    if (p.a.empty() || p.b.empty()) fail(head, "pair needs 'a' and 'b' lines");
    p.kind = kind.value_or(Kind::Lie) == Kind::Lie ? Kind::Lie : Kind::LeftSymmetric;
    const FreeModule& ma = out_.algebra(p.a).module;
    const FreeModule& mb = out_.algebra(p.b).module;
    std::vector<std::string> names = p.kind == Kind::Lie ? std::vector<std::string>{"rho", "sigma"}
                                                         : std::vector<std::string>{"la", "ra", "lb", "rb"};
    std::vector<bool> a_acts = p.kind == Kind::Lie ? std::vector<bool>{true, false}
                                                   : std::vector<bool>{true, true, false, false};
    for (bool aa : a_acts) {
      p.tables.push_back(aa ? StructureTable(ma.rank(), mb.rank(), mb.rank())
                            : StructureTable(mb.rank(), ma.rank(), ma.rank()));
    }
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> seen(names.size());
    for (; i < body.size(); ++i) {
      const Line& l = body[i];
      bool done = false;
      for (std::size_t k = 0; k < names.size() && !done; ++k) {
        done = a_acts[k] ? table_line(l, names[k], ma, mb, mb, p.tables[k], seen[k])
                         : table_line(l, names[k], mb, ma, ma, p.tables[k], seen[k]);
      }
      if (!done) fail(l, "expected an action line");
    }
    return p;
  }

  std::vector<Line> lines_;
  std::set<std::string> names_;
  DefinitionFile out_;
};

// --- printing --------------------------------------------------------------------

std::string coef_times(const Poly& c, const std::string& lab) {
  if (c == Poly(1)) return lab;
  if (c == Poly(-1)) return "-" + lab;
  std::string s = to_string(c);
  if (c.terms().size() > 1) return "(" + s + ")*" + lab;
  return s + "*" + lab;
}

std::string print_element(const Element& x, const FreeModule& m) {
  std::string out;
  for (std::size_t k = 0; k < x.rank(); ++k) {
    if (x.coeffs[k].is_zero()) continue;
    std::string t = coef_times(x.coeffs[k], m.label(k));
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

void print_twist(std::ostream& out, const std::string& word, const Endomorphism& e, const FreeModule& m) {
  Endomorphism id = Endomorphism::identity(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j) {
    if (e.image_of_basis(j) == id.image_of_basis(j)) continue;
    out << word << " " << m.label(j) << " = " << print_element(e.image_of_basis(j), m) << "\n";
  }
}

void print_table(std::ostream& out, const std::string& fn, const StructureTable& t, const FreeModule& left,
                 const FreeModule& right, const FreeModule& res) {
  for (std::size_t i = 0; i < t.left_rank(); ++i) {
    for (std::size_t j = 0; j < t.right_rank(); ++j) {
      if (t.at(i, j).is_zero()) continue;
      out << fn << "(" << left.label(i) << ", " << right.label(j) << ") = " << print_element(t.at(i, j), res) << "\n";
    }
  }
}

void print_basis(std::ostream& out, const FreeModule& m) {
  out << "basis";
  for (const auto& l : m.basis()) out << " " << l;
  out << "\n";
}

template <typename T>
const T& find_named(const std::vector<T>& v, const std::string& name, const char* what,
                    std::string (*get)(const T&)) {
  for (const auto& x : v) {
    if (get(x) == name) return x;
  }
  throw Error(std::string("undeclared ") + what + " " + name);
}

}  // namespace

Poly parse_poly(std::string_view src, int line, int column) {
  std::string s = normalize(src);
  return PolyParser(s, line, column).parse();
}

const Algebra& DefinitionFile::algebra(const std::string& name) const {
  return find_named<Algebra>(algebras, name, "algebra", [](const Algebra& a) { return a.name; });
}
const NamedForm& DefinitionFile::form(const std::string& name) const {
  return find_named<NamedForm>(forms, name, "form", [](const NamedForm& a) { return a.name; });
}
const NamedRep& DefinitionFile::rep(const std::string& name) const {
  return find_named<NamedRep>(reps, name, "rep", [](const NamedRep& a) { return a.rep.name; });
}
const NamedTensor& DefinitionFile::tensor(const std::string& name) const {
  return find_named<NamedTensor>(tensors, name, "tensor", [](const NamedTensor& a) { return a.name; });
}
const Coalgebra& DefinitionFile::coalgebra(const std::string& name) const {
  return find_named<Coalgebra>(coalgebras, name, "coalgebra", [](const Coalgebra& a) { return a.name; });
}
const NamedPair& DefinitionFile::pair(const std::string& name) const {
  return find_named<NamedPair>(pairs, name, "pair", [](const NamedPair& a) { return a.name; });
}

DefinitionFile parse_definition(std::string_view src) { return DefinitionParser(src).parse(); }

std::string print_definition(const DefinitionFile& file) {
  std::ostringstream out;
  bool first = true;
  auto section = [&](const std::string& head) {
    if (!first) out << "\n";
    first = false;
    out << head << "\n";
  };
  for (const auto& a : file.algebras) {
    section("[algebra " + a.name + "]");
    out << "kind " << to_string(a.kind) << "\n";
    print_basis(out, a.module);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < a.rank(); ++j) {
        if (a.product.at(i, j).is_zero()) continue;
        const std::string& x = a.module.label(i);
        const std::string& y = a.module.label(j);
        out << (a.kind == Kind::Lie ? "[" + x + ", " + y + "]" : x + " . " + y) << " = "
            << print_element(a.product.at(i, j), a.module) << "\n";
      }
    }
    print_twist(out, "alpha", a.alpha, a.module);
  }
  for (const auto& f : file.forms) {
    section("[form " + f.name + "]");
    out << "algebra " << f.algebra << "\n";
    const FreeModule& m = file.algebra(f.algebra).module;
    for (std::size_t i = 0; i < f.form.rank(); ++i) {
      for (std::size_t j = 0; j < f.form.rank(); ++j) {
        if (f.form.at(i, j).is_zero()) continue;
        out << "w(" << m.label(i) << ", " << m.label(j) << ") = " << to_string(f.form.at(i, j)) << "\n";
      }
    }
  }
  for (const auto& r : file.reps) {
    section("[rep " + r.rep.name + "]");
    out << "algebra " << r.algebra << "\n";
    print_basis(out, r.rep.space);
    const FreeModule& m = file.algebra(r.algebra).module;
    print_twist(out, "beta", r.rep.beta, r.rep.space);
    print_table(out, "l", r.rep.left, m, r.rep.space, r.rep.space);
    if (r.rep.right) print_table(out, "r", *r.rep.right, m, r.rep.space, r.rep.space);
  }
  for (const auto& t : file.tensors) {
    section("[tensor " + t.name + "]");
    out << "algebra " << t.algebra << "\n";
    const FreeModule& m = file.algebra(t.algebra).module;
    for (const auto& [idx, c] : t.tensor.entries()) {
      std::string lhs;
      for (std::size_t k = 0; k < idx.size(); ++k) lhs += (k ? " | " : "") + m.label(idx[k]);
      out << lhs << " = " << to_string(c) << "\n";
    }
  }
  for (const auto& c : file.coalgebras) {
    section("[coalgebra " + c.name + "]");
    print_basis(out, c.module);
    print_twist(out, "alpha", c.twist, c.module);
    for (std::size_t k = 0; k < c.rank(); ++k) {
      for (const auto& [idx, p] : c.delta[k].entries()) {
        out << "delta " << c.module.label(k) << " : " << c.module.label(idx[0]) << " | " << c.module.label(idx[1])
            << " = " << to_string(p) << "\n";
      }
    }
  }
  for (const auto& p : file.pairs) {
    section("[pair " + p.name + "]");
    out << "kind " << to_string(p.kind) << "\n";
    out << "a " << p.a << "\n";
    out << "b " << p.b << "\n";
    const FreeModule& ma = file.algebra(p.a).module;
    const FreeModule& mb = file.algebra(p.b).module;
    if (p.kind == Kind::Lie) {
      print_table(out, "rho", p.tables[0], ma, mb, mb);
      print_table(out, "sigma", p.tables[1], mb, ma, ma);
    } else {
      print_table(out, "la", p.tables[0], ma, mb, mb);
      print_table(out, "ra", p.tables[1], ma, mb, mb);
      print_table(out, "lb", p.tables[2], mb, ma, ma);
      print_table(out, "rb", p.tables[3], mb, ma, ma);
    }
  }
  if (!file.tasks.empty()) {
    section("[tasks]");
    for (const auto& t : file.tasks) {
      out << t.verb;
      for (const auto& a : t.args) out << " " << a;
      out << "\n";
    }
  }
  return out.str();
}

bool same_definition(const DefinitionFile& x, const DefinitionFile& y) {
  auto same_alg = [](const Algebra& a, const Algebra& b) {
    return a.name == b.name && a.module == b.module && a.product == b.product && a.alpha == b.alpha &&
           a.kind == b.kind;
  };
  auto same_rep = [](const NamedRep& a, const NamedRep& b) {
    return a.algebra == b.algebra && a.rep.name == b.rep.name && a.rep.space == b.rep.space &&
           a.rep.beta == b.rep.beta && a.rep.left == b.rep.left && a.rep.right.has_value() == b.rep.right.has_value() &&
           (!a.rep.right || *a.rep.right == *b.rep.right);
  };
  auto same_form = [](const NamedForm& a, const NamedForm& b) {
    return a.name == b.name && a.algebra == b.algebra && a.form == b.form;
  };
  auto same_tensor = [](const NamedTensor& a, const NamedTensor& b) {
    return a.name == b.name && a.algebra == b.algebra && a.tensor == b.tensor;
  };
  auto same_co = [](const Coalgebra& a, const Coalgebra& b) {
    return a.name == b.name && a.module == b.module && a.twist == b.twist && a.delta == b.delta;
  };
  auto same_pair = [](const NamedPair& a, const NamedPair& b) {
    return a.name == b.name && a.kind == b.kind && a.a == b.a && a.b == b.b && a.tables == b.tables;
  };
  return std::equal(x.algebras.begin(), x.algebras.end(), y.algebras.begin(), y.algebras.end(), same_alg) &&
         std::equal(x.forms.begin(), x.forms.end(), y.forms.begin(), y.forms.end(), same_form) &&
         std::equal(x.reps.begin(), x.reps.end(), y.reps.begin(), y.reps.end(), same_rep) &&
         std::equal(x.tensors.begin(), x.tensors.end(), y.tensors.begin(), y.tensors.end(), same_tensor) &&
         std::equal(x.coalgebras.begin(), x.coalgebras.end(), y.coalgebras.begin(), y.coalgebras.end(), same_co) &&
         std::equal(x.pairs.begin(), x.pairs.end(), y.pairs.begin(), y.pairs.end(), same_pair) &&
         x.tasks == y.tasks;
}

LieMatchedPair resolve_lie_pair(const DefinitionFile& file, const NamedPair& p) {
  if (p.kind != Kind::Lie) throw Error("pair " + p.name + " is not a Lie pair");
  return {file.algebra(p.a), file.algebra(p.b), p.tables[0], p.tables[1]};
}

LscMatchedPair resolve_lsc_pair(const DefinitionFile& file, const NamedPair& p) {
  if (p.kind == Kind::Lie) throw Error("pair " + p.name + " is not a left-symmetric pair");
  return {file.algebra(p.a), file.algebra(p.b), p.tables[0], p.tables[1], p.tables[2], p.tables[3]};
}

}  // namespace homconf
