#include "ratfib/curve_file.hpp"

#include <sstream>
#include <vector>

#include "ratfib/error.hpp"

namespace ratfib {

bool CurveFile::operator==(const CurveFile& o) const {
  if (genus != o.genus) return false;
  if (genus == 5) return g5 == o.g5;
  return g6.surface.base == o.g6.surface.base && g6.sextic == o.g6.sextic && g6.point == o.g6.point;
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

[[noreturn]] void fail(int line, int column, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> cur;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto flush = [&] {
    if (!cur.empty()) lines.push_back(std::move(cur));
    cur.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n' || ch == ';') {
      flush();
      if (ch == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
    } else {
      Token t{"", line, col};
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
             text[i] != ';' && text[i] != '#') {
        t.text += text[i];
        ++i;
        ++col;
      }
      cur.push_back(t);
    }
  }
  flush();
  return lines;
}

Rational number(const Token& t) {
  if (t.text.find_first_of(".eE") != std::string::npos) {
    fail(t.line, t.column, "floating-point literal '" + t.text + "' is not accepted; use p/q");
  }
  try {
    return Rational::parse(t.text);
  } catch (const Error& e) {
    fail(t.line, t.column, e.what());
  }
}

long integer(const Token& t, long lo, long hi) {
  Rational r = number(t);
  if (r.denominator() != 1 || r < Rational(lo) || r > Rational(hi)) {
    fail(t.line, t.column, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return r.numerator().get_si();
}

void expect_count(const std::vector<Token>& l, std::size_t n) {
  if (l.size() != n) {
    fail(l[0].line, l[0].column, "'" + l[0].text + "' line needs " + std::to_string(n - 1) + " value(s)");
  }
}

Vec point_line(const std::vector<Token>& l, std::size_t n) {
  expect_count(l, n + 1);
  Vec v;
  for (std::size_t k = 1; k <= n; ++k) v.push_back(number(l[k]));
  return v;
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::vector<Token>& {
    if (at >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back()[0].line;
      fail(last, 1, std::string("unexpected end of input, expected ") + what);
    }
    return lines[at++];
  };

  const auto& fmt = next("'format 1'");
  if (fmt[0].text != "format") fail(fmt[0].line, fmt[0].column, "expected 'format'");
  expect_count(fmt, 2);
  if (integer(fmt[1], 0, 1000) != 1) fail(fmt[1].line, fmt[1].column, "unsupported format version");

  const auto& gen = next("'genus'");
  if (gen[0].text != "genus") fail(gen[0].line, gen[0].column, "expected 'genus'");
  expect_count(gen, 2);
  CurveFile f;
  f.genus = static_cast<int>(integer(gen[1], 5, 6));

  if (f.genus == 5) {
    for (std::size_t q = 0; q < 3; ++q) {
      const auto& head = next("'quadric'");
      if (head[0].text != "quadric" || head.size() != 1) fail(head[0].line, head[0].column, "expected 'quadric'");
      for (;;) {
        const auto& l = next("'end'");
        if (l[0].text == "end" && l.size() == 1) break;
        expect_count(l, 3);
        long i = integer(l[0], 0, 4);
        long j = integer(l[1], 0, 4);
        if (i > j) fail(l[0].line, l[0].column, "quadric entries need i <= j");
        Quadric& quad = f.g5.net[q];
        if (!quad.a(static_cast<int>(i), static_cast<int>(j)).is_zero()) {
          fail(l[0].line, l[0].column, "repeated quadric entry");
        }
        quad.set(static_cast<int>(i), static_cast<int>(j), number(l[2]));
      }
    }
    const auto& pt = next("'point'");
    if (pt[0].text != "point") fail(pt[0].line, pt[0].column, "expected 'point'");
    f.g5.point = point_line(pt, 5);
  } else {
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& l = next("'base'");
      if (l[0].text != "base") fail(l[0].line, l[0].column, "expected 'base'");
      f.g6.surface.base[b] = point_line(l, 3);
    }
    const auto& head = next("'sextic'");
    if (head[0].text != "sextic" || head.size() != 1) fail(head[0].line, head[0].column, "expected 'sextic'");
    for (;;) {
      const auto& l = next("'end'");
      if (l[0].text == "end" && l.size() == 1) break;
      expect_count(l, 4);
      Exponent e{static_cast<int>(integer(l[0], 0, 6)), static_cast<int>(integer(l[1], 0, 6)),
                 static_cast<int>(integer(l[2], 0, 6))};
      if (e[0] + e[1] + e[2] != 6) fail(l[0].line, l[0].column, "sextic exponents must sum to 6");
      if (!f.g6.sextic.coeff(e).is_zero()) fail(l[0].line, l[0].column, "repeated sextic entry");
      f.g6.sextic.add_term(e, number(l[3]));
    }
    const auto& pt = next("'point'");
    if (pt[0].text != "point") fail(pt[0].line, pt[0].column, "expected 'point'");
    f.g6.point = point_line(pt, 3);
  }
  if (at != lines.size()) fail(lines[at][0].line, lines[at][0].column, "trailing content");
  return f;
}

namespace {

std::vector<std::string> file_lines(const CurveFile& f) {
  std::vector<std::string> out{"format 1", "genus " + std::to_string(f.genus)};
  auto join = [](const Vec& v) {
    std::string s;
    for (const auto& x : v) s += " " + x.str();
    return s;
  };
  if (f.genus == 5) {
    for (const auto& q : f.g5.net) {
      out.push_back("quadric");
      for (std::size_t k = 0; k < kQuadricMonomials; ++k) {
        if (q.coeffs()[k].is_zero()) continue;
        auto [i, j] = quadric_monomials()[k];
        out.push_back(std::to_string(i) + " " + std::to_string(j) + " " + q.coeffs()[k].str());
      }
      out.push_back("end");
    }
    out.push_back("point" + join(f.g5.point));
  } else {
    for (const auto& b : f.g6.surface.base) out.push_back("base" + join(b));
    out.push_back("sextic");
    for (const auto& [e, c] : f.g6.sextic.terms()) {
      out.push_back(std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + " " + c.str());
    }
    out.push_back("end");
    out.push_back("point" + join(f.g6.point));
  }
  return out;
}

}  // namespace

std::string print_curve_file(const CurveFile& f) {
  std::string s;
  for (const auto& l : file_lines(f)) s += l + "\n";
  return s;
}

std::string print_curve_file_inline(const CurveFile& f) {
  std::string s;
  for (const auto& l : file_lines(f)) s += (s.empty() ? "" : "; ") + l;
  return s;
}

CurveFile genus5_file(const PointedCurve5& c) {
  CurveFile f;
  f.genus = 5;
  f.g5 = c;
  return f;
}

}  // namespace ratfib
