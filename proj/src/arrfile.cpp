#include "torcoh/arrfile.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "torcoh/errors.hpp"

namespace torcoh {
namespace {

// One directive line, tokenized into words, integer literals, and
// single-character punctuation.
class Line {
 public:
  Line(std::string text, std::size_t number) : number_(number) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        tokens_.push_back(text.substr(i, j - i));
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                text[j] == '\'')) {
          ++j;
        }
        tokens_.push_back(text.substr(i, j - i));
        i = j;
        continue;
      }
      if (std::string("[](),;/*+-").find(c) != std::string::npos) {
        tokens_.push_back(std::string(1, c));
        ++i;
        continue;
      }
      throw ParseError(number_, std::string("unexpected character '") + c + "'");
    }
  }

  bool done() const { return pos_ == tokens_.size(); }
  std::size_t number() const { return number_; }

  const std::string& peek() const {
    static const std::string kEnd;
    return pos_ < tokens_.size() ? tokens_[pos_] : kEnd;
  }

  std::string next(const std::string& what) {
    if (done()) throw ParseError(number_, "expected " + what + " at end of line");
    return tokens_[pos_++];
  }

  void expect(const std::string& token) {
    std::string got = next("'" + token + "'");
    if (got != token) throw ParseError(number_, "expected '" + token + "', got '" + got + "'");
  }

  bool accept(const std::string& token) {
    if (peek() != token) return false;
    ++pos_;
    return true;
  }

  void finish() const {
    if (!done()) throw ParseError(number_, "trailing input '" + peek() + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(number_, what); }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::size_t number_;
};

bool is_number(const std::string& token) {
  return !token.empty() && std::isdigit(static_cast<unsigned char>(token[0]));
}

Int parse_integer(Line& line) {
  bool negative = false;
  while (true) {
    if (line.accept("-")) {
      negative = !negative;
    } else if (!line.accept("+")) {
      break;
    }
  }
  std::string digits = line.next("an integer");
  if (!is_number(digits)) line.fail("expected an integer, got '" + digits + "'");
  Int value(digits);
  return negative ? Int(-value) : value;
}

Rat parse_rational(Line& line) {
  Int num = parse_integer(line);
  if (!line.accept("/")) return Rat(num);
  Int den = parse_integer(line);
  if (den <= 0) line.fail("denominator must be positive");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// a | a+b*sqrt(D) | a-b*sqrt(D) | b*sqrt(D), with rational a and b.
Quad parse_quad(Line& line, const std::optional<unsigned long>& field_d) {
  Rat first = parse_rational(line);
  bool has_radical = false;
  Rat radical_sign(1);
  if (line.accept("*")) {
    has_radical = true;
    radical_sign = first;
    first = 0;
  } else if (line.accept("+")) {
    has_radical = true;
    radical_sign = parse_rational(line);
    line.expect("*");
  } else if (line.accept("-")) {
    has_radical = true;
    radical_sign = -parse_rational(line);
    line.expect("*");
  }
  if (!has_radical) return Quad(first);
  line.expect("sqrt");
  line.expect("(");
  Int d = parse_integer(line);
  line.expect(")");
  if (!field_d) line.fail("sqrt used without a field directive");
  if (d != Int(*field_d)) line.fail("sqrt discriminant does not match the field directive");
  return Quad(first, radical_sign, *field_d);
}

template <typename Scalar, typename Parse>
std::vector<Scalar> parse_tuple(Line& line, std::size_t ambient, Parse parse) {
  line.expect("(");
  std::vector<Scalar> entries;
  if (!line.accept(")")) {
    entries.push_back(parse(line));
    while (line.accept(",")) entries.push_back(parse(line));
    line.expect(")");
  }
  if (entries.size() != ambient)
    line.fail("expected " + std::to_string(ambient) + " entries, got " +
              std::to_string(entries.size()));
  return entries;
}

RatVec parse_rat_tuple(Line& line, std::size_t ambient) {
  return parse_tuple<Rat>(line, ambient, [](Line& l) { return parse_rational(l); });
}

QuadVec parse_quad_tuple(Line& line, std::size_t ambient,
                         const std::optional<unsigned long>& field_d) {
  return parse_tuple<Quad>(line, ambient,
                           [&](Line& l) { return parse_quad(l, field_d); });
}

// [a,b,...; c,d,...] with every row of length ambient; [] is the empty
// zero-row matrix.
IntMat parse_int_matrix(Line& line, std::size_t ambient) {
  line.expect("[");
  std::vector<IntVec> rows;
  if (!line.accept("]")) {
    do {
      IntVec row;
      row.push_back(parse_integer(line));
      while (line.accept(",")) row.push_back(parse_integer(line));
      if (row.size() != ambient)
        line.fail("expected rows of length " + std::to_string(ambient) + ", got " +
                  std::to_string(row.size()));
      rows.push_back(std::move(row));
    } while (line.accept(";"));
    line.expect("]");
  }
  IntMat m(rows.size(), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

struct Parser {
  ArrangementInput out;
  std::map<std::string, std::size_t> index_of_name;
  bool have_ambient = false;

  std::size_t ambient(const Line& line) const {
    if (!have_ambient) throw ParseError(line.number(), "ambient must be declared first");
    return out.arrangement.ambient;
  }

  void add_torus(Line& line, const std::string& name, Subtorus t) {
    if (index_of_name.count(name)) line.fail("duplicate torus name '" + name + "'");
    index_of_name[name] = out.arrangement.tori.size();
    out.arrangement.tori.push_back(std::move(t));
    out.torus_names.push_back(name);
  }

  void directive(Line& line) {
    std::string keyword = line.next("a directive");
    if (keyword == "ambient") {
      if (have_ambient) line.fail("duplicate ambient directive");
      Int n = parse_integer(line);
      if (n <= 0) line.fail("ambient dimension must be positive");
      out.arrangement.ambient = static_cast<std::size_t>(n.get_ui());
      have_ambient = true;
    } else if (keyword == "field") {
      if (out.field_d) line.fail("duplicate field directive");
      line.expect("sqrt");
      Int d = parse_integer(line);
      if (d <= 1) line.fail("field discriminant must exceed 1");
      out.field_d = d.get_ui();
    } else if (keyword == "torus") {
      std::string name = line.next("a torus name");
      line.expect("basis");
      IntMat basis = parse_int_matrix(line, ambient(line));
      line.expect("offset");
      RatVec offset = parse_rat_tuple(line, ambient(line));
      try {
        add_torus(line, name, canonicalize(ambient(line), basis, offset));
      } catch (const InputError& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        line.fail(e.what());
      }
    } else if (keyword == "face") {
      std::string name = line.next("a face name");
      FaceSpec face;
      line.expect("n");
      face.n = parse_quad_tuple(line, ambient(line), out.field_d);
      line.expect("k");
      face.k = parse_quad_tuple(line, ambient(line), out.field_d);
      line.expect("anchor");
      face.anchor = parse_rat_tuple(line, ambient(line));
      try {
        add_torus(line, name, subtorus_from_face(face, ambient(line)));
      } catch (const InputError& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        line.fail(e.what());
      }
    } else if (keyword == "merge") {
      std::string first = line.next("a torus name");
      std::string second = line.next("a torus name");
      line.expect("along");
      QuadVec direction = parse_quad_tuple(line, ambient(line), out.field_d);
      auto a = index_of_name.find(first);
      auto b = index_of_name.find(second);
      if (a == index_of_name.end()) line.fail("unknown torus '" + first + "'");
      if (b == index_of_name.end()) line.fail("unknown torus '" + second + "'");
      if (a->second == b->second) line.fail("cannot merge a torus with itself");
      auto merged =
          knit(out.arrangement.tori[a->second], out.arrangement.tori[b->second], direction);
      if (!merged) line.fail("tori '" + first + "' and '" + second + "' do not knit");
      out.arrangement.tori[a->second] = *merged;
      std::size_t dead = b->second;
      out.arrangement.tori.erase(out.arrangement.tori.begin() + dead);
      out.torus_names.erase(out.torus_names.begin() + dead);
      index_of_name.erase(b);
      for (auto& [nm, idx] : index_of_name)
        if (idx > dead) --idx;
    } else if (keyword == "group") {
      line.expect("generator");
      GroupElement g;
      g.mat = parse_int_matrix(line, ambient(line));
      if (g.mat.rows() != ambient(line)) line.fail("generator matrix must be square");
      g.trans = RatVec(ambient(line), Rat(0));
      if (line.accept("offset")) g.trans = parse_rat_tuple(line, ambient(line));
      out.generators.push_back(std::move(g));
    } else {
      line.fail("unknown directive '" + keyword + "'");
    }
    line.finish();
  }
};

void write_rational(std::ostream& os, const Rat& r) {
  os << r.get_num();
  if (r.get_den() != 1) os << '/' << r.get_den();
}

void write_rat_tuple(std::ostream& os, const RatVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    write_rational(os, v[i]);
  }
  os << ')';
}

void write_int_matrix(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
  }
  os << ']';
}

}  // namespace

ArrangementInput parse_arrangement_file(const std::string& text, const std::string& name) {
  Parser parser;
  parser.out.arrangement.name = name;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    Line line(raw, ++number);
    if (line.done()) continue;
    parser.directive(line);
  }
  if (!parser.have_ambient) throw ParseError(number + 1, "missing ambient directive");
  return parser.out;
}

std::string write_arrangement_file(const ArrangementInput& input) {
  std::ostringstream os;
  os << "ambient " << input.arrangement.ambient << '\n';
  if (input.field_d) os << "field sqrt " << *input.field_d << '\n';
  for (std::size_t i = 0; i < input.arrangement.tori.size(); ++i) {
    const Subtorus& t = input.arrangement.tori[i];
    os << "torus "
       << (i < input.torus_names.size() ? input.torus_names[i] : "t" + std::to_string(i + 1))
       << " basis ";
    write_int_matrix(os, t.direction.basis());
    os << " offset ";
    write_rat_tuple(os, t.offset);
    os << '\n';
  }
  for (const GroupElement& g : input.generators) {
    os << "group generator ";
    write_int_matrix(os, g.mat);
    if (!vec_is_zero(g.trans)) {
      os << " offset ";
      write_rat_tuple(os, g.trans);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace torcoh
