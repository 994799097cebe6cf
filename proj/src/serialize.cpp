#include "higgs/serialize.hpp"

#include <cctype>

#include "higgs/error.hpp"

namespace higgs {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly sum(nvars_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly t = term();
    sum = negate ? -t : t;
    while (true) {
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        break;
    }
    return sum;
  }

  Poly term() {
    Poly p = power();
    while (true) {
      if (accept('*')) {
        p *= power();
      } else if (accept('/')) {
        Integer d(digits());
        if (d == 0) error("division by zero");
        p *= Rational(Integer(1), d);
      } else {
        break;
      }
    }
    return p;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      std::string e = digits();
      if (e.size() > 3 || std::stoul(e) > 4 * static_cast<unsigned long>(kMaxInputDegree)) error("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n(digits());
      return Poly::constant(nvars_, Rational(n));
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      ++pos_;
      std::size_t index = 0;
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num(text_.substr(start, pos_ - start));
        if (num.size() > 2 || std::stoul(num) == 0) error("bad variable index " + num);
        index = std::stoul(num) - 1;
      } else {
        index = std::string_view("xyzw").find(c);
      }
      if (index >= nvars_) error("variable out of range for " + std::to_string(nvars_) + " variables");
      return Poly::variable(nvars_, index);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string type_name(const Json& j) { return j.type_name(); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::SchemaError, path + ": missing key '" + key + "'");
  return *it;
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> keys, const std::string& path) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (auto allowed : keys) known = known || k == allowed;
    if (!known) fail(ErrorKind::SchemaError, path + "." + k + ": unknown key");
  }
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) fail(ErrorKind::ParseError, path + ": empty integer");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(ErrorKind::ParseError, path + ": bad integer \"" + s + "\"");
    return Integer(s);
  }
  fail(ErrorKind::ParseError, path + ": expected integer, got " + type_name(j));
}

const Json& array_of_size(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(ErrorKind::ParseError, path + ": expected array, got " + type_name(j));
  if (j.size() != n)
    fail(ErrorKind::SchemaError, path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  return j;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars > kMaxVars) fail(ErrorKind::CapExceeded, "chart dimension " + std::to_string(nvars) + " exceeds " + std::to_string(kMaxVars));
  return PolyParser(text, nvars).parse();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(m[i]);
    terms.push_back(Json{{"exps", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Json to_json(const OneForm& f) {
  Json out = Json::array();
  for (const auto& e : f.entries()) out.push_back(to_json(e));
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const SymDiff& s) { return to_json(s.matrix()); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (j.is_string()) {
    try {
      return parse_rational(j.get_ref<const std::string&>());
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, path + ": " + e.witness());
    }
  }
  fail(ErrorKind::ParseError, path + ": expected rational (integer or \"a/b\" string), got " + type_name(j));
}

Poly poly_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_poly(j.get_ref<const std::string&>(), nvars);
    } catch (const Error& e) {
      fail(e.kind(), path + ": " + e.witness());
    }
  }
  if (j.is_number_integer()) return Poly::constant(nvars, Rational(integer_from_json(j, path)));
  if (!j.is_object()) fail(ErrorKind::ParseError, path + ": expected polynomial, got " + type_name(j));
  reject_unknown(j, {"nvars", "terms"}, path);
  const Json& nv = member(j, "nvars", path);
  if (!nv.is_number_unsigned() || nv.get<std::size_t>() != nvars)
    fail(ErrorKind::SchemaError, path + ".nvars: expected " + std::to_string(nvars));
  const Json& terms = member(j, "terms", path);
  if (!terms.is_array()) fail(ErrorKind::ParseError, path + ".terms: expected array");
  std::vector<std::pair<Monomial, Rational>> parsed;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string tp = path + ".terms[" + std::to_string(k) + "]";
    const Json& t = terms[k];
    if (!t.is_object()) fail(ErrorKind::ParseError, tp + ": expected object");
    reject_unknown(t, {"exps", "num", "den"}, tp);
    const Json& exps = array_of_size(member(t, "exps", tp), nvars, tp + ".exps");
    Monomial m;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (!exps[i].is_number_unsigned() || exps[i].get<unsigned long>() > 4 * static_cast<unsigned long>(kMaxInputDegree))
        fail(ErrorKind::ParseError, tp + ".exps[" + std::to_string(i) + "]: expected small non-negative integer");
      m.set(i, exps[i].get<unsigned>());
    }
    Integer num = integer_from_json(member(t, "num", tp), tp + ".num");
    Integer den = t.contains("den") ? integer_from_json(t["den"], tp + ".den") : Integer(1);
    if (den <= 0) fail(ErrorKind::ParseError, tp + ".den: must be positive");
    Rational c(num, den);
    c.canonicalize();
    parsed.emplace_back(m, c);
  }
  return Poly::from_terms(nvars, parsed);
}

OneForm oneform_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, path + ": expected non-empty array of polynomials");
  std::vector<Poly> entries;
  for (std::size_t i = 0; i < j.size(); ++i) entries.push_back(poly_from_json(j[i], nvars, path + "[" + std::to_string(i) + "]"));
  return OneForm(std::move(entries));
}

PolyMatrix matrix_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, path + ": expected non-empty array of rows");
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = array_of_size(j[i], j.size(), rp);
    std::vector<Poly> r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(poly_from_json(row[k], nvars, rp + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(r));
  }
  return PolyMatrix(std::move(rows));
}

SymDiff symdiff_from_json(const Json& j, std::size_t nvars, const std::string& path) {
  PolyMatrix m = matrix_from_json(j, nvars, path);
  try {
    return SymDiff(std::move(m));
  } catch (const Error& e) {
    fail(ErrorKind::SchemaError, path + ": " + e.witness());
  }
}

}  // namespace higgs
