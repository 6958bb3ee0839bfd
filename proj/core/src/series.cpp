#include "chowdefect/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chowdefect/errors.hpp"

namespace chowdefect {

SeriesExpr SeriesExpr::poly_algebra(std::vector<unsigned> weights) {
  SeriesExpr e;
  e.kind = SeriesKind::kPolyAlgebra;
  e.weights = std::move(weights);
  return e;
}

SeriesExpr SeriesExpr::regseq(std::vector<unsigned> weights, std::vector<unsigned> degrees) {
  SeriesExpr e;
  e.kind = SeriesKind::kRegSeqQuotient;
  e.weights = std::move(weights);
  e.degrees = std::move(degrees);
  return e;
}

SeriesExpr SeriesExpr::regseq(std::vector<unsigned> degrees) {
  std::vector<unsigned> w(degrees.size(), 1);
  return regseq(std::move(w), std::move(degrees));
}

SeriesExpr SeriesExpr::exterior(std::vector<unsigned> degrees) {
  SeriesExpr e;
  e.kind = SeriesKind::kExterior;
  e.degrees = std::move(degrees);
  return e;
}

SeriesExpr SeriesExpr::exterior_plus(std::vector<unsigned> degrees) {
  SeriesExpr e = exterior(std::move(degrees));
  e.kind = SeriesKind::kExteriorPlus;
  return e;
}

SeriesExpr SeriesExpr::truncated(unsigned generator_degree, unsigned height) {
  SeriesExpr e;
  e.kind = SeriesKind::kTruncated;
  e.generator_degree = generator_degree;
  e.height = height;
  return e;
}

SeriesExpr SeriesExpr::free_module(std::vector<unsigned> degrees) {
  SeriesExpr e;
  e.kind = SeriesKind::kFreeModule;
  e.degrees = std::move(degrees);
  return e;
}

SeriesExpr SeriesExpr::tensor(std::vector<SeriesExpr> children) {
  SeriesExpr e;
  e.kind = SeriesKind::kTensor;
  e.children = std::move(children);
  return e;
}

SeriesExpr SeriesExpr::sum(std::vector<SeriesExpr> children) {
  SeriesExpr e;
  e.kind = SeriesKind::kSum;
  e.children = std::move(children);
  return e;
}

SeriesExpr SeriesExpr::augmentation(SeriesExpr child) {
  SeriesExpr e;
  e.kind = SeriesKind::kAugmentationIdeal;
  e.children.push_back(std::move(child));
  return e;
}

void validate(const SeriesExpr& e) {
  auto positive = [](const std::vector<unsigned>& v, const char* what) {
    if (std::any_of(v.begin(), v.end(), [](unsigned x) { return x == 0; })) {
      throw ExpressionError(std::string(what) + " must be positive");
    }
  };
  switch (e.kind) {
    case SeriesKind::kPolyAlgebra:
      positive(e.weights, "polynomial generator weights");
      break;
    case SeriesKind::kRegSeqQuotient:
      positive(e.weights, "ambient weights");
      positive(e.degrees, "relation degrees");
      if (e.degrees.size() > e.weights.size()) {
        throw ExpressionError("regular sequence longer than the number of variables");
      }
      break;
    case SeriesKind::kExterior:
    case SeriesKind::kExteriorPlus:
      positive(e.degrees, "exterior generator degrees");
      break;
    case SeriesKind::kTruncated:
      if (e.generator_degree == 0) throw ExpressionError("truncated generator degree must be positive");
      if (e.height == 0) throw ExpressionError("truncation height must be positive");
      break;
    case SeriesKind::kFreeModule:
      break;
    case SeriesKind::kTensor:
    case SeriesKind::kSum:
      if (e.children.empty()) throw ExpressionError("tensor/sum without operands");
      for (const auto& c : e.children) validate(c);
      break;
    case SeriesKind::kAugmentationIdeal:
      if (e.children.size() != 1) throw ExpressionError("aug takes exactly one operand");
      validate(e.children.front());
      break;
  }
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ExpressionError("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ExpressionError("series coefficient overflow");
  return r;
}

Series one(unsigned N) {
  Series s(N + 1, 0);
  s[0] = 1;
  return s;
}

// s <- s * (1 + sign x^d)
void times_binomial(Series& s, unsigned d, std::int64_t sign) {
  for (std::size_t k = s.size(); k-- > d;) s[k] = checked_add(s[k], checked_mul(sign, s[k - d]));
}

// s <- s / (1 - x^w)
void over_geometric(Series& s, unsigned w) {
  for (std::size_t k = w; k < s.size(); ++k) s[k] = checked_add(s[k], s[k - w]);
}

Series eval(const SeriesExpr& e, unsigned N) {
  Series s = one(N);
  switch (e.kind) {
    case SeriesKind::kPolyAlgebra:
      for (unsigned w : e.weights) over_geometric(s, w);
      return s;
    case SeriesKind::kRegSeqQuotient:
      for (unsigned d : e.degrees) times_binomial(s, d, -1);
      for (unsigned w : e.weights) over_geometric(s, w);
      return s;
    case SeriesKind::kExterior:
    case SeriesKind::kExteriorPlus:
      for (unsigned d : e.degrees) times_binomial(s, d, 1);
      if (e.kind == SeriesKind::kExteriorPlus) s[0] -= 1;
      return s;
    case SeriesKind::kTruncated:
      s.assign(N + 1, 0);
      for (unsigned k = 0; k < e.height; ++k) {
        const std::uint64_t deg = std::uint64_t{k} * e.generator_degree;
        if (deg > N) break;
        s[deg] += 1;
      }
      return s;
    case SeriesKind::kFreeModule:
      s.assign(N + 1, 0);
      for (unsigned d : e.degrees) {
        if (d <= N) s[d] += 1;
      }
      return s;
    case SeriesKind::kTensor:
      for (const auto& c : e.children) s = series_multiply(s, eval(c, N), N);
      return s;
    case SeriesKind::kSum:
      s.assign(N + 1, 0);
      for (const auto& c : e.children) s = series_add(s, eval(c, N));
      return s;
    case SeriesKind::kAugmentationIdeal:
      s = eval(e.children.front(), N);
      s[0] = 0;
      return s;
  }
  throw ExpressionError("unknown series node");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeriesExpr parse() {
    SeriesExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExpressionError(msg + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return static_cast<unsigned>(v);
  }

  // Comma-separated numbers up to (not including) ')'.
  std::vector<unsigned> numbers_until_close() {
    std::vector<unsigned> out;
    if (peek(')')) return out;
    out.push_back(number());
    while (peek(',')) {
      ++pos_;
      out.push_back(number());
    }
    return out;
  }

  std::vector<unsigned> tuple() {
    expect('(');
    auto v = numbers_until_close();
    expect(')');
    return v;
  }

  std::vector<SeriesExpr> operands() {
    std::vector<SeriesExpr> out;
    if (peek(')')) return out;
    out.push_back(expr());
    while (peek(',')) {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  SeriesExpr regseq_args() {
    std::vector<unsigned> weights;
    std::vector<unsigned> degs;
    bool have_vars = false;
    bool have_degs = false;
    do {
      const std::string key = ident();
      expect('=');
      if (key == "vars") {
        weights.assign(number(), 1);
        have_vars = true;
      } else if (key == "weights") {
        weights = tuple();
        have_vars = true;
      } else if (key == "degs") {
        degs = tuple();
        have_degs = true;
      } else {
        fail("unknown regseq key '" + key + "'");
      }
    } while (peek(',') && (++pos_, true));
    if (!have_degs) fail("regseq needs degs=");
    if (!have_vars) weights.assign(degs.size(), 1);
    return SeriesExpr::regseq(std::move(weights), std::move(degs));
  }

  SeriesExpr expr() {
    const std::string name = ident();
    if (name == "zero") return SeriesExpr::zero();
    if (name == "one") return SeriesExpr::free_module({0});
    expect('(');
    SeriesExpr e;
    if (name == "poly") {
      e = SeriesExpr::poly_algebra(numbers_until_close());
    } else if (name == "regseq") {
      e = regseq_args();
    } else if (name == "ext") {
      e = SeriesExpr::exterior(numbers_until_close());
    } else if (name == "extplus") {
      e = SeriesExpr::exterior_plus(numbers_until_close());
    } else if (name == "trunc") {
      const unsigned g = number();
      expect(',');
      e = SeriesExpr::truncated(g, number());
    } else if (name == "freemod") {
      e = SeriesExpr::free_module(numbers_until_close());
    } else if (name == "tensor") {
      e = SeriesExpr::tensor(operands());
    } else if (name == "sum") {
      e = SeriesExpr::sum(operands());
    } else if (name == "aug") {
      auto ops = operands();
      if (ops.size() != 1) fail("aug takes exactly one operand");
      e = SeriesExpr::augmentation(std::move(ops.front()));
    } else {
      fail("unknown series constructor '" + name + "'");
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Series series_eval(const SeriesExpr& e, unsigned N) {
  validate(e);
  return eval(e, N);
}

SeriesExpr parse_series(std::string_view text) {
  SeriesExpr e = Parser(text).parse();
  validate(e);
  return e;
}

std::string to_string(const SeriesExpr& e) {
  auto list = [](const std::vector<SeriesExpr>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i > 0) s += ", ";
      s += to_string(cs[i]);
    }
    return s;
  };
  switch (e.kind) {
    case SeriesKind::kPolyAlgebra:
      return "poly(" + join(e.weights) + ")";
    case SeriesKind::kRegSeqQuotient: {
      const bool unit = std::all_of(e.weights.begin(), e.weights.end(),
                                    [](unsigned w) { return w == 1; });
      const std::string ambient = unit ? "vars=" + std::to_string(e.weights.size())
                                       : "weights=(" + join(e.weights) + ")";
      return "regseq(" + ambient + ", degs=(" + join(e.degrees) + "))";
    }
    case SeriesKind::kExterior:
      return "ext(" + join(e.degrees) + ")";
    case SeriesKind::kExteriorPlus:
      return "extplus(" + join(e.degrees) + ")";
    case SeriesKind::kTruncated:
      return "trunc(" + std::to_string(e.generator_degree) + "," + std::to_string(e.height) + ")";
    case SeriesKind::kFreeModule:
      return "freemod(" + join(e.degrees) + ")";
    case SeriesKind::kTensor:
      return "tensor(" + list(e.children) + ")";
    case SeriesKind::kSum:
      return "sum(" + list(e.children) + ")";
    case SeriesKind::kAugmentationIdeal:
      return "aug(" + list(e.children) + ")";
  }
  return "?";
}

Series series_add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
  return out;
}

Series series_multiply(const Series& a, const Series& b, unsigned N) {
  Series out(N + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  return out;
}

Series series_divide(const Series& a, const Series& b, unsigned N) {
  if (b.empty() || b[0] != 1) throw ExpressionError("series divisor must have constant term 1");
  Series q(N + 1, 0);
  for (std::size_t k = 0; k <= N; ++k) {
    std::int64_t v = k < a.size() ? a[k] : 0;
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) {
      v = checked_add(v, -checked_mul(b[j], q[k - j]));
    }
    q[k] = v;
  }
  return q;
}

}  // namespace chowdefect
