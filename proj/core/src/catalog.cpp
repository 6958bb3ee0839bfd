#include "chowdefect/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chowdefect/errors.hpp"
#include "chowdefect/symfun.hpp"

namespace chowdefect {

namespace {

std::vector<GeneratorSpec> gens(std::initializer_list<const char*> exprs) {
  std::vector<GeneratorSpec> out;
  for (const char* e : exprs) out.push_back({e, e});
  return out;
}

std::string join_numbers(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

unsigned parse_uint(const std::string& s, std::string_view what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CatalogError("bad " + std::string(what) + " '" + s + "'");
  }
  return v;
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

const char* kF4Notes[] = {
    "Weyl reflection read in half-sum form t_i -> t_i - (t1+t2+t3+t4)/2, the matrix I + J mod 3",
    "pbar9 and pbar12 fixed to the representatives p3^3 and p4^3",
};

CaseSpec pu3() {
  CaseSpec c;
  c.id = "pu3";
  c.prime = 3;
  c.num_vars = 2;
  c.ker = gens({"c1^2", "c1*c2", "c2^2"});
  c.im = gens({"c1^2", "c1^3", "c2^3"});
  c.b_degrees = {1, 2};
  c.claimed_D = parse_series("tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))");
  c.motive_series = parse_series("freemod(0,1,2)");
  c.default_max_degree = 12;
  c.provenance = "PU(3) at p = 3, versal torsor: flag kernel (c_i c_j) against the classifying-space image";
  c.notes.push_back("image of c6' entered as c2^3 exactly; variants with c1-multiples belong in case files");
  return c;
}

CaseSpec so_odd(unsigned l, bool split_form) {
  if (l < 1 || l > 6) throw CatalogError("so_odd rank must be in 1..6");
  CaseSpec c;
  c.id = "so_odd:" + std::to_string(l) + (split_form ? ":split" : ":versal");
  c.prime = 2;
  c.num_vars = l;
  for (unsigned i = 1; i <= l; ++i) {
    const std::string ci = "c" + std::to_string(i);
    if (split_form) c.ker.push_back({ci, ci});
    c.im.push_back({ci + "^2", ci + "^2"});
  }
  if (!split_form) c.ker = c.im;
  c.b_degrees = range(1, l);
  const std::string rs = "regseq(vars=" + std::to_string(l) + ", degs=(" + join_numbers(c.b_degrees) + "))";
  if (split_form) {
    c.claimed_D = parse_series("tensor(extplus(" + join_numbers(c.b_degrees) + "), " + rs + ")");
    c.motive_series = parse_series("freemod(0)");
    c.default_max_degree = 16;
    c.provenance = "SO(" + std::to_string(2 * l + 1) + ") at p = 2, split form: kernel (c_i), image (c_i^2)";
  } else {
    c.claimed_D = SeriesExpr::zero();
    c.motive_series = parse_series("ext(" + join_numbers(c.b_degrees) + ")");
    c.default_max_degree = 20;
    c.provenance = "SO(" + std::to_string(2 * l + 1) + ") at p = 2, versal torsor: kernel equals image";
  }
  return c;
}

CaseSpec spin7(bool split_form) {
  CaseSpec c;
  c.id = split_form ? "spin7:split" : "spin7:versal";
  c.prime = 2;
  c.num_vars = 3;
  c.ker = split_form ? gens({"c2", "c3", "e4"}) : gens({"c2^2", "c2*c3", "c3^2", "e4"});
  c.im = gens({"c2^2", "c3^2", "e4^2"});
  c.b_degrees = {2, 3, 4};
  c.default_max_degree = 20;
  if (split_form) {
    c.motive_series = parse_series("freemod(0)");
    c.provenance = "Spin(7) at p = 2, split form: kernel (c2, c3, e4)";
  } else {
    c.claimed_D = parse_series("tensor(extplus(5,4), regseq(vars=3, degs=(2,3,4)))");
    c.motive_series = parse_series("freemod(0,2,3)");
    c.provenance = "Spin(7) at p = 2, versal torsor: exterior algebra on c2c3, e4 over S(t)/(c2,c3,e4)";
    c.notes.push_back("e4 = c1^4; images that are even multiples vanish mod 2 and are omitted");
  }
  return c;
}

CaseSpec spin9(bool split_form) {
  CaseSpec c;
  c.id = split_form ? "spin9:split" : "spin9:versal";
  c.prime = 2;
  c.num_vars = 4;
  c.ker = split_form ? gens({"c2", "c3", "c4", "e8"})
                     : gens({"c2^2", "c2*c3", "c3^2", "c4", "e8"});
  c.im = gens({"c2^2", "c3^2", "e8", "c4^4"});
  c.b_degrees = {2, 3, 4, 8};
  c.default_max_degree = 20;
  if (split_form) {
    c.motive_series = parse_series("freemod(0)");
    c.provenance = "Spin(9) at p = 2, split form: kernel (c2, c3, c4, e8)";
  } else {
    const std::string stated = "aug(tensor(ext(5), trunc(4,4)))";
    const std::string rs = "regseq(vars=4, degs=(2,3,4,8))";
    c.claimed_D = parse_series("tensor(" + stated + ", " + rs + ")");
    c.claimed_tilde_D = parse_series("tensor(" + stated + ", " + rs + ")");
    c.motive_series = parse_series("freemod(0,2,3)");
    c.provenance = "Spin(9) at p = 2, versal torsor: (F2{1, c2c3} tensor F2[c4]/(c4^4))^+ over S(t,c)";
    c.notes.push_back("S(t,c) read as S(t)/(c2, c3, c4, c1^8)");
    c.notes.push_back("e8 = c1^8; images that are even multiples vanish mod 2 and are omitted");
    c.notes.push_back(
        "stated series checked as D (gating) and, informationally, as D divided by S(t)/(b)");
  }
  return c;
}

CaseSpec f4_top() {
  CaseSpec c;
  c.id = "f4_top";
  c.prime = 3;
  c.num_vars = 4;
  c.ker = gens({"p1", "pbar2", "p3", "p4"});
  c.im = gens({"p1", "pbar2", "pbar5", "pbar9", "pbar12"});
  c.b_degrees = {2, 4, 6, 8};
  c.claimed_D = parse_series(
      "tensor(aug(tensor(trunc(6,3), trunc(8,3))), regseq(vars=4, degs=(2,4,6,8)))");
  c.claimed_flag = parse_series("regseq(vars=4, degs=(2,4,6,8))");
  c.provenance = "F4 at p = 3, ordinary cohomology: kernel (p1, pbar2, p3, p4), image of the Toda generators";
  for (const char* n : kF4Notes) c.notes.emplace_back(n);
  return c;
}

MonomialBound f4_dprime(std::vector<unsigned> free_degrees = {}) {
  MonomialBound b;
  b.weights = {2, 4, 6, 8};
  b.relations = {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}};
  b.min_total = 2;
  b.free_degrees = std::move(free_degrees);
  return b;
}

CaseSpec f4_chow() {
  CaseSpec c;
  c.id = "f4_chow";
  c.prime = 3;
  c.num_vars = 4;
  c.ker = gens({"p1^2", "p1*pbar2", "p1*p3", "p1*p4", "pbar2^2", "pbar2*p3", "pbar2*p4", "p3^2",
                "p3*p4", "p4^2"});
  c.im = gens({"p1^2", "p1*pbar2", "pbar9", "pbar12"});
  c.b_degrees = {2, 4, 6, 8};
  c.motive_series = parse_series("freemod(0,2,4,6,8)");
  c.bound = f4_dprime();
  c.scenarios.push_back({"lambda0", {"λ0"}, {}, {}, "x8^2 not a cycle-map image"});
  c.scenarios.push_back(
      {"lambda1", {"λ1"}, {}, gens({"pbar2^2"}), "x8^2 a cycle-map image: pbar2^2 joins Im"});
  c.provenance = "F4 at p = 3, versal torsor in Chow theory: kernel (b_i b_j) with b = (p1, pbar2, p3, p4); "
                 "upper bound D' for D / S(t)/(b)";
  for (const char* n : kF4Notes) c.notes.emplace_back(n);
  return c;
}

CaseSpec spin_stable(unsigned n, unsigned N) {
  if (n < 2 || n > 12) throw CatalogError("spin_stable rank must be in 2..12");
  if (N < 1) throw CatalogError("spin_stable truncation must be positive");
  CaseSpec c;
  c.id = "spin_stable:" + std::to_string(n) + ":" + std::to_string(N);
  c.prime = 2;
  c.num_vars = n;
  for (unsigned i = 2; i <= n; ++i) {
    const std::string g = "c" + std::to_string(i) + "^2";
    c.ker.push_back({g, g});
  }
  c.im = c.ker;
  c.truncate_degree = N;
  c.claimed_D = SeriesExpr::zero();
  c.default_max_degree = N;
  c.provenance = "Spin(N) at p = 2 in the stable range: kernel and image both (c_i^2) through degree " +
                 std::to_string(N);
  return c;
}

CaseSpec e_upper(std::vector<unsigned> degrees) {
  CaseSpec c;
  c.id = degrees.empty() ? "e_upper" : "e_upper:" + join_numbers(degrees);
  c.prime = 3;
  c.num_vars = 4;
  c.series_only = true;
  c.bound = f4_dprime(std::move(degrees));
  c.provenance = "E6/E7 at p = 3: upper bound ((1 + D') tensor F3[b5..bl])^+ for D / S(t)/(b)";
  c.notes.push_back("degrees of b5..bl are user supplied; no D is computed");
  return c;
}

Series to_series(const std::vector<std::size_t>& v) {
  return Series(v.begin(), v.end());
}

}  // namespace

Series bound_series(const MonomialBound& b, unsigned N) {
  const std::size_t k = b.weights.size();
  for (unsigned w : b.weights) {
    if (w == 0) throw ExpressionError("bound weights must be positive");
  }
  for (const auto& r : b.relations) {
    if (r.size() != k) throw ExpressionError("bound relation has the wrong length");
  }
  Series s(N + 1, 0);
  std::vector<unsigned> exps(k, 0);
  // Depth-first over exponent vectors of weighted degree <= N.
  auto visit = [&](auto&& self, std::size_t i, unsigned deg, unsigned total) -> void {
    if (i == k) {
      if (total < b.min_total) return;
      for (const auto& r : b.relations) {
        bool divisible = true;
        for (std::size_t j = 0; j < k && divisible; ++j) divisible = exps[j] >= r[j];
        if (divisible) return;
      }
      ++s[deg];
      return;
    }
    for (unsigned e = 0; deg + e * b.weights[i] <= N; ++e) {
      exps[i] = e;
      self(self, i + 1, deg + e * b.weights[i], total + e);
    }
    exps[i] = 0;
  };
  visit(visit, 0, 0, 0);
  if (b.free_degrees.empty()) return s;
  s[0] += 1;
  s = series_multiply(s, series_eval(SeriesExpr::poly_algebra(b.free_degrees), N), N);
  s[0] = 0;
  return s;
}

unsigned CaseSpec::max_generator_degree() const {
  unsigned d = 0;
  for (const auto* ideal : {ker_ideal.get(), im_ideal.get()}) {
    if (ideal != nullptr) d = std::max(d, ideal->max_generator_degree());
  }
  return d;
}

SeriesExpr CaseSpec::regseq_b() const {
  return SeriesExpr::regseq(std::vector<unsigned>(num_vars, 1), b_degrees);
}

std::string resolve_scenario(const CaseSpec& spec, std::string_view scenario) {
  if (scenario.empty()) return spec.scenarios.empty() ? "" : spec.scenarios.front().name;
  for (const auto& s : spec.scenarios) {
    if (s.name == scenario) return s.name;
    for (const auto& a : s.aliases) {
      if (a == scenario) return s.name;
    }
  }
  throw CatalogError("case " + spec.id + " has no scenario '" + std::string(scenario) + "'");
}

void materialize(CaseSpec& spec) {
  if (spec.num_vars == 0 || spec.num_vars > kMaxVariables) {
    throw CatalogError("case " + spec.id + ": variable count must be in 1.." +
                       std::to_string(kMaxVariables));
  }
  if (!PrimeField::is_prime(spec.prime)) throw CatalogError("case " + spec.id + ": prime is not prime");
  spec.scenario = resolve_scenario(spec, spec.scenario);
  spec.ring = RingContext::standard(spec.prime, spec.num_vars);
  std::vector<GeneratorSpec> ker = spec.ker;
  std::vector<GeneratorSpec> im = spec.im;
  for (const auto& s : spec.scenarios) {
    if (s.name != spec.scenario) continue;
    ker.insert(ker.end(), s.extra_ker.begin(), s.extra_ker.end());
    im.insert(im.end(), s.extra_im.begin(), s.extra_im.end());
  }
  auto build = [&](const std::vector<GeneratorSpec>& list) {
    std::vector<NamedPolynomial> out;
    for (const auto& g : list) {
      Polynomial p = parse_class_expression(g.expr, spec.ring);
      if (spec.truncate_degree && p.degree() > *spec.truncate_degree) continue;
      out.push_back({g.name, std::move(p)});
    }
    return std::make_shared<const IdealHandle>(spec.ring, std::move(out));
  };
  spec.ker_ideal = build(ker);
  spec.im_ideal = build(im);
}

std::vector<std::string> list_cases() {
  std::vector<std::string> out{"pu3"};
  for (unsigned l = 2; l <= 5; ++l) {
    out.push_back("so_odd:" + std::to_string(l) + ":split");
    out.push_back("so_odd:" + std::to_string(l) + ":versal");
  }
  for (const char* id : {"spin7:versal", "spin7:split", "spin9:versal", "spin9:split", "f4_top",
                         "f4_chow", "spin_stable:6:12", "e_upper"}) {
    out.emplace_back(id);
  }
  return out;
}

CaseSpec build_case(std::string_view id, std::string_view scenario) {
  const auto parts = split(id, ':');
  const std::string& head = parts.front();
  CaseSpec c;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) throw CatalogError("malformed case id '" + std::string(id) + "'");
  };
  if (head == "pu3") {
    arity(1, 1);
    c = pu3();
  } else if (head == "so_odd") {
    arity(3, 3);
    if (parts[2] != "split" && parts[2] != "versal") throw CatalogError("so_odd form must be split or versal");
    c = so_odd(parse_uint(parts[1], "rank"), parts[2] == "split");
  } else if (head == "spin7" || head == "spin9") {
    arity(1, 2);
    const std::string form = parts.size() == 2 ? parts[1] : "versal";
    if (form != "split" && form != "versal") throw CatalogError(head + " form must be split or versal");
    c = head == "spin7" ? spin7(form == "split") : spin9(form == "split");
  } else if (head == "f4_top") {
    arity(1, 1);
    c = f4_top();
  } else if (head == "f4_chow") {
    arity(1, 1);
    c = f4_chow();
  } else if (head == "spin_stable") {
    arity(1, 3);
    if (parts.size() == 2) throw CatalogError("spin_stable takes both n and N");
    c = parts.size() == 1 ? spin_stable(6, 12)
                          : spin_stable(parse_uint(parts[1], "rank"), parse_uint(parts[2], "degree"));
  } else if (head == "e_upper") {
    arity(1, 2);
    std::vector<unsigned> degs;
    if (parts.size() == 2 && !parts[1].empty()) {
      for (const auto& d : split(parts[1], ',')) {
        const unsigned v = parse_uint(d, "degree");
        if (v == 0) throw CatalogError("e_upper degrees must be positive");
        degs.push_back(v);
      }
    }
    c = e_upper(std::move(degs));
  } else {
    throw CatalogError("unknown case '" + std::string(id) + "'");
  }
  c.scenario = std::string(scenario);
  materialize(c);
  return c;
}

bool BoundCheck::ok() const {
  return quotient_nonnegative && remainder_zero &&
         std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.ok; });
}

bool VerificationReport::passed() const {
  if (!containment_ok || !methods_agree) return false;
  if (factorization_ok && !*factorization_ok) return false;
  if (bound_check && !bound_check->ok()) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return !r.match || *r.match; });
}

VerificationReport verify_case(const CaseSpec& spec, unsigned N, HfMethod method) {
  VerificationReport rep;
  rep.case_id = spec.id;
  rep.scenario = spec.scenario;
  rep.prime = spec.prime;
  rep.max_degree = N;
  rep.method = method;
  rep.provenance = spec.provenance;
  rep.notes = spec.notes;
  for (const auto& s : spec.scenarios) {
    if (s.name == spec.scenario && !s.note.empty()) rep.notes.push_back("scenario " + s.name + ": " + s.note);
  }

  if (spec.series_only) {
    const Series b = bound_series(*spec.bound, N);
    rep.containment_ok = true;
    for (unsigned d = 1; d <= N; ++d) rep.rows.push_back(ReportRow{d, {}, {}, {}, b[d], {}});
    return rep;
  }
  if (!spec.ker_ideal || !spec.im_ideal) throw CatalogError("case " + spec.id + " is not materialized");
  if (N < spec.max_generator_degree()) {
    throw CatalogError("case " + spec.id + " needs max degree >= " +
                       std::to_string(spec.max_generator_degree()));
  }

  const DSeries ds = d_series(*spec.ker_ideal, *spec.im_ideal, N, method);
  rep.containment_ok = true;
  rep.methods_agree = true;
  if (method == HfMethod::kBoth) rep.notes.push_back("staircase and linear-algebra Hilbert functions agree");

  std::optional<Series> claimed;
  if (spec.claimed_D) claimed = series_eval(*spec.claimed_D, N);
  for (unsigned d = 1; d <= N; ++d) {
    ReportRow row{d, ds.hf_ker[d], ds.hf_im[d], ds.D[d], {}, {}};
    if (claimed) {
      row.claimed = (*claimed)[d];
      row.match = ds.D[d] == (*claimed)[d];
    }
    rep.rows.push_back(row);
  }

  auto compare = [&](const Series& expected, const Series& actual) {
    std::vector<unsigned> bad;
    for (unsigned d = 0; d <= N; ++d) {
      if (expected[d] != actual[d]) bad.push_back(d);
    }
    return bad;
  };
  const Series hf_ker = to_series(ds.hf_ker);
  if (spec.motive_series || spec.claimed_flag) {
    bool ok = true;
    if (spec.motive_series) {
      const auto bad = compare(
          series_eval(SeriesExpr::tensor({*spec.motive_series, spec.regseq_b()}), N), hf_ker);
      if (!bad.empty()) {
        ok = false;
        rep.notes.push_back("HF(S/Ker) differs from motive tensor S/(b) first in degree " +
                            std::to_string(bad.front()));
      }
    }
    if (spec.claimed_flag) {
      const auto bad = compare(series_eval(*spec.claimed_flag, N), hf_ker);
      if (!bad.empty()) {
        ok = false;
        rep.notes.push_back("HF(S/Ker) differs from the claimed flag series first in degree " +
                            std::to_string(bad.front()));
      }
    }
    rep.factorization_ok = ok;
  }

  if (!spec.b_degrees.empty() && (spec.bound || spec.claimed_tilde_D)) {
    const Series rs = series_eval(spec.regseq_b(), N);
    const Series tilde = series_divide(ds.D, rs, N);
    if (spec.bound) {
      BoundCheck bc;
      bc.quotient_nonnegative =
          std::all_of(tilde.begin(), tilde.end(), [](std::int64_t v) { return v >= 0; });
      bc.remainder_zero = series_multiply(tilde, rs, N) == ds.D;
      const Series bound = bound_series(*spec.bound, N);
      for (unsigned d = 1; d <= N; ++d) bc.rows.push_back({d, tilde[d], bound[d], tilde[d] <= bound[d]});
      rep.bound_check = std::move(bc);
    }
    if (spec.claimed_tilde_D) {
      SeriesComparison cmp;
      cmp.label = "stated series read as D / S(t)/(b)";
      cmp.expression = to_string(*spec.claimed_tilde_D);
      cmp.mismatched_degrees = compare(series_eval(*spec.claimed_tilde_D, N), tilde);
      cmp.matches = cmp.mismatched_degrees.empty();
      rep.comparisons.push_back(std::move(cmp));
    }
  }
  if (spec.ker_ideal->basis(N)->is_truncated() || spec.im_ideal->basis(N)->is_truncated()) {
    rep.notes.push_back("Groebner bases truncated at degree " + std::to_string(N));
  }
  return rep;
}

SplitVersalLaw split_minus_versal(const CaseSpec& split_case, const CaseSpec& versal, unsigned N,
                                  HfMethod method) {
  if (!versal.motive_series) throw CatalogError("versal case has no motive series");
  const DSeries a = d_series(*split_case.ker_ideal, *split_case.im_ideal, N, method);
  const DSeries b = d_series(*versal.ker_ideal, *versal.im_ideal, N, method);
  SplitVersalLaw law;
  law.difference.resize(N + 1);
  for (unsigned d = 0; d <= N; ++d) law.difference[d] = a.D[d] - b.D[d];
  const SeriesExpr split_motive =
      split_case.motive_series ? *split_case.motive_series : SeriesExpr::free_module({0});
  const Series rs = series_eval(versal.regseq_b(), N);
  Series diff = series_eval(*versal.motive_series, N);
  const Series sm = series_eval(split_motive, N);
  for (unsigned d = 0; d <= N; ++d) diff[d] -= sm[d];
  law.predicted = series_multiply(diff, rs, N);
  return law;
}

}  // namespace chowdefect
