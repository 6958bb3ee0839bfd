#include "chowdefect/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chowdefect/errors.hpp"

namespace chowdefect {

namespace {

struct Greater {
  const RingContext* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->greater(a, b); }
};

using WorkMap = std::map<Monomial, Coeff, Greater>;

void add_scaled(WorkMap& work, const Polynomial& g, const Monomial& m, Coeff c,
                const PrimeField& field) {
  for (const Term& t : g.terms()) {
    const Monomial mono = t.mono * m;
    const Coeff delta = field.mul(t.coeff, c);
    auto [it, inserted] = work.try_emplace(mono, delta);
    if (!inserted) {
      it->second = field.add(it->second, delta);
      if (it->second == 0) work.erase(it);
    }
  }
}

// Reduces f by `divisors`, skipping index `skip`. When `tail_only`, the
// leading term of f is kept as is. Quotients accumulate into `quot` when
// non-null.
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors,
                     std::size_t skip, bool tail_only, std::vector<std::vector<Term>>* quot) {
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  WorkMap work(Greater{ring.get()});
  for (const Term& t : f.terms()) work.emplace(t.mono, t.coeff);

  std::vector<Term> remainder;
  if (tail_only && !work.empty()) {
    remainder.push_back(Term{work.begin()->first, work.begin()->second});
    work.erase(work.begin());
  }
  while (!work.empty()) {
    const Monomial lead = work.begin()->first;
    const Coeff lc = work.begin()->second;
    std::size_t k = 0;
    for (; k < divisors.size(); ++k) {
      if (k == skip || divisors[k].is_zero()) continue;
      if (divisors[k].leading_monomial().divides(lead)) break;
    }
    if (k == divisors.size()) {
      remainder.push_back(Term{lead, lc});
      work.erase(work.begin());
      continue;
    }
    const Polynomial& g = divisors[k];
    const Monomial m = lead / g.leading_monomial();
    const Coeff c = field.mul(lc, field.inv(g.leading_coeff()));
    if (quot != nullptr) (*quot)[k].push_back(Term{m, c});
    add_scaled(work, g, m, field.neg(c), field);
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned degree;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, std::span<const Polynomial> inputs, const GroebnerOptions& opts)
      : ring_(ring), field_(ring->field()), opts_(opts), num_inputs_(inputs.size()) {
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].is_zero()) continue;
      if (!inputs[k].is_homogeneous()) {
        throw GradingError("Groebner basis input must be homogeneous: " + inputs[k].to_string());
      }
      pending_inputs_.push_back(k);
    }
    inputs_.assign(inputs.begin(), inputs.end());
    std::stable_sort(pending_inputs_.begin(), pending_inputs_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return inputs_[a].degree() < inputs_[b].degree();
                     });
  }

  GroebnerBasis run() {
    std::size_t next_input = 0;
    bool truncated = false;
    while (true) {
      std::optional<unsigned> deg;
      if (next_input < pending_inputs_.size()) deg = inputs_[pending_inputs_[next_input]].degree();
      for (const Pair& p : pairs_) {
        if (!deg || p.degree < *deg) deg = p.degree;
      }
      if (!deg) break;
      if (opts_.degree_cap && *deg > *opts_.degree_cap) {
        truncated = true;
        break;
      }
      // Inputs of this degree, then the pairs.
      while (next_input < pending_inputs_.size() &&
             inputs_[pending_inputs_[next_input]].degree() == *deg) {
        const std::size_t k = pending_inputs_[next_input++];
        Cofactors cof;
        if (opts_.track_cofactors) {
          cof.assign(num_inputs_, Polynomial(ring_));
          cof[k] = Polynomial::constant(ring_, 1);
        }
        reduce_and_add(inputs_[k], std::move(cof));
      }
      std::vector<Pair> batch;
      auto split = std::stable_partition(pairs_.begin(), pairs_.end(),
                                         [&](const Pair& p) { return p.degree != *deg; });
      batch.assign(split, pairs_.end());
      pairs_.erase(split, pairs_.end());
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        const auto c = ring_->compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      for (const Pair& p : batch) process_pair(p);
    }
    return finish(truncated);
  }

 private:
  using Cofactors = std::vector<Polynomial>;

  void process_pair(const Pair& p) {
    const Polynomial& gi = basis_[p.i];
    const Polynomial& gj = basis_[p.j];
    const Monomial mi = p.lcm / gi.leading_monomial();
    const Monomial mj = p.lcm / gj.leading_monomial();
    Polynomial s = gi.times_monomial(mi) - gj.times_monomial(mj);
    Cofactors cof;
    if (opts_.track_cofactors) {
      cof.assign(num_inputs_, Polynomial(ring_));
      for (std::size_t k = 0; k < num_inputs_; ++k) {
        cof[k] = cofactors_[p.i][k].times_monomial(mi) - cofactors_[p.j][k].times_monomial(mj);
      }
    }
    reduce_and_add(s, std::move(cof));
  }

  void reduce_and_add(const Polynomial& f, Cofactors cof) {
    std::vector<std::vector<Term>> quot;
    if (opts_.track_cofactors) quot.resize(basis_.size());
    Polynomial r = reduce_by(f, basis_, basis_.size(), false,
                             opts_.track_cofactors ? &quot : nullptr);
    if (r.is_zero()) return;
    const Coeff inv = field_.inv(r.leading_coeff());
    r = r.scaled(inv);
    if (opts_.track_cofactors) {
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (quot[b].empty()) continue;
        const Polynomial q = Polynomial::from_terms(ring_, std::move(quot[b]));
        for (std::size_t k = 0; k < num_inputs_; ++k) {
          if (!cofactors_[b][k].is_zero()) cof[k] -= q * cofactors_[b][k];
        }
      }
      for (Polynomial& c : cof) c = c.scaled(inv);
      cofactors_.push_back(std::move(cof));
    }
    basis_.push_back(std::move(r));
    update_pairs(basis_.size() - 1);
  }

  // Gebauer-Moller installation of the pairs (g, h) for the new element h.
  void update_pairs(std::size_t h) {
    const Monomial& lh = basis_[h].leading_monomial();
    std::vector<Pair> candidates;
    candidates.reserve(h);
    for (std::size_t g = 0; g < h; ++g) {
      if (basis_[g].is_zero()) continue;
      const Monomial l = lcm(basis_[g].leading_monomial(), lh);
      candidates.push_back(Pair{g, h, l, ring_->degree(l)});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = basis_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < candidates.size() && keep; ++r) {
          if (candidates[r].lcm.divides(p.lcm)) keep = false;
        }
        for (const Pair& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return lcm(basis_[p.i].leading_monomial(), lh) != p.lcm &&
             lcm(basis_[p.j].leading_monomial(), lh) != p.lcm;
    });
    for (const Pair& p : kept) {
      if (!basis_[p.i].leading_monomial().coprime(lh)) pairs_.push_back(p);
    }
  }

  GroebnerBasis finish(bool truncated) {
    // Drop elements whose leading monomial is a multiple of another's.
    std::vector<std::size_t> minimal;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      const Monomial& la = basis_[a].leading_monomial();
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b) continue;
        const Monomial& lb = basis_[b].leading_monomial();
        if (lb.divides(la) && (lb != la || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<Polynomial> elems;
    std::vector<Cofactors> cofs;
    for (std::size_t a : minimal) {
      elems.push_back(basis_[a]);
      if (opts_.track_cofactors) cofs.push_back(cofactors_[a]);
    }
    // Tail reduction.
    for (std::size_t a = 0; a < elems.size(); ++a) {
      std::vector<std::vector<Term>> quot;
      if (opts_.track_cofactors) quot.resize(elems.size());
      Polynomial r = reduce_by(elems[a], elems, a, true,
                               opts_.track_cofactors ? &quot : nullptr);
      if (opts_.track_cofactors) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
          if (quot[b].empty()) continue;
          const Polynomial q = Polynomial::from_terms(ring_, std::move(quot[b]));
          for (std::size_t k = 0; k < num_inputs_; ++k) {
            if (!cofs[b][k].is_zero()) cofs[a][k] -= q * cofs[b][k];
          }
        }
      }
      elems[a] = std::move(r);
    }
    std::vector<std::size_t> order(elems.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ring_->compare(elems[a].leading_monomial(), elems[b].leading_monomial()) ==
             std::strong_ordering::less;
    });
    GroebnerBasis out;
    out.ring = ring_;
    for (std::size_t a : order) {
      out.elements.push_back(std::move(elems[a]));
      if (opts_.track_cofactors) out.cofactors.push_back(std::move(cofs[a]));
    }
    if (truncated) out.truncated_at = opts_.degree_cap;
    return out;
  }

  RingPtr ring_;
  PrimeField field_;
  GroebnerOptions opts_;
  std::size_t num_inputs_;
  std::vector<Polynomial> inputs_;
  std::vector<std::size_t> pending_inputs_;
  std::vector<Polynomial> basis_;
  std::vector<Cofactors> cofactors_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const Polynomial& g : elements) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                             const GroebnerOptions& options) {
  for (const Polynomial& g : generators) {
    if (g.ring() != ring && !g.ring()->same_as(*ring)) {
      throw ContextError("generator from a different ring");
    }
  }
  return Buchberger(ring, generators, options).run();
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<Polynomial> divs(divisors.begin(), divisors.end());
  for (const Polynomial& g : divs) {
    if (g.ring() != f.ring() && !g.ring()->same_as(*f.ring())) {
      throw ContextError("divisor from a different ring");
    }
  }
  std::vector<std::vector<Term>> quot(divs.size());
  Division out{{}, reduce_by(f, divs, divs.size(), false, &quot)};
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q)));
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.ring && f.ring() != basis.ring && !f.ring()->same_as(*basis.ring)) {
    throw ContextError("normal form across rings");
  }
  if (basis.truncated_at && f.degree() > *basis.truncated_at) {
    throw SizeError("normal form above the truncation degree of the basis");
  }
  return reduce_by(f, basis.elements, basis.elements.size(), false, nullptr);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& g = basis.elements;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
      if (basis.truncated_at && g[i].ring()->degree(l) > *basis.truncated_at) continue;
      const Polynomial s = g[i].times_monomial(l / g[i].leading_monomial()).scaled(g[j].leading_coeff()) -
                           g[j].times_monomial(l / g[j].leading_monomial()).scaled(g[i].leading_coeff());
      if (!reduce_by(s, g, g.size(), false, nullptr).is_zero()) return false;
    }
  }
  return true;
}

IdealHandle::IdealHandle(RingPtr ring, std::vector<NamedPolynomial> generators)
    : ring_(std::move(ring)) {
  for (NamedPolynomial& g : generators) {
    if (g.poly.ring() != ring_ && !g.poly.ring()->same_as(*ring_)) {
      throw ContextError("generator '" + g.name + "' from a different ring");
    }
    if (g.poly.is_zero()) continue;
    if (!g.poly.is_homogeneous()) {
      throw GradingError("generator '" + g.name + "' is not homogeneous");
    }
    generators_.push_back(std::move(g));
  }
}

std::vector<Polynomial> IdealHandle::generator_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.poly);
  return out;
}

unsigned IdealHandle::max_generator_degree() const noexcept {
  unsigned d = 0;
  for (const auto& g : generators_) d = std::max(d, g.poly.degree());
  return d;
}

std::shared_ptr<const GroebnerBasis> IdealHandle::basis(std::optional<unsigned> degree) const {
  std::lock_guard lock(mutex_);
  if (cached_ && (!cached_->truncated_at || (degree && *degree <= *cached_->truncated_at))) {
    return cached_;
  }
  GroebnerOptions opts;
  opts.degree_cap = degree;
  const auto polys = generator_polynomials();
  cached_ = std::make_shared<const GroebnerBasis>(groebner_basis(ring_, polys, opts));
  return cached_;
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal) {
  return normal_form(f, *ideal.basis(f.degree()));
}

bool contains(const IdealHandle& ideal, const Polynomial& f) {
  return normal_form(f, ideal).is_zero();
}

bool ideal_containment(const IdealHandle& inner, const IdealHandle& outer) {
  unsigned d = 0;
  for (const auto& g : inner.generators()) d = std::max(d, g.poly.degree());
  const auto basis = outer.basis(d);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const NamedPolynomial& g) { return normal_form(g.poly, *basis).is_zero(); });
}

std::vector<Monomial> leading_term_ideal(const IdealHandle& ideal, std::optional<unsigned> degree) {
  return ideal.basis(degree)->leading_monomials();
}

}  // namespace chowdefect
