#include "hopfrb/hopf.hpp"

#include <mutex>
#include <optional>
#include <set>

#include "detail_check.hpp"
#include "detail_prefix.hpp"
#include "hopfrb/sweedler.hpp"

namespace hopfrb {

struct FiniteHopfAlgebra::VerifyCache {
  std::once_flag flag;
  std::optional<VerificationReport> report;
};

FiniteHopfAlgebra::FiniteHopfAlgebra(Parts parts)
    : field_(parts.field),
      basis_(std::move(parts.basis)),
      mult_(std::move(parts.mult)),
      unit_(std::move(parts.unit)),
      comult_(std::move(parts.comult)),
      counit_(std::move(parts.counit)),
      antipode_(std::move(parts.antipode)),
      cache_(std::make_shared<VerifyCache>()) {
  const std::size_t n = basis_.size();
  if (n == 0) throw std::invalid_argument("empty basis");
  std::set<std::string> seen(basis_.begin(), basis_.end());
  if (seen.size() != n) throw std::invalid_argument("duplicate basis labels");
  const std::vector<std::size_t> cube{n, n, n}, line{n};
  if (mult_.dims() != cube) throw std::invalid_argument("mult tensor must have dims (n,n,n)");
  if (comult_.dims() != cube) throw std::invalid_argument("comult tensor must have dims (n,n,n)");
  if (unit_.dims() != line || counit_.dims() != line)
    throw std::invalid_argument("unit/counit must be vectors of length n");
  if (antipode_.dim() != n) throw std::invalid_argument("antipode dimension mismatch");
  for (const auto* f : {&mult_.field(), &comult_.field(), &unit_.field(), &counit_.field(),
                        &antipode_.field()})
    if (*f != field_) throw std::invalid_argument("structure tensor field mismatch");

  commutative_ = mult_.permuted({1, 0, 2}) == mult_;
  cocommutative_ = comult_.permuted({0, 2, 1}) == comult_;
}

Vec FiniteHopfAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.dims() != std::vector<std::size_t>{dim()} || y.dims() != x.dims())
    throw std::invalid_argument("element dimension mismatch");
  Vec r = zero_vec();
  for (const auto& [xi, xc] : x.entries())
    for (const auto& [yi, yc] : y.entries())
      detail::for_prefix(mult_.entries(), {xi[0], yi[0]}, [&](const Index& k, const Scalar& c) {
        r.add({k[2]}, xc * yc * c);
      });
  return r;
}

SparseTensor FiniteHopfAlgebra::comult_of(const Vec& x) const {
  if (x.dims() != std::vector<std::size_t>{dim()})
    throw std::invalid_argument("element dimension mismatch");
  SparseTensor r({dim(), dim()}, field_);
  for (const auto& [xi, xc] : x.entries())
    detail::for_prefix(comult_.entries(), {xi[0]}, [&](const Index& k, const Scalar& c) {
      r.add({k[1], k[2]}, xc * c);
    });
  return r;
}

Scalar FiniteHopfAlgebra::counit_of(const Vec& x) const {
  Scalar s = Scalar::zero(field_);
  for (const auto& [xi, xc] : x.entries()) s += xc * counit_.at({xi[0]});
  return s;
}

namespace {

using detail::Check;
using AxiomCheck = detail::Check;

VerificationReport run_verify(const FiniteHopfAlgebra& h) {
  VerificationReport rep;
  const std::size_t n = h.dim();

  {
    AxiomCheck c{"associativity", "(xy)z = x(yz)"};
    for (std::size_t i = 0; i < n && c.pass; ++i)
      for (std::size_t j = 0; j < n && c.pass; ++j)
        for (std::size_t k = 0; k < n && c.pass; ++k) {
          Vec ei = h.basis_vec(i), ej = h.basis_vec(j), ek = h.basis_vec(k);
          c.expect({i, j, k}, h.multiply(h.multiply(ei, ej), ek),
                   h.multiply(ei, h.multiply(ej, ek)));
        }
    std::move(c).emit(rep);
  }
  {
    AxiomCheck c{"unit", "1·x = x = x·1"};
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      Vec ei = h.basis_vec(i);
      c.expect({i}, h.multiply(h.unit(), ei), ei);
      c.expect({i}, h.multiply(ei, h.unit()), ei);
    }
    std::move(c).emit(rep);
  }
  {
    AxiomCheck c{"coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ"};
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      SweedlerTensor st(h, h.basis_vec(i));
      c.expect({i}, st.comult(0).comult(0).tensor(), st.comult(0).comult(1).tensor());
    }
    std::move(c).emit(rep);
  }
  {
    AxiomCheck c{"counit", "(ε⊗id)Δ = id = (id⊗ε)Δ"};
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      SweedlerTensor st(h, h.basis_vec(i));
      c.expect({i}, st.comult(0).counit(0).tensor(), h.basis_vec(i));
      c.expect({i}, st.comult(0).counit(1).tensor(), h.basis_vec(i));
    }
    std::move(c).emit(rep);
  }
  {
    AxiomCheck c{"bialgebra", "Δ and ε are algebra maps, Δ(1)=1⊗1, ε(1)=1"};
    for (std::size_t i = 0; i < n && c.pass; ++i)
      for (std::size_t j = 0; j < n && c.pass; ++j) {
        Vec ei = h.basis_vec(i), ej = h.basis_vec(j);
        SparseTensor lhs = h.comult_of(h.multiply(ei, ej));
        SweedlerTensor rhs = SweedlerTensor(h, ei).comult(0).outer(
            SweedlerTensor(h, ej).comult(0));
        // slots [x1 x2 y1 y2] -> [x1·y1, x2·y2]
        c.expect({i, j}, lhs, rhs.multiply(0, 2).multiply(1, 2).tensor());
        c.expect_scalar({i, j}, h.counit_of(h.multiply(ei, ej)),
                        h.counit_of(ei) * h.counit_of(ej));
      }
    if (c.pass) {
      c.expect({}, h.comult_of(h.unit()), tensor_outer(h.unit(), h.unit()));
      c.expect_scalar({}, h.counit_of(h.unit()), Scalar::one(h.field()));
    }
    std::move(c).emit(rep);
  }
  {
    AxiomCheck c{"antipode", "m(S⊗id)Δ = uε = m(id⊗S)Δ"};
    for (std::size_t i = 0; i < n && c.pass; ++i) {
      SweedlerTensor st(h, h.basis_vec(i));
      Vec expected = h.unit().scaled(h.counit_of(h.basis_vec(i)));
      c.expect({i}, st.comult(0).antipode(0).multiply(0, 1).tensor(), expected);
      c.expect({i}, st.comult(0).antipode(1).multiply(0, 1).tensor(), expected);
    }
    std::move(c).emit(rep);
  }
  return rep;
}

}  // namespace

const VerificationReport& FiniteHopfAlgebra::verify() const {
  std::call_once(cache_->flag, [this] { cache_->report = run_verify(*this); });
  return *cache_->report;
}

VerificationReport verify_hopf(const FiniteHopfAlgebra& h) { return h.verify(); }

FiniteHopfAlgebra build_group_algebra(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  SparseTensor mult({n, n, n}, f), comult({n, n, n}, f);
  Vec unit({n}, f), counit({n}, f);
  LinearOperator s(n, f);
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.set({i, j, g.mul(i, j)}, one);
    comult.set({i, i, i}, one);
    counit.set({i}, one);
    s.set(g.inverse(i), i, one);
  }
  unit.set({g.identity()}, one);
  return FiniteHopfAlgebra({f, g.labels(), std::move(mult), std::move(unit), std::move(comult),
                            std::move(counit), std::move(s)});
}

FiniteHopfAlgebra build_dual_group_algebra(const FiniteGroup& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& l : g.labels()) labels.push_back(l + "^");
  SparseTensor mult({n, n, n}, f), comult({n, n, n}, f);
  Vec unit({n}, f), counit({n}, f);
  LinearOperator s(n, f);
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    mult.set({i, i, i}, one);
    unit.set({i}, one);
    for (std::size_t j = 0; j < n; ++j) comult.set({g.mul(i, j), i, j}, one);
    s.set(g.inverse(i), i, one);
  }
  counit.set({g.identity()}, one);
  return FiniteHopfAlgebra({f, std::move(labels), std::move(mult), std::move(unit),
                            std::move(comult), std::move(counit), std::move(s)});
}

FiniteHopfAlgebra linear_dual(const FiniteHopfAlgebra& h) {
  const auto& rep = h.verify();
  if (!rep.pass()) {
    std::string bad;
    for (const auto& c : rep.checks())
      if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.label;
    throw PreconditionError("linear_dual requires a verified Hopf algebra; failing: " + bad);
  }
  std::vector<std::string> labels;
  labels.reserve(h.dim());
  for (const auto& l : h.basis()) labels.push_back(l + "^");
  // mult*(a,b;c) = comult(c;a,b), comult*(c;a,b) = mult(a,b;c)
  return FiniteHopfAlgebra({h.field(), std::move(labels), h.comult_tensor().permuted({1, 2, 0}),
                            h.counit_vector(), h.mult_tensor().permuted({2, 0, 1}),
                            h.unit_vector(), h.antipode().transpose()});
}

SparseTensor iterated_comult(const FiniteHopfAlgebra& h, const Vec& x, std::size_t legs) {
  if (legs == 0) throw std::invalid_argument("iterated_comult needs at least one leg");
  return SweedlerTensor(h, x).comult_iter(0, legs).tensor();
}

VerificationReport is_algebra_map(const FiniteHopfAlgebra& dom, const FiniteHopfAlgebra& cod,
                                  const LinearOperator& f) {
  if (dom.dim() != cod.dim() || f.dim() != dom.dim() || dom.field() != cod.field())
    throw std::invalid_argument("algebra map dimension/field mismatch");
  VerificationReport rep;
  AxiomCheck mul{"multiplicative", "f(xy) = f(x)f(y)"};
  for (std::size_t i = 0; i < dom.dim() && mul.pass; ++i)
    for (std::size_t j = 0; j < dom.dim() && mul.pass; ++j) {
      Vec ei = dom.basis_vec(i), ej = dom.basis_vec(j);
      mul.expect({i, j}, f.apply(dom.multiply(ei, ej)),
                 cod.multiply(f.apply(ei), f.apply(ej)));
    }
  std::move(mul).emit(rep);
  AxiomCheck unital{"unital", "f(1) = 1"};
  unital.expect({}, f.apply(dom.unit()), cod.unit());
  std::move(unital).emit(rep);
  return rep;
}

VerificationReport is_coalgebra_map(const FiniteHopfAlgebra& dom, const FiniteHopfAlgebra& cod,
                                    const LinearOperator& f) {
  if (dom.dim() != cod.dim() || f.dim() != dom.dim() || dom.field() != cod.field())
    throw std::invalid_argument("coalgebra map dimension/field mismatch");
  VerificationReport rep;
  AxiomCheck com{"comultiplicative", "Δf = (f⊗f)Δ"};
  for (std::size_t i = 0; i < dom.dim() && com.pass; ++i) {
    Vec ei = dom.basis_vec(i);
    SweedlerTensor rhs = SweedlerTensor(dom, ei).comult(0).apply(0, f).apply(1, f);
    com.expect({i}, cod.comult_of(f.apply(ei)), rhs.tensor());
  }
  std::move(com).emit(rep);
  AxiomCheck cou{"counital", "ε∘f = ε"};
  for (std::size_t i = 0; i < dom.dim() && cou.pass; ++i) {
    Vec ei = dom.basis_vec(i);
    cou.expect_scalar({i}, cod.counit_of(f.apply(ei)), dom.counit_of(ei));
  }
  std::move(cou).emit(rep);
  return rep;
}

GrouplikeSet grouplikes(const FiniteHopfAlgebra& h) {
  GrouplikeSet out;
  const std::size_t n = h.dim();
  auto is_grouplike = [&](const Vec& x) {
    return h.counit_of(x).is_one() && h.comult_of(x) == tensor_outer(x, x);
  };
  if (n > 8) {
    out.basis_restricted = true;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = h.basis_vec(i);
      if (is_grouplike(e)) out.elements.push_back(e);
    }
    return out;
  }
  // exhaustive over coefficient patterns in {0, 1, -1}
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  const Scalar plus = Scalar::one(h.field());
  const Scalar minus = -plus;
  for (std::size_t code = 1; code < total; ++code) {
    Vec x = h.zero_vec();
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t d = c % 3;
      c /= 3;
      if (d == 1) x.set({i}, plus);
      if (d == 2) x.set({i}, minus);
    }
    if (!is_grouplike(x)) continue;
    bool dup = false;  // GF(2) folds -1 onto 1
    for (const auto& y : out.elements)
      if (y == x) {
        dup = true;
        break;
      }
    if (!dup) out.elements.push_back(std::move(x));
  }
  return out;
}

FiniteGroup grouplike_group_structure(const FiniteHopfAlgebra& h) {
  GrouplikeSet g = grouplikes(h);
  const std::size_t m = g.elements.size();
  if (m == 0) throw PreconditionError("no grouplike elements found");
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& x : g.elements) labels.push_back(element_str(h, x));
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec prod = h.multiply(g.elements[a], g.elements[b]);
      bool found = false;
      for (std::size_t c = 0; c < m; ++c)
        if (prod == g.elements[c]) {
          table[a][b] = c;
          found = true;
          break;
        }
      if (!found)
        throw PreconditionError("grouplike set not closed under multiplication at " + labels[a] +
                                " · " + labels[b] + (g.basis_restricted ? " (basis-restricted search)" : ""));
    }
  try {
    return FiniteGroup(std::move(labels), std::move(table));
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("grouplike set is not a group: ") + e.what());
  }
}

std::string element_str(const FiniteHopfAlgebra& h, const Vec& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : x.entries()) {
    std::string coeff = c.str();
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != "1") out += mag + "*";
    out += h.basis()[idx[0]];
  }
  return out;
}

bool same_structure(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& b) {
  return a.field() == b.field() && a.mult_tensor() == b.mult_tensor() &&
         a.unit_vector() == b.unit_vector() && a.comult_tensor() == b.comult_tensor() &&
         a.counit_vector() == b.counit_vector() && a.antipode() == b.antipode();
}

}  // namespace hopfrb
