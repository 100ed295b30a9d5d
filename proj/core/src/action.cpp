#include "hopfrb/action.hpp"

#include <mutex>
#include <optional>

#include "detail_check.hpp"
#include "detail_prefix.hpp"
#include "hopfrb/sweedler.hpp"

namespace hopfrb {

using detail::Check;

struct BimoduleAction::Cache {
  std::once_flag bimodule_flag, bilinear_flag;
  std::optional<VerificationReport> bimodule, bilinear;
};

struct BicomoduleCoaction::Cache {
  std::once_flag bicomodule_flag, bicolinear_flag;
  std::optional<VerificationReport> bicomodule, bicolinear;
};


BimoduleAction::BimoduleAction(FiniteHopfAlgebra h, FiniteHopfAlgebra a, SparseTensor left,
                               SparseTensor right)
    : h_(std::move(h)), a_(std::move(a)), left_(std::move(left)), right_(std::move(right)),
      cache_(std::make_shared<Cache>()) {
  const std::size_t nh = h_.dim(), na = a_.dim();
  if (left_.dims() != std::vector<std::size_t>{nh, na, na})
    throw std::invalid_argument("left action tensor must have dims (dim H, dim A, dim A)");
  if (right_.dims() != std::vector<std::size_t>{na, nh, na})
    throw std::invalid_argument("right action tensor must have dims (dim A, dim H, dim A)");
  if (h_.field() != a_.field() || left_.field() != h_.field() || right_.field() != h_.field())
    throw std::invalid_argument("action field mismatch");
}

BimoduleAction BimoduleAction::trivial(const FiniteHopfAlgebra& h, const FiniteHopfAlgebra& a) {
  const std::size_t nh = h.dim(), na = a.dim();
  SparseTensor left({nh, na, na}, h.field()), right({na, nh, na}, h.field());
  for (std::size_t i = 0; i < nh; ++i) {
    Scalar e = h.counit_vector().at({i});
    if (e.is_zero()) continue;
    for (std::size_t j = 0; j < na; ++j) {
      left.set({i, j, j}, e);
      right.set({j, i, j}, e);
    }
  }
  return BimoduleAction(h, a, std::move(left), std::move(right));
}

Vec BimoduleAction::act_left(const Vec& hx, const Vec& ax) const {
  Vec r = a_.zero_vec();
  for (const auto& [hi, hc] : hx.entries())
    for (const auto& [ai, ac] : ax.entries())
      detail::for_prefix(left_.entries(), {hi[0], ai[0]}, [&](const Index& t, const Scalar& tc) {
        r.add({t[2]}, hc * ac * tc);
      });
  return r;
}

Vec BimoduleAction::act_right(const Vec& ax, const Vec& hx) const {
  Vec r = a_.zero_vec();
  for (const auto& [ai, ac] : ax.entries())
    for (const auto& [hi, hc] : hx.entries())
      detail::for_prefix(right_.entries(), {ai[0], hi[0]}, [&](const Index& t, const Scalar& tc) {
        r.add({t[2]}, hc * ac * tc);
      });
  return r;
}

bool BimoduleAction::left_is_trivial() const {
  return left_ == trivial(h_, a_).left();
}

bool BimoduleAction::right_is_trivial() const {
  return right_ == trivial(h_, a_).right();
}

BicomoduleCoaction::BicomoduleCoaction(FiniteHopfAlgebra h, FiniteHopfAlgebra c, SparseTensor left,
                                       SparseTensor right)
    : h_(std::move(h)), c_(std::move(c)), left_(std::move(left)), right_(std::move(right)),
      cache_(std::make_shared<Cache>()) {
  const std::size_t nh = h_.dim(), nc = c_.dim();
  if (left_.dims() != std::vector<std::size_t>{nc, nh, nc})
    throw std::invalid_argument("left coaction tensor must have dims (dim C, dim H, dim C)");
  if (right_.dims() != std::vector<std::size_t>{nc, nc, nh})
    throw std::invalid_argument("right coaction tensor must have dims (dim C, dim C, dim H)");
  if (h_.field() != c_.field() || left_.field() != h_.field() || right_.field() != h_.field())
    throw std::invalid_argument("coaction field mismatch");
}

BicomoduleCoaction BicomoduleCoaction::trivial(const FiniteHopfAlgebra& h,
                                               const FiniteHopfAlgebra& c) {
  const std::size_t nh = h.dim(), nc = c.dim();
  SparseTensor left({nc, nh, nc}, h.field()), right({nc, nc, nh}, h.field());
  for (std::size_t i = 0; i < nh; ++i) {
    Scalar u = h.unit_vector().at({i});
    if (u.is_zero()) continue;
    for (std::size_t j = 0; j < nc; ++j) {
      left.set({j, i, j}, u);
      right.set({j, j, i}, u);
    }
  }
  return BicomoduleCoaction(h, c, std::move(left), std::move(right));
}

SparseTensor BicomoduleCoaction::coact_left(const Vec& x) const {
  SparseTensor r({h_.dim(), c_.dim()}, h_.field());
  for (const auto& [ci, cc] : x.entries())
    detail::for_prefix(left_.entries(), {ci[0]}, [&](const Index& t, const Scalar& tc) {
      r.add({t[1], t[2]}, cc * tc);
    });
  return r;
}

SparseTensor BicomoduleCoaction::coact_right(const Vec& x) const {
  SparseTensor r({c_.dim(), h_.dim()}, h_.field());
  for (const auto& [ci, cc] : x.entries())
    detail::for_prefix(right_.entries(), {ci[0]}, [&](const Index& t, const Scalar& tc) {
      r.add({t[1], t[2]}, cc * tc);
    });
  return r;
}

bool BicomoduleCoaction::left_is_trivial() const { return left_ == trivial(h_, c_).left(); }

bool BicomoduleCoaction::right_is_trivial() const { return right_ == trivial(h_, c_).right(); }

namespace {

VerificationReport run_bimodule_suite(const BimoduleAction& act) {
  VerificationReport rep;
  const FiniteHopfAlgebra& H = act.h();
  const FiniteHopfAlgebra& A = act.a();
  const std::size_t nh = H.dim(), na = A.dim();

  {
    Check c{"left-module", "(gh)▷a = g▷(h▷a), 1▷a = a"};
    for (std::size_t g = 0; g < nh && c.pass; ++g)
      for (std::size_t h = 0; h < nh && c.pass; ++h)
        for (std::size_t a = 0; a < na && c.pass; ++a) {
          Vec prod = H.multiply(H.basis_vec(g), H.basis_vec(h));
          c.expect({g, h, a}, act.act_left(prod, A.basis_vec(a)),
                   act.act_left(H.basis_vec(g), act.act_left(H.basis_vec(h), A.basis_vec(a))));
        }
    for (std::size_t a = 0; a < na && c.pass; ++a)
      c.expect({a}, act.act_left(H.unit(), A.basis_vec(a)), A.basis_vec(a));
    std::move(c).emit(rep);
  }
  {
    Check c{"right-module", "a◁(gh) = (a◁g)◁h, a◁1 = a"};
    for (std::size_t a = 0; a < na && c.pass; ++a)
      for (std::size_t g = 0; g < nh && c.pass; ++g)
        for (std::size_t h = 0; h < nh && c.pass; ++h) {
          Vec prod = H.multiply(H.basis_vec(g), H.basis_vec(h));
          c.expect({a, g, h}, act.act_right(A.basis_vec(a), prod),
                   act.act_right(act.act_right(A.basis_vec(a), H.basis_vec(g)), H.basis_vec(h)));
        }
    for (std::size_t a = 0; a < na && c.pass; ++a)
      c.expect({a}, act.act_right(A.basis_vec(a), H.unit()), A.basis_vec(a));
    std::move(c).emit(rep);
  }
  {
    Check c{"bimodule-compat", "(h▷a)◁g = h▷(a◁g)"};
    for (std::size_t h = 0; h < nh && c.pass; ++h)
      for (std::size_t a = 0; a < na && c.pass; ++a)
        for (std::size_t g = 0; g < nh && c.pass; ++g)
          c.expect({h, a, g},
                   act.act_right(act.act_left(H.basis_vec(h), A.basis_vec(a)), H.basis_vec(g)),
                   act.act_left(H.basis_vec(h), act.act_right(A.basis_vec(a), H.basis_vec(g))));
    std::move(c).emit(rep);
  }
  {
    Check c{"left-measuring", "h▷(ab) = (h₁▷a)(h₂▷b), h▷1 = ε(h)1"};
    for (std::size_t h = 0; h < nh && c.pass; ++h) {
      for (std::size_t a = 0; a < na && c.pass; ++a)
        for (std::size_t b = 0; b < na && c.pass; ++b) {
          Vec lhs = act.act_left(H.basis_vec(h), A.multiply(A.basis_vec(a), A.basis_vec(b)));
          // [h1 h2 a b] -> [h1▷a, h2▷b] -> product
          SweedlerTensor t = SweedlerTensor(H, H.basis_vec(h))
                                 .comult(0)
                                 .outer(SweedlerTensor(A, A.basis_vec(a)))
                                 .outer(SweedlerTensor(A, A.basis_vec(b)));
          c.expect({h, a, b}, lhs,
                   t.act_left(act, 0, 2).act_left(act, 0, 2).multiply(0, 1).tensor());
        }
      c.expect({h}, act.act_left(H.basis_vec(h), A.unit()),
               A.unit().scaled(H.counit_of(H.basis_vec(h))));
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-measuring", "(ab)◁h = (a◁h₁)(b◁h₂), 1◁h = ε(h)1"};
    for (std::size_t h = 0; h < nh && c.pass; ++h) {
      for (std::size_t a = 0; a < na && c.pass; ++a)
        for (std::size_t b = 0; b < na && c.pass; ++b) {
          Vec lhs = act.act_right(A.multiply(A.basis_vec(a), A.basis_vec(b)), H.basis_vec(h));
          // [a b h1 h2] -> [a◁h1, b◁h2] -> product
          SweedlerTensor t = SweedlerTensor(A, A.basis_vec(a))
                                 .outer(SweedlerTensor(A, A.basis_vec(b)))
                                 .outer(SweedlerTensor(H, H.basis_vec(h)).comult(0));
          c.expect({a, b, h}, lhs,
                   t.act_right(act, 0, 2).act_right(act, 1, 2).multiply(0, 1).tensor());
        }
      c.expect({h}, act.act_right(A.unit(), H.basis_vec(h)),
               A.unit().scaled(H.counit_of(H.basis_vec(h))));
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"left-coalgebra", "Δ(h▷a) = h₁▷a₁⊗h₂▷a₂, ε(h▷a) = ε(h)ε(a)"};
    for (std::size_t h = 0; h < nh && c.pass; ++h)
      for (std::size_t a = 0; a < na && c.pass; ++a) {
        Vec img = act.act_left(H.basis_vec(h), A.basis_vec(a));
        // [h1 h2 a1 a2] -> [h1▷a1, h2▷a2]
        SweedlerTensor t = SweedlerTensor(H, H.basis_vec(h))
                               .comult(0)
                               .outer(SweedlerTensor(A, A.basis_vec(a)).comult(0));
        c.expect({h, a}, A.comult_of(img), t.act_left(act, 0, 2).act_left(act, 0, 2).tensor());
        c.expect_scalar({h, a}, A.counit_of(img),
                        H.counit_of(H.basis_vec(h)) * A.counit_of(A.basis_vec(a)));
      }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-coalgebra", "Δ(a◁h) = a₁◁h₁⊗a₂◁h₂, ε(a◁h) = ε(a)ε(h)"};
    for (std::size_t a = 0; a < na && c.pass; ++a)
      for (std::size_t h = 0; h < nh && c.pass; ++h) {
        Vec img = act.act_right(A.basis_vec(a), H.basis_vec(h));
        SweedlerTensor t = SweedlerTensor(A, A.basis_vec(a))
                               .comult(0)
                               .outer(SweedlerTensor(H, H.basis_vec(h)).comult(0));
        // [a1 a2 h1 h2] -> [a1◁h1, a2◁h2]
        c.expect({a, h}, A.comult_of(img), t.act_right(act, 0, 2).act_right(act, 1, 2).tensor());
        c.expect_scalar({a, h}, A.counit_of(img),
                        A.counit_of(A.basis_vec(a)) * H.counit_of(H.basis_vec(h)));
      }
    std::move(c).emit(rep);
  }
  return rep;
}

VerificationReport run_bilinear_suite(const BimoduleAction& act) {
  VerificationReport rep;
  const FiniteHopfAlgebra& H = act.h();
  const FiniteHopfAlgebra& A = act.a();
  {
    Check c{"antipode-left-linear", "S(h▷a) = h▷S(a)"};
    for (std::size_t h = 0; h < H.dim() && c.pass; ++h)
      for (std::size_t a = 0; a < A.dim() && c.pass; ++a)
        c.expect({h, a}, A.antipode_of(act.act_left(H.basis_vec(h), A.basis_vec(a))),
                 act.act_left(H.basis_vec(h), A.antipode_of(A.basis_vec(a))));
    std::move(c).emit(rep);
  }
  {
    Check c{"antipode-right-linear", "S(a◁h) = S(a)◁h"};
    for (std::size_t a = 0; a < A.dim() && c.pass; ++a)
      for (std::size_t h = 0; h < H.dim() && c.pass; ++h)
        c.expect({a, h}, A.antipode_of(act.act_right(A.basis_vec(a), H.basis_vec(h))),
                 act.act_right(A.antipode_of(A.basis_vec(a)), H.basis_vec(h)));
    std::move(c).emit(rep);
  }
  return rep;
}

VerificationReport run_bicomodule_suite(const BicomoduleCoaction& coact) {
  VerificationReport rep;
  const FiniteHopfAlgebra& H = coact.h();
  const FiniteHopfAlgebra& C = coact.c();
  const std::size_t nc = C.dim();

  {
    Check c{"left-comodule", "(Δ⊗id)ρˡ = (id⊗ρˡ)ρˡ, (ε⊗id)ρˡ = id"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor base = SweedlerTensor(C, C.basis_vec(i)).coact_left(coact, 0);
      c.expect({i}, base.comult(0).tensor(), base.coact_left(coact, 1).tensor());
      c.expect({i}, base.counit(0).tensor(), C.basis_vec(i));
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-comodule", "(id⊗Δ)ρʳ = (ρʳ⊗id)ρʳ, (id⊗ε)ρʳ = id"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor base = SweedlerTensor(C, C.basis_vec(i)).coact_right(coact, 0);
      c.expect({i}, base.comult(1).tensor(), base.coact_right(coact, 0).tensor());
      c.expect({i}, base.counit(1).tensor(), C.basis_vec(i));
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"bicomodule-compat", "(ρˡ⊗id)ρʳ = (id⊗ρʳ)ρˡ"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      c.expect({i}, x.coact_right(coact, 0).coact_left(coact, 0).tensor(),
               x.coact_left(coact, 0).coact_right(coact, 1).tensor());
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"left-multiplicative", "ρˡ(ab) = a₍₋₁₎b₍₋₁₎⊗a₍₀₎b₍₀₎"};
    for (std::size_t a = 0; a < nc && c.pass; ++a)
      for (std::size_t b = 0; b < nc && c.pass; ++b) {
        SparseTensor lhs = coact.coact_left(C.multiply(C.basis_vec(a), C.basis_vec(b)));
        SweedlerTensor t = SweedlerTensor(C, C.basis_vec(a))
                               .coact_left(coact, 0)
                               .outer(SweedlerTensor(C, C.basis_vec(b)).coact_left(coact, 0));
        // [a(-1) a(0) b(-1) b(0)] -> [a(-1)b(-1), a(0)b(0)]
        c.expect({a, b}, lhs, t.multiply(0, 2).multiply(1, 2).tensor());
      }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-multiplicative", "ρʳ(ab) = a₍₀₎b₍₀₎⊗a₍₁₎b₍₁₎"};
    for (std::size_t a = 0; a < nc && c.pass; ++a)
      for (std::size_t b = 0; b < nc && c.pass; ++b) {
        SparseTensor lhs = coact.coact_right(C.multiply(C.basis_vec(a), C.basis_vec(b)));
        SweedlerTensor t = SweedlerTensor(C, C.basis_vec(a))
                               .coact_right(coact, 0)
                               .outer(SweedlerTensor(C, C.basis_vec(b)).coact_right(coact, 0));
        // [a[0] a[1] b[0] b[1]] -> [a[0]b[0], a[1]b[1]]
        c.expect({a, b}, lhs, t.multiply(0, 2).multiply(1, 2).tensor());
      }
    std::move(c).emit(rep);
  }
  {
    Check c{"unit-coaction", "ρˡ(1) = 1⊗1, ρʳ(1) = 1⊗1"};
    c.expect({}, coact.coact_left(C.unit()), tensor_outer(H.unit(), C.unit()));
    c.expect({}, coact.coact_right(C.unit()), tensor_outer(C.unit(), H.unit()));
    std::move(c).emit(rep);
  }
  {
    Check c{"left-cocompat", "c₍₋₁₎⊗Δ(c₍₀₎) = c₁₍₋₁₎c₂₍₋₁₎⊗c₁₍₀₎⊗c₂₍₀₎"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      SweedlerTensor rhs =
          x.comult(0).coact_left(coact, 0).coact_left(coact, 2).multiply(0, 2);
      c.expect({i}, x.coact_left(coact, 0).comult(1).tensor(), rhs.tensor());
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-cocompat", "Δ(c₍₀₎)⊗c₍₁₎ = c₁₍₀₎⊗c₂₍₀₎⊗c₁₍₁₎c₂₍₁₎"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      // [c1[0] c1[1] c2[0] c2[1]] -> [c1[0], c1[1]c2[1], c2[0]] -> permute
      SweedlerTensor rhs = x.comult(0)
                               .coact_right(coact, 0)
                               .coact_right(coact, 2)
                               .multiply(1, 3)
                               .permute({0, 2, 1});
      c.expect({i}, x.coact_right(coact, 0).comult(0).tensor(), rhs.tensor());
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"left-counit-compat", "ε(c₍₀₎)c₍₋₁₎ = ε(c)1"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      c.expect({i}, x.coact_left(coact, 0).counit(1).tensor(),
               H.unit().scaled(C.counit_of(C.basis_vec(i))));
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"right-counit-compat", "ε(c₍₀₎)c₍₁₎ = ε(c)1"};
    for (std::size_t i = 0; i < nc && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      c.expect({i}, x.coact_right(coact, 0).counit(0).tensor(),
               H.unit().scaled(C.counit_of(C.basis_vec(i))));
    }
    std::move(c).emit(rep);
  }
  return rep;
}

VerificationReport run_bicolinear_suite(const BicomoduleCoaction& coact) {
  VerificationReport rep;
  const FiniteHopfAlgebra& C = coact.c();
  {
    Check c{"antipode-left-colinear", "ρˡ∘S = (id⊗S)∘ρˡ"};
    for (std::size_t i = 0; i < C.dim() && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      c.expect({i}, coact.coact_left(C.antipode_of(C.basis_vec(i))),
               x.coact_left(coact, 0).antipode(1).tensor());
    }
    std::move(c).emit(rep);
  }
  {
    Check c{"antipode-right-colinear", "ρʳ∘S = (S⊗id)∘ρʳ"};
    for (std::size_t i = 0; i < C.dim() && c.pass; ++i) {
      SweedlerTensor x(C, C.basis_vec(i));
      c.expect({i}, coact.coact_right(C.antipode_of(C.basis_vec(i))),
               x.coact_right(coact, 0).antipode(0).tensor());
    }
    std::move(c).emit(rep);
  }
  return rep;
}

}  // namespace

const VerificationReport& BimoduleAction::bimodule_report() const {
  std::call_once(cache_->bimodule_flag, [this] { cache_->bimodule = run_bimodule_suite(*this); });
  return *cache_->bimodule;
}

const VerificationReport& BimoduleAction::bilinearity_report() const {
  std::call_once(cache_->bilinear_flag, [this] { cache_->bilinear = run_bilinear_suite(*this); });
  return *cache_->bilinear;
}

const VerificationReport& BicomoduleCoaction::bicomodule_report() const {
  std::call_once(cache_->bicomodule_flag,
                 [this] { cache_->bicomodule = run_bicomodule_suite(*this); });
  return *cache_->bicomodule;
}

const VerificationReport& BicomoduleCoaction::bicolinearity_report() const {
  std::call_once(cache_->bicolinear_flag,
                 [this] { cache_->bicolinear = run_bicolinear_suite(*this); });
  return *cache_->bicolinear;
}

VerificationReport verify_bimodule_bialgebra(const BimoduleAction& act) {
  return act.bimodule_report();
}

VerificationReport verify_antipode_bilinear(const BimoduleAction& act) {
  return act.bilinearity_report();
}

VerificationReport verify_bicomodule_bialgebra(const BicomoduleCoaction& coact) {
  return coact.bicomodule_report();
}

VerificationReport verify_antipode_bicolinear(const BicomoduleCoaction& coact) {
  return coact.bicolinearity_report();
}

BicomoduleCoaction dualize_action(const BimoduleAction& act) {
  if (!act.h().verified_ok() || !act.a().verified_ok())
    throw PreconditionError("dualize_action requires verified Hopf algebras");
  if (!act.bimodule_report().pass())
    throw PreconditionError("dualize_action requires a verified bimodule action");
  // ρˡ on A^ over H^ transposes ▷: (a'; h, a) from (h, a; a'),
  // ρʳ transposes ◁: (a'; a, h) from (a, h; a').
  return BicomoduleCoaction(linear_dual(act.h()), linear_dual(act.a()),
                            act.left().permuted({2, 0, 1}), act.right().permuted({2, 0, 1}));
}

}  // namespace hopfrb
