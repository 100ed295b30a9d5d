#include "hopfrb/smash.hpp"

#include "detail_check.hpp"
#include "hopfrb/sweedler.hpp"

namespace hopfrb {

using detail::Check;

namespace {

std::string failing_labels(const VerificationReport& rep) {
  std::string out;
  for (const auto& c : rep.checks())
    if (!c.pass) out += (out.empty() ? "" : ", ") + c.label;
  return out;
}

std::vector<std::string> pair_labels(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& h) {
  std::vector<std::string> labels;
  labels.reserve(a.dim() * h.dim());
  for (const auto& la : a.basis())
    for (const auto& lh : h.basis()) labels.push_back(la + "⊗" + lh);
  return labels;
}

}  // namespace

VerificationReport check_conditions_1ab(const BimoduleAction& act) {
  VerificationReport rep;
  const FiniteHopfAlgebra& H = act.h();
  const FiniteHopfAlgebra& A = act.a();
  {
    Check c{"1a", "h₁▷a⊗h₂ = h₂▷a⊗h₁"};
    for (std::size_t h = 0; h < H.dim() && c.pass; ++h)
      for (std::size_t a = 0; a < A.dim() && c.pass; ++a) {
        SweedlerTensor t =
            SweedlerTensor(H, H.basis_vec(h)).comult(0).outer(SweedlerTensor(A, A.basis_vec(a)));
        // [h1 h2 a]: lhs h1▷a⊗h2 (A,H), rhs h2▷a⊗h1
        c.expect({h, a}, t.act_left(act, 0, 2).permute({1, 0}).tensor(),
                 t.act_left(act, 1, 2).permute({1, 0}).tensor());
      }
    std::move(c).emit(rep);
  }
  {
    Check c{"1b", "a◁h₁⊗h₂ = a◁h₂⊗h₁"};
    for (std::size_t a = 0; a < A.dim() && c.pass; ++a)
      for (std::size_t h = 0; h < H.dim() && c.pass; ++h) {
        SweedlerTensor t =
            SweedlerTensor(A, A.basis_vec(a)).outer(SweedlerTensor(H, H.basis_vec(h)).comult(0));
        // [a h1 h2]
        c.expect({a, h}, t.act_right(act, 0, 1).tensor(), t.act_right(act, 0, 2).tensor());
      }
    std::move(c).emit(rep);
  }
  return rep;
}

VerificationReport check_conditions_1cd(const BicomoduleCoaction& coact) {
  VerificationReport rep;
  const FiniteHopfAlgebra& H = coact.h();
  const FiniteHopfAlgebra& C = coact.c();
  {
    Check c{"1c", "c₍₋₁₎h⊗c₍₀₎ = hc₍₋₁₎⊗c₍₀₎"};
    for (std::size_t i = 0; i < C.dim() && c.pass; ++i)
      for (std::size_t h = 0; h < H.dim() && c.pass; ++h) {
        SweedlerTensor t = SweedlerTensor(C, C.basis_vec(i))
                               .coact_left(coact, 0)
                               .outer(SweedlerTensor(H, H.basis_vec(h)));
        // [c(-1) c(0) h]
        c.expect({i, h}, t.multiply(0, 2).tensor(), t.permute({2, 1, 0}).multiply(0, 2).tensor());
      }
    std::move(c).emit(rep);
  }
  {
    Check c{"1d", "c₍₀₎⊗c₍₁₎h = c₍₀₎⊗hc₍₁₎"};
    for (std::size_t i = 0; i < C.dim() && c.pass; ++i)
      for (std::size_t h = 0; h < H.dim() && c.pass; ++h) {
        SweedlerTensor t = SweedlerTensor(C, C.basis_vec(i))
                               .coact_right(coact, 0)
                               .outer(SweedlerTensor(H, H.basis_vec(h)));
        // [c[0] c[1] h]
        c.expect({i, h}, t.multiply(1, 2).tensor(),
                 t.permute({0, 2, 1}).multiply(1, 2).tensor());
      }
    std::move(c).emit(rep);
  }
  return rep;
}

void require_smash_preconditions(const BimoduleAction& act) {
  if (!act.a().verified_ok())
    throw PreconditionError("factor A fails the Hopf axiom suite: " +
                            failing_labels(act.a().verify()));
  if (!act.h().verified_ok())
    throw PreconditionError("factor H fails the Hopf axiom suite: " +
                            failing_labels(act.h().verify()));
  if (!act.a().is_cocommutative())
    throw PreconditionError("smash product requires a cocommutative A");
  if (const VerificationReport& r = act.bimodule_report(); !r.pass())
    throw PreconditionError("bimodule axioms fail: " + failing_labels(r));
  if (const VerificationReport& r = act.bilinearity_report(); !r.pass())
    throw PreconditionError("antipode is not bilinear: " + failing_labels(r));
  if (VerificationReport r = check_conditions_1ab(act); !r.pass())
    throw PreconditionError("compatibility conditions fail: " + failing_labels(r));
}

void require_cosmash_preconditions(const BicomoduleCoaction& coact) {
  if (!coact.c().verified_ok())
    throw PreconditionError("factor C fails the Hopf axiom suite: " +
                            failing_labels(coact.c().verify()));
  if (!coact.h().verified_ok())
    throw PreconditionError("factor H fails the Hopf axiom suite: " +
                            failing_labels(coact.h().verify()));
  if (!coact.c().is_commutative())
    throw PreconditionError("smash coproduct requires a commutative C");
  if (const VerificationReport& r = coact.bicomodule_report(); !r.pass())
    throw PreconditionError("bicomodule axioms fail: " + failing_labels(r));
  if (const VerificationReport& r = coact.bicolinearity_report(); !r.pass())
    throw PreconditionError("antipode is not bicolinear: " + failing_labels(r));
  if (VerificationReport r = check_conditions_1cd(coact); !r.pass())
    throw PreconditionError("compatibility conditions fail: " + failing_labels(r));
}

SmashProductAlgebra lr_smash_product(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& h,
                                     const BimoduleAction& act) {
  if (!same_structure(a, act.a()) || !same_structure(h, act.h()))
    throw std::invalid_argument("action does not act between the given algebras");
  require_smash_preconditions(act);

  const FiniteHopfAlgebra& A = act.a();
  const FiniteHopfAlgebra& H = act.h();
  const std::size_t na = A.dim(), nh = H.dim(), n = na * nh;
  const Field f = A.field();

  SparseTensor mult({n, n, n}, f), comult({n, n, n}, f);
  Vec unit({n}, f), counit({n}, f);
  LinearOperator anti(n, f);

  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi) {
      const std::size_t row = ai * nh + hi;
      counit.set({row}, A.counit_of(A.basis_vec(ai)) * H.counit_of(H.basis_vec(hi)));
      unit.add({row}, A.unit_vector().at({ai}) * H.unit_vector().at({hi}));
    }

  // multiplication: (a⊗h)(b⊗g) = (a◁g₂)(h₁▷b) ⊗ h₂g₁
  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi)
      for (std::size_t bi = 0; bi < na; ++bi)
        for (std::size_t gi = 0; gi < nh; ++gi) {
          SweedlerTensor t = SweedlerTensor(A, A.basis_vec(ai))
                                 .outer(SweedlerTensor(H, H.basis_vec(hi)).comult(0))
                                 .outer(SweedlerTensor(A, A.basis_vec(bi)))
                                 .outer(SweedlerTensor(H, H.basis_vec(gi)).comult(0));
          // [a h1 h2 b g1 g2] -> a◁g2: [a◁g2 h1 h2 b g1] -> h1▷b: [a◁g2 h2 h1▷b g1]
          // -> multiply A slots: [(a◁g2)(h1▷b) h2 g1] -> multiply H slots
          SweedlerTensor prod = t.act_right(act, 0, 5)
                                    .act_left(act, 1, 3)
                                    .multiply(0, 2)
                                    .multiply(1, 2);
          for (const auto& [idx, c] : prod.tensor().entries())
            mult.add({ai * nh + hi, bi * nh + gi, idx[0] * nh + idx[1]}, c);
        }

  // comultiplication: tensor-product coalgebra
  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi) {
      SweedlerTensor t = SweedlerTensor(A, A.basis_vec(ai))
                             .comult(0)
                             .outer(SweedlerTensor(H, H.basis_vec(hi)).comult(0));
      // [a1 a2 h1 h2] -> pairs (a1,h1),(a2,h2)
      for (const auto& [idx, c] : t.tensor().entries())
        comult.add({ai * nh + hi, idx[0] * nh + idx[2], idx[1] * nh + idx[3]}, c);
    }

  // antipode
  for (std::size_t ai = 0; ai < na; ++ai)
    for (std::size_t hi = 0; hi < nh; ++hi) {
      SweedlerTensor t = SweedlerTensor(A, A.basis_vec(ai))
                             .outer(SweedlerTensor(H, H.basis_vec(hi)).comult_iter(0, 3));
      // [a h1 h2 h3] -> S on every slot -> S(h3)▷S(a): [S(h3)▷S(a) S(h1) S(h2)]
      // -> ◁S(h2): [S(h3)▷S(a)◁S(h2), S(h1)]
      SweedlerTensor img = t.antipode(0)
                               .antipode(1)
                               .antipode(2)
                               .antipode(3)
                               .act_left(act, 3, 0)
                               .act_right(act, 0, 2);
      for (const auto& [idx, c] : img.tensor().entries())
        anti.add(idx[0] * nh + idx[1], ai * nh + hi, c);
    }

  FiniteHopfAlgebra smash({f, pair_labels(A, H), std::move(mult), std::move(unit),
                           std::move(comult), std::move(counit), std::move(anti)});
  return SmashProductAlgebra(std::move(smash), act);
}

SmashCoproductAlgebra lr_smash_coproduct(const FiniteHopfAlgebra& c, const FiniteHopfAlgebra& h,
                                         const BicomoduleCoaction& coact) {
  if (!same_structure(c, coact.c()) || !same_structure(h, coact.h()))
    throw std::invalid_argument("coaction does not coact between the given algebras");
  require_cosmash_preconditions(coact);

  const FiniteHopfAlgebra& C = coact.c();
  const FiniteHopfAlgebra& H = coact.h();
  const std::size_t nc = C.dim(), nh = H.dim(), n = nc * nh;
  const Field f = C.field();

  SparseTensor mult({n, n, n}, f), comult({n, n, n}, f);
  Vec unit({n}, f), counit({n}, f);
  LinearOperator anti(n, f);

  // componentwise multiplication and unit
  for (const auto& [ci, cc] : C.mult_tensor().entries())
    for (const auto& [hi, hc] : H.mult_tensor().entries())
      mult.add({ci[0] * nh + hi[0], ci[1] * nh + hi[1], ci[2] * nh + hi[2]}, cc * hc);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      unit.add({i * nh + j}, C.unit_vector().at({i}) * H.unit_vector().at({j}));
      counit.set({i * nh + j}, C.counit_of(C.basis_vec(i)) * H.counit_of(H.basis_vec(j)));
    }

  // Δ(c⊗h) = (c₁₍₀₎' ⊗ c₂₍₋₁₎h₁) ⊗ (c₂₍₀₎ ⊗ h₂c₁₍₁₎)
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      SweedlerTensor t = SweedlerTensor(C, C.basis_vec(i))
                             .comult(0)
                             .outer(SweedlerTensor(H, H.basis_vec(j)).comult(0));
      SweedlerTensor expanded = t.coact_right(coact, 0).coact_left(coact, 2);
      // [0:c1[0] 1:c1[1] 2:c2(-1) 3:c2(0) 4:h1 5:h2]
      // c2(-1)·h1 at 2: [0:c1[0] 1:c1[1] 2:c2(-1)h1 3:c2(0) 4:h2]
      // h2·c1[1]: multiply(4,1): [0:c1[0] 1:c2(-1)h1 2:c2(0) 3:h2c1[1]]
      SweedlerTensor legs = expanded.multiply(2, 4).multiply(4, 1);
      for (const auto& [idx, cf] : legs.tensor().entries())
        comult.add({i * nh + j, idx[0] * nh + idx[1], idx[2] * nh + idx[3]}, cf);
    }

  // S(c⊗h) = S(c₍₀₎₍₀₎') ⊗ S(c₍₋₁₎ c₍₀₎₍₁₎ h)
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      SweedlerTensor t = SweedlerTensor(C, C.basis_vec(i))
                             .coact_left(coact, 0)
                             .coact_right(coact, 1)
                             .outer(SweedlerTensor(H, H.basis_vec(j)));
      // [0:c(-1) 1:c(0)[0] 2:c(0)[1] 3:h] -> c(-1)·c(0)[1]·h at 0, keep c(0)[0]
      SweedlerTensor img = t.multiply(0, 2).multiply(0, 2).antipode(0).antipode(1).permute({1, 0});
      for (const auto& [idx, cf] : img.tensor().entries())
        anti.add(idx[0] * nh + idx[1], i * nh + j, cf);
    }

  FiniteHopfAlgebra cosmash({f, pair_labels(C, H), std::move(mult), std::move(unit),
                             std::move(comult), std::move(counit), std::move(anti)});
  return SmashCoproductAlgebra(std::move(cosmash), coact);
}

FiniteHopfAlgebra tensor_product_hopf(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& h) {
  const std::size_t na = a.dim(), nh = h.dim(), n = na * nh;
  const Field f = a.field();
  if (h.field() != f) throw std::invalid_argument("field mismatch");
  SparseTensor mult({n, n, n}, f), comult({n, n, n}, f);
  Vec unit({n}, f), counit({n}, f);
  for (const auto& [ai, ac] : a.mult_tensor().entries())
    for (const auto& [hi, hc] : h.mult_tensor().entries())
      mult.add({ai[0] * nh + hi[0], ai[1] * nh + hi[1], ai[2] * nh + hi[2]}, ac * hc);
  for (const auto& [ai, ac] : a.comult_tensor().entries())
    for (const auto& [hi, hc] : h.comult_tensor().entries())
      comult.add({ai[0] * nh + hi[0], ai[1] * nh + hi[1], ai[2] * nh + hi[2]}, ac * hc);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      unit.add({i * nh + j}, a.unit_vector().at({i}) * h.unit_vector().at({j}));
      counit.set({i * nh + j}, a.counit_vector().at({i}) * h.counit_vector().at({j}));
    }
  return FiniteHopfAlgebra(
      {f, pair_labels(a, h), std::move(mult), std::move(unit), std::move(comult),
       std::move(counit), a.antipode().kron(h.antipode())});
}

}  // namespace hopfrb
