#pragma once

#include <random>
#include <string>

#include "hopfrb/io.hpp"

namespace hopfrb::testing {

inline std::string fx(const std::string& name) { return io::fixture_path(name); }

inline Scalar q(long long num, long long den = 1) {
  return Scalar::rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

/// Dense reference contraction, kept independent of the sparse
/// implementation: materializes both operands as flat arrays and loops over
/// every index combination.
inline SparseTensor dense_contract(const SparseTensor& t, const SparseTensor& u,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  auto flatten = [](const SparseTensor& x) {
    std::size_t total = 1;
    for (std::size_t d : x.dims()) total *= d;
    std::vector<Scalar> flat(total, Scalar::zero(x.field()));
    for (const auto& [idx, c] : x.entries()) {
      std::size_t off = 0;
      for (std::size_t s = 0; s < idx.size(); ++s) off = off * x.dims()[s] + idx[s];
      flat[off] = c;
    }
    return flat;
  };
  auto unflatten_index = [](std::size_t off, const std::vector<std::size_t>& dims) {
    Index idx(dims.size());
    for (std::size_t s = dims.size(); s-- > 0;) {
      idx[s] = off % dims[s];
      off /= dims[s];
    }
    return idx;
  };

  std::vector<bool> t_used(t.arity(), false), u_used(u.arity(), false);
  for (auto [a, b] : pairs) {
    t_used[a] = true;
    u_used[b] = true;
  }
  std::vector<std::size_t> rdims;
  for (std::size_t s = 0; s < t.arity(); ++s)
    if (!t_used[s]) rdims.push_back(t.dims()[s]);
  for (std::size_t s = 0; s < u.arity(); ++s)
    if (!u_used[s]) rdims.push_back(u.dims()[s]);

  std::vector<Scalar> tf = flatten(t), uf = flatten(u);
  SparseTensor out(rdims, t.field());
  std::size_t t_total = tf.size(), u_total = uf.size();
  for (std::size_t ti = 0; ti < t_total; ++ti) {
    if (tf[ti].is_zero()) continue;
    Index tidx = unflatten_index(ti, t.dims());
    for (std::size_t ui = 0; ui < u_total; ++ui) {
      if (uf[ui].is_zero()) continue;
      Index uidx = unflatten_index(ui, u.dims());
      bool ok = true;
      for (auto [a, b] : pairs)
        if (tidx[a] != uidx[b]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Index ridx;
      for (std::size_t s = 0; s < t.arity(); ++s)
        if (!t_used[s]) ridx.push_back(tidx[s]);
      for (std::size_t s = 0; s < u.arity(); ++s)
        if (!u_used[s]) ridx.push_back(uidx[s]);
      out.add(ridx, tf[ti] * uf[ui]);
    }
  }
  return out;
}

inline SparseTensor random_tensor(std::mt19937& rng, const std::vector<std::size_t>& dims,
                                  int density_percent = 50) {
  SparseTensor t(dims, Field::rationals());
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::uniform_int_distribution<int> pct(0, 99), num(-5, 5), den(1, 4);
  for (std::size_t off = 0; off < total; ++off) {
    if (pct(rng) >= density_percent) continue;
    Index idx(dims.size());
    std::size_t o = off;
    for (std::size_t s = dims.size(); s-- > 0;) {
      idx[s] = o % dims[s];
      o /= dims[s];
    }
    t.set(idx, q(num(rng), den(rng)));
  }
  return t;
}

inline Vec random_vec(std::mt19937& rng, std::size_t dim) {
  return random_tensor(rng, {dim}, 80);
}

}  // namespace hopfrb::testing
