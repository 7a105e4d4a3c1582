#include "hyperheat/min_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hyperheat {

namespace {

// minimize sum_i (r_i + t_i)^2 / d_i  s.t.  sum_i t_i = m, t >= 0.
// Optimal t_i = max(0, mu d_i / 2 - r_i); the active-set scan finds the
// breakpoint interval where the mass constraint is met, exactly.
void project_weighted_simplex(std::span<const double> r, std::span<const double> d, double m,
                              std::span<double> t) {
  const std::size_t k = r.size();
  if (k == 1) {
    t[0] = m;
    return;
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return r[static_cast<std::size_t>(x)] / d[static_cast<std::size_t>(x)] <
           r[static_cast<std::size_t>(y)] / d[static_cast<std::size_t>(y)];
  });

  double sum_d_half = 0.0;
  double sum_r = 0.0;
  double mu = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = static_cast<std::size_t>(order[j]);
    sum_d_half += 0.5 * d[i];
    sum_r += r[i];
    mu = (m + sum_r) / sum_d_half;
    if (j + 1 < k) {
      const std::size_t nx = static_cast<std::size_t>(order[j + 1]);
      if (mu <= 2.0 * r[nx] / d[nx]) break;
    }
  }

  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    t[i] = std::max(0.0, 0.5 * mu * d[i] - r[i]);
    total += t[i];
  }
  if (total > 0.0) {
    const double fix = m / total;
    for (std::size_t i = 0; i < k; ++i) t[i] *= fix;
  } else {
    std::fill(t.begin(), t.end(), 0.0);
    t[static_cast<std::size_t>(order[0])] = m;
  }
}

enum class BlockKind { LInf, L2, Lovasz };

// One hyperedge with a positive shift value; carries the face parametrization
// the solver moves over.
struct Block {
  BlockKind kind;
  std::size_t edge;
  double coef;  // w_h * f_h
  std::vector<int> verts;
  std::vector<double> y;  // current witness, local coordinates

  // l-inf faces: product of two scaled simplices over the tied extrema.
  std::vector<int> lmax, lmin;  // local positions of argmax / argmin sets
  std::vector<double> a, b;     // simplex coordinates, each summing to 1/2

  // Lovasz faces keep the local point for the tie-block LMO.
  std::vector<double> x_local;
  double tie_eps = 0.0;

  void linf_sync_y() {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < lmax.size(); ++i) y[static_cast<std::size_t>(lmax[i])] = a[i];
    for (std::size_t j = 0; j < lmin.size(); ++j) y[static_cast<std::size_t>(lmin[j])] = -b[j];
  }
};

}  // namespace

MinNormResult min_norm_subgradient(const PotentialModel& model, std::span<const double> x,
                                   const MinNormOptions& options) {
  require_finite(x, "min_norm_subgradient input");
  if (!(options.tol > 0.0)) throw InvalidArgument("min_norm_subgradient: tol must be > 0");

  const auto& g = model.hypergraph();
  const auto& deg = g.degrees();
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());

  MinNormResult res;
  res.certificate.shift_values.assign(g.edge_count(), 0.0);
  res.certificate.witnesses.resize(g.edge_count());

  const bool warm = options.warm_start != nullptr &&
                    options.warm_start->witnesses.size() == g.edge_count();

  std::vector<Block> blocks;
  std::vector<double> local;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    model.gather(e, x, local);
    res.certificate.witnesses[e].assign(local.size(), 0.0);
    const auto& norm = model.edge_norm(e);
    const double f = norm.min_shift(local);
    res.certificate.shift_values[e] = f;
    if (!(f > 0.0)) continue;

    Block blk;
    blk.edge = e;
    blk.coef = g.edge(e).weight * f;
    blk.verts = g.edge(e).vertices;
    blk.y.assign(local.size(), 0.0);
    blk.tie_eps = EdgeNorm::relative_tie_eps(local);

    switch (norm.kind()) {
      case NormKind::LInf: {
        blk.kind = BlockKind::LInf;
        std::vector<int> argmax, argmin;
        norm.linf_face(local, blk.tie_eps, argmax, argmin);
        blk.lmax = argmax;
        blk.lmin = argmin;
        blk.a.assign(argmax.size(), 0.5 / static_cast<double>(argmax.size()));
        blk.b.assign(argmin.size(), 0.5 / static_cast<double>(argmin.size()));
        if (warm) {
          // Snap the previous witness onto the current face; any clamped
          // renormalized point is feasible.
          const auto& prev = options.warm_start->witnesses[e];
          if (prev.size() == local.size()) {
            double sa = 0.0, sb = 0.0;
            for (std::size_t i = 0; i < blk.lmax.size(); ++i)
              sa += std::max(0.0, prev[static_cast<std::size_t>(blk.lmax[i])]);
            for (std::size_t j = 0; j < blk.lmin.size(); ++j)
              sb += std::max(0.0, -prev[static_cast<std::size_t>(blk.lmin[j])]);
            if (sa > 1e-12 && sb > 1e-12) {
              for (std::size_t i = 0; i < blk.lmax.size(); ++i)
                blk.a[i] = 0.5 * std::max(0.0, prev[static_cast<std::size_t>(blk.lmax[i])]) / sa;
              for (std::size_t j = 0; j < blk.lmin.size(); ++j)
                blk.b[j] = 0.5 * std::max(0.0, -prev[static_cast<std::size_t>(blk.lmin[j])]) / sb;
            }
          }
        }
        blk.linf_sync_y();
        break;
      }
      case NormKind::L2: {
        blk.kind = BlockKind::L2;
        norm.witness(local, WitnessPolicy::LowestIndex, blk.tie_eps, blk.y);
        break;
      }
      case NormKind::Lovasz: {
        blk.kind = BlockKind::Lovasz;
        blk.x_local = local;
        norm.witness(local, WitnessPolicy::LowestIndex, blk.tie_eps, blk.y);
        break;
      }
    }
    blocks.push_back(std::move(blk));
  }

  // z = sum over blocks of coef * y scattered to global coordinates.
  VertexVector z(n, 0.0);
  auto rebuild_z = [&] {
    std::fill(z.begin(), z.end(), 0.0);
    for (const auto& blk : blocks)
      for (std::size_t l = 0; l < blk.verts.size(); ++l)
        z[static_cast<std::size_t>(blk.verts[l])] += blk.coef * blk.y[l];
  };
  rebuild_z();

  auto norm_d_inv_sq = [&](std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (deg[i] > 0.0) s += v[i] * v[i] / deg[i];
    return s;
  };

  std::vector<double> r(n, 0.0);          // D^-1 z
  std::vector<std::vector<double>> lmo(blocks.size());
  std::vector<double> grad, dvec(n, 0.0);

  int round = 0;
  for (;; ++round) {
    if ((round & 63) == 63) rebuild_z();
    for (std::size_t i = 0; i < n; ++i) r[i] = deg[i] > 0.0 ? z[i] / deg[i] : 0.0;

    // Per-edge linear minimization oracles and the global duality gap.
    double gap = 0.0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& blk = blocks[bi];
      auto& s = lmo[bi];
      s.assign(blk.y.size(), 0.0);
      if (blk.kind == BlockKind::L2) {
        s = blk.y;  // singleton face
        continue;
      }
      if (blk.kind == BlockKind::LInf) {
        int best_hi = blk.lmax.front();
        for (int l : blk.lmax)
          if (r[static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(l)])] <
              r[static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(best_hi)])])
            best_hi = l;
        int best_lo = blk.lmin.front();
        for (int l : blk.lmin)
          if (r[static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(l)])] >
              r[static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(best_lo)])])
            best_lo = l;
        s[static_cast<std::size_t>(best_hi)] = 0.5;
        s[static_cast<std::size_t>(best_lo)] = -0.5;
      } else {
        grad.resize(blk.verts.size());
        for (std::size_t l = 0; l < blk.verts.size(); ++l)
          grad[l] = r[static_cast<std::size_t>(blk.verts[l])];
        model.edge_norm(blk.edge).face_lmo(blk.x_local, grad, blk.tie_eps, s);
      }
      for (std::size_t l = 0; l < blk.verts.size(); ++l)
        gap += blk.coef * r[static_cast<std::size_t>(blk.verts[l])] * (blk.y[l] - s[l]);
    }

    const double zsq = norm_d_inv_sq(z);
    if (gap <= options.tol * (1.0 + zsq) || blocks.empty()) {
      res.dual_gap = std::max(gap, 0.0);
      res.norm_d_inv_sq = zsq;
      break;
    }
    if (round >= options.max_rounds) {
      res.dual_gap = gap;
      res.norm_d_inv_sq = zsq;
      res.rounds = round;
      for (auto& blk : blocks) res.certificate.witnesses[blk.edge] = blk.y;
      res.certificate.z =
          SubgradientCertificate::scatter(model, res.certificate.shift_values,
                                          res.certificate.witnesses);
      throw ToleranceNotReached(std::move(res), options.max_rounds);
    }

    // Joint Frank-Wolfe step with exact line search on the quadratic.
    std::fill(dvec.begin(), dvec.end(), 0.0);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& blk = blocks[bi];
      for (std::size_t l = 0; l < blk.verts.size(); ++l)
        dvec[static_cast<std::size_t>(blk.verts[l])] += blk.coef * (lmo[bi][l] - blk.y[l]);
    }
    double zd = 0.0, dd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (deg[i] > 0.0) {
        zd += z[i] * dvec[i] / deg[i];
        dd += dvec[i] * dvec[i] / deg[i];
      }
    }
    if (dd > 0.0) {
      const double gamma = std::clamp(-zd / dd, 0.0, 1.0);
      if (gamma > 0.0) {
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
          auto& blk = blocks[bi];
          for (std::size_t l = 0; l < blk.y.size(); ++l)
            blk.y[l] += gamma * (lmo[bi][l] - blk.y[l]);
          if (blk.kind == BlockKind::LInf) {
            // Keep the simplex coordinates in sync with y.
            for (std::size_t i = 0; i < blk.lmax.size(); ++i)
              blk.a[i] = blk.y[static_cast<std::size_t>(blk.lmax[i])];
            for (std::size_t j = 0; j < blk.lmin.size(); ++j)
              blk.b[j] = -blk.y[static_cast<std::size_t>(blk.lmin[j])];
          }
        }
        axpy(gamma, dvec, z);
      }
    }

    // Corrective pass: exact minimization over each l-inf block holding the
    // rest fixed. Two weighted simplex projections per block.
    std::vector<double> rr, ddg, tt;
    for (auto& blk : blocks) {
      if (blk.kind != BlockKind::LInf) continue;
      for (std::size_t l = 0; l < blk.verts.size(); ++l)
        z[static_cast<std::size_t>(blk.verts[l])] -= blk.coef * blk.y[l];

      const std::size_t ka = blk.lmax.size();
      rr.resize(ka);
      ddg.resize(ka);
      tt.resize(ka);
      for (std::size_t i = 0; i < ka; ++i) {
        const auto gv = static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(blk.lmax[i])]);
        rr[i] = z[gv];
        ddg[i] = deg[gv];
      }
      project_weighted_simplex(rr, ddg, blk.coef * 0.5, tt);
      for (std::size_t i = 0; i < ka; ++i) blk.a[i] = tt[i] / blk.coef;

      const std::size_t kb = blk.lmin.size();
      rr.resize(kb);
      ddg.resize(kb);
      tt.resize(kb);
      for (std::size_t j = 0; j < kb; ++j) {
        const auto gv = static_cast<std::size_t>(blk.verts[static_cast<std::size_t>(blk.lmin[j])]);
        rr[j] = -z[gv];
        ddg[j] = deg[gv];
      }
      project_weighted_simplex(rr, ddg, blk.coef * 0.5, tt);
      for (std::size_t j = 0; j < kb; ++j) blk.b[j] = tt[j] / blk.coef;

      blk.linf_sync_y();
      for (std::size_t l = 0; l < blk.verts.size(); ++l)
        z[static_cast<std::size_t>(blk.verts[l])] += blk.coef * blk.y[l];
    }
  }

  res.rounds = round;
  for (auto& blk : blocks) res.certificate.witnesses[blk.edge] = blk.y;
  res.certificate.z = SubgradientCertificate::scatter(model, res.certificate.shift_values,
                                                      res.certificate.witnesses);
  return res;
}

}  // namespace hyperheat
