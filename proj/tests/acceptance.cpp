// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Bounds and tolerances are pinned here; everything is exact
// arithmetic, so "tolerance" always means equality.

#include "padic/checks.hpp"
#include "padic/evspec.hpp"
#include "padic/expr.hpp"
#include "padic/mackey.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <cstdio>
#include <sstream>

using namespace padic;

namespace {

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = unbounded
  std::function<bool(std::ostream&)> body;
};

RigidObject gen(GenKind k, int n, long p) { return generator(k, n, p); }

bool dev_concentrated_at(const HomDescriptor& h, int level, long dim) {
  if (h.dev_dims.tail() != 0) return false;
  for (size_t j = 0; j < h.dev_dims.prefix().size(); ++j)
    if (h.dev_dims.at(j) != (static_cast<int>(j) == level ? Rational(dim) : Rational(0)))
      return false;
  return h.dev_dims.at(static_cast<size_t>(level)) == dim;
}

bool stable_only(const HomDescriptor& h, long dim) {
  return h.stable_dim == dim && h.dev_dims == evseq_zero(h.dev_dims.p()) &&
         h.free_dims == evseq_zero(h.free_dims.p());
}

// --- criterion 1: the generator hom table, p = 2, indices <= 4 -------------

bool criterion_hom_table(std::ostream& log) {
  const long p = 2;
  const int max_index = 4;
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      log << "  mismatch: " << what << "\n";
      ok = false;
    }
  };

  HomDescriptor uu = hom_space(gen(GenKind::A, 0, p), gen(GenKind::A, 0, p));
  expect(uu.stable_dim == 1 && uu.dev_dims == evseq_one(p) &&
             uu.free_dims == evseq_zero(p),
         "hom(U,U) is not the Burnside-ring shape");

  for (int n = 0; n <= max_index; ++n) {
    expect(stable_only(hom_space(gen(GenKind::A, 0, p), gen(GenKind::L, n, p)), 1),
           "hom(U,L^" + std::to_string(n) + ") != Q");
    HomDescriptor ue = hom_space(gen(GenKind::A, 0, p), gen(GenKind::E, n, p));
    expect(ue.stable_dim == 0 && dev_concentrated_at(ue, n, 1) &&
               ue.free_dims == evseq_zero(p),
           "hom(U,E^" + std::to_string(n) + ") != Q at level n");
    expect(hom_space(gen(GenKind::L, n, p), gen(GenKind::A, 0, p)).total_zero(),
           "hom(L^" + std::to_string(n) + ",U) != 0");
    expect(stable_only(hom_space(gen(GenKind::L, n, p), gen(GenKind::L, n, p)),
                       ipow(p, n)),
           "hom(L^n,L^n) dimension");
    HomDescriptor eu = hom_space(gen(GenKind::E, n, p), gen(GenKind::A, 0, p));
    expect(eu.stable_dim == 0 && dev_concentrated_at(eu, n, 1) &&
               eu.free_dims == evseq_zero(p),
           "hom(E^" + std::to_string(n) + ",U) != Q at level n");
    HomDescriptor ee = hom_space(gen(GenKind::E, n, p), gen(GenKind::E, n, p));
    expect(ee.stable_dim == 0 && dev_concentrated_at(ee, n, ipow(p, n)) &&
               ee.free_dims == evseq_zero(p),
           "hom(E^n,E^n) dimension");
    for (int m = 0; m <= max_index; ++m) {
      expect(hom_space(gen(GenKind::L, n, p), gen(GenKind::E, m, p)).total_zero(),
             "hom(L^n,E^m) != 0");
      expect(hom_space(gen(GenKind::E, n, p), gen(GenKind::L, m, p)).total_zero(),
             "hom(E^n,L^m) != 0");
      if (m != n) {
        expect(stable_only(hom_space(gen(GenKind::L, m, p), gen(GenKind::L, n, p)),
                           ipow(p, std::min(m, n))),
               "hom(L^m,L^n) dimension");
        expect(hom_space(gen(GenKind::E, n, p), gen(GenKind::E, m, p)).total_zero(),
               "hom(E^n,E^m) != 0 for n != m");
      }
    }
  }
  return ok;
}

// --- criterion 2: four independent computations of one table ---------------

bool criterion_four_way(std::ostream& log) {
  const int jmax = 5;
  for (long p : {2L, 3L})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        TomDieckTable td = td_split(p, n, m, jmax);
        MackeyValueDescriptor orb = orbit_hom(p, n, m);
        MackeyValueDescriptor mk = mackey_components(gen(GenKind::A, m, p), n);
        HomDescriptor hs = hom_space(gen(GenKind::A, n, p), gen(GenKind::A, m, p));
        long expected = ipow(p, std::min(n, m));
        for (int j = n; j <= jmax; ++j) {
          long want = j >= std::max(n, m) ? expected : 0;
          if (td.dim_at(j) != want || orb.component_at(j) != want ||
              mk.component_at(j) != want || hs.dev_at(j) != want) {
            log << "  disagreement at p=" << p << " n=" << n << " m=" << m
                << " j=" << j << "\n";
            return false;
          }
        }
        if (hs.stable_dim != expected || mk.inf_dim != expected ||
            orb.inf_dim != expected || hs.free_dims != evseq_zero(p)) {
          log << "  tail/stable disagreement at p=" << p << " n=" << n
              << " m=" << m << "\n";
          return false;
        }
      }
  return true;
}

// --- criterion 3: Burnside calculus ----------------------------------------

bool criterion_burnside(std::ostream& log) {
  std::mt19937 rng(424242);
  auto rnd = [&rng]() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
  };
  for (long p : {2L, 3L}) {
    for (int t = 0; t < 100; ++t) {
      FiniteBurnsideElt a{p, 3, {}}, b{p, 3, {}};
      for (int i = 0; i <= 3; ++i) {
        a.coeffs.push_back(rnd());
        b.coeffs.push_back(rnd());
      }
      auto ma = marks(a), mb = marks(b), mab = marks(finite_mul(a, b));
      for (size_t j = 0; j < ma.size(); ++j)
        if (mab[j] != ma[j] * mb[j]) {
          log << "  marks not multiplicative\n";
          return false;
        }
      if (!(from_marks(p, 3, ma) == a)) {
        log << "  marks not injective\n";
        return false;
      }
    }
    for (int i = 0; i <= 8; ++i) {
      for (int j = 0; j <= 8; ++j)
        if (idempotent_e(p, i) * idempotent_e(p, j) !=
            (i == j ? idempotent_e(p, i) : evseq_zero(p))) {
          log << "  e_i e_j orthogonality fails\n";
          return false;
        }
      EvSeq acc = evseq_one(p);
      for (int j = 0; j < i; ++j) acc = acc - idempotent_e(p, j);
      if (acc != idempotent_f(p, i)) {
        log << "  f_k identity fails\n";
        return false;
      }
    }
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<int> len(0, 6), nn(0, 5);
      std::vector<Rational> pa(len(rng)), pb(len(rng));
      for (auto& x : pa) x = rnd();
      for (auto& x : pb) x = rnd();
      EvSeq a(p, pa, rnd()), b(p, pb, rnd());
      int n = nn(rng);
      if (truncate(a * b, n) != truncate(a, n) * truncate(b, n)) {
        log << "  truncation is not a ring map\n";
        return false;
      }
      if (!pullback_square_check(a).exact) {
        log << "  pullback reconstruction failed\n";
        return false;
      }
    }
    for (int n = 0; n <= 5; ++n) {
      auto mk = marks(grothendieck_e(p, n));
      for (int j = 0; j <= n + 1; ++j)
        if (mk[j] != (j == n ? Rational(1) : Rational(0))) {
          log << "  grothendieck idempotent marks are not an indicator\n";
          return false;
        }
    }
  }
  return true;
}

// --- criterion 4: monoidal structure ----------------------------------------

bool criterion_monoidal(std::ostream& log) {
  std::mt19937 rng(777);
  for (int t = 0; t < 20; ++t) {
    long p = t % 2 == 0 ? 2 : 3;
    RigidObject m = random_generator_sum(rng, p, 3, 2);
    auto witness = isomorphism_witness(tensor(gen(GenKind::A, 0, p), m), m);
    if (!witness) {
      log << "  tensor with the unit is not isomorphic to the object\n";
      return false;
    }
    validate(*witness);
    invert(*witness);  // throws when not invertible
  }
  for (long p : {2L, 3L})
    for (int m = 0; m <= 3; ++m)
      for (int n = m; n <= 3; ++n) {
        RationalCharacter lhs = character(tensor(regular_module(p, n), regular_module(p, m)));
        RationalCharacter rhs = scale(character(regular_module(p, n)),
                                      static_cast<long>(ipow(p, m)));
        if (!(lhs == rhs)) {
          log << "  regular tensor character fails at p=" << p << " n=" << n
              << " m=" << m << "\n";
          return false;
        }
      }
  return true;
}

// --- criterion 5: Ext suite ---------------------------------------------------

bool criterion_ext(std::ostream& log) {
  std::mt19937 rng(999);
  for (long p : {2L, 3L}) {
    std::vector<RigidObject> sums;
    for (int i = 0; i <= 3; ++i)
      for (GenKind k : {GenKind::A, GenKind::E, GenKind::L}) sums.push_back(gen(k, i, p));
    for (int t = 0; t < 4; ++t) sums.push_back(random_generator_sum(rng, p, 3, 2));

    for (int n = 0; n <= 3; ++n)
      for (const RigidObject& x : sums) {
        if (!ext1(gen(GenKind::A, n, p), x).zero()) {
          log << "  ext1(A(n), X) != 0\n";
          return false;
        }
        if (!ext1(x, gen(GenKind::E, n, p)).zero() ||
            !ext1(x, gen(GenKind::L, n, p)).zero()) {
          log << "  ext1 against an injective generator is nonzero\n";
          return false;
        }
      }
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        ExtDescriptor e = ext1(gen(GenKind::L, m, p), gen(GenKind::A, n, p));
        if (e.w_dim() != ipow(p, std::min(m, n)) || e.v_dim() != e.w_dim()) {
          log << "  ext1(L(m), A(n)) has the wrong germ quotient\n";
          return false;
        }
      }
    for (GenKind k1 : {GenKind::A, GenKind::E, GenKind::L})
      for (GenKind k2 : {GenKind::A, GenKind::E, GenKind::L})
        for (int m = 0; m <= 3; ++m)
          for (int n = 0; n <= 3; ++n) {
            RigidObject src = gen(k1, m, p), tgt = gen(k2, n, p);
            ExtDescriptor e = ext1(src, tgt);
            int s = std::max(src.stab, tgt.stab);
            AffineFit fit = ext1_oracle_fit(src, tgt, s + 3, s + 8);
            if (!fit.exact || fit.slope != e.w_dim() || fit.intercept != -e.v_dim()) {
              log << "  oracle growth mismatch at p=" << p << " pair (" << m << ","
                  << n << ")\n";
              return false;
            }
          }
  }
  return true;
}

// --- criterion 6: Adams short exact sequence for orbits ----------------------

bool criterion_adams(std::ostream& log) {
  for (long p : {2L, 3L})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        GradedRigid x = pi_A_orbit(p, n), y = pi_A_orbit(p, m);
        AdamsMaps at0 = adams_maps(x, y, 0);
        if (at0.hom.size() != 1 || !at0.ext.empty()) {
          log << "  degree 0 is not pure Hom\n";
          return false;
        }
        const HomDescriptor& h = at0.hom[0].second;
        long expected = ipow(p, std::min(n, m));
        MackeyValueDescriptor orb = orbit_hom(p, n, m);
        bool dims_ok = h.stable_dim == expected && h.stable_dim == orb.inf_dim;
        for (int j = 0; j <= 5; ++j)
          dims_ok = dims_ok && h.dev_at(j) == orb.component_at(j);
        if (!dims_ok) {
          log << "  degree 0 hom dims disagree with the orbit table\n";
          return false;
        }
        for (int d : {-2, -1, 1, 2}) {
          AdamsMaps atd = adams_maps(x, y, d);
          if (!atd.hom_zero() || !atd.ext_zero()) {
            log << "  maps in degree " << d << " do not vanish\n";
            return false;
          }
        }
      }
  return true;
}

// --- criterion 7: abelian-category exactness ---------------------------------

bool criterion_exactness(std::ostream& log) {
  std::mt19937 rng(31337);
  const long p = 2;
  for (int t = 0; t < 20; ++t) {
    RigidObject m = random_generator_sum(rng, p, 2, 2);
    RigidObject n = random_generator_sum(rng, p, 2, 2);
    RigidMorphism f = random_morphism(rng, m, n, std::max(m.stab, n.stab) + 1);
    SubobjectResult ker = kernel(f);
    QuotientResult cok = cokernel(f);

    auto slot_exact = [&](const Mat& fm, const Mat& km, const Mat& qm, int src_dim,
                          int tgt_dim) {
      return (fm * km).is_zero() && rank(km) + rank(fm) == src_dim &&
             (qm * fm).is_zero() && rank(qm) + rank(fm) == tgt_dim;
    };
    for (int k = 0; k < f.stab; ++k)
      if (!slot_exact(f.level_map(k), ker.inclusion.level_map(k),
                      cok.projection.level_map(k), f.source.level_module(k).dim(),
                      f.target.level_module(k).dim())) {
        log << "  levelwise exactness fails\n";
        return false;
      }
    if (!slot_exact(f.stable, ker.inclusion.stable, cok.projection.stable,
                    f.source.tmpl.dim(), f.target.tmpl.dim()) ||
        !slot_exact(f.finf, ker.inclusion.finf, cok.projection.finf,
                    f.source.minf.dim(), f.target.minf.dim())) {
      log << "  exactness fails at the template or at infinity\n";
      return false;
    }

    for (GenKind kind : {GenKind::A, GenKind::E, GenKind::L})
      for (int i = 0; i <= 1; ++i) {
        RigidObject P = gen(kind, i, p);
        int kappa = std::max({hom_space(P, m).common_stab, hom_space(P, n).common_stab,
                              hom_space(P, ker.object).common_stab, f.stab}) +
                    1;
        if (postcomposition_kernel_dim(P, f, kappa) !=
            hom_space(P, ker.object).truncated_dim(kappa)) {
          log << "  Hom(P, ker) disagrees with the kernel of the induced map\n";
          return false;
        }
      }
  }
  return true;
}

// --- criterion 8: restriction and inflation ----------------------------------

bool criterion_change_of_groups(std::ostream& log) {
  for (long p : {2L, 3L}) {
    for (int n = 0; n <= 2; ++n) {
      RigidObject restricted = restrict_object(gen(GenKind::A, n + 1, p), 1);
      RigidObject expected = zero_object(p);
      for (long i = 0; i < p; ++i) expected = direct_sum(expected, gen(GenKind::A, n, p));
      if (character(restricted.tmpl) != character(expected.tmpl) ||
          !is_isomorphic(restricted, expected)) {
        log << "  restriction of A(n+1) is not p copies of A(n)\n";
        return false;
      }
    }
    // Inflating a finite-level object and restricting past its top level
    // leaves the constant-tail object on the top module.
    FiniteLevelObject f{p, 2, {trivial_module(p, 0, 1), regular_module(p, 1),
                               regular_module(p, 2)}};
    RigidObject m = inflate_finite(f);
    RigidObject r = restrict_object(m, 2);
    long top = f.levels[2].dim();
    if (r.stab != 0 || r.tmpl.dim() != top || r.minf.dim() != top ||
        !r.tmpl.action.is_identity() || !r.cmap.is_identity()) {
      log << "  inflate/restrict round trip is not the constant-tail object\n";
      return false;
    }
    for (int n = 0; n <= 3; ++n)
      for (int shift_by = 0; shift_by <= 2; ++shift_by)
        for (int k = 0; k <= 3; ++k) {
          MackeyValueDescriptor restricted =
              mackey_components(restrict_object(gen(GenKind::A, n, p), shift_by), k);
          MackeyValueDescriptor original = mackey_components(gen(GenKind::A, n, p), k + shift_by);
          if (restricted.inf_dim != original.inf_dim) {
            log << "  restriction does not shift the infinity part\n";
            return false;
          }
          for (int j = 0; j <= 5; ++j)
            if (restricted.component_at(j) != original.component_at(j + shift_by)) {
              log << "  restriction does not shift the components\n";
              return false;
            }
        }
  }
  return true;
}

// --- criterion 9: splitting of eventually specified sequences -----------------

bool criterion_evspec_split(std::ostream& log) {
  for (long p : {2L, 3L}) {
    std::vector<RigidObject> objects = {
        gen(GenKind::A, 0, p), gen(GenKind::A, 1, p), gen(GenKind::A, 2, p),
        direct_sum(gen(GenKind::E, 1, p), gen(GenKind::L, 0, p))};
    for (const RigidObject& m : objects)
      for (int n = 0; n <= 3; ++n) {
        FixedSplitResult r = evspec_fixed_split(m, n);
        if (!r.matches || r.lhs.level_dim(n) != r.direct_summand_dim) {
          log << "  fixed-point splitting fails at n=" << n << "\n";
          return false;
        }
      }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "generator hom table (p=2, indices <= 4)", 1.0, criterion_hom_table},
      {2, "four-way dimension agreement (p in {2,3}, n,m <= 3, j <= 5)", 10.0,
       criterion_four_way},
      {3, "Burnside calculus (marks, idempotents, truncation, pullback)", 0,
       criterion_burnside},
      {4, "monoidal structure (unit isomorphisms, regular characters)", 0,
       criterion_monoidal},
      {5, "Ext suite (vanishing, germ quotients, truncation oracle)", 30.0,
       criterion_ext},
      {6, "Adams sequence on orbits (pure Hom in degree 0)", 0, criterion_adams},
      {7, "abelian-category exactness (20 random morphisms)", 0, criterion_exactness},
      {8, "restriction and inflation", 0, criterion_change_of_groups},
      {9, "splitting of eventually specified sequences", 0, criterion_evspec_split},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.body(log);
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.time_limit_s == 0 || elapsed < c.time_limit_s;
    if (!in_time) log << "  exceeded time limit of " << c.time_limit_s << " s\n";
    bool overall = pass && in_time;
    if (!overall) ++failures;
    std::printf("[criterion %d] %s  %s (%.2f s)\n", c.number,
                overall ? "PASS" : "FAIL", c.title.c_str(), elapsed);
    if (!overall) std::fputs(log.str().c_str(), stdout);
  }
  return failures == 0 ? 0 : 1;
}
