#include "padic/checks.hpp"

#include "padic/burnside.hpp"
#include "padic/evspec.hpp"
#include "padic/expr.hpp"
#include "padic/mackey.hpp"

#include <functional>

namespace padic {

namespace {

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

Mat random_mat(std::mt19937& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
  return m;
}

EvSeq random_seq(std::mt19937& rng, long p) {
  std::uniform_int_distribution<int> len(0, 5);
  std::vector<Rational> prefix(len(rng));
  for (auto& x : prefix) x = small_rational(rng);
  return EvSeq(p, std::move(prefix), small_rational(rng));
}

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    out_.push_back(CheckResult{name, pass, detail});
  }

  template <typename F>
  void run(const std::string& name, F&& body) {
    try {
      bool pass = body();
      record(name, pass);
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  }

 private:
  std::vector<CheckResult>& out_;
};

}  // namespace

RigidObject random_generator_sum(std::mt19937& rng, long p, int max_index, int pieces) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(0, max_index);
  RigidObject m = zero_object(p);
  for (int i = 0; i < pieces; ++i) {
    GenKind k = kind(rng) == 0 ? GenKind::A : (kind(rng) % 2 ? GenKind::E : GenKind::L);
    m = direct_sum(m, generator(k, idx(rng), p));
  }
  return m;
}

RigidMorphism random_morphism(std::mt19937& rng, const RigidObject& source,
                              const RigidObject& target, int max_dev_level) {
  HomDescriptor h = hom_space(source, target);
  RigidMorphism f = zero_morphism(canonicalize(source), canonicalize(target));
  for (const auto& b : h.stable_basis) f = add(f, scale(b, small_rational(rng)));
  for (int k = 0; k <= max_dev_level; ++k)
    for (const auto& b : dev_slot_basis(h, k)) f = add(f, scale(b, small_rational(rng)));
  return f;
}

namespace {

void linalg_checks(Suite& suite, std::mt19937& rng) {
  suite.run("linalg: rref idempotent, rank-nullity, pullback dims", [&] {
    std::uniform_int_distribution<int> size(0, 6);
    for (int t = 0; t < 25; ++t) {
      Mat m = random_mat(rng, size(rng), size(rng));
      if (rref(rref(m)) != rref(m)) return false;
      if (kernel_basis(m).dim() + rank(m) != m.cols()) return false;
      Mat f = random_mat(rng, 3, size(rng)), g = random_mat(rng, 3, size(rng));
      if (pullback_of_maps(f, g).dim() != f.cols() + g.cols() - rank(Mat::hcat(f, -g)))
        return false;
    }
    return true;
  });
}

void cyclic_checks(Suite& suite, std::mt19937& rng, long p) {
  suite.run("cyclic: order, averaging idempotents, hom symmetry", [&] {
    std::uniform_int_distribution<int> lev(0, 2);
    for (int t = 0; t < 6; ++t) {
      CyclicModule m = direct_sum(regular_module(p, lev(rng)),
                                  inflate(regular_module(p, lev(rng)), 2));
      m = inflate(m, 2);
      if (!m.action.pow(ipow(p, m.level)).is_identity()) return false;
      for (int j = 0; j <= m.level; ++j) {
        Mat av = average(m, j);
        if (av * av != av) return false;
        if (!(column_space(av) == fixed_points(m, j))) return false;
      }
      CyclicModule n = inflate(regular_module(p, lev(rng)), 2);
      if (equivariant_hom_dim(m, n) != equivariant_hom_dim(n, m)) return false;
      if (!(character(direct_sum(m, n)) == add(character(m), character(n)))) return false;
    }
    return true;
  });
}

void burnside_checks(Suite& suite, std::mt19937& rng, long p) {
  suite.run("burnside: ring axioms and idempotent identities", [&] {
    for (int t = 0; t < 20; ++t) {
      EvSeq a = random_seq(rng, p), b = random_seq(rng, p), c = random_seq(rng, p);
      if (a * b != b * a || (a + b) + c != a + (b + c)) return false;
      if (a * (b + c) != a * b + a * c) return false;
      if (a * evseq_one(p) != a) return false;
    }
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j)
        if (idempotent_e(p, i) * idempotent_e(p, j) !=
            (i == j ? idempotent_e(p, i) : evseq_zero(p)))
          return false;
    for (int k = 0; k <= 8; ++k) {
      EvSeq acc = evseq_one(p);
      for (int i = 0; i < k; ++i) acc = acc - idempotent_e(p, i);
      if (acc != idempotent_f(p, k)) return false;
    }
    return true;
  });
  suite.run("burnside: marks is a ring isomorphism", [&] {
    for (int t = 0; t < 100; ++t) {
      FiniteBurnsideElt a{p, 3, {}}, b{p, 3, {}};
      for (int i = 0; i <= 3; ++i) {
        a.coeffs.push_back(small_rational(rng));
        b.coeffs.push_back(small_rational(rng));
      }
      auto ma = marks(a), mb = marks(b), mab = marks(finite_mul(a, b));
      for (size_t j = 0; j < ma.size(); ++j)
        if (mab[j] != ma[j] * mb[j]) return false;
      if (!(from_marks(p, 3, ma) == a)) return false;
      if (!(colim_embed(finite_mul(a, b)) == colim_embed(a) * colim_embed(b))) return false;
    }
    return true;
  });
  suite.run("burnside: truncation ring map and pullback reconstruction", [&] {
    for (int t = 0; t < 100; ++t) {
      EvSeq a = random_seq(rng, p), b = random_seq(rng, p);
      std::uniform_int_distribution<int> nn(0, 6);
      int n = nn(rng);
      if (truncate(a * b, n) != truncate(a, n) * truncate(b, n)) return false;
      if (!pullback_square_check(a).exact) return false;
    }
    for (int n = 0; n <= 5; ++n)
      if (!(colim_embed(grothendieck_e(p, n)) == idempotent_e(p, n))) return false;
    return true;
  });
}

void amodel_checks(Suite& suite, std::mt19937& rng, long p) {
  suite.run("amodel: constructed objects stay valid", [&] {
    for (int t = 0; t < 5; ++t) {
      RigidObject m = random_generator_sum(rng, p, 2, 2);
      RigidObject n = random_generator_sum(rng, p, 2, 2);
      validate(direct_sum(m, n));
      validate(tensor(m, n));
      validate(restrict_object(m, 1));
      RigidMorphism f = random_morphism(rng, m, n, std::max(m.stab, n.stab) + 1);
      validate(f);
      validate(kernel(f).inclusion);
      validate(cokernel(f).projection);
      validate(image(f).inclusion);
    }
    return true;
  });
  suite.run("amodel: unit and commutativity of the tensor product", [&] {
    RigidObject u = generator(GenKind::A, 0, p);
    for (int t = 0; t < 5; ++t) {
      RigidObject m = random_generator_sum(rng, p, 2, 2);
      RigidObject n = random_generator_sum(rng, p, 2, 2);
      if (!is_isomorphic(tensor(u, m), m)) return false;
      if (!is_isomorphic(tensor(m, n), tensor(n, m))) return false;
    }
    return true;
  });
  suite.run("amodel: exactness of kernel and cokernel", [&] {
    for (int t = 0; t < 5; ++t) {
      RigidObject m = random_generator_sum(rng, p, 2, 2);
      RigidObject n = random_generator_sum(rng, p, 2, 2);
      RigidMorphism f = random_morphism(rng, m, n, std::max(m.stab, n.stab) + 1);
      SubobjectResult ker = kernel(f);
      QuotientResult cok = cokernel(f);
      for (int k = 0; k < f.stab; ++k) {
        if (!(f.level_map(k) * ker.inclusion.level_map(k)).is_zero()) return false;
        if (rank(ker.inclusion.level_map(k)) + rank(f.level_map(k)) !=
            f.source.level_module(k).dim())
          return false;
        if (!(cok.projection.level_map(k) * f.level_map(k)).is_zero()) return false;
      }
      if (!(f.stable * ker.inclusion.stable).is_zero()) return false;
      if (!(f.finf * ker.inclusion.finf).is_zero()) return false;
      if (!is_isomorphic(image(f).object, kernel(cok.projection).object)) return false;
    }
    return true;
  });
  suite.run("amodel: splitting of eventually specified sequences", [&] {
    std::vector<RigidObject> objects = {
        generator(GenKind::A, 0, p), generator(GenKind::A, 1, p),
        generator(GenKind::A, 2, p),
        direct_sum(generator(GenKind::E, 1, p), generator(GenKind::L, 0, p))};
    for (const RigidObject& m : objects)
      for (int n = 0; n <= 3; ++n)
        if (!evspec_fixed_split(m, n).matches) return false;
    return true;
  });
}

void homext_checks(Suite& suite, std::mt19937& rng, long p) {
  suite.run("homext: hom table of the generators", [&] {
    RigidObject u = generator(GenKind::A, 0, p);
    HomDescriptor uu = hom_space(u, u);
    if (uu.stable_dim != 1 || uu.dev_dims != evseq_one(p) ||
        uu.free_dims != evseq_zero(p))
      return false;
    for (int n = 0; n <= 2; ++n) {
      RigidObject ln = generator(GenKind::L, n, p), en = generator(GenKind::E, n, p);
      if (hom_space(u, ln).stable_dim != 1) return false;
      if (hom_space(ln, u).stable_dim != 0 || !hom_space(ln, u).total_zero()) return false;
      if (hom_space(ln, ln).stable_dim != ipow(p, n)) return false;
      if (hom_space(en, en).dev_at(n) != ipow(p, n)) return false;
      for (int m = 0; m <= 2; ++m) {
        if (!hom_space(ln, generator(GenKind::E, m, p)).total_zero()) return false;
        if (!hom_space(en, generator(GenKind::L, m, p)).total_zero()) return false;
        if (m != n && !hom_space(en, generator(GenKind::E, m, p)).total_zero())
          return false;
        if (m != n && hom_space(generator(GenKind::L, m, p), ln).stable_dim !=
                          ipow(p, std::min(m, n)))
          return false;
      }
    }
    return true;
  });
  suite.run("homext: ext vanishing and the L-against-A germ quotient", [&] {
    for (int n = 0; n <= 2; ++n) {
      RigidObject x = random_generator_sum(rng, p, 2, 2);
      if (!ext1(generator(GenKind::A, n, p), x).zero()) return false;
      if (!ext1(x, generator(GenKind::E, n, p)).zero()) return false;
      if (!ext1(x, generator(GenKind::L, n, p)).zero()) return false;
      for (int m = 0; m <= 2; ++m) {
        ExtDescriptor e = ext1(generator(GenKind::L, m, p), generator(GenKind::A, n, p));
        if (e.w_dim() != ipow(p, std::min(m, n)) || e.v_dim() != e.w_dim()) return false;
      }
    }
    return true;
  });
  suite.run("homext: truncation oracle agrees on sampled pairs", [&] {
    for (GenKind k1 : {GenKind::A, GenKind::L})
      for (GenKind k2 : {GenKind::A, GenKind::E, GenKind::L}) {
        RigidObject src = generator(k1, 1, p), tgt = generator(k2, 1, p);
        ExtDescriptor e = ext1(src, tgt);
        int s = std::max(src.stab, tgt.stab);
        AffineFit fit = ext1_oracle_fit(src, tgt, s + 3, s + 6);
        if (!fit.exact || fit.slope != e.w_dim() || fit.intercept != -e.v_dim())
          return false;
      }
    return true;
  });
  suite.run("homext: left exactness against kernels", [&] {
    RigidObject m = direct_sum(generator(GenKind::A, 1, p), generator(GenKind::E, 0, p));
    RigidObject n = generator(GenKind::A, 0, p);
    RigidMorphism f = random_morphism(rng, m, n, std::max(m.stab, n.stab) + 1);
    RigidObject ker_f = kernel(f).object;
    for (GenKind kind : {GenKind::A, GenKind::E, GenKind::L}) {
      RigidObject gen_p = generator(kind, 1, p);
      int kappa = std::max({hom_space(gen_p, m).common_stab,
                            hom_space(gen_p, n).common_stab,
                            hom_space(gen_p, ker_f).common_stab, f.stab}) +
                  1;
      if (postcomposition_kernel_dim(gen_p, f, kappa) !=
          hom_space(gen_p, ker_f).truncated_dim(kappa))
        return false;
    }
    return true;
  });
  suite.run("homext: End(U) is the Burnside ring", [&] {
    RigidObject u = generator(GenKind::A, 0, p);
    HomDescriptor end_u = hom_space(u, u);
    auto from_seq = [&](const EvSeq& a) {
      RigidMorphism f = scale(end_u.stable_basis[0], a.tail());
      for (size_t k = 0; k < a.prefix().size(); ++k)
        for (const auto& b : dev_slot_basis(end_u, static_cast<int>(k)))
          f = add(f, scale(b, a.prefix()[k] - a.tail()));
      return f;
    };
    for (int t = 0; t < 10; ++t) {
      EvSeq a = random_seq(rng, p), b = random_seq(rng, p);
      RigidMorphism fab = compose(from_seq(a), from_seq(b));
      EvSeq ab = a * b;
      for (int k = 0; k < 6; ++k)
        if (fab.level_map(k)(0, 0) != ab.at(k)) return false;
    }
    return true;
  });
}

void mackey_checks(Suite& suite, const CheckConfig& config) {
  suite.run("mackey: four-way dimension agreement", [&] {
    for (long p : {2L, 3L})
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
          TomDieckTable td = td_split(p, n, m, config.jmax);
          MackeyValueDescriptor orb = orbit_hom(p, n, m);
          MackeyValueDescriptor mk =
              mackey_components(generator(GenKind::A, m, p), n);
          HomDescriptor hs =
              hom_space(generator(GenKind::A, n, p), generator(GenKind::A, m, p));
          for (int j = n; j <= config.jmax; ++j) {
            long v = td.dim_at(j);
            if (v != orb.component_at(j) || v != mk.component_at(j) ||
                v != hs.dev_at(j))
              return false;
            if (v != (j >= std::max(n, m) ? ipow(p, std::min(n, m)) : 0)) return false;
          }
          if (hs.stable_dim != ipow(p, std::min(n, m))) return false;
          if (mk.inf_dim != orb.inf_dim) return false;
        }
    return true;
  });
}

void parser_checks(Suite& suite, std::mt19937& rng) {
  suite.run("cli: parse after print is the identity", [&] {
    std::uniform_int_distribution<int> kind(0, 4), idx(0, 4), d(-3, 3);
    std::function<ExprPtr(int)> random_expr = [&](int depth) -> ExprPtr {
      int k = depth == 0 ? 0 : kind(rng);
      switch (k) {
        case 1:
          return make_sum(random_expr(depth - 1), random_expr(depth - 1));
        case 2:
          return make_tensor(random_expr(depth - 1), random_expr(depth - 1));
        case 3:
          return make_shift(random_expr(depth - 1), d(rng));
        case 4:
          return make_res(random_expr(depth - 1), idx(rng));
        default: {
          int g = kind(rng) % 3;
          return make_gen(g == 0 ? GenKind::A : (g == 1 ? GenKind::E : GenKind::L),
                          idx(rng));
        }
      }
    };
    for (int t = 0; t < 100; ++t) {
      ExprPtr e = random_expr(3);
      ExprPtr reparsed = parse_expr(print_expr(*e));
      if (!expr_equal(*e, *reparsed)) return false;
    }
    return true;
  });
}

}  // namespace

std::vector<CheckResult> run_all_checks(const CheckConfig& config) {
  std::vector<CheckResult> results;
  Suite suite(results);
  std::mt19937 rng(config.seed);
  linalg_checks(suite, rng);
  cyclic_checks(suite, rng, config.p);
  burnside_checks(suite, rng, config.p);
  amodel_checks(suite, rng, config.p);
  homext_checks(suite, rng, config.p);
  mackey_checks(suite, config);
  parser_checks(suite, rng);
  return results;
}

}  // namespace padic
