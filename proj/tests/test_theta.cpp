#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "jconf/jordan.hpp"
#include "jconf/models.hpp"
#include "jconf/theta.hpp"

using namespace jconf;

namespace {

Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("model constants match the computed algebras") {
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    ModelConstants mc = model_constants(id);
    JordanAlgebra V = make_model(id);
    CHECK(mc.r == V.r);
    CHECK(mc.d == V.d);
    CHECK(mc.n == V.n);
    CHECK(mc.delta == V.delta);
    CHECK(mc.euclidean == V.euclidean);
    CHECK(mc.field == V.field);
    CHECK(mc.has_minrep == V.has_minrep);
    CHECK(mc.spin_p == V.spin_p);
    CHECK(mc.spin_q == V.spin_q);
    CHECK(mc.rd_half == rat(static_cast<long>(V.r) * V.d, 2));
  }

  struct LabelRow {
    const char* id;
    const char* co;
    const char* g;
    const char* gs;
  };
  const std::vector<LabelRow> rows = {
      {"Sym3R", "sp(3,R)", "so(3)", "so(2)"},
      {"Herm3C", "su(3,3)", "su(3)", "s(u(1)+u(2))"},
      {"Herm3H", "so*(12)", "sp(3)", "sp(1)+sp(2)"},
      {"SpinR(1,3)", "so(2,4)", "so(3)", "so(2)"},
      {"Herm3O", "e7(-25)", "f4", "so(9)"},
      {"M3R", "sl(6,R)", "sl(3,R)", "s(gl(1,R)+gl(2,R))"},
      {"Skew6R", "so(6,6)", "sp(3,R)", "sp(1,R)+sp(2,R)"},
      {"SpinR(5,3)", "so(6,4)", "so(4,3)", "so(4,2)"},
      {"Herm3Os", "e7(7)", "f4(4)", "so(4,5)"},
      {"Sym3C", "sp(3,C)", "so(3,C)", "so(2,C)"},
      {"M3C", "sl(6,C)", "sl(3,C)", "s(gl(1,C)+gl(2,C))"},
      {"Skew6C", "so(12,C)", "sp(3,C)", "sp(1,C)+sp(2,C)"},
      {"SpinC(4)", "so(6,C)", "so(3,C)", "so(2,C)"},
      {"Herm3OC", "e7(C)", "f4(C)", "so(9,C)"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.id);
    ModelConstants mc = model_constants(row.id);
    CHECK(mc.co_label == row.co);
    CHECK(mc.g_label == row.g);
    CHECK(mc.gsigma_label == row.gs);
  }

  CHECK(model_constants("Sym3R").cover_annotation == "half-integral");
  CHECK(model_constants("Sym3C").cover_annotation == "half-integral");
  CHECK(model_constants("Herm3O").cover_annotation == "integral");
  CHECK(model_constants("Herm3O").rd_half == 12);
  CHECK(model_constants("M3R").rd_half == 3);
  CHECK(model_constants("SpinR(5,3)").rd_half == 6);

  ModelConstants odd = model_constants("SpinR(3,2)");
  CHECK_FALSE(odd.has_minrep);
  CHECK(odd.co_label == "so(4,3)");
  CHECK(model_constants("SpinR(4,2)").principal_twist);
  CHECK(model_constants("SpinR(5,3)").principal_twist);
  CHECK_FALSE(model_constants("SpinR(3,3)").principal_twist);
  CHECK_FALSE(model_constants("SpinR(1,3)").principal_twist);
  CHECK_THROWS_AS(model_constants("Oops3R"), ThetaError);
}

TEST_CASE("parameter validation enforces the lattice conditions") {
  ModelConstants sym = model_constants("Sym3R");
  CHECK_FALSE(validate_gparam(sym, EuclideanHW{0}));
  CHECK_FALSE(validate_gparam(sym, EuclideanHW{2}));
  CHECK_FALSE(validate_gparam(sym, EuclideanHW{40}));
  CHECK(validate_gparam(sym, EuclideanHW{3}).has_value());
  CHECK(validate_gparam(sym, EuclideanHW{1}).has_value());
  CHECK(validate_gparam(sym, EuclideanHW{-2}).has_value());
  CHECK(validate_gparam(sym, NonEuclPrincipal{0, rat(1)}).has_value());
  CHECK(validate_gparam(sym, ComplexPrincipal{0, rat(1)}).has_value());

  ModelConstants m3 = model_constants("M3R");  // rd/2 = 3
  CHECK_FALSE(validate_gparam(m3, AqModule{1}));
  CHECK(validate_gparam(m3, AqModule{2}).has_value());
  CHECK_FALSE(validate_gparam(m3, AqModule{-1}));
  CHECK(validate_gparam(m3, AqModule{-3}).has_value());
  CHECK_FALSE(validate_gparam(m3, AqModule{3}));
  CHECK_FALSE(validate_gparam(m3, NonEuclPrincipal{0, rat(5, 2)}));
  CHECK_FALSE(validate_gparam(m3, NonEuclPrincipal{1, rat(-7, 3)}));
  CHECK(validate_gparam(m3, NonEuclPrincipal{2, rat(1)}).has_value());
  CHECK(validate_gparam(m3, EuclideanHW{0}).has_value());

  ModelConstants m3c = model_constants("M3C");
  CHECK_FALSE(validate_gparam(m3c, ComplexPrincipal{-5, rat(9, 4)}));
  CHECK(validate_gparam(m3c, AqModule{1}).has_value());
  CHECK(validate_gparam(m3c, NonEuclPrincipal{0, rat(1)}).has_value());

  ModelConstants odd = model_constants("SpinR(3,2)");
  CHECK(validate_gparam(odd, NonEuclPrincipal{0, rat(1)}) ==
        std::string("model has no minimal representation"));
  CHECK(validate_gparam(odd, AqModule{0}).has_value());

  ModelConstants f4s = model_constants("Herm3Os");  // rd/2 = 12
  CHECK_FALSE(validate_gparam(f4s, AqModule{-10}));
  CHECK(validate_gparam(f4s, AqModule{-12}).has_value());
  CHECK(validate_gparam(f4s, AqModule{-11}).has_value());
  CHECK_FALSE(validate_gparam(f4s, AqModule{0}));

  // rank-one side
  CHECK_FALSE(validate_gprime(m3, HolDiscrete{rat(3, 2)}));
  CHECK(validate_gprime(m3, HolDiscrete{rat(1)}).has_value());
  CHECK_FALSE(validate_gprime(m3, Discrete{4}));
  CHECK(validate_gprime(m3, Discrete{3}).has_value());
  CHECK(validate_gprime(m3, Discrete{0}).has_value());
  CHECK_FALSE(validate_gprime(m3, Principal{1, rat(5)}));
  CHECK(validate_gprime(m3, Principal{2, rat(5)}).has_value());
  CHECK_FALSE(validate_gprime(m3c, Principal{7, rat(5)}));
  CHECK_FALSE(validate_gprime(m3, Complementary{0, rat(1, 4)}));
  CHECK(validate_gprime(m3, Complementary{0, rat(1, 2)}).has_value());
  CHECK(validate_gprime(m3, Complementary{0, rat(0)}).has_value());
  CHECK_FALSE(validate_gprime(m3c, Complementary{0, rat(3, 4)}));
  CHECK(validate_gprime(m3c, Complementary{1, rat(3, 4)}).has_value());
}

TEST_CASE("casimir eigenvalues follow the exact formulas") {
  ModelConstants herm3o = model_constants("Herm3O");  // rd = 24
  CHECK(casimir_eigenvalue(herm3o, EuclideanHW{0}).c == Scalar(0));
  CHECK(casimir_eigenvalue(herm3o, EuclideanHW{2}).c == Scalar(rat(-3, 2)));

  // the two discrete formulas agree as degree-2 polynomials in k
  ModelConstants m3 = model_constants("M3R");
  for (long k : {-2L, 0L, 2L, 4L, 40L})
    CHECK(casimir_eigenvalue(m3, EuclideanHW{k}).c == casimir_eigenvalue(m3, AqModule{k}).c);

  // same formula across models with equal rd (Herm3C and M3R both have rd = 6)
  ModelConstants herm3c = model_constants("Herm3C");
  for (long k : {0L, 2L, 4L, 6L, 8L})
    CHECK(casimir_eigenvalue(herm3c, EuclideanHW{k}).c ==
          casimir_eigenvalue(m3, AqModule{k}).c);

  CHECK(casimir_eigenvalue(m3, NonEuclPrincipal{0, rat(0)}).c == Scalar(rat(1, 8)));
  CHECK(casimir_eigenvalue(m3, NonEuclPrincipal{1, rat(1)}).c == Scalar(rat(5, 32)));

  ModelConstants m3c = model_constants("M3C");  // rd = 6, rho = 4
  CasimirEigenvalue plain = casimir_eigenvalue(m3c, ComplexPrincipal{0, rat(7, 3)});
  REQUIRE(plain.d.has_value());
  CHECK(*plain.d == Scalar(0));
  CasimirEigenvalue both = casimir_eigenvalue(m3c, ComplexPrincipal{2, rat(3)});
  CHECK(both.c == Scalar(rat(9, 32)));
  REQUIRE(both.d.has_value());
  CHECK(*both.d == Scalar(rat(3, 4)));
}

TEST_CASE("canonical forms resolve the sign equivalence") {
  CHECK(canonicalize(Principal{-3, rat(1, 2)}, 2) == GPrimeParam(Principal{3, rat(-1, 2)}));
  CHECK(canonicalize(Principal{0, rat(-5)}, 2) == GPrimeParam(Principal{0, rat(5)}));
  CHECK(canonicalize(Principal{2, rat(-5)}, 2) == GPrimeParam(Principal{2, rat(-5)}));
  CHECK(canonicalize(Principal{1, rat(-1, 2)}, 1) == GPrimeParam(Principal{1, rat(1, 2)}));
  CHECK(canonicalize(Principal{-1, rat(1, 2)}, 1) == GPrimeParam(Principal{1, rat(1, 2)}));
  CHECK(canonicalize(Complementary{0, rat(-1, 4)}, 1) ==
        GPrimeParam(Complementary{0, rat(1, 4)}));
  CHECK(canonicalize(HolDiscrete{rat(5, 2)}, 1) == GPrimeParam(HolDiscrete{rat(5, 2)}));
}

TEST_CASE("theta lifts map parameters exactly") {
  struct GoldenRow {
    const char* model;
    GParam input;
    GPrimeParam expected;
    bool twisted;
  };
  const std::vector<GoldenRow> table = {
      // Euclidean models: k -> k + rd/2 on the holomorphic side
      {"Sym3R", EuclideanHW{0}, HolDiscrete{rat(3, 2)}, false},
      {"Sym3R", EuclideanHW{2}, HolDiscrete{rat(7, 2)}, false},
      {"Sym3R", EuclideanHW{40}, HolDiscrete{rat(83, 2)}, false},
      {"Herm3C", EuclideanHW{0}, HolDiscrete{rat(3)}, false},
      {"Herm3C", EuclideanHW{6}, HolDiscrete{rat(9)}, false},
      {"Herm3H", EuclideanHW{2}, HolDiscrete{rat(8)}, false},
      {"SpinR(1,3)", EuclideanHW{0}, HolDiscrete{rat(2)}, false},
      {"SpinR(1,3)", EuclideanHW{4}, HolDiscrete{rat(6)}, false},
      {"Herm3O", EuclideanHW{0}, HolDiscrete{rat(12)}, false},
      {"Herm3O", EuclideanHW{2}, HolDiscrete{rat(14)}, false},
      // real non-Euclidean continuous parameters: nu = mu/2
      {"M3R", NonEuclPrincipal{0, rat(1)}, Principal{0, rat(1, 2)}, false},
      {"M3R", NonEuclPrincipal{1, rat(3)}, Principal{1, rat(3, 2)}, false},
      {"M3R", NonEuclPrincipal{0, rat(-1)}, Principal{0, rat(1, 2)}, false},
      {"Skew6R", NonEuclPrincipal{1, rat(1, 2)}, Principal{1, rat(1, 4)}, false},
      {"SpinR(2,2)", NonEuclPrincipal{0, rat(5)}, Principal{0, rat(5, 2)}, false},
      {"SpinR(3,3)", NonEuclPrincipal{1, rat(1)}, Principal{1, rat(1, 2)}, false},
      {"Herm3Os", NonEuclPrincipal{0, rat(7)}, Principal{0, rat(7, 2)}, false},
      {"Herm3Os", NonEuclPrincipal{1, rat(1)}, Principal{1, rat(1, 2)}, false},
      // twisted spin models: the induction label flips
      {"SpinR(5,3)", NonEuclPrincipal{0, rat(1)}, Principal{1, rat(1, 2)}, true},
      {"SpinR(5,3)", NonEuclPrincipal{1, rat(2)}, Principal{0, rat(1)}, true},
      {"SpinR(4,2)", NonEuclPrincipal{0, rat(1)}, Principal{1, rat(1, 2)}, true},
      {"SpinR(4,2)", NonEuclPrincipal{1, rat(3)}, Principal{0, rat(3, 2)}, true},
      // real non-Euclidean discrete parameters: k -> k + rd/2
      {"M3R", AqModule{1}, Discrete{4}, false},
      {"M3R", AqModule{-1}, Discrete{2}, false},
      {"M3R", AqModule{3}, Discrete{6}, false},
      {"Skew6R", AqModule{0}, Discrete{6}, false},
      {"Skew6R", AqModule{-4}, Discrete{2}, false},
      {"SpinR(5,3)", AqModule{-2}, Discrete{4}, false},
      {"Herm3Os", AqModule{-10}, Discrete{2}, false},
      {"Herm3Os", AqModule{0}, Discrete{12}, false},
      // complex models: nu = mu/2 with canonical sign
      {"M3C", ComplexPrincipal{0, rat(1)}, Principal{0, rat(1, 2)}, false},
      {"M3C", ComplexPrincipal{3, rat(2)}, Principal{3, rat(1)}, false},
      {"M3C", ComplexPrincipal{-3, rat(2)}, Principal{3, rat(-1)}, false},
      {"Sym3C", ComplexPrincipal{1, rat(1, 3)}, Principal{1, rat(1, 6)}, false},
      {"Skew6C", ComplexPrincipal{-1, rat(-1)}, Principal{1, rat(1, 2)}, false},
      {"SpinC(4)", ComplexPrincipal{2, rat(5)}, Principal{2, rat(5, 2)}, false},
      {"Herm3OC", ComplexPrincipal{0, rat(-4)}, Principal{0, rat(2)}, false},
  };
  CHECK(table.size() >= 30);
  for (const auto& row : table) {
    CAPTURE(row.model);
    CAPTURE(describe(row.input));
    ModelConstants mc = model_constants(row.model);
    ThetaLift lift = theta_lift(mc, row.input);
    CHECK(describe(lift.output) == describe(row.expected));
    CHECK(lift.cover == mc.cover_annotation);
    CHECK(lift.twist.has_value() == row.twisted);
    CHECK_FALSE(validate_gprime(mc, lift.output));
  }

  ModelConstants sym = model_constants("Sym3R");
  CHECK_THROWS_AS(theta_lift(sym, EuclideanHW{3}), ThetaError);
  CHECK_THROWS_AS(theta_lift(model_constants("SpinR(3,2)"), NonEuclPrincipal{0, rat(1)}),
                  ThetaError);
}

TEST_CASE("plancherel support enumerates admissible parameters") {
  ModelConstants sym = model_constants("Sym3R");
  PlancherelSupport ps = plancherel_support(sym);
  CHECK(ps.has_discrete);
  CHECK_FALSE(ps.has_continuous);
  CHECK(ps.discrete_first == 0);
  CHECK(ps.discrete_variant == "EuclideanHW");
  std::vector<GParam> ks = ps.discrete_upto(8);
  REQUIRE(ks.size() == 5);
  CHECK(std::get<EuclideanHW>(ks[0]).k == 0);
  CHECK(std::get<EuclideanHW>(ks[4]).k == 8);

  ModelConstants f4s = model_constants("Herm3Os");
  PlancherelSupport pf = plancherel_support(f4s);
  CHECK(pf.has_discrete);
  CHECK(pf.has_continuous);
  CHECK(pf.discrete_first == -10);
  CHECK(pf.discrete_variant == "AqModule");
  CHECK(pf.continuous_label == "xi");
  CHECK(pf.continuous_values == std::vector<long>{0, 1});
  std::vector<GParam> aq = pf.discrete_upto(4);
  REQUIRE(aq.size() == 8);
  CHECK(std::get<AqModule>(aq.front()).k == -10);
  CHECK(std::get<AqModule>(aq.back()).k == 4);

  ModelConstants m3c = model_constants("M3C");
  PlancherelSupport pc = plancherel_support(m3c);
  CHECK_FALSE(pc.has_discrete);
  CHECK(pc.has_continuous);
  CHECK(pc.continuous_label == "m");
  CHECK(pc.continuous_all_integers);
  CHECK(pc.discrete_upto(40).empty());

  // every emitted parameter validates and lifts
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    ModelConstants mc = model_constants(id);
    PlancherelSupport s = plancherel_support(mc);
    for (const GParam& p : s.discrete_upto(20)) {
      CHECK_FALSE(validate_gparam(mc, p));
      CHECK_NOTHROW(theta_lift(mc, p));
    }
    if (s.has_continuous) {
      std::vector<long> labels = s.continuous_values;
      if (s.continuous_all_integers) labels = {-7, -1, 0, 1, 7};
      for (long label : labels) {
        GParam p = s.continuous_param(label, rat(3, 2));
        CHECK_FALSE(validate_gparam(mc, p));
        CHECK_NOTHROW(theta_lift(mc, p));
      }
    }
  }

  CHECK_THROWS_AS(plancherel_support(model_constants("SpinR(3,2)")), ThetaError);
}

TEST_CASE("eigenvalue formulas agree after parameter substitution") {
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    ConsistencyReport rep = abstract_theta_consistency(model_constants(id));
    CAPTURE(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("lifted parameters are pairwise distinct") {
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    ModelConstants mc = model_constants(id);
    InjectivityReport rep = theta_injectivity_scan(mc, 40);
    CAPTURE(rep.collision);
    CHECK(rep.ok);
    if (mc.euclidean) {
      CHECK(rep.discrete_checked == 21);
    } else if (mc.delta == 1) {
      CHECK(rep.discrete_checked >= 17);
      CHECK(rep.continuous_checked == 16);
    } else {
      CHECK(rep.discrete_checked == 0);
      CHECK(rep.continuous_checked == 8 * 81);
    }
  }

  // distinct discrete inputs hit distinct outputs across the whole window
  ModelConstants m3 = model_constants("M3R");
  std::set<std::string> outs;
  for (const GParam& p : plancherel_support(m3).discrete_upto(40))
    outs.insert(describe(theta_lift(m3, p).output));
  CHECK(outs.size() == 21);
}
