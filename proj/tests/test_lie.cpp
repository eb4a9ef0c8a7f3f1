#include "helpers.hpp"

using namespace symcheck;

// build_sl(2) basis order: E12 (e), E21 (f), H1 (h).
namespace {
const LieAlgebra& sl2() {
  static const LieAlgebra L = build_sl(2);
  return L;
}
const LieAlgebra& sl3() {
  static const LieAlgebra L = build_sl(3);
  return L;
}
}  // namespace

TEST_CASE("sl2 bracket table") {
  const LieAlgebra& L = sl2();
  Element e = Element::basis(L, 0);
  Element f = Element::basis(L, 1);
  Element h = Element::basis(L, 2);
  CHECK(bracket(h, e) == Scalar(2) * e);
  CHECK(bracket(h, f) == Scalar(-2) * f);
  CHECK(bracket(e, f) == h);
  CHECK(bracket(e, e).is_zero());

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Element x(L, rng.small_int_vector(3));
    CHECK(bracket(x, x).is_zero());
  }
}

TEST_CASE("fixture bracket from the sl2-AI pair") {
  const LieAlgebra& L = ctx_for("sl2-AI").alg();
  Element h1 = elem(L, {{"0", "i"}, {"-i", "0"}});
  Element e1 = elem(L, {{"1/2i", "1/2"}, {"1/2", "-1/2i"}});
  CHECK(bracket(h1, e1) == Scalar(2) * e1);
}

TEST_CASE("ad matrices") {
  const LieAlgebra& L = sl2();
  CHECK(ad_matrix(Element::zero(L)).is_zero());

  EigenDecomposition eig = integer_eigenvalues(ad_matrix(Element::basis(L, 2)), true);
  REQUIRE(eig.spaces.size() == 3);
  CHECK(eig.spaces[0].first == q("-2"));
  CHECK(eig.spaces[1].first == q("0"));
  CHECK(eig.spaces[2].first == q("2"));
  for (auto& [lambda, space] : eig.spaces) CHECK(space.dim() == 1);

  // structure constants agree with realization commutators
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Element x(L, rng.small_int_vector(3));
    Element y(L, rng.small_int_vector(3));
    Matrix xm = mat_of(x);
    Matrix ym = mat_of(y);
    CHECK(mat_of(bracket(x, y)) == xm * ym - ym * xm);
  }
}

TEST_CASE("ad is a Lie homomorphism") {
  const LieAlgebra& L = sl3();
  Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    Element x(L, rng.small_int_vector(8));
    Element y(L, rng.small_int_vector(8));
    Matrix lhs = ad_matrix(bracket(x, y));
    Matrix rhs = ad_matrix(x) * ad_matrix(y) - ad_matrix(y) * ad_matrix(x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("killing form values and identities") {
  const LieAlgebra& L = sl2();
  Element e = Element::basis(L, 0);
  Element f = Element::basis(L, 1);
  Element h = Element::basis(L, 2);
  CHECK(killing(h, h) == q("8"));
  CHECK(killing(e, e) == q("0"));
  CHECK(killing(e, f) == q("4"));

  Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    Element x(L, rng.small_int_vector(3));
    Element y(L, rng.small_int_vector(3));
    CHECK(killing(x, y) == killing(y, x));
  }
  // associativity kappa([a,b],c) = kappa(a,[b,c]) on all basis triples
  for (const LieAlgebra* alg : {&sl2(), &sl3()}) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t j = 0; j < alg->dim(); ++j)
        for (std::size_t k = 0; k < alg->dim(); ++k) {
          Element a = Element::basis(*alg, i);
          Element b = Element::basis(*alg, j);
          Element c = Element::basis(*alg, k);
          CHECK(killing(bracket(a, b), c) == killing(a, bracket(b, c)));
        }
  }
}

TEST_CASE("centralizers") {
  const LieAlgebra& L = sl2();
  CHECK(centralizer(full_space(L), {Element::zero(L)}) == full_space(L));

  Subspace ce = centralizer(full_space(L), {Element::basis(L, 0)});
  CHECK(ce.dim() == 1);
  CHECK(ce.contains(Element::basis(L, 0).coords));

  const PairContext& p1 = ctx_for("sl2-AI");
  const LieAlgebra& L1 = p1.alg();
  Element e1 = elem(L1, {{"1/2i", "1/2"}, {"1/2", "-1/2i"}});
  Element h1 = elem(L1, {{"0", "i"}, {"-i", "0"}});
  Element f1 = elem(L1, {{"-1/2i", "1/2"}, {"1/2", "1/2i"}});
  CHECK(centralizer(p1.pair.p, {e1, h1, f1}).dim() == 0);
}

TEST_CASE("nilpotent and semisimple element tests") {
  const LieAlgebra& L = ctx_for("sl2-AI").alg();
  CHECK(is_nilpotent_element(Element::zero(L)));
  CHECK(is_semisimple_element(Element::zero(L)));

  Element e1 = elem(L, {{"1/2i", "1/2"}, {"1/2", "-1/2i"}});
  CHECK(is_nilpotent_element(e1));
  CHECK_FALSE(is_semisimple_element(e1));

  Element c1 = elem(L, {{"0", "1"}, {"1", "0"}});
  CHECK_FALSE(is_nilpotent_element(c1));
  CHECK(is_semisimple_element(c1));
  CHECK(min_poly(ad_matrix(c1)).size() == 4);  // t(t-2)(t+2)

  CHECK_FALSE(is_semisimple_element(Element::basis(L, 0)));

  // mutually exclusive on nonzero elements
  Rng rng(29);
  const LieAlgebra& L3 = sl3();
  for (int trial = 0; trial < 50; ++trial) {
    Element x(L3, rng.small_int_vector(8));
    if (x.is_zero()) continue;
    CHECK_FALSE((is_nilpotent_element(x) && is_semisimple_element(x)));
  }
}

TEST_CASE("derived subspaces") {
  const LieAlgebra& L3 = sl3();
  // diagonal of sl3 is abelian
  Subspace diag = Subspace::span(
      {Element::basis(L3, 6).coords, Element::basis(L3, 7).coords}, 8);
  CHECK(derived_subspace(diag, L3).dim() == 0);

  const LieAlgebra& L = sl2();
  CHECK(derived_subspace(Subspace::full(3), L) == Subspace::full(3));
  CHECK(derived_subspace(Subspace::span({Element::basis(L, 0).coords}, 3), L).dim() == 0);
}

TEST_CASE("verify_structure diagnostics") {
  CHECK(verify_structure(sl3()).empty());
  CHECK(rref(sl3().killing_gram()).rank == 8);

  LieAlgebra so3 = build_so(3);
  CHECK(so3.dim() == 3);
  CHECK(verify_structure(so3).empty());

  // corrupt one structure constant of sl2: [e,f] = h + e instead of h
  std::vector<std::vector<std::vector<Scalar>>> table(3);
  for (std::size_t i = 0; i < 3; ++i) {
    table[i].resize(3);
    for (std::size_t j = 0; j < 3; ++j) table[i][j] = sl2().structure_constant(i, j);
  }
  table[0][1][0] = Scalar(1);   // adds e to [e,f]
  table[1][0][0] = Scalar(-1);  // keep antisymmetry so Jacobi is the failure
  LieAlgebra corrupted = LieAlgebra::from_structure(table);
  std::vector<std::string> diags = verify_structure(corrupted);
  REQUIRE_FALSE(diags.empty());
  bool found = false;
  for (const std::string& d : diags)
    if (d.find("jacobi violation at basis triple (0,1,2)") != std::string::npos)
      found = true;
  CHECK(found);
}
