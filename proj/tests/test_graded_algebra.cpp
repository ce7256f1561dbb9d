#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcat/graded_algebra.hpp"

using tcat::AlgebraPtr;
using tcat::Element;
using tcat::Field;
using tcat::GradedAlgebra;
using tcat::Scalar;
using tcat::SparseVec;

namespace {

// Index of the basis vector with the given label; fails the test if absent.
std::size_t idx(const AlgebraPtr& a, const std::string& label) {
  for (std::size_t i = 0; i < a->dimension(); ++i)
    if (a->basis(i).label == label) return i;
  FAIL("no basis element labelled ", label);
  return 0;
}

}  // namespace

TEST_CASE("truncated polynomial ring multiplies by exponent addition") {
  Field z2 = Field::prime(2);
  auto a = GradedAlgebra::truncated_polynomial(z2, "a", 1, 4);
  CHECK(a->dimension() == 4);
  CHECK(a->top_degree() == 3);
  Element g = a->basis_element(idx(a, "a"));
  CHECK((g * g).str() == "a^2");
  CHECK((g * g * g).str() == "a^3");
  CHECK((g * g * g * g).is_zero());
  CHECK(a->validate().ok);
}

TEST_CASE("odd truncation height needs characteristic two") {
  CHECK_THROWS_AS(GradedAlgebra::truncated_polynomial(Field::rationals(), "a", 1, 4),
                  std::invalid_argument);
  CHECK_NOTHROW(GradedAlgebra::truncated_polynomial(Field::rationals(), "x", 2, 4));
  CHECK_NOTHROW(GradedAlgebra::truncated_polynomial(Field::rationals(), "x", 3, 2));
}

TEST_CASE("exterior algebra anticommutes and is associative") {
  Field q = Field::rationals();
  auto t3 = GradedAlgebra::exterior(q, {{"x", 1}, {"y", 1}, {"z", 1}});
  CHECK(t3->dimension() == 8);
  CHECK(t3->betti_numbers() == std::vector<std::size_t>{1, 3, 3, 1});
  Element x = t3->basis_element(idx(t3, "x"));
  Element y = t3->basis_element(idx(t3, "y"));
  Element z = t3->basis_element(idx(t3, "z"));
  CHECK((x * y).str() == "xy");
  CHECK((y * x).str() == "-xy");
  CHECK((x * y * z).str() == "xyz");
  CHECK((z * y * x).str() == "-xyz");
  CHECK((x * x).is_zero());
  CHECK(t3->validate().ok);
  CHECK_THROWS_AS(GradedAlgebra::exterior(q, {{"x", 2}}), std::invalid_argument);
}

TEST_CASE("tensor square of an even sphere class squares to minus twice the mixed term") {
  Field q = Field::rationals();
  auto s2 = GradedAlgebra::truncated_polynomial(q, "x", 2, 2);
  auto a = GradedAlgebra::tensor_product(s2, s2);
  Element left = a->basis_element(idx(a, "x⊗1"));
  Element right = a->basis_element(idx(a, "1⊗x"));
  Element bar = left - right;
  Element sq = bar * bar;
  SparseVec want{{idx(a, "x⊗x"), Scalar::from_int(-2, q)}};
  CHECK(sq == a->element(want));
  CHECK(a->validate().ok);
}

TEST_CASE("tensor square of an odd sphere class squares to zero") {
  Field q = Field::rationals();
  auto s3 = GradedAlgebra::truncated_polynomial(q, "x", 3, 2);
  auto a = GradedAlgebra::tensor_product(s3, s3);
  Element bar = a->basis_element(idx(a, "x⊗1")) - a->basis_element(idx(a, "1⊗x"));
  CHECK((bar * bar).is_zero());
  // the Koszul rule in isolation: (1(x)x)(x(x)1) = -x(x)x for odd x
  Element mixed = a->basis_element(idx(a, "1⊗x")) * a->basis_element(idx(a, "x⊗1"));
  CHECK(mixed == -a->basis_element(idx(a, "x⊗x")));
  CHECK(a->validate().ok);
}

TEST_CASE("wedge sum kills cross products and renames clashes") {
  Field q = Field::rationals();
  auto circle = GradedAlgebra::exterior(q, {{"x", 1}});
  auto w = GradedAlgebra::wedge_sum(circle, circle);
  CHECK(w->dimension() == 3);
  CHECK(w->betti_numbers() == std::vector<std::size_t>{1, 2});
  Element u = w->basis_element(idx(w, "x"));
  Element v = w->basis_element(idx(w, "x'"));
  CHECK((u * v).is_zero());
  CHECK((u * u).is_zero());
  CHECK(w->validate().ok);
}

TEST_CASE("graded dimensions of a product of a lens-like space with a wedge") {
  Field z2 = Field::prime(2);
  auto rp3 = GradedAlgebra::truncated_polynomial(z2, "a", 1, 4);
  auto s5 = GradedAlgebra::truncated_polynomial(z2, "s", 5, 2);
  auto wedge = GradedAlgebra::wedge_sum(rp3, s5);
  CHECK(wedge->betti_numbers() == std::vector<std::size_t>{1, 1, 1, 1, 0, 1});
  auto total = GradedAlgebra::tensor_product(rp3, wedge);
  CHECK(total->betti_numbers() == std::vector<std::size_t>{1, 2, 3, 4, 3, 3, 2, 1, 1});
  CHECK(total->validate(4000).ok);
}

TEST_CASE("graded dimensions of a torus times a figure eight") {
  Field q = Field::rationals();
  auto circle = GradedAlgebra::exterior(q, {{"t", 1}});
  auto eight = GradedAlgebra::wedge_sum(circle, circle);
  auto a = GradedAlgebra::tensor_product(circle, eight);
  CHECK(a->betti_numbers() == std::vector<std::size_t>{1, 3, 2});
  CHECK(a->validate().ok);
}

TEST_CASE("element algebra basics") {
  Field q = Field::rationals();
  auto s2 = GradedAlgebra::truncated_polynomial(q, "x", 2, 2);
  Element one = s2->unit();
  Element x = s2->basis_element(1);
  CHECK((one * x) == x);
  CHECK((x + x) == x.scaled(Scalar::from_int(2, q)));
  CHECK((x - x).is_zero());
  unsigned d = 99;
  CHECK(x.is_homogeneous(&d));
  CHECK(d == 2);
  CHECK_FALSE((one + x).is_homogeneous());
  CHECK((one + x).str() == "1 + x");
  CHECK((one - x).str() == "1 - x");
  CHECK(s2->zero().str() == "0");

  auto other = GradedAlgebra::truncated_polynomial(q, "x", 2, 2);
  CHECK_THROWS_AS(x * other->unit(), tcat::AlgebraMismatch);
}

TEST_CASE("point algebra is the unit alone") {
  auto pt = GradedAlgebra::point(Field::rationals());
  CHECK(pt->dimension() == 1);
  CHECK(pt->top_degree() == 0);
  CHECK(pt->validate().ok);
}
