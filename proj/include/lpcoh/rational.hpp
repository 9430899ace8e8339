#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <string>
#include <string_view>

namespace lpcoh {

// Exact rational scalar, GMP-backed. Every arithmetic result is kept in
// canonical form: positive denominator, coprime numerator and denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = MatrixX<Rational>;
using VecQ = VectorX<Rational>;
using SpMatQ = Eigen::SparseMatrix<Rational>;

// Parses "p" or "p/q" with an optional leading sign. The result is canonical
// even when the input is not ("-7/21" gives -1/3). Throws ParseError on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational on canonical values: "p" for integers, "p/q"
// otherwise.
std::string format_rational(const Rational& value);

}  // namespace lpcoh
